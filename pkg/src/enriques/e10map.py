"""The E10 lattice, reduction mod 2, and the graph on reduced root sets.

E10 is the even unimodular hyperbolic lattice of the 10-node diagram
(chain e1..e9 with e10 attached at e7), in the norm -2 convention.
Reduction identifies (1/2)E10 / E10 with E10 x F2, carrying the quadratic
form q(x) = x^2/2 mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .f2group import NormalFormF2, QuadSpaceF2, echelon, normal_form, span_dim, vkey
from .lattice import (
    IntMatrix,
    Lattice,
    Sublattice,
    enumerate_norm_vectors,
    orthogonal_complement,
    row_basis,
    saturate,
    span,
)
from .rootsys import ADEType, NotADEError, gram_of_vectors, recognize_ade, root_sublattice, type_of_root_lattice

_E10_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (6, 9))


@lru_cache(maxsize=None)
def e10_lattice() -> Lattice:
    g = [[0] * 10 for _ in range(10)]
    for i in range(10):
        g[i][i] = -2
    for i, j in _E10_EDGES:
        g[i][j] = g[j][i] = 1
    return Lattice(IntMatrix(g))


@lru_cache(maxsize=None)
def e10_space() -> QuadSpaceF2:
    """E10 x F2 with q(x) = x^2/2 and the intersection form mod 2."""
    rows = [0] * 10
    for i, j in _E10_EDGES:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return QuadSpaceF2(10, tuple(rows), (1 << 10) - 1)


def reduce_mod2(x) -> int:
    """Image of an integral E10 vector in E10 x F2, as a bit mask."""
    return sum((int(c) & 1) << i for i, c in enumerate(x))


def lift_mask(m: int):
    return tuple((m >> i) & 1 for i in range(10))


@dataclass(frozen=True)
class ComponentType:
    ade: ADEType
    kernel: int

    def __post_init__(self):
        if self.kernel not in (0, 1):
            raise ValueError("kernel must be 0 or 1")

    def __str__(self):
        return f"({self.ade}, {'Z/2' if self.kernel else '0'})"


@dataclass(frozen=True)
class DeltaBarGraph:
    """Vertices in E10 x F2 with q = 1; edges join pairs with b = 1."""

    vertices: frozenset

    def edges(self):
        sp = e10_space()
        vs = sorted(self.vertices, key=lambda v: vkey(v, 10))
        return frozenset(
            (a, b) for i, a in enumerate(vs) for b in vs[i + 1 :] if sp.b(a, b) == 1
        )


class InvalidComponentError(ValueError):
    pass


def delta_bar_components(roots):
    """Connected components of the reduced root graph, with their types.

    Input is a full set of norm -2 vectors of E10 (a root set Delta(R));
    each component comes back as (vertex set, ComponentType) where the type
    is recovered from the graph and cross-checked against the lifted span.
    """
    amb = e10_lattice()
    sp = e10_space()
    roots = [tuple(int(c) for c in r) for r in roots]
    for r in roots:
        if amb.norm(r) != -2:
            raise ValueError(f"not a root: {r}")
    verts = {}
    for r in roots:
        verts.setdefault(reduce_mod2(r), []).append(r)
    for m in verts:
        if sp.q(m) != 1:
            raise InvalidComponentError("reduced root with q = 0")
    vlist = sorted(verts, key=lambda v: vkey(v, 10))
    parent = {v: v for v in vlist}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(vlist):
        for b in vlist[i + 1 :]:
            if sp.b(a, b):
                parent[find(a)] = find(b)
    comps = {}
    for v in vlist:
        comps.setdefault(find(v), []).append(v)
    out = []
    for comp in sorted(comps.values(), key=lambda c: vkey(min(c, key=lambda v: vkey(v, 10)), 10)):
        lifts = []
        for v in comp:
            lifts.extend(verts[v])
        sub = span(amb, lifts)
        restricted = sub.restricted_lattice()
        try:
            rsub, fundamental = root_sublattice(restricted)
            types = recognize_ade(gram_of_vectors(restricted, fundamental))
        except (ValueError, NotADEError) as exc:
            raise InvalidComponentError(f"invalid component: {exc}") from exc
        if len(types) != 1 or rsub.rank != restricted.rank:
            raise InvalidComponentError("invalid component: not an irreducible root span")
        npos = len(enumerate_norm_vectors(restricted, -2)) // 2
        if npos != len(comp):
            raise InvalidComponentError(
                "invalid component: graph is not a full positive root system"
            )
        rank = restricted.rank
        kernel = rank - span_dim(comp)
        if kernel not in (0, 1):
            raise InvalidComponentError("invalid component: kernel dimension out of range")
        t = types[0]
        if kernel == 1 and (t.family, t.rank) not in (("A", 7), ("D", 8)):
            raise InvalidComponentError("invalid component: kernel 1 only for A7/D8")
        out.append((frozenset(comp), ComponentType(t, kernel)))
    return out


# Frozen embeddings realizing each Table-1 row inside E10 (basis e1..e10).
_E = tuple(tuple(1 if j == i else 0 for j in range(10)) for i in range(10))
_E11 = (0, 0, 0, -1, -2, -3, -4, -3, -2, -2)
_D1 = (0, 0, -2, -3, -4, -5, -6, -4, -2, -3)

TABLE_EMBEDDINGS = {
    **{f"A{n}": tuple(_E[:n]) for n in range(1, 10)},
    **{
        f"D{n}": (_E[9], _E[7]) + tuple(_E[6 - i] for i in range(n - 2))
        for n in range(4, 10)
    },
    "E6": tuple(_E[4:9]) + (_E[9],),
    "E7": tuple(_E[3:9]) + (_E[9],),
    "E8": tuple(_E[2:9]) + (_E[9],),
    "A7'": (_E[3], _E[4], _E[5], _E[6], _E[7], _E[8], _E11),
    "A8'": (_D1, _E[2], _E[3], _E[4], _E[5], _E[6], _E[7], _E[8]),
    "D8'": (_D1, _E[2], _E[3], _E[4], _E[5], _E[6], _E[7], _E[9]),
}

# Paper's Table 1: (R, R', normal form of the reduced span).
EXPECTED_TABLE = (
    ("A1", "A1", NormalFormF2(0, 0, 1, 0)),
    ("A2", "A2", NormalFormF2(0, 1, 0, 0)),
    ("A3", "A3", NormalFormF2(0, 1, 0, 1)),
    ("A4", "A4", NormalFormF2(1, 1, 0, 0)),
    ("A5", "A5", NormalFormF2(2, 0, 1, 0)),
    ("A6", "A6", NormalFormF2(3, 0, 0, 0)),
    ("A7", "A7", NormalFormF2(3, 0, 0, 1)),
    ("A8", "A8", NormalFormF2(4, 0, 0, 0)),
    ("A9", "A9", NormalFormF2(4, 0, 1, 0)),
    ("D4", "D4", NormalFormF2(0, 1, 0, 2)),
    ("D5", "D5", NormalFormF2(1, 1, 0, 1)),
    # D6 differs from the printed table: the doubled half-spinor class has
    # q = -3 = 1, so rad(q) is 1-dimensional and the form is U2^2+[1]+[0].
    ("D6", "D6", NormalFormF2(2, 0, 1, 1)),
    ("D7", "D7", NormalFormF2(3, 0, 0, 1)),
    ("D8", "D8", NormalFormF2(3, 0, 0, 2)),
    ("D9", "D9", NormalFormF2(4, 0, 0, 1)),
    ("E6", "E6", NormalFormF2(2, 1, 0, 0)),
    ("E7", "E7", NormalFormF2(3, 0, 1, 0)),
    ("E8", "E8", NormalFormF2(4, 0, 0, 0)),
    ("A7", "E7", NormalFormF2(3, 0, 0, 0)),
    ("A8", "E8", NormalFormF2(4, 0, 0, 0)),
    ("D8", "E8", NormalFormF2(3, 0, 0, 1)),
    ("E10", "E10", NormalFormF2(5, 0, 0, 0)),
)

_ROW_KEYS = tuple(f"A{n}" for n in range(1, 10)) + tuple(
    f"D{n}" for n in range(4, 10)
) + ("E6", "E7", "E8", "A7'", "A8'", "D8'", "E10")


def _label(types) -> str:
    return "+".join(str(t) for t in types)


def table_root_mod2():
    """Regenerate Table 1: (type of R, type of R', normal form of R-bar).

    Every row is recomputed from its frozen embedding; nothing is copied
    from the expected table, so a mismatch there signals a real bug.
    """
    amb = e10_lattice()
    sp = e10_space()
    rows = []
    for key in _ROW_KEYS:
        if key == "E10":
            rows.append(("E10", "E10", normal_form(sp)))
            continue
        vectors = TABLE_EMBEDDINGS[key]
        sub = span(amb, vectors)
        inner = type_of_root_lattice(sub.restricted_lattice())
        closure = type_of_root_lattice(saturate(sub).restricted_lattice())
        reduced = echelon([reduce_mod2(v) for v in sub.basis.data])
        nf = normal_form(sp.restrict(reduced)) if reduced else NormalFormF2(0, 0, 0, 0)
        rows.append((_label(inner), _label(closure), nf))
    return rows


def canonical_embedding(t: ComponentType):
    """Frozen E10 root basis realizing a component type."""
    if t.kernel == 1:
        key = {"A": "A7'", "D": "D8'"}.get(t.ade.family)
        if key is None or (t.ade.family, t.ade.rank) not in (("A", 7), ("D", 8)):
            raise ValueError(f"no canonical embedding for {t}")
    else:
        key = str(t.ade)
        if key not in TABLE_EMBEDDINGS:
            raise ValueError(f"no canonical embedding for {t}")
    return TABLE_EMBEDDINGS[key]


_POSITIVE_PROBE = (1, 3, 4, 6, 8, 10, 12, 8, 4, 6)  # fixed vector of norm 2


def isotropic_in_complement(s: Sublattice):
    """A deterministic primitive isotropic vector in the complement of s.

    Works by splitting off a positive vector h in s-perp and enumerating the
    definite part for vectors x with (j h + x)^2 = 0, increasing j until a
    representation exists.
    """
    comp = orthogonal_complement(s)
    k_lat = comp.restricted_lattice()
    if k_lat.rank < 2:
        raise ValueError("complement has no isotropic vectors")
    # project the fixed positive probe into the complement
    amb = s.ambient
    proj = _project_into(comp, _POSITIVE_PROBE, s)
    h = proj
    a2 = k_lat.norm(h)
    if a2 <= 0:
        raise RuntimeError("positive projection failed")
    h_sub = Sublattice(k_lat, row_basis([h], k_lat.rank))
    n_sub = orthogonal_complement(h_sub)
    n_lat = n_sub.restricted_lattice()
    for j in range(1, 64):
        target = -a2 * j * j
        found = []
        for x in enumerate_norm_vectors(n_lat, int(target)):
            xk = n_sub.to_ambient(x)
            y = tuple(j * hh + xx for hh, xx in zip(h, xk))
            ye10 = comp.to_ambient(y)
            g = 0
            for c in ye10:
                g = _gcd(g, abs(c))
            ye10 = tuple(c // g for c in ye10)
            first = next(c for c in ye10 if c)
            if first < 0:
                ye10 = tuple(-c for c in ye10)
            found.append(ye10)
        if found:
            return min(found)
    raise RuntimeError("no isotropic vector found in complement")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _project_into(comp: Sublattice, probe, s: Sublattice):
    """Orthogonal projection of `probe` onto the complement, in its basis."""
    from fractions import Fraction

    amb = comp.ambient
    # probe = c * s.basis + h with h in comp x Q; solve for c rationally
    b = s.basis
    gram = b * amb.gram * b.transpose()
    rhs = [amb.inner(probe, row) / amb.scale for row in b.data]
    m = gram.rows
    aug = [[Fraction(gram[i, j]) for j in range(m)] + [Fraction(rhs[i])] for i in range(m)]
    for col in range(m):
        piv = next(i for i in range(col, m) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    coeffs = [aug[i][m] for i in range(m)]
    h = [Fraction(p) for p in probe]
    for c, row in zip(coeffs, b.data):
        for i, x in enumerate(row):
            h[i] -= c * x
    den = 1
    for x in h:
        den = den * x.denominator // _gcd(den, x.denominator)
    hint = tuple(int(x * den) for x in h)
    g = 0
    for c in hint:
        g = _gcd(g, abs(c))
    if g == 0:
        raise RuntimeError("probe lies in the sublattice span")
    hint = tuple(c // g for c in hint)
    # express in complement coordinates
    from .lattice import _solve_row

    sol = _solve_row(hint, comp.basis.data)
    if sol is None:
        raise RuntimeError("projection is not in the complement lattice")
    return sol
