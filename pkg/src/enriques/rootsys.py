"""ADE root system data and recognition.

Simple roots are numbered along the chain, with the branch node last for
D and E types, so coordinate vectors from the usual extended-diagram
pictures can be used verbatim.  Root lattices are carried in the negative
definite convention (roots have norm -2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .lattice import IntMatrix, Lattice, Sublattice, enumerate_norm_vectors, row_basis, saturate


@dataclass(frozen=True, order=True)
class ADEType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise ValueError("A_n requires rank >= 1")
        if self.family == "D" and self.rank < 4:
            raise ValueError("D_n requires rank >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError("E_n requires rank in {6, 7, 8}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, label: str) -> "ADEType":
        label = label.strip()
        if not label or label[0] not in "ADE":
            raise ValueError(f"cannot parse ADE type {label!r}")
        return cls(label[0], int(label[1:]))

    @property
    def num_positive_roots(self):
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "D":
            return n * (n - 1)
        return {6: 36, 7: 63, 8: 120}[n]


def _adjacency(t: ADEType):
    """Edge list of the Coxeter-Dynkin diagram in our node order."""
    n = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        # two short arms at node 2, then a chain
        return [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    branch_at = {6: 2, 7: 2, 8: 4}[n]
    return [(i, i + 1) for i in range(n - 2)] + [(branch_at, n - 1)]


_HIGHEST = {
    ("E", 6): (1, 2, 3, 2, 1, 2),
    ("E", 7): (2, 3, 4, 3, 2, 1, 2),
    ("E", 8): (2, 3, 4, 5, 6, 4, 2, 3),
}


@dataclass(frozen=True)
class RootDatum:
    type: ADEType
    cartan: IntMatrix
    highest_root: tuple
    extended_multiplicities: tuple
    discriminant: tuple

    def extended_cartan(self) -> IntMatrix:
        """Gram of (simple roots, minus highest root), positive convention."""
        n = self.type.rank
        c = self.cartan
        hr = self.highest_root
        ext = [[c[i, j] for j in range(n)] + [0] for i in range(n)] + [[0] * (n + 1)]
        for j in range(n):
            val = -sum(hr[i] * c[i, j] for i in range(n))
            ext[n][j] = val
            ext[j][n] = val
        ext[n][n] = 2
        return IntMatrix(ext)


@lru_cache(maxsize=None)
def root_datum(t: ADEType) -> RootDatum:
    n = t.rank
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _adjacency(t):
        cartan[i][j] = cartan[j][i] = -1
    if t.family == "A":
        highest = (1,) * n
    elif t.family == "D":
        highest = (1, 1) + (2,) * (n - 3) + (1,)
    else:
        highest = _HIGHEST[("E", n)]
    if t.family == "A":
        disc = (n + 1,)
    elif t.family == "D":
        disc = (2, 2) if n % 2 == 0 else (4,)
    else:
        disc = {6: (3,), 7: (2,), 8: ()}[n]
    return RootDatum(
        type=t,
        cartan=IntMatrix(cartan),
        highest_root=highest,
        extended_multiplicities=highest + (1,),
        discriminant=disc,
    )


def negated_gram(t: ADEType) -> IntMatrix:
    """Gram matrix of the root lattice in the norm -2 convention."""
    return -root_datum(t).cartan


class NotADEError(ValueError):
    pass


def recognize_ade(gram: IntMatrix):
    """Multiset of irreducible ADE types of a fundamental-system Gram matrix.

    The input must be the Gram of (-2)-vectors with pairwise products 0 or 1;
    anything else (cycles, higher bonds, affine shapes) raises NotADEError.
    """
    n = gram.rows
    if n != gram.cols or not gram.is_symmetric():
        raise NotADEError("not an ADE configuration: gram must be symmetric square")
    for i in range(n):
        if gram[i, i] != -2:
            raise NotADEError("not an ADE configuration: diagonal must be -2")
        for j in range(i):
            if gram[i, j] not in (0, 1):
                raise NotADEError("not an ADE configuration: off-diagonal products must be 0 or 1")
    adj = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i):
            if gram[i, j] == 1:
                adj[i].append(j)
                adj[j].append(i)
    seen = set()
    types = []
    for start in range(n):
        if start in seen:
            continue
        comp = _component(adj, start)
        seen.update(comp)
        types.append(_classify_component(adj, comp))
    return tuple(sorted(types))


def _component(adj, start):
    comp = [start]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                comp.append(y)
                stack.append(y)
    return comp


def _classify_component(adj, comp):
    m = len(comp)
    edges = sum(len(adj[x]) for x in comp) // 2
    if edges != m - 1:
        raise NotADEError("not an ADE configuration: component contains a cycle")
    degrees = sorted(len(adj[x]) for x in comp)
    if degrees and degrees[-1] > 3:
        raise NotADEError("not an ADE configuration: vertex of degree > 3")
    branch = [x for x in comp if len(adj[x]) == 3]
    if len(branch) > 1:
        raise NotADEError("not an ADE configuration: more than one branch vertex")
    if not branch:
        return ADEType("A", m)
    center = branch[0]
    arms = sorted(_arm_length(adj, center, first) for first in adj[center])
    if arms[0] == arms[1] == 1:
        return ADEType("D", m)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ADEType("E", m)
    raise NotADEError("not an ADE configuration: invalid arm lengths %s" % (arms,))


def _arm_length(adj, center, first):
    length = 1
    prev, cur = center, first
    while True:
        nxt = [y for y in adj[cur] if y != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            raise NotADEError("not an ADE configuration: branch on an arm")
        prev, cur = cur, nxt[0]
        length += 1


def _positive(v):
    phi = sum(x << i for i, x in enumerate(v))
    return phi > 0 or (phi == 0 and v > tuple([0] * len(v)))


def root_sublattice(l: Lattice):
    """Sublattice spanned by all norm -2 vectors, plus a fundamental system.

    Positivity of roots is decided by the fixed functional (1, 2, 4, ...),
    with lexicographic comparison as the tie break, so the fundamental
    system is deterministic.
    """
    roots = enumerate_norm_vectors(l, -2)
    sub = Sublattice(l, row_basis(roots, l.rank))
    positive = [v for v in roots if _positive(v)]
    posset = set(positive)
    sums = set()
    for a, b in combinations(positive, 2):
        s = tuple(x + y for x, y in zip(a, b))
        if s in posset:
            sums.add(s)
    fundamental = sorted(v for v in positive if v not in sums)
    return sub, fundamental


def gram_of_vectors(l: Lattice, vectors) -> IntMatrix:
    """Integer Gram matrix of the given vectors under the scaled form."""
    vals = [[l.inner(a, b) for b in vectors] for a in vectors]
    if any(x.denominator != 1 for row in vals for x in row):
        raise ValueError("vectors have non-integral pairings")
    return IntMatrix([[int(x) for x in row] for row in vals])


def type_of_root_lattice(l: Lattice):
    """ADE multiset of a negative definite lattice spanned by its roots."""
    sub, fundamental = root_sublattice(l)
    if sub.rank != l.rank:
        raise NotADEError("not an ADE configuration: lattice is not spanned by roots")
    return recognize_ade(gram_of_vectors(l, fundamental))


@dataclass(frozen=True)
class ConfigType:
    """Shimada's classifying pair (type of R, type of its primitive closure)."""

    inner: tuple
    closure: tuple

    def __post_init__(self):
        if sum(t.rank for t in self.inner) != sum(t.rank for t in self.closure):
            raise ValueError("inner and closure must have equal rank")

    def __str__(self):
        fmt = lambda ts: "+".join(str(t) for t in ts)
        return f"({fmt(self.inner)}, {fmt(self.closure)})"


def shimada_type(s: Sublattice) -> ConfigType:
    """(tau(R), tau(R')) for a root sublattice R and its primitive closure R'."""
    inner = type_of_root_lattice(s.restricted_lattice())
    closure = type_of_root_lattice(saturate(s).restricted_lattice())
    return ConfigType(inner=inner, closure=closure)
