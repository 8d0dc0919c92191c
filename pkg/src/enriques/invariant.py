"""Nikulin root invariants from K3 covering data.

The anti-invariant lattice comes in as a Gram matrix, the glue of the
primitive extension as pairs (class in the dual of S_X-, vector of F2^10).
Splitting roots are the norm -4 vectors whose half lies in the glued
subgroup; pushing them through the glue gives the embedded root data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .e10map import ComponentType, canonical_embedding, e10_lattice, e10_space, reduce_mod2
from .f2group import (
    echelon,
    find_embedding,
    in_span,
    solve_xor_combination,
    span_dim,
    subspace_perp,
    vkey,
)
from .lattice import (
    IntMatrix,
    Lattice,
    Sublattice,
    enumerate_norm_vectors,
    overlattice_kernel_dim_mod2,
    saturate,
    span,
)
from .rootsys import ADEType, gram_of_vectors, recognize_ade, root_sublattice


class GlueError(ValueError):
    pass


@dataclass(frozen=True)
class GluePair:
    minus: tuple  # rational vector in S_X- coordinates
    plus: int  # mask in F2^10

    def __post_init__(self):
        object.__setattr__(self, "minus", tuple(Fraction(x) for x in self.minus))


@dataclass(frozen=True)
class GluedK3Input:
    gram_minus: IntMatrix
    glue: tuple

    def __post_init__(self):
        object.__setattr__(self, "glue", tuple(self.glue))


def _validated_lattice(inp: GluedK3Input) -> Lattice:
    from .lattice import signature

    lat = Lattice(inp.gram_minus)
    pos, neg = signature(lat)
    if pos > 0 or neg < lat.rank:
        raise ValueError("gram_minus must be negative definite")
    if lat.rank > 12:
        raise ValueError("gram_minus has rank > 12")
    if not lat.is_even():
        raise ValueError("gram_minus must be even")
    if enumerate_norm_vectors(lat, -2):
        raise ValueError("invalid anti-invariant lattice")
    sp = e10_space()
    cols = []
    for pair in inp.glue:
        m = pair.minus
        if len(m) != lat.rank:
            raise ValueError("glue class has wrong length")
        if pair.plus < 0 or pair.plus >= 1 << 10:
            raise ValueError("plus class outside F2^10")
        pairing = [sum(x * g for x, g in zip(m, col)) for col in zip(*lat.gram.data)]
        if any(p.denominator != 1 for p in pairing):
            raise GlueError("minus class is not in the dual lattice")
        doubled = [2 * x for x in m]
        if any(x.denominator != 1 for x in doubled):
            raise GlueError("glue class must have order dividing 2")
        qminus = sum(x * p for x, p in zip(m, pairing))
        if qminus.denominator != 1 or (int(qminus) - sp.q(pair.plus)) % 2 != 0:
            raise GlueError("glue pair breaks the quadratic forms")
        cols.append(sum((int(x) & 1) << i for i, x in enumerate(doubled)))
    # well-definedness: every F2 dependency among the minus classes must
    # also kill the corresponding plus classes
    from .f2group import kernel_of_rows

    if cols:
        for dep in kernel_of_rows(cols, len(cols)):
            img = 0
            for i in range(len(cols)):
                if (dep >> i) & 1:
                    img ^= inp.glue[i].plus
            if img:
                raise GlueError("glue inconsistent: dependent classes with distinct images")
    return lat


def _half_class_cols(inp: GluedK3Input):
    return [
        sum((int(2 * x) & 1) << i for i, x in enumerate(pair.minus))
        for pair in inp.glue
    ]


def splitting_root_lattice_from_k3(inp: GluedK3Input):
    """Roots of the splitting-root lattice R, with R in the half-scaled form.

    A norm -4 vector v of S_X- is a splitting root when v/2 lies in the
    dual and its class falls in the subgroup spanned by the glue classes.
    """
    lat = _validated_lattice(inp)
    cols = _half_class_cols(inp)
    roots = []
    for v in enumerate_norm_vectors(lat, -4):
        pair_row = [
            sum(v[j] * lat.gram[j, i] for j in range(lat.rank)) for i in range(lat.rank)
        ]
        if any(p % 2 for p in pair_row):
            continue
        vbar = sum((x & 1) << i for i, x in enumerate(v))
        if solve_xor_combination(cols, vbar) is None:
            continue
        roots.append(v)
    half = Lattice(inp.gram_minus, Fraction(1, 2))
    return span(half, roots), tuple(roots)


@dataclass(frozen=True)
class RootInvariant:
    """Connected components of the embedded root data, with ranks."""

    components: tuple  # (ComponentType, frozenset of F2^10 masks or None)
    total_rank: int

    @classmethod
    def from_types(cls, types):
        types = tuple(types)
        return cls(tuple((t, None) for t in types), sum(t.ade.rank for t in types))

    def types(self):
        return tuple(t for t, _ in self.components)

    def has_sigmas(self):
        return all(sigma is not None for _, sigma in self.components)


def nikulin_root_invariant(inp: GluedK3Input) -> RootInvariant:
    """Compute the embedded root invariant of glued K3 covering data."""
    rsub, roots = splitting_root_lattice_from_k3(inp)
    if not roots:
        return RootInvariant((), 0)
    cols = _half_class_cols(inp)
    pluses = [pair.plus for pair in inp.glue]
    sp = e10_space()
    half = rsub.ambient
    images = {}
    for v in roots:
        vbar = sum((x & 1) << i for i, x in enumerate(v))
        coeff = solve_xor_combination(cols, vbar)
        img = 0
        for i in range(len(cols)):
            if (coeff >> i) & 1:
                img ^= pluses[i]
        if sp.q(img) != 1:
            raise GlueError("glue inconsistent with quadratic forms")
        images.setdefault(img, []).append(v)
    for img, lifts in images.items():
        if len(lifts) != 2 or tuple(-x for x in lifts[0]) != tuple(lifts[1]):
            raise GlueError("glue inconsistent: roots collide in F2^10")
    # graph on image vertices
    vlist = sorted(images, key=lambda m: vkey(m, 10))
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
    groups = {}
    for v in vlist:
        groups.setdefault(find(v), []).append(v)
    comps = []
    for comp in sorted(groups.values(), key=lambda c: vkey(min(c, key=lambda v: vkey(v, 10)), 10)):
        lifts = []
        for v in comp:
            lifts.extend(images[v])
        csub = span(half, lifts)
        restricted = csub.restricted_lattice()
        rspan, fundamental = root_sublattice(restricted)
        types = recognize_ade(gram_of_vectors(restricted, fundamental))
        npos = len(enumerate_norm_vectors(restricted, -2)) // 2
        if len(types) != 1 or rspan.rank != restricted.rank or npos != len(comp):
            raise GlueError("glue inconsistent: component is not a root system image")
        # edge consistency of the graph morphism
        reps = {v: images[v][0] for v in comp}
        for i, a in enumerate(comp):
            for b in comp[i + 1 :]:
                prod = half.inner(reps[a], reps[b])
                if int(prod) % 2 != sp.b(a, b):
                    raise GlueError("glue inconsistent: graph edges disagree")
        rank = restricted.rank
        kernel = rank - span_dim(comp)
        closure = saturate(csub)
        kdim = overlattice_kernel_dim_mod2(csub, closure)
        if kdim != kernel:
            raise GlueError(
                f"kernel mismatch: span defect {kernel} vs closure kernel {kdim}"
            )
        comps.append((ComponentType(types[0], kernel), frozenset(comp)))
    return RootInvariant(tuple(comps), rsub.rank)


_CANONICAL_DEGREES = {}


def _degree_profile(sigma):
    sp = e10_space()
    vs = sorted(sigma, key=lambda v: vkey(v, 10))
    return tuple(sorted(sum(sp.b(a, b) for b in vs if b != a) for a in vs))


def _canonical_profile(t: ComponentType):
    key = (t.ade.family, t.ade.rank, t.kernel)
    if key not in _CANONICAL_DEGREES:
        sigma = _canonical_sigma(t)
        _CANONICAL_DEGREES[key] = (_degree_profile(sigma), span_dim(sigma))
    return _CANONICAL_DEGREES[key]


def _canonical_sigma(t: ComponentType):
    amb = e10_lattice()
    sub = span(amb, canonical_embedding(t))
    from .lattice import sublattice_norm_vectors

    return frozenset(reduce_mod2(r) for r in sublattice_norm_vectors(sub, -2))


def validate_invariant(inv: RootInvariant):
    """Rule violations of an invariant, as strings; empty means valid."""
    out = []
    sp = e10_space()
    if inv.total_rank > 12:
        out.append(f"total rank {inv.total_rank} exceeds 12")
    if inv.total_rank != sum(t.ade.rank for t, _ in inv.components):
        out.append("total rank does not match the component ranks")
    for idx, (t, sigma) in enumerate(inv.components):
        name = f"component {idx} ({t})"
        if t.ade.rank > 9:
            out.append(f"{name}: rank exceeds 9")
            continue
        if t.kernel == 1 and (t.ade.family, t.ade.rank) not in (("A", 7), ("D", 8)):
            out.append(f"{name}: kernel 1 only for A7/D8")
            continue
        if sigma is None:
            continue
        if any(sp.q(v) != 1 for v in sigma):
            out.append(f"{name}: sigma contains a q=0 vector")
            continue
        if len(sigma) != t.ade.num_positive_roots:
            out.append(f"{name}: sigma has wrong vertex count for {t.ade}")
            continue
        if span_dim(sigma) != t.ade.rank - t.kernel:
            out.append(f"{name}: sigma span dimension does not match rank - kernel")
            continue
        profile, _ = _canonical_profile(t)
        if _degree_profile(sigma) != profile:
            out.append(f"{name}: sigma graph does not match type {t.ade}")
    # embedded components must be disjoint and mutually orthogonal
    embedded = [(i, s) for i, (_, s) in enumerate(inv.components) if s is not None]
    for a in range(len(embedded)):
        for b in range(a + 1, len(embedded)):
            i, si = embedded[a]
            j, sj = embedded[b]
            if si & sj:
                out.append(f"components {i} and {j} share vertices")
            elif any(sp.b(x, y) for x in si for y in sj):
                out.append(f"components {i} and {j} are joined by an edge")
    return out


def build_canonical_invariant(types) -> RootInvariant:
    """Embedded representative built from the frozen table embeddings.

    Components are placed one at a time into the orthogonal complement of
    the spans already used, with a deterministic isometric embedding, so
    equal type lists give identical models.
    """
    sp = e10_space()
    placed = []
    used = []
    for t in types:
        sigma_hat = _canonical_sigma(t)
        vhat = echelon(sigma_hat)
        if not used:
            images = list(vhat)
        else:
            src = sp.restrict(vhat)
            target = subspace_perp(sp, used)
            images = find_embedding(src, sp, target=target, avoid=used)
            if images is None:
                raise ValueError(f"cannot realize component {t} orthogonally in F2^10")
        mapped = set()
        for v in sigma_hat:
            coeff = solve_xor_combination(vhat, v)
            img = 0
            for i in range(len(vhat)):
                if (coeff >> i) & 1:
                    img ^= images[i]
            mapped.add(img)
        placed.append((t, frozenset(mapped)))
        used = list(echelon(list(used) + list(images)))
    return RootInvariant(tuple(placed), sum(t.ade.rank for t in types))
