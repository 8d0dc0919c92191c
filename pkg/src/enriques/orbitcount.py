"""Orbit counting for smooth rational curves from the root invariant.

The count is a weighted sum over orbits of connected components of the
embedded root data under the group generated by the Weyl transvections
and any extra generators supplied for the Vinberg group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .e10map import ComponentType, e10_lattice, e10_space, reduce_mod2
from .f2group import echelon, is_isometry, transvection, vkey
from .invariant import RootInvariant, validate_invariant
from .lattice import IntMatrix, Sublattice, saturate
from .rootsys import ADEType, ConfigType, shimada_type


@dataclass(frozen=True)
class VinbergGroupSpec:
    """Extra generators of the Vinberg group beyond the Weyl transvections."""

    extra_generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "extra_generators", tuple(self.extra_generators))


# Weight of one component orbit in the main count, by (family, rank, kernel).
WEIGHT_TABLE = {
    **{("A", n, 0): 1 for n in range(1, 10)},
    **{("D", n, 0): 1 for n in range(4, 9)},
    ("D", 9, 0): 2,
    ("E", 6, 0): 1,
    ("E", 7, 0): 2,
    ("E", 8, 0): 4,
    ("A", 7, 1): 1,
    ("D", 8, 1): 2,
}


def component_weight(t: ComponentType) -> int:
    key = (t.ade.family, t.ade.rank, t.kernel)
    if key not in WEIGHT_TABLE:
        raise ValueError(f"no orbit weight for component type {t}")
    return WEIGHT_TABLE[key]


def weyl_generators(delta_bar, space=None):
    """One symplectic transvection per vertex of the reduced root set."""
    sp = space if space is not None else e10_space()
    vs = sorted(delta_bar, key=lambda v: vkey(v, sp.dim))
    return [transvection(sp, v) for v in vs]


def component_orbit_partition(inv: RootInvariant, spec: VinbergGroupSpec):
    """Partition of component indices under the Vinberg group.

    Weyl transvections fix every component setwise, so only the extra
    generators can merge components; they must preserve q and the full
    vertex set.
    """
    ncomp = len(inv.components)
    if not spec.extra_generators:
        return [[i] for i in range(ncomp)]
    if not inv.has_sigmas():
        raise ValueError("extra generators require embedded components")
    sp = e10_space()
    sigmas = [sigma for _, sigma in inv.components]
    all_verts = set().union(*sigmas) if sigmas else set()
    parent = list(range(ncomp))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in spec.extra_generators:
        if not is_isometry(sp, g):
            raise ValueError("not a Vinberg generator: does not preserve q")
        image = {g.apply(v) for v in all_verts}
        if image != all_verts:
            raise ValueError("not a Vinberg generator: does not preserve the root set")
        for i, sigma in enumerate(sigmas):
            im = frozenset(g.apply(v) for v in sigma)
            j = next((k for k, s in enumerate(sigmas) if s == im), None)
            if j is None:
                raise ValueError("generator scrambles the component structure")
            if inv.components[i][0] != inv.components[j][0]:
                raise ValueError("generator merges components of different type")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(ncomp):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


@dataclass(frozen=True)
class OrbitCountResult:
    component_orbits: tuple
    per_orbit_weight: tuple
    total: int


def count_curve_orbits(inv: RootInvariant, spec: VinbergGroupSpec = VinbergGroupSpec()) -> OrbitCountResult:
    """Number of curve orbits: sum of weights over component orbits."""
    violations = validate_invariant(inv)
    if violations:
        raise ValueError("invalid invariant: " + "; ".join(violations))
    partition = component_orbit_partition(inv, spec)
    weights = tuple(component_weight(inv.components[orbit[0]][0]) for orbit in partition)
    return OrbitCountResult(
        component_orbits=tuple(tuple(o) for o in partition),
        per_orbit_weight=weights,
        total=sum(weights),
    )


def _cfg(inner: str, closure: str) -> ConfigType:
    return ConfigType((ADEType.parse(inner),), (ADEType.parse(closure),))


def maximal_config_types(t: ComponentType):
    """Possible types of maximal configurations inside a component."""
    fam, n, k = t.ade.family, t.ade.rank, t.kernel
    if k == 1:
        if (fam, n) == ("A", 7):
            return frozenset({_cfg("A7", "E7")})
        if (fam, n) == ("D", 8):
            return frozenset({_cfg("A7", "E7"), _cfg("D8", "E8")})
        raise ValueError(f"invalid component type {t}")
    if fam == "A" and 1 <= n <= 7:
        return frozenset({_cfg(f"A{n}", f"A{n}")})
    if fam == "D" and 4 <= n <= 8:
        return frozenset({_cfg(f"D{n}", f"D{n}")})
    if (fam, n) == ("E", 6):
        return frozenset({_cfg("E6", "E6")})
    if (fam, n) == ("A", 8):
        return frozenset({_cfg("A8", "A8"), _cfg("A8", "E8")})
    if (fam, n) == ("E", 7):
        return frozenset({_cfg("A7", "E7"), _cfg("E7", "E7")})
    if (fam, n) == ("E", 8):
        return frozenset(
            {
                _cfg("A8", "E8"),
                _cfg("D8", "E8"),
                _cfg("E8", "E8"),
                _cfg("A8", "A8"),
                _cfg("A7", "E7"),
            }
        )
    if (fam, n) == ("A", 9):
        return frozenset({_cfg("A9", "A9"), _cfg("A8", "E8")})
    if (fam, n) == ("D", 9):
        return frozenset({_cfg("D9", "D9"), _cfg("A8", "E8")})
    raise ValueError(f"invalid component type {t}")


_ORBIT_BOUNDS = {
    (("A", 7, 1), ("A7", "E7")): 5,
    (("E", 7, 0), ("A7", "E7")): 6,
    (("D", 8, 1), ("D8", "E8")): 4,
    (("D", 8, 1), ("A7", "E7")): 2,
    (("E", 8, 0), ("D8", "E8")): 3,
    (("E", 8, 0), ("A7", "E7")): 1,
}


def max_config_orbit_bound(t: ComponentType, c: ConfigType) -> int:
    """Upper bound on curve-orbit count of maximal configurations of type c."""
    if c not in maximal_config_types(t):
        raise ValueError(f"configuration {c} is not maximal in a component of type {t}")
    key = (
        (t.ade.family, t.ade.rank, t.kernel),
        (str(c.inner[0]), str(c.closure[0])),
    )
    return _ORBIT_BOUNDS.get(key, 1)


def same_congruence_orbit(b1, b2) -> str:
    """Congruence-subgroup orbit test for two root configurations in E10.

    Returns "yes"/"no" when decidable, "undetermined" in the excluded A9
    case: equivalence holds iff both configurations have the same type,
    equal vertex sets mod 2, and equal reduced primitive closures.
    """
    from .rootsys import gram_of_vectors, recognize_ade

    amb = e10_lattice()
    b1 = [tuple(v) for v in b1]
    b2 = [tuple(v) for v in b2]
    recognize_ade(gram_of_vectors(amb, b1))
    recognize_ade(gram_of_vectors(amb, b2))
    s1 = Sublattice(amb, IntMatrix([list(v) for v in b1]))
    s2 = Sublattice(amb, IntMatrix([list(v) for v in b2]))
    t1 = shimada_type(s1)
    t2 = shimada_type(s2)
    bbar1 = {reduce_mod2(v) for v in b1}
    bbar2 = {reduce_mod2(v) for v in b2}
    clos1 = echelon([reduce_mod2(v) for v in saturate(s1).basis.data])
    clos2 = echelon([reduce_mod2(v) for v in saturate(s2).basis.data])
    if t1 != t2 or bbar1 != bbar2 or clos1 != clos2:
        return "no"
    if t1.inner == (ADEType("A", 9),):
        return "undetermined"
    return "yes"


def solve_binary_quadratic(c: int):
    """Integer solutions of 2x^2 + 6xy = c, ordered by decreasing |x|."""
    if c == 0:
        raise ValueError("infinite solution set")
    if c % 2:
        return ()
    half = abs(c) // 2
    sols = []
    for d in range(1, half + 1):
        if half % d:
            continue
        for x in (d, -d):
            num = c - 2 * x * x
            if num % (6 * x) == 0:
                sols.append((x, num // (6 * x)))
    sols.sort(key=lambda p: (-abs(p[0]), 0 if p[0] < 0 else 1))
    return tuple(sols)
