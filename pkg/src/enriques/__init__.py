"""Orbit counts of smooth rational curves on Enriques surfaces.

Exact-arithmetic building blocks (integral lattices, ADE root systems,
quadratic spaces over F2) feeding the orbit-count formula driven by the
Nikulin root invariant and the Vinberg group.
"""

from .e10map import ComponentType, e10_lattice, e10_space, reduce_mod2, table_root_mod2
from .f2group import NormalFormF2, QuadSpaceF2, normal_form, orthogonal_group
from .invariant import (
    GluedK3Input,
    GluePair,
    RootInvariant,
    build_canonical_invariant,
    nikulin_root_invariant,
    validate_invariant,
)
from .lattice import IntMatrix, Lattice, Sublattice, smith_normal_form
from .orbitcount import (
    OrbitCountResult,
    VinbergGroupSpec,
    count_curve_orbits,
    solve_binary_quadratic,
)
from .rootsys import ADEType, ConfigType, recognize_ade, root_datum, shimada_type

__all__ = [
    "ADEType",
    "ComponentType",
    "ConfigType",
    "GluePair",
    "GluedK3Input",
    "IntMatrix",
    "Lattice",
    "NormalFormF2",
    "OrbitCountResult",
    "QuadSpaceF2",
    "RootInvariant",
    "Sublattice",
    "VinbergGroupSpec",
    "build_canonical_invariant",
    "count_curve_orbits",
    "e10_lattice",
    "e10_space",
    "nikulin_root_invariant",
    "normal_form",
    "orthogonal_group",
    "recognize_ade",
    "reduce_mod2",
    "root_datum",
    "shimada_type",
    "smith_normal_form",
    "solve_binary_quadratic",
    "table_root_mod2",
    "validate_invariant",
]
