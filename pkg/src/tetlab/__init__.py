"""Exact arithmetic on lattice tetrahedra: standard forms, equivalence,
interior-point counting, the 1-point classification and lattice width."""

from .classification import (
    classify,
    enumerate_ripe,
    is_empty,
    is_ripe,
    lambda_table,
    one_point_catalog,
)
from .equivalence import are_equivalent, candidate_pairs, canonical_pair, triple_families
from .errors import (
    CatalogViolation,
    DegenerateTetrahedron,
    IntegerOverflowError,
    InternalInconsistency,
    NoCleanFace,
    NotALatticePoint,
    NotClean,
    NotInvertible,
    PreconditionError,
    TetlabError,
)
from .exact import frac_part, gcd, mod_inverse
from .lattice import (
    BarycentricCoords,
    Direction,
    LatticePoint,
    LatticeTetrahedron,
    StandardTet,
    UnimodularMap,
    apply_map,
    barycentric_of,
    classify_point,
    normalized_volume,
    point_from_barycentric,
)
from .normalization import euclidean_shear, to_standard, tweak
from .pointcount import (
    a_t,
    bc_table,
    census,
    construct_from_bc,
    interior_count_formula,
    interior_points_formula,
    is_clean_standard,
    nogen_check,
    pairwise_sum_empty_test,
)
from .width import lattice_width, plane_occupancy, u_width

__version__ = "0.1.0"
