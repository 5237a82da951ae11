"""Exact computations with modules over the type A preprojective algebra.

Maya modules (one-dimensional socle), their Hom spaces and the truncated
permutahedron identity, modules attached to semistandard tableaux, and the
classification of components by Hom signatures.
"""

from .errors import (
    InconsistentInput,
    InvalidInput,
    NotApplicable,
    PreprojError,
    TheoremViolation,
    Unclassifiable,
)
from .lattice import (
    RootVector,
    SubsetI,
    WeightData,
    connected_subsets,
    dominance_leq,
    kostant_partition,
    subset_diff,
    subset_from_dims,
    weight_multiplicity,
    weights_from,
)
from .linalg import RatMatrix, is_invertible, kernel_basis
from .maya import (
    MayaSubset,
    hom_basis_maya,
    hom_formula,
    identify_maya,
    max_intersection,
    maya_dims,
    maya_module,
    polytope_max,
    polytope_vertices,
    socle_dim_conditions,
)
from .modules import (
    GradedRep,
    Intertwiner,
    check_preprojective,
    hom_space_basis,
    in_rep_w,
    parse_module_file,
    random_basis_change,
    serialize_module,
    socle_dims,
)
from .tableaux import (
    Tableau,
    classify,
    classify_report,
    f_value,
    g_count,
    generic_scalars,
    signature,
    ssyt_enumerate,
    type_t_module,
)

__version__ = "0.1.0"
