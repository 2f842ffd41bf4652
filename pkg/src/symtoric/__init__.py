"""Exact toric combinatorics and Milnor-fiber invariants of S^2_n.

S^2_n is the variety of symmetric n x n matrices of rank at most one, an
n-dimensional affine toric variety in C^{n(n+1)/2}.
"""

from .cone import Face, FaceFamily, all_faces, face_lattice_basis, face_normal_form, faces, rays, supporting_form
from .euler import (
    ChiReport,
    bernstein_identity_check,
    chi_affine_space,
    chi_closed_form,
    chi_face_sum,
    chi_linear,
    chi_product_form,
    compute_report,
    euler_obstruction,
    euler_obstruction_f,
    euler_obstruction_f_via_milnor,
    milnor_number_brieskorn,
)
from .errors import (
    DimensionError,
    DomainError,
    InternalError,
    InvalidBasis,
    LatticeError,
    NotInLattice,
    NotInSpan,
    ResourceError,
    SymtoricError,
)
from .lattice import det, express_in_basis, rank
from .newton import DegreeVector, FunctionSupport, compact_face, newton_membership, validate_support
from .semigroup import (
    ambient_and_dimension,
    build_generators,
    check_minor_relations,
    minimality_check,
    saturation_check,
)
from .volume import closed_form_volume, normalized_volume

__version__ = "0.1.0"
