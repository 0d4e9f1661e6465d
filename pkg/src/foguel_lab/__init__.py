"""foguel-lab: finite-section experiments with shift-coupled block operators.

The package builds truncations of the operator-theoretic objects that
appear around power-bounded-but-not-similar examples — Hankel sections,
derivation commutators, matrices with anticommuting generator entries,
2x2 Foguel-type blocks — and checks the identities and norm bounds that
the infinite-dimensional theory predicts, always through at least two
independent computational routes.
"""

from .car import (
    CarAlgebra,
    RowColBounds,
    build_car,
    car_check,
    car_hankel,
    car_hankel_oracles,
    car_pattern_matrix,
    commutator_pattern,
    hankel_pattern,
    rc_bounds,
)
from .errors import (
    InvalidDimensionError,
    InvalidLengthError,
    InvalidModesError,
    InvalidOffsetError,
    InvalidPatternError,
    InvalidWindowError,
    SizeCapExceededError,
    ValidationError,
)
from .foguel import (
    FoguelBlock,
    IntertwinerResult,
    SimilarityReport,
    VonNeumannReport,
    antidiag_partial_sum,
    antidiag_shift_form,
    assemble_foguel,
    circle_sup,
    intertwiner_partial,
    poly_eval_matrix,
    power_norm_sequence,
    power_offdiag,
    similarity_check,
    von_neumann_probe,
)
from .hankel import (
    HankelSpec,
    antisym_part,
    derivation_matrix,
    derivation_product,
    derivative_weight,
    hankel_defect,
    make_hankel,
    make_weighted_hankel,
    number_matrix,
    sylvester_residual,
    unit_weight,
)
from .linalg import (
    DENSE_SIZE_CAP,
    NormEstimate,
    add,
    adjoint,
    as_matrix,
    block2x2,
    compress,
    eye,
    kron,
    make_shift,
    matmul,
    matvec_oracles,
    op_norm_dense,
    op_norm_power,
    scale,
    transpose,
    zeros,
)
from .schur import (
    MatrixDiffReport,
    MultiplierProbe,
    MultiplierSpec,
    bennett_criterion,
    iterated_limits,
    make_multiplier,
    multiplier_lower_bound,
    schur_product,
)
from .sequences import (
    BennettReport,
    WeightSequence,
    bennett_sums,
    diff1,
    diff2,
    gen_weights,
    proof_chain_bound,
    proof_chain_terms,
    tail_weight_sup,
    weighted_sum,
)
from .summation import KahanSum, exact_sum

__version__ = "0.1.0"

__all__ = [
    "BennettReport",
    "CarAlgebra",
    "DENSE_SIZE_CAP",
    "FoguelBlock",
    "HankelSpec",
    "IntertwinerResult",
    "InvalidDimensionError",
    "InvalidLengthError",
    "InvalidModesError",
    "InvalidOffsetError",
    "InvalidPatternError",
    "InvalidWindowError",
    "KahanSum",
    "MatrixDiffReport",
    "MultiplierProbe",
    "MultiplierSpec",
    "NormEstimate",
    "RowColBounds",
    "SimilarityReport",
    "SizeCapExceededError",
    "ValidationError",
    "VonNeumannReport",
    "WeightSequence",
    "add",
    "adjoint",
    "antidiag_partial_sum",
    "antidiag_shift_form",
    "antisym_part",
    "as_matrix",
    "assemble_foguel",
    "bennett_criterion",
    "bennett_sums",
    "block2x2",
    "build_car",
    "car_check",
    "car_hankel",
    "car_hankel_oracles",
    "car_pattern_matrix",
    "circle_sup",
    "commutator_pattern",
    "compress",
    "derivation_matrix",
    "derivation_product",
    "derivative_weight",
    "diff1",
    "diff2",
    "exact_sum",
    "eye",
    "gen_weights",
    "hankel_defect",
    "hankel_pattern",
    "intertwiner_partial",
    "iterated_limits",
    "kron",
    "make_hankel",
    "make_multiplier",
    "make_shift",
    "make_weighted_hankel",
    "matmul",
    "matvec_oracles",
    "multiplier_lower_bound",
    "number_matrix",
    "op_norm_dense",
    "op_norm_power",
    "poly_eval_matrix",
    "power_norm_sequence",
    "power_offdiag",
    "proof_chain_bound",
    "proof_chain_terms",
    "rc_bounds",
    "scale",
    "schur_product",
    "similarity_check",
    "sylvester_residual",
    "tail_weight_sup",
    "transpose",
    "unit_weight",
    "von_neumann_probe",
    "weighted_sum",
    "zeros",
]
