"""Three-qubit entanglement witnesses with full spanning properties.

A numpy library around one family of 8x8 block-positive witnesses W(s, t):
construction from a positive bilinear map, verification of block positivity
by see-saw search, the full zero set and its spanning under every partial
conjugation, the X-shaped PPT entangled states the family detects, and the
boundary separable states with full-rank partial transposes it pins down.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionMismatchError,
    InvalidCutError,
    InvalidParamsError,
    NonHermitianMapError,
    NonRealPairingError,
    NotHermitianError,
    OffVarietyError,
    OutOfRangeError,
    SpanWitnessError,
)
from .linalg import (
    HERMITICITY_ATOL,
    RANK_RTOL,
    PsdCheck,
    hermitian_eigenvalues,
    hermiticity_defect,
    is_psd,
    kron,
    matrix_rank_hermitian,
    numerical_rank,
    trace_pairing,
)
from .tensor import (
    THREE_QUBITS,
    InteriorReport,
    PptReport,
    ProductVector,
    State,
    TensorShape,
    all_subsets,
    flatten,
    is_ppt,
    normalize,
    partial_conjugate,
    partial_transpose,
    ppt_interior_check,
    product_state,
    product_vector,
    state_from,
    subset_complement,
)
from .maps import (
    MultilinearMapTable,
    Witness,
    choi_matrix,
    evaluate,
    is_completely_positive,
    map_from_choi,
    pairing,
    value_on_product,
)
from .seesaw import (
    SeeSawResult,
    cut_block_positivity,
    product_grid_minimum,
    regroup_for_cut,
    seesaw_block_positivity,
)
from .family import (
    CANONICAL,
    ST8_GRID,
    FamilyParams,
    SpanningReport,
    ZeroFamily,
    ZeroSample,
    basis_product_vector,
    bilinear_map,
    canonical_ten,
    default_zero_sample,
    determinant_d,
    eighth_root,
    rank_one_projector,
    realize_zero_vector,
    spanning_report,
    witness_matrix,
    zero_pair_and_kernel,
    zeta_vector,
)
from .states import (
    BiseparableVector,
    DetectionReport,
    SeparableDecomposition,
    Verdict,
    assemble,
    biseparable_vector,
    detect,
    perturbed_detected_state,
    rho0,
    rho1,
    rho_lambda,
    verify_decomposition,
    x_state,
)

__all__ = [name for name in dir() if not name.startswith("_")]
