"""Exact-arithmetic toolkit for representations of the special affine group
SAff_n(C) = SL_n(C) x C^n (semidirect): weight calculus, explicit matrix
models, socle/radical filtrations, and rationality decision procedures for
two-step extensions.
"""

from .schur import (
    Weight,
    WeightMultiset,
    check_lr_gap_bound,
    contains,
    dual,
    lambda_gap,
    lr_decompose,
    normalize,
    pieri_sym,
    weyl_dim,
)
from .repclass import (
    BAD,
    GOOD,
    GOOD_HEURISTIC,
    SemisimpleRep,
    StabilizerReport,
    bad_list,
    build_tensor_model,
    classify,
    stabilizer_dimension,
)
from .matmodel import (
    AffMatrixRep,
    UnipotentImage,
    dual_model,
    model_sym_dual,
    sl_only_model,
    tensor_model,
    unipotent_image,
    validate_model,
    verify_degree_bound,
)
from .filtration import (
    Filtration,
    check_blocks_containment,
    check_duality,
    check_embedding_theorem,
    identify_layers,
    radical_filtration,
    socle_filtration,
)
from .rationality import (
    EXCEPTIONAL,
    POSSIBLY_NOT_GENERICALLY_FREE,
    RATIONAL_BY_A,
    RATIONAL_BY_B,
    TwoStepExtension,
    Verdict,
    check_generic_freeness,
    check_structural,
    decide_rationality,
    stable_level,
)
from .catalog import CatalogEntry, enumerate_exceptional_candidates, irreps_up_to_dim
from .config import ModelInvariantError, ResourceCapError, RunConfig

__version__ = "0.1.0"
