"""Exact symbolic and numeric machinery around Sylvester's determinant identity."""

from .bareiss import EliminationTrace, bareiss_det, bareiss_minors
from .det import (
    DOperator,
    apply_D,
    border_expansion,
    cofactor,
    cofactor_via_derivative,
    det,
    expand_along_col,
    expand_along_row,
)
from .errors import *  # noqa: F401,F403
from .matrix import (
    IntMatrix,
    MinorSpec,
    SymMatrix,
    extend,
    generic_matrix,
    matrix_from_json,
    matrix_to_json,
    minor,
    replace_row_with_border,
)
from .ring import ONE, ZERO, EntryVar, Monomial, MultiPoly, partial_derivative, poly_arith, poly_eval
from .verify import (
    CampaignSummary,
    IdentityReport,
    ReplayReport,
    SplitMix64,
    check_all,
    check_canonical,
    check_general,
    dodgson_condensation,
    random_numeric_campaign,
    replay_induction_step,
    sorted_index_tuples,
)

__version__ = "0.1.0"
