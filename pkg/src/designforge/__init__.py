"""designforge: build and check semi-cyclic holey group divisible designs
with block size three, the small ingredient designs they are assembled from,
and two applications (balanced sampling plans and 2-D optical orthogonal
codes)."""

from .core import (
    Kind,
    GridPoint,
    BaseBlock,
    block,
    Design,
    DesignParams,
    necessary_conditions,
    expected_base_block_count,
)
from .verify import verify, VerificationReport, johnson_bound
from .families import (
    FamilyId,
    build_family,
    find_family,
    quasi_skew_starter,
    schgdd_n_1_4_from_starter,
)
from .search import (
    SearchBudget,
    SearchProblem,
    NotFound,
    BudgetExhausted,
    search,
    confirm_nonexistence_5_1_4,
)
from .engine import (
    Rule,
    Status,
    PlanNode,
    PlanNotExecutable,
    ExecutionResult,
    plan,
    execute_plan,
    build,
)
from .apps import (
    MissingIngredient,
    build_bsec2,
    build_ooc_n4,
    build_ooc_nm,
    fold_ooc,
)

__version__ = "0.1.0"

__all__ = [
    "Kind", "GridPoint", "BaseBlock", "block", "Design", "DesignParams",
    "necessary_conditions", "expected_base_block_count",
    "verify", "VerificationReport", "johnson_bound",
    "FamilyId", "build_family", "find_family",
    "quasi_skew_starter", "schgdd_n_1_4_from_starter",
    "SearchBudget", "SearchProblem", "NotFound", "BudgetExhausted",
    "search", "confirm_nonexistence_5_1_4",
    "Rule", "Status", "PlanNode", "PlanNotExecutable", "ExecutionResult",
    "plan", "execute_plan", "build",
    "MissingIngredient", "build_bsec2", "build_ooc_n4", "build_ooc_nm",
    "fold_ooc",
]
