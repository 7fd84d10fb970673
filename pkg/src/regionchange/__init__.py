"""Region crossing change calculus on link diagrams."""

from .diagram import (
    Component,
    Diagram,
    PDCode,
    Region,
    components,
    crossing_sign,
    faces,
    linking_number,
    parse_pd,
)
from .errors import (
    BudgetExceededError,
    CheckFailedError,
    DisconnectedError,
    IndexMismatchError,
    InternalInconsistencyError,
    LabelMultiplicityError,
    MalformedError,
    RegionChangeError,
    SameComponentError,
)
from .gf2 import BitMatrix, in_row_space, rank, right_nullspace, solve_row_combination
from .rcc import (
    IncidenceMatrix,
    achievable,
    apply_rcc,
    component_count,
    descending_target,
    even_degree_test,
    incidence_matrix,
    is_descending,
    is_knot_graph,
    solve_regions,
    unknot_plan,
    unknottable_by_rcc,
)
from .oracle import (
    audit_region_parity,
    cross_check,
    enumerate_achievable,
    random_diagram,
    random_plane_graph,
)
from .tait import (
    Checkerboard,
    SignedPlaneGraph,
    checkerboard,
    dual,
    is_isomorphic,
    medial_diagram,
    tait_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
