"""Essential-vertex detection for vertex hitting set problems.

A library and CLI around five vertex deletion problems (multicut, directed
multicut, P4 hitting, vertex cover, directed feedback vertex set): exact
rational LP relaxations solved by cutting planes, vertex-avoiding LP values
used to detect vertices that good solutions cannot skip, constructive
roundings certifying the relaxations' integrality-gap factors, and a driver
that turns detection into search-space reduction for exact solving.
"""

from .detection import (
    DETECTION_THRESHOLDS,
    DetectionRequest,
    DetectionResult,
    detect,
    essential_vertices_exact,
    lp_values,
)
from .driver import DriverReport, restrict_instance, solve_with_detection
from .errors import (
    EssentiaError,
    InfeasibleSeparatorError,
    InputError,
    IterationCapError,
    NodeCapError,
    PinInfeasibleError,
    PreconditionError,
    ResourceCapError,
    SizeCapError,
)
from .exact import SolveBudget, opt_value, opt_value_avoiding, solve_exact
from .graphs import (
    Graph,
    Path,
    VertexWeights,
    count_vertex_disjoint_paths,
    min_vertex_separator,
    min_weight_cycle_through,
    shortest_weighted_path,
)
from .lab import (
    GapReport,
    GnpGapRow,
    LabeledInstance,
    convert,
    gap_csv_rows,
    gen_dfvs_gadget,
    gen_gnp,
    gen_matching_apex,
    gen_star_multicut,
    gen_vc_gadget,
    gnp_gap_experiment,
    measure_gap,
)
from .lp import FractionalSolution, LpProblem, solve, solve_restricted, verify_feasible
from .problems import (
    Instance,
    Obstacle,
    ObstacleKind,
    Problem,
    all_obstacles,
    enumerate_obstacles_minimal,
    find_violated_obstacle,
    is_solution,
)
from .rounding import (
    RoundingCertificate,
    round_cograph,
    round_directed_multicut,
    round_multicut,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
