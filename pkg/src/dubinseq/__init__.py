"""Curvature-constrained shortest paths through ordered waypoints.

The library plans paths for a vehicle with a minimum turning radius rho
that must visit a sequence of waypoints (adjacent gaps >= 2*rho) in
order. Exact two-point primitives, a near-optimal free-heading
three-point solver, and a concatenation scheme whose best-of-three
candidate is within 1 + pi/3 + eps of optimal when the waypoint count
is a multiple of three.
"""

from .bounds import (
    BoundReport,
    HeadingGrid,
    compute_bounds,
    euclidean_lb,
    grid_witness,
    heading_grid_dp,
)
from .dubins import (
    Configuration,
    DubinsPath,
    Segment,
    concatenate,
    dubins_shortest,
    integrate,
    sample_path,
    shortest_cs,
    shortest_sc,
)
from .errors import (
    DiscontinuityError,
    DubinseqError,
    GenerationStalled,
    InfeasibleHeading,
    ParseError,
    SeparationViolation,
    ValidationError,
)
from .instances import (
    Instance,
    generate,
    read_instance,
    read_instance_file,
    write_instance,
    write_instance_file,
)
from .sequence import (
    CandidateSolution,
    Partition,
    SolutionReport,
    build_candidate,
    opt_partition_diagnostic,
    plan_partition,
    solution_document,
    solve_sequence,
)
from .three_point import ThreePointSolution, solve_three_point
from .svg import solution_svg, write_svg

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CandidateSolution",
    "Configuration",
    "DiscontinuityError",
    "DubinsPath",
    "DubinseqError",
    "GenerationStalled",
    "HeadingGrid",
    "InfeasibleHeading",
    "Instance",
    "ParseError",
    "Partition",
    "Segment",
    "SeparationViolation",
    "SolutionReport",
    "ThreePointSolution",
    "ValidationError",
    "build_candidate",
    "compute_bounds",
    "concatenate",
    "dubins_shortest",
    "euclidean_lb",
    "generate",
    "grid_witness",
    "heading_grid_dp",
    "integrate",
    "opt_partition_diagnostic",
    "plan_partition",
    "read_instance",
    "read_instance_file",
    "sample_path",
    "shortest_cs",
    "shortest_sc",
    "solution_document",
    "solution_svg",
    "solve_sequence",
    "solve_three_point",
    "write_instance",
    "write_instance_file",
    "write_svg",
]
