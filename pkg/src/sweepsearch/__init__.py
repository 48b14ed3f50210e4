"""Multi-agent sweep processes for confining and detecting smart evaders in a disk."""

from .circular import (
    circ_cycle_time,
    circ_iteration_count,
    circ_iteration_count_closed,
    circ_next_radius,
    circ_recursion,
    circ_schedule,
)
from .errors import (
    ConfigParseError,
    NoBracket,
    NonPositiveDimension,
    OddSwarmSize,
    RegionTooSmall,
    SimTimeout,
    SlowerThanEvader,
    SubcriticalSpeed,
    SweepSearchError,
)
from .reports import CycleTrace, LinearRecursion, SweepReport
from .scenario import ScenarioParams, SweeperPose, SweepKind, initial_poses, validate_params
from .spiral import (
    EndgameDecision,
    SpiralLaw,
    endgame,
    spiral_angle,
    spiral_cycle_time,
    spiral_iteration_count,
    spiral_iteration_count_closed,
    spiral_next_radius,
    spiral_recursion,
    spiral_schedule,
)
from .velocities import (
    VelocityReport,
    circular_critical_velocity,
    lower_bound_velocity,
    spiral_critical_velocity,
    spiral_no_escape_velocity,
    velocity_report,
)

__all__ = [
    "ScenarioParams",
    "SweeperPose",
    "SweepKind",
    "validate_params",
    "initial_poses",
    "VelocityReport",
    "lower_bound_velocity",
    "circular_critical_velocity",
    "spiral_no_escape_velocity",
    "spiral_critical_velocity",
    "velocity_report",
    "LinearRecursion",
    "CycleTrace",
    "SweepReport",
    "circ_recursion",
    "circ_cycle_time",
    "circ_next_radius",
    "circ_iteration_count",
    "circ_iteration_count_closed",
    "circ_schedule",
    "SpiralLaw",
    "EndgameDecision",
    "spiral_recursion",
    "spiral_angle",
    "spiral_cycle_time",
    "spiral_next_radius",
    "spiral_iteration_count",
    "spiral_iteration_count_closed",
    "endgame",
    "spiral_schedule",
    "SweepSearchError",
    "OddSwarmSize",
    "NonPositiveDimension",
    "RegionTooSmall",
    "SubcriticalSpeed",
    "SlowerThanEvader",
    "NoBracket",
    "SimTimeout",
    "ConfigParseError",
]

__version__ = "0.1.0"
