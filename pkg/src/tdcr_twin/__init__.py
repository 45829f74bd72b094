"""Digital twin of a multi-segment tendon-driven continuum manipulator.

Library layers, base to tip of the data flow:

* spine: parametric geometry and validated configuration.
* tendons: per-gap tendon length model and per-segment contraction sums.
* actuation: pulley sizing, inter-segment coupling, servo range checks.
* fk: constant-curvature forward kinematics (tip pose, disc polyline).
* workspace: command-grid sweeps, base-collision filter, CSV/PLY export.
* service / cli: HTTP and command-line front ends over the same operations.
"""

from .actuation import (
    MotorCommand,
    PulleySet,
    apply_zero_offsets,
    channel_map,
    default_pulleys,
    motor_rotations,
    pulley_radii,
)
from .errors import (
    BoundaryAngle,
    DegeneratePulleyWarning,
    DomainError,
    EmptyInput,
    InvalidChannel,
    RangeExceeded,
    TwinError,
    ValidationError,
)
from .fk import RigidTransform, SpinePose, gap_transform, pcc_numeric_oracle, spine_pose
from .spine import SpineModel, SpineParams, build_spine, load_params
from .tendons import (
    BlendWeights,
    SegmentCommand,
    TendonLengths,
    TendonPulls,
    blend_weights,
    boundary_tendon_lengths,
    gap_contraction,
    primary_contraction,
    segment_tendon_contractions,
)
from .workspace import SweepGrid, WorkspaceSample, default_grid, export, stats, sweep

__version__ = "0.1.0"

__all__ = [
    "BlendWeights",
    "BoundaryAngle",
    "DegeneratePulleyWarning",
    "DomainError",
    "EmptyInput",
    "InvalidChannel",
    "MotorCommand",
    "PulleySet",
    "RangeExceeded",
    "RigidTransform",
    "SegmentCommand",
    "SpineModel",
    "SpineParams",
    "SpinePose",
    "SweepGrid",
    "TendonLengths",
    "TendonPulls",
    "TwinError",
    "ValidationError",
    "WorkspaceSample",
    "apply_zero_offsets",
    "blend_weights",
    "boundary_tendon_lengths",
    "build_spine",
    "channel_map",
    "default_grid",
    "default_pulleys",
    "export",
    "gap_contraction",
    "gap_transform",
    "load_params",
    "motor_rotations",
    "pcc_numeric_oracle",
    "primary_contraction",
    "pulley_radii",
    "segment_tendon_contractions",
    "spine_pose",
    "stats",
    "sweep",
]
