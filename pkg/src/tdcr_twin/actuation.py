"""Pulley sizing and the tendon-pull to motor-rotation map.

Each segment's four tendons wind onto pulleys of a shared radius R_i sized so
that the worst-case cumulative pull through segment i spans exactly the servo
range: R_i * psi_max = sum_{j<=i} S_{j,max}. Distal motors must replay
proximal pulls to keep their tendons taut when a proximal segment bends, so
the rotation for (segment i, channel c) converts the cumulative pull
T_{i,c} = S_{i,c} + sum_{j<i} S_{j,c} through that segment's own radius.

The accumulation is done in the length domain and divided by R_i once; the
printed coupling rule mixes lengths and angles, which does not typecheck, but
the pulley-sizing rule only yields its intended "all segments at max pull puts
every motor at psi_max" property under this reading.

Servos are ideal position servos on [0, psi_max], psi_max default pi (180
degree hobby-servo range). Commands that land outside the range are rejected,
never clamped.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import DegeneratePulleyWarning, DomainError, RangeExceeded, ValidationError
from .spine import SpineModel
from .tendons import TendonPulls, blend_weights, max_segment_pull, nearest_cardinal

DEFAULT_PSI_MAX = math.pi

# Slack on the servo-range check so pulls sized to land exactly on psi_max
# are not rejected for a rounding ulp.
RANGE_TOL = 1e-9


@dataclass(frozen=True)
class PulleySet:
    """Per-segment pulley radii (mm, index 0 = nearest base) and servo range."""

    radii: tuple[float, ...]
    psi_max: float = DEFAULT_PSI_MAX


@dataclass(frozen=True)
class MotorCommand:
    """Motor rotations psi (radians) per (segment, channel), plus calibration.

    rotations[i][c] is the raw coupling result; zero_offsets[i][c] is the
    additive calibration for that motor. Servo targets are their sum.
    """

    rotations: tuple[tuple[float, float, float, float], ...]
    zero_offsets: tuple[tuple[float, float, float, float], ...] = field(default=())
    psi_max: float = DEFAULT_PSI_MAX

    def __post_init__(self):
        if not self.zero_offsets:
            zeros = tuple((0.0, 0.0, 0.0, 0.0) for _ in self.rotations)
            object.__setattr__(self, "zero_offsets", zeros)
        if len(self.zero_offsets) != len(self.rotations):
            raise ValidationError("zero_offsets shape must match rotations")

    def flat(self) -> list[float]:
        """Rotations as a flat motor list, index = segment * 4 + channel."""
        return [psi for seg in self.rotations for psi in seg]


class ChannelRoles(NamedTuple):
    """Active channels for a bend direction, in physical channel numbering.

    Cardinal directions activate a facing channel plus two adjacents;
    directions between cardinals activate the bracketing pair, ordered
    (leaving, approaching) to match the blend-weight assignment.
    """

    kind: str  # "cardinal" | "blend"
    facing: int | None
    adjacents: tuple[int, int] | None
    pair: tuple[int, int] | None


def pulley_radii(max_pull_per_segment: Sequence[float], psi_max: float = DEFAULT_PSI_MAX) -> PulleySet:
    """Size one pulley per segment from worst-case cumulative pulls.

    R_i = (sum of max pulls of segments 1..i) / psi_max, so simultaneous
    maximum actuation rotates every motor to exactly psi_max. A zero
    cumulative pull produces a zero radius, which cannot transmit any pull;
    it is kept (the segment may be intentionally passive) but flagged with
    DegeneratePulleyWarning.
    """
    if psi_max <= 0.0:
        raise DomainError(f"psi_max must be positive, got {psi_max}")
    radii = []
    cumulative = 0.0
    for i, s_max in enumerate(max_pull_per_segment):
        if s_max < 0.0:
            raise DomainError(f"max pull for segment {i + 1} is negative: {s_max}")
        cumulative += s_max
        radii.append(cumulative / psi_max)
    if not radii:
        raise DomainError("need at least one segment")
    for i, r in enumerate(radii):
        if r == 0.0:
            warnings.warn(
                f"pulley {i + 1} has zero radius (zero cumulative max pull)",
                DegeneratePulleyWarning,
                stacklevel=2,
            )
    return PulleySet(radii=tuple(radii), psi_max=psi_max)


def default_pulleys(model: SpineModel, psi_max: float = DEFAULT_PSI_MAX) -> PulleySet:
    """PulleySet for a spine whose segments share one maximum pull."""
    s_max = max_segment_pull(model)
    return pulley_radii([s_max] * model.params.num_segments, psi_max)


def motor_rotations(pulls: Sequence[TendonPulls], pulleys: PulleySet) -> MotorCommand:
    """Convert per-segment tendon pulls to motor rotations with coupling.

    Cumulative pull per channel (proximal pulls replayed by every distal
    motor) divided by the segment's own pulley radius. Raises RangeExceeded
    for the first motor whose rotation lands beyond psi_max.
    """
    if len(pulls) != len(pulleys.radii):
        raise ValidationError(
            f"got pulls for {len(pulls)} segments but {len(pulleys.radii)} pulleys"
        )
    rotations = []
    cumulative = [0.0, 0.0, 0.0, 0.0]
    for i, (seg_pulls, radius) in enumerate(zip(pulls, pulleys.radii)):
        row = []
        for c in range(4):
            cumulative[c] += seg_pulls.s[c]
            total = cumulative[c]
            if total == 0.0:
                psi = 0.0
            elif radius == 0.0:
                raise DomainError(
                    f"pulley {i + 1} has zero radius but channel {c} demands "
                    f"{total:.6f} mm of pull"
                )
            else:
                psi = total / radius
            if psi > pulleys.psi_max + RANGE_TOL:
                raise RangeExceeded(i, c, psi - pulleys.psi_max)
            row.append(psi)
        rotations.append(tuple(row))
    return MotorCommand(rotations=tuple(rotations), psi_max=pulleys.psi_max)


def channel_map(theta1: float, layout: tuple[int, int, int, int]) -> ChannelRoles:
    """Which physical channels act for a bend direction, and in what role.

    layout[channel] is the cardinal direction that channel faces; the inverse
    permutation maps direction-space roles onto physical channels.
    """
    to_channel = [0, 0, 0, 0]
    for channel, direction in enumerate(layout):
        to_channel[direction] = channel
    cardinal = nearest_cardinal(theta1 % (2.0 * math.pi))
    if cardinal is not None:
        return ChannelRoles(
            kind="cardinal",
            facing=to_channel[cardinal],
            adjacents=(to_channel[(cardinal + 1) % 4], to_channel[(cardinal + 3) % 4]),
            pair=None,
        )
    w = blend_weights(theta1)
    return ChannelRoles(
        kind="blend",
        facing=None,
        adjacents=None,
        pair=(to_channel[w.channel_b], to_channel[w.channel_a]),
    )


def apply_zero_offsets(
    cmd: MotorCommand, calibration: Sequence[Sequence[float]]
) -> tuple[tuple[float, float, float, float], ...]:
    """Servo target angles: rotation + per-motor calibration offset.

    Offsets must lie in [0, psi_max); any target outside [0, psi_max] rejects
    the whole command with RangeExceeded naming the motor and overshoot.
    """
    if len(calibration) != len(cmd.rotations):
        raise ValidationError("calibration shape must match rotations")
    targets = []
    for i, (row, offsets) in enumerate(zip(cmd.rotations, calibration)):
        if len(offsets) != 4:
            raise ValidationError("calibration shape must match rotations")
        out = []
        for c, (psi, offset) in enumerate(zip(row, offsets)):
            if not 0.0 <= offset < cmd.psi_max:
                raise ValidationError(
                    f"zero offset for motor ({i + 1}, {c}) must be in [0, psi_max), "
                    f"got {offset}"
                )
            target = psi + offset
            if target > cmd.psi_max + RANGE_TOL:
                raise RangeExceeded(i, c, target - cmd.psi_max)
            if target < -RANGE_TOL:
                raise RangeExceeded(i, c, target)
            out.append(target)
        targets.append(tuple(out))
    return tuple(targets)


def saturated_motors(cmd: MotorCommand, tol: float = RANGE_TOL) -> list[tuple[int, int]]:
    """(segment, channel) pairs whose rotation sits at the servo limit."""
    at_limit = []
    for i, row in enumerate(cmd.rotations):
        for c, psi in enumerate(row):
            if psi >= cmd.psi_max - tol:
                at_limit.append((i, c))
    return at_limit
