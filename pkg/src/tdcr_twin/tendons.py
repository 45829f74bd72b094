"""Per-gap tendon length model and per-segment contraction sums.

Two actuation regimes:

* cardinal (boundary) actuation: bending exactly along +X/+Y/-X/-Y; the
  facing tendon contracts by 2*D*sin(theta/2), the two adjacent tendons by
  half of that, the opposing tendon keeps its rest length.
* blend actuation: bending between cardinals; only the two bracketing
  tendons are active, weighted by a smoothed square wave
  w(phi) = atan(4*sin(phi)) / atan(4) on phi in (0, pi/2).

Contractions (pull lengths) are the computational primitive; tendon path
lengths are rest length minus pull. The half-pull relation between adjacent
and facing tendons is exact in floating point by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BoundaryAngle, DomainError, InvalidChannel, ValidationError
from .spine import SpineModel

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

# Angular tolerance deciding cardinal-vs-blend dispatch (rad).
CARDINAL_EPS = 1e-6

_ATAN4 = math.atan(4.0)


@dataclass(frozen=True)
class SegmentCommand:
    """Direction angle theta1 and total segment bend theta2, radians.

    theta1 is normalized into [0, 2*pi); theta2 must be >= 0.
    """

    theta1: float
    theta2: float

    def __post_init__(self):
        if not math.isfinite(self.theta1) or not math.isfinite(self.theta2):
            raise ValidationError("command angles must be finite")
        if self.theta2 < 0.0:
            raise ValidationError(f"theta2 must be >= 0, got {self.theta2}")
        object.__setattr__(self, "theta1", self.theta1 % TWO_PI)


class TendonLengths(NamedTuple):
    """Inter-disc tendon state for one gap, indexed by channel 0..3.

    l[i] = path length (mm); pull[i] = contraction from rest (mm), so
    l[i] = rest_length - pull[i].
    """

    l: tuple[float, float, float, float]
    pull: tuple[float, float, float, float]


class TendonPulls(NamedTuple):
    """Per-segment total contraction S per channel, summed over all gaps (mm)."""

    s: tuple[float, float, float, float]


class BlendWeights(NamedTuple):
    """Active-pair weights between cardinals.

    channel_a is the cardinal the direction angle is approaching (weight w_a
    rises to 1 there); channel_b is the one it is leaving.
    """

    w_a: float
    w_b: float
    channel_a: int
    channel_b: int


def _check_gap_args(gap_length: float, pitch_radius: float, bend_angle: float) -> None:
    if not 0.0 <= bend_angle < math.pi:
        raise DomainError(f"per-gap bend angle must be in [0, pi), got {bend_angle}")
    if gap_length <= 0.0 or pitch_radius <= 0.0:
        raise DomainError("gap_length and pitch_radius must be positive")


def gap_contraction(gap_length: float, pitch_radius: float, bend_angle: float) -> float:
    """Facing-tendon pull for one gap: 2*D*sin(theta/2), mm.

    Raises DomainError when the pull would reach or exceed the gap length
    (tendon length would hit zero).
    """
    _check_gap_args(gap_length, pitch_radius, bend_angle)
    pull = 2.0 * pitch_radius * math.sin(0.5 * bend_angle)
    if pull >= gap_length:
        raise DomainError(
            f"contraction {pull:.6f} reaches or exceeds gap length {gap_length}"
        )
    return pull


def primary_contraction(gap_length: float, pitch_radius: float, bend_angle: float) -> float:
    """Shortened facing-tendon length for one gap: L - 2*D*sin(theta/2), mm."""
    return gap_length - gap_contraction(gap_length, pitch_radius, bend_angle)


def chord_geometry_oracle(gap_length: float, pitch_radius: float, bend_angle: float) -> float:
    """Facing-tendon length via the curvature-radius route; test oracle only.

    Solves sin(theta/2) = 0.5*L / (D + R) for the centerline radius R, then
    evaluates the tendon chord 2*R*sin(theta/2). Algebraically equal to
    primary_contraction but computed along an independent path. Undefined at
    zero bend.
    """
    _check_gap_args(gap_length, pitch_radius, bend_angle)
    if bend_angle == 0.0:
        raise DomainError("chord oracle undefined at zero bend; use the closed form")
    half_sin = math.sin(0.5 * bend_angle)
    if 2.0 * pitch_radius * half_sin >= gap_length:
        raise DomainError(
            f"contraction reaches or exceeds gap length {gap_length} at this bend"
        )
    radius = 0.5 * gap_length / half_sin - pitch_radius
    return 2.0 * radius * half_sin


def boundary_tendon_lengths(
    gap_length: float, pitch_radius: float, bend_angle: float, cardinal: int
) -> TendonLengths:
    """Tendon state for one gap bending along a cardinal channel.

    Facing tendon shortens by the full gap contraction, the two adjacent
    tendons by exactly half of it, the opposing tendon stays at rest length.
    Channels here are cardinal indices (identity layout).
    """
    if cardinal not in (0, 1, 2, 3):
        raise InvalidChannel(f"cardinal channel must be in 0..3, got {cardinal}")
    pull_full = gap_contraction(gap_length, pitch_radius, bend_angle)
    pull_half = 0.5 * pull_full
    pull = [0.0, 0.0, 0.0, 0.0]
    pull[cardinal] = pull_full
    pull[(cardinal + 1) % 4] = pull_half
    pull[(cardinal + 3) % 4] = pull_half
    lengths = tuple(gap_length - p for p in pull)
    return TendonLengths(l=lengths, pull=tuple(pull))


def blend_wave(phi: float) -> float:
    """Smoothed square wave atan(4*sin(phi))/atan(4), total on [0, pi/2]."""
    return math.atan(4.0 * math.sin(phi)) / _ATAN4


def nearest_cardinal(theta1: float, eps: float = CARDINAL_EPS) -> int | None:
    """Cardinal index 0..3 if theta1 is within eps of k*pi/2, else None."""
    k = round(theta1 / HALF_PI)
    if abs(theta1 - k * HALF_PI) <= eps:
        return int(k) % 4
    return None


def blend_weights(theta1: float, eps: float = CARDINAL_EPS) -> BlendWeights:
    """Active-pair weights for bending between two cardinal directions.

    Raises BoundaryAngle when theta1 is within eps of a cardinal; the caller
    must use boundary actuation there. Channels are cardinal indices.
    """
    theta1 = theta1 % TWO_PI
    if nearest_cardinal(theta1, eps) is not None:
        raise BoundaryAngle(
            f"theta1 = {theta1:.9f} rad is within {eps} of a cardinal direction"
        )
    quadrant = int(theta1 // HALF_PI)
    phi = theta1 - quadrant * HALF_PI
    w_a = blend_wave(phi)  # rises toward the next cardinal
    w_b = blend_wave(HALF_PI - phi)  # equals atan(4*cos(phi))/atan(4)
    return BlendWeights(
        w_a=w_a,
        w_b=w_b,
        channel_a=(quadrant + 1) % 4,
        channel_b=quadrant,
    )


def segment_tendon_contractions(model: SpineModel, cmd: SegmentCommand) -> TendonPulls:
    """Total per-channel pull S for one segment command, mm.

    The segment bend is distributed uniformly over its gaps (constant
    curvature), so each channel's pull is gaps * its per-gap pull. Cardinal
    commands activate three tendons (facing full, adjacents half); blend
    commands activate the bracketing pair with wave-weighted fractions of the
    full gap contraction. The result is indexed by physical channel via the
    configured channel layout.
    """
    p = model.params
    if cmd.theta2 > p.theta2_max:
        raise ValidationError(
            f"theta2 exceeds theta2_max: {cmd.theta2:.6f} > {p.theta2_max:.6f}"
        )
    gaps = p.gaps_per_segment
    theta_gap = cmd.theta2 / gaps

    per_direction = [0.0, 0.0, 0.0, 0.0]
    if theta_gap > 0.0:
        cardinal = nearest_cardinal(cmd.theta1)
        if cardinal is not None:
            gap_state = boundary_tendon_lengths(
                p.gap_length_L, p.tendon_pitch_D, theta_gap, cardinal
            )
            per_direction = [gaps * pull for pull in gap_state.pull]
        else:
            full = gap_contraction(p.gap_length_L, p.tendon_pitch_D, theta_gap)
            w = blend_weights(cmd.theta1)
            per_direction[w.channel_a] = gaps * (w.w_a * full)
            per_direction[w.channel_b] = gaps * (w.w_b * full)

    # Map direction-space pulls onto physical channels.
    s = tuple(per_direction[direction] for direction in p.channel_layout)
    return TendonPulls(s=s)


def max_segment_pull(model: SpineModel) -> float:
    """Largest per-channel pull any command can demand of one segment, mm."""
    p = model.params
    theta_gap = p.theta2_max / p.gaps_per_segment
    return p.gaps_per_segment * gap_contraction(p.gap_length_L, p.tendon_pitch_D, theta_gap)


def pulls_matrix(model: SpineModel, cmds: list[SegmentCommand]) -> np.ndarray:
    """Stack per-segment pulls into an (num_segments, 4) array, mm."""
    if len(cmds) != model.params.num_segments:
        raise ValidationError(
            f"expected {model.params.num_segments} segment commands, got {len(cmds)}"
        )
    return np.array([segment_tendon_contractions(model, c).s for c in cmds])
