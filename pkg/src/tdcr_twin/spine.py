"""Parametric model of the disc-and-ligament continuum spine.

All lengths are millimetres, all angles radians unless a name says otherwise.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError

# Cardinal direction labels in channel order for the identity layout.
DIRECTION_LABELS = ("+X", "+Y", "-X", "-Y")
IDENTITY_LAYOUT = (0, 1, 2, 3)


@dataclass(frozen=True)
class SpineParams:
    """User-changeable geometry of the spine.

    channel_layout maps each motor channel 0..3 to the cardinal direction it
    bends toward, encoded as direction indices 0=+X, 1=+Y, 2=-X, 3=-Y.
    """

    num_segments: int = 3
    discs_per_segment: int = 5
    gaps_per_segment: int | None = None  # derived as discs_per_segment - 1 when omitted
    disc_diameter: float = 15.0
    disc_height: float = 4.0
    gap_length_L: float = 10.0  # maximum separation of two adjacent discs
    tendon_pitch_D: float = 6.0  # radial distance from spine axis to tendon guide
    ligament_angle_alpha: float = 40.0  # degrees, informational only
    theta2_max: float = math.pi / 2
    channel_layout: tuple[int, int, int, int] = IDENTITY_LAYOUT

    def __post_init__(self):
        if self.gaps_per_segment is None:
            object.__setattr__(self, "gaps_per_segment", self.discs_per_segment - 1)
        object.__setattr__(self, "channel_layout", tuple(self.channel_layout))


@dataclass(frozen=True)
class SpineModel:
    """Validated spine with derived lengths (mm)."""

    params: SpineParams
    segment_backbone_length: float
    total_length_H: float


def build_spine(params: SpineParams) -> SpineModel:
    """Validate params and derive backbone lengths.

    Raises ValidationError naming the violated invariant; never clamps.
    """
    p = params
    if p.num_segments < 1:
        raise ValidationError(f"num_segments must be >= 1, got {p.num_segments}")
    if p.discs_per_segment < 2:
        raise ValidationError(f"discs_per_segment must be >= 2, got {p.discs_per_segment}")
    if p.gaps_per_segment != p.discs_per_segment - 1:
        raise ValidationError(
            f"gaps_per_segment must equal discs_per_segment - 1 "
            f"({p.discs_per_segment - 1}), got {p.gaps_per_segment}"
        )
    if not p.gap_length_L > 0:
        raise ValidationError(f"gap_length_L must be > 0, got {p.gap_length_L}")
    if not p.tendon_pitch_D > 0:
        raise ValidationError(f"tendon_pitch_D must be > 0, got {p.tendon_pitch_D}")
    if not 2.0 * p.tendon_pitch_D < p.disc_diameter:
        raise ValidationError(
            f"tendon guides lie outside the disc: 2*tendon_pitch_D = "
            f"{2.0 * p.tendon_pitch_D} must be < disc_diameter = {p.disc_diameter}"
        )
    if p.disc_height < 0:
        raise ValidationError(f"disc_height must be >= 0, got {p.disc_height}")
    if not 0.0 < p.theta2_max <= math.pi:
        raise ValidationError(f"theta2_max must be in (0, pi], got {p.theta2_max}")
    theta_gap = p.theta2_max / p.gaps_per_segment
    if theta_gap >= math.pi:
        raise ValidationError(
            f"per-gap bend theta2_max/gaps_per_segment = {theta_gap:.6f} must be < pi"
        )
    # A full-bend command must not contract any tendon past the gap length.
    max_contraction = 2.0 * p.tendon_pitch_D * math.sin(0.5 * theta_gap)
    if not max_contraction < p.gap_length_L:
        raise ValidationError(
            f"tendon contraction exceeds gap length at theta2_max: "
            f"2*D*sin(theta/2) = {max_contraction:.6f} must be < gap_length_L = "
            f"{p.gap_length_L}"
        )
    if sorted(p.channel_layout) != [0, 1, 2, 3]:
        raise ValidationError(
            f"channel_layout must be a permutation of (0, 1, 2, 3), got {p.channel_layout}"
        )

    seg_len = p.discs_per_segment * p.disc_height + p.gaps_per_segment * p.gap_length_L
    return SpineModel(
        params=p,
        segment_backbone_length=seg_len,
        total_length_H=p.num_segments * seg_len,
    )


_LABEL_TO_DIRECTION = {lbl.upper(): i for i, lbl in enumerate(DIRECTION_LABELS)}


def _layout_from_json(raw) -> tuple[int, int, int, int]:
    if not isinstance(raw, dict):
        raise ValidationError(f"channel_layout must be an object, got {type(raw).__name__}")
    layout = [None] * 4
    for key, label in raw.items():
        try:
            channel = int(key)
        except (TypeError, ValueError):
            raise ValidationError(f"channel_layout key {key!r} is not a channel index")
        if not 0 <= channel <= 3:
            raise ValidationError(f"channel_layout key {key!r} outside 0..3")
        direction = _LABEL_TO_DIRECTION.get(str(label).upper())
        if direction is None:
            raise ValidationError(
                f"channel_layout direction {label!r} not one of {DIRECTION_LABELS}"
            )
        layout[channel] = direction
    if None in layout:
        raise ValidationError("channel_layout must cover channels 0..3")
    return tuple(layout)


def layout_to_json(layout: tuple[int, int, int, int]) -> dict[str, str]:
    return {str(c): DIRECTION_LABELS[d] for c, d in enumerate(layout)}


_INT_KEYS = {"num_segments", "discs_per_segment", "gaps_per_segment"}
_FLOAT_KEYS = {
    "disc_diameter",
    "disc_height",
    "gap_length_L",
    "tendon_pitch_D",
    "ligament_angle_alpha",
    "theta2_max",
}


def params_from_dict(raw: dict) -> SpineParams:
    """Build SpineParams from a JSON-style dict; keys match the field names."""
    known = _INT_KEYS | _FLOAT_KEYS | {"channel_layout"}
    unknown = set(raw) - known
    if unknown:
        raise ValidationError(f"unknown config keys: {sorted(unknown)}")
    kwargs = {}
    for key, value in raw.items():
        if key == "channel_layout":
            kwargs[key] = _layout_from_json(value)
        elif key in _INT_KEYS:
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValidationError(f"config key {key!r} must be an integer, got {value!r}")
            kwargs[key] = value
        else:
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ValidationError(f"config key {key!r} must be a number, got {value!r}")
            kwargs[key] = float(value)
    return SpineParams(**kwargs)


def load_params(path: str | Path) -> SpineParams:
    """Load SpineParams from a JSON file; missing keys fall back to defaults."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValidationError("config file must contain a JSON object")
    return params_from_dict(raw)


def params_to_dict(params: SpineParams) -> dict:
    """Inverse of params_from_dict (layout re-encoded with direction labels)."""
    return {
        "num_segments": params.num_segments,
        "discs_per_segment": params.discs_per_segment,
        "gaps_per_segment": params.gaps_per_segment,
        "disc_diameter": params.disc_diameter,
        "disc_height": params.disc_height,
        "gap_length_L": params.gap_length_L,
        "tendon_pitch_D": params.tendon_pitch_D,
        "ligament_angle_alpha": params.ligament_angle_alpha,
        "theta2_max": params.theta2_max,
        "channel_layout": layout_to_json(params.channel_layout),
    }
