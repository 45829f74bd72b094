"""Workspace exploration: grid sweep, base-collision filter, stats, export.

The default protocol drives every segment through 4 bend directions times 3
bend depths (12 configurations per segment, 12^3 = 1728 command tuples),
evaluates the forward kinematics for each, and rejects configurations where
any part of the spine dips below the base plane z = 0.

Sweep order is deterministic: segment-major lexicographic, theta1 outer,
theta2 inner, so exports are byte-identical across runs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyInput, ValidationError
from .fk import spine_pose
from .spine import SpineModel
from .tendons import SegmentCommand

DEFAULT_THETA1 = (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)


@dataclass(frozen=True)
class SweepGrid:
    """Per-segment command levels; the same levels apply to every segment."""

    theta1_values: tuple[float, ...]
    theta2_values: tuple[float, ...]

    def per_segment_count(self) -> int:
        return len(self.theta1_values) * len(self.theta2_values)


@dataclass(frozen=True)
class WorkspaceSample:
    """One evaluated command tuple: commands, tip position, filter verdict."""

    commands: tuple[SegmentCommand, ...]
    tip: np.ndarray  # (3,) mm
    accepted: bool


@dataclass(frozen=True)
class WorkspaceStats:
    """Summary over a sample list; extents and centroid cover accepted tips."""

    total: int
    accepted_count: int
    min_xyz: tuple[float, float, float]
    max_xyz: tuple[float, float, float]
    max_radius: float
    centroid: tuple[float, float, float]


def _check_grid(model: SpineModel, grid: SweepGrid) -> None:
    if not grid.theta1_values or not grid.theta2_values:
        raise ValidationError("sweep grid must have at least one value per axis")
    for t2 in grid.theta2_values:
        if not 0.0 <= t2 <= model.params.theta2_max:
            raise ValidationError(
                f"grid theta2 value {t2:.6f} outside [0, theta2_max]"
            )
    for t1 in grid.theta1_values:
        if not math.isfinite(t1):
            raise ValidationError("grid theta1 values must be finite")


def default_grid(model: SpineModel) -> SweepGrid:
    """4 cardinal directions x 3 bend depths up to theta2_max, per segment.

    Depths are k * theta2_max / 3 for k = 1..3; zero bend is excluded so the
    3-segment default enumerates exactly 12^3 = 1728 command tuples.
    """
    t2max = model.params.theta2_max
    return SweepGrid(
        theta1_values=DEFAULT_THETA1,
        theta2_values=(t2max / 3.0, 2.0 * t2max / 3.0, t2max),
    )


def parse_grid_spec(spec: str, model: SpineModel) -> SweepGrid:
    """Grid from a compact spec string.

    Two forms, split on a single 'x':

    * counts, e.g. "4x3": n1 directions evenly spaced over the full circle
      (k * 360/n1 degrees, k = 0..n1-1) and n2 bend depths k * theta2_max/n2
      (k = 1..n2).
    * explicit degree lists, e.g. "0,90,180,270x30,60,90"; a lone value needs
      a comma or decimal point ("45.0x30,60") to distinguish it from a count.
    """
    parts = spec.split("x")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise ValidationError(f"grid spec must look like '4x3', got {spec!r}")
    left, right = parts[0].strip(), parts[1].strip()

    def is_count(token: str) -> bool:
        return token.isdigit()

    if is_count(left) and is_count(right):
        n1, n2 = int(left), int(right)
        if n1 < 1 or n2 < 1:
            raise ValidationError(f"grid counts must be >= 1, got {spec!r}")
        theta1 = tuple(k * 2.0 * math.pi / n1 for k in range(n1))
        theta2 = tuple(k * model.params.theta2_max / n2 for k in range(1, n2 + 1))
    else:
        try:
            theta1 = tuple(math.radians(float(v)) for v in left.split(","))
            theta2 = tuple(math.radians(float(v)) for v in right.split(","))
        except ValueError:
            raise ValidationError(f"grid spec has a non-numeric value: {spec!r}")
    grid = SweepGrid(theta1_values=theta1, theta2_values=theta2)
    _check_grid(model, grid)
    return grid


def grid_size(model: SpineModel, grid: SweepGrid) -> int:
    return grid.per_segment_count() ** model.params.num_segments


def sweep(model: SpineModel, grid: SweepGrid) -> list[WorkspaceSample]:
    """Evaluate the forward kinematics over the full command grid.

    A sample is accepted when every disc center and the tip sit at or above
    the base plane (z >= 0); the whole spine is checked, not just the end
    effector.
    """
    _check_grid(model, grid)
    per_segment = tuple(
        SegmentCommand(t1, t2)
        for t1 in grid.theta1_values
        for t2 in grid.theta2_values
    )
    samples = []
    for combo in itertools.product(per_segment, repeat=model.params.num_segments):
        pose = spine_pose(model, list(combo))
        tip = pose.tip.translation
        accepted = bool(np.all(pose.polyline[:, 2] >= 0.0) and tip[2] >= 0.0)
        samples.append(WorkspaceSample(commands=combo, tip=tip, accepted=accepted))
    return samples


def stats(samples: Sequence[WorkspaceSample]) -> WorkspaceStats:
    """Extents, max radial reach, and centroid over accepted tips."""
    if not samples:
        raise EmptyInput("no workspace samples")
    accepted = np.array([s.tip for s in samples if s.accepted])
    if accepted.size == 0:
        zero = (0.0, 0.0, 0.0)
        return WorkspaceStats(
            total=len(samples), accepted_count=0,
            min_xyz=zero, max_xyz=zero, max_radius=0.0, centroid=zero,
        )
    radii = np.linalg.norm(accepted, axis=1)
    return WorkspaceStats(
        total=len(samples),
        accepted_count=len(accepted),
        min_xyz=tuple(accepted.min(axis=0)),
        max_xyz=tuple(accepted.max(axis=0)),
        max_radius=float(radii.max()),
        centroid=tuple(accepted.mean(axis=0)),
    )


def format_mm(value: float) -> str:
    """Fixed 9-decimal coordinate formatting shared by CSV and PLY.

    Values on the 9-decimal grid round-trip bit-exactly through
    format -> parse -> format; exports are byte-stable across runs.
    """
    if value == 0.0:
        value = 0.0  # collapse negative zero
    return f"{value:.9f}"


def _csv_lines(samples: Iterable[WorkspaceSample], num_segments: int) -> Iterable[str]:
    head = []
    for i in range(1, num_segments + 1):
        head += [f"seg{i}_theta1_deg", f"seg{i}_theta2_deg"]
    head += ["tip_x_mm", "tip_y_mm", "tip_z_mm", "accepted"]
    yield ",".join(head)
    for s in samples:
        row = []
        for cmd in s.commands:
            row.append(format_mm(math.degrees(cmd.theta1)))
            row.append(format_mm(math.degrees(cmd.theta2)))
        row += [format_mm(v) for v in s.tip]
        row.append("true" if s.accepted else "false")
        yield ",".join(row)


def _ply_lines(samples: Iterable[WorkspaceSample]) -> Iterable[str]:
    tips = [s.tip for s in samples if s.accepted]
    yield "ply"
    yield "format ascii 1.0"
    yield "comment accepted workspace tip positions, mm"
    yield f"element vertex {len(tips)}"
    yield "property float x"
    yield "property float y"
    yield "property float z"
    yield "end_header"
    for tip in tips:
        yield " ".join(format_mm(v) for v in tip)


def export(samples: Sequence[WorkspaceSample], fmt: str, path: str | Path) -> None:
    """Write samples as CSV (all samples) or ASCII PLY (accepted tips only)."""
    if fmt == "csv":
        if not samples:
            raise EmptyInput("no samples to export")
        num_segments = len(samples[0].commands)
        lines = _csv_lines(samples, num_segments)
    elif fmt == "ply":
        lines = _ply_lines(samples)
    else:
        raise ValidationError(f"format must be 'csv' or 'ply', got {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")
