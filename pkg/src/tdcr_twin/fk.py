"""Constant-curvature forward kinematics for the disc spine.

Each inter-disc gap bends as a circular arc of backbone length L in the
vertical plane selected by theta1; discs are rigid and contribute pure
translations along the local Z axis. A segment command (theta1, theta2)
spreads its bend uniformly over the segment's gaps.

Frames are Z-up with the base plate at z = 0; units are mm and radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .spine import SpineModel
from .tendons import SegmentCommand


@dataclass(frozen=True)
class RigidTransform:
    """Rotation (3x3 orthonormal) plus translation (mm)."""

    rotation: np.ndarray
    translation: np.ndarray

    @staticmethod
    def identity() -> "RigidTransform":
        return RigidTransform(rotation=np.eye(3), translation=np.zeros(3))

    def compose(self, local: "RigidTransform") -> "RigidTransform":
        """This transform followed by `local` expressed in this frame."""
        return RigidTransform(
            rotation=self.rotation @ local.rotation,
            translation=self.translation + self.rotation @ local.translation,
        )

    def quaternion(self) -> tuple[float, float, float, float]:
        """Unit quaternion (w, x, y, z) of the rotation."""
        return _matrix_to_quaternion(self.rotation)


@dataclass(frozen=True)
class SpinePose:
    """Full kinematic state: tip frame, disc-center polyline, gap arcs."""

    tip: RigidTransform
    polyline: np.ndarray  # (num_discs_total, 3) disc centers, base to tip
    per_gap_transforms: tuple[RigidTransform, ...]


def rot_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_y(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def _matrix_to_quaternion(r: np.ndarray) -> tuple[float, float, float, float]:
    # Shepperd's method: pick the largest diagonal combination for stability.
    t = r[0, 0] + r[1, 1] + r[2, 2]
    if t > 0.0:
        s = math.sqrt(t + 1.0) * 2.0
        w = 0.25 * s
        x = (r[2, 1] - r[1, 2]) / s
        y = (r[0, 2] - r[2, 0]) / s
        z = (r[1, 0] - r[0, 1]) / s
    elif r[0, 0] >= r[1, 1] and r[0, 0] >= r[2, 2]:
        s = math.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2]) * 2.0
        w = (r[2, 1] - r[1, 2]) / s
        x = 0.25 * s
        y = (r[0, 1] + r[1, 0]) / s
        z = (r[0, 2] + r[2, 0]) / s
    elif r[1, 1] >= r[2, 2]:
        s = math.sqrt(1.0 + r[1, 1] - r[0, 0] - r[2, 2]) * 2.0
        w = (r[0, 2] - r[2, 0]) / s
        x = (r[0, 1] + r[1, 0]) / s
        y = 0.25 * s
        z = (r[1, 2] + r[2, 1]) / s
    else:
        s = math.sqrt(1.0 + r[2, 2] - r[0, 0] - r[1, 1]) * 2.0
        w = (r[1, 0] - r[0, 1]) / s
        x = (r[0, 2] + r[2, 0]) / s
        y = (r[1, 2] + r[2, 1]) / s
        z = 0.25 * s
    norm = math.sqrt(w * w + x * x + y * y + z * z)
    if w < 0.0:
        norm = -norm
    return (w / norm, x / norm, y / norm, z / norm)


def orthonormality_error(r: np.ndarray) -> float:
    """max(|R Rt - I| elementwise, |det R - 1|)."""
    gram = float(np.max(np.abs(r @ r.T - np.eye(3))))
    det = abs(float(np.linalg.det(r)) - 1.0)
    return max(gram, det)


def rotation_deviation(ra: np.ndarray, rb: np.ndarray) -> float:
    """Elementwise max |ra - rb|.

    Preferred over the trace-angle metric for near-identity comparisons,
    where acos amplifies sub-1e-9 orthonormality drift by orders of
    magnitude.
    """
    return float(np.max(np.abs(ra - rb)))


def _check_gap_angles(theta2_gap: float, arc_len: float) -> None:
    if not 0.0 <= theta2_gap < math.pi:
        raise DomainError(f"per-gap bend must be in [0, pi), got {theta2_gap}")
    if arc_len <= 0.0:
        raise DomainError(f"arc length must be positive, got {arc_len}")


def gap_transform(theta1: float, theta2_gap: float, arc_len: float) -> RigidTransform:
    """Closed-form constant-curvature arc for one gap.

    The bend plane is rotated theta1 about Z; within the plane the frame
    bends theta2_gap about Y while the origin advances along the arc chord:
    ((arc/theta)(1 - cos theta), 0, (arc/theta) sin theta). The plane
    rotation is conjugated back out so channel frames stay aligned.
    """
    _check_gap_angles(theta2_gap, arc_len)
    if theta2_gap == 0.0:
        return RigidTransform(
            rotation=np.eye(3), translation=np.array([0.0, 0.0, arc_len])
        )
    rz = rot_z(theta1)
    radius_arc = arc_len / theta2_gap
    in_plane = np.array(
        [
            radius_arc * (1.0 - math.cos(theta2_gap)),
            0.0,
            radius_arc * math.sin(theta2_gap),
        ]
    )
    return RigidTransform(
        rotation=rz @ rot_y(theta2_gap) @ rz.T,
        translation=rz @ in_plane,
    )


def pcc_numeric_oracle(
    theta1: float, theta2_gap: float, arc_len: float, n_steps: int
) -> RigidTransform:
    """Arc integrated as n_steps straight micro-segments; test oracle.

    Each micro-segment advances arc_len/n along local Z with the step's bend
    split half before, half after (midpoint rule, so the polygonal chain
    converges quadratically to the arc). The n-fold product is evaluated by
    repeated squaring of the homogeneous step matrix.
    """
    if n_steps < 1000:
        raise DomainError(f"n_steps must be >= 1000, got {n_steps}")
    _check_gap_angles(theta2_gap, arc_len)
    if theta2_gap == 0.0:
        return RigidTransform(
            rotation=np.eye(3), translation=np.array([0.0, 0.0, arc_len])
        )
    delta = theta2_gap / n_steps
    ds = arc_len / n_steps
    half = rot_y(0.5 * delta)
    step = np.eye(4)
    step[:3, :3] = half @ half
    step[:3, 3] = half @ np.array([0.0, 0.0, ds])
    total = np.linalg.matrix_power(step, n_steps)
    rz = rot_z(theta1)
    return RigidTransform(
        rotation=rz @ total[:3, :3] @ rz.T,
        translation=rz @ total[:3, 3],
    )


def spine_pose(model: SpineModel, cmds: list[SegmentCommand]) -> SpinePose:
    """Compose discs and gap arcs base to tip for a full command set.

    The polyline holds every disc's center (mid-height); the tip frame sits
    on the outer face of the last disc.
    """
    p = model.params
    if len(cmds) != p.num_segments:
        raise ValidationError(
            f"expected {p.num_segments} segment commands, got {len(cmds)}"
        )
    for cmd in cmds:
        if cmd.theta2 > p.theta2_max:
            raise ValidationError(
                f"theta2 exceeds theta2_max: {cmd.theta2:.6f} > {p.theta2_max:.6f}"
            )

    half_disc = RigidTransform(
        rotation=np.eye(3), translation=np.array([0.0, 0.0, 0.5 * p.disc_height])
    )
    frame = RigidTransform.identity()
    centers = []
    gap_tfs = []
    for cmd in cmds:
        theta_gap = cmd.theta2 / p.gaps_per_segment
        for disc in range(p.discs_per_segment):
            frame = frame.compose(half_disc)
            centers.append(frame.translation)
            frame = frame.compose(half_disc)
            if disc < p.gaps_per_segment:
                arc = gap_transform(cmd.theta1, theta_gap, p.gap_length_L)
                gap_tfs.append(arc)
                frame = frame.compose(arc)
    return SpinePose(
        tip=frame,
        polyline=np.array(centers),
        per_gap_transforms=tuple(gap_tfs),
    )


def tip_position(model: SpineModel, cmds: list[SegmentCommand]) -> np.ndarray:
    """Tip translation only; convenience for sweeps."""
    return spine_pose(model, cmds).tip.translation
