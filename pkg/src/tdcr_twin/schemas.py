"""Wire models for the teleoperation service.

Conventions: angles in degrees, lengths in mm, snake_case field names.
Quaternions are unit 4-vectors (w, x, y, z), dimensionless. Segments are
numbered from 1 (nearest the base) in messages and warnings.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class SegmentCommandIn(BaseModel):
    theta1_deg: float = Field(description="bend direction, degrees from +X about Z")
    theta2_deg: float = Field(description="total segment bend, degrees")


class CommandRequest(BaseModel):
    segments: list[SegmentCommandIn]


class TipPose(BaseModel):
    position_mm: list[float]
    quaternion_wxyz: list[float]


class SaturationWarning(BaseModel):
    segment: int  # 1-based
    channel: int
    rotation_deg: float
    message: str


class StateResponse(BaseModel):
    command: CommandRequest
    tip: TipPose
    polyline_mm: list[list[float]]
    tendon_pulls_mm: list[list[float]]
    motor_rotations_deg: list[list[float]]
    saturation_warnings: list[SaturationWarning]


class DerivedParams(BaseModel):
    theta2_max_deg: float
    total_length_mm: float
    segment_length_mm: float
    pulley_radii_mm: list[float]
    psi_max_deg: float


class ParamsResponse(BaseModel):
    params: dict  # configuration echoed in its own units (lengths mm, angles rad)
    derived: DerivedParams


class WorkspaceResponse(BaseModel):
    grid: str
    total: int
    count: int  # accepted samples = number of points
    points_mm: list[list[float]]
