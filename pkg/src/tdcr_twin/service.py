"""HTTP teleoperation service.

Stateless JSON API over the twin: the client owns the "current pose" and the
server recomputes tendons, motors, and forward kinematics per request.
Malformed request shapes get 400 with field-level details; well-formed
commands whose values violate a range (bend past theta2_max, servo past
psi_max) get 422. Built UI assets, when present, are served at /.
"""

from __future__ import annotations

import math
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .actuation import (
    MotorCommand,
    PulleySet,
    default_pulleys,
    motor_rotations,
    saturated_motors,
)
from .errors import RangeExceeded, TwinError, ValidationError
from .fk import spine_pose
from .schemas import (
    CommandRequest,
    DerivedParams,
    ParamsResponse,
    SaturationWarning,
    StateResponse,
    TipPose,
    WorkspaceResponse,
)
from .spine import SpineModel, SpineParams, build_spine, params_to_dict
from .tendons import SegmentCommand, segment_tendon_contractions
from .workspace import default_grid, grid_size, parse_grid_spec, sweep


def _commands_from_request(request: CommandRequest) -> list[SegmentCommand]:
    return [
        SegmentCommand(math.radians(s.theta1_deg), math.radians(s.theta2_deg))
        for s in request.segments
    ]


def _saturation_warnings(motors: MotorCommand) -> list[SaturationWarning]:
    warnings = []
    for segment, channel in saturated_motors(motors):
        psi = motors.rotations[segment][channel]
        warnings.append(
            SaturationWarning(
                segment=segment + 1,
                channel=channel,
                rotation_deg=math.degrees(psi),
                message=f"motor (segment {segment + 1}, channel {channel}) "
                f"at servo limit",
            )
        )
    return warnings


def compute_state(
    model: SpineModel, pulleys: PulleySet, request: CommandRequest
) -> StateResponse:
    """Tendons, motors, and FK for one command; shared by HTTP and CLI.

    The echoed command carries the caller's degree values unchanged so
    clients can match a response to the controls that produced it.
    """
    if len(request.segments) != model.params.num_segments:
        raise ValidationError(
            f"expected {model.params.num_segments} segments, got {len(request.segments)}"
        )
    cmds = _commands_from_request(request)
    pulls = [segment_tendon_contractions(model, c) for c in cmds]
    motors = motor_rotations(pulls, pulleys)
    pose = spine_pose(model, cmds)
    return StateResponse(
        command=request,
        tip=TipPose(
            position_mm=[float(v) for v in pose.tip.translation],
            quaternion_wxyz=list(pose.tip.quaternion()),
        ),
        polyline_mm=[[float(v) for v in p] for p in pose.polyline],
        tendon_pulls_mm=[list(p.s) for p in pulls],
        motor_rotations_deg=[
            [math.degrees(psi) for psi in row] for row in motors.rotations
        ],
        saturation_warnings=_saturation_warnings(motors),
    )


def _default_static_dir() -> Path | None:
    # Editable checkout layout: <root>/src/tdcr_twin/service.py, <root>/frontend/dist.
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def create_app(
    params: SpineParams | None = None,
    static_dir: str | Path | None = None,
    psi_max: float = math.pi,
) -> FastAPI:
    model = build_spine(params if params is not None else SpineParams())
    pulleys = default_pulleys(model, psi_max)
    app = FastAPI(title="tdcr-twin teleoperation service")

    workspace_cache: dict[str, WorkspaceResponse] = {}
    cache_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def _malformed(request, exc):
        return JSONResponse(status_code=400, content={"detail": jsonable_encoder(exc.errors())})

    @app.get("/api/params", response_model=ParamsResponse)
    def get_params() -> ParamsResponse:
        return ParamsResponse(
            params=params_to_dict(model.params),
            derived=DerivedParams(
                theta2_max_deg=math.degrees(model.params.theta2_max),
                total_length_mm=model.total_length_H,
                segment_length_mm=model.segment_backbone_length,
                pulley_radii_mm=list(pulleys.radii),
                psi_max_deg=math.degrees(pulleys.psi_max),
            ),
        )

    @app.post("/api/command", response_model=StateResponse)
    def post_command(request: CommandRequest) -> StateResponse:
        if len(request.segments) != model.params.num_segments:
            raise HTTPException(
                status_code=400,
                detail=f"expected {model.params.num_segments} segments, "
                f"got {len(request.segments)}",
            )
        try:
            return compute_state(model, pulleys, request)
        except RangeExceeded as exc:
            raise HTTPException(
                status_code=422,
                detail={
                    "message": str(exc),
                    "segment": exc.segment + 1,
                    "channel": exc.channel,
                    "overshoot_rad": exc.overshoot,
                },
            )
        except TwinError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/api/workspace", response_model=WorkspaceResponse)
    def get_workspace(grid: str | None = Query(default=None)) -> WorkspaceResponse:
        key = grid.strip() if grid else "default"
        with cache_lock:
            cached = workspace_cache.get(key)
        if cached is not None:
            return cached
        try:
            g = parse_grid_spec(key, model) if key != "default" else default_grid(model)
        except TwinError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        samples = sweep(model, g)
        response = WorkspaceResponse(
            grid=key,
            total=grid_size(model, g),
            count=sum(1 for s in samples if s.accepted),
            points_mm=[[float(v) for v in s.tip] for s in samples if s.accepted],
        )
        with cache_lock:
            workspace_cache[key] = response
        return response

    ui_dir = Path(static_dir) if static_dir is not None else _default_static_dir()
    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:
        @app.get("/")
        def index():
            return {
                "service": "tdcr-twin teleoperation service",
                "endpoints": ["/api/params", "/api/command", "/api/workspace"],
                "ui": "not built",
            }

    return app
