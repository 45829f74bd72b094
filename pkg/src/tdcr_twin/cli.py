"""Command-line front end.

Thin adapters over the library: angles are degrees on the command line and
radians inside. Exit codes: 0 success, 2 validation failure, 3 environment
or IO failure. Data output contains no timestamps; identical inputs print
identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import socket
import sys

from .actuation import DEFAULT_PSI_MAX, PulleySet, default_pulleys, motor_rotations, saturated_motors
from .errors import TwinError, ValidationError
from .fk import spine_pose
from .spine import SpineModel, SpineParams, build_spine, load_params
from .tendons import SegmentCommand, segment_tendon_contractions
from .workspace import default_grid, export, grid_size, parse_grid_spec, stats, sweep


def _parse_pair(token: str) -> tuple[float, float]:
    parts = token.split(",")
    if len(parts) != 2:
        raise ValidationError(f"expected a 'theta1,theta2' degree pair, got {token!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise ValidationError(f"non-numeric angle in pair {token!r}")


def _load_model(args: argparse.Namespace) -> SpineModel:
    params = load_params(args.config) if args.config else SpineParams()
    return build_spine(params)


def _commands(model: SpineModel, tokens: list[str]) -> list[SegmentCommand]:
    n = model.params.num_segments
    if len(tokens) != n:
        raise ValidationError(f"expected {n} theta1,theta2 pairs, got {len(tokens)}")
    cmds = []
    for token in tokens:
        t1_deg, t2_deg = _parse_pair(token)
        cmds.append(SegmentCommand(math.radians(t1_deg), math.radians(t2_deg)))
    return cmds


def _pulleys(model: SpineModel, args: argparse.Namespace) -> PulleySet:
    psi_max = math.radians(args.psi_max)
    if args.pulley_radii is None:
        return default_pulleys(model, psi_max)
    try:
        radii = tuple(float(v) for v in args.pulley_radii.split(","))
    except ValueError:
        raise ValidationError(f"non-numeric pulley radius in {args.pulley_radii!r}")
    if len(radii) != model.params.num_segments:
        raise ValidationError(
            f"expected {model.params.num_segments} pulley radii, got {len(radii)}"
        )
    if any(r <= 0.0 for r in radii):
        raise ValidationError("pulley radii must be positive")
    return PulleySet(radii=radii, psi_max=psi_max)


def _print_channel_table(rows: list[tuple[float, float, float, float]], unit: str) -> None:
    head = "  ".join(f"{f'ch{c} ({unit})':>12s}" for c in range(4))
    print(f"{'segment':<8s}  {head}")
    for i, row in enumerate(rows, start=1):
        cells = "  ".join(f"{v:>12.6f}" for v in row)
        print(f"{i:<8d}  {cells}")


def cmd_fk(args: argparse.Namespace) -> int:
    model = _load_model(args)
    cmds = _commands(model, args.pairs)
    pose = spine_pose(model, cmds)
    x, y, z = pose.tip.translation
    print(f"tip position (mm): ({x:.6f}, {y:.6f}, {z:.6f})")
    w, qx, qy, qz = pose.tip.quaternion()
    print(f"tip quaternion (w, x, y, z): ({w:.6f}, {qx:.6f}, {qy:.6f}, {qz:.6f})")
    if args.polyline:
        points = [[round(float(v), 9) for v in p] for p in pose.polyline]
        print(json.dumps(points))
    return 0


def cmd_tendons(args: argparse.Namespace) -> int:
    model = _load_model(args)
    cmds = _commands(model, args.pairs)
    pulls = [segment_tendon_contractions(model, c) for c in cmds]
    print("tendon pulls per channel:")
    _print_channel_table([p.s for p in pulls], "mm")
    return 0


def cmd_motors(args: argparse.Namespace) -> int:
    model = _load_model(args)
    cmds = _commands(model, args.pairs)
    pulleys = _pulleys(model, args)
    pulls = [segment_tendon_contractions(model, c) for c in cmds]
    motors = motor_rotations(pulls, pulleys)
    print("motor rotations per channel:")
    degree_rows = [tuple(math.degrees(psi) for psi in row) for row in motors.rotations]
    _print_channel_table(degree_rows, "deg")
    for segment, channel in saturated_motors(motors):
        print(f"note: motor (segment {segment + 1}, channel {channel}) at servo limit")
    return 0


def cmd_workspace(args: argparse.Namespace) -> int:
    model = _load_model(args)
    grid = parse_grid_spec(args.grid, model) if args.grid else default_grid(model)
    samples = sweep(model, grid)
    summary = stats(samples)
    assert summary.total == grid_size(model, grid)
    print(f"{summary.total} samples, {summary.accepted_count} accepted")
    for axis, lo, hi in zip("xyz", summary.min_xyz, summary.max_xyz):
        print(f"extent {axis} (mm): [{lo:.6f}, {hi:.6f}]")
    print(f"max radius (mm): {summary.max_radius:.6f}")
    cx, cy, cz = summary.centroid
    print(f"centroid (mm): ({cx:.6f}, {cy:.6f}, {cz:.6f})")
    if args.out:
        export(samples, args.format, args.out)
        print(f"wrote {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    params = load_params(args.config) if args.config else SpineParams()
    app = create_app(params=params)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError:
        print(f"error: port {args.port} is busy", file=sys.stderr)
        return 3
    finally:
        probe.close()
    print(f"listening on :{args.port}", flush=True)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdcr-twin",
        description="Digital twin of a 3-segment tendon-driven continuum manipulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="spine parameters JSON file")

    pairs_help = "per-segment theta1,theta2 pair in degrees (one per segment)"

    p_fk = sub.add_parser("fk", parents=[common], help="tip pose for a command set")
    p_fk.add_argument("pairs", nargs="+", metavar="T1,T2", help=pairs_help)
    p_fk.add_argument("--polyline", action="store_true", help="also print disc centers as JSON")
    p_fk.set_defaults(func=cmd_fk)

    p_t = sub.add_parser("tendons", parents=[common], help="per-channel tendon pulls")
    p_t.add_argument("pairs", nargs="+", metavar="T1,T2", help=pairs_help)
    p_t.set_defaults(func=cmd_tendons)

    p_m = sub.add_parser("motors", parents=[common], help="motor rotations after coupling")
    p_m.add_argument("pairs", nargs="+", metavar="T1,T2", help=pairs_help)
    p_m.add_argument("--psi-max", type=float, default=math.degrees(DEFAULT_PSI_MAX),
                     help="servo range in degrees (default 180)")
    p_m.add_argument("--pulley-radii", help="explicit per-segment radii, mm, comma-separated")
    p_m.set_defaults(func=cmd_motors)

    p_w = sub.add_parser("workspace", parents=[common], help="sweep the command grid")
    p_w.add_argument("--grid", help="grid spec: counts '4x3' or degree lists '0,90x30,60,90'")
    p_w.add_argument("--out", help="output file path")
    p_w.add_argument("--format", choices=("csv", "ply"), default="csv")
    p_w.set_defaults(func=cmd_workspace)

    p_s = sub.add_parser("serve", parents=[common], help="run the teleoperation service")
    p_s.add_argument("--port", type=int, default=8000)
    p_s.add_argument("--host", default="127.0.0.1")
    p_s.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: invalid config JSON: {exc}", file=sys.stderr)
        return 2
    except TwinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
