import math

import pytest
from fastapi.testclient import TestClient

from tdcr_twin.actuation import default_pulleys, motor_rotations
from tdcr_twin.fk import spine_pose
from tdcr_twin.service import create_app
from tdcr_twin.spine import SpineParams, build_spine
from tdcr_twin.tendons import SegmentCommand, segment_tendon_contractions


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def command_body(*pairs):
    return {"segments": [{"theta1_deg": t1, "theta2_deg": t2} for t1, t2 in pairs]}


ZERO = command_body((0, 0), (0, 0), (0, 0))


def test_params_defaults(client):
    body = client.get("/api/params").json()
    assert body["params"]["num_segments"] == 3
    assert body["params"]["discs_per_segment"] == 5
    assert body["derived"]["total_length_mm"] == 180.0
    assert body["derived"]["theta2_max_deg"] == pytest.approx(90.0)
    assert len(body["derived"]["pulley_radii_mm"]) == 3


def test_params_echo_custom_config():
    params = SpineParams(gap_length_L=8.0, tendon_pitch_D=5.0, disc_diameter=12.0)
    app = create_app(params=params)
    body = TestClient(app).get("/api/params").json()
    assert body["params"]["gap_length_L"] == 8.0
    assert body["params"]["tendon_pitch_D"] == 5.0


def test_params_stable_across_calls(client):
    assert client.get("/api/params").text == client.get("/api/params").text


def test_command_zero(client):
    r = client.post("/api/command", json=ZERO)
    assert r.status_code == 200
    body = r.json()
    assert body["tip"]["position_mm"] == pytest.approx([0.0, 0.0, 180.0], abs=1e-9)
    assert body["tip"]["quaternion_wxyz"] == pytest.approx([1.0, 0.0, 0.0, 0.0], abs=1e-12)
    assert len(body["polyline_mm"]) == 15
    assert body["saturation_warnings"] == []
    assert body["command"] == ZERO


def test_command_motor_table_cross_module(client):
    r = client.post("/api/command", json=command_body((0, 90), (0, 0), (0, 0)))
    body = r.json()
    ch0 = [row[0] for row in body["motor_rotations_deg"]]
    assert ch0 == pytest.approx([180.0, 90.0, 60.0], abs=1e-7)
    warnings = body["saturation_warnings"]
    assert len(warnings) == 1
    assert warnings[0]["segment"] == 1
    assert warnings[0]["channel"] == 0


def test_command_matches_direct_library_composition(client):
    pairs = ((30, 45), (120, 60), (200, 20))
    r = client.post("/api/command", json=command_body(*pairs))
    body = r.json()

    model = build_spine(SpineParams())
    pulleys = default_pulleys(model)
    cmds = [SegmentCommand(math.radians(a), math.radians(b)) for a, b in pairs]
    pulls = [segment_tendon_contractions(model, c) for c in cmds]
    motors = motor_rotations(pulls, pulleys)
    pose = spine_pose(model, cmds)

    assert body["tip"]["position_mm"] == pytest.approx(list(pose.tip.translation), abs=1e-12)
    for got, want in zip(body["tendon_pulls_mm"], pulls):
        assert got == pytest.approx(list(want.s), abs=1e-12)
    for got, want in zip(body["motor_rotations_deg"], motors.rotations):
        assert got == pytest.approx([math.degrees(v) for v in want], abs=1e-12)


def test_command_range_violation_is_422(client):
    r = client.post("/api/command", json=command_body((0, 200), (0, 0), (0, 0)))
    assert r.status_code == 422
    assert "theta2 exceeds theta2_max" in r.json()["detail"]


def test_command_negative_theta2_is_422(client):
    r = client.post("/api/command", json=command_body((0, -5), (0, 0), (0, 0)))
    assert r.status_code == 422


def test_command_wrong_segment_count_is_400(client):
    r = client.post("/api/command", json=command_body((0, 0)))
    assert r.status_code == 400


def test_command_malformed_is_400_with_field_detail(client):
    r = client.post(
        "/api/command",
        json={"segments": [{"theta1_deg": "up", "theta2_deg": 0}] * 3},
    )
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert any("theta1_deg" in str(item.get("loc", ())) for item in detail)


def test_workspace_default(client):
    body = client.get("/api/workspace").json()
    assert body["total"] == 1728
    assert body["count"] == len(body["points_mm"])
    assert body["count"] <= 1728
    assert all(p[2] >= 0.0 for p in body["points_mm"])


def test_workspace_cache_identical_bodies(client):
    first = client.get("/api/workspace", params={"grid": "2x2"})
    second = client.get("/api/workspace", params={"grid": "2x2"})
    assert first.text == second.text


def test_workspace_small_grid(client):
    body = client.get("/api/workspace", params={"grid": "1x1"}).json()
    assert body["total"] == 1
    assert body["count"] <= 1


def test_workspace_bad_spec_is_400(client):
    assert client.get("/api/workspace", params={"grid": "nope"}).status_code == 400


def test_root_without_ui_reports_endpoints():
    app = create_app(static_dir="/nonexistent/dist")
    body = TestClient(app).get("/").json()
    assert "/api/command" in body["endpoints"]


def test_static_ui_served_when_built(tmp_path):
    dist = tmp_path / "dist"
    dist.mkdir()
    (dist / "index.html").write_text("<!doctype html><p>panel</p>")
    app = create_app(static_dir=dist)
    r = TestClient(app).get("/")
    assert r.status_code == 200
    assert "panel" in r.text
