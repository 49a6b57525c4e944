# -*- coding=utf-8 -*-

import math
from dataclasses import replace

import numpy as np
import pytest

from pyFirstLook.Core import Pose
from pyFirstLook.Errors import ValidationError
from pyFirstLook.Mission import (LandmarkRoute, MissionContext, MissionExecutive, MissionSettings, Phase,
                                 StepMode, advance_landmarks, commit_step, locality_distance,
                                 mission_reference, select_step)
from pyFirstLook.Planner import compute_frame

WALL_FRAME = compute_frame((0.0, 0.0, 10.0), (20.0, 0.0, 10.0))
START = Pose((-5.0, -42.0, 30.0))


@pytest.fixture
def route(camera):
    return LandmarkRoute.with_default_radius([(0.0, -30.0, 30.0), (0.0, 0.0, 30.0), (0.0, 30.0, 30.0)],
                                             camera, 20.0)


@pytest.fixture
def sweep_route(camera):
    return LandmarkRoute.with_default_radius([(0.0, -30.0, 45.0), (0.0, 30.0, 45.0)], camera, 20.0)


def _inspect(**kwargs):
    return replace(MissionContext.start(START), phase=Phase.INSPECT, **kwargs)


def test_default_locality_radius(route, expected_steps):
    assert route.locality_radius == pytest.approx(0.75 * expected_steps[0])
    assert route.locality_radius == pytest.approx(4.15, abs=0.01)


def test_route_needs_a_landmark():
    with pytest.raises(ValidationError):
        LandmarkRoute.build(landmarks=[], locality_radius=1.0)


def test_projected_locality_ignores_standoff():
    assert locality_distance((0.0, 0.0, 30.0), (5.0, 0.0, 30.0)) == pytest.approx(5.0)
    assert locality_distance((0.0, 0.0, 30.0), (5.0, 0.0, 30.0), view_axis=(1.0, 0.0, 0.0)) == 0.0
    # Only the horizontal part of the axis is used
    assert locality_distance((0.0, 0.0, 30.0), (5.0, 0.0, 33.0), view_axis=(1.0, 0.0, 1.0)) == pytest.approx(3.0)


def test_far_from_landmark_nothing_changes(route):
    ctx = MissionContext.start(START)
    assert advance_landmarks(ctx, (-5.0, -42.0, 30.0), route) == ctx


def test_first_landmark_starts_inspection(route):
    ctx = advance_landmarks(MissionContext.start(START), (0.0, -29.0, 30.0), route)
    assert ctx.phase == Phase.INSPECT
    assert ctx.active_landmark == 1


def test_overlapping_localities_captured_together(camera):
    route = LandmarkRoute.with_default_radius([(0.0, 0.0, 30.0), (0.0, 2.0, 30.0), (0.0, 50.0, 30.0)],
                                              camera, 20.0)
    ctx = advance_landmarks(_inspect(), (0.0, 1.0, 30.0), route)
    assert ctx.active_landmark == 2
    assert ctx.phase == Phase.INSPECT


def test_last_landmark_returns_home(route):
    ctx = advance_landmarks(_inspect(active_landmark=2), (0.0, 30.0, 30.0), route)
    assert ctx.phase == Phase.RETURN_HOME
    assert ctx.active_landmark == 2


def test_non_terminal_keeps_last_landmark(route):
    ctx = advance_landmarks(_inspect(active_landmark=2), (0.0, 30.0, 30.0), route, terminal=False)
    assert ctx.phase == Phase.INSPECT
    assert ctx.active_landmark == 2


def test_landmark_index_never_decreases(route):
    ctx = _inspect(active_landmark=2)
    # Back at the first landmark: already passed
    assert advance_landmarks(ctx, (0.0, -30.0, 30.0), route).active_landmark == 2


def test_single_pass_steps_toward_active_landmark(route):
    pose = Pose((-20.0, -10.0, 30.0))
    settings = MissionSettings()
    assert select_step(_inspect(active_landmark=1), pose, WALL_FRAME, route, settings) == \
        (StepMode.HORIZONTAL_STEP, 1)
    behind = _inspect(active_landmark=0)
    assert select_step(behind, pose, WALL_FRAME, route, settings) == (StepMode.HORIZONTAL_STEP, -1)


def test_lawnmower_switch_at_boundary(sweep_route):
    settings = MissionSettings(mode='lawnmower', rows=3)
    inside = Pose((-20.0, 20.0, 45.0))
    past = Pose((-20.0, 31.0, 45.0))
    assert select_step(_inspect(), inside, WALL_FRAME, sweep_route, settings) == (StepMode.HORIZONTAL_STEP, 1)
    assert select_step(_inspect(), past, WALL_FRAME, sweep_route, settings) == (StepMode.VERTICAL_SWITCH, 1)


def test_lawnmower_switch_reverses_sweep(sweep_route):
    settings = MissionSettings(mode='lawnmower', rows=3)
    ctx = commit_step(_inspect(), StepMode.VERTICAL_SWITCH)
    assert ctx.sweep_sign == -1
    assert ctx.row == 1
    # The tick after a switch never switches again
    past = Pose((-20.0, 31.0, 45.0))
    assert select_step(ctx, past, WALL_FRAME, sweep_route, settings) == (StepMode.HORIZONTAL_STEP, -1)
    ctx = commit_step(ctx, StepMode.HORIZONTAL_STEP)
    assert ctx.sweep_sign == -1
    assert ctx.step_mode == StepMode.HORIZONTAL_STEP


def test_lawnmower_reverse_boundary(sweep_route):
    settings = MissionSettings(mode='lawnmower', rows=3, boundary_margin=1.0)
    ctx = _inspect(sweep_sign=-1, row=1)
    assert select_step(ctx, Pose((-20.0, -30.5, 45.0)), WALL_FRAME, sweep_route, settings)[0] == \
        StepMode.HORIZONTAL_STEP
    assert select_step(ctx, Pose((-20.0, -31.5, 45.0)), WALL_FRAME, sweep_route, settings)[0] == \
        StepMode.VERTICAL_SWITCH


def test_lawnmower_rows_exhausted_holds(sweep_route):
    settings = MissionSettings(mode='lawnmower', rows=2)
    ctx = _inspect(row=1, sweep_sign=1)
    mode, _ = select_step(ctx, Pose((-20.0, 31.0, 45.0)), WALL_FRAME, sweep_route, settings)
    assert mode == StepMode.HOLD


def test_transit_reference_looks_ahead(route):
    ctx = MissionContext.start(START)
    pose = Pose((-5.0, -42.0, 30.0))
    reference = mission_reference(ctx, pose, None, route, MissionSettings())
    assert np.linalg.norm(reference.position - pose.position) == pytest.approx(10.0)
    heading = math.atan2(12.0, 5.0)
    assert reference.yaw == pytest.approx(heading)


def test_transit_reference_close_to_landmark(route):
    pose = Pose((0.0, -32.0, 30.0), 0.4)
    reference = mission_reference(MissionContext.start(START), pose, None, route, MissionSettings())
    assert reference.position.tolist() == [0.0, -30.0, 30.0]


def test_reference_per_phase(route):
    pose = Pose((1.0, 2.0, 3.0))
    planned = Pose((4.0, 5.0, 6.0), 0.1)
    settings = MissionSettings()
    assert mission_reference(_inspect(), pose, planned, route, settings) is planned
    assert mission_reference(_inspect(), pose, None, route, settings) is pose
    home = replace(_inspect(), phase=Phase.RETURN_HOME)
    assert mission_reference(home, pose, planned, route, settings) is START
    done = replace(_inspect(), phase=Phase.DONE)
    assert mission_reference(done, pose, planned, route, settings) is pose


def test_executive_runs_to_done(route):
    mission = MissionExecutive(route, MissionSettings(), START)
    assert mission.phase == Phase.TRANSIT
    axis = (1.0, 0.0, 0.0)
    mission.update((0.0, -30.0, 30.0))
    assert mission.phase == Phase.INSPECT
    mission.update((-20.0, 0.0, 30.0), axis, StepMode.HORIZONTAL_STEP)
    assert mission.ctx.active_landmark == 2
    mission.update((-20.0, 30.0, 30.0), axis, StepMode.HORIZONTAL_STEP)
    assert mission.phase == Phase.RETURN_HOME
    mission.update((-5.0, -30.0, 30.0))
    assert mission.phase == Phase.RETURN_HOME
    mission.update((-5.0, -42.0, 30.2))
    assert mission.phase == Phase.DONE


def test_euclidean_locality_needs_standoff_match(route):
    mission = MissionExecutive(route, MissionSettings(locality_mode='euclidean'), START)
    mission.ctx = _inspect(active_landmark=1)
    mission.update((-20.0, 0.0, 30.0), (1.0, 0.0, 0.0), StepMode.HORIZONTAL_STEP)
    assert mission.ctx.active_landmark == 1


def test_lawnmower_executive_finishes_after_last_row(sweep_route):
    settings = MissionSettings(mode='lawnmower', rows=2)
    mission = MissionExecutive(sweep_route, settings, START)
    mission.ctx = _inspect(active_landmark=1)
    axis = (1.0, 0.0, 0.0)
    # Landmark 1 lies at the end of the first row but is not terminal
    mission.update((-20.0, 30.0, 45.0), axis, StepMode.HORIZONTAL_STEP)
    assert mission.phase == Phase.INSPECT
    mission.update((-20.0, 31.0, 45.0), axis, StepMode.VERTICAL_SWITCH)
    assert mission.ctx.row == 1
    assert mission.phase == Phase.INSPECT
    mission.update((-20.0, -31.0, 41.7), axis, StepMode.HORIZONTAL_STEP)
    assert mission.phase == Phase.RETURN_HOME


def test_progress_key_tracks_discrete_progress(route):
    ctx = MissionContext.start(START)
    moved = advance_landmarks(ctx, (0.0, -30.0, 30.0), route)
    assert moved.progress_key() != ctx.progress_key()
    assert replace(ctx, step_mode=StepMode.HOLD).progress_key() == ctx.progress_key()
