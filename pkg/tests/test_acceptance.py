# -*- coding=utf-8 -*-
'''End-to-end missions over the bundled scenarios, checked from their run logs.'''

import math
import time

import numpy as np
import pytest

from pyFirstLook.Cli import build_world, run_mission
from pyFirstLook.Core import PointCloud, downsample
from pyFirstLook.Footprint import overlap_steps
from pyFirstLook.Metrics import cloud_to_cloud, overlap_fractions

D_VIEW = 20.0


def _inspect(log):
    return [r for r in log.records if r.phase == 'Inspect']


def test_planar_wall_regulates_range_and_overlap(bundled_run, camera):
    scenario, result = bundled_run('planar_wall')
    assert result.status == 'Done'
    assert len(result.log) < 50

    inspect = _inspect(result.log)
    assert len(inspect) >= 10
    errors = np.array([abs(r.nn_range - D_VIEW) for r in inspect])
    assert errors.max() < 0.25

    fractions = overlap_fractions(result.log.records, camera)
    assert len(fractions) >= 8
    assert float(np.median(fractions)) == pytest.approx(0.8, abs=0.02)
    assert result.report.overlap.median == pytest.approx(0.8, abs=0.02)
    assert result.report.landmarks_reached == len(scenario.route.landmarks)
    assert result.report.coverage_fraction > 0.0


def test_receded_wall_tracks_new_face(bundled_run, waypoint_replay):
    scenario, result = bundled_run('receded_wall')
    assert result.status == 'Done'
    errors = np.array([abs(r.nn_range - D_VIEW) for r in _inspect(result.log)])
    assert float(np.median(errors)) < 0.25
    assert result.report.view_error.median < 0.25

    baseline = waypoint_replay(build_world(scenario), scenario.route.landmarks, D_VIEW)
    assert float(np.median(baseline)) == pytest.approx(5.0, abs=0.1)

    # Flown standoff follows the face at x = 25
    xs = np.array([r.odom[0] for r in _inspect(result.log)[1:]])
    assert np.allclose(xs, 5.0, atol=0.25)


def test_corner_is_rounded(bundled_run):
    _, result = bundled_run('corner')
    assert result.status == 'Done'
    inspect = _inspect(result.log)
    ranges = np.array([r.nn_range for r in inspect])
    assert np.all(np.abs(ranges - D_VIEW) < 0.1 * D_VIEW)

    # The first Inspect tick still carries the transit heading
    yaws = np.array([r.odom[3] for r in inspect[1:]])
    assert np.all(np.diff(yaws) <= 0.05)
    assert math.degrees(yaws[0]) == pytest.approx(0.0, abs=5.0)
    assert math.degrees(yaws[-1]) == pytest.approx(-90.0, abs=5.0)


def test_lawnmower_protocol(bundled_run, camera):
    scenario, result = bundled_run('lawnmower')
    assert result.status == 'Done'
    records = result.log.records

    switches = [k for k, r in enumerate(records) if r.step_mode == 'VerticalSwitch']
    assert len(switches) == 2
    first, second = (records[k] for k in switches)
    assert first.odom[1] > 0.0 > second.odom[1]

    _, d_vov = overlap_steps(camera, D_VIEW)
    for k in switches:
        before, after = records[k], records[k + 1]
        assert after.odom[2] == pytest.approx(before.odom[2] - d_vov, abs=0.1)
        assert after.odom[1] == pytest.approx(before.odom[1], abs=0.1)

    # Each row sweeps the opposite way from the one before
    signs = [records[k + 1].lateral_sign for k in switches]
    assert signs[0] == -records[switches[0] - 1].lateral_sign
    assert signs[1] == -signs[0]
    assert result.report.vertical_switches == 2


def test_landmarks_advance_and_mission_returns_home(bundled_run):
    scenario, result = bundled_run('planar_wall')
    records = result.log.records
    route = scenario.landmark_route()
    start = scenario.run.start.to_pose()

    active = [r.active_landmark for r in records]
    assert active == sorted(active)

    # Inspection ends inside the last landmark's locality
    end = next(r for r in records if r.phase_after == 'ReturnHome')
    assert end.phase == 'Inspect'
    assert abs(end.odom[1] - route.landmarks[-1][1]) <= route.locality_radius

    homeward = [r for r in records if r.phase == 'ReturnHome']
    assert homeward
    for r in homeward:
        assert r.reference[:3] == pytest.approx(tuple(start.position))
    assert records[-1].phase_after == 'Done'
    assert np.linalg.norm(np.array(records[-1].odom[:3]) - start.position) <= 0.5


def test_runs_are_bit_identical(tmp_path, bundled_run):
    scenario, _ = bundled_run('feiring_like')
    scenario = scenario.model_copy(update={'run': scenario.run.model_copy(update={'max_ticks': 40})})
    first = run_mission(scenario, tmp_path / 'first')
    second = run_mission(scenario, tmp_path / 'second')
    assert first.status == second.status
    assert first.report == second.report
    for name in ('run_log.csv', 'metrics_report.json', 'observed_cloud.ply', 'cloud_to_cloud.json'):
        assert (tmp_path / 'first' / name).read_bytes() == (tmp_path / 'second' / name).read_bytes()


def test_rough_face_keeps_standoff(bundled_run):
    _, result = bundled_run('feiring_like')
    errors = np.array([abs(r.nn_range - D_VIEW) for r in _inspect(result.log)])
    assert errors.size > 0
    assert float(np.median(errors)) < 1.0


def test_million_point_comparison_is_fast():
    rng = np.random.default_rng(2024)
    ys, zs = rng.uniform(0.0, 100.0, size=(2, 1000000))
    reference = PointCloud(np.column_stack([np.full(ys.size, 20.0), ys, zs]))
    measured = PointCloud(reference.points + rng.normal(0.0, 0.05, size=reference.points.shape))

    started = time.perf_counter()
    sample = downsample(measured, 500000, seed=1)
    result = cloud_to_cloud(sample, reference)
    elapsed = time.perf_counter() - started

    assert result.count == 500000
    assert result.mean < 0.1
    assert elapsed < 30.0
