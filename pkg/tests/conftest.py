# -*- coding=utf-8 -*-

import math
from pathlib import Path

import numpy as np
import pytest
import yaml

from pyFirstLook.Cli import parse_scenario, run_mission
from pyFirstLook.Core import PointCloud, build_index
from pyFirstLook.Footprint import CameraModel
from pyFirstLook.Planner import PlannerConfig
from pyFirstLook.World import sample_surface

SCENARIO_DIR = Path(__file__).resolve().parent.parent / 'scenarios'

# Reference inspection parameters
D_VIEW = 20.0
ALPHA_DEG = 69.4
BETA_DEG = 45.0
GAMMA = 0.8
HORIZON_N = 5


@pytest.fixture
def camera():
    return CameraModel.from_degrees(ALPHA_DEG, BETA_DEG, GAMMA, GAMMA)


@pytest.fixture
def planner_config():
    return PlannerConfig(d_view=D_VIEW, horizon_n=HORIZON_N)


@pytest.fixture
def expected_steps():
    '''Closed-form d_hov, d_vov at range d_view, computed independently.'''

    d_hov = 2.0 * math.tan(math.radians(ALPHA_DEG) / 2.0) * D_VIEW * (1.0 - GAMMA)
    d_vov = 2.0 * math.tan(math.radians(BETA_DEG) / 2.0) * D_VIEW * (1.0 - GAMMA)
    return d_hov, d_vov


@pytest.fixture
def make_wall_cloud():
    '''Factory of dense grid clouds on the plane x = x0.'''

    def factory(x0=20.0,
                y_range=(-10.0, 40.0),
                z_range=(0.0, 20.0),
                spacing=0.1):
        ys = np.arange(y_range[0], y_range[1] + 0.5 * spacing, spacing)
        zs = np.arange(z_range[0], z_range[1] + 0.5 * spacing, spacing)
        yy, zz = np.meshgrid(ys, zs, indexing='ij')
        points = np.column_stack([np.full(yy.size, x0), yy.ravel(), zz.ravel()])
        return PointCloud(points)

    return factory


@pytest.fixture
def make_corner_cloud():
    '''Factory of dense clouds on an external 90 deg corner at (x0, 0).

    Face A is x = x0 for y <= 0, face B is y = 0 for x >= x0.
    '''

    def factory(x0=20.0,
                length=40.0,
                z_range=(0.0, 20.0),
                spacing=0.1):
        s = np.arange(0.0, length + 0.5 * spacing, spacing)
        zs = np.arange(z_range[0], z_range[1] + 0.5 * spacing, spacing)
        ss, zz = np.meshgrid(s, zs, indexing='ij')
        face_a = np.column_stack([np.full(ss.size, x0), -ss.ravel(), zz.ravel()])
        face_b = np.column_stack([x0 + ss.ravel(), np.zeros(ss.size), zz.ravel()])
        # The edge column belongs to face A only
        return PointCloud(np.vstack([face_a, face_b[zs.size:]]))

    return factory


@pytest.fixture
def waypoint_replay():
    '''Baseline that flies the landmarks literally.

    Returns a function giving |range - d_view| at every landmark, where
    range is the distance to the nearest point of the densely sampled
    ground-truth mesh.
    '''

    def baseline(mesh,
                 landmarks,
                 d_view,
                 spacing=0.25):
        index = build_index(sample_surface(mesh, spacing))
        return np.array([abs(index.query(lm)[1] - d_view) for lm in landmarks])

    return baseline


@pytest.fixture
def scenario_path():
    def path(name):
        return SCENARIO_DIR / ('%s.yaml' % name)

    return path


@pytest.fixture
def scenario_copy(tmp_path):
    '''Copy a bundled scenario under tmp_path, outputs going to tmp_path/out.

    Keyword arguments update the named top-level sections (dicts are
    merged, anything else replaces the section).
    '''

    def copy(name,
             **sections):
        with open(SCENARIO_DIR / ('%s.yaml' % name), 'r', encoding='utf-8') as scenario_file:
            data = yaml.safe_load(scenario_file)
        data.setdefault('run', {})['output_dir'] = 'out'
        for section, values in sections.items():
            if isinstance(values, dict):
                data.setdefault(section, {}).update(values)
            else:
                data[section] = values
        path = tmp_path / ('%s.yaml' % name)
        path.write_text(yaml.safe_dump(data, sort_keys=False), encoding='utf-8')
        return path

    return copy


@pytest.fixture(scope='session')
def bundled_run(tmp_path_factory):
    '''Run a bundled scenario once per session; returns (scenario, RunResult).'''

    cache = {}

    def run(name):
        if name not in cache:
            scenario = parse_scenario(SCENARIO_DIR / ('%s.yaml' % name))
            cache[name] = scenario, run_mission(scenario, tmp_path_factory.mktemp(name))
        return cache[name]

    return run
