# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Scenario.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      YAML scenario schema and its validating parser.
# Function List:    Scenario: World, route, camera, planner, sensors,
#                   mission and run settings of one mission.
#                   parse_scenario: Load and validate a scenario file.
#                   build_world: Ground-truth SurfaceMesh of a scenario.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pydantic
import yaml
from pydantic import Field, model_validator

from ..Core import Pose
from ..Errors import IoError, ParseError, ValidationError
from ..Footprint import CameraModel
from ..Mission import LandmarkRoute, MissionSettings
from ..Planner import PlannerConfig
from ..Settings import FirstLookModel, error_key
from ..World import LidarModel, VehicleModel, load_mesh, make_surface, recede_face, surface_params

logger = logging.getLogger(__name__)

Vec3 = Tuple[float, float, float]


class RecedeSpec(FirstLookModel):
    direction: Vec3 = (1.0, 0.0, 0.0)
    distance: float = Field(ge=0.0)


class WorldSpec(FirstLookModel):
    '''Either a generator kind with params, or a mesh file.'''

    kind: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    mesh_path: Optional[str] = None
    recede: Optional[RecedeSpec] = None
    seed: int = Field(0, ge=0)

    @model_validator(mode='after')
    def _check_source(self):
        if (self.kind is None) == (self.mesh_path is None):
            raise ValueError('exactly one of kind and mesh_path is required')
        if self.kind is not None:
            surface_params(self.kind, self.params)
        return self


class CameraSpec(FirstLookModel):
    '''Camera as written in scenarios, angles in degrees.'''

    alpha_deg: float = Field(gt=0.0, lt=180.0)
    beta_deg: float = Field(gt=0.0, lt=180.0)
    gamma_h: float = Field(ge=0.0, le=1.0)
    gamma_v: float = Field(ge=0.0, le=1.0)

    def to_model(self):
        return CameraModel.from_degrees(self.alpha_deg, self.beta_deg, self.gamma_h, self.gamma_v)


class RouteSpec(FirstLookModel):
    landmarks: List[Vec3] = Field(min_length=1)
    locality_radius: Optional[float] = Field(None, gt=0.0)


class StartSpec(FirstLookModel):
    position: Vec3 = (0.0, 0.0, 0.0)
    yaw_deg: float = 0.0

    def to_pose(self):
        return Pose(self.position, math.radians(self.yaw_deg))


class RunSettings(FirstLookModel):
    '''Simulation settings of one run.'''

    max_ticks: int = Field(500, ge=1)
    seed: int = Field(0, ge=0)
    output_dir: str = 'output'
    stall_ticks: int = Field(100, ge=1)
    coverage_voxel: float = Field(1.0, gt=0.0)
    roi: Optional[Tuple[Vec3, Vec3]] = None
    reference_spacing: float = Field(0.5, gt=0.0)
    max_cloud_points: int = Field(1000000, ge=1)
    start: StartSpec = Field(default_factory=StartSpec)

    @model_validator(mode='after')
    def _check_roi(self):
        if self.roi is not None and not all(lo <= hi for lo, hi in zip(*self.roi)):
            raise ValueError('roi low corner must not exceed the high corner')
        return self


class Scenario(FirstLookModel):
    name: str = 'scenario'
    world: WorldSpec
    route: RouteSpec
    camera: CameraSpec
    planner: PlannerConfig
    lidar: LidarModel = Field(default_factory=LidarModel)
    vehicle: VehicleModel = Field(default_factory=VehicleModel)
    mission: MissionSettings = Field(default_factory=MissionSettings)
    run: RunSettings = Field(default_factory=RunSettings)
    # Directory relative paths are resolved against
    base_dir: str = '.'

    def camera_model(self):
        return self.camera.to_model()

    def landmark_route(self):
        if self.route.locality_radius is None:
            return LandmarkRoute.with_default_radius(self.route.landmarks,
                                                     self.camera_model(),
                                                     self.planner.d_view)
        return LandmarkRoute(landmarks=self.route.landmarks,
                             locality_radius=self.route.locality_radius)

    def resolve(self,
                path):
        path = Path(path)
        return path if path.is_absolute() else Path(self.base_dir) / path


def _node_line(root,
               loc):
    '''1-based line of the deepest YAML node reachable along loc.'''

    node = root
    line = node.start_mark.line + 1 if node is not None else None
    for part in loc:
        if isinstance(node, yaml.MappingNode):
            match = [(k, v) for k, v in node.value if k.value == str(part)]
            if not match:
                break
            key, node = match[0]
            line = key.start_mark.line + 1
        elif isinstance(node, yaml.SequenceNode) and isinstance(part, int) and part < len(node.value):
            node = node.value[part]
            line = node.start_mark.line + 1
        else:
            break
    return line


def parse_scenario(path):
    '''Load and validate a scenario file.

    Args:
        path: Path of the YAML scenario.

    Returns:
        scenario: The validated Scenario.

    Raises:
        IoError: If the file (or a referenced mesh) cannot be read.
        ParseError: On malformed YAML, with its line.
        ValidationError: On a schema or invariant violation, formatted as
            "<file>:<line>: <dotted.key>: <reason>".
    '''

    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise IoError('cannot read %s: %s' % (path, exc)) from exc
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, 'problem_mark', None)
        raise ParseError('%s: %s' % (path, getattr(exc, 'problem', None) or exc),
                         line=mark.line + 1 if mark is not None else None) from None
    if not isinstance(data, dict):
        raise ParseError('%s: scenario must be a mapping' % path, line=1)

    data = dict(data)
    data.setdefault('base_dir', str(path.parent))
    try:
        scenario = Scenario.model_validate(data)
    except pydantic.ValidationError as exc:
        lines = []
        for err in exc.errors():
            lines.append('%s:%s: %s: %s' % (path,
                                            _node_line(root, err['loc']),
                                            error_key(err['loc']) or '<root>',
                                            err['msg']))
        raise ValidationError('\n'.join(lines)) from exc

    if scenario.world.mesh_path is not None:
        mesh_path = scenario.resolve(scenario.world.mesh_path)
        if not mesh_path.is_file():
            raise ValidationError('%s:%s: world.mesh_path: file not found: %s'
                                  % (path, _node_line(root, ('world', 'mesh_path')), mesh_path))
    logger.info('Parsed scenario %r from %s', scenario.name, path)
    return scenario


def build_world(scenario):
    '''Ground-truth SurfaceMesh of the scenario, receded when configured.'''

    world = scenario.world
    if world.mesh_path is not None:
        mesh = load_mesh(scenario.resolve(world.mesh_path))
    else:
        mesh = make_surface(world.kind, world.params, seed=world.seed)
    if world.recede is not None:
        mesh = recede_face(mesh, world.recede.direction, world.recede.distance)
    return mesh
