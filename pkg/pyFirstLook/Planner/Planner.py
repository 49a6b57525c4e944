# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Planner.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      First-Look view planner: ego frame, next view-pose
#                   and receding-horizon path prediction from one
#                   LiDAR snapshot.
# Function List:    EgoFrame: Viewing, lateral and vertical unit axes.
#                   PlannerConfig: Viewing distance and horizon.
#                   PlanStep: One predicted view-pose.
#                   compute_frame: Ego frame toward the nearest point.
#                   next_view_pose: One view-pose update.
#                   predict_path: N recursive view-pose updates.
#                   plan_tick: One online planning tick.
#                   FirstLookPlanner: plan_tick with held reference.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass, field, replace
from typing import List, NamedTuple, Optional

import numpy as np
from pydantic import Field

from ..Core import Pose, build_index
from ..Errors import (CoincidentPoints, DegenerateViewDirection, EmptyCloud,
                      StepTooLarge)
from ..Footprint import overlap_steps, view_distance_deviation
from ..Mission import Phase, StepMode
from ..Settings import FirstLookModel

logger = logging.getLogger(__name__)

UP = np.array([0.0, 0.0, 1.0])


class EgoFrame(NamedTuple):
    nu_x: np.ndarray
    nu_y: np.ndarray
    nu_z: np.ndarray


class PlannerConfig(FirstLookModel):
    '''Planner parameters; the reference inspection uses d_view = 20 m, N = 5.

    step_scale_limit defaults to 2 * d_view when omitted.
    '''

    d_view: float = Field(gt=0.0)
    horizon_n: int = Field(ge=1)
    degeneracy_cos_limit: float = Field(0.999, gt=0.0, le=1.0)
    step_scale_limit: Optional[float] = Field(None, gt=0.0)

    @property
    def step_limit(self):
        if self.step_scale_limit is None:
            return 2.0 * self.d_view
        return self.step_scale_limit


@dataclass(frozen=True, eq=False)
class PlanStep(object):
    '''A predicted view-pose and the NN observation re-evaluated at it.

    d_insp / d_hov_applied / d_vov_applied are the displacements that
    produced the pose, taken along the frame of the previous pose.
    '''

    pose: Pose
    p_nn: np.ndarray
    nn_range: float
    d_insp: float
    d_hov_applied: float
    d_vov_applied: float
    step_mode: StepMode = StepMode.HORIZONTAL_STEP


def compute_frame(position,
                  p_nn,
                  up=UP,
                  cos_limit=0.999):
    '''Ego frame looking from position toward the nearest surface point.

    Both lateral and vertical axes are normalised, so steps along them are
    metric distances even when the viewing direction is inclined.

    Args:
        position: The viewer position.
        p_nn: The nearest surface point.
        up: Unit up vector.
        cos_limit: Largest |cos| between viewing direction and up.

    Returns:
        frame: EgoFrame(nu_x, nu_y, nu_z), right-handed.

    Raises:
        CoincidentPoints: If p_nn equals position.
        DegenerateViewDirection: If the viewing direction is (nearly)
            parallel to up.
    '''

    delta = np.asarray(p_nn, dtype=np.float64) - np.asarray(position, dtype=np.float64)
    dist = float(np.linalg.norm(delta))
    if dist <= 0.0:
        raise CoincidentPoints('nearest point coincides with position %s' % np.asarray(position).tolist())
    nu_x = delta / dist
    up = np.asarray(up, dtype=np.float64)
    if abs(float(np.dot(nu_x, up))) >= cos_limit:
        raise DegenerateViewDirection('viewing direction %s is parallel to up' % nu_x.round(6).tolist())
    nu_y = np.cross(up, nu_x)
    nu_y /= np.linalg.norm(nu_y)
    nu_z = np.cross(nu_x, nu_y)
    return EgoFrame(nu_x, nu_y, nu_z)


def frame_yaw(frame):
    return math.atan2(frame.nu_x[1], frame.nu_x[0])


def next_view_pose(odom,
                   p_nn,
                   d_insp,
                   d_hov,
                   d_vov,
                   cloud_index,
                   config):
    '''Next reference view-pose.

    The position steps along the frame at odom; the nearest point is then
    re-queried at the new position and the yaw faces it.

    Args:
        odom: Current pose (localization).
        p_nn: Nearest surface point to odom.
        d_insp: Signed step along nu_x [m].
        d_hov: Signed step along nu_y [m].
        d_vov: Signed step along nu_z [m].
        cloud_index: KdIndex of the current cloud.
        config: The PlannerConfig.

    Returns:
        step: PlanStep at the new pose.

    Raises:
        StepTooLarge: If the displacement exceeds config.step_limit.
        DegenerateViewDirection: At the old or the new position.
    '''

    frame = compute_frame(odom.position, p_nn, cos_limit=config.degeneracy_cos_limit)
    length = math.sqrt(d_insp * d_insp + d_hov * d_hov + d_vov * d_vov)
    if length > config.step_limit * (1.0 + 1e-12):
        raise StepTooLarge('step of %.3f m exceeds limit %.3f m' % (length, config.step_limit))
    position = odom.position + frame.nu_x * d_insp + frame.nu_y * d_hov + frame.nu_z * d_vov
    p_next, range_next, _ = cloud_index.query(position)
    frame_next = compute_frame(position, p_next, cos_limit=config.degeneracy_cos_limit)
    return PlanStep(pose=Pose(position, frame_yaw(frame_next)),
                    p_nn=p_next,
                    nn_range=range_next,
                    d_insp=float(d_insp),
                    d_hov_applied=float(d_hov),
                    d_vov_applied=float(d_vov))


def _mode_steps(camera,
                nn_range,
                step_mode,
                lateral_sign,
                vertical_sign):
    d_hov, d_vov = overlap_steps(camera, nn_range)
    if step_mode == StepMode.HORIZONTAL_STEP:
        return lateral_sign * d_hov, 0.0
    if step_mode == StepMode.VERTICAL_SWITCH:
        return 0.0, vertical_sign * d_vov
    return 0.0, 0.0


def predict_path(odom,
                 cloud,
                 config,
                 camera,
                 step_mode,
                 lateral_sign=1,
                 vertical_sign=-1,
                 index=None):
    '''Predict the inspection path over the horizon from one cloud.

    Every step treats the previous predicted pose as its localization and
    re-queries the same cloud. A VerticalSwitch applies to the first step
    only; the rest of the horizon continues horizontally with the lateral
    sign reversed.

    Args:
        odom: Current pose.
        cloud: The current PointCloud.
        config: The PlannerConfig.
        camera: The CameraModel.
        step_mode: StepMode of the first step.
        lateral_sign: +1 or -1 along nu_y.
        vertical_sign: +1 or -1 along nu_z for a vertical switch.
        index: Prebuilt KdIndex of cloud, optional.

    Returns:
        steps: List of at most horizon_n PlanSteps; shorter only when a
            degenerate view direction appears mid-horizon.

    Raises:
        EmptyCloud: If cloud has no points.
        DegenerateViewDirection: If the first step is degenerate.
    '''

    if len(cloud) == 0:
        raise EmptyCloud('cannot predict a path from an empty cloud')
    if index is None:
        index = build_index(cloud)

    pose = odom
    p_nn, nn_range, _ = index.query(odom.position)
    mode = step_mode
    steps = []
    for k in range(config.horizon_n):
        d_insp = view_distance_deviation(p_nn, pose.position, config.d_view)
        d_hov, d_vov = _mode_steps(camera, nn_range, mode, lateral_sign, vertical_sign)
        length = math.sqrt(d_insp * d_insp + d_hov * d_hov + d_vov * d_vov)
        if length > config.step_limit:
            scale = config.step_limit / length
            logger.warning('Step of %.2f m clamped to %.2f m', length, config.step_limit)
            d_insp, d_hov, d_vov = d_insp * scale, d_hov * scale, d_vov * scale
        try:
            step = next_view_pose(pose, p_nn, d_insp, d_hov, d_vov, index, config)
        except DegenerateViewDirection as exc:
            if k == 0:
                raise
            logger.warning('Prediction truncated at step %d/%d: %s', k + 1, config.horizon_n, exc)
            break
        step = replace(step, step_mode=mode)
        steps.append(step)
        pose, p_nn, nn_range = step.pose, step.p_nn, step.nn_range
        if mode == StepMode.VERTICAL_SWITCH:
            mode, lateral_sign = StepMode.HORIZONTAL_STEP, -lateral_sign
    return steps


@dataclass(frozen=True, eq=False)
class Observation(object):
    '''Nearest-neighbor observation at the odometry pose.'''

    p_nn: np.ndarray
    nn_range: float
    frame: Optional[EgoFrame]


@dataclass(frozen=True, eq=False)
class TickResult(object):
    reference: Pose
    predicted: List[PlanStep] = field(default_factory=list)
    diagnostic: Optional[str] = None
    observation: Optional[Observation] = None
    step_mode: Optional[StepMode] = None
    lateral_sign: int = 0


def plan_tick(odom,
              cloud,
              mission,
              config,
              camera,
              last_reference=None):
    '''One online planning tick.

    Outside Inspect the mission's own reference is returned. During
    Inspect, an empty frame or a degenerate view direction holds
    last_reference (or odom) and sets a diagnostic instead of raising.

    Args:
        odom: Current pose.
        cloud: Current LiDAR PointCloud (world frame).
        mission: The MissionExecutive.
        config: The PlannerConfig.
        camera: The CameraModel.
        last_reference: Reference of the previous tick.

    Returns:
        result: TickResult with the reference and the full prediction.
    '''

    observation = None
    diagnostic = None
    index = None
    if len(cloud) == 0:
        diagnostic = 'empty LiDAR frame'
    else:
        index = build_index(cloud)
        p_nn, nn_range, _ = index.query(odom.position)
        try:
            frame = compute_frame(odom.position, p_nn, cos_limit=config.degeneracy_cos_limit)
        except DegenerateViewDirection as exc:
            frame = None
            diagnostic = str(exc)
        observation = Observation(p_nn=p_nn, nn_range=nn_range, frame=frame)

    if mission.phase != Phase.INSPECT:
        return TickResult(reference=mission.reference(odom),
                          diagnostic=diagnostic,
                          observation=observation)

    held = last_reference if last_reference is not None else odom
    if observation is None or observation.frame is None:
        logger.warning('Holding previous reference: %s', diagnostic)
        return TickResult(reference=held, diagnostic=diagnostic, observation=observation)

    step_mode, lateral_sign, vertical_sign = mission.select_step(odom, observation.frame)
    try:
        predicted = predict_path(odom, cloud, config, camera, step_mode,
                                 lateral_sign, vertical_sign, index=index)
    except DegenerateViewDirection as exc:
        logger.warning('Holding previous reference: %s', exc)
        return TickResult(reference=held, diagnostic=str(exc), observation=observation)
    return TickResult(reference=mission.reference(odom, predicted[0].pose),
                      predicted=predicted,
                      diagnostic=diagnostic,
                      observation=observation,
                      step_mode=step_mode,
                      lateral_sign=lateral_sign)


class FirstLookPlanner(object):
    def __init__(self,
                 config,
                 camera) -> None:
        '''Initialize the planner.

        Args:
            config: The PlannerConfig.
            camera: The CameraModel.

        Returns:
            None
        '''

        self.config = config
        self.camera = camera
        self.last_reference = None

    def plan_tick(self,
                  odom,
                  cloud,
                  mission):
        result = plan_tick(odom, cloud, mission, self.config, self.camera, self.last_reference)
        self.last_reference = result.reference
        return result
