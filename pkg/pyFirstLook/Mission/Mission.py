# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Mission.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Mission executive: operator landmarks, locality
#                   based advancement, sweep and step-mode selection
#                   (including the vertical overlap switch), return to
#                   the starting position.
# Function List:    LandmarkRoute: Operator waypoints and locality.
#                   MissionSettings: Sweep, transit and capture settings.
#                   MissionContext: Phase and sweep state of a mission.
#                   advance_landmarks: Capture landmarks in locality.
#                   select_step: Pick step mode and lateral sign.
#                   commit_step: Record the step mode of a tick.
#                   mission_reference: Reference pose for the phase.
#                   MissionExecutive: Owns and advances one context.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import Field

from ..Core import Pose
from ..Footprint import overlap_steps
from ..Settings import FirstLookModel

logger = logging.getLogger(__name__)

# Default locality radius as a fraction of the lateral step at d_view
LOCALITY_FACTOR = 0.75


class Phase(str, Enum):
    TRANSIT = 'Transit'
    INSPECT = 'Inspect'
    RETURN_HOME = 'ReturnHome'
    DONE = 'Done'


PHASE_ORDER = (Phase.TRANSIT, Phase.INSPECT, Phase.RETURN_HOME, Phase.DONE)


class StepMode(str, Enum):
    '''Which overlap step the planner applies on a tick.

    HorizontalStep forces d_vov to 0, VerticalSwitch forces d_hov to 0 for
    one tick, Hold applies neither (range regulation only).
    '''

    HORIZONTAL_STEP = 'HorizontalStep'
    VERTICAL_SWITCH = 'VerticalSwitch'
    HOLD = 'Hold'


class LandmarkRoute(FirstLookModel):
    '''Operator-defined advisory waypoints, world frame.'''

    landmarks: List[Tuple[float, float, float]] = Field(min_length=1)
    locality_radius: float = Field(gt=0.0)

    @classmethod
    def with_default_radius(cls,
                            landmarks,
                            camera,
                            d_view):
        '''Route whose locality radius is 0.75 of the lateral step at d_view.'''

        d_hov, _ = overlap_steps(camera, d_view)
        return cls.build(landmarks=landmarks, locality_radius=LOCALITY_FACTOR * d_hov)

    def __len__(self):
        return len(self.landmarks)

    def landmark(self,
                 index):
        return np.asarray(self.landmarks[index], dtype=np.float64)

    def axis(self):
        '''Horizontal unit direction from the first to the last landmark.

        Returns:
            axis: The unit vector, or None when the two coincide horizontally.
            length: The horizontal distance between them.
        '''

        delta = self.landmark(-1) - self.landmark(0)
        delta[2] = 0.0
        length = float(np.linalg.norm(delta))
        if length <= 1e-9:
            return None, 0.0
        return delta / length, length


class MissionSettings(FirstLookModel):
    mode: Literal['single-pass', 'lawnmower'] = 'single-pass'
    locality_mode: Literal['projected', 'euclidean'] = 'projected'
    rows: int = Field(1, ge=1)
    boundary_margin: float = Field(0.0, ge=0.0)
    vertical_direction: Literal[-1, 1] = -1
    transit_altitude: Optional[float] = None
    transit_lookahead: float = Field(10.0, gt=0.0)
    home_tolerance: float = Field(0.5, gt=0.0)


@dataclass(frozen=True)
class MissionContext(object):
    phase: Phase
    active_landmark: int
    sweep_sign: int
    start_pose: Pose
    step_mode: StepMode = StepMode.HORIZONTAL_STEP
    row: int = 0

    @classmethod
    def start(cls,
              start_pose):
        return cls(phase=Phase.TRANSIT,
                   active_landmark=0,
                   sweep_sign=1,
                   start_pose=start_pose)

    def progress_key(self):
        '''Tuple that changes whenever the mission makes discrete progress.'''

        return (PHASE_ORDER.index(self.phase), self.active_landmark, self.row)


def _sign(val):
    return -1 if val < 0.0 else 1


def locality_distance(position,
                      landmark,
                      view_axis=None):
    '''Distance used for landmark capture.

    With a view_axis, the component along its horizontal projection is
    removed first, so the standoff to the surface does not count.
    '''

    delta = np.asarray(landmark, dtype=np.float64) - np.asarray(position, dtype=np.float64)
    if view_axis is not None:
        axis = np.array(view_axis, dtype=np.float64)
        axis[2] = 0.0
        norm = np.linalg.norm(axis)
        if norm > 1e-12:
            axis /= norm
            delta = delta - np.dot(delta, axis) * axis
    return float(np.linalg.norm(delta))


def advance_landmarks(ctx,
                      position,
                      route,
                      view_axis=None,
                      terminal=True):
    '''Capture every consecutive landmark whose locality contains position.

    Args:
        ctx: The MissionContext, phase Transit or Inspect.
        position: Current vehicle position.
        route: The LandmarkRoute.
        view_axis: Viewing direction for projected capture during Inspect;
            None measures the plain Euclidean distance.
        terminal: When False the last landmark is never captured, so the
            mission keeps inspecting (lawnmower rows left).

    Returns:
        ctx: The advanced context. Capturing the last landmark moves the
            phase to ReturnHome.
    '''

    if ctx.phase not in (Phase.TRANSIT, Phase.INSPECT):
        return ctx
    phase = ctx.phase
    index = ctx.active_landmark
    count = len(route)
    while index < count and (terminal or index < count - 1):
        axis = view_axis if phase == Phase.INSPECT else None
        if locality_distance(position, route.landmark(index), axis) > route.locality_radius:
            break
        if phase == Phase.TRANSIT:
            phase = Phase.INSPECT
            logger.info('Reached first landmark, starting inspection')
        logger.info('Landmark %d/%d captured', index + 1, count)
        index += 1
    if index >= count:
        index = count - 1
        phase = Phase.RETURN_HOME
        logger.info('Last landmark reached, returning to start')
    return replace(ctx, phase=phase, active_landmark=index)


def _progress(position,
              route):
    axis, length = route.axis()
    offset = np.asarray(position, dtype=np.float64) - route.landmark(0)
    return float(np.dot(offset, axis)), length


def boundary_passed(ctx,
                    position,
                    route,
                    settings):
    '''True once the lawnmower row has run past its end in the sweep direction.'''

    if route.axis()[0] is None:
        return False
    progress, length = _progress(position, route)
    if ctx.sweep_sign > 0:
        return progress > length + settings.boundary_margin
    return progress < -settings.boundary_margin


def _sweep_sign(ctx,
                frame,
                route):
    axis, _ = route.axis()
    return _sign(float(np.dot(ctx.sweep_sign * axis, frame.nu_y)))


def lawnmower_active(route,
                     settings):
    return settings.mode == 'lawnmower' and route.axis()[0] is not None


def select_step(ctx,
                pose,
                frame,
                route,
                settings):
    '''Pick the step mode and the lateral sign for this tick.

    Args:
        ctx: The MissionContext, phase Inspect.
        pose: Current vehicle pose.
        frame: EgoFrame at the pose.
        route: The LandmarkRoute.
        settings: The MissionSettings.

    Returns:
        step_mode: The StepMode.
        lateral_sign: +1 or -1, the side of nu_y to step toward.
    '''

    if not lawnmower_active(route, settings):
        target = route.landmark(ctx.active_landmark)
        return StepMode.HORIZONTAL_STEP, _sign(float(np.dot(target - pose.position, frame.nu_y)))

    if ctx.step_mode == StepMode.VERTICAL_SWITCH:
        return StepMode.HORIZONTAL_STEP, _sweep_sign(ctx, frame, route)
    if boundary_passed(ctx, pose.position, route, settings):
        if ctx.row < settings.rows - 1:
            return StepMode.VERTICAL_SWITCH, _sweep_sign(ctx, frame, route)
        return StepMode.HOLD, _sweep_sign(ctx, frame, route)
    return StepMode.HORIZONTAL_STEP, _sweep_sign(ctx, frame, route)


def commit_step(ctx,
                step_mode):
    '''Record the step mode applied this tick; a switch reverses the sweep.'''

    if step_mode == StepMode.VERTICAL_SWITCH:
        logger.info('Vertical overlap switch to row %d', ctx.row + 2)
        return replace(ctx, step_mode=step_mode, sweep_sign=-ctx.sweep_sign, row=ctx.row + 1)
    return replace(ctx, step_mode=step_mode)


def _transit_reference(pose,
                       route,
                       settings):
    target = route.landmark(0)
    horizontal = target[:2] - pose.position[:2]
    if settings.transit_altitude is not None and np.linalg.norm(horizontal) > route.locality_radius:
        target = np.array([target[0], target[1], settings.transit_altitude])
    delta = target - pose.position
    dist = float(np.linalg.norm(delta))
    if dist > settings.transit_lookahead:
        target = pose.position + delta / dist * settings.transit_lookahead
    yaw = math.atan2(delta[1], delta[0]) if np.linalg.norm(delta[:2]) > 1e-9 else pose.yaw
    return Pose(target, yaw)


def mission_reference(ctx,
                      pose,
                      planner_reference,
                      route,
                      settings):
    '''Reference pose for the current phase.

    Args:
        ctx: The MissionContext.
        pose: Current vehicle pose.
        planner_reference: The planner's reference, used during Inspect.
        route: The LandmarkRoute.
        settings: The MissionSettings.

    Returns:
        reference: The Pose to track.
    '''

    if ctx.phase == Phase.TRANSIT:
        return _transit_reference(pose, route, settings)
    if ctx.phase == Phase.INSPECT:
        return planner_reference if planner_reference is not None else pose
    if ctx.phase == Phase.RETURN_HOME:
        return ctx.start_pose
    return pose


class MissionExecutive(object):
    def __init__(self,
                 route,
                 settings,
                 start_pose) -> None:
        '''Initialize the mission.

        Args:
            route: The LandmarkRoute.
            settings: The MissionSettings.
            start_pose: Pose the vehicle returns to after inspection.

        Returns:
            None
        '''

        self.route = route
        self.settings = settings
        self.ctx = MissionContext.start(start_pose)

    @property
    def phase(self):
        return self.ctx.phase

    def select_step(self,
                    pose,
                    frame):
        '''Step mode, lateral sign and vertical sign for this tick.'''

        mode, lateral_sign = select_step(self.ctx, pose, frame, self.route, self.settings)
        return mode, lateral_sign, self.settings.vertical_direction

    def reference(self,
                  pose,
                  planner_reference=None):
        return mission_reference(self.ctx, pose, planner_reference, self.route, self.settings)

    def update(self,
               position,
               view_axis=None,
               step_mode=None):
        '''Advance the context once per tick.

        Args:
            position: Vehicle position at the start of the tick.
            view_axis: Viewing direction at that position, if observed.
            step_mode: Step mode the planner applied this tick, if any.

        Returns:
            ctx: The new MissionContext.
        '''

        ctx = self.ctx
        if ctx.phase == Phase.INSPECT and step_mode is not None:
            ctx = commit_step(ctx, step_mode)
        if ctx.phase in (Phase.TRANSIT, Phase.INSPECT):
            lawnmower = lawnmower_active(self.route, self.settings)
            axis = view_axis if self.settings.locality_mode == 'projected' else None
            ctx = advance_landmarks(ctx, position, self.route, axis, terminal=not lawnmower)
            if (lawnmower and ctx.phase == Phase.INSPECT and ctx.row >= self.settings.rows - 1
                    and ctx.step_mode != StepMode.VERTICAL_SWITCH
                    and boundary_passed(ctx, position, self.route, self.settings)):
                logger.info('Lawnmower rows exhausted, returning to start')
                ctx = replace(ctx, phase=Phase.RETURN_HOME, active_landmark=len(self.route) - 1)
        elif ctx.phase == Phase.RETURN_HOME:
            home = float(np.linalg.norm(np.asarray(position) - ctx.start_pose.position))
            if home <= self.settings.home_tolerance:
                logger.info('Back at start, mission done')
                ctx = replace(ctx, phase=Phase.DONE)
        if ctx.phase != self.ctx.phase:
            logger.info('Mission phase %s -> %s', self.ctx.phase.value, ctx.phase.value)
        self.ctx = ctx
        return ctx
