# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Vehicle.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      First-order kinematic vehicle tracking reference
#                   poses, standing in for the onboard controller.
# Function List:    VehicleModel: Speed, yaw rate and time step.
#                   vehicle_step: One kinematic step toward a reference.
#                   track: Repeated steps until reached or budget spent.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import math

import numpy as np
from pydantic import Field

from ..Core import Pose, wrap_angle
from ..Settings import FirstLookModel


class VehicleModel(FirstLookModel):
    '''Kinematic limits of the simulated vehicle.

    track_substeps bounds how many kinematic steps are spent per planning
    tick on reaching the commanded view-pose.
    '''

    max_speed: float = Field(2.0, gt=0.0)
    max_yaw_rate: float = Field(1.0, gt=0.0)
    tick_dt: float = Field(0.5, gt=0.0)
    track_substeps: int = Field(40, ge=1)


def vehicle_step(state,
                 reference,
                 vehicle):
    '''One kinematic step toward the reference.

    Position moves straight toward the reference by at most
    max_speed * tick_dt; yaw turns along the shorter arc by at most
    max_yaw_rate * tick_dt. Neither overshoots.

    Args:
        state: Current Pose.
        reference: Reference Pose.
        vehicle: The VehicleModel.

    Returns:
        state: The new Pose.
    '''

    delta = reference.position - state.position
    dist = float(np.linalg.norm(delta))
    reach = vehicle.max_speed * vehicle.tick_dt
    if dist <= reach:
        position = reference.position
    else:
        position = state.position + delta * (reach / dist)

    turn = wrap_angle(reference.yaw - state.yaw)
    max_turn = vehicle.max_yaw_rate * vehicle.tick_dt
    if abs(turn) <= max_turn:
        yaw = reference.yaw
    else:
        yaw = state.yaw + math.copysign(max_turn, turn)
    return Pose(position, yaw)


def reached(state,
            reference):
    return state.same_as(reference)


def track(state,
          reference,
          vehicle):
    '''Step toward the reference until reached or track_substeps are spent.

    Returns:
        state: The final Pose.
        substeps: Number of kinematic steps taken.
    '''

    substeps = 0
    while substeps < vehicle.track_substeps and not reached(state, reference):
        state = vehicle_step(state, reference, vehicle)
        substeps += 1
    return state, substeps
