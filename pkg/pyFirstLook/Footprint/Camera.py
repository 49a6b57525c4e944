# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Camera.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Camera footprint model: overlap step distances,
#                   viewing-distance deviation and footprint overlap.
# Function List:    CameraModel: Field of view and desired overlaps.
#                   FootprintRect: Flat footprint at a given range.
#                   overlap_steps: Lateral and vertical step distances.
#                   view_distance_deviation: Signed standoff error.
#                   project_footprint: Footprint of a view-pose.
#                   lateral_overlap_fraction: Overlap of two footprints.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import math
from dataclasses import dataclass

import numpy as np
from pydantic import Field

from ..Core import as_vec3
from ..Errors import DegenerateFrame, InvalidRange, in_range
from ..Settings import FirstLookModel

# Orthonormality tolerance of frames handed to project_footprint
FRAME_TOL = 1e-9
# Axis agreement below which two footprints are compared as coplanar
SHARED_AXES_TOL = 1e-6


class CameraModel(FirstLookModel):
    '''Onboard camera: field of view in radians and desired overlaps.

    An overlap of exactly 1 is accepted and yields a zero step.
    '''

    alpha: float = Field(gt=0.0, lt=math.pi, description='horizontal field of view [rad]')
    beta: float = Field(gt=0.0, lt=math.pi, description='vertical field of view [rad]')
    gamma_h: float = Field(ge=0.0, le=1.0, description='desired horizontal overlap')
    gamma_v: float = Field(ge=0.0, le=1.0, description='desired vertical overlap')

    @classmethod
    def from_degrees(cls,
                     alpha_deg,
                     beta_deg,
                     gamma_h,
                     gamma_v):
        return cls.build(alpha=math.radians(alpha_deg),
                         beta=math.radians(beta_deg),
                         gamma_h=gamma_h,
                         gamma_v=gamma_v)


@dataclass(frozen=True, eq=False)
class FootprintRect(object):
    '''Flat image footprint centred on the viewing axis.'''

    center: np.ndarray
    half_width: float
    half_height: float
    axis_y: np.ndarray
    axis_z: np.ndarray


def overlap_steps(camera,
                  range_):
    '''Lateral and vertical step distances that keep the desired overlap.

    Args:
        camera: The CameraModel.
        range_: Distance to the observed surface [m].

    Returns:
        d_hov: Lateral step [m].
        d_vov: Vertical step [m].

    Raises:
        InvalidRange: If range_ is negative or not finite.
    '''

    range_ = in_range(range_, val_min=0.0, name='range', error=InvalidRange)
    d_hov = 2.0 * math.tan(camera.alpha / 2.0) * range_ * (1.0 - camera.gamma_h)
    d_vov = 2.0 * math.tan(camera.beta / 2.0) * range_ * (1.0 - camera.gamma_v)
    return d_hov, d_vov


def view_distance_deviation(p_nn,
                            position,
                            d_view):
    '''Signed standoff error; positive means too far from the surface.

    Raises:
        InvalidRange: If d_view is not positive.
    '''

    in_range(d_view, val_min=0.0, name='d_view', error=InvalidRange, min_open=True)
    diff = np.asarray(p_nn, dtype=np.float64) - np.asarray(position, dtype=np.float64)
    return float(np.linalg.norm(diff)) - float(d_view)


def check_orthonormal(frame,
                      tol=FRAME_TOL):
    '''Raise DegenerateFrame unless the three axes are orthonormal.'''

    axes = [np.asarray(v, dtype=np.float64) for v in frame]
    for i, v in enumerate(axes):
        if abs(np.linalg.norm(v) - 1.0) > tol:
            raise DegenerateFrame('axis %d is not unit length (|v| = %.12f)' % (i, np.linalg.norm(v)))
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(float(np.dot(axes[i], axes[j]))) > tol:
                raise DegenerateFrame('axes %d and %d are not orthogonal' % (i, j))
    return axes


def project_footprint(pose,
                      frame,
                      range_,
                      camera):
    '''Footprint of a view-pose on the plane at the given range.

    Args:
        pose: The view-pose.
        frame: (nu_x, nu_y, nu_z) viewing frame at the pose.
        range_: Distance along nu_x to the footprint plane [m].
        camera: The CameraModel.

    Returns:
        rect: FootprintRect centred at pose.position + nu_x * range_.

    Raises:
        DegenerateFrame: If the frame fails the orthonormality tolerance.
        InvalidRange: If range_ is negative or not finite.
    '''

    nu_x, nu_y, nu_z = check_orthonormal(frame)
    range_ = in_range(range_, val_min=0.0, name='range', error=InvalidRange)
    return FootprintRect(center=as_vec3(pose.position + nu_x * range_, 'center'),
                         half_width=math.tan(camera.alpha / 2.0) * range_,
                         half_height=math.tan(camera.beta / 2.0) * range_,
                         axis_y=as_vec3(nu_y, 'axis_y'),
                         axis_z=as_vec3(nu_z, 'axis_z'))


def lateral_overlap_fraction(a,
                             b):
    '''Overlap of two footprints along a's lateral axis.

    When the footprints do not share axes, b's extent is projected onto a's
    lateral axis before comparing.

    Returns:
        fraction: Overlap width divided by the narrower width, in [0, 1].
    '''

    shared = (np.allclose(a.axis_y, b.axis_y, rtol=0.0, atol=SHARED_AXES_TOL)
              and np.allclose(a.axis_z, b.axis_z, rtol=0.0, atol=SHARED_AXES_TOL))
    if shared:
        half_b = b.half_width
    else:
        half_b = (abs(float(np.dot(b.axis_y, a.axis_y))) * b.half_width
                  + abs(float(np.dot(b.axis_z, a.axis_y))) * b.half_height)
    offset = float(np.dot(b.center - a.center, a.axis_y))
    low = max(-a.half_width, offset - half_b)
    high = min(a.half_width, offset + half_b)
    narrow = 2.0 * min(a.half_width, half_b)
    if narrow <= 0.0:
        # Point footprints overlap only when they coincide
        return 1.0 if abs(offset) <= SHARED_AXES_TOL else 0.0
    return min(1.0, max(0.0, (high - low) / narrow))
