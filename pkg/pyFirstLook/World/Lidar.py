# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Lidar.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Ray-cast LiDAR producing world-frame point clouds
#                   from a SurfaceMesh.
# Function List:    LidarModel: Scan pattern, range and noise.
#                   ray_directions: Unit ray directions for a yaw.
#                   cast_rays: Vectorised nearest ray-triangle hits.
#                   cast_ray_bruteforce: Scalar all-triangle oracle.
#                   scan: One LiDAR frame.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import math

import numpy as np
from pydantic import Field

from ..Core import PointCloud
from ..Settings import FirstLookModel

# Determinant / distance threshold of the ray-triangle test
EPS = 1e-12
# Upper bound on ray x triangle pairs evaluated at once
_PAIR_BUDGET = 2000000


class LidarModel(FirstLookModel):
    '''Scan pattern in the sensor frame (yawed with the vehicle).

    Defaults: 360 x 1 deg azimuth, +-22.5 x 1 deg
    elevation, 100 m range, no noise.
    '''

    azimuth_fov_deg: float = Field(360.0, gt=0.0, le=360.0)
    azimuth_res_deg: float = Field(1.0, gt=0.0)
    elevation_fov_deg: float = Field(45.0, ge=0.0, le=180.0)
    elevation_res_deg: float = Field(1.0, gt=0.0)
    max_range: float = Field(100.0, gt=0.0)
    range_noise_sigma: float = Field(0.0, ge=0.0)
    seed: int = Field(0, ge=0)


def _angles(fov,
            res,
            wrap):
    count = int(math.floor(fov / res + 1e-9))
    if not wrap:
        count += 1
    return np.radians(-0.5 * fov + res * np.arange(count))


def ray_directions(lidar,
                   yaw=0.0):
    '''Unit ray directions, elevation-major, rotated by yaw.'''

    azimuth = _angles(lidar.azimuth_fov_deg, lidar.azimuth_res_deg,
                      wrap=lidar.azimuth_fov_deg >= 360.0) + yaw
    elevation = _angles(lidar.elevation_fov_deg, lidar.elevation_res_deg, wrap=False)
    el, az = np.meshgrid(elevation, azimuth, indexing='ij')
    dirs = np.stack([np.cos(el) * np.cos(az), np.cos(el) * np.sin(az), np.sin(el)], axis=-1)
    return dirs.reshape(-1, 3)


def _cull(mesh,
          origin,
          max_range):
    '''Indices of triangles whose bounding box lies within max_range.'''

    v0, v1, v2 = mesh.corners()
    low = np.minimum(np.minimum(v0, v1), v2)
    high = np.maximum(np.maximum(v0, v1), v2)
    gap = np.maximum(0.0, np.maximum(low - origin, origin - high))
    return np.flatnonzero(np.linalg.norm(gap, axis=1) <= max_range)


def cast_rays(mesh,
              origin,
              directions,
              max_range=math.inf):
    '''Nearest hit of every ray from one origin (Moller-Trumbore).

    Args:
        mesh: The SurfaceMesh.
        origin: Common ray origin.
        directions: (R, 3) unit directions.
        max_range: Hits beyond this distance are ignored.

    Returns:
        ranges: (R,) hit distance, inf on a miss.
        tri_ids: (R,) hit triangle (lowest index on ties), -1 on a miss.
    '''

    origin = np.asarray(origin, dtype=np.float64).reshape(3)
    directions = np.asarray(directions, dtype=np.float64).reshape(-1, 3)
    ranges = np.full(directions.shape[0], np.inf)
    tri_ids = np.full(directions.shape[0], -1, dtype=np.int64)
    keep = _cull(mesh, origin, max_range)
    if keep.size == 0 or directions.shape[0] == 0:
        return ranges, tri_ids

    v0, v1, v2 = (c[keep] for c in mesh.corners())
    e1 = v1 - v0
    e2 = v2 - v0
    tvec = origin - v0
    qvec = np.cross(tvec, e1)
    t_num = np.sum(qvec * e2, axis=-1)
    chunk = max(1, _PAIR_BUDGET // keep.size)
    for start in range(0, directions.shape[0], chunk):
        d = directions[start:start + chunk]
        pvec = np.cross(d[:, None, :], e2[None, :, :])
        det = np.sum(e1[None, :, :] * pvec, axis=-1)
        ok = np.abs(det) > EPS
        inv = np.where(ok, 1.0 / np.where(ok, det, 1.0), 0.0)
        u = np.sum(tvec[None, :, :] * pvec, axis=-1) * inv
        v = np.sum(d[:, None, :] * qvec[None, :, :], axis=-1) * inv
        t = t_num[None, :] * inv
        hit = ok & (u >= 0.0) & (v >= 0.0) & (u + v <= 1.0) & (t > EPS) & (t <= max_range)
        t = np.where(hit, t, np.inf)
        best = np.argmin(t, axis=1)
        rows = np.arange(d.shape[0])
        best_t = t[rows, best]
        found = np.isfinite(best_t)
        ranges[start:start + d.shape[0]] = best_t
        tri_ids[start:start + d.shape[0]] = np.where(found, keep[best], -1)
    return ranges, tri_ids


def cast_ray_bruteforce(mesh,
                        origin,
                        direction,
                        max_range=math.inf):
    '''Scalar all-triangle test of a single ray, the reference for cast_rays.

    Returns:
        t: Hit distance, inf on a miss.
        tri_id: Hit triangle, -1 on a miss.
    '''

    ox, oy, oz = (float(c) for c in origin)
    dx, dy, dz = (float(c) for c in direction)
    best_t, best_id = math.inf, -1
    for tri_id, (a, b, c) in enumerate(mesh.triangles):
        ax, ay, az = mesh.vertices[a]
        e1 = (mesh.vertices[b][0] - ax, mesh.vertices[b][1] - ay, mesh.vertices[b][2] - az)
        e2 = (mesh.vertices[c][0] - ax, mesh.vertices[c][1] - ay, mesh.vertices[c][2] - az)
        pvec = (dy * e2[2] - dz * e2[1], dz * e2[0] - dx * e2[2], dx * e2[1] - dy * e2[0])
        det = e1[0] * pvec[0] + e1[1] * pvec[1] + e1[2] * pvec[2]
        if abs(det) <= EPS:
            continue
        inv = 1.0 / det
        tvec = (ox - ax, oy - ay, oz - az)
        u = (tvec[0] * pvec[0] + tvec[1] * pvec[1] + tvec[2] * pvec[2]) * inv
        if u < 0.0:
            continue
        qvec = (tvec[1] * e1[2] - tvec[2] * e1[1],
                tvec[2] * e1[0] - tvec[0] * e1[2],
                tvec[0] * e1[1] - tvec[1] * e1[0])
        v = (dx * qvec[0] + dy * qvec[1] + dz * qvec[2]) * inv
        if v < 0.0 or u + v > 1.0:
            continue
        t = (qvec[0] * e2[0] + qvec[1] * e2[1] + qvec[2] * e2[2]) * inv
        if EPS < t <= max_range and t < best_t:
            best_t, best_id = t, tri_id
    return best_t, best_id


def scan(mesh,
         pose,
         lidar,
         frame=0):
    '''One LiDAR frame in the world frame.

    Noise is Gaussian along each ray, drawn from a stream seeded by
    (lidar.seed, frame); misses are omitted.

    Args:
        mesh: The SurfaceMesh.
        pose: Sensor pose; the scan pattern is yawed with it.
        lidar: The LidarModel.
        frame: Frame counter feeding the noise seed.

    Returns:
        cloud: PointCloud with frame_id 'world' (possibly empty).
    '''

    dirs = ray_directions(lidar, pose.yaw)
    ranges, _ = cast_rays(mesh, pose.position, dirs, lidar.max_range)
    if lidar.range_noise_sigma > 0.0:
        rng = np.random.default_rng([lidar.seed, int(frame)])
        ranges = ranges + rng.normal(0.0, lidar.range_noise_sigma, size=ranges.shape[0])
    hit = np.isfinite(ranges)
    points = pose.position + ranges[hit, None] * dirs[hit]
    return PointCloud(points, frame_id='world')
