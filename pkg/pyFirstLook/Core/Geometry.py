# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Geometry.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Vector and pose primitives, point clouds and the
#                   KD-tree spatial index shared by every module.
# Function List:    as_vec3: Validate and freeze a 3D vector.
#                   wrap_angle: Normalize an angle to (-pi, pi].
#                   Pose: Position plus yaw, roll and pitch null.
#                   PointCloud: Ordered set of finite 3D points.
#                   KdIndex: Nearest-neighbor index over a cloud.
#                   build_index: Build a KdIndex from a cloud.
#                   nearest_neighbor: Query the nearest point.
#                   linear_scan_nn: Exhaustive nearest-neighbor oracle.
#                   downsample: Seeded uniform random subset.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ..Errors import EmptyCloud, InvalidTarget, ValidationError

logger = logging.getLogger(__name__)

# Relative slack used when collecting tie candidates around the KD answer
_TIE_SLACK = 1e-9
# Neighbours fetched per query in batch mode before exact re-ranking
_BATCH_K = 4
_BATCH_CHUNK = 200000


def as_vec3(val,
            name='vector'):
    '''Validate and freeze a 3D vector.

    Args:
        val: Any sequence of three numbers.
        name: The name reported in the error message.

    Returns:
        vec: A read-only float64 array of shape (3,).

    Raises:
        ValidationError: If the shape is wrong or a component is not finite.
    '''

    vec = np.array(val, dtype=np.float64).reshape(-1)
    if vec.shape != (3,):
        raise ValidationError('%s must have 3 components, got %d' % (name, vec.size))
    if not np.isfinite(vec).all():
        raise ValidationError('%s must be finite, got %s' % (name, vec.tolist()))
    vec.setflags(write=False)
    return vec


def wrap_angle(angle):
    '''Normalize an angle to (-pi, pi].

    Args:
        angle: The angle in radians.

    Returns:
        angle: The equivalent angle in (-pi, pi].
    '''

    wrapped = math.remainder(float(angle), 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def point_distances(points,
                    query):
    '''Euclidean distances from every row of points to query.

    All nearest-neighbor code paths rank candidates with this function so
    that the index and the linear scan agree bit for bit.
    '''

    diff = points - query
    return np.sqrt(np.sum(diff * diff, axis=-1))


@dataclass(frozen=True, eq=False)
class Pose(object):
    '''Position in meters (world frame) plus yaw in radians.

    Roll and pitch are always null; the camera is forward facing and fixed
    on the platform, so only a yaw reference is ever generated.
    '''

    position: np.ndarray
    yaw: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'position', as_vec3(self.position, 'position'))
        yaw = float(self.yaw)
        if not math.isfinite(yaw):
            raise ValidationError('yaw must be finite, got %r' % yaw)
        object.__setattr__(self, 'yaw', wrap_angle(yaw))

    @property
    def roll(self):
        return 0.0

    @property
    def pitch(self):
        return 0.0

    @property
    def heading(self):
        '''Unit heading vector (cos yaw, sin yaw, 0).'''

        return np.array([math.cos(self.yaw), math.sin(self.yaw), 0.0])

    def same_as(self,
                other):
        return bool(np.array_equal(self.position, other.position)) and self.yaw == other.yaw

    def __repr__(self):
        x, y, z = self.position
        return 'Pose(x=%.4f, y=%.4f, z=%.4f, yaw=%.4f)' % (x, y, z, self.yaw)


class PointCloud(object):
    def __init__(self,
                 points=None,
                 frame_id='world') -> None:
        '''Initialize the point cloud.

        Non-finite rows are dropped here; real LiDAR frames contain invalid
        returns. The number of dropped rows is kept in `dropped`.

        Args:
            points: Array-like of shape (N, 3).
            frame_id: Label of the frame the points are expressed in.

        Returns:
            None
        '''

        if points is None:
            points = np.empty((0, 3))
        arr = np.array(points, dtype=np.float64).reshape(-1, 3)
        finite = np.isfinite(arr).all(axis=1)
        self.dropped = int(arr.shape[0] - np.count_nonzero(finite))
        if self.dropped:
            logger.warning('Dropped %d non-finite points', self.dropped)
            arr = arr[finite]
        arr.setflags(write=False)
        self.points = arr
        self.frame_id = frame_id

    def __len__(self):
        return self.points.shape[0]

    def __repr__(self):
        return 'PointCloud(%d points, frame_id=%r)' % (len(self), self.frame_id)

    def is_empty(self):
        return len(self) == 0

    def bounds(self):
        '''Axis-aligned bounding box as (min, max) arrays.'''

        if self.is_empty():
            raise EmptyCloud('bounds of an empty cloud')
        return self.points.min(axis=0), self.points.max(axis=0)


class KdIndex(object):
    def __init__(self,
                 cloud) -> None:
        '''Initialize the index over a snapshot of the cloud.

        Args:
            cloud: The PointCloud to index. It is never modified.

        Returns:
            None
        '''

        if len(cloud) == 0:
            raise EmptyCloud('cannot build an index over an empty cloud')
        # The cloud's array is read-only, so sharing it keeps the snapshot
        self.points = cloud.points
        self.tree = cKDTree(self.points)

    def __len__(self):
        return self.points.shape[0]

    def query(self,
              query):
        '''Nearest point to query.

        Args:
            query: The query position.

        Returns:
            point: The nearest point.
            distance: Its Euclidean distance to query.
            point_id: Its index in the source cloud (lowest index on ties).
        '''

        q = np.asarray(query, dtype=np.float64).reshape(3)
        d0, _ = self.tree.query(q, k=1)
        radius = float(d0) * (1.0 + _TIE_SLACK) + 1e-12
        cand = np.sort(np.asarray(self.tree.query_ball_point(q, radius), dtype=np.intp))
        if cand.size == 0:
            cand = np.arange(len(self), dtype=np.intp)
        dist = point_distances(self.points[cand], q)
        j = int(np.argmin(dist))
        point_id = int(cand[j])
        return self.points[point_id].copy(), float(dist[j]), point_id

    def query_batch(self,
                    queries):
        '''Nearest points for many queries.

        Args:
            queries: Array-like of shape (M, 3).

        Returns:
            distances: Array of shape (M,).
            ids: Array of shape (M,) of source indices (lowest index on ties).
        '''

        queries = np.asarray(queries, dtype=np.float64).reshape(-1, 3)
        k = min(_BATCH_K, len(self))
        distances = np.empty(queries.shape[0])
        ids = np.empty(queries.shape[0], dtype=np.intp)
        for start in range(0, queries.shape[0], _BATCH_CHUNK):
            chunk = queries[start:start + _BATCH_CHUNK]
            _, idx = self.tree.query(chunk, k=k)
            idx = np.asarray(idx, dtype=np.intp).reshape(chunk.shape[0], k)
            dist = point_distances(self.points[idx], chunk[:, None, :])
            # Rank by exact distance, then by lowest index
            order = np.lexsort((idx, dist), axis=-1)[:, 0]
            rows = np.arange(chunk.shape[0])
            best = dist[rows, order]
            best_ids = idx[rows, order]
            if k < len(self):
                # All k candidates tie with the best: further minimisers may lie beyond k
                crowded = np.flatnonzero(dist.max(axis=1) <= best * (1.0 + _TIE_SLACK) + 1e-12)
                for row in crowded:
                    _, best[row], best_ids[row] = self.query(chunk[row])
            distances[start:start + chunk.shape[0]] = best
            ids[start:start + chunk.shape[0]] = best_ids
        return distances, ids


def build_index(cloud):
    '''Build a KdIndex from a cloud.

    Raises:
        EmptyCloud: If the cloud has zero points.
    '''

    return KdIndex(cloud)


def nearest_neighbor(index,
                     query):
    '''Nearest point of the indexed cloud to query.

    Args:
        index: A KdIndex.
        query: The query position.

    Returns:
        point, distance, point_id: See KdIndex.query.
    '''

    return index.query(query)


def linear_scan_nn(cloud,
                   query):
    '''Exhaustive nearest-neighbor search, the reference for KdIndex.

    Raises:
        EmptyCloud: If the cloud has zero points.
    '''

    if len(cloud) == 0:
        raise EmptyCloud('linear scan over an empty cloud')
    q = np.asarray(query, dtype=np.float64).reshape(3)
    dist = point_distances(cloud.points, q)
    j = int(np.argmin(dist))
    return cloud.points[j].copy(), float(dist[j]), j


def downsample(cloud,
               target_count,
               seed=0):
    '''Seeded uniform random subset of the cloud.

    Args:
        cloud: The source cloud.
        target_count: Number of points to keep.
        seed: Seed of the subset draw.

    Returns:
        cloud: The cloud itself when it is not larger than target_count,
            otherwise a new cloud of exactly target_count points in
            source order.

    Raises:
        InvalidTarget: If target_count < 1.
    '''

    if int(target_count) != target_count or target_count < 1:
        raise InvalidTarget('target_count must be an integer >= 1, got %r' % (target_count,))
    target_count = int(target_count)
    if len(cloud) <= target_count:
        return cloud
    rng = np.random.default_rng(seed)
    keep = np.sort(rng.choice(len(cloud), size=target_count, replace=False))
    return PointCloud(cloud.points[keep], frame_id=cloud.frame_id)
