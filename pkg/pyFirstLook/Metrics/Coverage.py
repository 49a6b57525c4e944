# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Coverage.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Voxel coverage of the inspected surface.
# Function List:    CoverageGrid: Set of observed voxels.
#                   update_coverage: Mark the voxels of a scan.
#                   ground_truth_voxels: Surface voxels of a mesh.
#                   coverage_fraction: Observed share of the surface.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import numpy as np

from ..Errors import EmptyRoi, ValidationError, in_range
from ..World import sample_surface

# Surface sampling spacing as a fraction of the voxel size
_SAMPLE_FRACTION = 0.25


class CoverageGrid(object):
    def __init__(self,
                 voxel_size,
                 origin=(0.0, 0.0, 0.0)) -> None:
        '''Initialize an empty grid.

        Args:
            voxel_size: Edge length of a voxel [m].
            origin: Corner of voxel (0, 0, 0).

        Returns:
            None
        '''

        self.voxel_size = in_range(voxel_size, val_min=0.0, name='voxel_size',
                                   error=ValidationError, min_open=True)
        self.origin = np.asarray(origin, dtype=np.float64).reshape(3)
        self.observed = set()

    def __len__(self):
        return len(self.observed)

    def keys(self,
             points):
        '''Integer voxel indices of points, one row per point.'''

        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        return np.floor((points - self.origin) / self.voxel_size).astype(np.int64)

    def key_set(self,
                points):
        keys = self.keys(points)
        if keys.shape[0] == 0:
            return set()
        return set(map(tuple, np.unique(keys, axis=0).tolist()))

    def update(self,
               scan):
        self.observed |= self.key_set(scan.points)
        return self


def update_coverage(grid,
                    scan):
    '''Mark every voxel containing a scan point as observed (idempotent).'''

    return grid.update(scan)


def _in_roi(points,
            roi):
    if roi is None:
        return points
    low, high = (np.asarray(b, dtype=np.float64) for b in roi)
    inside = np.all((points >= low) & (points <= high), axis=1)
    return points[inside]


def ground_truth_voxels(grid,
                        mesh,
                        roi=None):
    '''Voxels of the grid's lattice touched by the mesh surface inside roi.

    Args:
        grid: CoverageGrid giving voxel size and origin.
        mesh: Ground-truth SurfaceMesh.
        roi: (low, high) axis-aligned box, or None for the whole mesh.

    Returns:
        voxels: Set of integer index tuples.
    '''

    samples = sample_surface(mesh, grid.voxel_size * _SAMPLE_FRACTION)
    return grid.key_set(_in_roi(samples.points, roi))


def coverage_fraction(grid,
                      ground_truth_mesh,
                      roi=None,
                      truth=None):
    '''Observed share of the ground-truth surface voxels inside roi.

    Args:
        grid: The CoverageGrid.
        ground_truth_mesh: The SurfaceMesh.
        roi: (low, high) axis-aligned box, or None for the whole mesh.
        truth: Precomputed ground_truth_voxels for the same grid and roi.

    Returns:
        fraction: In [0, 1].

    Raises:
        EmptyRoi: If no surface voxel lies inside roi.
    '''

    if truth is None:
        truth = ground_truth_voxels(grid, ground_truth_mesh, roi)
    if not truth:
        raise EmptyRoi('region of interest contains no surface voxels')
    return len(grid.observed & truth) / len(truth)
