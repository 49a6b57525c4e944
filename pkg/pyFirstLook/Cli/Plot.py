# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Plot.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Static top-down and profile plot of a run.
# Function List:    plot_run: Write planned vs traversed path as SVG.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ..Errors import IoError  # noqa: E402

logger = logging.getLogger(__name__)


def plot_run(log,
             route,
             mesh,
             path):
    '''Write the run overview as a vector plot.

    The left panel is the top-down (x, y) view with the surface vertices,
    the landmarks, the commanded references and the traversed odometry.
    The right panel is the profile: height against the along-route
    distance of the traversed path.

    Args:
        log: The RunLog.
        route: The LandmarkRoute.
        mesh: The ground-truth SurfaceMesh.
        path: Destination file; the suffix picks the format (.svg).
    '''

    odom = np.array([r.odom[:3] for r in log.records]).reshape(-1, 3)
    refs = np.array([r.reference[:3] for r in log.records]).reshape(-1, 3)
    landmarks = np.asarray(route.landmarks, dtype=np.float64).reshape(-1, 3)

    fig, (top, side) = plt.subplots(1, 2, figsize=(12, 5))
    top.scatter(mesh.vertices[:, 0], mesh.vertices[:, 1], s=2, c='0.7', label='surface')
    top.plot(refs[:, 0], refs[:, 1], '--', c='tab:orange', lw=1, label='planned')
    top.plot(odom[:, 0], odom[:, 1], '-', c='tab:blue', lw=1.5, label='traversed')
    top.scatter(landmarks[:, 0], landmarks[:, 1], marker='^', c='tab:red', zorder=3, label='landmarks')
    top.set_xlabel('x [m]')
    top.set_ylabel('y [m]')
    top.set_aspect('equal', adjustable='datalim')
    top.legend(loc='best', fontsize='small')
    top.set_title('Top-down')

    along = np.concatenate([[0.0], np.cumsum(np.linalg.norm(np.diff(odom[:, :2], axis=0), axis=1))])
    side.plot(along, odom[:, 2], '-', c='tab:blue', lw=1.5, label='traversed')
    side.set_xlabel('horizontal path length [m]')
    side.set_ylabel('z [m]')
    side.set_title('Profile')
    fig.tight_layout()

    try:
        fig.savefig(path, metadata={'Date': None})
    except OSError as exc:
        raise IoError('cannot write %s: %s' % (path, exc)) from exc
    finally:
        plt.close(fig)
    logger.info('Wrote plot to %s', path)
