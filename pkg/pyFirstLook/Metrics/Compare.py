# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Compare.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Cloud-to-cloud distance from a measured cloud into a
#                   reference cloud.
# Function List:    CloudToCloud: Summary statistics and histogram.
#                   cloud_to_cloud: Measured -> reference NN distances.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import csv
import logging
from dataclasses import dataclass

import numpy as np

from ..Core import build_index
from ..Errors import EmptyCloud, IoError

logger = logging.getLogger(__name__)

HIST_BIN = 0.05
HIST_MAX = 2.0
TRIM_PERCENTILE = 98.0


def histogram_edges():
    return np.linspace(0.0, HIST_MAX, int(round(HIST_MAX / HIST_BIN)) + 1)


@dataclass(frozen=True, eq=False)
class CloudToCloud(object):
    mean: float
    max: float
    median: float
    trimmed_mean: float
    count: int
    histogram: np.ndarray
    overflow: int

    def to_dict(self):
        return {'mean': self.mean,
                'max': self.max,
                'median': self.median,
                'trimmed_mean': self.trimmed_mean,
                'trim_percentile': TRIM_PERCENTILE,
                'count': self.count,
                'bin_width': HIST_BIN,
                'histogram': self.histogram.tolist(),
                'overflow': self.overflow}

    def write_histogram_csv(self,
                            path):
        '''Write bin_low,bin_high,count rows; the last row is the overflow bin.'''

        edges = histogram_edges()
        try:
            with open(path, 'w', newline='', encoding='utf-8') as csv_file:
                writer = csv.writer(csv_file)
                writer.writerow(['bin_low', 'bin_high', 'count'])
                for low, high, count in zip(edges[:-1], edges[1:], self.histogram):
                    writer.writerow(['%.2f' % low, '%.2f' % high, int(count)])
                writer.writerow(['%.2f' % HIST_MAX, 'inf', self.overflow])
        except OSError as exc:
            raise IoError('cannot write %s: %s' % (path, exc)) from exc


def cloud_to_cloud(measured,
                   reference):
    '''Nearest-neighbor distance of every measured point into the reference.

    Args:
        measured: The measured PointCloud.
        reference: The reference PointCloud.

    Returns:
        result: CloudToCloud with mean, max, median, the mean of points at
            or below the 98th percentile, and a 0.05 m histogram to 2.0 m
            plus overflow.

    Raises:
        EmptyCloud: If either cloud is empty.
    '''

    if len(measured) == 0 or len(reference) == 0:
        raise EmptyCloud('cloud-to-cloud needs two non-empty clouds')
    distances, _ = build_index(reference).query_batch(measured.points)
    cutoff = np.percentile(distances, TRIM_PERCENTILE)
    counts, _ = np.histogram(distances, bins=histogram_edges())
    result = CloudToCloud(mean=float(np.mean(distances)),
                          max=float(np.max(distances)),
                          median=float(np.median(distances)),
                          trimmed_mean=float(np.mean(distances[distances <= cutoff])),
                          count=int(distances.size),
                          histogram=counts,
                          overflow=int(np.count_nonzero(distances > HIST_MAX)))
    logger.info('Cloud-to-cloud over %d points: mean %.4f m, max %.4f m',
                result.count, result.mean, result.max)
    return result
