# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Report.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Aggregate metrics of a run, computed from its log
#                   alone so a replay reproduces them exactly.
# Function List:    ReportConfig: Values the report depends on.
#                   MetricsReport: Serialisable run summary.
#                   run_report: Build the report from a RunLog.
#                   write_report: Write the report as JSON.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
import math
from typing import Optional

import numpy as np
from pydantic import Field

from ..Core import Pose
from ..Errors import DegenerateViewDirection, EmptyLog, IoError, ParseError, ValidationError
from ..Footprint import CameraModel, lateral_overlap_fraction, project_footprint
from ..Mission import Phase, StepMode
from ..Planner import compute_frame
from ..Settings import FirstLookModel

logger = logging.getLogger(__name__)

# Pairs whose odometry moved less than this are not overlap samples
_MIN_MOVE = 1e-9


class ReportConfig(FirstLookModel):
    '''Configuration echoed into the run log header.'''

    d_view: float = Field(gt=0.0)
    camera: CameraModel
    scenario: str = ''
    seed: int = 0


class ViewErrorStats(FirstLookModel):
    count: int
    mean: float
    median: float
    p95: float
    max: float


class OverlapStats(FirstLookModel):
    count: int
    mean: float
    median: float
    min: float
    max: float


class MetricsReport(FirstLookModel):
    scenario: str
    ticks: int
    inspect_ticks: int
    duration_s: float
    path_length_m: float
    final_phase: str
    landmarks_reached: int
    coverage_fraction: float
    view_error: Optional[ViewErrorStats] = None
    overlap: Optional[OverlapStats] = None
    held_ticks: int
    vertical_switches: int


def _position(record):
    return np.asarray(record.odom[:3], dtype=np.float64)


def _view_errors(records,
                 d_view):
    errors = np.array([abs(r.nn_range - d_view) for r in records
                       if r.phase == Phase.INSPECT.value and r.has_observation()])
    if errors.size == 0:
        return None
    return ViewErrorStats(count=int(errors.size),
                          mean=float(np.mean(errors)),
                          median=float(np.median(errors)),
                          p95=float(np.percentile(errors, 95.0)),
                          max=float(np.max(errors)))


def _footprint(record,
               camera):
    position = _position(record)
    frame = compute_frame(position, np.asarray(record.nn, dtype=np.float64))
    return project_footprint(Pose(position, record.odom[3]), frame, record.nn_range, camera)


def overlap_fractions(records,
                      camera):
    '''Lateral overlap of consecutive Inspect odometry footprints.

    The move from one record to the next is the step commanded on the
    first; vertical switches and holds are not lateral steps and are
    skipped, as are pairs where the vehicle did not move.

    Returns:
        fractions: List of overlap fractions in [0, 1].
    '''

    fractions = []
    for prev, curr in zip(records[:-1], records[1:]):
        if prev.phase != Phase.INSPECT.value or curr.phase != Phase.INSPECT.value:
            continue
        if prev.step_mode != StepMode.HORIZONTAL_STEP.value:
            continue
        if not (prev.has_observation() and curr.has_observation()):
            continue
        if np.linalg.norm(_position(curr) - _position(prev)) <= _MIN_MOVE:
            continue
        try:
            a = _footprint(prev, camera)
            b = _footprint(curr, camera)
        except DegenerateViewDirection:
            continue
        fractions.append(lateral_overlap_fraction(a, b))
    return fractions


def _overlap_stats(fractions):
    if not fractions:
        return None
    values = np.asarray(fractions)
    return OverlapStats(count=int(values.size),
                        mean=float(np.mean(values)),
                        median=float(np.median(values)),
                        min=float(np.min(values)),
                        max=float(np.max(values)))


def _landmarks_reached(last):
    if last.phase_after in (Phase.RETURN_HOME.value, Phase.DONE.value):
        return last.active_landmark + 1
    if last.phase_after == Phase.TRANSIT.value:
        return 0
    return last.active_landmark


def run_report(log,
               config=None):
    '''Aggregate a run log into a MetricsReport.

    Args:
        log: The RunLog.
        config: ReportConfig; read from the log header when omitted.

    Returns:
        report: The MetricsReport.

    Raises:
        EmptyLog: If the log has no records.
        ParseError: If the header carries no valid report config.
    '''

    if len(log) == 0:
        raise EmptyLog('run log has no records')
    if config is None:
        header = log.header if isinstance(log.header, dict) else {}
        if not isinstance(header.get('config'), dict):
            raise ParseError('run log header carries no config mapping', line=1)
        try:
            config = ReportConfig.build(**header['config'])
        except ValidationError as exc:
            raise ParseError('run log header config: %s' % exc, line=1) from exc

    records = log.records
    positions = np.array([r.odom[:3] for r in records], dtype=np.float64)
    steps = np.linalg.norm(np.diff(positions, axis=0), axis=1)
    inspect = [r for r in records if r.phase == Phase.INSPECT.value]
    last = records[-1]
    coverage = last.coverage if math.isfinite(last.coverage) else 0.0

    report = MetricsReport(scenario=config.scenario,
                           ticks=len(records),
                           inspect_ticks=len(inspect),
                           duration_s=float(last.time - records[0].time),
                           path_length_m=float(np.sum(steps)),
                           final_phase=last.phase_after,
                           landmarks_reached=_landmarks_reached(last),
                           coverage_fraction=float(coverage),
                           view_error=_view_errors(records, config.d_view),
                           overlap=_overlap_stats(overlap_fractions(records, config.camera)),
                           held_ticks=sum(1 for r in inspect if not r.predicted),
                           vertical_switches=sum(1 for r in records
                                                 if r.step_mode == StepMode.VERTICAL_SWITCH.value))
    logger.info('Report: %d ticks, final phase %s, coverage %.3f',
                report.ticks, report.final_phase, report.coverage_fraction)
    return report


def write_report(report,
                 path):
    try:
        with open(path, 'w', encoding='utf-8') as report_file:
            report_file.write(report.model_dump_json(indent=2))
            report_file.write('\n')
    except OSError as exc:
        raise IoError('cannot write %s: %s' % (path, exc)) from exc
