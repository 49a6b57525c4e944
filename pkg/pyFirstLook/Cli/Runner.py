# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Runner.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Headless mission runner: the scan, plan, mission,
#                   vehicle, log tick loop and its output files.
# Function List:    ObservedCloud: Bounded accumulator of LiDAR returns.
#                   run_mission: Execute a scenario.
#                   replay: Recompute the report from a run log.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import json
import logging
from pathlib import Path
from typing import NamedTuple

import numpy as np

from ..Core import PointCloud, downsample, save_cloud
from ..Errors import IoError, RuntimeAbort, ValidationError
from ..Metrics import (CoverageGrid, MetricsReport, ReportConfig, RunLog, TickRecord, cloud_to_cloud,
                       coverage_fraction, ground_truth_voxels, run_report, write_report)
from ..Mission import MissionExecutive, Phase
from ..Planner import FirstLookPlanner
from ..World import sample_surface, scan, track
from .Plot import plot_run
from .Scenario import build_world

logger = logging.getLogger(__name__)

RUN_LOG = 'run_log.csv'
OBSERVED_CLOUD = 'observed_cloud.ply'
METRICS_REPORT = 'metrics_report.json'
CLOUD_TO_CLOUD = 'cloud_to_cloud.json'
C2C_HISTOGRAM = 'c2c_histogram.csv'
PATH_PLOT = 'path_plot.svg'

STATUS_DONE = 'Done'
STATUS_TICK_BUDGET = 'TickBudget'

EXIT_CODES = {STATUS_DONE: 0, STATUS_TICK_BUDGET: 2}

NAN = float('nan')


class RunResult(NamedTuple):
    log: RunLog
    report: MetricsReport
    status: str
    output_dir: Path

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]


class ObservedCloud(object):
    '''Accumulated LiDAR returns, bounded to about twice the point limit.

    Once the held points exceed twice the limit they are compacted to the
    limit by a seeded downsample; each compaction uses the next seed so the
    result depends only on the scan sequence.
    '''

    def __init__(self,
                 limit,
                 seed=0) -> None:
        self.limit = int(limit)
        self.seed = int(seed)
        self.compactions = 0
        self._chunks = []
        self._count = 0

    def __len__(self):
        return self._count

    def add(self,
            cloud):
        if len(cloud) == 0:
            return
        self._chunks.append(cloud.points)
        self._count += len(cloud)
        if self._count > 2 * self.limit:
            merged = downsample(self.cloud(), self.limit, seed=self.seed + self.compactions)
            self.compactions += 1
            self._chunks = [merged.points]
            self._count = len(merged)
            logger.debug('Compacted observed cloud to %d points', self._count)

    def cloud(self):
        points = np.concatenate(self._chunks) if self._chunks else np.empty((0, 3))
        return PointCloud(points)


def _pose4(pose):
    return (float(pose.position[0]), float(pose.position[1]), float(pose.position[2]), float(pose.yaw))


def _record(tick,
            time,
            phase,
            ctx,
            state,
            result,
            coverage):
    obs = result.observation
    first = result.predicted[0] if result.predicted else None
    return TickRecord(tick=tick,
                      time=time,
                      phase=phase.value,
                      phase_after=ctx.phase.value,
                      active_landmark=ctx.active_landmark,
                      step_mode=result.step_mode.value if result.step_mode is not None else '',
                      lateral_sign=int(result.lateral_sign),
                      odom=_pose4(state),
                      reference=_pose4(result.reference),
                      nn=tuple(float(v) for v in obs.p_nn) if obs is not None else (NAN, NAN, NAN),
                      nn_range=float(obs.nn_range) if obs is not None else NAN,
                      d_insp=first.d_insp if first is not None else NAN,
                      d_hov=first.d_hov_applied if first is not None else NAN,
                      d_vov=first.d_vov_applied if first is not None else NAN,
                      coverage=float(coverage),
                      diagnostic=result.diagnostic or '',
                      predicted=tuple(_pose4(s.pose) + tuple(float(v) for v in s.p_nn) + (float(s.nn_range),)
                                      for s in result.predicted))


def _write_outputs(out,
                   scenario,
                   log,
                   report_config,
                   observed,
                   mesh,
                   route):
    log.write(out / RUN_LOG)
    report = run_report(log, report_config)
    write_report(report, out / METRICS_REPORT)

    run = scenario.run
    cloud = downsample(observed.cloud(), run.max_cloud_points, seed=run.seed)
    save_cloud(cloud, out / OBSERVED_CLOUD)
    if len(cloud):
        reference = downsample(sample_surface(mesh, run.reference_spacing), run.max_cloud_points, seed=run.seed)
        c2c = cloud_to_cloud(cloud, reference)
        try:
            (out / CLOUD_TO_CLOUD).write_text(json.dumps(c2c.to_dict(), indent=2) + '\n', encoding='utf-8')
        except OSError as exc:
            raise IoError('cannot write %s: %s' % (out / CLOUD_TO_CLOUD, exc)) from exc
        c2c.write_histogram_csv(out / C2C_HISTOGRAM)
    else:
        logger.warning('No LiDAR returns observed, skipping cloud-to-cloud')
    plot_run(log, route, mesh, out / PATH_PLOT)
    return report


def run_mission(scenario,
                output_dir=None):
    '''Execute a scenario until Done or the tick budget is spent.

    Each tick scans the world from the current pose, plans, advances the
    mission, records the tick and lets the vehicle track the reference.

    Args:
        scenario: The validated Scenario.
        output_dir: Overrides scenario.run.output_dir.

    Returns:
        result: RunResult(log, report, status, output_dir); status is
            'Done' or 'TickBudget'.

    Raises:
        RuntimeAbort: When the mission stops progressing for
            run.stall_ticks ticks; all outputs are written first.
        ValidationError: If the region of interest holds no surface.
    '''

    run = scenario.run
    out = Path(output_dir) if output_dir is not None else scenario.resolve(run.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError('cannot create %s: %s' % (out, exc)) from exc

    mesh = build_world(scenario)
    camera = scenario.camera_model()
    route = scenario.landmark_route()
    report_config = ReportConfig(d_view=scenario.planner.d_view,
                                 camera=camera,
                                 scenario=scenario.name,
                                 seed=run.seed)
    log = RunLog(header={'config': report_config.model_dump(mode='json'),
                         'locality_radius': route.locality_radius})

    half = 0.5 * run.coverage_voxel
    grid = CoverageGrid(run.coverage_voxel, origin=(half, half, half))
    truth = ground_truth_voxels(grid, mesh, run.roi)
    if not truth:
        raise ValidationError('run.roi: region of interest contains no surface')

    state = run.start.to_pose()
    planner = FirstLookPlanner(scenario.planner, camera)
    mission = MissionExecutive(route, scenario.mission, state)
    observed = ObservedCloud(run.max_cloud_points, seed=run.seed)
    status = STATUS_TICK_BUDGET
    time = 0.0
    last_key, last_progress = mission.ctx.progress_key(), 0
    logger.info('Running %r: %d landmarks, up to %d ticks', scenario.name, len(route), run.max_ticks)

    for tick in range(run.max_ticks):
        cloud = scan(mesh, state, scenario.lidar, frame=tick)
        grid.update(cloud)
        observed.add(cloud)
        coverage = coverage_fraction(grid, mesh, run.roi, truth=truth)

        phase = mission.phase
        result = planner.plan_tick(state, cloud, mission)
        obs = result.observation
        view_axis = obs.frame.nu_x if obs is not None and obs.frame is not None else None
        ctx = mission.update(state.position, view_axis, result.step_mode)
        log.append(_record(tick, time, phase, ctx, state, result, coverage))

        if ctx.phase == Phase.DONE:
            status = STATUS_DONE
            break
        key = ctx.progress_key()
        if key != last_key:
            last_key, last_progress = key, tick
        elif tick - last_progress >= run.stall_ticks:
            _write_outputs(out, scenario, log, report_config, observed, mesh, route)
            raise RuntimeAbort('no mission progress for %d ticks (phase %s, landmark %d)'
                               % (run.stall_ticks, ctx.phase.value, ctx.active_landmark),
                               log_path=out / RUN_LOG)

        state, substeps = track(state, result.reference, scenario.vehicle)
        time += max(1, substeps) * scenario.vehicle.tick_dt

    if status != STATUS_DONE:
        logger.warning('Tick budget of %d spent in phase %s', run.max_ticks, mission.phase.value)
    report = _write_outputs(out, scenario, log, report_config, observed, mesh, route)
    logger.info('Run %r finished: %s after %d ticks', scenario.name, status, len(log))
    return RunResult(log=log, report=report, status=status, output_dir=out)


def replay(log_path):
    '''Recompute the metrics report from a run log, without simulating.

    Raises:
        ParseError: Naming the first bad record.
        EmptyLog: If the log holds no records.
    '''

    log = RunLog.read(log_path)
    report = run_report(log)
    logger.info('Replayed %d records from %s', len(log), log_path)
    return report
