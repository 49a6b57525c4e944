# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Main.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      The pyfirstlook command line.
# Function List:    build_parser: Argument parser with the four verbs.
#                   main: Entry point; returns the process exit code.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import argparse
import logging
import sys

import yaml

from ..Errors import FirstLookError, InvalidParams, ParseError, RuntimeAbort, ValidationError
from ..Metrics import write_report
from ..World import KINDS, make_surface, save_mesh
from .Runner import EXIT_CODES, replay, run_mission
from .Scenario import parse_scenario

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_ABORT = 2
EXIT_INVALID = 3


def _param(text):
    key, sep, value = text.partition('=')
    if not sep or not key:
        raise argparse.ArgumentTypeError('expected key=value, got %r' % text)
    return key, yaml.safe_load(value)


def build_parser():
    parser = argparse.ArgumentParser(prog='pyfirstlook',
                                     description='Surface-adaptive inspection view planning in simulation.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='more log output (-v info, -vv debug)')
    verbs = parser.add_subparsers(dest='verb', required=True)

    run = verbs.add_parser('run', help='run a scenario headlessly')
    run.add_argument('scenario', help='scenario YAML file')
    run.add_argument('--out', default=None, help='output directory (overrides run.output_dir)')

    rep = verbs.add_parser('replay', help='recompute the metrics report from a run log')
    rep.add_argument('log', help='run_log.csv of an earlier run')
    rep.add_argument('--out', default=None, help='write the report here instead of stdout')

    val = verbs.add_parser('validate', help='parse and validate a scenario')
    val.add_argument('scenario', help='scenario YAML file')

    gen = verbs.add_parser('gen-surface', help='write a synthetic surface mesh')
    gen.add_argument('kind', choices=KINDS)
    gen.add_argument('--param', action='append', type=_param, default=[], metavar='KEY=VALUE',
                     help='generator parameter, repeatable')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--out', required=True, help='destination .obj or .ply')
    return parser


def _run(args):
    scenario = parse_scenario(args.scenario)
    result = run_mission(scenario, args.out)
    print('%s: %s after %d ticks, outputs in %s' % (scenario.name, result.status, len(result.log),
                                                    result.output_dir))
    return EXIT_CODES[result.status]


def _replay(args):
    report = replay(args.log)
    if args.out is None:
        print(report.model_dump_json(indent=2))
    else:
        write_report(report, args.out)
    return EXIT_OK


def _validate(args):
    scenario = parse_scenario(args.scenario)
    print('%s: ok (%d landmarks, d_view %g m, N %d)' % (scenario.name,
                                                      len(scenario.route.landmarks),
                                                      scenario.planner.d_view,
                                                      scenario.planner.horizon_n))
    return EXIT_OK


def _gen_surface(args):
    mesh = make_surface(args.kind, dict(args.param), seed=args.seed)
    save_mesh(mesh, args.out)
    print('%r written to %s' % (mesh, args.out))
    return EXIT_OK


_VERBS = {
    'run': _run,
    'replay': _replay,
    'validate': _validate,
    'gen-surface': _gen_surface,
}


def main(argv=None):
    '''Run the command line; returns 0 Done, 1 failure, 2 abort, 3 invalid input.'''

    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        return _VERBS[args.verb](args)
    except RuntimeAbort as exc:
        logger.error('Aborted: %s (log: %s)', exc, exc.log_path)
        return EXIT_ABORT
    except (ParseError, ValidationError, InvalidParams) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    except FirstLookError as exc:
        logger.error('%s', exc)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
