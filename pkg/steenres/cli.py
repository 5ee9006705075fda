# -*- coding: UTF-8 -*-
"""
`steenres` command line: resolve | chart | verify | lift.
"""
import argparse
import functools
import logging
import os
import sys

from .core import checkpoint, engine, export
from .core.abstract import Chart
from .core.check import check_pass_param
from .core.exceptions import (
    CheckpointError, EngineError, LiftFailed, NotACycle, NotHomogeneous, ParamError, ResidualNonzero,
)
from .core.freemod import apply_differential
from .core.prepare import Parse, Prepare, dumps, loads
from .core.step_hooks import CheckpointHook, StatsHook
from .core.stub import Resolver
from .core.types import Status
from .settings import DefaultConfig as config
from .settings import set_log_level

LOGGER = logging.getLogger(__name__)


def error_handler(func):
    """
    Turn library exceptions into a Status carrying the exit code.
    """

    @functools.wraps(func)
    def handler(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except NotACycle as e:
            LOGGER.error("{}\n{}".format(func.__name__, e))
            return Status(Status.NOT_A_CYCLE, message="not a cycle: {}".format(e))
        except LiftFailed as e:
            LOGGER.error("{}\n{}".format(func.__name__, e))
            return Status(Status.NO_SOLUTION, message="no solution (signature rank {}): {}".format(e.rank, e))
        except EngineError as e:
            LOGGER.error("{}\n{}".format(func.__name__, e))
            return Status(Status.ENGINE_FATAL, message="engine failure: {}".format(e))
        except CheckpointError as e:
            LOGGER.error("{}\n{}".format(func.__name__, e))
            return Status(Status.CHECKPOINT_ERROR, message=str(e))
        except (ParamError, NotHomogeneous) as e:
            return Status(Status.ILLEGAL_ARGUMENT, message=str(e))
        except OSError as e:
            LOGGER.error("{}\n{}".format(func.__name__, e))
            return Status(Status.UNEXPECTED_ERROR, message=str(e))

    return handler


def _write_text(text, out):
    if out:
        with open(out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


@error_handler
def cmd_resolve(args):
    check_pass_param(max_stem=args.max_stem, max_s=args.max_s, strategy=args.strategy,
                     regime=args.regime, cache=args.cache)
    if args.threads is not None:
        check_pass_param(threads=args.threads)

    options = dict(strategy=args.strategy, regime=args.regime, threads=args.threads, cache=args.cache)
    if args.checkpoint and os.path.exists(args.checkpoint):
        resolver = Resolver.from_checkpoint(args.checkpoint, **options)
        LOGGER.info("resuming from %s", args.checkpoint)
    else:
        resolver = Resolver(**options)

    stats = None
    if args.stats:
        stats = StatsHook()
        resolver.set_hook(stats=stats)
    if args.checkpoint:
        resolver.set_hook(checkpoint=CheckpointHook(resolver.resolution, args.checkpoint))

    try:
        res = resolver.resolve(args.max_stem, args.max_s)
    finally:
        if stats is not None:
            stats.log.write(args.stats)
    if args.checkpoint:
        resolver.save(args.checkpoint)
    return Status(message="resolved through stem {}: {} generators".format(
        args.max_stem, res.total_generators()))


@error_handler
def cmd_chart(args):
    check_pass_param(checkpoint=args.checkpoint, format=args.format)
    chart = Chart(engine.chart(checkpoint.load(args.checkpoint)))
    if args.format == "svg":
        if not args.out:
            raise ParamError("svg charts need --out")
        export.write(chart, args.format, args.out)
    elif args.out:
        export.write(chart, args.format, args.out)
    else:
        _write_text(export.to_json(chart) if args.format == "json" else export.to_tsv(chart), None)
    return Status(message="{} bidegrees".format(len(chart)))


@error_handler
def cmd_verify(args):
    check_pass_param(checkpoint=args.checkpoint)
    report = engine.verify(checkpoint.load(args.checkpoint), deep=args.deep)
    print(report)
    if report:
        return Status(Status.VERIFY_FAILED, message="{} violations".format(len(report)))
    return Status()


def _read_cycle(path, res):
    with open(path) as f:
        text = f.read()
    try:
        data = loads(text)
    except ValueError as e:
        raise ParamError("cycle file {} is not JSON: {}".format(path, e))
    return Parse.free_element(data, res)


@error_handler
def cmd_lift(args):
    check_pass_param(checkpoint=args.checkpoint)
    resolver = Resolver(resolution=checkpoint.load(args.checkpoint))
    res = resolver.resolution
    z = _read_cycle(args.cycle, res)
    w = resolver.lift(z, args.subalgebra)
    if apply_differential(res, w) != z:
        raise ResidualNonzero("d(w) differs from the cycle, refusing to write")
    _write_text(dumps(Prepare.free_element(w)) + "\n", args.out)
    return Status(message="lift with {} terms".format(len(w)))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="steenres",
        description="Minimal resolutions of the mod 2 Steenrod algebra with signature filtrations.")
    parser.add_argument('-v', '--verbose', action="count", default=0,
                        help="INFO logging, twice for DEBUG")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("resolve", help="extend a resolution")
    p.add_argument('--max-stem', type=int, required=True, metavar="N")
    p.add_argument('--max-s', type=int, default=None, metavar="S", help="defaults to --max-stem")
    p.add_argument('--strategy', default=config.STRATEGY, help="auto, naive or fixed:<subalgebra>")
    p.add_argument('--regime', default=config.REGIME, choices=["below", "above"])
    p.add_argument('--checkpoint', default=None, metavar="PATH",
                   help="resume from PATH if it exists, save there after each degree")
    p.add_argument('--stats', default=None, metavar="PATH", help="write per-matrix statistics as TSV")
    p.add_argument('--threads', type=int, default=None, metavar="K",
                   help="worker threads; {} overrides".format(config.THREADS_ENV))
    p.add_argument('--cache', type=int, default=config.MATRIX_CACHE_SIZE, metavar="N",
                   help="matrix cache size, 0 disables")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("chart", help="export the Ext chart of a checkpoint")
    p.add_argument('--checkpoint', required=True, metavar="PATH")
    p.add_argument('--format', default="tsv", choices=["json", "tsv", "svg"])
    p.add_argument('--out', default=None, metavar="PATH", help="stdout when omitted (json and tsv only)")
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("verify", help="check d^2 = 0 and minimality of a checkpoint")
    p.add_argument('--checkpoint', required=True, metavar="PATH")
    p.add_argument('--deep', action="store_true", help="also recompute exactness inside the frontier")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lift", help="lift a cycle through the differential")
    p.add_argument('--checkpoint', required=True, metavar="PATH")
    p.add_argument('--cycle', required=True, metavar="FILE", help="JSON free element")
    p.add_argument('--subalgebra', default=None, metavar="NAME", help="e.g. A(1); full solve when omitted")
    p.add_argument('--out', default=None, metavar="FILE")
    p.set_defaults(func=cmd_lift)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_log_level(logging.DEBUG if args.verbose > 1 else logging.INFO)

    status = args.func(args)
    if not status.OK():
        sys.stderr.write("steenres {}: {}\n".format(args.command, status.message))
    else:
        LOGGER.info(status.message)
    return status.code


if __name__ == "__main__":
    sys.exit(main())
