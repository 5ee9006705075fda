"""
Line-oriented checkpoints: one header record, one record per generator, one per
extended bidegree.
"""
import logging
import os
import tempfile

from .exceptions import CheckpointError, ParamError
from .prepare import CHECKPOINT_FORMAT, Parse, Prepare, dumps, loads
from .resolution import Resolution
from ..settings import DefaultConfig as config

LOGGER = logging.getLogger(__name__)


def dump_lines(res, strategy=None):
    strategy = res.strategy if strategy is None else strategy
    yield dumps(Prepare.checkpoint_header(res, strategy))
    for gen in res.all_generators():
        if gen.s > 0:
            yield dumps(Prepare.generator_record(gen))
    for (s, t), method in sorted(res.methods.items()):
        yield dumps(Prepare.step_record(s, t, method))


def save(res, path, strategy=None):
    """
    Write the checkpoint atomically: a temporary file in the target directory
    replaces `path` once it is complete.
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".steenres-", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, 'w') as f:
            for line in dump_lines(res, strategy):
                f.write(line)
                f.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    LOGGER.info("checkpoint with %d generators saved to %s", res.total_generators(), path)


def _check_header(header, path):
    if not isinstance(header, dict) or header.get("record") != "header" \
            or header.get("format") != CHECKPOINT_FORMAT:
        raise CheckpointError("{} is not a steenres checkpoint".format(path))
    if header.get("version") != config.CHECKPOINT_VERSION:
        raise CheckpointError("{} has checkpoint version {}, expected {}".format(
            path, header.get("version"), config.CHECKPOINT_VERSION))
    if header.get("prime") != 2:
        raise CheckpointError("{} is for the prime {}".format(path, header.get("prime")))
    if header.get("basis_order") != config.BASIS_ORDER:
        raise CheckpointError("{} uses basis order {!r}".format(path, header.get("basis_order")))
    frontier = header.get("frontier")
    if not isinstance(frontier, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(type(v) is int for v in p) for p in frontier):
        raise CheckpointError("{} has a malformed frontier {!r}".format(path, frontier))


def load(path):
    """
    Read a checkpoint written by :func:`save`.

    :rtype: Resolution
    :raises: CheckpointError
    """
    if not os.path.exists(path):
        raise CheckpointError("checkpoint {} does not exist".format(path))

    res = Resolution()
    methods = {}
    with open(path) as f:
        lineno = 0
        try:
            header = None
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                record = loads(line)
                if header is None:
                    _check_header(record, path)
                    header = record
                    continue
                kind = record.get("record")
                if kind == "gen":
                    d = Parse.free_element(record["d"], res)
                    res.load_generator(record["s"], record["index"], record["t"], d)
                elif kind == "step":
                    methods[(record["s"], record["t"])] = record["via"]
                else:
                    raise CheckpointError("unknown record type {!r}".format(kind))
        except CheckpointError:
            raise
        except (ValueError, KeyError, TypeError, ParamError) as e:
            raise CheckpointError("{}:{}: {}".format(path, lineno, e))

    if header is None:
        raise CheckpointError("{} is empty".format(path))
    res.load_frontier(header["frontier"], methods)
    res.strategy = header.get("strategy", "")
    LOGGER.info("loaded %d generators from %s", res.total_generators(), path)
    return res
