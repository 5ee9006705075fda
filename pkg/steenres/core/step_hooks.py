import logging

from .hooks import BaseStepHook
from .stats import StatsLog
from . import checkpoint

LOGGER = logging.getLogger(__name__)


class StatsHook(BaseStepHook):
    """
    Collect every StatsRecord into a StatsLog.
    """

    def __init__(self, log=None):
        self.log = log if log is not None else StatsLog()

    def on_record(self, record):
        self.log.add(record)


class CheckpointHook(BaseStepHook):
    """
    Save the resolution after each completed internal degree.
    """

    def __init__(self, res, path, strategy=None, every=1):
        self._res = res
        self._path = path
        self._strategy = strategy
        self._every = max(1, every)
        self.saves = 0

    def aft_degree(self, t):
        if t % self._every:
            return
        checkpoint.save(self._res, self._path, self._strategy)
        self.saves += 1
        LOGGER.debug("periodic checkpoint after t=%d", t)

