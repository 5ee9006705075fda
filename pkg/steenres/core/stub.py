# -*- coding: UTF-8 -*-

import collections
import logging

from . import __version__
from . import checkpoint, engine
from .abstract import Chart
from .check import check_pass_param
from .exceptions import ParamError
from .freemod import MatrixCache, element_degree
from .hooks import BaseStepHook
from .pool import WorkerPool, resolve_threads
from .resolution import Resolution
from .strategy import Strategy
from .subalgebra import preset

from ..settings import DefaultConfig as config

LOGGER = logging.getLogger(__name__)


class Resolver:
    """
    Holds a resolution together with the strategy, matrix cache and hooks used to extend it.

    :type  strategy: str
    :param strategy: "auto", "naive" or "fixed:<subalgebra>"

    :type  regime: str
    :param regime: "below" or "above", the family auto tries first

    :type  threads: int
    :param threads: (Optional) worker threads for matrix construction;
        STEENRES_THREADS overrides it

    :type  cache: int
    :param cache: matrix cache size, 0 disables caching
    """

    def __init__(self, strategy=config.STRATEGY, regime=config.REGIME, threads=None,
                 cache=config.MATRIX_CACHE_SIZE, resolution=None):
        check_pass_param(strategy=strategy, regime=regime, cache=cache)
        self._strategy = Strategy.parse(strategy, regime)
        self._threads = resolve_threads(threads)
        self._cache = MatrixCache(cache) if cache else None
        self._res = resolution if resolution is not None else Resolution()
        self._hooks = collections.OrderedDict()

    def __repr__(self):
        return "<Resolver {} {!r}>".format(self._strategy.describe(), self._res)

    @classmethod
    def from_checkpoint(cls, path, **kwargs):
        return cls(resolution=checkpoint.load(path), **kwargs)

    @property
    def resolution(self):
        return self._res

    @property
    def strategy(self):
        return self._strategy

    @property
    def threads(self):
        return self._threads

    @property
    def cache(self):
        return self._cache

    def client_version(self):
        return __version__

    def set_hook(self, **kwargs):
        """
        Register step hooks by name, e.g. set_hook(stats=StatsHook()).
        """
        for name, hook in kwargs.items():
            if not isinstance(hook, BaseStepHook):
                raise ParamError("{} hook must be a subclass of `BaseStepHook`".format(name))
            self._hooks[name] = hook

    def hook(self, name):
        return self._hooks.get(name)

    @property
    def hooks(self):
        return tuple(self._hooks.values())

    def resolve(self, max_stem, max_s=None):
        """
        Extend the resolution through stem max_stem and homological degree max_s.

        :type  max_s: int
        :param max_s: (Optional) defaults to max_stem
        """
        if not isinstance(max_stem, int) or isinstance(max_stem, bool):
            raise ParamError("max_stem is illegal")
        if max_stem < 0:
            return self._res
        max_s = max_stem if max_s is None else max_s
        check_pass_param(max_stem=max_stem, max_s=max_s)

        self._res.strategy = self._strategy.describe()
        with WorkerPool(self._threads) as pool:
            engine.resolve_range(self._res, max_s, max_stem, self._strategy,
                                 cache=self._cache, hooks=self.hooks, pool=pool)
            for name, task in sorted(pool.stats()["tasks"].items()):
                LOGGER.info("%s: %d tasks on %d threads in %.3f s",
                            name, task["called_times"], pool.threads, task["total_time"])
        return self._res

    def extend(self, s, t, subalgebra=None, force=False):
        """
        Extend one bidegree, naive when subalgebra is None.
        """
        if subalgebra is None:
            return engine.extend_naive(self._res, s, t, self._cache, self.hooks)
        b = preset(subalgebra, t) if isinstance(subalgebra, str) else subalgebra
        return engine.extend_filtered(self._res, s, t, b, self._cache, self.hooks, force=force)

    def lift(self, z, subalgebra=None):
        """
        Lift a cycle z of C_{s,t} to w in C_{s+1,t} with d(w) = z.
        """
        b = subalgebra
        if isinstance(subalgebra, str) and z:
            b = preset(subalgebra, element_degree(z)[1])
        return engine.lift_cycle(self._res, b, z, self._cache, self.hooks)

    def verify(self, deep=False):
        return engine.verify(self._res, deep)

    def chart(self):
        return Chart(engine.chart(self._res))

    def save(self, path):
        checkpoint.save(self._res, path)
