# -*- coding: UTF-8 -*-

import logging
import os
import threading
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor

from .exceptions import ParamError
from ..settings import DefaultConfig as config

LOGGER = logging.getLogger(__name__)


class Duration:
    def __init__(self):
        self.start_ts = time.perf_counter()
        self.end_ts = None

    def stop(self):
        if self.end_ts:
            return False

        self.end_ts = time.perf_counter()
        return True

    @property
    def value(self):
        if not self.end_ts:
            return None

        return self.end_ts - self.start_ts

    @property
    def ms(self):
        value = self.value
        return None if value is None else value * 1000.0


def resolve_threads(threads=None):
    """
    Worker count: the environment override wins over the argument.
    """
    env = os.environ.get(config.THREADS_ENV)
    if env:
        try:
            threads = int(env)
        except ValueError:
            raise ParamError("{}={!r} is not an int".format(config.THREADS_ENV, env))
    if threads is None:
        threads = config.THREADS
    if isinstance(threads, bool) or not isinstance(threads, int) or threads < 1:
        raise ParamError("threads is illegal")
    return threads


class WorkerPool:
    """
    Runs independent tasks on worker threads and returns results in submission order.

    With a single thread every task runs inline on the caller.
    """

    def __init__(self, threads=1):
        self._threads = threads
        self._executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
        self._lock = threading.Lock()
        self.durations = defaultdict(list)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()

    @property
    def threads(self):
        return self._threads

    def record_duration(self, name, duration):
        with self._lock:
            if len(self.durations[name]) >= 10000:
                self.durations[name].pop(0)
            self.durations[name].append(duration)

    def _timed(self, name, func):
        def run(item):
            duration = Duration()
            try:
                return func(item)
            finally:
                duration.stop()
                self.record_duration(name, duration)

        return run

    def map(self, func, items, name=None):
        items = list(items)
        run = self._timed(name or getattr(func, '__name__', 'task'), func)
        if self._executor is None or len(items) < 2:
            return [run(item) for item in items]
        return list(self._executor.map(run, items))

    def stats(self):
        out = {'tasks': {}}
        for name, durations in self.durations.items():
            out['tasks'][name] = {
                'total_time': sum(d.value for d in durations),
                'called_times': len(durations),
            }
        out['threads'] = self._threads
        return out

    def shutdown(self):
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
