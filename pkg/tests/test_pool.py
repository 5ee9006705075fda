import os
import threading

import mock
import pytest

from steenres.core.exceptions import ParamError
from steenres.core.pool import Duration, WorkerPool, resolve_threads

from steenres.settings import DefaultConfig as config


class TestDuration:
    def test_stop_once(self):
        d = Duration()
        assert d.value is None and d.ms is None
        assert d.stop()
        assert not d.stop()
        assert d.value >= 0
        assert d.ms == pytest.approx(d.value * 1000.0)


class TestResolveThreads:
    def test_default(self):
        with mock.patch.dict(os.environ, {}):
            os.environ.pop(config.THREADS_ENV, None)
            assert resolve_threads() == config.THREADS
            assert resolve_threads(3) == 3

    def test_env_overrides(self):
        with mock.patch.dict(os.environ, {config.THREADS_ENV: "4"}):
            assert resolve_threads() == 4
            assert resolve_threads(2) == 4

    def test_env_not_int(self):
        with mock.patch.dict(os.environ, {config.THREADS_ENV: "many"}):
            with pytest.raises(ParamError):
                resolve_threads()

    @pytest.mark.parametrize("threads", [0, -1, True, 1.5])
    def test_illegal(self, threads):
        with mock.patch.dict(os.environ, {}):
            os.environ.pop(config.THREADS_ENV, None)
            with pytest.raises(ParamError):
                resolve_threads(threads)


class TestWorkerPool:
    def test_inline(self):
        with WorkerPool(1) as pool:
            assert pool.map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]
            assert pool.stats()['threads'] == 1

    def test_order_kept(self):
        seen = set()
        lock = threading.Lock()

        def work(x):
            with lock:
                seen.add(threading.current_thread().name)
            return x + 1

        with WorkerPool(4) as pool:
            assert pool.map(work, range(100), name="work") == list(range(1, 101))
            assert pool.stats()['tasks']['work']['called_times'] == 100
        assert seen

    def test_exception_propagates(self):
        def fail(x):
            raise ValueError(x)

        with WorkerPool(2) as pool:
            with pytest.raises(ValueError):
                pool.map(fail, [1, 2])

    def test_shutdown_twice(self):
        pool = WorkerPool(2)
        pool.shutdown()
        pool.shutdown()
        assert pool.map(str, [1, 2]) == ["1", "2"]
