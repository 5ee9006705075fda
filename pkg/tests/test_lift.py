import random
import sys

sys.path.append(".")

import pytest

from steenres import Resolver
from steenres.core.engine import lift_cycle
from steenres.core.exceptions import FrontierViolation, NotACycle, NotApplicable
from steenres.core.freemod import FreeElement, MatrixCache, apply_differential
from steenres.core.step_hooks import StatsHook
from steenres.core.strategy import Strategy, applicable
from steenres.core.subalgebra import make_subalgebra, preset
from steenres.core.types import Phase

from factorys import PRESET_NAMES, boundary_factory


def lift_bidegrees(res, top=14):
    # z lives in C_{s,t}; w in C_{s+1,t} needs s + 1 <= max_s
    for s in range(0, res.max_s):
        for t in range(s + 1, min(top, res.frontier_of(s + 1) + 1) + 1):
            yield s, t


class TestLift:
    def test_zero(self, gnaive):
        assert lift_cycle(gnaive.resolution, None, FreeElement()) == FreeElement()
        assert gnaive.lift(FreeElement(), "A(1)") == FreeElement()

    def test_generator_boundary(self, gnaive):
        res = gnaive.resolution
        for gen in res.generators(2):
            if gen.t > 14:
                continue
            w = lift_cycle(res, None, gen.differential)
            assert apply_differential(res, w) == gen.differential

    def test_random_boundaries(self, gnaive):
        res = gnaive.resolution
        for s, t in lift_bidegrees(res):
            pair = boundary_factory(res, s + 1, t)
            if pair is None:
                continue
            _, z = pair
            w = lift_cycle(res, None, z)
            assert apply_differential(res, w) == z, (s, t)

    def test_with_subalgebra(self, gnaive):
        res = gnaive.resolution
        strategy = Strategy.parse("auto")
        lifted = 0
        for s, t in lift_bidegrees(res, top=16):
            b = strategy.choose(s + 1, t)
            if b is None:
                continue
            pair = boundary_factory(res, s + 1, t)
            if pair is None:
                continue
            _, z = pair
            stats = StatsHook()
            w = lift_cycle(res, b, z, hooks=[stats])
            assert apply_differential(res, w) == z, (s, t, b.name)
            assert all(r.phase == Phase.LIFT for r in stats.log)
            lifted += 1
        assert lifted > 0

    def test_resolver_lift_by_name(self, gnaive):
        res = gnaive.resolution
        h0h3 = res.generators_in_degree(2, 9)[0]
        z = h0h3.differential
        w = gnaive.lift(z, "A(0)")
        assert apply_differential(res, w) == z

    def test_not_a_cycle(self, gnaive):
        res = gnaive.resolution
        h1 = res.generators_in_degree(1, 2)[0]
        with pytest.raises(NotACycle):
            lift_cycle(res, None, FreeElement.generator(h1.ref))

    def test_not_applicable(self, gnaive):
        res = gnaive.resolution
        h0 = res.generators_in_degree(1, 1)[0]
        z = FreeElement([((1,), h0.ref)])
        with pytest.raises(NotApplicable):
            lift_cycle(res, make_subalgebra("A", 2), z)

    def test_beyond_frontier(self, gsmall):
        res = gsmall.resolution
        g0 = res.generators(0)[0]
        z = FreeElement([((res.frontier_of(0) + 1,), g0.ref)])
        with pytest.raises(FrontierViolation):
            lift_cycle(res, None, z)

    def test_top_row_full_matrix(self, gsmall):
        res = gsmall.resolution
        top = res.max_s - 1
        assert res.frontier_of(top + 1) < top + 1
        lifted = 0
        for t in range(top + 1, res.frontier_of(top) + 1):
            pair = boundary_factory(res, top + 1, t)
            if pair is None:
                continue
            _, z = pair
            w = lift_cycle(res, None, z)
            assert apply_differential(res, w) == z, t
            lifted += 1
        assert lifted > 0

    def test_top_row_needs_next_row_for_subalgebra(self, gsmall):
        res = gsmall.resolution
        top = res.max_s - 1
        gen = [g for g in res.generators(top + 1) if g.t > top + 2][0]
        with pytest.raises(FrontierViolation, match=r"\({}, {}\)".format(top + 1, gen.t - 1)):
            lift_cycle(res, make_subalgebra("A", 0), gen.differential)


@pytest.mark.slow
@pytest.mark.timeout(3600)
class TestLiftWide:
    def test_random_roundtrips(self):
        resolver = Resolver("naive")
        resolver.resolve(20, 8)
        res = resolver.resolution
        cache = MatrixCache(4096)
        rng = random.Random(11)
        places = list(lift_bidegrees(res, top=24))

        done, filtered = 0, set()
        for _ in range(20000):
            if done == 1000:
                break
            s, t = rng.choice(places)
            pair = boundary_factory(res, s + 1, t)
            if pair is None:
                continue
            _, z = pair
            b = preset(rng.choice(PRESET_NAMES), t)
            if not applicable(b, s + 1, t):
                b = None
            w = lift_cycle(res, b, z, cache)
            assert apply_differential(res, w) == z, (s, t, b and b.name)
            done += 1
            if b is not None:
                filtered.add(b.name)
        assert done == 1000
        assert len(filtered) >= 3
