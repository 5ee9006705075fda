import pytest

from steenres.core.exceptions import ParamError, WrongContainment
from steenres.core.strategy import (
    ABOVE_CANDIDATES, Strategy, applicable, applicable_above, applicable_below, choose_subalgebra, in_a, in_f,
    segment_candidates, smallest_a, useful,
)
from steenres.core.subalgebra import make_subalgebra, preset
from steenres.core.types import Regime, StrategyMode


class TestPredicates:
    def test_below_examples(self):
        assert applicable_below(make_subalgebra("A", 2), 2, 14, 134)
        assert not applicable_below(make_subalgebra("A", 0), 0, 3, 4)
        assert applicable_below(make_subalgebra("A", 0), 0, 3, 6)
        assert applicable_below(make_subalgebra("A", 1), 1, 1, 19)

    def test_below_boundary(self):
        # 3 * 2 + 6 = 12
        a1 = make_subalgebra("A", 1)
        assert not applicable_below(a1, 1, 1, 12)
        assert applicable_below(a1, 1, 1, 13)

    def test_below_containment(self):
        with pytest.raises(WrongContainment):
            applicable_below(make_subalgebra("A", 2), 1, 1, 100)

    def test_above_examples(self):
        assert applicable_above(preset("F(2)", 149), 2, 35, 149)
        f1 = preset("F(1)", 40)
        for s in range(2, 12):
            for t in range(s + 1, 3 * s - 3):
                assert applicable_above(f1, 1, s, t)

    def test_above_primed(self):
        fp1 = preset("F'(1)", 30)
        assert applicable_above(fp1, 1, 10, 19, primed=True)
        assert not applicable_above(fp1, 1, 10, 20, primed=True)

    def test_above_containment(self):
        with pytest.raises(WrongContainment):
            applicable_above(preset("F'(1)", 20), 1, 10, 15)
        with pytest.raises(WrongContainment):
            applicable_above(make_subalgebra("A", 1), 1, 10, 15, primed=True)

    def test_containment_helpers(self):
        a1 = make_subalgebra("A", 1)
        assert smallest_a(a1) == 1
        assert in_a(a1, 1) and in_a(a1, 3) and not in_a(a1, 0)
        fp1 = preset("F'(1)", 20)
        assert in_f(fp1, 1, primed=True)
        assert not in_f(fp1, 1)
        assert in_f(fp1, 0)

    def test_applicable_dispatch(self):
        assert applicable(make_subalgebra("A", 1), 1, 19)
        assert not applicable(make_subalgebra("A", 1), 1, 12)
        assert applicable(preset("F'(1)", 15), 8, 15)
        assert applicable(preset("F(1)", 15), 6, 15)
        assert not applicable(preset("F(1)", 15), 5, 15)

    def test_useful(self):
        e = preset("E(Sq1,Sq(0,1))")
        assert useful(e, 1)
        assert not useful(preset("F(1)", 2), 2)
        assert useful(preset("F(1)", 3), 3)


class TestCandidates:
    def test_segments_longest_first(self):
        cands = segment_candidates(10)
        sizes = [b.size for b in cands]
        assert sizes == sorted(sizes, reverse=True)
        names = [b.name for b in cands]
        assert "A(0)" in names and "A(1)" in names and "A(2)" in names and "E(Sq1,Sq(0,1))" in names

    def test_above_order(self):
        assert [name for name, _, _ in ABOVE_CANDIDATES] == ["F'(1)", "F(1)", "F'(2)", "F(2)", "F'(3)", "F(3)"]


class TestStrategy:
    @pytest.mark.parametrize("text,desc", [("naive", "naive"), ("auto", "auto/below"), ("fixed:A(1)", "fixed:A(1)")])
    def test_parse(self, text, desc):
        assert Strategy.parse(text).describe() == desc

    def test_parse_regime(self):
        strategy = Strategy.parse("auto", "above")
        assert strategy.regime == Regime.ABOVE
        assert strategy.describe() == "auto/above"
        assert strategy.mode == StrategyMode.AUTO

    @pytest.mark.parametrize("text", ["", "greedy", "fixed:", "fixed:B(7)", None])
    def test_parse_invalid(self, text):
        with pytest.raises(ParamError):
            Strategy.parse(text)

    def test_parse_invalid_regime(self):
        with pytest.raises(ParamError):
            Strategy.parse("auto", "sideways")

    def test_naive_never_chooses(self):
        strategy = Strategy.parse("naive")
        assert all(strategy.choose(s, t) is None for s in range(5) for t in range(s, 30))

    def test_one_two_falls_back(self):
        assert choose_subalgebra(Strategy.parse("auto"), 1, 2) is None
        assert choose_subalgebra(Strategy.parse("auto", "above"), 1, 2) is None

    def test_below_picks_large_segment(self):
        b = choose_subalgebra(Strategy.parse("auto"), 1, 60)
        assert b is not None
        assert b.size >= 6
        assert applicable_below(b, smallest_a(b), 1, 60)

    def test_above_strip_picks_f_prime_1(self):
        strategy = Strategy.parse("auto", "above")
        for s in range(2, 10):
            for t in range(s, 2 * s):
                assert choose_subalgebra(strategy, s, t).name == "F'(1)"

    def test_choice_is_applicable(self):
        for regime in ("below", "above"):
            strategy = Strategy.parse("auto", regime)
            for s in range(0, 8):
                for t in range(s, 30):
                    b = strategy.choose(s, t)
                    if b is not None:
                        assert applicable(b, s, t)
                        assert useful(b, t)

    def test_fixed(self):
        strategy = Strategy.parse("fixed:A(1)")
        assert strategy.choose(1, 19).name == "A(1)"
        assert strategy.choose(1, 12) is None
