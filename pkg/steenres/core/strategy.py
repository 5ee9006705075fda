"""
Applicability predicates for the filtered extension and the choice of subalgebra per bidegree.
"""
import functools
import logging

from .exceptions import ParamError, NotAdmissible, WrongContainment
from .subalgebra import make_subalgebra, preset
from .types import StrategyMode, Regime
from ..settings import DefaultConfig as config

LOGGER = logging.getLogger(__name__)

ABOVE_CANDIDATES = tuple(
    ("{}({})".format(kind, n), n, kind == "F'") for n in (1, 2, 3) for kind in ("F'", "F")
)


def smallest_a(b):
    """
    Smallest n with B contained in A(n).
    """
    return max((p.s + p.t for p in b.positions), default=1) - 1


def in_a(b, n):
    return all(p.s + p.t <= n + 1 for p in b.positions)


def in_f(b, n, primed=False):
    if primed:
        return all(p.t > n or (p.t == n and p.s >= 1) for p in b.positions)
    return all(p.t > n for p in b.positions)


def applicable_below(b, n, s, t):
    """
    Filtered extension is safe at (s, t) when t > (2^(n+1) - 1)(s + 1) + tau_B.

    :raises: WrongContainment if B is not inside A(n)
    """
    if not in_a(b, n):
        raise WrongContainment("{} is not contained in A({})".format(b.name, n))
    return t > ((1 << (n + 1)) - 1) * (s + 1) + b.tau


def applicable_above(b, n, s, t, primed=False):
    """
    Filtered extension is safe at (s, t) when t < (2^(n+1) - 1)s, or
    t < (2^(n+1) - 2)s for subalgebras of F'(n).

    :raises: WrongContainment if B is not inside F(n) (F'(n) when primed)
    """
    if not in_f(b, n, primed):
        raise WrongContainment("{} is not contained in {}({})".format(b.name, "F'" if primed else "F", n))
    slope = (1 << (n + 1)) - (2 if primed else 1)
    return t < slope * s


def applicable(b, s, t):
    """
    True if some predicate holds for B at (s, t): the below bound for the
    smallest A(n) containing B, or the above bound for the largest F(n) or
    F'(n) containing B.
    """
    if not b.positions:
        return False
    if applicable_below(b, smallest_a(b), s, t):
        return True
    lowest = min(p.t for p in b.positions)
    if applicable_above(b, lowest - 1, s, t):
        return True
    return in_f(b, lowest, primed=True) and applicable_above(b, lowest, s, t, primed=True)


def useful(b, t):
    """
    Some nonzero signature of B fits into degree t.
    """
    low = b.min_degree
    return low is not None and low <= t


@functools.lru_cache(maxsize=16)
def segment_candidates(limit):
    """
    Admissible subalgebras spanned by initial segments of length 1..limit,
    longest first.
    """
    out = []
    for k in range(1, limit + 1):
        try:
            out.append(make_subalgebra("segment", k))
        except NotAdmissible:
            LOGGER.debug("initial segment of length %d is not admissible", k)
    return tuple(reversed(out))


class Strategy:
    """
    How each bidegree is extended.

    :type  mode: StrategyMode
    :param mode: naive, auto or fixed

    :type  subalgebra: str
    :param subalgebra: preset name for the fixed mode, e.g. "A(1)" or "F'(1)"

    :type  regime: Regime
    :param regime: which family auto tries first
    """

    def __init__(self, mode=StrategyMode.AUTO, subalgebra=None, regime=Regime.BELOW,
                 max_segment=config.MAX_CANDIDATE_SEGMENT):
        self.mode = StrategyMode(mode)
        self.regime = Regime(regime)
        self.subalgebra = subalgebra
        self.max_segment = max_segment
        if self.mode == StrategyMode.FIXED:
            if not subalgebra:
                raise ParamError("fixed strategy needs a subalgebra name")
            # reject unknown names early; F-family truncation is chosen per degree
            preset(subalgebra, 0)

    @classmethod
    def parse(cls, text, regime=config.REGIME):
        """
        Parse "naive", "auto" or "fixed:<name>".
        """
        if isinstance(regime, str):
            try:
                regime = Regime[regime.upper()]
            except KeyError:
                raise ParamError("regime `{}` is illegal".format(regime))
        if text == "naive":
            return cls(StrategyMode.NAIVE, regime=regime)
        if text == "auto":
            return cls(StrategyMode.AUTO, regime=regime)
        if isinstance(text, str) and text.startswith("fixed:"):
            return cls(StrategyMode.FIXED, subalgebra=text[len("fixed:"):], regime=regime)
        raise ParamError("strategy `{}` is illegal".format(text))

    def describe(self):
        if self.mode == StrategyMode.FIXED:
            return "fixed:{}".format(self.subalgebra)
        if self.mode == StrategyMode.AUTO:
            return "auto/{}".format(self.regime)
        return "naive"

    def __repr__(self):
        return "<Strategy {}>".format(self.describe())

    def _below(self, s, t):
        for b in segment_candidates(self.max_segment):
            if useful(b, t) and applicable_below(b, smallest_a(b), s, t):
                return b
        return None

    def _above(self, s, t):
        for name, n, primed in ABOVE_CANDIDATES:
            b = preset(name, t)
            if useful(b, t) and applicable_above(b, n, s, t, primed):
                return b
        return None

    def choose(self, s, t):
        if self.mode == StrategyMode.NAIVE:
            return None
        if self.mode == StrategyMode.FIXED:
            b = preset(self.subalgebra, t)
            return b if useful(b, t) and applicable(b, s, t) else None
        if self.regime == Regime.BELOW:
            order = (self._below, self._above)
        else:
            order = (self._above, self._below)
        for pick in order:
            b = pick(s, t)
            if b is not None:
                return b
        return None


def choose_subalgebra(strategy, s, t):
    """
    Subalgebra for the filtered extension at (s, t), None for the naive step.
    """
    return strategy.choose(s, t)
