import bisect
import logging

from .exceptions import ParamError, FrontierViolation
from .freemod import FreeElement, GeneratorRef

LOGGER = logging.getLogger(__name__)


class Generator:
    """
    Generator of C_s with its differential in C_{s-1}.
    """

    __slots__ = ('s', 'index', 't', 'differential')

    def __init__(self, s, index, t, differential):
        self.s = s
        self.index = index
        self.t = t
        self.differential = differential

    @property
    def ref(self):
        return GeneratorRef(self.s, self.index, self.t)

    def __repr__(self):
        return "Generator(s={}, index={}, t={}, d={})".format(self.s, self.index, self.t, self.differential.format())


class Resolution:
    """
    Partial minimal resolution C_* -> F_2 over the Steenrod algebra.

    C_0 has the single generator g0 in degree 0. The frontier maps s to the
    largest t such that the complex is exact at C_s through internal degree t;
    for an untouched s it is s - 1.
    """

    def __init__(self):
        self._generators = {0: [Generator(0, 0, 0, FreeElement())]}
        self._degrees = {0: [0]}
        self._frontier = {0: 0}
        self._methods = {}
        self.strategy = ""

    def __repr__(self):
        return "<Resolution max_s={} generators={}>".format(self.max_s, self.total_generators())

    def load_generator(self, s, index, t, differential):
        """
        Append a persisted generator; indices of C_s must arrive in order.
        """
        if s < 1:
            raise ParamError("C_0 has exactly one generator")
        if index != self.ngens(s):
            raise ParamError("generator indices of C_{} are not contiguous".format(s))
        gen = Generator(s, index, t, differential)
        self._append(gen)
        return gen.ref

    def load_frontier(self, frontier, methods=None):
        for s, t in frontier:
            self._frontier[int(s)] = int(t)
        self._methods.update(methods or {})

    def _append(self, gen):
        degrees = self._degrees.setdefault(gen.s, [])
        if degrees and gen.t < degrees[-1]:
            raise ParamError("generators of C_{} must be added in increasing degree".format(gen.s))
        self._generators.setdefault(gen.s, []).append(gen)
        degrees.append(gen.t)

    @property
    def max_s(self):
        return max(self._generators)

    @property
    def frontier(self):
        return dict(sorted(self._frontier.items()))

    @property
    def methods(self):
        return dict(self._methods)

    def frontier_of(self, s):
        return self._frontier.get(s, s - 1)

    def ngens(self, s):
        return len(self._generators.get(s, ()))

    def total_generators(self):
        return sum(len(gens) for gens in self._generators.values())

    def generators(self, s):
        return list(self._generators.get(s, ()))

    def all_generators(self):
        for s in sorted(self._generators):
            yield from self._generators[s]

    def generators_up_to(self, s, t):
        gens = self._generators.get(s)
        if not gens:
            return []
        return gens[:bisect.bisect_right(self._degrees[s], t)]

    def generators_in_degree(self, s, t):
        degrees = self._degrees.get(s, [])
        lo = bisect.bisect_left(degrees, t)
        hi = bisect.bisect_right(degrees, t)
        return self._generators[s][lo:hi] if hi > lo else []

    def generator(self, ref):
        try:
            return self._generators[ref[0]][ref[1]]
        except (KeyError, IndexError):
            raise ParamError("no generator ({}, {})".format(ref[0], ref[1]))

    def differential(self, ref):
        return self.generator((ref.s, ref.index)).differential

    def add_generator(self, s, t, differential):
        """
        Append a generator of C_s in degree t with d(g) = differential.

        :rtype: GeneratorRef
        """
        if s < 1:
            raise ParamError("new generators live in C_s with s >= 1")
        gen = Generator(s, self.ngens(s), t, differential)
        self._append(gen)
        return gen.ref

    def set_differential(self, ref, differential):
        self.generator(ref).differential = differential

    def check_step(self, s, t):
        """
        Raise FrontierViolation unless (s, t) is the next bidegree to extend.
        """
        if self.frontier_of(s) != t - 1:
            raise FrontierViolation("C_{} is exact through t={}, cannot extend at t={}".format(
                s, self.frontier_of(s), t))
        if s > 0 and self.frontier_of(s - 1) < t:
            raise FrontierViolation("generators of C_{} are only known through t={}".format(
                s, self.frontier_of(s - 1)))

    def advance(self, s, t, method):
        self._frontier[s] = t
        self._methods[(s, t)] = method

    def method(self, s, t):
        return self._methods.get((s, t))
