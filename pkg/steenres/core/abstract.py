import collections

from .exceptions import ParamError
from .types import ViolationKind


class Violation:

    def __init__(self, kind, s, t, index=None, message=""):
        self.kind = ViolationKind(kind)
        self.s = s
        self.t = t
        self.index = index
        self.message = message

    def __repr__(self):
        attr_list = ['%s=%r' % (key, value) for key, value in self.__dict__.items()]
        return '%s(%s)' % (self.__class__.__name__, ', '.join(attr_list))

    def __str__(self):
        where = "({}, {})".format(self.s, self.t)
        if self.index is not None:
            where = "g[{}][{}] at {}".format(self.s, self.index, where)
        return "{}: {} {}".format(self.kind, where, self.message)


class VerifyReport:
    """
    Violations found by verify; an empty report means the resolution passed.
    """

    def __init__(self, violations=None):
        self._violations = list(violations or [])

    def add(self, kind, s, t, index=None, message=""):
        self._violations.append(Violation(kind, s, t, index, message))

    def __len__(self):
        return len(self._violations)

    def __bool__(self):
        return bool(self._violations)

    def __iter__(self):
        return iter(self._violations)

    def __getitem__(self, item):
        return self._violations[item]

    @property
    def ok(self):
        return not self._violations

    def kinds(self):
        return {v.kind for v in self._violations}

    def of_kind(self, kind):
        return [v for v in self._violations if v.kind == kind]

    def __str__(self):
        if not self._violations:
            return "OK: no violations"
        return "\n".join(str(v) for v in self._violations)


ChartEntry = collections.namedtuple('ChartEntry', ['s', 't', 'n'])


class Chart:
    """
    Generator counts per bidegree, ordered by (t - s, s).
    """

    def __init__(self, entries):
        items = []
        for e in entries:
            s, t, n = e
            if n <= 0:
                raise ParamError("chart counts must be positive, got {} at ({}, {})".format(n, s, t))
            items.append(ChartEntry(s, t, n))
        self._entries = sorted(items, key=lambda e: (e.t - e.s, e.s))

    def __getitem__(self, item):
        return self._entries[item]

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other):
        return isinstance(other, Chart) and self._entries == other._entries

    def __repr__(self):
        return "<Chart {} bidegrees>".format(len(self._entries))

    def entries(self):
        return list(self._entries)

    def triples(self):
        return [tuple(e) for e in self._entries]

    def count(self, s, t):
        for e in self._entries:
            if e.s == s and e.t == t:
                return e.n
        return 0

    def degrees(self, s):
        return sorted(e.t for e in self._entries if e.s == s)

    def max_stem(self):
        return max((e.t - e.s for e in self._entries), default=0)

    def max_s(self):
        return max((e.s for e in self._entries), default=0)
