"""
Admissible subalgebras of the Steenrod algebra and their signature systems.

A subalgebra B is given by the set of its P-generators P_t^s, i.e. bit 2^s of
exponent slot t. Positions are kept most significant first: a larger slot t is
more significant, and among equal t a larger s is.
"""
import collections
import functools
import logging
import re

from .exceptions import ParamError, NotAdmissible, NoBockstein
from .milnor import canonical, basis_of_degree

LOGGER = logging.getLogger(__name__)

BitPosition = collections.namedtuple('BitPosition', ['s', 't'])

Signature = collections.namedtuple('Signature', ['value', 'rank'])

KINDS = ("A", "F", "F'", "segment")

_PRESET_PATTERN = re.compile(r"^(A|F'|F|seg)\((\d+)\)$")
EXTERIOR_NAME = "E(Sq1,Sq(0,1))"


def position_degree(pos):
    return (1 << pos.s) * ((1 << pos.t) - 1)


def _significance(pos):
    return pos.t, pos.s


class Subalgebra:
    """
    Admissible subalgebra B described by its P-generators.

    :type  positions: iterable of (s, t)
    :param positions: the P_t^s contained in B

    :type  name: str
    :param name: label such as "A(2)" or "F'(1)"

    :type  truncation: int
    :param truncation: N when B was cut down to its intersection with A(N)

    :type  kind: str
    :param kind: preset family, one of KINDS, or None for ad hoc position sets
    """

    def __init__(self, positions, name=None, truncation=None, kind=None, index=None):
        pos = set()
        for p in positions:
            s, t = p
            if not isinstance(s, int) or not isinstance(t, int) or s < 0 or t < 1:
                raise ParamError("Illegal bit position {!r}".format(p))
            pos.add(BitPosition(s, t))

        self._positions = tuple(sorted(pos, key=_significance, reverse=True))
        self._truncation = truncation
        self._kind = kind
        self._index = index

        top = max((p.t for p in self._positions), default=0)
        masks = [0] * top
        for p in self._positions:
            masks[p.t - 1] |= 1 << p.s
        self._masks = tuple(masks)
        self._caps = tuple(m.bit_length() for m in masks)

        width = len(self._positions)
        self._weights = tuple((p.t, p.s, 1 << (width - 1 - k)) for k, p in enumerate(self._positions))
        self._tau = sum(position_degree(p) for p in self._positions)
        self._name = name or "B{}".format(list(self._positions))

    def __repr__(self):
        return "<Subalgebra {} ({} positions)>".format(self._name, len(self._positions))

    def __str__(self):
        return self._name

    def __eq__(self, other):
        return isinstance(other, Subalgebra) and self._positions == other._positions

    def __hash__(self):
        return hash(self._positions)

    @property
    def name(self):
        return self._name

    @property
    def positions(self):
        return self._positions

    @property
    def truncation(self):
        return self._truncation

    @property
    def kind(self):
        return self._kind

    @property
    def index(self):
        return self._index

    @property
    def tau(self):
        """
        Degree of the top element of B.
        """
        return self._tau

    @property
    def size(self):
        return len(self._positions)

    @property
    def signature_count(self):
        return 1 << len(self._positions)

    def mask(self, t):
        return self._masks[t - 1] if 1 <= t <= len(self._masks) else 0

    def cap(self, t):
        return self._caps[t - 1] if 1 <= t <= len(self._caps) else 0

    def row_caps(self, length):
        return self._caps[:length]

    @property
    def masks(self):
        return self._masks

    @property
    def min_degree(self):
        """
        Smallest degree of a nonzero signature.
        """
        return min((position_degree(p) for p in self._positions), default=None)

    def is_hopf_form(self):
        return all(m == (1 << m.bit_length()) - 1 for m in self._masks)

    def profile(self):
        """
        Profile function values p(1), p(2), ... for Hopf-form position sets.
        """
        return tuple(self._caps)

    def contains(self, r):
        return all((x & ~self.mask(t)) == 0 for t, x in enumerate(r, start=1))

    def signature_bits(self, r):
        return canonical(x & self.mask(t) for t, x in enumerate(r, start=1))

    def rank_of(self, r):
        """
        Signature rank of an arbitrary exponent sequence.
        """
        rank = 0
        length = len(r)
        for t, s, weight in self._weights:
            if t <= length and (r[t - 1] >> s) & 1:
                rank |= weight
        return rank

    def decode(self, rank):
        out = [0] * len(self._masks)
        for t, s, weight in self._weights:
            if rank & weight:
                out[t - 1] |= 1 << s
        return canonical(out)


def is_admissible(masks):
    """
    Check that the filtration by signatures is stable under right multiplication.

    For every slot i and j >= 1 the bits [0, cap_i - j) must lie in the mask of
    slot i + j. On Hopf-form masks this reads p(i + j) >= p(i) - j.
    """
    count = len(masks)
    for i in range(1, count + 1):
        cap = masks[i - 1].bit_length()
        for j in range(1, cap):
            low = (1 << (cap - j)) - 1
            target = masks[i + j - 1] if i + j <= count else 0
            if target & low != low:
                return False
    return True


def signature_of(b, r):
    """
    The B-signature of Sq(R): the bits of R that lie inside B.

    :rtype: Signature
    """
    r = canonical(r)
    return Signature(b.signature_bits(r), b.rank_of(r))


def signature_rank(b, sig):
    """
    Lexicographic rank of a signature's bit vector over B's ordered positions.

    :raises: ParamError if sig has bits outside B
    """
    value = sig.value if isinstance(sig, Signature) else canonical(sig)
    if not b.contains(value):
        raise ParamError("{} is not a signature of {}".format(value, b.name))
    return b.rank_of(value)


@functools.lru_cache(maxsize=1024)
def enumerate_signatures(b, max_degree=None):
    """
    Signatures of B in increasing rank order.

    :type  max_degree: int
    :param max_degree: (Optional) only list signatures of degree at most this

    :rtype: tuple of Signature
    """
    positions = b.positions
    width = len(positions)
    degrees = [position_degree(p) for p in positions]
    ranks = []

    def walk(k, deg, rank):
        if k == width:
            ranks.append(rank)
            return
        walk(k + 1, deg, rank)
        nxt = deg + degrees[k]
        if max_degree is None or nxt <= max_degree:
            walk(k + 1, nxt, rank | (1 << (width - 1 - k)))

    walk(0, 0, 0)
    return tuple(Signature(b.decode(rank), rank) for rank in ranks)


@functools.lru_cache(maxsize=4096)
def basis_by_signature(b, n):
    """
    Degree-n Milnor basis grouped by signature rank, basis order kept in each group.

    :rtype: dict
    """
    groups = collections.defaultdict(list)
    for r in basis_of_degree(n):
        groups[b.rank_of(r)].append(r)
    return {rank: tuple(rs) for rank, rs in groups.items()}


def vanishing_bounds(b):
    """
    Slopes of the vanishing lines for Ext_B: degrees of the smallest and
    largest Bocksteins P_t^0 in B.

    :raises: NoBockstein
    """
    degrees = [position_degree(p) for p in b.positions if p.s == 0]
    if not degrees:
        raise NoBockstein("{} contains no Bockstein".format(b.name))
    return min(degrees), max(degrees)


def segment_order(limit):
    """
    P_t^s ordered first by t + s, then by s.
    """
    return sorted((BitPosition(s, d - s) for d in range(1, limit + 2) for s in range(0, d)),
                  key=lambda p: (p.s + p.t, p.s))


def _a_positions(n):
    return [(s, t) for t in range(1, n + 2) for s in range(0, n + 2 - t)]


def _f_positions(n, truncation, primed):
    first = n if primed else n + 1
    out = []
    for t in range(first, truncation + 2):
        lowest = 1 if primed and t == n else 0
        out.extend((s, t) for s in range(lowest, truncation + 2 - t))
    return out


def _is_fprime_shape(positions, n, truncation):
    return set(positions) == {BitPosition(s, t) for s, t in _f_positions(n, truncation, True)}


def _segment_name(positions):
    pos = set(positions)
    for k in range(0, 8):
        if pos == {BitPosition(*p) for p in _a_positions(k)}:
            return "A({})".format(k)
    if pos == {BitPosition(0, 1), BitPosition(0, 2)}:
        return EXTERIOR_NAME
    return None


def make_subalgebra(kind, n, truncation=None):
    """
    Build a preset subalgebra and validate its admissibility.

    :type  kind: str
    :param kind: one of "A", "F", "F'", "segment"

    :type  n: int or list
    :param n: index of A(n) / F(n) / F'(n), or for "segment" the segment length
        or an explicit list of (s, t) positions

    :type  truncation: int
    :param truncation: N for the F-family, which is cut down to its intersection with A(N)

    :raises: ParamError, NotAdmissible
    """
    if kind not in KINDS:
        raise ParamError("unknown subalgebra kind `{}`".format(kind))

    if kind == "segment" and not isinstance(n, int):
        positions = [BitPosition(*p) for p in n]
        name = _segment_name(positions)
        b = Subalgebra(positions, name=name, kind="segment")
        if not b.is_hopf_form():
            raise NotAdmissible("{} is not of Hopf form".format(b.name))
    else:
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ParamError("subalgebra index must be a non-negative int, got {!r}".format(n))
        if kind == "A":
            b = Subalgebra(_a_positions(n), name="A({})".format(n), truncation=n, kind="A", index=n)
        elif kind == "segment":
            if n < 1:
                raise ParamError("segment length must be positive")
            positions = segment_order(n)[:n]
            b = Subalgebra(positions, name=_segment_name(positions) or "seg({})".format(n), kind="segment", index=n)
        else:
            primed = kind == "F'"
            if primed and n < 1:
                raise ParamError("F'(n) needs n >= 1")
            if truncation is None or truncation < n:
                raise ParamError("{}({}) needs a truncation N >= {}".format(kind, n, n))
            b = Subalgebra(_f_positions(n, truncation, primed),
                           name="{}({})".format(kind, n), truncation=truncation, kind=kind, index=n)
            if primed and not _is_fprime_shape(b.positions, n, truncation):
                raise NotAdmissible("{} does not have the F'(n) shape".format(b.name))

    if not is_admissible(b.masks):
        raise NotAdmissible("{} is not admissible".format(b.name))
    LOGGER.debug("built %s with %d positions, tau=%d", b.name, b.size, b.tau)
    return b


def truncation_for_degree(kind, n, window):
    """
    Smallest N for which every P_t^s that F(n) (or F'(n)) loses by truncation to
    A(N) has degree above `window`. Returns None for finite kinds.
    """
    if kind not in ("F", "F'"):
        return None
    primed = kind == "F'"
    if primed and n < 1:
        raise ParamError("F'(n) needs n >= 1")
    first = n if primed else n + 1
    truncation = n
    while True:
        excluded = []
        for t in range(first, truncation + 3):
            lowest = max(truncation + 2 - t, 1 if primed and t == n else 0)
            excluded.append((1 << lowest) * ((1 << t) - 1))
        if min(excluded) > window:
            return truncation
        truncation += 1


def preset(name, window=None):
    """
    Resolve a preset name: "A(n)", "F(n)", "F'(n)", "seg(k)" or "E(Sq1,Sq(0,1))".

    :type  window: int
    :param window: working degree; required for the F-family to choose a truncation
    """
    if name == EXTERIOR_NAME:
        return make_subalgebra("segment", 2)
    match = _PRESET_PATTERN.match(name.replace(" ", "")) if isinstance(name, str) else None
    if not match:
        raise ParamError("unknown subalgebra `{}`".format(name))
    kind, n = match.group(1), int(match.group(2))
    if kind == "seg":
        return make_subalgebra("segment", n)
    if kind == "A":
        return make_subalgebra("A", n)
    if window is None:
        raise ParamError("{} needs a degree window to choose its truncation".format(name))
    return _cached_family(kind, n, truncation_for_degree(kind, n, window))


@functools.lru_cache(maxsize=256)
def _cached_family(kind, n, truncation):
    return make_subalgebra(kind, n, truncation)


def covers_degree(b, window):
    """
    True when truncating B's family does not change anything in degrees <= window.
    """
    if b.kind not in ("F", "F'"):
        return True
    return truncation_for_degree(b.kind, b.index, window) <= b.truncation
