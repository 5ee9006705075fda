"""
Free modules over the Steenrod algebra with chosen generators.

A term of C_s is a pair (R, g): the Milnor basis element Sq(R) times the
generator g. Bases of C_{s,t} are ordered generator-index major and Milnor
basis order minor.
"""
import collections
import logging
import threading

from .exceptions import NotHomogeneous, ParamError
from .gf2 import GF2Matrix, GF2Vector
from .milnor import (
    basis_key, basis_of_degree, canonical, degree, format_exponent, multiply, multiply_btrivial,
)
from .subalgebra import basis_by_signature

LOGGER = logging.getLogger(__name__)

GeneratorRef = collections.namedtuple('GeneratorRef', ['s', 'index', 't'])


def _toggle(acc, key):
    if key in acc:
        acc.remove(key)
    else:
        acc.add(key)


class FreeElement:
    """
    Mod 2 sum of (Milnor exponent, generator) pairs. Repeated pairs cancel.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=()):
        acc = set()
        for r, gen in terms:
            _toggle(acc, (canonical(r), gen))
        self._terms = frozenset(acc)

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = frozenset(terms)
        return obj

    @classmethod
    def generator(cls, gen):
        return cls._wrap([((), gen)])

    @property
    def terms(self):
        return self._terms

    def sorted_terms(self):
        return sorted(self._terms, key=lambda term: (term[1].s, term[1].index, basis_key(term[0])))

    def generators(self):
        return {gen for _, gen in self._terms}

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __contains__(self, term):
        return term in self._terms

    def __add__(self, other):
        return FreeElement._wrap(self._terms.symmetric_difference(other.terms))

    __sub__ = __add__
    __xor__ = __add__

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self._terms == other.terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return "FreeElement({})".format(self.format())

    def format(self):
        if not self._terms:
            return "0"
        return " + ".join("{}*g({},{})".format(format_exponent(r), gen.s, gen.index)
                          for r, gen in self.sorted_terms())


def element_degree(x):
    """
    Common bidegree (s, t) of a nonzero homogeneous element.

    :raises: NotHomogeneous
    """
    if not x:
        raise NotHomogeneous("the zero element has no bidegree")
    degrees = {(gen.s, degree(r) + gen.t) for r, gen in x.terms}
    if len(degrees) > 1:
        raise NotHomogeneous("element spans bidegrees {}".format(sorted(degrees)))
    return degrees.pop()


class SignatureSlice:
    """
    Ordered basis of E_sig C_{s,t}; with B = None the full basis of C_{s,t}.
    """

    def __init__(self, b, sig, s, t, basis):
        self.b = b
        self.sig = sig
        self.s = s
        self.t = t
        self.basis = tuple(basis)
        self.index = {term: i for i, term in enumerate(self.basis)}

    def __len__(self):
        return len(self.basis)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def rank(self):
        return 0 if self.sig is None else self.sig.rank

    def __repr__(self):
        return "<SignatureSlice {} rank={} ({}, {}) dim={}>".format(
            self.b.name if self.b else "full", self.rank, self.s, self.t, len(self.basis))


def slice(res, b, sig, s, t):
    """
    Basis of E_sig C_{s,t}: terms Sq(R) g with deg R + t(g) = t and signature sig.

    B = None gives the full basis.
    """
    basis = []
    for gen in res.generators_up_to(s, t):
        n = t - gen.t
        if b is None:
            exponents = basis_of_degree(n)
        else:
            exponents = basis_by_signature(b, n).get(sig.rank, ())
        ref = gen.ref
        basis.extend((r, ref) for r in exponents)
    return SignatureSlice(b, sig, s, t, basis)


def full_basis(res, s, t):
    return slice(res, None, None, s, t)


def _image_terms(res, b, sig, r, gen):
    acc = set()
    for q, h in res.differential(gen).terms:
        if b is None:
            products = multiply(r, q)
        else:
            products = multiply_btrivial(b, r, q)
        for p in products:
            if b is None or b.rank_of(p) == sig.rank:
                _toggle(acc, (p, h))
    return acc


def differential_matrix(res, b, sig, s, t, cache=None):
    """
    Matrix of the induced differential E_sig C_{s,t} -> E_sig C_{s-1,t}.

    Columns follow the domain slice, rows the codomain slice. With B = None this
    is the full matrix of d: C_{s,t} -> C_{s-1,t}.

    :type  cache: MatrixCache
    :param cache: (Optional) LRU cache of built matrices

    :rtype: tuple of (GF2Matrix, SignatureSlice, SignatureSlice)
    """
    key = None
    if cache is not None:
        key = cache.key(res, b, sig, s, t)
        found = cache.get(key)
        if found is not None:
            return found

    domain = slice(res, b, sig, s, t)
    codomain = slice(res, b, sig, s - 1, t)
    columns = []
    for r, gen in domain.basis:
        columns.append([codomain.index[term] for term in _image_terms(res, b, sig, r, gen)])
    m = GF2Matrix.from_columns(len(codomain), columns)
    LOGGER.debug("d matrix %s rank=%d at (%d, %d): %dx%d", b.name if b else "full",
                 domain.rank, s, t, m.rows, m.cols)

    entry = (m, domain, codomain)
    if cache is not None:
        cache.put(key, entry)
    return entry


def slice_coordinates(sl, x):
    """
    Coordinates in the slice basis of the part of x carrying the slice's signature.

    :raises: NotHomogeneous if a matching term lies outside the slice's bidegree
    """
    indices = []
    for r, gen in x.terms:
        if sl.b is not None and sl.b.rank_of(r) != sl.sig.rank:
            continue
        if gen.s != sl.s or degree(r) + gen.t != sl.t:
            if sl.b is None:
                raise NotHomogeneous("term {} is not in C_{{{},{}}}".format(format_exponent(r), sl.s, sl.t))
            raise NotHomogeneous("term {} with rank {} is not in the slice at ({}, {})".format(
                format_exponent(r), sl.sig.rank, sl.s, sl.t))
        indices.append(sl.index[(r, gen)])
    return GF2Vector.from_indices(len(sl), indices)


def extract_component(b, x, sig, res, bidegree=None):
    """
    Coordinates of the sig-signature part of x in the basis of E_sig C_{s,t}.

    The bidegree is read from x unless given; the zero element without a
    bidegree gives the empty vector. B = None takes the full basis.
    """
    if bidegree is None:
        if not x:
            return GF2Vector(0)
        bidegree = element_degree(x)
    s, t = bidegree
    return slice_coordinates(slice(res, b, sig, s, t), x)


def embed(sl, vector):
    """
    Element of C_s with the given coordinates in the slice basis.
    """
    if vector.length != len(sl):
        raise ParamError("vector of length {} does not fit slice of dimension {}".format(vector.length, len(sl)))
    return FreeElement._wrap(sl.basis[i] for i in vector.indices())


def apply_differential(res, x):
    """
    d(x) computed with the full Milnor product.
    """
    acc = set()
    for r, gen in x.terms:
        for q, h in res.differential(gen).terms:
            for p in multiply(r, q):
                _toggle(acc, (p, h))
    return FreeElement._wrap(acc)


class MatrixCache:
    """
    LRU cache of induced differential matrices.

    Keys include the generator counts of C_s and C_{s-1}, so entries built before
    new generators appeared are never returned.
    """

    def __init__(self, size):
        if size < 0:
            raise ParamError("cache size must be non-negative")
        self._size = size
        self._entries = collections.OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(res, b, sig, s, t):
        return b, 0 if sig is None else sig.rank, s, t, res.ngens(s), res.ngens(s - 1)

    def get(self, key):
        with self._lock:
            entry = self._entries.get(key)
            if entry is None:
                self.misses += 1
                return None
            self._entries.move_to_end(key)
            self.hits += 1
            return entry

    def put(self, key, entry):
        if self._size == 0:
            return
        with self._lock:
            self._entries[key] = entry
            self._entries.move_to_end(key)
            while len(self._entries) > self._size:
                self._entries.popitem(last=False)

    def __len__(self):
        return len(self._entries)

    def clear(self):
        with self._lock:
            self._entries.clear()
