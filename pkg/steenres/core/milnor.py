"""
Milnor basis arithmetic for the mod 2 Steenrod algebra.

A Milnor basis element Sq(R) is stored as a plain tuple of non-negative ints
with trailing zeros trimmed; the unit Sq(0) is the empty tuple. A sum of basis
elements is a frozenset of such tuples, coefficients being 0 or 1.
"""
import functools
import logging
import re

from .exceptions import ParamError
from ..settings import DefaultConfig as config

LOGGER = logging.getLogger(__name__)

UNIT = ()
ZERO = frozenset()

_SQ_PATTERN = re.compile(r'^\s*Sq\(\s*([0-9,\s]*)\)\s*$')


def canonical(exponents):
    """
    Return the canonical tuple form of an exponent sequence.

    :raises: ParamError if an entry is not a non-negative int
    """
    out = list(exponents)
    for r in out:
        if isinstance(r, bool) or not isinstance(r, int) or r < 0:
            raise ParamError("Milnor exponents must be non-negative ints, got {!r}".format(exponents))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(r):
    """
    Degree of Sq(R): sum of r_i * (2^i - 1).
    """
    return sum(x * ((1 << i) - 1) for i, x in enumerate(r, start=1))


def sum_degree(terms):
    """
    Common degree of a homogeneous sum, None for the empty sum.
    """
    degrees = {degree(r) for r in terms}
    if not degrees:
        return None
    if len(degrees) > 1:
        raise ParamError("Sum is not homogeneous: degrees {}".format(sorted(degrees)))
    return degrees.pop()


def add(*sums):
    """
    Mod 2 sum of several Milnor sums.
    """
    out = set()
    for terms in sums:
        out.symmetric_difference_update(terms)
    return frozenset(out)


def basis_key(r):
    """
    Sort key of the frozen basis order: shorter sequences first, then lexicographic.
    """
    return len(r), r


@functools.lru_cache(maxsize=None)
def basis_of_degree(n):
    """
    All canonical exponent sequences of degree n, ordered by :func:`basis_key`.

    :type  n: int
    :param n: non-negative degree

    :rtype: tuple
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParamError("degree must be a non-negative int, got {!r}".format(n))

    top = 1
    while (1 << (top + 1)) - 1 <= n:
        top += 1

    found = []

    def fill(slot, remaining, high):
        # `high` lists the exponents of slots top..slot+1
        if slot == 1:
            found.append(canonical(reversed(high + [remaining])))
            return
        weight = (1 << slot) - 1
        for x in range(remaining // weight + 1):
            fill(slot - 1, remaining - x * weight, high + [x])

    fill(top, n, [])
    return tuple(sorted(found, key=basis_key))


@functools.lru_cache(maxsize=config.MULTIPLY_CACHE_SIZE)
def _product(r, s, caps):
    rows = len(r)
    cols = len(s)
    if cols == 0:
        return frozenset([r])
    if rows == 0:
        return frozenset([s])

    diag = [0] * (rows + cols + 1)
    col_rest = list(s)
    out = set()

    def finish():
        t = list(diag)
        for j in range(1, cols + 1):
            x = col_rest[j - 1]
            if t[j] & x:
                return
            t[j] |= x
        term = canonical(t[1:])
        if term in out:
            out.remove(term)
        else:
            out.add(term)

    def row(i):
        if i > rows:
            finish()
            return
        cap = caps[i - 1] if i <= len(caps) else 0
        entry(i, cols, r[i - 1], cap)

    def entry(i, j, left, cap):
        if j == 0:
            # x_{i,0} takes what is left of r_i
            if diag[i] & left:
                return
            diag[i] |= left
            row(i + 1)
            diag[i] ^= left
            return

        step = 1 << max(0, cap - j)
        k = i + j
        for x in range(0, min(col_rest[j - 1], left >> j) + 1, step):
            if diag[k] & x:
                continue
            diag[k] |= x
            col_rest[j - 1] -= x
            entry(i, j - 1, left - (x << j), cap)
            col_rest[j - 1] += x
            diag[k] ^= x

    row(1)
    return frozenset(out)


def multiply(r, s):
    """
    Milnor product Sq(R) * Sq(S).

    Enumerates the multiplication matrices row by row and drops a branch as soon
    as one of its diagonal sums stops being bitwise disjoint.

    :rtype: frozenset of exponent tuples
    """
    return _product(canonical(r), canonical(s), ())


def multiply_btrivial(b, r, s):
    """
    The part of Sq(R) * Sq(S) coming from B-trivial matrices only.

    A matrix is B-trivial when no entry x_{i,j} with j >= 1 moves a bit of r_i
    below the top of B's mask on slot i, i.e. (x_{i,j} << j) = 0 mod 2^cap_i.
    The remaining terms of the full product have strictly larger signature.
    """
    r = canonical(r)
    return _product(r, canonical(s), b.row_caps(len(r)))


def format_exponent(r):
    return "Sq({})".format(",".join(str(x) for x in r) if r else "0")


def parse_exponent(text):
    """
    Parse "Sq(3,1)" or "Sq(0)" back into a canonical tuple.
    """
    match = _SQ_PATTERN.match(text)
    if not match:
        raise ParamError("Cannot parse Milnor basis element {!r}".format(text))
    body = match.group(1).strip()
    if not body:
        return UNIT
    try:
        return canonical(int(x) for x in body.split(","))
    except ValueError:
        raise ParamError("Cannot parse Milnor basis element {!r}".format(text))


def format_sum(terms):
    if not terms:
        return "0"
    return " + ".join(format_exponent(r) for r in sorted(terms, key=basis_key))


def cache_info():
    return _product.cache_info()
