"""
Dense linear algebra over the two-element field.

Rows are packed into little-endian uint64 words; bit c of a row lives in word
c // 64 at position c % 64. Elimination XORs whole packed rows at once.
"""
import collections
import logging

import numpy as np

from .exceptions import ParamError, ImageNotInKernel

LOGGER = logging.getLogger(__name__)

WORD = np.dtype('<u8')
_ONE = np.uint64(1)


def _nwords(ncols):
    return (ncols + 63) >> 6


def _pack(dense, ncols):
    dense = np.asarray(dense, dtype=np.uint8)
    rows = dense.shape[0]
    nwords = _nwords(ncols)
    if rows == 0 or nwords == 0:
        return np.zeros((rows, nwords), dtype=WORD)
    raw = np.zeros((rows, nwords * 8), dtype=np.uint8)
    packed = np.packbits(dense & 1, axis=1, bitorder='little')
    raw[:, :packed.shape[1]] = packed
    return raw.view(WORD)


def _unpack(words, ncols):
    rows = words.shape[0]
    if rows == 0 or ncols == 0:
        return np.zeros((rows, ncols), dtype=np.uint8)
    raw = np.ascontiguousarray(words, dtype=WORD).view(np.uint8)
    return np.unpackbits(raw, axis=1, count=ncols, bitorder='little')


def _column(words, c):
    return (words[:, c >> 6] >> np.uint64(c & 63)) & _ONE


def _rref(words, limit):
    """
    Reduce packed rows in place to reduced row echelon form, pivoting only on
    columns below `limit`. Returns the pivot columns; rows past them are zero
    on those columns.
    """
    rows = words.shape[0]
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        bits = _column(words, c)
        below = np.flatnonzero(bits[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
            bits[[r, p]] = bits[[p, r]]
        hit = bits.astype(bool)
        hit[r] = False
        if hit.any():
            words[hit] ^= words[r]
        pivots.append(c)
        r += 1
    return pivots


class _NoSolutionType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "NoSolution"


NoSolution = _NoSolutionType()


class GF2Vector:
    """
    Packed vector over GF(2).

    :type  length: int
    :param length: dimension of the space the vector lives in

    :type  words: numpy.ndarray
    :param words: (Optional) packed storage, zero vector if omitted
    """

    __slots__ = ('_length', '_words')

    def __init__(self, length, words=None):
        if length < 0:
            raise ParamError("vector length must be non-negative")
        self._length = length
        if words is None:
            words = np.zeros(_nwords(length), dtype=WORD)
        self._words = np.asarray(words, dtype=WORD).reshape(_nwords(length))

    @classmethod
    def from_indices(cls, length, indices):
        dense = np.zeros((1, length), dtype=np.uint8)
        for i in indices:
            if not 0 <= i < length:
                raise ParamError("index {} outside vector of length {}".format(i, length))
            dense[0, i] ^= 1
        return cls(length, _pack(dense, length)[0] if length else None)

    @classmethod
    def from_dense(cls, bits):
        bits = np.asarray(bits, dtype=np.uint8).reshape(1, -1)
        length = bits.shape[1]
        return cls(length, _pack(bits, length)[0] if length else None)

    def __len__(self):
        return self._length

    @property
    def length(self):
        return self._length

    @property
    def words(self):
        return self._words

    def to_dense(self):
        return _unpack(self._words.reshape(1, -1), self._length)[0]

    def indices(self):
        return [int(i) for i in np.flatnonzero(self.to_dense())]

    def is_zero(self):
        return not self._words.any()

    def __xor__(self, other):
        if self._length != other.length:
            raise ParamError("vector lengths differ: {} vs {}".format(self._length, other.length))
        return GF2Vector(self._length, self._words ^ other.words)

    __add__ = __xor__

    def __eq__(self, other):
        return isinstance(other, GF2Vector) and self._length == other.length \
            and np.array_equal(self._words, other.words)

    def __hash__(self):
        return hash((self._length, self._words.tobytes()))

    def __repr__(self):
        return "GF2Vector({!r})".format(self.dump())

    def dump(self):
        return "".join(str(b) for b in self.to_dense())


class GF2Matrix:
    """
    Packed matrix over GF(2) mapping vectors of length `cols` to length `rows`.
    """

    def __init__(self, rows, cols, words=None):
        if rows < 0 or cols < 0:
            raise ParamError("matrix shape must be non-negative, got {}x{}".format(rows, cols))
        self._rows = rows
        self._cols = cols
        if words is None:
            words = np.zeros((rows, _nwords(cols)), dtype=WORD)
        self._words = np.asarray(words, dtype=WORD).reshape(rows, _nwords(cols))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls.from_dense(np.eye(n, dtype=np.uint8), n)

    @classmethod
    def from_dense(cls, dense, cols=None):
        dense = np.asarray(dense, dtype=np.uint8)
        if dense.ndim != 2:
            raise ParamError("dense matrix must be two-dimensional")
        cols = dense.shape[1] if cols is None else cols
        return cls(dense.shape[0], cols, _pack(dense, cols))

    @classmethod
    def from_rows(cls, cols, vectors):
        vectors = list(vectors)
        words = np.zeros((len(vectors), _nwords(cols)), dtype=WORD)
        for i, v in enumerate(vectors):
            if v.length != cols:
                raise ParamError("row {} has length {}, expected {}".format(i, v.length, cols))
            words[i] = v.words
        return cls(len(vectors), cols, words)

    @classmethod
    def from_columns(cls, rows, columns):
        """
        Build from column index lists: column j has ones at the row indices columns[j].
        """
        columns = list(columns)
        dense = np.zeros((rows, len(columns)), dtype=np.uint8)
        for j, col in enumerate(columns):
            for i in col:
                dense[i, j] ^= 1
        return cls.from_dense(dense, len(columns))

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return self._rows, self._cols

    @property
    def words(self):
        return self._words

    def copy_words(self):
        return self._words.copy()

    def to_dense(self):
        return _unpack(self._words, self._cols)

    def row(self, i):
        return GF2Vector(self._cols, self._words[i].copy())

    def row_vectors(self):
        return [self.row(i) for i in range(self._rows)]

    def column(self, j):
        return GF2Vector.from_dense(self.to_dense()[:, j])

    def transpose(self):
        return GF2Matrix.from_dense(self.to_dense().T.copy(), self._rows)

    def dot(self, vector):
        """
        M . v for a vector of length `cols`.
        """
        if vector.length != self._cols:
            raise ParamError("cannot apply {}x{} matrix to vector of length {}".format(
                self._rows, self._cols, vector.length))
        if self._rows == 0:
            return GF2Vector(0)
        product = self.to_dense().astype(np.int64) @ vector.to_dense().astype(np.int64)
        return GF2Vector.from_dense(product & 1)

    def is_zero(self):
        return not self._words.any()

    def __eq__(self, other):
        return isinstance(other, GF2Matrix) and self.shape == other.shape \
            and np.array_equal(self._words, other.words)

    def __repr__(self):
        return "<GF2Matrix {}x{}>".format(self._rows, self._cols)

    def dump(self):
        """
        One line of '0'/'1' characters per row.
        """
        return "\n".join("".join(str(b) for b in row) for row in self.to_dense())


def parse(text, cols=None):
    """
    Inverse of :meth:`GF2Matrix.dump`.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        return GF2Matrix(0, cols or 0)
    width = len(lines[0])
    if cols is not None and cols != width:
        raise ParamError("expected {} columns, found {}".format(cols, width))
    if any(len(line) != width or set(line) - {'0', '1'} for line in lines):
        raise ParamError("matrix dump must consist of equal-length '0'/'1' lines")
    dense = np.array([[int(ch) for ch in line] for line in lines], dtype=np.uint8)
    return GF2Matrix.from_dense(dense, width)


def rank(m):
    words = m.copy_words()
    return len(_rref(words, m.cols))


def echelon(m):
    """
    Reduced row echelon form of `m` and its pivot columns.
    """
    words = m.copy_words()
    pivots = _rref(words, m.cols)
    return GF2Matrix(len(pivots), m.cols, words[:len(pivots)]), pivots


Kernel = collections.namedtuple("Kernel", ["basis", "pivots", "free"])


def kernel(m):
    """
    Basis of {v : M.v = 0} with the pivot and free columns of the echelon form.

    Basis vector i is 1 at free[i] and 0 at the other free columns.

    :rtype: Kernel
    """
    cols = m.cols
    reduced, pivots = echelon(m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if not free:
        return Kernel([], pivots, free)
    dense = reduced.to_dense()
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, pivots] = dense[:, free].T
    packed = _pack(basis, cols)
    return Kernel([GF2Vector(cols, packed[i]) for i in range(len(free))], pivots, free)


def kernel_basis(m):
    """
    Basis of {v : M.v = 0}, one vector per free column of the echelon form.

    :rtype: list of GF2Vector
    """
    return kernel(m).basis


def quotient_basis(cycle_basis, image):
    """
    Representatives of a basis of span(cycle_basis) / im(image).

    :type  cycle_basis: list of GF2Vector
    :param cycle_basis: basis of the cycles

    :type  image: GF2Matrix
    :param image: matrix whose columns are boundaries, rows = length of the cycle_basis vectors

    :raises: ImageNotInKernel if a column of `image` is not in span(cycle_basis)
    """
    if not cycle_basis:
        if image.cols and not image.is_zero():
            raise ImageNotInKernel("nonzero boundary but empty cycle space")
        return []

    length = cycle_basis[0].length
    if image.rows != length:
        raise ParamError("image rows {} do not match vector length {}".format(image.rows, length))

    boundaries = image.transpose().copy_words()
    im_pivots = _rref(boundaries, length)
    boundaries = boundaries[:len(im_pivots)]

    cycles = GF2Matrix.from_rows(length, cycle_basis).copy_words()
    k_rank = len(_rref(cycles.copy(), length))
    joint = np.vstack([cycles, boundaries])
    if len(_rref(joint, length)) != k_rank:
        raise ImageNotInKernel("{} boundaries are not all cycles".format(image.cols))

    for row, p in enumerate(im_pivots):
        hit = _column(cycles, p).astype(bool)
        if hit.any():
            cycles[hit] ^= boundaries[row]

    pivots = _rref(cycles, length)
    LOGGER.debug("quotient: %d cycles, %d boundaries, %d classes", len(cycle_basis), len(im_pivots), len(pivots))
    return [GF2Vector(length, cycles[i].copy()) for i in range(len(pivots))]


def solve_all(m, targets):
    """
    Solve M.f = e for several right-hand sides with one elimination.

    Free variables are set to zero. Entries are NoSolution where e is not in im(M).
    """
    targets = list(targets)
    rows, cols = m.shape
    for e in targets:
        if e.length != rows:
            raise ParamError("right-hand side has length {}, expected {}".format(e.length, rows))
    if not targets:
        return []

    width = cols + len(targets)
    dense = np.zeros((rows, width), dtype=np.uint8)
    if rows:
        dense[:, :cols] = m.to_dense()
        for k, e in enumerate(targets):
            dense[:, cols + k] = e.to_dense()
    words = _pack(dense, width)
    pivots = _rref(words, cols)
    reduced = _unpack(words, width)

    out = []
    for k in range(len(targets)):
        rhs = reduced[:, cols + k]
        if rhs[len(pivots):].any():
            out.append(NoSolution)
            continue
        f = np.zeros(cols, dtype=np.uint8)
        if pivots:
            f[pivots] = rhs[:len(pivots)]
        out.append(GF2Vector.from_dense(f))
    return out


def solve(m, e):
    """
    One solution of M.f = e, or NoSolution.
    """
    return solve_all(m, [e])[0]
