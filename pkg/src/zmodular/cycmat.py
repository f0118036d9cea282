"""Vectorized exact linear algebra over a cyclotomic field.

A CycMatrix holds an integer numpy coefficient array of shape (..., N)
(last axis = powers of zeta_N modulo x^N - 1) together with one global
positive integer denominator.  This keeps matrix products and the fusion
contractions exact while running as integer array arithmetic; nothing here
ever rounds.  Arrays switch to object dtype (arbitrary precision) when an
operation could overflow int64.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from . import _accel
from .cyclo import CycNum, cyclotomic_polynomial

_INT64_LIMIT = 2**62


@lru_cache(maxsize=None)
def reduction_matrix(n: int) -> np.ndarray:
    """R[k, j]: coefficient of zeta^j in the canonical form of zeta^k."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    for k in range(n):
        vec = [Fraction(0)] * n
        vec[k] = Fraction(1)
        red = _reduce(vec, phi, deg)
        rows.append([int(c) for c in red])
    return np.array(rows, dtype=np.int64).reshape(n, n)


def _reduce(vec, phi, deg):
    rem = list(vec)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            rem[i] = Fraction(0)
            for j in range(deg):
                rem[i - deg + j] -= c * phi[j]
    return rem + [Fraction(0)] * (len(vec) - len(rem))


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max(abs(int(x)) for x in arr.flat)
    return int(np.abs(arr).max())


def _widen_if_needed(arr: np.ndarray, bound: int) -> np.ndarray:
    if arr.dtype == np.int64 and bound >= _INT64_LIMIT:
        return arr.astype(object)
    return arr


class CycMatrix:
    """Exact matrix (or vector / tensor) over Q(zeta_N)."""

    def __init__(self, conductor: int, num: np.ndarray, den: int = 1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.conductor = conductor
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_cycnums(cls, entries, conductor: int | None = None) -> CycMatrix:
        """Build from a (nested) sequence of CycNum, embedding into a common
        conductor and clearing denominators."""
        flat: list[CycNum] = []

        def walk(x):
            if isinstance(x, CycNum):
                flat.append(x)
                return None
            return [walk(y) for y in x]

        shape_probe = walk(entries)
        n = conductor if conductor is not None else lcm(*(e.conductor for e in flat))
        den = 1
        for e in flat:
            for c in e.coeffs:
                den = lcm(den, c.denominator)
        embedded = [e.embed(n) if e.conductor != n else e for e in flat]
        big = any(
            abs(c.numerator * (den // c.denominator)) >= _INT64_LIMIT
            for e in embedded
            for c in e.coeffs
        )
        dtype = object if big else np.int64
        data = np.zeros((len(flat), n), dtype=dtype)
        for i, e in enumerate(embedded):
            for k, c in enumerate(e.coeffs):
                if c:
                    data[i, k] = int(c * den)

        def shape_of(x):
            if x is None:
                return ()
            return (len(x),) + shape_of(x[0])

        shape = shape_of(shape_probe)
        return cls(n, data.reshape(shape + (n,)), den)

    @classmethod
    def identity(cls, m: int, conductor: int) -> CycMatrix:
        num = np.zeros((m, m, conductor), dtype=np.int64)
        for i in range(m):
            num[i, i, 0] = 1
        return cls(conductor, num, 1)

    @classmethod
    def diagonal(cls, entries: list[CycNum], conductor: int | None = None) -> CycMatrix:
        vec = cls.from_cycnums(entries, conductor)
        m = vec.num.shape[0]
        num = np.zeros((m, m, vec.conductor), dtype=vec.num.dtype)
        for i in range(m):
            num[i, i] = vec.num[i]
        return cls(vec.conductor, num, vec.den)

    # -- ring operations --------------------------------------------------------

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")
        k = self.num.shape[1]
        bound = _max_abs(self.num) * _max_abs(other.num) * k * self.conductor
        a = _widen_if_needed(self.num, bound)
        b = _widen_if_needed(other.num, bound)
        if a.dtype != b.dtype:
            a, b = a.astype(object), b.astype(object)
        out = _accel.cyc_matmul(a, b)
        return CycMatrix(self.conductor, out, self.den * other.den)

    def __add__(self, other: CycMatrix) -> CycMatrix:
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")
        den = lcm(self.den, other.den)
        a = self.num * (den // self.den)
        b = other.num * (den // other.den)
        return CycMatrix(self.conductor, a + b, den)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        return self + other.scale_rational(Fraction(-1))

    def conj(self) -> CycMatrix:
        n = self.conductor
        idx = (-np.arange(n)) % n
        return CycMatrix(n, self.num[..., idx], self.den)

    @property
    def T(self) -> CycMatrix:
        axes = list(range(self.num.ndim))
        axes[0], axes[1] = axes[1], axes[0]
        return CycMatrix(self.conductor, self.num.transpose(axes), self.den)

    def scale_rational(self, r) -> CycMatrix:
        r = Fraction(r)
        num = self.num * r.numerator
        return CycMatrix(self.conductor, num, self.den * r.denominator).normalized()

    def scale_cyc(self, c: CycNum) -> CycMatrix:
        vec = CycMatrix.from_cycnums([c], self.conductor)
        n = self.conductor
        idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
        circ = vec.num[0][idx]
        bound = _max_abs(self.num) * _max_abs(circ) * n
        a = _widen_if_needed(self.num, bound)
        out = a @ circ
        return CycMatrix(n, out, self.den * vec.den)

    def normalized(self) -> CycMatrix:
        g = self.den
        for x in self.num.flat:
            g = gcd(g, abs(int(x)))
            if g == 1:
                return self
        if g <= 1:
            return self
        return CycMatrix(self.conductor, self.num // g, self.den // g)

    # -- canonical form -----------------------------------------------------------

    def canonical_num(self) -> np.ndarray:
        """Coefficient array reduced mod Phi_N (still over the common den)."""
        red = reduction_matrix(self.conductor)
        bound = _max_abs(self.num) * int(np.abs(red).max()) * self.conductor
        a = _widen_if_needed(self.num, bound)
        r = red.astype(object) if a.dtype == object else red
        return a @ r

    def entry(self, *index) -> CycNum:
        vec = self.num[index]
        return CycNum(self.conductor, [Fraction(int(c), self.den) for c in vec])

    def is_zero(self) -> bool:
        return not self.canonical_num().any()

    def equals(self, other: CycMatrix) -> bool:
        return (self - other).is_zero()

    def is_identity(self) -> bool:
        m = self.num.shape[0]
        return self.equals(CycMatrix.identity(m, self.conductor))

    def nonzero_mask(self) -> np.ndarray:
        """Boolean mask over entries (ignoring the coefficient axis)."""
        return self.canonical_num().any(axis=-1)


def weighted_row_sums(matrix: CycMatrix, weights: CycMatrix) -> CycMatrix:
    """rows[a] = sum_b matrix[a, b] * weights[b]; weights is a vector."""
    if matrix.conductor != weights.conductor:
        raise ValueError("conductor mismatch")
    m = matrix.num.shape[0]
    bound = _max_abs(matrix.num) * _max_abs(weights.num) * m * matrix.conductor
    a = _widen_if_needed(matrix.num, bound)
    v = _widen_if_needed(weights.num, bound)
    if a.dtype != v.dtype:
        a, v = a.astype(object), v.astype(object)
    out = _accel.cyc_weighted_rows(a, v)
    return CycMatrix(matrix.conductor, out, matrix.den * weights.den)
