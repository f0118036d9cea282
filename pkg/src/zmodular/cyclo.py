"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycNum` stores a coefficient vector of length N over the power
basis 1, zeta, ..., zeta^(N-1), reduced modulo x^N - 1.  Addition and
multiplication stay on that redundant basis (cyclic convolution);
canonicalization -- reduction modulo the N-th cyclotomic polynomial --
happens only for equality tests, zero tests and serialization.  All
coefficients are exact rationals; no floating point enters the core path.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = int | Fraction


class CycloError(ValueError):
    """Invalid cyclotomic operation (bad conductor, bad embedding, ...)."""


class CycloDivisionError(ZeroDivisionError):
    """Division by the zero element of a cyclotomic field."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise CycloError(f"conductor must be >= 1, got {n}")
    # divide x^n - 1 by the cyclotomic polynomials of the proper divisors
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    coeffs = tuple(int(c) for c in poly)
    return coeffs


def _poly_exact_div(num: list[Fraction], den: Sequence[Rat]) -> list[Fraction]:
    num = list(num)
    dden = len(den) - 1
    lead = Fraction(den[dden])
    out = [Fraction(0)] * (len(num) - dden)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i] / lead
        out[i - dden] = c
        if c:
            for j in range(dden + 1):
                num[i - dden + j] -= c * Fraction(den[j])
    if any(num[:dden]):
        raise CycloError("polynomial division left a remainder")
    return out


def _reduce_mod_cyclotomic(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Remainder of the coefficient vector modulo Phi_n, padded to length n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            rem[i] = Fraction(0)
            for j in range(deg):
                rem[i - deg + j] -= c * phi[j]
    out = rem[:deg] if len(rem) >= deg else rem + [Fraction(0)] * (deg - len(rem))
    return tuple(out) + (Fraction(0),) * (n - deg)


class CycNum:
    """An element of Q(zeta_N), exact.

    Instances are immutable.  Mixed-conductor arithmetic embeds both
    operands into the lcm conductor first.  Hashing uses the canonical
    form at the instance's own conductor, so containers should hold
    values of a single conductor (which is how every computation here is
    organized: one working conductor fixed up front).
    """

    __slots__ = ("conductor", "coeffs", "_canon")

    def __init__(self, conductor: int, coeffs: Iterable[Rat]):
        if conductor < 1:
            raise CycloError(f"conductor must be >= 1, got {conductor}")
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > conductor:
            folded = [Fraction(0)] * conductor
            for k, c in enumerate(vec):
                folded[k % conductor] += c
            vec = folded
        else:
            vec = vec + [Fraction(0)] * (conductor - len(vec))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(vec))
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycNum is immutable")

    def __reduce__(self):
        return (CycNum, (self.conductor, self.coeffs))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_rational(cls, value: Rat, conductor: int = 1) -> CycNum:
        return cls(conductor, [Fraction(value)])

    @classmethod
    def zero(cls, conductor: int = 1) -> CycNum:
        return cls(conductor, [])

    @classmethod
    def one(cls, conductor: int = 1) -> CycNum:
        return cls(conductor, [1])

    # -- canonical form ------------------------------------------------------

    def canonical(self) -> tuple[Fraction, ...]:
        """Unique coefficient vector: remainder mod Phi_N, padded to length N."""
        canon = object.__getattribute__(self, "_canon")
        if canon is None:
            canon = _reduce_mod_cyclotomic(self.coeffs, self.conductor)
            object.__setattr__(self, "_canon", canon)
        return canon

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def is_rational(self) -> bool:
        return not any(self.canonical()[1:])

    def as_rational(self) -> Fraction:
        canon = self.canonical()
        if any(canon[1:]):
            raise CycloError("value is not rational")
        return canon[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.as_rational().denominator == 1

    # -- arithmetic ----------------------------------------------------------

    def _match(self, other: CycNum | Rat) -> tuple[CycNum, CycNum]:
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other, 1)
        if self.conductor == other.conductor:
            return self, other
        m = lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other: CycNum | Rat) -> CycNum:
        a, b = self._match(other)
        return CycNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other: CycNum | Rat) -> CycNum:
        a, b = self._match(other)
        return CycNum(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other: CycNum | Rat) -> CycNum:
        return (-self) + other

    def __mul__(self, other: CycNum | Rat) -> CycNum:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycNum.zero(self.conductor)
            return CycNum(self.conductor, [x * other for x in self.coeffs])
        a, b = self._match(other)
        n = a.conductor
        out = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[(i + j) % n] += x * y
        return CycNum(n, out)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Exact multiplicative inverse via extended gcd against Phi_N."""
        if self.is_zero():
            raise CycloDivisionError("division by zero in cyclotomic field")
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        a = list(self.canonical()[: len(phi) - 1])
        # extended Euclid in Q[x]: s*a + t*phi = gcd = constant
        r0, r1 = phi, _poly_trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _poly_deg(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1 or r1[0] == 0:
            raise CycloError("element is a zero divisor modulo Phi_N (unexpected)")
        inv_c = 1 / r1[0]
        coeffs = [c * inv_c for c in s1]
        return CycNum(n, coeffs)

    def __truediv__(self, other: CycNum | Rat) -> CycNum:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CycloDivisionError("division by zero")
            return self * Fraction(1, 1) / CycNum.from_rational(other)
        a, b = self._match(other)
        return a * b.inverse()

    def __rtruediv__(self, other: Rat) -> CycNum:
        return CycNum.from_rational(other) / self

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.one(self.conductor)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure maps ------------------------------------------------------

    def embed(self, conductor: int) -> CycNum:
        """The same field element viewed at a larger conductor."""
        if conductor % self.conductor != 0:
            raise CycloError(
                f"cannot embed conductor {self.conductor} into {conductor}"
            )
        step = conductor // self.conductor
        out = [Fraction(0)] * conductor
        for k, c in enumerate(self.coeffs):
            if c:
                out[k * step] = c
        return CycNum(conductor, out)

    def conjugate(self) -> CycNum:
        """Complex conjugation, zeta -> zeta^(-1)."""
        n = self.conductor
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                out[(-k) % n] += c
        return CycNum(n, out)

    def galois(self, a: int) -> CycNum:
        """The Galois image zeta -> zeta^a; requires gcd(a, N) = 1."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise CycloError(f"{a} is not invertible mod {n}")
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                out[(k * a) % n] += c
        return CycNum(n, out)

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / n)
            for k, c in enumerate(self.coeffs)
            if c
        ) + 0j

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._match(other)
        return a.canonical() == b.canonical()

    def __hash__(self) -> int:
        return hash((self.conductor, self.canonical()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycNum({self.conductor}, {self.describe()})"

    def describe(self, symbol: str = "z") -> str:
        """Human-readable canonical form, e.g. ``1/2 - z12^5``."""
        canon = self.canonical()
        parts: list[str] = []
        for k, c in enumerate(canon):
            if not c:
                continue
            mono = "1" if k == 0 else f"{symbol}{self.conductor}" + (
                f"^{k}" if k > 1 else ""
            )
            if c == 1 and k > 0:
                term = mono
            elif c == -1 and k > 0:
                term = f"-{mono}"
            else:
                term = f"{c}" if k == 0 else f"{c}*{mono}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts) if parts else "0"

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [str(c) for c in self.canonical()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> CycNum:
        return cls(int(data["conductor"]), [Fraction(c) for c in data["coeffs"]])


# -- polynomial helpers (lists of Fractions, low to high) ----------------------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_deg(p: list[Fraction]) -> int:
    return len(_poly_trim(p)) - 1


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = _poly_trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while _poly_deg(a) >= _poly_deg(b) and _poly_trim(a):
        da, db = _poly_deg(a), _poly_deg(b)
        c = a[da] / b[db]
        q[da - db] += c
        for j in range(db + 1):
            a[da - db + j] -= c * b[j]
        a = a[:da] + [Fraction(0)]
        a = _poly_trim(a) or [Fraction(0)]
        if not any(a):
            break
    return _poly_trim(q), _poly_trim(a)


# -- module-level operations (the public functional surface) -------------------


def root_of_unity(n: int, k: int = 1) -> CycNum:
    """zeta_n^k in canonical position (exponent taken mod n)."""
    if n < 1:
        raise CycloError(f"conductor must be >= 1, got {n}")
    out = [Fraction(0)] * n
    out[k % n] = Fraction(1)
    return CycNum(n, out)


def arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Binary field operation; op in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise CycloError(f"unknown operation {op!r}")


def embed(a: CycNum, conductor: int) -> CycNum:
    return a.embed(conductor)


def conjugate(a: CycNum) -> CycNum:
    return a.conjugate()
