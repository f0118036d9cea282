"""Symbol combinatorics for the rank-(n(n+1)/2) imprimitive reflection
group families: the admissible symbol set, its sign and Frobenius data,
the Fourier matrix, the special/cospecial symbols, Ennola d-ality, and
the weight-pair dictionary linking symbols to quantum labels in type A.

A symbol is stored as the pair (f, k): the n+1 strictly increasing values
f(1) < ... < f(n+1) in {0, ..., d-1} together with the n complementary
values k_0, ..., k_{n-1}, one per full block.  The admissibility condition
is sum f(i) = sum k_i mod d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb

import numpy as np

from .cyclo import CycNum, root_of_unity
from .cycmat import CycMatrix
from .datum import ModularDatum
from .lattice import Weight, build_root_datum
from .quantum import WeightPair


class SymbolError(ValueError):
    pass


@dataclass(frozen=True)
class Symbol:
    """Admissible symbol: block values (f, k) for parameters (n, d)."""

    n: int
    d: int
    f: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self):
        n, d = self.n, self.d
        if len(self.f) != n + 1 or len(self.k) != n:
            raise SymbolError("wrong number of symbol values")
        if any(not 0 <= v < d for v in self.f + self.k):
            raise SymbolError("symbol values must lie in [0, d)")
        if any(a >= b for a, b in zip(self.f, self.f[1:])):
            raise SymbolError("f must be strictly increasing")
        if (sum(self.f) - sum(self.k)) % d:
            raise SymbolError("symbol fails the admissibility congruence")

    def sort_key(self) -> tuple:
        return (self.f, self.k)

    def serialize(self) -> dict:
        return {"f": list(self.f), "k": list(self.k)}

    def full_values(self) -> tuple[int, ...]:
        """Values on all of Y: the distinguished block first, then each full
        block as the increasing enumeration of {0..d-1} minus k_i."""
        out = list(self.f)
        for ki in self.k:
            out.extend(v for v in range(self.d) if v != ki)
        return tuple(out)

    def tableau(self) -> str:
        """Reduced d-symbol display: row j lists the blocks whose values hit j."""
        rows: list[list[int]] = [[] for _ in range(self.d)]
        for j in self.f:
            rows[j].append(self.n)
        for i, ki in enumerate(self.k):
            for j in range(self.d):
                if j != ki:
                    rows[j].append(i)
        return "\n".join(
            f"S{j} = {{{', '.join(map(str, sorted(r)))}}}" for j, r in enumerate(rows)
        )


def enumerate_symbols(n: int, d: int) -> list[Symbol]:
    """All admissible symbols, canonically sorted (lexicographic on (f, k))."""
    if d < n + 1:
        raise SymbolError(f"need d >= n + 1, got ({n}, {d})")
    out = []
    for f in combinations(range(d), n + 1):
        for k in product(range(d), repeat=n):
            if (sum(f) - sum(k)) % d == 0:
                out.append(Symbol(n, d, f, tuple(k)))
    out.sort(key=Symbol.sort_key)
    expected = d**n * comb(d - 1, n) // (n + 1)
    if len(out) != expected:
        raise SymbolError(f"symbol count {len(out)} != {expected}")
    return out


def epsilon(sym: Symbol) -> int:
    """(-1)^#{y < y' with f(y) < f(y')} over the full extension to Y."""
    values = sym.full_values()
    count = sum(
        1
        for i in range(len(values))
        for j in range(i + 1, len(values))
        if values[i] < values[j]
    )
    return -1 if count % 2 else 1


def sign_d(sym: Symbol) -> int:
    """Diagonal sign epsilon(f) * (-1)^sum(k)."""
    return epsilon(sym) * (-1 if sum(sym.k) % 2 else 1)


# -- Frobenius eigenvalue -------------------------------------------------------


def frobenius_exponent(sym: Symbol) -> int:
    """Exponent e mod d with Fr(f) = zeta^e (the integer-exponent form)."""
    n, d = sym.n, sym.d
    f, k = sym.f, sym.k
    total = 0
    for i in range(1, n + 1):
        total += (k[i - 1] - f[i - 1]) * (sum(f[:i]) - sum(k[: i - 1]))
    return total % d


def frobenius(sym: Symbol, zeta: CycNum | None = None) -> CycNum:
    zeta = root_of_unity(sym.d) if zeta is None else zeta
    return zeta ** frobenius_exponent(sym)


def frobenius_from_twelfth_root(sym: Symbol) -> CycNum:
    """Independent evaluation through a primitive 12d-th root with 12th
    power the canonical zeta; used as the oracle for the exponent form."""
    n, d = sym.n, sym.d
    zs = root_of_unity(12 * d)
    e = n * d * (1 - d * d)
    for v in sym.full_values():
        e -= 6 * (v * v + d * v)
    return zs ** (e % (12 * d))


# -- Fourier matrix ---------------------------------------------------------------


def _cross_exponent(f, kf, g, kg, n):
    total = 0
    for i in range(1, n + 1):
        total += (kf[i - 1] - f[i - 1]) * (sum(g[:i]) - sum(kg[: i - 1]))
        total += (kg[i - 1] - g[i - 1]) * (sum(f[:i]) - sum(kf[: i - 1]))
    return total


@lru_cache(maxsize=None)
def _signed_permutations(n_plus_1: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for perm in permutations(range(n_plus_1)):
        inv = sum(
            1 for i in range(n_plus_1) for j in range(i + 1, n_plus_1) if perm[i] > perm[j]
        )
        out.append((-1 if inv % 2 else 1, perm))
    return tuple(out)


def fourier_entry(a: Symbol, b: Symbol, zeta: CycNum | None = None) -> CycNum:
    """Entry of the symmetric unitary Fourier matrix, exact in Q(zeta_d)."""
    n, d = a.n, a.d
    zeta = root_of_unity(d) if zeta is None else zeta
    conductor = zeta.conductor
    acc = CycNum.zero(conductor)
    zeta_pows = [zeta**e for e in range(d)]
    for sign, perm in _signed_permutations(n + 1):
        g = tuple(b.f[perm[i]] for i in range(n + 1))
        e = _cross_exponent(a.f, a.k, g, b.k, n) % d
        acc = acc + sign * zeta_pows[e]
    prefactor = epsilon(a) * epsilon(b) * (-1 if (sum(a.k) + sum(b.k)) % 2 else 1)
    return acc * Fraction(prefactor, d**n)


def fourier_array(
    symbols: list[Symbol], conductor: int | None = None, zeta_index: int = 1
) -> CycMatrix:
    """The whole Fourier matrix as an exact integer coefficient array with
    denominator d^n; zeta is the root zeta_conductor^zeta_index (order d).

    The permutation-sum exponent is bilinear in per-symbol data, so the
    assembly is one integer matrix product per permutation plus a
    scatter-add; the diagonal sign prefactor factorizes through sign_d.
    """
    n, d = symbols[0].n, symbols[0].d
    m = len(symbols)
    cond = d if conductor is None else conductor
    if (zeta_index * d) % cond:
        raise SymbolError("zeta_index must define a root of order d")
    gaps = np.array(
        [[s.k[i - 1] - s.f[i - 1] for i in range(1, n + 1)] for s in symbols],
        dtype=np.int64,
    )
    partial = np.array(
        [[sum(s.f[:i]) - sum(s.k[: i - 1]) for i in range(1, n + 1)] for s in symbols],
        dtype=np.int64,
    )
    signs = np.array([sign_d(s) for s in symbols], dtype=np.int64)
    out = np.zeros((m, m, cond), dtype=np.int64)
    rows_ix = np.arange(m)[:, None]
    cols_ix = np.arange(m)[None, :]
    for sigma_sign, perm in _signed_permutations(n + 1):
        fvals = np.array([[s.f[perm[i]] for i in range(n + 1)] for s in symbols])
        kvals = np.array([list(s.k) for s in symbols], dtype=np.int64)
        gaps_p = kvals - fvals[:, :n]
        partial_p = np.cumsum(fvals, axis=1)[:, :n] - np.concatenate(
            [np.zeros((m, 1), dtype=np.int64), np.cumsum(kvals, axis=1)[:, : n - 1]],
            axis=1,
        )
        cross = gaps @ partial_p.T + partial @ gaps_p.T
        idx = (cross * zeta_index) % cond
        np.add.at(out, (rows_ix, cols_ix, idx), sigma_sign)
    out *= signs[:, None, None] * signs[None, :, None]
    return CycMatrix(cond, out, d**n)


def tau(d: int, zeta: CycNum | None = None) -> CycNum:
    """prod_{0 <= i < j < d} (zeta^i - zeta^j), the signed Vandermonde."""
    zeta = root_of_unity(d) if zeta is None else zeta
    out = CycNum.one(zeta.conductor)
    for i in range(d):
        for j in range(i + 1, d):
            out = out * (zeta**i - zeta**j)
    return out


def exterior_entry(a: Symbol, b: Symbol, zeta: CycNum | None = None) -> CycNum:
    """Matrix entry of the exterior-power character matrix (the route through
    the Vandermonde lemma); used only to cross-check the rewritten formula."""
    n, d = a.n, a.d
    zeta = root_of_unity(d) if zeta is None else zeta
    conductor = zeta.conductor
    acc = CycNum.zero(conductor)
    for sign, perm in _signed_permutations(n + 1):
        e = sum(a.f[i] * b.f[perm[i]] for i in range(n + 1)) % d
        acc = acc + sign * (zeta**e)
    kprod = CycNum.one(conductor)
    for ka, kb in zip(a.k, b.k):
        kprod = kprod * zeta ** ((-ka * kb) % d)
    sign_pref = (-1) ** ((sum(a.k) + sum(b.k)) % 2)
    global_sign = (-1) ** ((n * d * (d - 1) // 2) % 2)
    t = tau(d, zeta)
    return acc * kprod * (t**n) * Fraction(sign_pref * global_sign, d**n)


def fourier_entry_from_exterior(a: Symbol, b: Symbol, zeta: CycNum | None = None) -> CycNum:
    """The Fourier entry recovered from the exterior-power route:
    epsilon-dressing times conj(exterior entry) / tau^n.

    The epsilon(a) epsilon(b) factor is the wedge-basis reordering sign;
    without it the route reproduces the Fourier matrix only up to the
    diagonal conjugation by epsilon."""
    n, d = a.n, a.d
    zeta = root_of_unity(d) if zeta is None else zeta
    sign = (-1) ** ((n * (d - 1)) % 2) * epsilon(a) * epsilon(b)
    t_inv = (tau(d, zeta) ** n).inverse()
    return exterior_entry(a, b, zeta).conjugate() * t_inv * sign


# -- distinguished symbols -----------------------------------------------------------


def special_symbols(n: int, d: int) -> tuple[Symbol, Symbol]:
    """(special, cospecial) symbols of the family."""
    if d < n + 1:
        raise SymbolError(f"need d >= n + 1, got ({n}, {d})")
    f_sp = Symbol(n, d, tuple(range(n + 1)), tuple(j + 1 for j in range(n)))
    cosp_values = (0,) + tuple(d - n + i - 2 for i in range(2, n + 2))
    f_cosp = Symbol(n, d, cosp_values, tuple(d - i - 1 for i in range(n)))
    return f_sp, f_cosp


# -- weight-pair dictionary (type A) ---------------------------------------------------


def iota(sym: Symbol) -> WeightPair:
    """Weight-pair label attached to a symbol: mu in the root lattice from
    the partial sums, lambda from the value gaps."""
    n = sym.n
    rd = build_root_datum("A", n)
    mu_coords = [
        sum(sym.k[: i - 1]) - sum(sym.f[:i]) for i in range(1, n + 1)
    ]
    mu = Weight.make(mu_coords)
    lam = -mu
    for i in range(n):
        eta_i = sym.f[i + 1] - sym.f[i] - 1
        if eta_i:
            lam = lam + 2 * eta_i * rd.fundamental_weights[i]
    return WeightPair(lam, mu)


def symbol_from_pair(d: int, pair: WeightPair) -> Symbol:
    """Inverse dictionary: the unique admissible symbol attached to a label;
    constant on symmetric-center orbits."""
    lam, mu = pair.lam, pair.mu
    n = len(lam.coords)
    rd = build_root_datum("A", n)
    eta_plus_rho = (lam + mu) / 2 + rd.rho
    half_diff_rho = (lam - mu) / 2 + rd.rho
    base = -rd.pairing(mu, rd.fundamental_weights[0])
    values = []
    for i in range(1, n + 2):
        acc = base
        for j in range(i - 1):
            alpha_j = Weight.make([int(t == j) for t in range(n)])
            acc += rd.pairing(eta_plus_rho, alpha_j)
        if Fraction(acc).denominator != 1:
            raise SymbolError("pair pairing is not integral")
        values.append(int(acc) % d)
    if len(set(values)) != n + 1:
        raise SymbolError("pair does not define distinct symbol values")
    ks = []
    for i in range(1, n + 1):
        acc = Fraction(0)
        for j in range(i):
            alpha_j = Weight.make([int(t == j) for t in range(n)])
            acc += rd.pairing(half_diff_rho, alpha_j)
        ks.append(int(acc) % d)
    return Symbol(n, d, tuple(sorted(values)), tuple(ks))


# -- Ennola d-ality ---------------------------------------------------------------------


def ennola(sym: Symbol) -> Symbol:
    """The order-d family permutation induced by scaling the group parameter."""
    n, d = sym.n, sym.d
    ks = tuple((sym.k[i] + i - n * (n + 3) // 2) % d for i in range(n))
    values = tuple(sorted((v - n * (n + 1) // 2) % d for v in sym.f))
    return Symbol(n, d, values, ks)


def ennola_power(sym: Symbol, m: int) -> Symbol:
    out = sym
    for _ in range(m):
        out = ennola(out)
    return out


def ennola_shift_pair(n: int) -> WeightPair:
    """The invertible label (-gamma, gamma) whose tensor action matches the
    Ennola permutation under the symbol dictionary."""
    rd = build_root_datum("A", n)
    gamma = Fraction((n + 1) * (n + 2), 2) * rd.fundamental_weights[0] - rd.rho
    return WeightPair(-gamma, gamma)


# -- datum assembly -----------------------------------------------------------------------


def malle_datum(
    n: int,
    d: int,
    zeta: CycNum | None = None,
    symbols: list[Symbol] | None = None,
) -> ModularDatum:
    """The symbol-side modular datum: symmetric unitary S and diagonal T."""
    symbols = enumerate_symbols(n, d) if symbols is None else symbols
    if zeta is None:
        zeta = root_of_unity(d)
        arr = fourier_array(symbols)
        m = len(symbols)
        s = [[arr.entry(i, j) for j in range(m)] for i in range(m)]
    else:
        s = [[fourier_entry(a, b, zeta) for b in symbols] for a in symbols]
    t = [frobenius(sym, zeta) for sym in symbols]
    return ModularDatum(
        labels=list(symbols),
        s=s,
        t=t,
        normalization="unnormalized",
        params={"kind": "symbols", "n": n, "d": d},
    )
