"""Simple-object labels, S-matrix, twist, quantum dimensions, symmetric
center, gradings, and super quotients for the semisimplified double at a
root of unity.

Everything is driven by a :class:`ModularContext`, which fixes the root
datum, the order ``l`` of the root of unity ``xi``, a working conductor,
and the label quotient.  S-matrix entries are ratios of signed Weyl sums
of xi-powers; the numerators are exposed separately because the heavy
checks (symmetric center, fusion) only ever need numerator arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .cyclo import CycNum, root_of_unity
from .cycmat import CycMatrix, weighted_row_sums
from .lattice import (
    RootDatum,
    SublatticeData,
    Weight,
    admissibility_check,
    alcove,
    dot_action,
    sublattice_ops,
)


class QuantumError(ValueError):
    pass


@dataclass(frozen=True)
class WeightPair:
    """Label (lambda, mu) of a simple object; lambda + mu lies in 2C."""

    lam: Weight
    mu: Weight

    def shift(self, nu: Weight) -> WeightPair:
        """The same orbit: nu . (lam, mu) = (lam + nu, mu - nu)."""
        return WeightPair(self.lam + nu, self.mu - nu)

    def tensor_invertible(self, other: WeightPair) -> WeightPair:
        """Label of the tensor product with an invertible object."""
        return WeightPair(self.lam + other.lam, self.mu + other.mu)

    def serialize(self) -> dict:
        return {"lambda": self.lam.serialize(), "mu": self.mu.serialize()}


class ModularContext:
    """Fixed-parameter workspace: root datum, xi, conductor, label quotient.

    integral=True restricts mu to the root lattice (the integral
    subquotient); integral=False allows mu in the full weight lattice.
    ``xi_power_index`` selects xi = zeta_l^s.  The default in type A with
    l = 2d picks the s with xi^(-2) equal to the canonical primitive d-th
    root of unity, which is the linking convention used by the symbol side;
    other types default to s = 1.
    """

    def __init__(
        self,
        rd: RootDatum,
        l: int,
        integral: bool = True,
        xi_power_index: int | None = None,
        conductor: int | None = None,
    ):
        self.rd = rd
        self.l = l
        self.lprime = l // 2 if l % 2 == 0 else l
        if rd.lie_type == "A" and l % 2 == 0 and l // 2 < rd.rank + 1:
            raise QuantumError(f"d >= n + 1 required in type A, got d = {l // 2}")
        admissibility_check(rd, self.lprime)
        self.integral = integral
        self.conductor = conductor if conductor else lcm(4, rd.pairing_denominator * l)
        if self.conductor % lcm(4, rd.pairing_denominator * l):
            raise QuantumError("conductor must be a multiple of lcm(4, L*l)")
        if xi_power_index is None:
            if rd.lie_type == "A" and l % 2 == 0:
                d = l // 2
                xi_power_index = 2 * d - 1 if d % 2 else d - 1
            else:
                xi_power_index = 1
        if gcd(xi_power_index, l) != 1:
            raise QuantumError("xi_power_index must be coprime to l")
        self.xi_power_index = xi_power_index
        self.sub: SublatticeData = sublattice_ops(
            rd, self.lprime, "Q" if integral else "P"
        )
        self.alcove_weights = alcove(rd, self.lprime)
        self._alcove_index = {w.coords: i for i, w in enumerate(self.alcove_weights)}
        self._weyl = [(w.length_parity, w) for w in rd.weyl_group()]
        self._dotted_cache: dict = {}
        self._den: CycNum | None = None
        self._den_inv: CycNum | None = None
        self._dim_den_inv: tuple[CycNum, CycNum] | None = None

    # -- xi powers ---------------------------------------------------------------

    def xi_power(self, exponent: Fraction | int) -> CycNum:
        return root_of_unity(self.conductor, self._xi_index(exponent))

    @property
    def xi(self) -> CycNum:
        return self.xi_power(1)

    def _xi_index(self, exponent: Fraction | int) -> int:
        idx = Fraction(exponent) * (self.conductor // self.l) * self.xi_power_index
        if idx.denominator != 1:
            raise QuantumError(
                f"exponent {exponent} not representable at conductor {self.conductor}"
            )
        return idx.numerator % self.conductor

    # -- labels --------------------------------------------------------------------

    def unit(self) -> WeightPair:
        z = Weight.zero(self.rd.rank)
        return WeightPair(z, z)

    def in_alcove(self, eta: Weight) -> bool:
        return eta.coords in self._alcove_index

    def validate_pair(self, pair: WeightPair) -> None:
        rd = self.rd
        eta = (pair.lam + pair.mu) / 2
        if not rd.in_weight_lattice(pair.lam):
            raise QuantumError("lambda is not in the weight lattice")
        ok_mu = rd.in_root_lattice(pair.mu) if self.integral else rd.in_weight_lattice(pair.mu)
        if not ok_mu:
            raise QuantumError("mu is not in the required lattice")
        if not (rd.is_dominant(eta) and self.in_alcove(eta)):
            raise QuantumError("lambda + mu is not in 2C")

    def canonical_pair(self, lam: Weight, mu: Weight) -> WeightPair:
        """Reduce mu modulo the sublattice; lambda follows on the same orbit."""
        mu_c = self.sub.canonical_rep(mu)
        pair = WeightPair(lam + (mu - mu_c), mu_c)
        self.validate_pair(pair)
        return pair

    def canonicalize(self, pair: WeightPair) -> WeightPair:
        return self.canonical_pair(pair.lam, pair.mu)

    def enumerate_simples(self) -> list[WeightPair]:
        """One canonical label per orbit: |C| * quotient-size labels."""
        reps = self.sub.quotient_representatives()
        out = []
        for eta in self.alcove_weights:
            for mu in reps:
                out.append(WeightPair(2 * eta - mu, mu))
        return out

    def grading(self, pair: WeightPair) -> Weight:
        """Class of (lambda - mu)/2 modulo the sublattice (canonical rep)."""
        return self.sub.canonical_rep((pair.lam - pair.mu) / 2)

    def graded_simples(self, gradings: list[Weight]) -> list[WeightPair]:
        """Simples with grading in the given classes, built directly
        (labels (eta + nu, eta - nu) over alcove eta with eta - nu in the
        mu-lattice); avoids enumerating the whole category."""
        rd = self.rd
        seen: dict = {}
        for nu in gradings:
            for eta in self.alcove_weights:
                mu = eta - nu
                ok = rd.in_root_lattice(mu) if self.integral else rd.in_weight_lattice(mu)
                if not ok:
                    continue
                p = self.canonical_pair(eta + nu, mu)
                seen.setdefault((p.lam.coords, p.mu.coords), p)
        pairs = list(seen.values())
        pairs.sort(
            key=lambda p: (
                self._alcove_index[((p.lam + p.mu) / 2).coords],
                p.mu.coords,
            )
        )
        return pairs

    # -- S-matrix and twist -----------------------------------------------------------

    def _dotted(self, b: WeightPair):
        key = (b.lam.coords, b.mu.coords)
        hit = self._dotted_cache.get(key)
        if hit is None:
            rd = self.rd
            two_rho = 2 * rd.rho
            hit = []
            for parity, w in self._weyl:
                b1, b2 = dot_action(rd, w, (b.lam, b.mu))
                hit.append((parity, b1 + two_rho, b2))
            self._dotted_cache[key] = hit
        return hit

    def s_numerator(self, a: WeightPair, b: WeightPair) -> CycNum:
        """Signed Weyl sum in the S-matrix entry (denominator not divided out)."""
        rd = self.rd
        row_l = a.lam + 2 * rd.rho
        row_m = a.mu
        n = self.conductor
        vec = [0] * n
        for parity, b1_shifted, b2 in self._dotted(b):
            e = rd.pairing(row_l, b2) + rd.pairing(row_m, b1_shifted)
            vec[self._xi_index(e)] += parity
        return CycNum(n, vec)

    def numerator_array(
        self, rows: list[WeightPair], cols: list[WeightPair] | None = None
    ) -> CycMatrix:
        """All S-numerators at once as an exact integer coefficient array.

        The exponent is bilinear in (row data, dotted column data), so the
        whole matrix reduces to one integer matrix product followed by a
        scatter-add of Weyl parities."""
        cols = rows if cols is None else cols
        self.weyl_denominator()  # nonvanishing asserted on every matrix build
        rd = self.rd
        n_rank = rd.rank
        nw = len(self._weyl)
        n = self.conductor

        def gram_vec(w: Weight) -> list[Fraction]:
            return [
                sum(w.coords[i] * rd.gram[i][j] for i in range(n_rank))
                for j in range(n_rank)
            ]

        row_vecs = []
        for a in rows:
            row_vecs.append(gram_vec(a.lam + 2 * rd.rho) + gram_vec(a.mu))
        col_vecs = []
        for b in cols:
            for _parity, b1_shifted, b2 in self._dotted(b):
                col_vecs.append(list(b2.coords) + list(b1_shifted.coords))
        scale_r = lcm(*(f.denominator for vec in row_vecs for f in vec)) if row_vecs else 1
        scale_c = lcm(*(f.denominator for vec in col_vecs for f in vec)) if col_vecs else 1
        ra = np.array(
            [[int(f * scale_r) for f in vec] for vec in row_vecs], dtype=np.int64
        )
        ca = np.array(
            [[int(f * scale_c) for f in vec] for vec in col_vecs], dtype=np.int64
        )
        exponents = ra @ ca.T  # (rows, cols*W), scaled by scale_r*scale_c
        step = (self.conductor // self.l) * self.xi_power_index
        num = exponents.astype(object) * step
        den = scale_r * scale_c
        if (num % den).any():
            raise QuantumError("non-integral xi exponent in matrix assembly")
        idx = ((num // den) % n).astype(np.int64).reshape(len(rows), len(cols), nw)
        parities = np.array([p for p, _w in self._weyl], dtype=np.int64)
        out = np.zeros((len(rows), len(cols), n), dtype=np.int64)
        rows_ix = np.arange(len(rows))[:, None, None]
        cols_ix = np.arange(len(cols))[None, :, None]
        np.add.at(out, (rows_ix, cols_ix, idx), parities[None, None, :])
        return CycMatrix(n, out, 1)

    def weyl_denominator(self) -> CycNum:
        if self._den is None:
            den = self.s_numerator(self.unit(), self.unit())
            if den.is_zero():
                raise QuantumError("Weyl denominator vanishes at this root of unity")
            self._den = den
        return self._den

    def _denominator_inverse(self) -> CycNum:
        if self._den_inv is None:
            self._den_inv = self.weyl_denominator().inverse()
        return self._den_inv

    def s_entry(self, a: WeightPair, b: WeightPair) -> CycNum:
        return self.s_numerator(a, b) * self._denominator_inverse()

    def numerator_matrix(self, rows: list[WeightPair], cols: list[WeightPair] | None = None):
        cols = rows if cols is None else cols
        arr = self.numerator_array(rows, cols)
        return [[arr.entry(i, j) for j in range(len(cols))] for i in range(len(rows))]

    def s_matrix(self, rows: list[WeightPair], cols: list[WeightPair] | None = None):
        cols = rows if cols is None else cols
        return self.scale_by_denominator(self.numerator_array(rows, cols))

    def scale_by_denominator(self, numerators: CycMatrix | list[list[CycNum]]):
        """Divide a matrix of S-numerators by the Weyl denominator, vectorized."""
        if not isinstance(numerators, CycMatrix):
            numerators = CycMatrix.from_cycnums(numerators, self.conductor)
        scaled = numerators.scale_cyc(self._denominator_inverse())
        m, k = scaled.num.shape[0], scaled.num.shape[1]
        return [[scaled.entry(i, j) for j in range(k)] for i in range(m)]

    def twist(self, a: WeightPair) -> CycNum:
        return self.xi_power(self.rd.pairing(a.lam + 2 * self.rd.rho, a.mu))

    def quantum_dims(self, a: WeightPair) -> tuple[CycNum, CycNum]:
        """(positive, negative) quantum dimensions, exact."""
        rd = self.rd
        two_rho = 2 * rd.rho
        n = self.conductor
        vp = [0] * n
        vm = [0] * n
        for parity, _b1, b2 in self._dotted(a):
            e = rd.pairing(two_rho, b2)
            vp[self._xi_index(e)] += parity
            vm[self._xi_index(-e)] += parity
        dim_plus_num = CycNum(n, vp)
        dim_minus_num = CycNum(n, vm)
        inv_p, inv_m = self._dim_denominator_inverses()
        return dim_plus_num * inv_p, dim_minus_num * inv_m

    def _dim_denominator_inverses(self) -> tuple[CycNum, CycNum]:
        if self._dim_den_inv is None:
            rd = self.rd
            n = self.conductor
            vp = [0] * n
            vm = [0] * n
            for parity, _b1, b2 in self._dotted(self.unit()):
                e = rd.pairing(2 * rd.rho, b2)
                vp[self._xi_index(e)] += parity
                vm[self._xi_index(-e)] += parity
            self._dim_den_inv = (CycNum(n, vp).inverse(), CycNum(n, vm).inverse())
        return self._dim_den_inv

    def renormalized_s(self, a: WeightPair, b: WeightPair) -> CycNum:
        """Type-A renormalization: no Weyl-denominator division, a fourth
        root of unity prefactor, and division by d^n."""
        if self.rd.lie_type != "A" or self.l % 2:
            raise QuantumError("renormalized S-matrix is defined for type A at even l")
        n_rank = self.rd.rank
        d = self.l // 2
        num_pos_roots = len(self.rd.positive_roots)
        i_unit = root_of_unity(4, 1).embed(self.conductor)
        scale = i_unit ** ((-n_rank - num_pos_roots) % 4)
        return scale * self.s_numerator(a, b) * Fraction(1, d**n_rank)

    # -- categorical structure ---------------------------------------------------------

    def transparent_invertible_check(self, j: WeightPair, simples: list[WeightPair]) -> bool:
        """True iff the invertible object j is transparent against every
        given simple, detected by S_{j,b} = dim+(j) dim+(b).

        (The naive double-braiding exponent only applies to honestly
        one-dimensional labels (nu, -nu); after the quotient identifications
        the S-matrix criterion is the one that survives, and it is what the
        symmetric-center count uses.)
        """
        dim_j, _ = self.quantum_dims(j)
        if not (dim_j == 1 or dim_j == -1):
            return False  # not invertible, so in particular not transparent-invertible
        unit = self.unit()
        den = self.weyl_denominator()
        num_unit_j = self.s_numerator(unit, j)
        for b in simples:
            lhs = self.s_numerator(j, b) * den
            rhs = num_unit_j * self.s_numerator(unit, b)
            if lhs != rhs:
                return False
        return True

    def symmetric_center_indices(
        self,
        simples: list[WeightPair],
        num_matrix: CycMatrix | list[list[CycNum]] | None = None,
    ) -> list[int]:
        """Indices of simples in the symmetric center, by nonvanishing of the
        weighted pairing sum over the category."""
        if num_matrix is None:
            a_mat = self.numerator_array(simples)
        elif isinstance(num_matrix, CycMatrix):
            a_mat = num_matrix
        else:
            a_mat = CycMatrix.from_cycnums(num_matrix, self.conductor)
        unit = self.unit()
        unit_col = [self.s_numerator(b, unit) for b in simples]
        weights = []
        for b, col in zip(simples, unit_col):
            dp, dm = self.quantum_dims(b)
            weights.append(dm * dp.inverse() * col)
        v_vec = CycMatrix.from_cycnums(weights, self.conductor)
        sums = weighted_row_sums(a_mat, v_vec)
        mask = sums.nonzero_mask()
        return [i for i in range(len(simples)) if mask[i]]

    def symmetric_center_size(
        self,
        simples: list[WeightPair],
        num_matrix: CycMatrix | list[list[CycNum]] | None = None,
    ) -> int:
        return len(self.symmetric_center_indices(simples, num_matrix))

    def subcategory_by_grading(
        self, simples: list[WeightPair], allowed: list[Weight]
    ) -> list[WeightPair]:
        """Simples whose grading lies in the given subgroup of the grading group."""
        reps = {self.sub.canonical_rep(g).coords for g in allowed}
        zero = Weight.zero(self.rd.rank).coords
        if zero not in reps:
            raise QuantumError("allowed gradings must contain 0")
        for g in list(reps):
            for h in list(reps):
                s = self.sub.canonical_rep(Weight(g) + Weight(h)).coords
                if s not in reps:
                    raise QuantumError("allowed gradings are not a subgroup")
        return [p for p in simples if self.grading(p).coords in reps]

    def super_quotient(
        self,
        simples: list[WeightPair],
        j: WeightPair,
        preferred: list[WeightPair] | None = None,
    ) -> list[WeightPair]:
        """One representative per orbit {X, X (x) j} for a transparent
        invertible j of dimension -1, detected by S-row proportionality
        with factor -1."""
        dim_j, _ = self.quantum_dims(j)
        if dim_j == 1 and self.canonicalize(j) == self.unit():
            return list(simples)  # trivial identification: all orbits singletons
        if dim_j != -1:
            raise QuantumError("super quotient needs dim(j) = -1")
        if self.twist(j) != 1:
            raise QuantumError("super quotient needs twist(j) = 1")
        if not self.transparent_invertible_check(j, simples):
            raise QuantumError("j is not transparent")
        canon = self.numerator_array(simples).canonical_num()
        rows = [tuple(int(c) for c in canon[i].ravel()) for i in range(len(simples))]
        neg_rows = {tuple(-c for c in row): i for i, row in enumerate(rows)}
        partner = []
        for i, row in enumerate(rows):
            p = neg_rows.get(row)
            if p is None or p == i:
                raise QuantumError(f"no -1-proportional partner for simple {i}")
            partner.append(p)
        for i, p in enumerate(partner):
            if partner[p] != i:
                raise QuantumError("partner pairing is not an involution")
        preferred_keys = (
            {(q.lam.coords, q.mu.coords) for q in preferred} if preferred else set()
        )
        chosen = []
        seen = set()
        for i, p in enumerate(partner):
            if i in seen or p in seen:
                continue
            seen.update((i, p))
            a, b = simples[i], simples[p]
            if (b.lam.coords, b.mu.coords) in preferred_keys:
                chosen.append(b)
            else:
                chosen.append(a)
        return chosen

