"""Root-system and lattice machinery for simple types A and B.

Weights live in the root-coordinate basis (exact rationals), where the
invariant form is an integer Gram matrix normalized so short simple roots
have squared length 2.  Type B follows the convention with the *first*
simple root short, matching the rank-2 and rank-3 data used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

Rat = int | Fraction


class LatticeError(ValueError):
    pass


class AdmissibilityError(ValueError):
    """The root-of-unity order fails the non-negligibility hypothesis."""


@dataclass(frozen=True)
class Weight:
    """A vector in the rational span of the simple roots."""

    coords: tuple[Fraction, ...]

    @classmethod
    def make(cls, coords) -> Weight:
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((Fraction(0),) * rank)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, scalar: Rat) -> Weight:
        s = Fraction(scalar)
        return Weight(tuple(a * s for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Rat) -> Weight:
        s = Fraction(scalar)
        return Weight(tuple(a / s for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def serialize(self) -> list[str]:
        return [str(c) for c in self.coords]


@dataclass(frozen=True)
class WeylElement:
    """Group element stored as its integer matrix on root coordinates;
    length_parity is (-1)^length, the determinant of the action."""

    matrix: tuple[tuple[int, ...], ...]
    length_parity: int

    def compose(self, other: WeylElement) -> WeylElement:
        n = len(self.matrix)
        m = tuple(
            tuple(
                sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        return WeylElement(m, self.length_parity * other.length_parity)


class RootDatum:
    """Cartan/Gram data, roots, and fundamental weights of a simple type."""

    def __init__(self, lie_type: str, rank: int):
        if lie_type not in ("A", "B"):
            raise LatticeError(f"unsupported Lie type {lie_type!r} (A or B)")
        if rank < 1 or (lie_type == "B" and rank < 2):
            raise LatticeError(f"invalid rank {rank} for type {lie_type}")
        self.lie_type = lie_type
        self.rank = rank
        # half squared lengths d_i = <alpha_i, alpha_i>/2; alpha_1 short in type B
        self.root_half_lengths = (
            (1,) * rank if lie_type == "A" else (1,) + (2,) * (rank - 1)
        )
        self.cartan = self._cartan_matrix()
        self.gram = tuple(
            tuple(Fraction(self.root_half_lengths[i] * self.cartan[i][j]) for j in range(rank))
            for i in range(rank)
        )
        self.fundamental_weights = self._fundamental_weights()
        self.rho = Weight.make(
            [sum(w.coords[i] for w in self.fundamental_weights) for i in range(rank)]
        )
        self._weyl_cache: list[WeylElement] | None = None
        self.positive_roots = self._positive_roots()
        self.highest_root = max(self.positive_roots, key=lambda r: sum(r.coords))
        shorts = [r for r in self.positive_roots if self.pairing(r, r) == 2]
        self.highest_short_root = max(shorts, key=lambda r: sum(r.coords))
        self.coxeter_number = int(sum(self.highest_root.coords)) + 1
        theta = self.highest_root
        theta_check = theta / (self.pairing(theta, theta) / 2)
        self.dual_coxeter_number = int(self.pairing(self.rho, theta_check)) + 1
        self.max_length_ratio = max(self.root_half_lengths) // min(self.root_half_lengths)
        self.longest_element = self._longest_element()
        self.pairing_denominator = lcm(
            *(
                self.pairing(a, b).denominator
                for a in self.fundamental_weights
                for b in self.fundamental_weights
            )
        )

    def _cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        d = self.root_half_lengths
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            # c[i][j] = <alpha_j, alpha_i^vee> = <alpha_i, alpha_j> / d_i
            g = -max(d[i], d[i + 1])
            c[i][i + 1] = g // d[i]
            c[i + 1][i] = g // d[i + 1]
        return tuple(tuple(row) for row in c)

    def _fundamental_weights(self) -> tuple[Weight, ...]:
        inv = invert_rational_matrix([[Fraction(x) for x in row] for row in self.cartan])
        return tuple(
            Weight(tuple(inv[i][k] for i in range(self.rank))) for k in range(self.rank)
        )

    def _simple_reflections(self) -> list[WeylElement]:
        n = self.rank
        refs = []
        for i in range(n):
            m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            for j in range(n):
                m[i][j] -= self.cartan[i][j]
            refs.append(WeylElement(tuple(tuple(r) for r in m), -1))
        return refs

    def _positive_roots(self) -> tuple[Weight, ...]:
        roots: set[tuple[Fraction, ...]] = set()
        for w in self.weyl_group():
            for i in range(self.rank):
                alpha = Weight.make([int(j == i) for j in range(self.rank)])
                roots.add(self.act(w, alpha).coords)
        positive = sorted(
            (c for c in roots if all(x >= 0 for x in c)), key=lambda c: (sum(c), c)
        )
        expected = (
            self.rank * (self.rank + 1) // 2 if self.lie_type == "A" else self.rank**2
        )
        if len(positive) != expected:
            raise LatticeError("positive root count mismatch")
        return tuple(Weight(c) for c in positive)

    def _longest_element(self) -> WeylElement:
        for w in self.weyl_group():
            if all(
                all(c <= 0 for c in self.act(w, r).coords) for r in self.positive_roots
            ):
                return w
        raise LatticeError("longest element not found")

    # -- group and form ------------------------------------------------------

    def weyl_group(self, bound: int = 10**4) -> list[WeylElement]:
        """Full Weyl group, enumerated once by closure of simple reflections."""
        if self._weyl_cache is not None and len(self._weyl_cache) > bound:
            raise LatticeError(f"Weyl group larger than bound {bound}")
        if self._weyl_cache is None:
            gens = self._simple_reflections()
            n = self.rank
            identity = WeylElement(
                tuple(tuple(int(a == b) for b in range(n)) for a in range(n)), 1
            )
            seen = {identity.matrix: identity}
            frontier = [identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in gens:
                        ws = s.compose(w)
                        if ws.matrix not in seen:
                            if len(seen) >= bound:
                                raise LatticeError(f"Weyl group larger than bound {bound}")
                            seen[ws.matrix] = ws
                            nxt.append(ws)
                frontier = nxt
            self._weyl_cache = sorted(seen.values(), key=lambda w: w.matrix)
        return self._weyl_cache

    def act(self, w: WeylElement, v: Weight) -> Weight:
        n = self.rank
        return Weight(
            tuple(
                sum(w.matrix[i][j] * v.coords[j] for j in range(n) if w.matrix[i][j])
                for i in range(n)
            )
        )

    def pairing(self, v: Weight, w: Weight) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(v.coords):
            if a:
                for j, b in enumerate(w.coords):
                    if b:
                        total += a * b * self.gram[i][j]
        return total

    def coroot_pairing(self, v: Weight, i: int) -> Fraction:
        """<v, alpha_i^vee>."""
        return sum(
            Fraction(self.cartan[i][j]) * v.coords[j]
            for j in range(self.rank)
            if self.cartan[i][j]
        )

    # -- lattice membership ----------------------------------------------------

    def in_root_lattice(self, v: Weight) -> bool:
        return all(c.denominator == 1 for c in v.coords)

    def in_weight_lattice(self, v: Weight) -> bool:
        return all(self.coroot_pairing(v, i).denominator == 1 for i in range(self.rank))

    def in_coroot_lattice(self, v: Weight) -> bool:
        """Membership in Q^vee, spanned by alpha_i / d_i."""
        return all(
            (v.coords[i] * self.root_half_lengths[i]).denominator == 1
            for i in range(self.rank)
        )

    def is_dominant(self, v: Weight) -> bool:
        return all(self.coroot_pairing(v, i) >= 0 for i in range(self.rank))

    def fundamental_coords(self, v: Weight) -> tuple[Fraction, ...]:
        return tuple(self.coroot_pairing(v, i) for i in range(self.rank))

    def from_fundamental(self, coords) -> Weight:
        out = Weight.zero(self.rank)
        for c, w in zip(coords, self.fundamental_weights):
            out = out + Fraction(c) * w
        return out

    def weight_index(self) -> int:
        """|P/Q| = determinant of the Cartan matrix."""
        return abs(int(rational_det([[Fraction(x) for x in row] for row in self.cartan])))

    def __repr__(self) -> str:
        return f"RootDatum({self.lie_type}{self.rank})"


@lru_cache(maxsize=None)
def build_root_datum(lie_type: str, rank: int) -> RootDatum:
    return RootDatum(lie_type, rank)


def enumerate_weyl(rd: RootDatum, bound: int = 10**4) -> list[WeylElement]:
    return rd.weyl_group(bound)


def pairing(rd: RootDatum, v: Weight, w: Weight) -> Fraction:
    return rd.pairing(v, w)


# -- actions on pairs ---------------------------------------------------------


def act_pair(rd: RootDatum, w: WeylElement, pair: tuple[Weight, Weight]) -> tuple[Weight, Weight]:
    """w fixes the difference of the pair and rotates the mean."""
    lam, mu = pair
    s = (lam + mu) / 2
    t = (lam - mu) / 2
    ws = rd.act(w, s)
    return (ws + t, ws - t)


def dot_action(rd: RootDatum, w: WeylElement, pair: tuple[Weight, Weight]) -> tuple[Weight, Weight]:
    """Shifted action w . (a, b) = w(a + rho, b + rho) - (rho, rho)."""
    lam, mu = pair
    a, b = act_pair(rd, w, (lam + rd.rho, mu + rd.rho))
    return (a - rd.rho, b - rd.rho)


# -- alcove --------------------------------------------------------------------


def admissibility_check(rd: RootDatum, lprime: int) -> None:
    ratio = rd.max_length_ratio
    if lprime % ratio == 0:
        if lprime < ratio * rd.dual_coxeter_number:
            raise AdmissibilityError(
                f"need l' >= D*h_dual = {ratio * rd.dual_coxeter_number}, got l' = {lprime}"
            )
    elif lprime <= rd.coxeter_number:
        raise AdmissibilityError(
            f"need l' > h = {rd.coxeter_number} when D does not divide l', got l' = {lprime}"
        )


def alcove(rd: RootDatum, lprime: int) -> list[Weight]:
    """Dominant weights with <lambda + rho, theta_0> < l', sorted canonically."""
    admissibility_check(rd, lprime)
    theta0 = (
        rd.highest_root if lprime % rd.max_length_ratio == 0 else rd.highest_short_root
    )
    levels = [rd.pairing(w, theta0) for w in rd.fundamental_weights]
    base = rd.pairing(rd.rho, theta0)
    found: list[tuple[int, ...]] = []

    def rec(idx: int, partial: list[int], used: Fraction) -> None:
        if idx == rd.rank:
            found.append(tuple(partial))
            return
        k = 0
        while base + used + k * levels[idx] < lprime:
            rec(idx + 1, partial + [k], used + k * levels[idx])
            k += 1

    rec(0, [], Fraction(0))
    return [rd.from_fundamental(c) for c in sorted(found)]


# -- integer/rational lattice utilities -----------------------------------------


def hermite_normal_form(columns: list[list[int]]) -> list[list[int]]:
    """Triangular (Hermite-style) basis of the span of integer columns.

    Rows are processed top-down; each returned column has a positive pivot
    with zeros in all earlier pivot rows of later columns.
    """
    if not columns:
        return []
    n = len(columns[0])
    pool = [list(c) for c in columns if any(c)]
    basis: list[list[int]] = []
    for row in range(n):
        idx = [k for k, c in enumerate(pool) if c[row] != 0]
        if not idx:
            continue
        while len(idx) > 1:
            idx.sort(key=lambda k: abs(pool[k][row]))
            k0 = idx[0]
            p = pool[k0][row]
            survivors = [k0]
            for k in idx[1:]:
                q = pool[k][row] // p
                pool[k] = [x - q * y for x, y in zip(pool[k], pool[k0])]
                if pool[k][row] != 0:
                    survivors.append(k)
            idx = survivors
        pivot = pool.pop(idx[0])
        if pivot[row] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        pool = [c for c in pool if any(c)]
    return basis


def invert_rational_matrix(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise LatticeError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def rational_det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    mat = [list(map(Fraction, row)) for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                f = mat[r][col] * inv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return det


def lattice_intersection(
    basis_a: list[list[Fraction]], basis_b: list[list[Fraction]]
) -> list[list[Fraction]]:
    """Basis (columns) of the intersection of two full-rank rational lattices.

    Both lattices are scaled to a common integer lattice; solutions of
    A u = B v are read off a Hermite-style elimination of the stacked matrix
    [A | -B] extended with unit rows.
    """
    n = len(basis_a[0])
    scale = 1
    for col in basis_a + basis_b:
        for x in col:
            scale = lcm(scale, Fraction(x).denominator)
    ai = [[int(Fraction(x) * scale) for x in col] for col in basis_a]
    bi = [[int(Fraction(x) * scale) for x in col] for col in basis_b]
    k = len(ai) + len(bi)
    stacked = []
    for idx in range(k):
        image = ai[idx] if idx < len(ai) else [-x for x in bi[idx - len(ai)]]
        unit = [int(j == idx) for j in range(k)]
        stacked.append(list(image) + unit)
    h = hermite_normal_form(stacked)
    inter_cols = []
    for col in h:
        if any(col[:n]):
            continue
        u = col[n : n + len(ai)]
        vec = [sum(u[j] * ai[j][i] for j in range(len(ai))) for i in range(n)]
        inter_cols.append(vec)
    h_int = hermite_normal_form(inter_cols)
    if len(h_int) != n:
        raise LatticeError("intersection is not full rank")
    return [[Fraction(x, scale) for x in col] for col in h_int]


class SublatticeData:
    """The intersection (l' Q^vee) cap Lambda with Lambda = Q or P.

    Provides the quotient size and a canonical-representative map for
    weights modulo the intersection (representatives in the fundamental
    cell of the triangular basis).
    """

    def __init__(self, rd: RootDatum, lprime: int, ambient: str = "Q"):
        if ambient not in ("Q", "P"):
            raise LatticeError("ambient must be 'Q' or 'P'")
        self.rd = rd
        self.lprime = lprime
        self.ambient = ambient
        n = rd.rank
        coroot_basis = [
            [Fraction(lprime, rd.root_half_lengths[i]) if j == i else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        if ambient == "Q":
            ambient_basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        else:
            ambient_basis = [list(w.coords) for w in rd.fundamental_weights]
        self.basis = lattice_intersection(coroot_basis, ambient_basis)
        # matrix with the basis vectors as columns, and its inverse
        self._basis_matrix = [[self.basis[j][i] for j in range(n)] for i in range(n)]
        self._inverse = invert_rational_matrix(self._basis_matrix)
        det_inter = abs(rational_det(self._basis_matrix))
        det_ambient = abs(rational_det([[col[i] for col in ambient_basis] for i in range(n)]))
        self.quotient_size = int(det_inter / det_ambient)

    @property
    def intersection_basis(self) -> list[Weight]:
        return [Weight(tuple(col)) for col in self.basis]

    def coordinates(self, v: Weight) -> tuple[Fraction, ...]:
        n = self.rd.rank
        return tuple(
            sum(self._inverse[i][j] * v.coords[j] for j in range(n)) for i in range(n)
        )

    def contains(self, v: Weight) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(v))

    def canonical_rep(self, v: Weight) -> Weight:
        """Coset representative in the fundamental cell; idempotent."""
        coords = self.coordinates(v)
        frac_part = [c - (c.numerator // c.denominator) for c in coords]
        n = self.rd.rank
        return Weight(
            tuple(
                sum(frac_part[j] * self._basis_matrix[i][j] for j in range(n))
                for i in range(n)
            )
        )

    def _ambient_generators(self) -> list[Weight]:
        n = self.rd.rank
        if self.ambient == "Q":
            return [Weight.make([int(j == i) for j in range(n)]) for i in range(n)]
        return list(self.rd.fundamental_weights)

    def quotient_representatives(self) -> list[Weight]:
        """Canonical transversal of Lambda modulo the intersection, sorted."""
        gens = self._ambient_generators()
        orders = []
        for g in gens:
            k, acc = 1, g
            while not self.contains(acc):
                k += 1
                acc = acc + g
            orders.append(k)
        reps: dict[tuple[Fraction, ...], Weight] = {}
        for combo in product(*(range(k) for k in orders)):
            v = Weight.zero(self.rd.rank)
            for c, g in zip(combo, gens):
                if c:
                    v = v + c * g
            r = self.canonical_rep(v)
            reps.setdefault(r.coords, r)
        if len(reps) != self.quotient_size:
            raise LatticeError(
                f"quotient enumeration found {len(reps)} classes, expected {self.quotient_size}"
            )
        return [reps[c] for c in sorted(reps)]


def sublattice_ops(rd: RootDatum, lprime: int, ambient: str = "Q") -> SublatticeData:
    return SublatticeData(rd, lprime, ambient)
