"""Quantum-side labels, S-matrix, twist, dimensions, center, subcategories."""

import random
from fractions import Fraction

import pytest

from zmodular.cyclo import CycNum, root_of_unity
from zmodular.lattice import Weight, build_root_datum
from zmodular.quantum import ModularContext, QuantumError, WeightPair


def ctx_a(n, d, **kw):
    return ModularContext(build_root_datum("A", n), 2 * d, **kw)


def test_simple_counts():
    assert len(ctx_a(1, 3).enumerate_simples()) == 6
    assert len(ctx_a(2, 4).enumerate_simples()) == 48
    assert len(ctx_a(1, 4).enumerate_simples()) == 12


def test_type_a_requires_d_at_least_rank_plus_one():
    with pytest.raises(QuantumError, match="d >= n \\+ 1"):
        ctx_a(2, 2)
    with pytest.raises(QuantumError, match="d >= n \\+ 1"):
        ctx_a(3, 3)


def test_weyl_denominator_nonzero_across_grid():
    for n, d in [(1, 3), (1, 5), (2, 4), (2, 5)]:
        assert not ctx_a(n, d).weyl_denominator().is_zero()
    for rank, l in [(2, 20), (3, 28)]:
        ctx = ModularContext(build_root_datum("B", rank), l)
        assert not ctx.weyl_denominator().is_zero()


def test_s_entry_unit_row_gives_quantum_dimensions():
    ctx = ctx_a(1, 3)
    unit = ctx.unit()
    assert ctx.s_entry(unit, unit) == 1
    for b in ctx.enumerate_simples():
        dim_plus, _ = ctx.quantum_dims(b)
        assert ctx.s_entry(unit, b) == dim_plus
        assert ctx.s_entry(b, unit) == ctx.quantum_dims(b)[0]


def test_s_matrix_symmetric_on_integral_category():
    for n, d in [(1, 3), (1, 4), (2, 4)]:
        ctx = ctx_a(n, d)
        simples = ctx.enumerate_simples()
        arr = ctx.numerator_array(simples)
        assert (arr - arr.T).is_zero()


def test_orbit_invariance_under_sublattice_shifts():
    rng = random.Random(3)
    ctx = ctx_a(2, 4)
    simples = ctx.enumerate_simples()
    basis = ctx.sub.intersection_basis
    for _ in range(12):
        a = rng.choice(simples)
        b = rng.choice(simples)
        nu = rng.randint(-2, 2) * basis[0] + rng.randint(-2, 2) * basis[1]
        shifted = a.shift(nu)
        assert ctx.s_numerator(shifted, b) == ctx.s_numerator(a, b)
        assert ctx.s_numerator(b, shifted) == ctx.s_numerator(b, a)
        assert ctx.twist(shifted) == ctx.twist(a)


def test_twist_examples():
    ctx = ctx_a(2, 4)
    rd = ctx.rd
    assert ctx.twist(ctx.unit()) == 1
    pair = WeightPair(-2 * rd.rho, 2 * rd.rho)
    assert ctx.twist(pair) == 1  # lambda + 2 rho = 0


def test_b2_subcategory_twist_vector():
    ctx = ModularContext(build_root_datum("B", 2), 20)
    rd = ctx.rd
    order = [
        ((0, 0), (0, 0)),
        ((0, 2), (0, 2)),
        ((2, 0), (2, 0)),
        ((0, 1), (0, 1)),
        ((6, 1), (-4, 1)),
        ((6, 0), (-4, 0)),
    ]
    z5 = root_of_unity(5).embed(ctx.conductor)
    expected = [CycNum.one(ctx.conductor), CycNum.one(ctx.conductor), z5**3, z5**2,
                -CycNum.one(ctx.conductor), CycNum.one(ctx.conductor)]
    for (lc, mc), want in zip(order, expected):
        p = ctx.canonical_pair(rd.from_fundamental(lc), rd.from_fundamental(mc))
        assert ctx.twist(p) == want


def test_quantum_dims_examples():
    ctx = ctx_a(2, 4)
    assert ctx.quantum_dims(ctx.unit()) == (CycNum.one(ctx.conductor), CycNum.one(ctx.conductor))
    w1 = ctx.rd.fundamental_weights[0]
    central = ctx.canonical_pair((2 * 4 - 3) * w1, -3 * w1)
    dp, dm = ctx.quantum_dims(central)
    assert dp == 1 and dm == 1  # (-1)^n with n = 2
    ctx1 = ctx_a(1, 3)
    w1 = ctx1.rd.fundamental_weights[0]
    central1 = ctx1.canonical_pair(4 * w1, -2 * w1)
    assert ctx1.quantum_dims(central1) == (-CycNum.one(ctx1.conductor), -CycNum.one(ctx1.conductor))


def test_b3_dim_minus_one_object():
    ctx = ModularContext(build_root_datum("B", 3), 28)
    rd = ctx.rd
    j = ctx.canonical_pair(
        rd.from_fundamental([14, 0, 2]), rd.from_fundamental([-14, 0, 2])
    )
    dp, dm = ctx.quantum_dims(j)
    assert dp == -1
    assert ctx.twist(j) == 1


def test_transparency():
    ctx = ctx_a(1, 3)
    simples = ctx.enumerate_simples()
    assert ctx.transparent_invertible_check(ctx.unit(), simples)
    w1 = ctx.rd.fundamental_weights[0]
    central = ctx.canonical_pair(4 * w1, -2 * w1)
    assert ctx.transparent_invertible_check(central, simples)
    generic = ctx.canonical_pair(2 * w1, Weight.zero(1))
    assert not ctx.transparent_invertible_check(generic, simples)


def test_symmetric_center_sizes():
    assert ctx_a(1, 3).symmetric_center_size(ctx_a(1, 3).enumerate_simples()) == 2
    ctx = ctx_a(2, 4)
    assert ctx.symmetric_center_size(ctx.enumerate_simples()) == 3


def test_renormalized_s_relation_and_unit_entry():
    for n, d in [(1, 3), (2, 4)]:
        ctx = ctx_a(n, d)
        den = ctx.weyl_denominator()
        npos = len(ctx.rd.positive_roots)
        i_unit = root_of_unity(4, 1).embed(ctx.conductor)
        simples = ctx.enumerate_simples()
        rng = random.Random(1)
        for _ in range(6):
            a, b = rng.choice(simples), rng.choice(simples)
            lhs = ctx.renormalized_s(a, b) * den * (d**n) * i_unit ** ((n + npos) % 4)
            rhs = ctx.s_numerator(a, b) * den
            assert lhs == rhs
        unit = ctx.unit()
        expected = i_unit ** ((-n - npos) % 4) * den * Fraction(1, d**n)
        assert ctx.renormalized_s(unit, unit) == expected


def test_renormalized_s_rows_unitary_after_dressing():
    # on the one-representative-per-orbit label set the dressed rows are
    # unitary; |i-power| = 1 so the row sums of |Stilde|^2 are exactly 1
    from zmodular.symbols import enumerate_symbols, iota

    ctx = ctx_a(1, 3)
    pairs = [iota(s) for s in enumerate_symbols(1, 3)]
    for a in pairs:
        total = CycNum.zero(ctx.conductor)
        for b in pairs:
            e = ctx.renormalized_s(a, b)
            total = total + e * e.conjugate()
        assert total == 1


def test_renormalized_requires_type_a():
    ctx = ModularContext(build_root_datum("B", 2), 20)
    with pytest.raises(QuantumError):
        ctx.renormalized_s(ctx.unit(), ctx.unit())


def test_grading_subcategory_selection():
    ctx = ModularContext(build_root_datum("B", 2), 20)
    rd = ctx.rd
    simples = ctx.enumerate_simples()
    assert len(simples) == 300
    w1 = rd.fundamental_weights[0]
    sub = ctx.subcategory_by_grading(simples, [Weight.zero(2), 5 * w1])
    assert len(sub) == 6
    direct = ctx.graded_simples([Weight.zero(2), 5 * w1])
    assert {(p.lam.coords, p.mu.coords) for p in sub} == {
        (p.lam.coords, p.mu.coords) for p in direct
    }
    full = ctx.subcategory_by_grading(simples, [ctx.grading(p) for p in simples])
    assert len(full) == len(simples)
    with pytest.raises(QuantumError, match="subgroup"):
        ctx.subcategory_by_grading(simples, [Weight.zero(2), w1])


def test_super_quotient_with_unit_is_identity():
    ctx = ctx_a(2, 4)
    simples = ctx.enumerate_simples()[:6]
    assert ctx.super_quotient(simples, ctx.unit()) == simples


def test_canonical_pair_validation():
    ctx = ctx_a(1, 3)
    w1 = ctx.rd.fundamental_weights[0]
    with pytest.raises(QuantumError):
        # mu outside the root lattice in the integral category
        ctx.canonical_pair(w1, w1)
    with pytest.raises(QuantumError):
        # lambda + mu outside 2C
        ctx.canonical_pair(6 * w1, Weight.zero(1))


def test_full_category_labels():
    ctx = ModularContext(build_root_datum("A", 1), 6, integral=False)
    simples = ctx.enumerate_simples()
    assert len(simples) == 12
    # fractional pairing exponents are representable at the working conductor
    arr = ctx.numerator_array(simples)
    assert arr.num.shape == (12, 12, ctx.conductor)


def test_float_cross_check_of_matrix_entries():
    # independent complex-arithmetic evaluation of the same signed Weyl sum
    import cmath

    from zmodular.lattice import dot_action

    ctx = ModularContext(build_root_datum("B", 2), 20)
    rd = ctx.rd
    simples = ctx.enumerate_simples()[:8]
    xi_c = cmath.exp(2j * cmath.pi * ctx.xi_power_index / ctx.l)
    for a in simples:
        for b in simples:
            num_float = 0j
            for parity, w in zip(
                [w.length_parity for w in rd.weyl_group()], rd.weyl_group()
            ):
                b1, b2 = dot_action(rd, w, (b.lam, b.mu))
                e = rd.pairing(a.lam + 2 * rd.rho, b2) + rd.pairing(
                    a.mu, b1 + 2 * rd.rho
                )
                num_float += parity * xi_c ** float(e)
            exact = ctx.s_numerator(a, b).to_complex()
            assert abs(exact - num_float) < 1e-8


def test_canonical_pairs_on_same_orbit_have_identical_fields():
    ctx = ctx_a(2, 4)
    basis = ctx.sub.intersection_basis
    p = ctx.enumerate_simples()[7]
    shifted = p.shift(2 * basis[0] - basis[1])
    assert ctx.canonicalize(shifted) == ctx.canonicalize(p) == p


def test_twists_are_roots_of_unity():
    ctx = ModularContext(build_root_datum("B", 2), 20)
    for p in ctx.enumerate_simples()[:20]:
        assert ctx.twist(p) ** ctx.l == 1


def test_super_quotient_rejects_non_transparent_j():
    ctx = ModularContext(build_root_datum("B", 3), 28)
    rd = ctx.rd
    w1 = rd.fundamental_weights[0]
    simples = ctx.graded_simples(
        [Weight.zero(3), 7 * w1, 14 * w1, 21 * w1]
    )
    # dim -1, twist 1, but not transparent (the bar-unit label)
    fake = ctx.canonical_pair(
        rd.from_fundamental([14, 0, 0]), rd.from_fundamental([-14, 0, 0])
    )
    dp, _ = ctx.quantum_dims(fake)
    assert dp == -1 and ctx.twist(fake) == 1
    with pytest.raises(QuantumError, match="transparent"):
        ctx.super_quotient(simples, fake)
