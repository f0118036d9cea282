"""Verlinde coefficients, fusion rings, associativity, SL2(Z) relations."""

import numpy as np
import pytest

from zmodular.cyclo import CycNum, root_of_unity
from zmodular.cycmat import CycMatrix
from zmodular.datum import ModularDatum
from zmodular.fusion import (
    FusionError,
    FusionRing,
    check_associativity,
    nonnegative_after_signs,
    sl2z_relations,
    unitarity,
    verlinde,
)
from zmodular.symbols import enumerate_symbols, malle_datum, special_symbols


def ring_for(n, d):
    md = malle_datum(n, d)
    return md, verlinde(md, md.labels.index(special_symbols(n, d)[0]))


def test_unit_row_is_delta():
    md, ring = ring_for(1, 3)
    m = ring.size()
    assert np.array_equal(ring.tensor[ring.unit_index], np.eye(m, dtype=np.int64))


def test_integrality_and_commutativity():
    for n, d in [(1, 3), (1, 4), (2, 4)]:
        md, ring = ring_for(n, d)
        assert ring.tensor.dtype == np.int64
        assert np.array_equal(ring.tensor, ring.tensor.transpose(1, 0, 2))


def test_negative_coefficient_exists():
    _, ring = ring_for(1, 3)
    assert ring.has_negative()
    _, ring4 = ring_for(1, 4)
    assert ring4.has_negative()
    # pinned location from the canonical symbol sort
    assert ring4.coefficient(1, 1, 3) == -1


def test_associativity_and_absolute():
    for n, d in [(1, 3), (1, 4), (2, 4)]:
        _, ring = ring_for(n, d)
        assert check_associativity(ring)["passed"]
        assert check_associativity(ring, absolute=True)["passed"]


def test_associativity_defect_detection():
    # commutative but not associative: b1*b1 = b2, b1*b2 = b0, b2*b2 = 0,
    # so (b1 b1) b2 = 0 while b1 (b1 b2) = b1
    tensor = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        tensor[0, i, i] = tensor[i, 0, i] = 1
    tensor[1, 1, 2] = 1
    tensor[1, 2, 0] = tensor[2, 1, 0] = 1
    bad = FusionRing(labels=[0, 1, 2], tensor=tensor, unit_index=0)
    report = check_associativity(bad)
    assert not report["passed"]
    assert report["violations"]


def test_relabeling_invariance():
    md, ring = ring_for(1, 4)
    perm = [3, 0, 5, 1, 4, 2]
    inv = [perm.index(i) for i in range(6)]
    labels = [md.labels[p] for p in perm]
    s = [[md.s[perm[i]][perm[j]] for j in range(6)] for i in range(6)]
    t = [md.t[p] for p in perm]
    shuffled = ModularDatum(labels, s, t, "unnormalized", {})
    ring2 = verlinde(shuffled, inv[ring.unit_index])
    for f in range(6):
        for g in range(6):
            for h in range(6):
                assert ring2.tensor[inv[f], inv[g], inv[h]] == ring.tensor[f, g, h]


def test_verlinde_rejects_non_integral():
    from fractions import Fraction

    one = CycNum.one(4)
    i = root_of_unity(4)
    # made-up symmetric matrix that is not a modular S-matrix
    half = one * Fraction(1, 2)
    s = [[half, half], [half, -half]]
    t = [one, i]
    datum = ModularDatum(labels=[0, 1], s=s, t=t, normalization="unnormalized", params={})
    with pytest.raises(FusionError) as err:
        verlinde(datum, 0)
    assert err.value.violations
    rec = err.value.violations[0]
    assert {"f", "g", "h", "value"} <= set(rec)


def test_verlinde_rejects_vanishing_unit_entry():
    one = CycNum.one(4)
    zero = CycNum.zero(4)
    datum = ModularDatum([0, 1], [[one, zero], [zero, one]], [one, one], "unnormalized", {})
    with pytest.raises(FusionError, match="vanishes"):
        verlinde(datum, 0)


def test_sl2z_relations_identity_datum():
    one = CycNum.one(3)
    datum = ModularDatum([0], [[one]], [one], "unnormalized", {})
    rep = sl2z_relations(datum)
    assert rep["passed"]


def test_sl2z_relations_grid():
    for n, d in [(1, 3), (2, 4)]:
        md = malle_datum(n, d)
        rep = sl2z_relations(md)
        assert rep["passed"], rep
        assert unitarity(md)


def test_sign_rescale_probe_runs():
    from zmodular.symbols import sign_d

    md, ring = ring_for(1, 3)
    signs = [sign_d(s) for s in md.labels]
    assert isinstance(nonnegative_after_signs(ring, signs), bool)


def test_sparse_serialization():
    _, ring = ring_for(1, 3)
    sparse = ring.serialize_sparse()
    assert all(set(rec) == {"f", "g", "h", "N"} for rec in sparse)
    dense = np.zeros_like(ring.tensor)
    for rec in sparse:
        dense[rec["f"], rec["g"], rec["h"]] = rec["N"]
    assert np.array_equal(dense, ring.tensor)


def test_verlinde_on_modular_subcategory_closes():
    # the 6-object rank-2 subcategory is modular; its normalized S-matrix
    # must produce an integral associative ring (closure under fusion)
    from zmodular.lattice import build_root_datum
    from zmodular.quantum import ModularContext
    from zmodular.refdata import REFERENCES, reference_matrices

    ctx = ModularContext(build_root_datum("B", 2), 20)
    rd = ctx.rd
    ref = REFERENCES["G27_family"]
    order = [
        ctx.canonical_pair(rd.from_fundamental(lc), rd.from_fundamental(mc))
        for lc, mc in ref["label_order"]
    ]
    s_ref, t_ref, scalar = reference_matrices("G27_family", ctx.conductor)
    s = [[-(scalar * e) for e in row] for row in s_ref]  # unitary normalized S
    datum = ModularDatum(order, s, t_ref, "renormalized", {})
    ring = verlinde(datum, 0)
    assert check_associativity(ring)["passed"]
    assert not ring.has_negative()  # this family is N-modular


def test_cycmat_matches_naive_products():
    z = root_of_unity(5)
    a = [[z, z**2 + 1], [CycNum.zero(5), z**4 * 3]]
    b = [[z**3, CycNum.one(5)], [z, -z]]
    ma = CycMatrix.from_cycnums(a)
    mb = CycMatrix.from_cycnums(b)
    prod = ma @ mb
    for i in range(2):
        for j in range(2):
            want = sum((a[i][k] * b[k][j] for k in range(2)), CycNum.zero(5))
            assert prod.entry(i, j) == want
    assert (ma - ma).is_zero()
    assert CycMatrix.identity(3, 5).is_identity()
    assert ma.conj().entry(0, 0) == z.conjugate()
