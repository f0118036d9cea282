"""Theorem-level checks and the embedded reference data."""

import json

import pytest

from zmodular.cyclo import CycNum, root_of_unity
from zmodular.refdata import (
    REFERENCES,
    RefParseError,
    parse_cyclotomic,
    reference_matrices,
)
from zmodular.verify import (
    verify_counts,
    verify_cuntz,
    verify_ennola,
    verify_g4,
    verify_g24,
    verify_g27,
    verify_main_theorem,
    verify_sl2z,
)


def test_parse_cyclotomic():
    z = root_of_unity(5)
    assert parse_cyclotomic("2*(-z^4+z^3+z^2-z)", 5) == 2 * (-z**4 + z**3 + z**2 - z)
    assert parse_cyclotomic("1/10", 5) == CycNum.from_rational(1, 5) / 10
    assert parse_cyclotomic("-1", 7) == -1
    with pytest.raises(RefParseError):
        parse_cyclotomic("2+*z", 5)
    with pytest.raises(RefParseError):
        parse_cyclotomic("q", 5)


def test_reference_round_trip_checksums():
    # every embedded entry parses, and structural invariants hold
    for name, ref in REFERENCES.items():
        s, t, scalar = reference_matrices(name)
        size = len(s)
        assert all(len(row) == size for row in s)
        assert len(t) == size
        assert not scalar.is_zero()
        # symmetric tables
        for i in range(size):
            for j in range(size):
                assert s[i][j] == s[j][i], (name, i, j)
    # the sqrt(-7) expression squares to -7
    rt = parse_cyclotomic(REFERENCES["G24_family"]["sqrt_minus_7"], 7)
    assert rt * rt == -7


def test_main_theorem_small():
    report = verify_main_theorem(1, 3)
    assert report["passed"]
    assert report["one_representative_per_orbit"]
    assert report["calibration"]["plus"]
    assert report["calibration"]["minus"]  # n + #positive roots even for n = 1
    assert report["calibration"]["pinned"] == "plus"


def test_main_theorem_even_rank_pins_plus_convention():
    report = verify_main_theorem(2, 4)
    assert report["passed"]
    assert report["calibration"]["plus"]
    assert not report["calibration"]["minus"]


def test_counts_small():
    report = verify_counts(1, 4)
    assert report["passed"]
    assert report["results"]["simple_count"] == 12
    assert report["results"]["symmetric_center_size"] == 2


def test_ennola_small():
    assert verify_ennola(1, 3)["passed"]


def test_g27():
    report = verify_g27()
    assert report["passed"], report["violations"]
    assert report["s_squared_scaled_permutation"]


def test_g24():
    report = verify_g24()
    assert report["passed"], report["violations"]
    assert report["center_size"] == 2


def test_g4():
    report = verify_g4()
    assert report["passed"]
    assert report["sign_vector"] is not None


def test_g4_agrees_with_main_theorem_on_shared_datum():
    # both checks exercise the same size-3 datum
    assert verify_main_theorem(1, 3)["passed"]
    assert verify_g4()["passed"]


def test_sl2z_and_cuntz_wrappers():
    assert verify_sl2z(1, 3)["passed"]
    rep = verify_cuntz(1, 4)
    assert rep["passed"]
    assert rep["has_negative_coefficient"]
    assert "sign_rescale_nonnegative" in rep


def test_reports_are_deterministic():
    a = verify_main_theorem(1, 3)
    b = verify_main_theorem(1, 3)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    g = verify_g27()
    h = verify_g27()
    assert json.dumps(g, sort_keys=True) == json.dumps(h, sort_keys=True)


def test_main_theorem_rank_three():
    # beyond the acceptance grid: the identity is uniform in the rank
    report = verify_main_theorem(3, 4)
    assert report["passed"]
    assert report["calibration"]["plus"]


def test_g27_famous_entries():
    from zmodular.lattice import build_root_datum
    from zmodular.quantum import ModularContext

    ctx = ModularContext(build_root_datum("B", 2), 20)
    rd = ctx.rd
    unit = ctx.unit()
    far = ctx.canonical_pair(rd.from_fundamental([6, 1]), rd.from_fundamental([-4, 1]))
    z = root_of_unity(5).embed(ctx.conductor)
    assert ctx.s_entry(unit, unit) == 1
    assert ctx.s_entry(unit, far) == z**4 - z**3 - z**2 + z


def test_g24_famous_entry():
    from zmodular.lattice import build_root_datum
    from zmodular.quantum import ModularContext

    ctx = ModularContext(build_root_datum("B", 3), 28)
    rd = ctx.rd
    unit = ctx.unit()
    col = ctx.canonical_pair(rd.from_fundamental([22, 0, 0]), rd.from_fundamental([-20, 0, 0]))
    z = root_of_unity(7).embed(ctx.conductor)
    sqrt_m7 = z + z**2 - z**3 + z**4 - z**5 - z**6
    assert ctx.s_entry(unit, col) == sqrt_m7
