"""Verlinde fusion coefficients, the fusion ring and its absolute-value
variant, associativity verification, and the SL2(Z)/unitarity relations.

Coefficients are computed exactly: the S-matrix is lifted to integer
coefficient arrays over the working conductor, the unit-row divisions are
done once per column in the cyclotomic field, and the triple contraction
runs on integers.  Non-integral or irrational coefficients are reported,
never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _accel
from .cycmat import CycMatrix
from .datum import ModularDatum


class FusionError(ValueError):
    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = violations or []


@dataclass
class FusionRing:
    """Based ring with integer structure constants tensor[f, g, h]."""

    labels: list
    tensor: np.ndarray
    unit_index: int

    def coefficient(self, f: int, g: int, h: int) -> int:
        return int(self.tensor[f, g, h])

    def size(self) -> int:
        return len(self.labels)

    def absolute(self) -> FusionRing:
        return FusionRing(self.labels, np.abs(self.tensor), self.unit_index)

    def rescaled(self, signs: list[int]) -> FusionRing:
        """Structure constants after the basis change b_f -> signs[f] b_f."""
        s = np.asarray(signs)
        tensor = self.tensor * s[:, None, None] * s[None, :, None] * s[None, None, :]
        return FusionRing(self.labels, tensor, self.unit_index)

    def has_negative(self) -> bool:
        return bool((self.tensor < 0).any())

    def serialize_sparse(self) -> list[dict]:
        out = []
        for (f, g, h), v in np.ndenumerate(self.tensor):
            if v:
                out.append({"f": int(f), "g": int(g), "h": int(h), "N": int(v)})
        return out


def verlinde(datum: ModularDatum, unit_index: int) -> FusionRing:
    """Exact Verlinde coefficients N_{f,g}^h = sum_k S_fk S_gk conj(S_hk) / S_uk.

    Raises FusionError listing every non-integral (f, g, h) with its exact
    rational value if integrality fails.
    """
    m = datum.size()
    unit_row = datum.s[unit_index]
    for k, entry in enumerate(unit_row):
        if entry.is_zero():
            raise FusionError(f"unit-row S entry at column {k} vanishes")
    inverses = [entry.inverse() for entry in unit_row]
    weighted = [
        [datum.s[h][k].conjugate() * inverses[k] for k in range(m)] for h in range(m)
    ]
    a_mat = CycMatrix.from_cycnums(datum.s)
    u_mat = CycMatrix.from_cycnums(weighted, a_mat.conductor)
    n = a_mat.conductor
    bound = (
        int(np.abs(a_mat.num).max(initial=0)) ** 2
        * int(_abs_max(u_mat.num))
        * m
        * n
        * n
    )
    a_num, u_num = a_mat.num, u_mat.num
    if bound >= 2**62:
        a_num, u_num = a_num.astype(object), u_num.astype(object)
    raw = _accel.verlinde_contract(a_num, u_num)
    den = a_mat.den * a_mat.den * u_mat.den
    tensor4 = CycMatrix(n, raw, den)
    canon = tensor4.canonical_num()
    violations = []
    if canon[..., 1:].any():
        for f, g, h in zip(*np.nonzero(canon[..., 1:].any(axis=-1))):
            violations.append(
                {
                    "f": int(f),
                    "g": int(g),
                    "h": int(h),
                    "value": "irrational",
                }
            )
        raise FusionError("irrational fusion coefficient", violations)
    consts = canon[..., 0]
    tensor = np.zeros((m, m, m), dtype=np.int64)
    for idx, v in np.ndenumerate(consts):
        v = int(v)
        q, r = divmod(v, den)
        if r:
            violations.append(
                {
                    "f": int(idx[0]),
                    "g": int(idx[1]),
                    "h": int(idx[2]),
                    "value": str(Fraction(v, den)),
                }
            )
        else:
            tensor[idx] = q
    if violations:
        raise FusionError("non-integral fusion coefficient", violations)
    ring = FusionRing(list(datum.labels), tensor, unit_index)
    _check_unit_and_commutativity(ring)
    return ring


def _abs_max(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max(abs(int(x)) for x in arr.flat)
    return int(np.abs(arr).max())


def _check_unit_and_commutativity(ring: FusionRing) -> None:
    m = ring.size()
    unit = ring.tensor[ring.unit_index]
    if not np.array_equal(unit, np.eye(m, dtype=np.int64)):
        raise FusionError("unit law fails")
    if not np.array_equal(ring.tensor, ring.tensor.transpose(1, 0, 2)):
        raise FusionError("commutativity fails")


def check_associativity(ring: FusionRing, absolute: bool = False) -> dict:
    """Verify sum_e N_fg^e N_eh^x = sum_e N_gh^e N_fe^x for all indices.

    With absolute=True the check runs on |N| (the Cuntz ring)."""
    tensor = np.abs(ring.tensor) if absolute else ring.tensor
    defect = _accel.fusion_associator_defect(tensor)
    bad = np.nonzero(defect)
    violations = [
        {
            "f": int(f),
            "g": int(g),
            "h": int(h),
            "x": int(x),
            "defect": int(defect[f, g, h, x]),
        }
        for f, g, h, x in zip(*bad)
    ]
    return {
        "check": "associativity",
        "absolute": absolute,
        "size": ring.size(),
        "passed": not violations,
        "violations": violations[:50],
    }


def nonnegative_after_signs(ring: FusionRing, signs: list[int]) -> bool:
    return not ring.rescaled(signs).has_negative()


def sl2z_relations(datum: ModularDatum) -> dict:
    """Exact check of S^4 = (ST)^3 = 1 and [S^2, T] = 1."""
    s = CycMatrix.from_cycnums(datum.s)
    t = CycMatrix.diagonal(datum.t, s.conductor)
    s2 = s @ s
    s4 = s2 @ s2
    st = s @ t
    st3 = (st @ st) @ st
    comm = (s2 @ t) - (t @ s2)
    results = {
        "S^4 = 1": s4.is_identity(),
        "(ST)^3 = 1": st3.is_identity(),
        "[S^2, T] = 1": comm.is_zero(),
    }
    return {
        "check": "sl2z",
        "passed": all(results.values()),
        "relations": results,
    }


def unitarity(datum: ModularDatum) -> bool:
    """S conj(S)^T = 1, exactly."""
    s = CycMatrix.from_cycnums(datum.s)
    return (s @ s.conj().T).is_identity()
