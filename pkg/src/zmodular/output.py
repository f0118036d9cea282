"""Output documents and emitters: deterministic JSON, CSV, LaTeX.

Data files are byte-identical across runs for the same configuration:
keys are sorted, labels use canonical sorts, and no timestamps enter the
data stream (run metadata goes to a .meta.json sidecar).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclo import CycNum
from .cycmat import CycMatrix
from .datum import ModularDatum


def canonical_strings(entries: list[list[CycNum]]) -> list[list[list[str]]]:
    """Canonical coefficient strings for a whole matrix, vectorized."""
    mat = CycMatrix.from_cycnums(entries)
    canon = mat.canonical_num()
    den = mat.den
    return [
        [[str(Fraction(int(c), den)) for c in cell] for cell in row] for row in canon
    ]


def datum_document(datum: ModularDatum) -> dict:
    s_strings = canonical_strings(datum.s)
    t_strings = canonical_strings([datum.t])[0]
    conductor = datum.conductor()
    doc = {
        "type": "modular_datum",
        "labels": [lab.serialize() for lab in datum.labels],
        "S": [
            [{"conductor": conductor, "coeffs": cell} for cell in row]
            for row in s_strings
        ],
        "T": [{"conductor": conductor, "coeffs": cell} for cell in t_strings],
        "normalization": datum.normalization,
        "params": datum.params,
    }
    return doc


def fusion_document(params: dict, ring, reports: list[dict], passed: bool) -> dict:
    return {
        "type": "fusion_report",
        "params": params,
        "passed": passed,
        "ring": {
            "size": ring.size() if ring else 0,
            "unit_index": ring.unit_index if ring else None,
            "tensor": ring.serialize_sparse() if ring else [],
        },
        "reports": reports,
    }


def verify_document(report: dict) -> dict:
    doc = {"type": "verify_report"}
    doc.update(report)
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def matrix_csv(datum: ModularDatum) -> str:
    """One S entry per line: f_index,g_index,conductor,coeffs (';'-joined)."""
    conductor = datum.conductor()
    strings = canonical_strings(datum.s)
    lines = []
    for i, row in enumerate(strings):
        for j, cell in enumerate(row):
            lines.append(f"{i},{j},{conductor},{';'.join(cell)}")
    return "\n".join(lines) + "\n"


def fusion_csv(ring) -> str:
    lines = ["f,g,h,N"]
    for rec in ring.serialize_sparse():
        lines.append(f"{rec['f']},{rec['g']},{rec['h']},{rec['N']}")
    return "\n".join(lines) + "\n"


def latex_cyc(x: CycNum) -> str:
    canon = x.canonical()
    n = x.conductor
    parts: list[str] = []
    for k, c in enumerate(canon):
        if not c:
            continue
        mono = "" if k == 0 else (f"\\zeta_{{{n}}}" + (f"^{{{k}}}" if k > 1 else ""))
        coeff = _latex_fraction(c, bare_one=bool(mono))
        term = coeff + mono
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


def _latex_fraction(c: Fraction, bare_one: bool) -> str:
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c == 1 and bare_one:
        return sign
    if c.denominator == 1:
        return f"{sign}{c.numerator}"
    return f"{sign}\\frac{{{c.numerator}}}{{{c.denominator}}}"


def matrix_latex(datum: ModularDatum) -> str:
    def bmatrix(rows: list[list[str]]) -> str:
        body = " \\\\\n".join(" & ".join(row) for row in rows)
        return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"

    s_rows = [[latex_cyc(e) for e in row] for row in datum.s]
    t_rows = [
        [latex_cyc(datum.t[i]) if i == j else "0" for j in range(len(datum.t))]
        for i in range(len(datum.t))
    ]
    return (
        "S = " + bmatrix(s_rows) + "\n\nT = " + bmatrix(t_rows) + "\n"
    )
