"""CLI surface: commands, formats, exit codes, schema validation, determinism."""

import contextlib
import io
import json
from pathlib import Path

import jsonschema
import pytest

from zmodular.cli import main
from zmodular.cyclo import CycNum
from zmodular.refdata import reference_matrices

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "schema" / "zmodular.schema.json").read_text()
)


def run(args):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def validate(doc):
    jsonschema.validate(doc, SCHEMA)


def test_malle_1_3_reproduces_reference():
    code, out = run(["malle", "--n", "1", "--d", "3"])
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    s_ref, t_ref, scalar = reference_matrices("cyclic_3")
    for i in range(3):
        for j in range(3):
            got = CycNum.from_dict(doc["S"][i][j])
            assert got == scalar * s_ref[i][j]
    for i in range(3):
        assert CycNum.from_dict(doc["T"][i]) == t_ref[i]


def test_malle_csv_and_latex():
    code, out = run(["malle", "--n", "1", "--d", "3", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert lines[0].startswith("0,0,3,")
    code, out = run(["malle", "--n", "1", "--d", "3", "--format", "latex"])
    assert code == 0
    assert "\\begin{bmatrix}" in out and "\\zeta_{3}" in out


def test_quantum_command_json_schema():
    code, out = run(["quantum", "--n", "1", "--d", "3"])
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert doc["params"] == {"type": "A", "rank": 1, "l": 6}
    assert len(doc["labels"]) == 6
    assert set(doc["labels"][0]) == {"lambda", "mu"}


def test_quantum_type_b():
    code, out = run(["quantum", "--type", "B", "--rank", "2", "--l", "20"])
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert len(doc["labels"]) == 300


def test_fusion_command():
    code, out = run(["fusion", "--n", "1", "--d", "3"])
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert doc["passed"]
    code, out = run(["fusion", "--n", "1", "--d", "3", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0] == "f,g,h,N"
    code, out = run(["fusion", "--n", "1", "--d", "4", "--check", "sl2z"])
    assert code == 0
    validate(json.loads(out))


def test_verify_subcommands():
    for args in (
        ["verify", "main", "--n", "1", "--d", "3"],
        ["verify", "counts", "--n", "1", "--d", "3"],
        ["verify", "g4"],
        ["verify", "g27"],
    ):
        code, out = run(args)
        assert code == 0, args
        doc = json.loads(out)
        validate(doc)
        assert doc["passed"] is True


def test_usage_errors_exit_1():
    code, _ = run(["malle", "--n", "0", "--d", "3"])
    assert code == 1
    code, _ = run(["malle", "--n", "2", "--d", "2"])
    assert code == 1
    code, _ = run(["quantum", "--type", "B", "--rank", "2", "--l", "6"])
    assert code == 1  # inadmissible l'
    with contextlib.redirect_stderr(io.StringIO()):
        code, _ = run(["malle", "--n", "1"])
    assert code == 1  # missing required flag
    with contextlib.redirect_stderr(io.StringIO()):
        code, _ = run(["nonsense"])
    assert code == 1


def test_usage_error_names_the_precondition(capsys):
    run(["malle", "--n", "2", "--d", "2"])
    err = capsys.readouterr().err
    assert "d >= n + 1" in err


def test_byte_identical_output_and_sidecar(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    code, _ = run(["malle", "--n", "1", "--d", "4", "--out", str(out1)])
    assert code == 0
    code, _ = run(["malle", "--n", "1", "--d", "4", "--out", str(out2)])
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    meta = json.loads((tmp_path / "a.json.meta.json").read_text())
    assert meta["tool"] == "zmodular"
    assert "elapsed_seconds" in meta
    # no timestamps or durations leak into the data file
    assert "elapsed" not in out1.read_text()


def test_jobs_parallel_assembly_matches_serial():
    code1, out1 = run(["quantum", "--n", "1", "--d", "4"])
    code2, out2 = run(["quantum", "--n", "1", "--d", "4", "--jobs", "2"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_check_failure_exit_code(monkeypatch):
    import zmodular.cli as cli_mod

    def fake_verify(n, d):
        return {"check": "main_theorem", "params": {}, "passed": False, "violations": [{"kind": "S"}]}

    monkeypatch.setattr(cli_mod.verify_mod, "verify_main_theorem", fake_verify)
    code, out = run(["verify", "main", "--n", "1", "--d", "3"])
    assert code == 2
    doc = json.loads(out)
    validate(doc)
    assert doc["violations"]


def test_fusion_cuntz_2_4_via_cli():
    code, out = run(["fusion", "--n", "2", "--d", "4", "--check", "cuntz"])
    assert code == 0
    doc = json.loads(out)
    validate(doc)
    assert doc["passed"]
    assert doc["ring"]["size"] == 16
