"""Command-line interface.

Commands: quantum | malle | fusion | verify (with subtargets).
Exit status: 0 all requested checks pass, 2 a check failed (violations
emitted), 1 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .cyclo import CycloError
from .datum import ModularDatum
from .fusion import FusionError, check_associativity, verlinde
from .lattice import AdmissibilityError, LatticeError, Weight, build_root_datum
from .output import (
    datum_document,
    fusion_csv,
    fusion_document,
    matrix_csv,
    matrix_latex,
    to_json,
    verify_document,
)
from .quantum import ModularContext, QuantumError
from .symbols import SymbolError, malle_datum, special_symbols
from . import verify as verify_mod

USAGE_ERROR, CHECK_FAILURE = 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zmodular", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    malle = sub.add_parser("malle", help="symbol-side S/T datum")
    malle.add_argument("--n", type=int, required=True)
    malle.add_argument("--d", type=int, required=True)
    _output_flags(malle, formats=("json", "csv", "latex"))

    quantum = sub.add_parser("quantum", help="quantum-side S/T datum")
    quantum.add_argument("--type", dest="lie_type", choices=("A", "B"), default="A")
    quantum.add_argument("--rank", type=int)
    quantum.add_argument("--l", type=int, help="order of the root of unity")
    quantum.add_argument("--n", type=int, help="type A shorthand: rank")
    quantum.add_argument("--d", type=int, help="type A shorthand: l = 2d")
    quantum.add_argument(
        "--full", action="store_true", help="full weight-lattice category (not integral)"
    )
    _output_flags(quantum, formats=("json", "csv", "latex"))

    fusion = sub.add_parser("fusion", help="Verlinde ring and its checks")
    fusion.add_argument("--n", type=int, required=True)
    fusion.add_argument("--d", type=int, required=True)
    fusion.add_argument(
        "--check",
        choices=("cuntz", "sl2z"),
        default="cuntz",
        help="which verification to run alongside the ring",
    )
    _output_flags(fusion, formats=("json", "csv"))

    verify = sub.add_parser("verify", help="theorem-level verifications")
    vsub = verify.add_subparsers(dest="target", required=True)
    for name, needs_nd in [
        ("main", True),
        ("ennola", True),
        ("counts", True),
        ("sl2z", True),
        ("cuntz", True),
        ("g27", False),
        ("g24", False),
        ("g4", False),
    ]:
        vp = vsub.add_parser(name)
        if needs_nd:
            vp.add_argument("--n", type=int, required=True)
            vp.add_argument("--d", type=int, required=True)
        _output_flags(vp, formats=("json",))
    return p


def _output_flags(parser, formats):
    parser.add_argument("--format", choices=formats, default="json")
    parser.add_argument("--out", type=Path, default=None)
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("ZMODULAR_JOBS", "1")),
        help="worker processes for matrix assembly",
    )


def _emit(text: str, out: Path | None, started: float) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text)
    meta = {
        "tool": "zmodular",
        "version": __version__,
        "elapsed_seconds": round(time.time() - started, 3),
    }
    Path(str(out) + ".meta.json").write_text(json.dumps(meta, sort_keys=True) + "\n")


def _validate_nd(n: int, d: int) -> None:
    if n < 1:
        raise SymbolError(f"n >= 1 required, got n = {n}")
    if d < n + 1:
        raise SymbolError(f"d >= n + 1 required, got (n, d) = ({n}, {d})")


def _quantum_datum(args) -> ModularDatum:
    if args.n is not None or args.d is not None:
        if args.n is None or args.d is None:
            raise QuantumError("--n and --d must be given together")
        _validate_nd(args.n, args.d)
        lie_type, rank, l = "A", args.n, 2 * args.d
    else:
        if args.rank is None or args.l is None:
            raise QuantumError("--rank and --l required (or --n/--d for type A)")
        lie_type, rank, l = args.lie_type, args.rank, args.l
    rd = build_root_datum(lie_type, rank)
    ctx = ModularContext(rd, l, integral=not args.full)
    simples = ctx.enumerate_simples()
    s = _assemble_s_matrix(ctx, simples, args.jobs)
    t = [ctx.twist(p) for p in simples]
    return ModularDatum(
        labels=simples,
        s=s,
        t=t,
        normalization="unnormalized",
        params={"type": lie_type, "rank": rank, "l": l},
    )


def _assemble_s_matrix(ctx: ModularContext, simples, jobs: int):
    if jobs <= 1 or len(simples) < 4:
        return ctx.s_matrix(simples)
    import numpy as np
    from concurrent.futures import ProcessPoolExecutor

    from .cycmat import CycMatrix

    spec = (ctx.rd.lie_type, ctx.rd.rank, ctx.l, ctx.integral)
    coords = [(p.lam.coords, p.mu.coords) for p in simples]
    bounds = [
        (k * len(simples) // jobs, (k + 1) * len(simples) // jobs) for k in range(jobs)
    ]
    blocks = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for block in pool.map(_s_rows_worker, [(spec, coords, b) for b in bounds]):
            blocks.append(block)
    stacked = np.concatenate([b for b in blocks if b.size], axis=0)
    return ctx.scale_by_denominator(CycMatrix(ctx.conductor, stacked, 1))


def _s_rows_worker(payload):
    from .quantum import WeightPair

    (lie_type, rank, l, integral), coords, (start, stop) = payload
    rd = build_root_datum(lie_type, rank)
    ctx = ModularContext(rd, l, integral=integral)
    pairs = [WeightPair(Weight(lc), Weight(mc)) for lc, mc in coords]
    return ctx.numerator_array(pairs[start:stop], pairs).num


def _run_malle(args) -> int:
    _validate_nd(args.n, args.d)
    datum = malle_datum(args.n, args.d)
    return _emit_datum(datum, args)


def _run_quantum(args) -> int:
    datum = _quantum_datum(args)
    return _emit_datum(datum, args)


def _emit_datum(datum: ModularDatum, args) -> int:
    if args.format == "json":
        text = to_json(datum_document(datum))
    elif args.format == "csv":
        text = matrix_csv(datum)
    else:
        text = matrix_latex(datum)
    _emit(text, args.out, args.started)
    return 0


def _run_fusion(args) -> int:
    _validate_nd(args.n, args.d)
    params = {"n": args.n, "d": args.d, "check": args.check}
    if args.check == "sl2z":
        report = verify_mod.verify_sl2z(args.n, args.d)
        text = to_json(verify_document(report))
        _emit(text, args.out, args.started)
        return 0 if report["passed"] else CHECK_FAILURE
    md = malle_datum(args.n, args.d)
    unit_index = md.labels.index(special_symbols(args.n, args.d)[0])
    try:
        ring = verlinde(md, unit_index)
    except FusionError as exc:
        doc = fusion_document(params, None, [{"error": str(exc), "violations": exc.violations[:20]}], False)
        _emit(to_json(doc), args.out, args.started)
        return CHECK_FAILURE
    reports = [check_associativity(ring), check_associativity(ring, absolute=True)]
    passed = all(r["passed"] for r in reports)
    if args.format == "csv":
        _emit(fusion_csv(ring), args.out, args.started)
    else:
        _emit(to_json(fusion_document(params, ring, reports, passed)), args.out, args.started)
    return 0 if passed else CHECK_FAILURE


def _run_verify(args) -> int:
    target = args.target
    if target in ("main", "ennola", "counts", "sl2z", "cuntz"):
        _validate_nd(args.n, args.d)
    report = {
        "main": lambda: verify_mod.verify_main_theorem(args.n, args.d),
        "ennola": lambda: verify_mod.verify_ennola(args.n, args.d),
        "counts": lambda: verify_mod.verify_counts(args.n, args.d),
        "sl2z": lambda: verify_mod.verify_sl2z(args.n, args.d),
        "cuntz": lambda: verify_mod.verify_cuntz(args.n, args.d),
        "g27": verify_mod.verify_g27,
        "g24": verify_mod.verify_g24,
        "g4": verify_mod.verify_g4,
    }[target]()
    _emit(to_json(verify_document(report)), args.out, args.started)
    return 0 if report["passed"] else CHECK_FAILURE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    args.started = time.time()
    runners = {
        "malle": _run_malle,
        "quantum": _run_quantum,
        "fusion": _run_fusion,
        "verify": _run_verify,
    }
    try:
        return runners[args.command](args)
    except (
        AdmissibilityError,
        LatticeError,
        QuantumError,
        SymbolError,
        CycloError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
