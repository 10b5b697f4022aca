"""Command-line front end: eval, sweep, random-compare, synthesize.

Exit codes: 0 success, 1 usage error, 2 resource-cap error, 3 internal
consistency failure (engines disagree beyond tolerance).

CSV is the tabular format.  Sweep files carry the header
``quantity,N,m,p,engine,value,error`` (plus ``max_discrepancy`` with
``--engine all``); float values are printed in scientific notation with 17
significant digits so repeated runs are byte identical.  ``--json`` wraps
the same records with run metadata.
"""

import argparse
import json
import math
import sys
import time

from . import __version__, analytic, circuits, oracle, spectral
from .channels import NoiseParameter, survival
from .errors import ConsistencyError, InputError, ResourceLimitError
from .states import BlockConfig, ghz, random_orthogonal_pair

ENGINE_DISAGREEMENT_TOL = 1e-8

QUANTITIES = ("coherence", "bound", "fidelity", "threshold", "negativity", "fisher")

# engine preference order for --engine auto
ENGINES = {
    "coherence": ("analytic", "oracle"),
    "bound": ("analytic",),
    "fidelity": ("analytic", "oracle"),
    "threshold": ("analytic",),
    "negativity": ("spectral", "oracle"),
    "fisher": ("spectral", "oracle"),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _evaluate(quantity, engine, cfg, p, generator="block-x", threshold_cap=None):
    """Dispatch one (quantity, engine) evaluation; returns a float or ThresholdResult."""
    if quantity == "coherence":
        if engine == "analytic":
            return analytic.coherence_norm(cfg, p)
        if engine == "oracle":
            return oracle.coherence_norm(cfg, p)
    elif quantity == "bound":
        if engine == "analytic":
            return analytic.coherence_bound(cfg, p)
    elif quantity == "fidelity":
        if engine == "analytic":
            return analytic.distill_fidelity(cfg, p)
        if engine == "oracle":
            return oracle.distill_protocol_average(cfg, p)
    elif quantity == "threshold":
        if engine == "analytic":
            cap = threshold_cap or analytic.DEFAULT_THRESHOLD_CAP
            return analytic.distill_threshold(cfg.m, p, cap=cap)
    elif quantity == "negativity":
        if engine == "spectral":
            return spectral.negativity(cfg, p)
        if engine == "oracle":
            return oracle.negativity(cfg, p)
    elif quantity == "fisher":
        if engine == "spectral":
            return spectral.fisher_information(cfg, p, generator=generator)
        if engine == "oracle":
            return oracle.fisher(cfg, p, generator=generator)
    raise InputError(f"engine {engine!r} does not support quantity {quantity!r}")


def _engines_for(quantity, requested):
    if quantity not in ENGINES:
        raise _UsageError(f"unknown quantity {quantity!r}")
    supported = ENGINES[quantity]
    if requested == "auto":
        return (supported[0],)
    if requested == "all":
        return supported
    if requested not in supported:
        raise _UsageError(
            f"engine {requested!r} does not support {quantity!r} (supported: {', '.join(supported)})"
        )
    return (requested,)


def _fmt_value(value):
    if value is None:
        return ""
    if isinstance(value, analytic.ThresholdResult):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".16e")


def _noise_from_args(args):
    if args.kappa is not None or args.t is not None:
        if args.kappa is None or args.t is None:
            raise _UsageError("--kappa and --t must be given together")
        return NoiseParameter.from_rate(args.kappa, args.t).p
    if args.p is None:
        raise _UsageError("give --p or (--kappa and --t)")
    return survival(args.p)


def _write_output(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_envelope(args, records):
    return json.dumps(
        {
            "command": " ".join(sys.argv[1:]),
            "version": __version__,
            "seed": getattr(args, "seed", None),
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
            "records": records,
        },
        indent=2,
    ) + "\n"


# ---------------------------------------------------------------- eval


def _cmd_eval(args):
    p = _noise_from_args(args)
    cfg = BlockConfig(N=args.N, m=args.m) if args.quantity != "threshold" else BlockConfig(N=2, m=args.m)
    engines = _engines_for(args.quantity, args.engine)
    records = []
    for engine in engines:
        start = time.perf_counter()
        value = _evaluate(args.quantity, engine, cfg, p, generator=args.generator,
                          threshold_cap=args.threshold_cap)
        runtime = time.perf_counter() - start
        records.append(
            {
                "quantity": args.quantity,
                "N": args.N if args.N is not None else "",
                "m": args.m,
                "p": p,
                "engine": engine,
                "value": str(value) if isinstance(value, analytic.ThresholdResult) else float(value),
                "runtime": runtime,
            }
        )
    numeric = [r["value"] for r in records if isinstance(r["value"], float)]
    discrepancy = max(numeric) - min(numeric) if len(numeric) > 1 else 0.0
    if args.engine == "all":
        for r in records:
            r["max_discrepancy"] = discrepancy
    if args.json:
        _write_output(_json_envelope(args, records), args.out)
    else:
        header = "quantity,N,m,p,engine,value,runtime"
        if args.engine == "all":
            header += ",max_discrepancy"
        lines = [header]
        for r in records:
            val = r["value"] if isinstance(r["value"], str) else _fmt_value(r["value"])
            line = f"{r['quantity']},{r['N']},{r['m']},{r['p']!r},{r['engine']},{val},{r['runtime']:.3f}"
            if args.engine == "all":
                line += f",{_fmt_value(discrepancy)}"
            lines.append(line)
        _write_output("\n".join(lines) + "\n", args.out)
    if args.engine == "all" and discrepancy > ENGINE_DISAGREEMENT_TOL:
        raise ConsistencyError(
            f"engines disagree by {discrepancy:.3e} (tolerance {ENGINE_DISAGREEMENT_TOL:g})"
        )
    return 0


# ---------------------------------------------------------------- sweep


def _parse_n_values(args):
    if args.n_list:
        return [int(x) for x in args.n_list.split(",")]
    if args.n_pow2:
        lo, hi = (int(x) for x in args.n_pow2.split(":"))
        return [2**k for k in range(lo, hi + 1)]
    if args.n_range:
        parts = [int(x) for x in args.n_range.split(":")]
        if len(parts) == 2:
            lo, hi, step = parts[0], parts[1], 1
        elif len(parts) == 3:
            lo, hi, step = parts
        else:
            raise _UsageError(f"bad --n-range {args.n_range!r}")
        return list(range(lo, hi + 1, step))
    raise _UsageError("give one of --n-range, --n-list, --n-pow2")


def _parse_m_values(args):
    if args.m_list == "log2":
        return "log2"
    return [int(x) for x in args.m_list.split(",")]


def _cmd_sweep(args):
    if args.quantity == "threshold":
        raise _UsageError("threshold has no N axis; use `eval threshold`")
    n_values = _parse_n_values(args)
    m_values = _parse_m_values(args)
    p_values = [survival(float(x)) for x in args.p_list.split(",")]
    engines = _engines_for(args.quantity, args.engine)
    header = "quantity,N,m,p,engine,value,error"
    if args.engine == "all":
        header += ",max_discrepancy"
    rows = [header]
    series = {}
    worst = 0.0
    m_iter = ["log2"] if m_values == "log2" else sorted(m_values)
    for m in m_iter:
        for p in p_values:
            for n in n_values:
                m_eff = max(1, math.ceil(math.log2(n))) if m == "log2" else m
                cfg = BlockConfig(N=n, m=m_eff)
                values = {}
                errors = {}
                for engine in engines:
                    try:
                        v = _evaluate(args.quantity, engine, cfg, p, generator=args.generator)
                        values[engine] = float(v)
                    except (InputError, ResourceLimitError) as exc:
                        # keep the error cell comma-free so the CSV stays parseable
                        errors[engine] = f"{engine}: {exc}".replace(",", ";")
                disc = max(values.values()) - min(values.values()) if len(values) > 1 else 0.0
                worst = max(worst, disc)
                for engine in engines:
                    cells = [
                        args.quantity,
                        str(n),
                        str(m_eff),
                        repr(p),
                        engine,
                        _fmt_value(values.get(engine)),
                        errors.get(engine, ""),
                    ]
                    if args.engine == "all":
                        cells.append(_fmt_value(disc))
                    rows.append(",".join(cells))
                primary = engines[0]
                if primary in values:
                    series.setdefault((m_eff, p, primary), []).append((n, values[primary]))
    if args.fit:
        for (m_eff, p, engine), pts in sorted(series.items()):
            positive = [(n, v) for n, v in pts if v > 0]
            if len(positive) < 3:
                continue
            fit = analytic.fit_exponential_tail(positive)
            rows.append(
                f"#fit,{args.quantity},m={m_eff},p={p!r},engine={engine}"
                f",a={_fmt_value(fit.amplitude)},gamma={_fmt_value(fit.rate)}"
                f",residual={_fmt_value(fit.residual)},window={fit.window[0]:g}:{fit.window[1]:g}"
            )
    if args.json:
        header_cells = rows[0].split(",")
        records = [dict(zip(header_cells, r.split(","))) for r in rows[1:] if not r.startswith("#")]
        _write_output(_json_envelope(args, records), args.out)
    else:
        _write_output("\n".join(rows) + "\n", args.out)
    if args.engine == "all" and worst > ENGINE_DISAGREEMENT_TOL:
        raise ConsistencyError(f"engines disagree by {worst:.3e}")
    return 0


# ---------------------------------------------------------------- random-compare


def _cmd_random_compare(args):
    p = _noise_from_args(args)
    if args.m > 4:
        raise _UsageError(f"random-compare is specified for m <= 4, got {args.m}")
    reference = oracle.generic_coherence_norm(ghz(args.m, +1), ghz(args.m, -1), 1, p)
    rows = ["sample,value"]
    values = []
    for k in range(args.samples + 1):
        if k == 0:
            value = reference  # sample 0 is the GHZ block pair itself
        else:
            a, b = random_orthogonal_pair(args.m, args.seed + k)
            value = oracle.generic_coherence_norm(a, b, 1, p)
        values.append(value)
        rows.append(f"{k},{_fmt_value(value)}")
    random_values = values[1:]
    # strict exceedance with headroom for trace-norm rounding noise
    exceed = sum(1 for v in random_values if v > reference + 1e-12)
    summary = {
        "m": args.m,
        "p": p,
        "samples": args.samples,
        "seed": args.seed,
        "cghz_block_norm": reference,
        "max_random": max(random_values) if random_values else None,
        "exceed_count": exceed,
        "exceed_fraction": exceed / args.samples if args.samples else 0.0,
    }
    if args.out:
        _write_output("\n".join(rows) + "\n", args.out)
    if args.json:
        sys.stdout.write(_json_envelope(args, [summary]))
    else:
        sys.stdout.write(
            f"cghz block norm: {_fmt_value(reference)}\n"
            f"max over {args.samples} random pairs: {_fmt_value(summary['max_random'])}\n"
            f"pairs exceeding the cghz value: {exceed} ({summary['exceed_fraction']:.6f})\n"
        )
    return 0


# ---------------------------------------------------------------- synthesize


def _cmd_synthesize(args):
    cfg = BlockConfig(N=args.N, m=args.m)
    circuit = circuits.synthesize_preparation(cfg)
    text = circuits.export_circuit(circuit)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    ms, zl, phase = circuits.gate_counts(circuit)
    report = {
        "N": args.N,
        "m": args.m,
        "ms_count": ms,
        "zlayer_count": zl,
        "total_ms_phase": f"{phase}*pi",
    }
    if args.verify:
        if cfg.qubits > 10:
            sys.stderr.write(
                f"warning: verification skipped, {cfg.qubits} qubits exceed the cap of 10\n"
            )
        else:
            report["fidelity"] = circuits.preparation_fidelity(cfg, circuit)
    if args.json:
        sys.stdout.write(_json_envelope(args, [report]))
    else:
        msg = f"ms={ms} zlayers={zl} phase={phase}*pi"
        if "fidelity" in report:
            msg += f" fidelity={report['fidelity']:.12f}"
        sys.stdout.write(msg + "\n")
    return 0


# ---------------------------------------------------------------- entry point


def build_parser():
    parser = _Parser(prog="cghz", description="Concatenated-GHZ robustness toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_n=True):
        if with_n:
            sp.add_argument("--N", type=int, required=False, default=None)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--p", type=float, default=None)
        sp.add_argument("--kappa", type=float, default=None)
        sp.add_argument("--t", type=float, default=None)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--out", default=None)
        sp.add_argument("--seed", type=int, default=0)

    ev = sub.add_parser("eval", help="single-point evaluation")
    ev.add_argument("quantity", choices=QUANTITIES)
    add_common(ev)
    ev.add_argument("--engine", default="auto", choices=("auto", "analytic", "spectral", "oracle", "all"))
    ev.add_argument("--generator", default="block-x", choices=("block-x", "single-z"))
    ev.add_argument("--threshold-cap", type=int, default=None)
    ev.set_defaults(func=_cmd_eval)

    sw = sub.add_parser("sweep", help="parameter sweep to CSV")
    sw.add_argument("quantity", choices=QUANTITIES)
    sw.add_argument("--n-range", default=None, help="lo:hi[:step]")
    sw.add_argument("--n-list", default=None, help="comma-separated N values")
    sw.add_argument("--n-pow2", default=None, help="lo:hi exponent range, N = 2^k")
    sw.add_argument("--m", dest="m_list", required=True, help="comma list, or 'log2' for m = ceil(log2 N)")
    sw.add_argument("--p", dest="p_list", required=True, help="comma-separated p values")
    sw.add_argument("--engine", default="auto", choices=("auto", "analytic", "spectral", "oracle", "all"))
    sw.add_argument("--generator", default="block-x", choices=("block-x", "single-z"))
    sw.add_argument("--fit", action="store_true", help="append exponential tail fits per series")
    sw.add_argument("--json", action="store_true")
    sw.add_argument("--out", default=None)
    sw.add_argument("--seed", type=int, default=0)
    sw.set_defaults(func=_cmd_sweep)

    rc = sub.add_parser("random-compare", help="Haar pairs vs the concatenated-GHZ block")
    rc.add_argument("--samples", type=int, required=True)
    add_common(rc, with_n=False)
    rc.set_defaults(func=_cmd_random_compare)

    sy = sub.add_parser("synthesize", help="emit the preparation circuit")
    sy.add_argument("--N", type=int, required=True)
    sy.add_argument("--m", type=int, required=True)
    sy.add_argument("--out", default=None)
    sy.add_argument("--verify", action="store_true")
    sy.add_argument("--json", action="store_true")
    sy.add_argument("--seed", type=int, default=0)
    sy.set_defaults(func=_cmd_synthesize)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "quantity", None) != "threshold" and hasattr(args, "N"):
            if args.N is None and args.func is _cmd_eval:
                raise _UsageError("--N is required for this quantity")
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 1
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource error: {exc}\n")
        return 2
    except ConsistencyError as exc:
        sys.stderr.write(f"consistency error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
