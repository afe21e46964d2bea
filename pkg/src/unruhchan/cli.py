"""Command-line front end: point reports, sweeps, optimization, figures.

Outputs are deterministic: rows are emitted r-major (then qR, then
alpha2), floats carry 12 significant digits in the value columns, and no
timestamps ever enter a data file.

Exit codes: 0 success, 2 usage, 3 truncation/numeric failure, 4 I/O.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .errors import NumericError, TruncationError, UnruhChanError, UsageError
from .measures import Receiver, conditional_entropy, holevo
from .optimize import optimal_curve
from .states import (
    Q_MIN,
    ChannelParams,
    RindlerParams,
    UnruhWeights,
    auto_cutoff,
    build_classical_ensemble,
    build_quantum_state,
    squeezing_parameter,
)
from .svgplot import line_plot

CSV_HEADER = "r,qR,alpha2,rail,measure,receiver,value,deficit,N"
OPT_CSV_HEADER = "r,alpha2_opt,qR_opt,value,measure,rail,evals"

DEFAULT_QR_GRID = (Q_MIN, 0.8, 0.9, 1.0)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"cannot parse float list {text!r}") from None


def _parse_rspec(text: str) -> list[float]:
    """Either a single value or an inclusive start:stop:step range."""
    if ":" not in text:
        try:
            return [float(text)]
        except ValueError:
            raise UsageError(f"cannot parse r value {text!r}") from None
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError("r range must be start:stop:step")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"cannot parse r range {text!r}") from None
    if step <= 0:
        raise UsageError("r range step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(max(count, 1))]


def _parse_nmax(text: str):
    if text == "auto":
        return "auto"
    try:
        n = int(text)
    except ValueError:
        raise UsageError("nmax must be 'auto' or an integer") from None
    if n < 2:
        raise UsageError("nmax must be >= 2")
    return n


def _check_qr(values) -> None:
    for q in values:
        if not (Q_MIN - 1e-9 <= q <= 1.0 + 1e-12):
            raise UsageError("qr must lie in [0.7071, 1]")


def _resolve_r(opts) -> list[float]:
    if opts.get("a") is not None:
        omega = opts.get("omega")
        if omega is None:
            raise UsageError("--a requires --omega")
        return [squeezing_parameter(opts["a"], omega, opts.get("c", 1.0))]
    if opts.get("r") is None:
        raise UsageError("either --r or --a/--omega must be given")
    return _parse_rspec(str(opts["r"]))


def evaluate_point(r, qr, alpha2, rail, channel, cutoff, tol):
    """All CSV rows for one (r, qR, alpha2) grid point."""
    n = auto_cutoff(r, tol, rail) if cutoff == "auto" else int(cutoff)
    rows = []
    if channel in ("classical", "both"):
        params = ChannelParams(
            RindlerParams(r), UnruhWeights(qr), alpha2, rail, "classical", n, tol
        )
        ensemble = build_classical_ensemble(params)
        for recv in (Receiver.ROB, Receiver.ANTIROB):
            chi = holevo(ensemble, recv) + 0.0  # +0.0 avoids printing -0
            rows.append(
                (r, qr, alpha2, rail, "holevo", recv.value, chi, ensemble.deficit, n)
            )
    if channel in ("quantum", "both"):
        params = ChannelParams(
            RindlerParams(r), UnruhWeights(qr), alpha2, rail, "quantum", n, tol
        )
        state, deficit, _ = build_quantum_state(params)
        for recv in (Receiver.ROB, Receiver.ANTIROB):
            cond = conditional_entropy(state, recv)
            rows.append((r, qr, alpha2, rail, "coherent", recv.value, -cond, deficit, n))
            rows.append((r, qr, alpha2, rail, "conditional", recv.value, cond, deficit, n))
    return rows


def _format_row(row) -> str:
    r, qr, alpha2, rail, measure, recv, value, deficit, n = row
    return (
        f"{r:.6g},{qr:.6g},{alpha2:.6g},{rail},{measure},{recv},"
        f"{value:.12g},{deficit:.12g},{n}"
    )


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc


class _IOFailure(Exception):
    pass


def _sweep_rows(opts):
    r_values = _resolve_r(opts)
    qr_values = opts["qr"]
    a2_values = opts["alpha2"]
    _check_qr(qr_values)
    points = [(r, qr, a2) for r in r_values for qr in qr_values for a2 in a2_values]

    def work(point):
        r, qr, a2 = point
        return evaluate_point(r, qr, a2, opts["rail"], opts["channel"], opts["nmax"], opts["tol"])

    jobs = int(opts.get("jobs") or 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(work, points))
    else:
        chunks = [work(p) for p in points]
    return [row for chunk in chunks for row in chunk]


def _rows_to_csv(rows) -> str:
    return "\n".join([CSV_HEADER] + [_format_row(row) for row in rows]) + "\n"


def _rows_to_svg(rows, title) -> str:
    series = {}
    for r, qr, alpha2, rail, measure, recv, value, _, _ in rows:
        key = (measure, recv, qr, alpha2)
        series.setdefault(key, ([], []))
        series[key][0].append(r)
        series[key][1].append(value)
    plot_series = [
        (f"{measure} {recv} qR={qr:.4g} a2={alpha2:.3g}", xs, ys)
        for (measure, recv, qr, alpha2), (xs, ys) in sorted(series.items())
    ]
    return line_plot(plot_series, title, "squeezing r", "bits")


def _emit(opts, rows, title) -> None:
    out = Path(opts["out"])
    fmt = opts["format"]
    if fmt in ("csv", "both"):
        _write_text(out, _rows_to_csv(rows))
    if fmt in ("svg", "both"):
        _write_text(out.with_suffix(".svg"), _rows_to_svg(rows, title))


def cmd_point(opts) -> int:
    r = _resolve_r(opts)[0]
    qr = opts["qr"][0]
    alpha2 = opts["alpha2"][0]
    _check_qr([qr])
    rows = evaluate_point(r, qr, alpha2, opts["rail"], "both", opts["nmax"], opts["tol"])
    by_key = {(m, recv): v for _, _, _, _, m, recv, v, _, _ in rows}
    deficit = max(row[7] for row in rows)
    n = rows[0][8]
    print(f"r            = {r:.6f}")
    print(f"qR           = {qr:.6f}")
    print(f"alpha2       = {alpha2:.6f}")
    print(f"rail         = {opts['rail']}")
    print(f"N            = {n}")
    print(f"deficit      = {deficit:.6g}")
    print(f"holevo_R     = {by_key[('holevo', 'rob')]:.6f}")
    print(f"holevo_Rbar  = {by_key[('holevo', 'antirob')]:.6f}")
    print(f"cohinfo_R    = {by_key[('coherent', 'rob')]:.6f}")
    print(f"cohinfo_Rbar = {by_key[('coherent', 'antirob')]:.6f}")
    print(f"cond_R       = {by_key[('conditional', 'rob')]:.6f}")
    print(f"cond_Rbar    = {by_key[('conditional', 'antirob')]:.6f}")
    return EXIT_OK


def cmd_sweep(opts) -> int:
    rows = _sweep_rows(opts)
    _emit(opts, rows, f"{opts['rail']}-rail sweep")
    return EXIT_OK


def _opt_rows_to_csv(results) -> str:
    lines = [OPT_CSV_HEADER]
    for res in results:
        lines.append(
            f"{res.r:.6g},{res.alpha2_opt:.12g},{res.qr_opt:.12g},{res.value:.12g},"
            f"{res.measure},{res.rail},{res.evals}"
        )
    return "\n".join(lines) + "\n"


def cmd_optimize(opts) -> int:
    r_values = _resolve_r(opts)
    receiver = Receiver(opts["receiver"])
    results = optimal_curve(
        opts["measure"], opts["rail"], r_values, receiver, cutoff=opts["nmax"], tol=opts["tol"]
    )
    out = Path(opts["out"])
    if opts["format"] in ("csv", "both"):
        _write_text(out, _opt_rows_to_csv(results))
    if opts["format"] in ("svg", "both"):
        xs = [res.r for res in results]
        series = [
            (f"optimal {opts['measure']} ({opts['rail']})", xs, [res.value for res in results]),
            ("alpha2_opt", xs, [res.alpha2_opt for res in results]),
            ("qR_opt", xs, [res.qr_opt for res in results]),
        ]
        _write_text(
            out.with_suffix(".svg"),
            line_plot(series, f"optimized {opts['measure']}", "squeezing r", "bits / parameter"),
        )
    return EXIT_OK


def cmd_figures(opts) -> int:
    outdir = Path(opts["out"])
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc
    r_values = _resolve_r(opts)
    qr_values = opts["qr"]
    _check_qr(qr_values)
    base = dict(opts)
    base["alpha2"] = [0.5]
    sweep_figs = [
        ("fig1", "single", "holevo", "Holevo information, single rail"),
        ("fig2", "dual", "holevo", "Holevo information, dual rail"),
        ("fig3", "single", "coherent", "Coherent information, single rail"),
        ("fig4", "dual", "coherent", "Coherent information, dual rail"),
    ]
    for name, rail, measure, title in sweep_figs:
        o = dict(base)
        o["rail"] = rail
        o["channel"] = "classical" if measure == "holevo" else "quantum"
        rows = [row for row in _sweep_rows(o) if row[4] == measure]
        _write_text(outdir / f"{name}.csv", _rows_to_csv(rows))
        _write_text(outdir / f"{name}.svg", _rows_to_svg(rows, title))
    # fig5/fig6: optimized Holevo and the optimal parameter curves
    curves = {
        rail: optimal_curve("holevo", rail, r_values, cutoff=opts["nmax"], tol=opts["tol"])
        for rail in ("single", "dual")
    }
    all_results = curves["single"] + curves["dual"]
    _write_text(outdir / "fig5.csv", _opt_rows_to_csv(all_results))
    _write_text(outdir / "fig6.csv", _opt_rows_to_csv(all_results))
    xs = [res.r for res in curves["single"]]
    _write_text(
        outdir / "fig5.svg",
        line_plot(
            [
                ("single rail", xs, [res.value for res in curves["single"]]),
                ("dual rail", xs, [res.value for res in curves["dual"]]),
            ],
            "Optimized Holevo information",
            "squeezing r",
            "bits",
        ),
    )
    _write_text(
        outdir / "fig6.svg",
        line_plot(
            [
                ("alpha2_opt single", xs, [res.alpha2_opt for res in curves["single"]]),
                ("qR_opt single", xs, [res.qr_opt for res in curves["single"]]),
                ("alpha2_opt dual", xs, [res.alpha2_opt for res in curves["dual"]]),
                ("qR_opt dual", xs, [res.qr_opt for res in curves["dual"]]),
            ],
            "Optimal parameters",
            "squeezing r",
            "parameter value",
        ),
    )
    return EXIT_OK


def _read_config(path) -> dict:
    """Flat `key = value` config file; '#' starts a comment."""
    conf = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"bad config line {line!r}")
        key, _, value = line.partition("=")
        conf[key.strip().replace("-", "_")] = value.strip()
    return conf


_COMMON_DEFAULTS = {
    "rail": "single",
    "channel": "both",
    "qr": "1",
    "alpha2": "0.5",
    "nmax": "auto",
    "tol": "1e-8",
    "jobs": "1",
    "format": "csv",
    "receiver": "rob",
    "measure": "holevo",
    "c": "1",
}

_CMD_DEFAULTS = {
    "point": {"r": "0"},
    "sweep": {"r": "0:2.5:0.25", "out": "sweep.csv"},
    "optimize": {"r": "0:2:0.2", "nmax": "64", "out": "optimize.csv"},
    "figures": {
        "r": "0:2.5:0.25",
        "nmax": "16",
        "out": "figures",
        "qr": f"{Q_MIN!r},0.8,0.9,1.0",
    },
}


def _merge_options(args) -> dict:
    """flags > config file > built-in defaults."""
    conf = _read_config(args.config) if args.config else {}
    defaults = dict(_COMMON_DEFAULTS)
    defaults.update(_CMD_DEFAULTS[args.command])
    merged = {}
    for key, default in defaults.items():
        flag = getattr(args, key, None)
        raw = flag if flag is not None else conf.get(key, default)
        merged[key] = raw
    for key in ("a", "omega"):
        flag = getattr(args, key, None)
        raw = flag if flag is not None else conf.get(key)
        merged[key] = float(raw) if raw is not None else None
    # typed conversions
    merged["qr"] = _parse_floats(str(merged["qr"]))
    merged["alpha2"] = _parse_floats(str(merged["alpha2"]))
    merged["nmax"] = _parse_nmax(str(merged["nmax"]))
    merged["tol"] = float(merged["tol"])
    merged["jobs"] = int(merged["jobs"])
    merged["c"] = float(merged["c"])
    for a2 in merged["alpha2"]:
        if not 0.0 <= a2 <= 1.0:
            raise UsageError("alpha2 must lie in [0, 1]")
    if merged["format"] not in ("csv", "svg", "both"):
        raise UsageError("format must be csv, svg or both")
    return merged


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruhchan",
        description="Classical and quantum information over Unruh-mode channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("point", "evaluate all measures at one parameter point"),
        ("sweep", "sweep a parameter grid to CSV/SVG"),
        ("optimize", "maximize a measure over (alpha2, qR) along an r-grid"),
        ("figures", "regenerate the six standard figures with backing CSVs"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--rail", choices=["single", "dual"])
        p.add_argument("--channel", choices=["classical", "quantum", "both"])
        p.add_argument("--r", help="value or start:stop:step")
        p.add_argument("--a", type=float, help="proper acceleration (alternative to --r)")
        p.add_argument("--omega", type=float, help="Rindler frequency, used with --a")
        p.add_argument("--c", type=float, help="speed of light (default 1)")
        p.add_argument("--qr", help="comma-separated qR values in [0.7071, 1]")
        p.add_argument("--alpha2", help="comma-separated |alpha|^2 values in [0, 1]")
        p.add_argument("--nmax", help="'auto' or a fixed per-mode cutoff")
        p.add_argument("--tol", type=float, help="truncation deficit tolerance")
        p.add_argument("--jobs", type=int, help="concurrent grid evaluations")
        p.add_argument("--out", help="output file (sweep/optimize) or directory (figures)")
        p.add_argument("--format", choices=["csv", "svg", "both"])
        p.add_argument("--config", help="flat key = value config file")
        if name == "optimize":
            p.add_argument("--measure", choices=["holevo", "coherent"])
            p.add_argument("--receiver", choices=["rob", "antirob"])
    return parser


_HANDLERS = {
    "point": cmd_point,
    "sweep": cmd_sweep,
    "optimize": cmd_optimize,
    "figures": cmd_figures,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _merge_options(args)
        return _HANDLERS[args.command](opts)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (TruncationError, NumericError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except _IOFailure as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO
    except UnruhChanError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
