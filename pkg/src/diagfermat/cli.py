"""Command-line entry point: ``diagfermat <command> [flags]``.

Exit status is 0 on success, 2 for usage or validation errors and 3 for
numerical failures (rounding budget exceeded, singular interpolation matrix).
"""

import argparse
import csv
import io
import json
import math
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import curve, moments, polyfit, scan
from .charsum import gauss_sums
from .errors import DiagFermatError, EmptyPairSet, RoundingBudgetExceeded, SingularMatrix
from .field import field_of_order, is_prime, make_field


@dataclass
class SweepConfig:
    p_min: int = 11
    p_max: int = 600
    ell_min: int = 3
    ell_max: int = 60
    k_max: int = 8
    pair_cap: int = 0
    seed: int = 0
    output_path: str = None


@dataclass
class ExponentFit:
    k: int
    alpha: float
    beta: float
    pair_count: int
    max_bound_ratio: float
    bound_holds: bool
    status: str


def sweep_pairs(config):
    if config.p_min > config.p_max or config.ell_min > config.ell_max:
        raise EmptyPairSet("empty parameter range")
    pairs = [(p, ell)
             for p in range(max(config.p_min, 3), config.p_max + 1) if is_prime(p)
             for ell in range(max(config.ell_min, 2), min(config.ell_max, p - 1) + 1)
             if is_prime(ell) and (p - 1) % ell == 0]
    if not pairs:
        raise EmptyPairSet("no admissible (p, ell) pairs in range")
    if config.pair_cap and len(pairs) > config.pair_cap:
        pairs = sorted(random.Random(config.seed).sample(pairs, config.pair_cap))
    return pairs


def _pair_moments(args):
    p, ell, k_max = args
    return moments.moments_brute(make_field(p), ell, range(1, k_max + 1))


def sweep_and_fit(config, workers=1):
    """Exact moments over a grid of (p, ell) and a log-linear exponent fit per k."""
    pairs = sweep_pairs(config)
    jobs = [(p, ell, config.k_max) for p, ell in pairs]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            values = list(pool.map(_pair_moments, jobs, chunksize=8))
    else:
        values = [_pair_moments(j) for j in jobs]
    fits = []
    for k in range(1, config.k_max + 1):
        z = [v[k] for v in values]
        ratios, holds = [], True
        for (p, ell), zk in zip(pairs, z):
            bound = moments.moment_bound(p, ell, k)
            holds &= moments.within_moment_bound(zk, p, ell, k)
            ratios.append(float(abs(zk) / bound) if bound else (0.0 if zk == 0 else math.inf))
        live = [(p, ell, zk) for (p, ell), zk in zip(pairs, z) if zk != 0]
        if len(live) < 3:
            fits.append(ExponentFit(k, math.nan, math.nan, len(pairs), max(ratios), holds, "degenerate"))
            continue
        X = np.array([[1.0, math.log(p), math.log(ell)] for p, ell, _ in live])
        y = np.array([math.log(abs(zk)) for _, _, zk in live])
        (_, alpha, beta), *_ = np.linalg.lstsq(X, y, rcond=None)
        fits.append(ExponentFit(k, float(alpha), float(beta), len(pairs), max(ratios), holds, "ok"))
    return fits


def sweep_rows(fits):
    """One CSV-ready row per k; exponents are blank when the fit was skipped."""
    rows = []
    for f in fits:
        rows.append({
            "k": f.k,
            "pair_count": f.pair_count,
            "alpha": "" if math.isnan(f.alpha) else f"{f.alpha:.6f}",
            "beta": "" if math.isnan(f.beta) else f"{f.beta:.6f}",
            "max_bound_ratio": repr(f.max_bound_ratio),
            "status": f.status,
        })
    return rows


def read_pairs_csv(path):
    """Read (p, ell) rows from a CSV with a header naming columns ``p`` and ``ell``."""
    with open(path, newline="") as fh:
        rows = csv.DictReader(fh)
        return [(int(r["p"]), int(r["ell"])) for r in rows]


def complex_json(z):
    return {"re": z.real, "im": z.imag}


# -- command handlers ---------------------------------------------------------


def _field(args):
    if args.q is not None:
        return field_of_order(args.q)
    if args.p is None:
        raise DiagFermatError("give --q or --p (and optionally --n)")
    return make_field(args.p, args.n or 1)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DiagFermatError("missing required flag(s): " + ", ".join("--" + m for m in missing))


def cmd_field_info(args):
    F = _field(args)
    out = {
        "p": F.p, "n": F.n, "q": F.q,
        "modulus": list(F.modulus),
        "generator": F.format(F.generator),
    }
    if args.ell is not None:
        out["ell"] = args.ell
        out["gauss_sums"] = [complex_json(complex(g)) for g in gauss_sums(F, args.ell)]
    return out, [out]


def cmd_count(args):
    _need(args, "ell", "A", "B")
    F = _field(args)
    A, B = F.parse(args.A), F.parse(args.B)
    C = F.parse(args.C) if args.C is not None else None
    cid = curve.CurveId(F, args.ell, A, B, C)
    methods = ["brute", "charsum"] if args.method == "both" else [args.method]
    rows = []
    for m in methods:
        r = curve.count(cid, m)
        rows.append({"q": F.q, "ell": args.ell, "A": args.A, "B": args.B,
                     "C": F.format(cid.C), "N": r.N, "a": r.a, "method": r.method})
    if len({row["N"] for row in rows}) > 1:
        raise RoundingBudgetExceeded("brute force and character sum disagree")
    return (rows[0] if len(rows) == 1 else rows), rows


def cmd_moment(args):
    _need(args, "ell", "k")
    F = _field(args)
    if args.method == "closed":
        rec = moments.moment_closed(F.q, args.ell, args.k)
    elif args.method == "geometric":
        rec = moments.moment_geometric(F, args.ell, args.k)
    else:
        rec = moments.moment_brute(F, args.ell, args.k)
    row = asdict(rec)
    return row, [row]


def cmd_fibre(args):
    _need(args, "ell", "k")
    F = _field(args)
    row = asdict(moments.fibre_count(F, args.ell, args.k, smooth_only=not args.all_reps))
    return row, [row]


def cmd_scan(args):
    _need(args, "ell")
    F = _field(args)
    report = scan.pointless_pairs(F, args.ell)
    d = report.to_dict()
    if report.witness:
        d["witness"] = [F.format(x) for x in report.witness]
    return d, [_scan_row(report)]


def _scan_row(r):
    F = make_field(r.p, r.n)
    witness = " ".join(F.format(x) for x in r.witness) if r.witness else ""
    return {"q": r.q, "p": r.p, "n": r.n, "ell": r.ell, "E_size": r.E_size, "witness": witness}


def cmd_qmax(args):
    _need(args, "ell")
    report = scan.q_max(args.ell, workers=args.workers)
    for r in report.reports:
        flag = " (extension field)" if r.extension else ""
        print(f"q={r.q}{flag}: {len(r.pointless_classes)} pointless class pairs", file=sys.stderr)
    print(f"Q({args.ell}) = {report.q_max}", file=sys.stderr)
    return report.to_dict(), [_scan_row(r) for r in report.reports]


def cmd_bound_check(args):
    _need(args, "ell")
    F = _field(args)
    k_max = args.k or 8
    values = moments.moments_brute(F, args.ell, range(1, k_max + 1))
    rows = []
    for k, z in values.items():
        bound = moments.moment_bound(F.q, args.ell, k)
        rows.append({"q": F.q, "ell": args.ell, "k": k, "moment": z,
                     "bound": float(bound), "holds": moments.within_moment_bound(z, F.q, args.ell, k)})
    exponents = [{"delta": d, "exponent": 2 - d / (2 + d)} for d in np.linspace(0, 2, 21).round(2).tolist()]
    report = scan.pointless_pairs(F, args.ell)
    out = {"moments": rows, "census_bound_holds": report.census_bound_holds(),
           "E_size": report.E_size, "improved_exponent": exponents}
    return out, rows


def cmd_sweep(args):
    cfg = SweepConfig(
        p_min=args.p_min, p_max=args.p_max, ell_min=args.ell_min, ell_max=args.ell_max,
        k_max=args.k or 8, pair_cap=args.pair_cap, seed=args.seed, output_path=args.out,
    )
    pairs = sweep_pairs(cfg)
    print(f"sweep: {len(pairs)} pairs, about {sum(p for p, _ in pairs)} field elements to walk",
          file=sys.stderr)
    fits = sweep_and_fit(cfg, workers=args.workers)
    payload = [{k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in asdict(f).items()}
               for f in fits]
    return payload, sweep_rows(fits)


def cmd_noclosed(args):
    k = args.k or 3
    if args.pairs:
        set1 = read_pairs_csv(args.pairs)
        set2 = read_pairs_csv(args.pairs2) if args.pairs2 else polyfit.select_pairs(k, exclude=set1)
    else:
        set1 = polyfit.select_pairs(k)
        set2 = polyfit.select_pairs(k, exclude=set1)
    verdict = polyfit.consistency_test(k, set1, set2)
    out = verdict.to_dict()
    out["pair_sets"] = [[list(p) for p in set1], [list(p) for p in set2]]
    row = {"k": k, "verdict": verdict.verdict, "max_abs_diff": verdict.max_abs_diff,
           "threshold": verdict.threshold}
    return out, [row]


COMMANDS = {
    "field-info": cmd_field_info,
    "count": cmd_count,
    "moment": cmd_moment,
    "fibre": cmd_fibre,
    "scan": cmd_scan,
    "qmax": cmd_qmax,
    "bound-check": cmd_bound_check,
    "sweep": cmd_sweep,
    "noclosed": cmd_noclosed,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--A")
    common.add_argument("--B")
    common.add_argument("--C")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="diagfermat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("field-info", parents=[common])
    p = sub.add_parser("count", parents=[common])
    p.add_argument("--method", choices=["brute", "charsum", "classes", "both"], default="both")
    p = sub.add_parser("moment", parents=[common])
    p.add_argument("--method", choices=["brute", "closed", "geometric"], default="brute")
    p = sub.add_parser("fibre", parents=[common])
    p.add_argument("--all-reps", action="store_true", help="include representatives with ABC = 0")
    sub.add_parser("scan", parents=[common])
    sub.add_parser("qmax", parents=[common])
    sub.add_parser("bound-check", parents=[common])
    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("--p-min", type=int, default=SweepConfig.p_min)
    p.add_argument("--p-max", type=int, default=SweepConfig.p_max)
    p.add_argument("--ell-min", type=int, default=SweepConfig.ell_min)
    p.add_argument("--ell-max", type=int, default=SweepConfig.ell_max)
    p.add_argument("--pair-cap", type=int, default=0)
    p = sub.add_parser("noclosed", parents=[common])
    p.add_argument("--pairs", help="CSV file (columns p, ell) for the first pair set")
    p.add_argument("--pairs2", help="CSV file for the second pair set")
    return parser


def _render(payload, rows, fmt):
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def run_command(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, rows = COMMANDS[args.command](args)
    except (RoundingBudgetExceeded, SingularMatrix) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (DiagFermatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _render(payload, rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run_command())
