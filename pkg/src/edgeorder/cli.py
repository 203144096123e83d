"""Command line entry point: ``edgeorder <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import ceg, counting, limits, montecarlo, oracle
from .graph import Rng, ccs_ordering, sample_uniform_ordering


def _write(args, payload, csv_rows=None):
    """Send a JSON payload (or CSV rows when asked) to --out or stdout."""
    if isinstance(payload, montecarlo.MomentReport):
        text = montecarlo.render_csv(payload) if args.format == "csv" else montecarlo.render_json(payload)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if csv_rows is None:
            w.writerow(("key", "value"))
            csv_rows = [(k, json.dumps(v, sort_keys=True)) for k, v in sorted(payload.items())]
        w.writerows(csv_rows)
        text = buf.getvalue()
    else:
        text = montecarlo.render_json({"schema_version": montecarlo.SCHEMA_VERSION, **payload})
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise SystemExit(f"cannot write {args.out}: {exc}")
    else:
        sys.stdout.write(text)


def cmd_sample(args):
    cfg = montecarlo.SimConfig(args.n, args.samples, args.seed, args.experiment, args.M)
    _write(args, montecarlo.run_experiment(cfg))


def cmd_exact_dist(args):
    hist = oracle.exhaustive_distribution(args.n)
    payload = {"n": args.n, "histogram": {str(k): v for k, v in hist.items()},
               "mean": str(oracle.histogram_moment(hist, 1)),
               "second_moment": str(oracle.histogram_moment(hist, 2))}
    _write(args, payload, [("x", "orderings")] + sorted(hist.items()) if args.format == "csv" else None)


def cmd_oracle(args):
    m = oracle.exact_moment(args.n, args.moment, args.restriction, args.allow_n7)
    payload = m.record()
    if args.restriction:
        payload["restriction"] = args.restriction
    if args.tn:
        table = oracle.brute_force_Tn(args.n)
        payload["tn_table"] = oracle.tn_records(args.n, table)
        payload["tn_total_matches"] = oracle.tn_total(args.n, table) == oracle.exact_moment(args.n, 3).value
    _write(args, payload)


def cmd_limits(args):
    k = args.kmax
    payload = {
        "k_max": k,
        "window": limits.PeriodicMeasureSpec("lattice").window,
        "sum_good_limits": {
            "none": limits.sum_good_limits((), k),
            "k_AC=0": limits.sum_good_limits(("AC",), k),
            "k_AB=k_AC=0": limits.sum_good_limits(("AB", "AC"), k),
        },
        "targets": {"e^3": math.exp(3), "1": 1.0, "e^-3": math.exp(-3), "e^-2": math.exp(-2),
                    "e^-6": math.exp(-6)},
        "lognormal_moments": {str(j): limits.lognormal_moment(j) for j in range(-2, 5)},
        "kaplansky_ratio_20": limits.kaplansky_ratio(20),
    }
    _write(args, payload)


def cmd_kaplansky(args):
    c = limits.kaplansky_count(args.n)
    _write(args, {"n": args.n, "count": c, "ratio": limits.kaplansky_ratio(args.n),
                  "limit": math.exp(-2)})


def cmd_sizebias_check(args):
    hx, hy = oracle.exhaustive_size_bias(args.n)
    total = math.factorial(args.n * (args.n - 1) // 2)
    rows = []
    ok = True
    for k in sorted(set(hx) | set(hy)):
        lhs = args.n * hy.get(k, 0)
        rhs = k * hx.get(k, 0)
        ok &= lhs == rhs
        rows.append({"k": k, "count_x": hx.get(k, 0), "count_y": hy.get(k, 0), "holds": lhs == rhs})
    _write(args, {"n": args.n, "orderings": total, "identity_holds": ok, "rows": rows})


def cmd_ceg(args):
    triples = montecarlo.harvest_triples(args.n, args.triples, args.seed)
    failures = []
    for i, (a, b, c, o) in enumerate(triples):
        rep = ceg.check_claims(a, b, c, o, args.eps)
        if not rep.ok:
            failures.append({"triple": i, "paths": [a, b, c], "failures": rep.failures})
    _write(args, {"n": args.n, "seed": args.seed, "eps": args.eps, "triples": len(triples),
                  "failed": len(failures), "failures": failures[:20]})


def cmd_altitude(args):
    if args.source == "ccs":
        d = int(math.log2(args.n))
        if 1 << d != args.n:
            raise SystemExit(f"--source ccs needs n a power of two, got {args.n}")
        orderings = [ccs_ordering(d)]
    else:
        orderings = [sample_uniform_ordering(args.n, Rng(args.seed, i)) for i in range(args.samples)]
    floor = math.ceil(math.sqrt(args.n - 0.75) - 0.5)
    rows = []
    for o in orderings:
        alt = counting.exact_altitude(o)
        rows.append({"altitude": alt.length, "trail": counting.longest_increasing_trail(o),
                     "witness": list(alt.witness)})
    _write(args, {"n": args.n, "source": args.source, "floor": floor,
                  "min_altitude": min(r["altitude"] for r in rows), "orderings": rows})


def cmd_disjoint(args):
    cfg = montecarlo.SimConfig(args.n, args.samples, args.seed, "disjoint-triple")
    _write(args, montecarlo.run_experiment(cfg))


def cmd_dist_compare(args):
    cfg = montecarlo.SimConfig(args.n, args.samples, args.seed, "dist-compare")
    _write(args, montecarlo.run_experiment(cfg))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="json")

    p = argparse.ArgumentParser(prog="edgeorder", description="Increasing Hamiltonian paths in random edge orderings.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("sample", cmd_sample, "Monte Carlo experiment (default: X, Y, Z samples)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--experiment", choices=montecarlo.EXPERIMENTS, default="xyz")
    sp.add_argument("--M", type=float)

    sp = add("exact-dist", cmd_exact_dist, "exact distribution of X by enumeration (n <= 5)")
    sp.add_argument("--n", type=int, required=True)

    sp = add("oracle", cmd_oracle, "exact moment E X^k")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--moment", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--restriction", choices=("c_disjoint_a", "bc_disjoint_a"))
    sp.add_argument("--allow-n7", action="store_true")
    sp.add_argument("--tn", action="store_true", help="also emit the brute-force T_n table (n <= 5)")

    sp = add("limits", cmd_limits, "closed-form constants")
    sp.add_argument("--kmax", type=int, default=30)

    sp = add("kaplansky", cmd_kaplansky, "succession-free permutation count")
    sp.add_argument("--n", type=int, required=True)

    sp = add("sizebias-check", cmd_sizebias_check, "exhaustive size-bias identity check")
    sp.add_argument("--n", type=int, choices=(3, 4), required=True)

    sp = add("ceg", cmd_ceg, "structural checks on harvested edge-ordered triples")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--triples", type=int, default=1000)
    sp.add_argument("--eps", type=float, default=0.1)

    sp = add("altitude", cmd_altitude, "exact altitude and longest trail")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--source", choices=("random", "ccs"), default="random")

    sp = add("disjoint", cmd_disjoint, "pairwise edge-disjoint triple frequency")
    sp.add_argument("--n", type=int, required=True)

    sp = add("dist-compare", cmd_dist_compare, "compare ln(X/n) with Normal(-1/2, 1)")
    sp.add_argument("--n", type=int, required=True)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, counting.CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
