"""Command-line entry point: ``detlab <subcommand> ...``."""

import argparse
import sys
import time

from .closed_forms import calibrate_mrr, rhs
from .ct_integral import ct_entry_representation_check, dyson_ct, selberg_like, v2_coefficient
from .determinants import det_bareiss, det_condensation, det_laplace
from .families import build, list_identities, lookup
from .guesser import guess_product_form, parse_sequence
from .scalars import render
from .verify import Config, load_config, verify, verify_all, write_report, summarize


def _params(text):
    """``a=1,b=2`` -> {'a': 1, 'b': 2}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        k, eq, v = item.partition("=")
        if not eq:
            raise argparse.ArgumentTypeError(f"bad parameter {item!r}, expected name=value")
        out[k.strip()] = int(v)
    return out


def _ranges(text):
    """``a=0..2,b=1`` -> {'a': (0, 2), 'b': (1, 1)}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        k, eq, v = item.partition("=")
        if not eq:
            raise argparse.ArgumentTypeError(f"bad range {item!r}")
        lo, _, hi = v.partition("..")
        out[k.strip()] = (int(lo), int(hi or lo))
    return out


def _n_range(text):
    if text is None:
        return None
    lo, _, hi = text.partition("..")
    return int(lo), int(hi or lo)


def cmd_list(args):
    for spec in list_identities():
        params = ",".join(f"{p}:{lo}..{hi}" for p, lo, hi in spec.params) or "-"
        print(f"{spec.id:5s} {spec.ring:12s} n={spec.n[0]}..{spec.n[1]:<2d} {params:28s} {spec.label}")
    print(f"{len(list_identities())} identities")
    return 0


def cmd_eval(args):
    spec = lookup(args.id)
    params = _params(args.params)
    if spec.entry.special:
        print(f"{spec.id} is a {spec.entry.special} check; use `verify {spec.id}`", file=sys.stderr)
        return 2
    M = build(spec.id, args.n, params)
    for row in M.rows:
        print("[" + ", ".join(render(x) for x in row) + "]")
    if args.engine == "laplace":
        d = det_laplace(M)
    elif args.engine == "condensation":
        d = det_condensation(spec.id, M.n, 0, 0, params)
    else:
        d = det_bareiss(M)
    print(f"det = {render(d)}")
    return 0


def cmd_rhs(args):
    print(render(rhs(args.id, args.n, _params(args.params), form=args.form)))
    return 0


def _emit(reports, out, timings):
    summary = summarize(reports)
    if out:
        write_report(out, reports, summary, timings)
    else:
        for r in reports:
            print(r.to_json(timings))
        print(summary.to_json())
    return summary


def cmd_verify(args):
    reports = verify(args.id, _n_range(args.n), _ranges(args.params), args.engine)
    summary = _emit(reports, args.out, args.timings)
    return 0 if summary.ok else 1


def cmd_verify_all(args):
    overrides = {}
    if args.config:
        with open(args.config) as fh:
            overrides = load_config(fh.read())
    cfg = Config(
        ids=tuple(args.ids.split(",")) if args.ids else None,
        n_max=args.n_max,
        overrides=overrides,
        rings=tuple(args.rings.split(",")) if args.rings else None,
        engine=args.engine,
        jobs=args.jobs,
        out=args.out,
        timings=args.timings,
    )
    reports, summary = verify_all(cfg)
    if not args.out:
        for r in reports:
            print(r.to_json(args.timings))
        print(summary.to_json())
    print(f"{summary.total} points, {summary.matches} match, {summary.mismatches} mismatches, "
          f"{summary.calibration_findings} calibration findings", file=sys.stderr)
    return 0 if summary.ok else 1


def cmd_ct(args):
    if args.kind == "dyson":
        print(dyson_ct(args.n, args.alpha))
    elif args.kind == "v2":
        print(v2_coefficient(args.n))
    else:
        rep = ct_entry_representation_check(args.i, args.j, args.weight)
        print(f"CT = {rep['ct']}  expected {rep['expected']}  {'ok' if rep['ok'] else 'MISMATCH'}")
        return 0 if rep["ok"] else 1
    return 0


def cmd_integral(args):
    print(render(selberg_like(args.n, args.alpha, args.beta)))
    return 0


def cmd_guess(args):
    text = open(args.file).read() if args.file and args.file != "-" else sys.stdin.read()
    seq = parse_sequence(text)
    result = guess_product_form(seq, max_degree=args.max_degree)
    if not result:
        print(f"no fit: {result.reason}")
        return 1
    print(result.describe())
    print(result.to_line())
    if args.extend:
        print("next: " + ", ".join(render(result(n)) for n in range(len(seq) + 1, len(seq) + 1 + args.extend)))
    return 0


def cmd_calibrate(args):
    verdict = calibrate_mrr(args.n_max, args.mu_max)
    print(verdict)
    for (n, mu), r in sorted(verdict.ratios.items()):
        print(f"  n={n} mu={mu} det/literal={render(r) if r is not None else 'singular'}")
    return 0


def cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'n':>4} {'bareiss_ms':>11} {'condensation_ms':>16} {'laplace_ms':>11}")
    for n in sizes:
        M = build(args.id, n, _params(args.params))
        t = time.perf_counter()
        d1 = det_bareiss(M)
        tb = (time.perf_counter() - t) * 1e3
        tc = tl = float("nan")
        if lookup(args.id).condense:
            t = time.perf_counter()
            d2 = det_condensation(args.id, n, 0, 0, _params(args.params))
            tc = (time.perf_counter() - t) * 1e3
            assert d1 == d2
        if n <= 8:
            t = time.perf_counter()
            assert det_laplace(M) == d1
            tl = (time.perf_counter() - t) * 1e3
        print(f"{n:>4} {tb:>11.2f} {tc:>16.2f} {tl:>11.2f}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="detlab", description="Exact determinant identity laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="registry census").set_defaults(func=cmd_list)

    e = sub.add_parser("eval", help="print a family matrix and its determinant")
    e.add_argument("id")
    e.add_argument("--n", type=int)
    e.add_argument("--params", default="")
    e.add_argument("--engine", choices=("bareiss", "laplace", "condensation"), default="bareiss")
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("rhs", help="evaluate a closed form")
    r.add_argument("id")
    r.add_argument("--n", type=int)
    r.add_argument("--params", default="")
    r.add_argument("--form", type=int, default=0)
    r.set_defaults(func=cmd_rhs)

    v = sub.add_parser("verify", help="verify one identity over its grid")
    v.add_argument("id")
    v.add_argument("--n", help="size range LO..HI")
    v.add_argument("--params", default="", help="ranges, e.g. a=0..2,b=1")
    v.add_argument("--engine", choices=("bareiss", "laplace", "condensation"), default="bareiss")
    v.add_argument("--out")
    v.add_argument("--timings", action="store_true")
    v.set_defaults(func=cmd_verify)

    va = sub.add_parser("verify-all", help="verify every identity; exit 1 on any mismatch")
    va.add_argument("--n-max", type=int)
    va.add_argument("--ids")
    va.add_argument("--rings", help="comma list of ring tags, e.g. q-poly,multivariate")
    va.add_argument("--config", help="grid override file in catalog syntax")
    va.add_argument("--engine", choices=("bareiss", "laplace", "condensation"), default="bareiss")
    va.add_argument("--jobs", type=int)
    va.add_argument("--out")
    va.add_argument("--timings", action="store_true")
    va.set_defaults(func=cmd_verify_all)

    c = sub.add_parser("ct", help="constant-term computations")
    c.add_argument("kind", choices=("dyson", "v2", "entry"))
    c.add_argument("--n", type=int, default=2)
    c.add_argument("--alpha", type=int, default=1)
    c.add_argument("--i", type=int, default=0)
    c.add_argument("--j", type=int, default=0)
    c.add_argument("--weight", type=int, default=1)
    c.set_defaults(func=cmd_ct)

    it = sub.add_parser("integral", help="Selberg-type moment integral")
    it.add_argument("--n", type=int, required=True)
    it.add_argument("--alpha", type=int, default=0)
    it.add_argument("--beta", type=int, default=1)
    it.set_defaults(func=cmd_integral)

    g = sub.add_parser("guess", help="guess a product formula from a sequence (file or stdin)")
    g.add_argument("file", nargs="?")
    g.add_argument("--max-degree", type=int, default=4)
    g.add_argument("--extend", type=int, default=0, help="print this many predicted terms")
    g.set_defaults(func=cmd_guess)

    cal = sub.add_parser("calibrate", help="probe the literal MRR product against determinants")
    cal.add_argument("--n-max", type=int, default=4)
    cal.add_argument("--mu-max", type=int, default=4)
    cal.set_defaults(func=cmd_calibrate)

    b = sub.add_parser("bench", help="timing table of determinant engines")
    b.add_argument("--id", default="I01")
    b.add_argument("--params", default="a=0,b=0")
    b.add_argument("--sizes", default="4,8,16,32,60")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
