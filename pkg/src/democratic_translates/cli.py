"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 malformed input,
3 resource bound exceeded, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import autocorr, democracy, formats, groups, hull, oracles

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_BOUND, EXIT_IO = 0, 1, 2, 3, 4
CACHE_ENV = "DEMOCRATIC_TRANSLATES_CACHE"
CHECK_SUITES = ("parseval", "pi", "qbinomial", "subgroups", "cosets", "perp", "folner", "counterexample")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _cache_dir(args) -> Path | None:
    d = args.cache_dir or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def _cache_path(cache_dir: Path, gspec: formats.GroupSpec) -> Path:
    name = gspec.canonical().replace(",", "_").replace("^", "p").replace(":", "-").replace("@", "_")
    return cache_dir / f"classes-{name}.jsonl"


def load_classes(gspec: formats.GroupSpec, cache_dir: Path | None) -> autocorr.ClassEnumeration:
    """Class enumeration, served from and written to the cache when one is configured."""
    if cache_dir is not None:
        path = _cache_path(cache_dir, gspec)
        cached = formats.read_class_cache(path, gspec)
        if cached is not None:
            return cached
    classes = autocorr.enumerate_classes(gspec.group)
    if cache_dir is not None:
        formats.write_class_cache(path, gspec, classes)
    return classes


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    gspec = formats.parse_group_spec(args.group)
    classes = autocorr.enumerate_classes(gspec.group)
    cache_dir = _cache_dir(args)
    if args.out is None and cache_dir is None:
        sys.stdout.write(formats.class_cache_text(gspec, classes))
        return EXIT_OK
    out = Path(args.out) if args.out else _cache_path(cache_dir, gspec)
    formats.write_class_cache(out, gspec, classes)
    print(f"{gspec.canonical()}: total={classes.total} distinct={classes.distinct} -> {out}", file=sys.stderr)
    return EXIT_OK


def cmd_hull(args) -> int:
    gspec = formats.parse_group_spec(args.group)
    classes = load_classes(gspec, _cache_dir(args))
    cloud = hull.PointCloud.from_vectors([v for _, v in classes], [g for g, _ in classes])
    report = hull.classify_vertices(cloud, workers=args.workers)
    data = formats.hull_report_json(report)
    data["group"] = gspec.canonical()
    data["labels"] = [list(g.elements) for g, _ in classes]
    _emit(formats.dumps(data), args.out)
    return EXIT_OK


def cmd_table3(args) -> int:
    cache_dir = _cache_dir(args)
    rows = hull.table3(
        args.max_n, workers=args.workers,
        classes_for=lambda n: load_classes(formats.parse_group_spec(f"2^{n}"), cache_dir),
    )
    _emit(formats.table3_csv(rows), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    gspec, p = formats.parse_periodization(args.p)
    if args.group and formats.parse_group_spec(args.group).group != gspec.group:
        raise formats.SpecError("--group does not match the periodization spec")
    classes = None
    if args.family != "subgroups":
        classes = load_classes(gspec, _cache_dir(args))
    subgroups = gspec.chain if gspec.prufer is not None and args.family == "subgroups" else None
    report = democracy.inf_over_family(gspec.group, p, args.family, subgroups=subgroups,
                                       workers=args.workers, classes=classes)
    _emit(formats.dumps(formats.democracy_report_json(report, gspec)), args.out)
    return EXIT_OK


def cmd_counterexample(args) -> int:
    if not 1 <= args.n <= 6:
        raise groups.ResourceBoundError("counterexample n must lie in 1..6")
    report = democracy.build_counterexample(args.n)
    _emit(formats.dumps(formats.counterexample_json(report)), args.out)
    return EXIT_OK if report.within_bound else EXIT_CHECK


# -- oracle suites -------------------------------------------------------------


def _check_parseval(rng: random.Random) -> bool:
    ok = True
    for orders in ([2, 2, 2], [8], [2, 4], [6]):
        g = groups.make_group(orders)
        for _ in range(25):
            vals = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in g]
            vals[rng.randrange(len(vals))] = Fraction(rng.randint(1, 5))
            psi = oracles.PsiTable(g, vals)
            gamma = autocorr.SubsetGamma(g, rng.sample(range(g.cardinality), rng.randint(1, g.cardinality)))
            ok &= oracles.parseval_check(psi, gamma).equal
    return ok


def _check_pi(_rng) -> bool:
    for n in range(1, oracles.PI_BRUTE_FORCE_MAX_N + 1):
        r = oracles.pi_ratio(n)
        if abs(r.subset_max - r.closed_form) > oracles.PI_RATIO_TOL:
            return False
    return abs(oracles.pi_ratio(100).ratio - 1 / math.pi) <= 1e-4


def _check_qbinomial(_rng) -> bool:
    sums = [oracles.qbinomial_row_sum(n, 2) for n in range(5)]
    return sums == [1, 2, 5, 16, 67] and oracles.qbinomial(2, 1, 3) == 4


def _check_subgroups(_rng) -> bool:
    ok = all(len(groups.enumerate_subgroups(groups.make_group([2] * n))) == oracles.qbinomial_row_sum(n, 2)
             for n in range(5))
    return ok and len(groups.enumerate_subgroups(groups.make_group([3, 3]))) == oracles.qbinomial_row_sum(2, 3)


def _check_cosets(_rng) -> bool:
    return all(oracles.coset_characterization_bruteforce(groups.make_group(o)) for o in ([2, 2, 2], [6], []))


def _check_perp(_rng) -> bool:
    for orders in ([2, 2, 2], [4], [6]):
        g = groups.make_group(orders)
        subs = groups.enumerate_subgroups(g)
        for elems in oracles.subsets(g):
            gamma = autocorr.SubsetGamma(g, elems)
            for m in subs:
                a = autocorr.integral_over_perp(gamma, m)
                b = autocorr.spectral_integral_over_perp(gamma, m)
                if (a != b) if isinstance(b, Fraction) else abs(float(a) - b) > autocorr.SPECTRUM_TOL:
                    return False
    return True


def _check_folner(rng: random.Random) -> bool:
    for g, chain in ((groups.make_group([2] * 4), None), groups.prufer_truncation(2, 4)):
        chain = chain or groups.exhausting_chain(g)
        for m in chain:
            f = autocorr.SubsetGamma(g, m.elements)
            if any(autocorr.folner_defect(f, k) != 0 for k in m):
                return False
        for _ in range(100):
            f = autocorr.SubsetGamma(g, rng.sample(range(g.cardinality), rng.randint(1, g.cardinality)))
            k = rng.randrange(g.cardinality)
            if autocorr.folner_defect(f, k) + autocorr.autocorr_vector(f)[k] != 1:
                return False
    return True


def _check_counterexample(_rng) -> bool:
    for n in range(2, 6):
        rep = democracy.build_counterexample(n)
        if any(rep.annulus_integrals[i] != Fraction(1, 2**i) for i in range(1, n)):
            return False
        if not rep.within_bound:
            return False
    return True


_SUITES = {
    "parseval": _check_parseval,
    "pi": _check_pi,
    "qbinomial": _check_qbinomial,
    "subgroups": _check_subgroups,
    "cosets": _check_cosets,
    "perp": _check_perp,
    "folner": _check_folner,
    "counterexample": _check_counterexample,
}


def cmd_check(args) -> int:
    names = CHECK_SUITES if args.suite == "all" else (args.suite,)
    rng = random.Random(args.seed)
    results = {name: "pass" if _SUITES[name](rng) else "fail" for name in names}
    print(json.dumps(results, indent=2, sort_keys=True))
    return EXIT_OK if all(v == "pass" for v in results.values()) else EXIT_CHECK


def cmd_pi_ratio(args) -> int:
    r = oracles.pi_ratio(args.n)
    print(f"{r.subset_max:.12g} {r.full_sum:.12g} {r.ratio:.12g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="democratic-translates", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, group=True):
        if group:
            p.add_argument("--group", required=True, help='group spec, e.g. "2^3", "2,4", "prufer:2@5"')
        p.add_argument("--out", help="output path (default: standard output)")
        p.add_argument("--cache-dir", help=f"enumeration cache directory (default: ${CACHE_ENV})")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("enumerate", help="write the distinct autocorrelation vectors as JSON Lines")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hull", help="classify extreme points with exact certificates")
    common(p)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("table3", help="subset, point and extreme-point counts for Z_2^n")
    common(p, group=False)
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("eval", help="infimum of the democracy functional over a family")
    common(p, group=False)
    p.add_argument("--group", help="optional group spec; must match the periodization")
    p.add_argument("--p", required=True, help='e.g. "table:2^2;v=1/1,0/1,0/1,0/1" or "chain:prufer:2@3;w=1,0,1;tail=0"')
    p.add_argument("--family", choices=democracy.FAMILIES, default="all")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("counterexample", help="Pruefer 2-group counterexample report")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("check", help="run oracle suites")
    p.add_argument("suite", choices=CHECK_SUITES + ("all",), nargs="?", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pi-ratio", help="subset maximum, full sum and their ratio")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_pi_ratio)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except groups.ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (formats.SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
