"""``realchar`` command line.

Exit codes: 0 success, 1 a check failed (or a pinned oracle value changed under
--strict), 2 usage or descriptor error, 3 resource cap or unavailable group.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time

from ..catalog import DescriptorError, UnavailableError, canonical
from ..chartab import character_table
from ..perm import CapError, fmt_cycles
from ..structure import solvable_radical
from . import oracle_data
from .checks import CHECKS, UnknownCheck, run_check
from .context import Context
from .report import combine

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="realchar", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    info = sub.add_parser("info", help="order, k_R, k_Q, real orders, Sol(G), quotient")
    info.add_argument("descriptor")
    info.add_argument("--json", action="store_true", help="print JSON instead of text")

    cl = sub.add_parser("classes", help="conjugacy classes in canonical order")
    cl.add_argument("descriptor")
    cl.add_argument("--format", choices=["text", "json"], default="text")

    ct = sub.add_parser("chartab", help="exact character table")
    ct.add_argument("descriptor")
    ct.add_argument("--format", choices=["csv", "json"], default="csv")
    ct.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="run a named check, or all of them")
    v.add_argument("check", help="check id, 'all' or 'list'")
    v.add_argument("--strict", action="store_true",
                   help="recompute every pinned oracle value and stop on a mismatch")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--cache-dir", default=None,
                   help="cache location (default: $REALCHAR_CACHE_DIR or the user cache dir)")
    v.add_argument("--no-cache", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--regen-oracles", action="store_true",
                   help="rebuild the pinned oracle file from the brute-force oracles first")
    v.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    v.add_argument("--json", action="store_true", help="print JSON instead of the table")
    return p


def _info(args, out) -> int:
    ctx = Context()
    name = canonical(args.descriptor)
    G = ctx.group(name)
    C = ctx.classes(name)
    kr, E, kq = C.real_data()
    rep = solvable_radical(G)
    data = {
        "descriptor": name, "order": G.order, "degree": G.degree, "classes": len(C),
        "k_real": kr, "k_rational": kq, "real_orders": list(E), "c_group": C.is_c_group(),
        "sol_order": rep.sol_radical.order, "quotient": rep.quotient_name,
    }
    if args.json:
        print(json.dumps(data, indent=2), file=out)
    else:
        for k, v in data.items():
            print(f"{k:12} {v}", file=out)
    return EXIT_OK


def _classes(args, out) -> int:
    name = canonical(args.descriptor)
    C = Context().classes(name)
    if args.format == "json":
        print(json.dumps(C.to_dict()), file=out)
        return EXIT_OK
    real, rat = C.real, C.rational
    print(f"{'#':>4} {'order':>5} {'size':>8}  R Q  representative", file=out)
    for i in range(len(C)):
        r = "R" if real[i] else "."
        q = "Q" if rat[i] else "."
        print(f"{i:>4} {C.orders[i]:>5} {C.sizes[i]:>8}  {r} {q}  {fmt_cycles(C.reps[i])}",
              file=out)
    return EXIT_OK


def _chartab(args, out) -> int:
    name = canonical(args.descriptor)
    T = character_table(Context().group(name), seed=args.seed)
    C = T.classes
    if args.format == "json":
        d = T.to_dict()
        d.update(descriptor=name, class_orders=C.orders, class_sizes=C.sizes,
                 real=T.real, rational=T.rational,
                 table=[[str(x) for x in T.row(i)] for i in range(len(T))])
        print(json.dumps(d), file=out)
        return EXIT_OK
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["row", "degree", "real", "rational"] + [f"{o}_{k}" for k, o in
                                                        enumerate(C.orders)])
    real, rat = T.real, T.rational
    for i in range(len(T)):
        w.writerow([i, T.degrees[i], int(real[i]), int(rat[i])] + [str(x) for x in T.row(i)])
    return EXIT_OK


def _verify(args, out) -> int:
    if args.check == "list":
        for cid, c in CHECKS.items():
            print(f"{cid:16} {c.summary}", file=out)
        return EXIT_OK
    ids = list(CHECKS) if args.check == "all" else [args.check]
    for cid in ids:
        if cid not in CHECKS:
            raise UnknownCheck(cid)
    if args.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    if args.regen_oracles:
        t0 = time.perf_counter()
        oracle_data.regenerate(progress=lambda n: logging.info("oracle: %s", n))
        print(f"regenerated {oracle_data.ORACLE_FILE} in {time.perf_counter() - t0:.1f}s",
              file=sys.stderr)
    ctx = Context(cache_dir=args.cache_dir, seed=args.seed, strict=args.strict,
                  use_cache=not args.no_cache)
    reports = [run_check(cid, ctx, jobs=args.jobs) for cid in ids]
    doc = reports[0].to_dict() if len(reports) == 1 else combine(reports, args.check)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        for r in reports:
            print(r.table(), file=out)
            print(file=out)
        if len(reports) > 1:
            bad = [r.check for r in reports if not r.passed]
            print(f"all: {'PASS' if not bad else 'FAIL (' + ', '.join(bad) + ')'}", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {"info": _info, "classes": _classes, "chartab": _chartab, "verify": _verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.cmd](args, out)
    except DescriptorError as exc:
        print(f"realchar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownCheck as exc:
        print(f"realchar: unknown check {exc.args[0]!r}; known: {', '.join(CHECKS)}",
              file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"realchar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapError, UnavailableError) as exc:
        print(f"realchar: {exc}", file=sys.stderr)
        return EXIT_CAP
    except oracle_data.OracleMismatch as exc:
        print(f"realchar: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
