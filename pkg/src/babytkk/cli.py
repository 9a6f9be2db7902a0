"""Command-line front end.

    babytkk verify <suite> [--bound k] [--degree N] [--band W] [--samples n] [--seed s] [--out path]
    babytkk bracket <algebra> <lhs> <rhs>
    babytkk map <phi|phi-inv|ig|ig-inv|sigma> <element>
    babytkk module --lambda 1,0 --mu 0,1 --c 1,2+I [--degree N] [--bands 1,2,3]

Exit codes: 0 pass, 1 counterexample, 2 inconclusive, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from babytkk.evaluate import MAPS, apply_map, eval_bracket
from babytkk.modules import hw
from babytkk.parsing import ALGEBRAS, DomainError, ParseError
from babytkk.scalars import parse_scalar
from babytkk.suites import (
    EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE, SCHEMA, SUITES, SuiteSpec, UsageError, run_suite,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="babytkk", description="Exact computations in the baby TKK algebra and its conformal realization.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--bound", type=int)
    v.add_argument("--degree", type=int)
    v.add_argument("--band", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", help="write the report here instead of stdout")

    b = sub.add_parser("bracket", help="bracket two elements")
    b.add_argument("algebra", choices=list(ALGEBRAS))
    b.add_argument("lhs")
    b.add_argument("rhs")

    m = sub.add_parser("map", help="apply phi, phi-inv, ig, ig-inv or sigma")
    m.add_argument("name", choices=sorted(MAPS))
    m.add_argument("element")

    mod = sub.add_parser("module", help="Gram-rank table of a highest-weight window")
    mod.add_argument("--lambda", dest="lam", required=True)
    mod.add_argument("--mu", required=True)
    mod.add_argument("--c", required=True)
    mod.add_argument("--degree", type=int, default=2)
    mod.add_argument("--bands", default="1,2")
    return p


def _ints(text: str) -> list:
    return [int(x) for x in text.split(",") if x.strip()]


def _cmd_verify(args) -> int:
    spec = SuiteSpec.make(args.suite, args.bound, args.degree, args.band, args.samples, args.seed)
    t0 = time.perf_counter()
    report = run_suite(spec)
    text = report.text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{spec.suite}: {report.status} ({report.passed}/{report.attempted}) in {time.perf_counter() - t0:.2f}s",
          file=sys.stderr)
    return report.exit_code


def _cmd_module(args) -> int:
    w = hw.WeightData.make(_ints(args.lam), _ints(args.mu), [parse_scalar(x) for x in args.c.split(",")])
    ok, diags = hw.validate_triple(w)
    if not ok:
        raise UsageError("invalid triple: " + "; ".join(diags))
    bands = _ints(args.bands)
    rows = hw.gram_rank_stabilized(w, args.degree, bands)
    print(json.dumps({"type": "header", "schema": SCHEMA, "table": "gram-rank", "level": w.level,
                      "lambda": list(w.lam), "mu": list(w.mu), "c": [str(x) for x in w.c],
                      "pbw_order": "principal degree, kind (x-, x+, h, C1, C2), m, n"}, sort_keys=True))
    for r in rows:
        print(json.dumps({"type": "row", **r}, sort_keys=True))
    last = [r for r in rows if r["band"] == bands[-1]]
    stable = len(bands) > 1 and all(r["stabilized"] for r in last)
    print(json.dumps({"type": "summary", "stabilized": stable}, sort_keys=True))
    return EXIT_PASS if stable else EXIT_INCONCLUSIVE


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "bracket":
            print(eval_bracket(args.algebra, args.lhs, args.rhs))
            return EXIT_PASS
        if args.command == "map":
            print(apply_map(args.name, args.element))
            return EXIT_PASS
        return _cmd_module(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
