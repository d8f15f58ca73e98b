"""swdual command line: ``shift``, ``verify`` and ``dump``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invariant breach.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import asdict

from .suites import SEED, SUITES, Config, run_suite


class UsageError(Exception):
    pass


# -- JSON plumbing ------------------------------------------------------------------------

def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return repr(v)


def _trail(steps) -> list[dict]:
    return [{"step": s.step, "provenance": s.provenance, "detail": s.detail,
             "value": _jsonable(s.value)} for s in steps]


def _provenance(results) -> list[dict]:
    c = Counter(s["provenance"] for r in results for s in r.get("trail", []))
    return [{"tag": k, "count": c[k]} for k in sorted(c)]


def make_report(command: str, params: dict, results: list[dict], passed: bool,
                elapsed_ms: int) -> dict:
    return {
        "command": command,
        "params": _jsonable(params),
        "results": results,
        "provenance": _provenance(results),
        "timing_ms": elapsed_ms,
        "pass": passed,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True)


# -- shift ----------------------------------------------------------------------------------

def cmd_shift(args, cfg: Config):
    from .shift import central_case_shift, exotic_picard_shift, sw_shift
    if args.case in ("p3n2", "p2n2"):
        r = sw_shift(args.case, precision=cfg.precision)
    elif args.case == "honda":
        if args.p is None:
            raise UsageError("--case honda needs --p")
        r = sw_shift("honda", args.p, precision=cfg.precision)
    elif args.case == "central":
        if args.n is None:
            raise UsageError("--case central needs --n")
        r = central_case_shift(args.n)
    elif args.case == "exotic":
        if args.p is None:
            raise UsageError("--case exotic needs --p")
        r = exotic_picard_shift(args.p)
    else:
        raise UsageError(f"unknown case {args.case!r}")
    res = {"name": "shift", "value": r.shift, "signed": r.signed, "trail": _trail(r.trail)}
    if r.period is not None:
        res["modulus"] = r.period
    text = [" ".join([f"case {r.case}"] + [f"{k}={v}" for k, v in r.params.items()]),
            f"shift {r.signed}" + (f" = {r.shift} mod {r.period}" if r.period else "")]
    text += [f"  [{s.provenance}] {s.step}" + (f": {s.value}" if s.value is not None else "")
             for s in r.trail]
    return [res], True, "\n".join(text)


# -- verify ---------------------------------------------------------------------------------

def cmd_verify(args, cfg: Config):
    checks = run_suite(args.suite, cfg)
    results = [{"name": c.name, "value": _jsonable(c.value), "pass": c.passed, "trail": []}
               for c in checks]
    ok = all(c.passed for c in checks)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.value if c.value is not None else ''}"
             .rstrip() for c in checks]
    if not ok:
        first = next(c for c in checks if not c.passed)
        results.append({"name": "first_counterexample", "value": _jsonable(asdict(first)),
                        "trail": []})
    return results, ok, "\n".join(lines)


# -- dump -----------------------------------------------------------------------------------

def _group(tag: str | None, p: int | None):
    from .groups import direct_product, make_cyclic, make_g12, make_g24, make_quaternion
    if tag is None:
        raise UsageError("--group is required")
    t = tag.lower()
    fixed = {"q8": make_quaternion, "g12": make_g12, "g24": make_g24}
    if t in fixed:
        return fixed[t]()
    if t == "c3xc3":
        return direct_product(make_cyclic(3), make_cyclic(3))
    if t.startswith("c") and t[1:].isdigit():
        return make_cyclic(int(t[1:]))
    if t == "honda":
        from .shift import build_case
        if p is None:
            raise UsageError("--group honda needs --p")
        return build_case("honda", p).G
    raise UsageError(f"unknown group {tag!r}")


def _fmt_value(v) -> str:
    if v.is_rational():
        return str(v.to_int())
    terms = []
    for i, a in enumerate(v.reduced()):
        if not a:
            continue
        mono = "1" if i == 0 else (f"z{v.N}" if i == 1 else f"z{v.N}^{i}")
        if i == 0:
            terms.append(str(a))
        elif a == 1:
            terms.append(mono)
        elif a == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{a}*{mono}")
    return "+".join(terms).replace("+-", "-")


def _rep(case, tag: str):
    ring = case.ring
    if tag == "regular":
        return ring.regular()
    if tag == "V":
        return case.V
    if tag == "trivial":
        return ring.trivial()
    try:
        return ring.basis(tag)
    except (KeyError, IndexError, ValueError):
        raise UsageError(f"unknown representation {tag!r}") from None


def cmd_dump(args, cfg: Config):
    if args.what == "chartable":
        from .reps import character_table
        G = _group(args.group, args.p)
        t = character_table(G)
        cols = [f"{G.names[C.rep]}({C.size})" for C in G.classes]
        rows = [[_fmt_value(v) for v in chi.values] for chi in t.irreducibles]
        res = [{"name": "classes", "value": cols, "trail": []},
               {"name": "chartable", "value": rows, "trail": []}]
        w = max(len(s) for s in cols + [x for r in rows for x in r])
        text = "\n".join(" ".join(s.rjust(w) for s in r) for r in [cols] + rows)
        return res, True, text
    if args.what == "cohdims":
        from .cohomology import bar_cohomology
        G = _group(args.group, args.p)
        if args.p is None:
            raise UsageError("--what cohdims needs --p")
        d = bar_cohomology(G, args.p, args.maxdeg).dims()
        return ([{"name": "dims", "value": list(d), "modulus": args.p, "trail": []}], True,
                ",".join(map(str, d)))
    if args.what == "psi":
        from .shift import build_case, psi
        if args.case not in ("p3n2", "p2n2", "honda"):
            raise UsageError("--what psi needs --case p3n2|p2n2|honda")
        if args.case == "honda" and args.p is None:
            raise UsageError("--case honda needs --p")
        C = build_case(args.case, args.p if args.case == "honda" else None, cfg.precision)
        v = psi(C, _rep(C, args.rep))
        return ([{"name": f"psi({args.rep})", "value": list(v.as_tuple()),
                  "modulus": v.modulus, "trail": _trail(C.setup)}], True, str(v.as_tuple()))
    raise UsageError(f"unknown dump target {args.what!r}")


# -- entry point ----------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="swdual", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="also write the JSON report here")
    common.add_argument("--precision", type=int, default=Config.precision)
    common.add_argument("--max-degree", type=int, default=Config.max_degree)
    common.add_argument("--no-timing", action="store_true",
                        help="report timing_ms as 0 (bit-identical reports)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("shift", parents=[common])
    s.add_argument("--case", required=True,
                   choices=("p3n2", "p2n2", "honda", "central", "exotic"))
    s.add_argument("--p", type=int)
    s.add_argument("--n", type=int)
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--suite", default="all", choices=("all",) + tuple(sorted(SUITES)))
    d = sub.add_parser("dump", parents=[common])
    d.add_argument("--what", required=True, choices=("chartable", "cohdims", "psi"))
    d.add_argument("--group")
    d.add_argument("--case")
    d.add_argument("--p", type=int)
    d.add_argument("--maxdeg", type=int, default=None)
    d.add_argument("--rep", default="regular")
    return ap


COMMANDS = {"shift": cmd_shift, "verify": cmd_verify, "dump": cmd_dump}


def main(argv=None) -> int:
    from .cohomology import TooLarge as CohTooLarge
    from .morava import TooLarge as MorTooLarge
    from .shift import InvariantBreach
    args = build_parser().parse_args(argv)
    cfg = Config(precision=args.precision, max_degree=args.max_degree)
    if getattr(args, "maxdeg", "unset") is None:
        args.maxdeg = cfg.max_degree
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "out", "no_timing") and v is not None}
    params["seed"] = SEED
    t0 = time.perf_counter()
    try:
        results, ok, text = COMMANDS[args.command](args, cfg)
    except (UsageError, CohTooLarge, MorTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantBreach, AssertionError) as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 3
    ms = 0 if args.no_timing else int(round(1000 * (time.perf_counter() - t0)))
    report = make_report(args.command, params, results, ok, ms)
    payload = dumps(report)
    print(payload if args.format == "json" else text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
