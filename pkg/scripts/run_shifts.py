"""Tabulate every duality shift with its period and provenance counts.

    python3 scripts/run_shifts.py [--primes 3 5 7] [--json out.json]
"""
import argparse
import json
import time
from collections import Counter

from swdual.shift import central_case_shift, exotic_picard_shift, sw_shift


def rows(primes):
    yield "p3n2", sw_shift("p3n2")
    yield "p2n2", sw_shift("p2n2")
    for p in primes:
        yield f"honda p={p}", sw_shift("honda", p)
    for n in (1, 2, 3):
        yield f"central n={n}", central_case_shift(n)
    for p in primes:
        yield f"exotic p={p}", exotic_picard_shift(p)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--json")
    a = ap.parse_args()
    table = []
    print(f"{'case':<14}{'signed':>8}{'residue':>9}{'period':>8}  provenance                      secs")
    for name, make in ((n, r) for n, r in _timed(rows(a.primes))):
        r, dt = make
        prov = Counter(s.provenance for s in r.trail)
        tags = " ".join(f"{k}:{prov[k]}" for k in sorted(prov))
        print(f"{name:<14}{r.signed:>8}{r.shift:>9}{str(r.period or '-'):>8}  {tags:<32}{dt:.2f}")
        table.append({"case": name, "signed": r.signed, "shift": r.shift, "period": r.period,
                      "provenance": dict(prov)})
    if a.json:
        with open(a.json, "w") as fh:
            json.dump(table, fh, indent=2, sort_keys=True)


def _timed(gen):
    while True:
        t0 = time.perf_counter()
        try:
            name, r = next(gen)
        except StopIteration:
            return
        yield name, (r, time.perf_counter() - t0)


if __name__ == "__main__":
    main()
