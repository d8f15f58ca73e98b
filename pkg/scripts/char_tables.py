"""Character tables, Frobenius-Schur indicators and real irreducibles of the
finite subgroups that appear in the shift computations."""
import argparse
import time

from swdual.cli import _fmt_value
from swdual.groups import make_g12, make_g24, make_quaternion
from swdual.reps import character_table, real_ring
from swdual.shift import build_case


def show(G):
    t0 = time.perf_counter()
    t = character_table(G)
    dt = time.perf_counter() - t0
    ring = real_ring(G)
    print(f"== {G.label}  order {G.order}, {len(G.classes)} classes, {dt:.2f}s")
    for chi in t.irreducibles:
        fs = t.fs_indicator(chi)
        print(f"  deg {chi.degree:>2}  FS {fs:+d}  " +
              " ".join(_fmt_value(v) for v in chi.values))
    print("  real irreducibles:", ", ".join(f"{R.dim}:{R.kind}" for R in ring.irreps))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--honda", type=int, nargs="*", default=[3, 5])
    a = ap.parse_args()
    for G in (make_quaternion(), make_g12(), make_g24()):
        show(G)
    for p in a.honda:
        show(build_case("honda", p).G)


if __name__ == "__main__":
    main()
