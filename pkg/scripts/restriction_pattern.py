"""Which degrees of res: H^k(C_{p^j}; F_p) -> H^k(C_{p^(j-1)}; F_p) vanish.

The pattern is computed from explicit bar cocycles: odd degrees die, even
degrees survive (the Bockstein of the degree-1 class restricts to a generator).
"""
import argparse

from swdual.suites import restriction_cyclic


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--maxdeg", type=int, default=3)
    a = ap.parse_args()
    for p, j in ((2, 2), (3, 2), (2, 3)):
        z = restriction_cyclic(p, j, a.maxdeg)
        pat = " ".join(f"H{k}:{'0' if z[k] else 'nonzero'}" for k in sorted(z))
        print(f"C{p**(j-1)} < C{p**j}  {pat}")


if __name__ == "__main__":
    main()
