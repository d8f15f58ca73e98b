"""Run every verification suite and summarise pass counts and timings."""
import sys
import time

from swdual.suites import SUITES, Config, run_suite


def main() -> int:
    cfg = Config()
    failed = 0
    for name in sorted(SUITES):
        t0 = time.perf_counter()
        checks = run_suite(name, cfg)
        dt = time.perf_counter() - t0
        bad = [c for c in checks if not c.passed]
        failed += len(bad)
        print(f"{name:<12} {len(checks) - len(bad):3d}/{len(checks):<3d} {dt:6.2f}s")
        for c in bad:
            print(f"    FAIL {c.name}: {c.value}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
