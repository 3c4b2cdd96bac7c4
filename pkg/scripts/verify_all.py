"""Run all ten acceptance checks and print one line per criterion."""

import sys

from u3algebra.acceptance import run_all


def main() -> int:
    results = run_all()
    for r in results:
        print(f"criterion {r['criterion']:>2}: {'PASS' if r['passed'] else 'FAIL'}  {r['elapsed_s']:>6.2f}s  {r['name']}")
    return 0 if all(r["passed"] for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
