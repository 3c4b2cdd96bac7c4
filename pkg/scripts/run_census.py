"""Standard-monomial census of the rank-3 quotient for a range of g.

    python3 scripts/run_census.py --g-max 4 --window 4
"""

import argparse

from u3algebra.spectrum import simple_type_census


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--g-max", type=int, default=4)
    ap.add_argument("--window", type=int, default=4)
    args = ap.parse_args()
    print(f"{'g':>3} {'count':>6} {'(2g-1)^2':>9} {'windows':>12} {'ms':>7}")
    for g in range(1, args.g_max + 1):
        r = simple_type_census(g, args.window)
        print(f"{g:>3} {r.standard_monomial_count!s:>6} {r.expected:>9} {str(r.windows_tried):>12} {r.elapsed_ms:>7}  {r.message}")


if __name__ == "__main__":
    main()
