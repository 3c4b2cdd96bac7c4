"""Compare the expanded top coefficient d_{g-1,0} with the stated (2/3)^{g-1}."""

import argparse

from u3algebra.invariants import elliptic_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g-max", type=int, default=6)
    args = ap.parse_args()
    print(f"{'g':>3} {'wf':>3} {'expanded':>12} {'stated':>12} agree  methods")
    for g in range(1, args.g_max + 1):
        for wf in range(3):
            r = elliptic_report(g, wf)
            print(f"{g:>3} {wf:>3} {r['d_top_expanded']!s:>12} {r['d_top_stated']!s:>12} "
                  f"{r['d_top_agree']!s:>5}  {r['methods_agree']}")


if __name__ == "__main__":
    main()
