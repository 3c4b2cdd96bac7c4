"""Scan the beta_2 membership checks over (g, k, m) and tabulate failures.

At N = 3, d' = 1 the b2^2 membership fails exactly when k = 0. Redoing the
substitution step by hand gives the residual constant 4k/N, which vanishes
only at k = 0; the b2 membership holds throughout.
"""

import argparse
from collections import Counter

from u3algebra.mumford import verify_beta_lemmas


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--g-max", type=int, default=3)
    args = ap.parse_args()
    fails = Counter()
    total = Counter()
    for g in range(1, args.g_max + 1):
        for k in range(g + 1):
            for m in range(0, 3 * g + 3):
                rep = verify_beta_lemmas(g, k, m)
                total[k] += 1
                for name, ok in rep.items():
                    if name != "all" and not ok:
                        fails[(k, name)] += 1
    for k in sorted(total):
        row = {n: fails[(k, n)] for n in ("b2sq", "b2sq_dual", "b2", "b2_dual")}
        print(f"k={k}: cases={total[k]} failures={row}")


if __name__ == "__main__":
    main()
