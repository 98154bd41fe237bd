"""Print dim V(L1 - L2)_mu on a square of root coordinates, for a few symmetric a.

    python scripts/multiplicity_table.py --a 3 4 5 --n 10
"""
import argparse
import time

from rank2crystal.multiplicity import SymmetricConfig, multiplicity_at


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--a", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args()
    for a in args.a:
        cfg = SymmetricConfig(a)
        t = time.perf_counter()
        rows = [[multiplicity_at(cfg, n1, n2) for n2 in range(args.n + 1)]
                for n1 in range(args.n + 1)]
        width = max(len(str(v)) for r in rows for v in r) + 1
        print(f"a = {a}  (rows n1, columns n2; {time.perf_counter() - t:.2f}s)")
        print(" " * 4 + "".join(f"{n2:>{width}}" for n2 in range(args.n + 1)))
        for n1, r in enumerate(rows):
            print(f"{n1:>3} " + "".join(f"{v:>{width}}" for v in r))
        diag = [rows[n][n] for n in range(args.n + 1)]
        print("diagonal:", diag, "\n")


if __name__ == "__main__":
    main()
