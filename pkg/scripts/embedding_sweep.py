"""Run every verification suite over a grid of Cartan data and shapes.

    python scripts/embedding_sweep.py --radius 6
"""
import argparse
import itertools
import time

from rank2crystal.algebra import CartanData, Weight, WeightError, classify_weight
from rank2crystal.verify import full_verification


def shapes(max_a, max_k):
    for a1, a2 in itertools.product(range(2, max_a + 1), repeat=2):
        if a1 * a2 <= 4:
            continue
        for k1, k2 in itertools.product(range(1, max_k + 1), repeat=2):
            try:
                yield classify_weight(CartanData(a1, a2), Weight(k1, -k2))
            except WeightError:
                pass


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=5)
    ap.add_argument("--max-a", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()
    bad = 0
    for shape in shapes(args.max_a, args.max_k):
        t = time.perf_counter()
        reports = full_verification(shape, args.radius)
        ok = all(r.ok for r in reports)
        bad += not ok
        checks = sum(len(r.entries) for r in reports)
        print(f"{'ok  ' if ok else 'FAIL'} {shape}: {checks} checks, {time.perf_counter() - t:.2f}s")
        for r in reports:
            if not r.ok:
                print("     ", r.name, r.first_failure())
    print(f"{bad} failing configurations")


if __name__ == "__main__":
    main()
