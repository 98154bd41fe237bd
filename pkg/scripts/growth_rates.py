"""Compare p_{m+1}/p_m with gamma = (a + sqrt(a^2 - 4))/2 and F(p_m) with p_{m+1}.

    python scripts/growth_rates.py --a 3 --terms 25
"""
import argparse
import math
from fractions import Fraction

from rank2crystal.multiplicity import SymmetricConfig, big_f


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--a", type=int, default=3)
    ap.add_argument("--terms", type=int, default=20)
    args = ap.parse_args()
    cfg = SymmetricConfig(args.a)
    p = cfg.shape.p
    gamma = (args.a + math.sqrt(args.a ** 2 - 4)) / 2
    print(f"gamma ~ {gamma:.12f}")
    print("m\tp_m\tp_{m+1}/p_m - gamma\tF(p_m) == p_{m+1}")
    for m in range(1, args.terms + 1):
        ratio = Fraction(p(m + 1), p(m))
        print(f"{m}\t{p(m)}\t{float(ratio) - gamma:+.3e}\t{big_f(cfg, p(m)) == p(m + 1)}")


if __name__ == "__main__":
    main()
