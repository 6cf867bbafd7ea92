#!/usr/bin/env python3
"""First negative coefficient of 1/sum (-1)^i h_i z^i for a list of h-vectors."""

import argparse

from flagcm.series import koszul_obstruction, poincare_coeffs

DEFAULT = ["1,4,5,1", "1,3,3", "1,3,1", "1,5,5", "1,4,4", "1,2,1"]


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("h", nargs="*", default=DEFAULT, help="comma separated h-vectors")
    p.add_argument("--horizon", type=int, default=200)
    p.add_argument("--show", type=int, default=10, help="coefficients to print")
    args = p.parse_args()

    for text in args.h:
        h = tuple(int(x) for x in text.split(","))
        hit = koszul_obstruction(h, args.horizon)
        head = poincare_coeffs(h, args.show)
        where = "none" if hit is None else f"{hit} ({poincare_coeffs(h, hit + 1)[-1]})"
        print(f"h={text:<10} first negative: {where:<12} series: {head}")


if __name__ == "__main__":
    main()
