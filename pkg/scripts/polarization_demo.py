#!/usr/bin/env python3
"""Round trip through polarization, the h-to-f construction and the matching quotient.

For each flag complex on at most N vertices prints its f-vector next to the
h-vector of its polarization and the f-vectors recovered on the way back.
"""

import argparse

from flagcm.constructions import h_to_f_complex, matching_quotient, polarize
from flagcm.enumeration import flag_complexes


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("-n", type=int, default=4)
    args = p.parse_args()

    mismatches = 0
    for n in range(1, args.n + 1):
        for g, gamma in flag_complexes(n):
            delta = polarize(gamma)
            back = h_to_f_complex(delta).f
            quot = matching_quotient(delta).f
            ok = delta.h == gamma.f == back == quot
            mismatches += not ok
            print(f"n={n} edges={g.edges()} f={gamma.f} h(pol)={delta.h} "
                  f"h2f={back} quotient={quot}{'' if ok else '  MISMATCH'}")
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
