#!/usr/bin/env python3
"""Sweep all (alpha, beta, gamma) triples over F_p for the associative
Yang-Baxter family on a chosen algebra and tabulate braid status,
invertibility, and the parameter case.

The interesting observation: braid-with-invertibility coincides exactly
with membership in one of the three parameter cases.
"""

import argparse
import itertools
import warnings

from ujla import corpus
from ujla.fields import PrimeField
from ujla.yang_baxter import build_assoc_yb, check_braid, classify_params

ALGEBRAS = {
    "dual": corpus.dual_numbers,
    "upper-tri": corpus.upper_triangular_2x2,
    "mat2": corpus.matrix_algebra_2x2,
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--algebra", choices=sorted(ALGEBRAS), default="dual")
    parser.add_argument("--prime", type=int, default=5)
    parser.add_argument("--verbose", action="store_true", help="print every triple")
    args = parser.parse_args()

    field = PrimeField(args.prime)
    alg = ALGEBRAS[args.algebra](field)
    agree = disagree = 0
    for alpha, beta, gamma in itertools.product(range(args.prime), repeat=3):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            op = build_assoc_yb(alg, alpha, beta, gamma)
        report = check_braid(op)
        case = classify_params(field, alpha, beta, gamma)
        match = report.is_yang_baxter == (case is not None)
        agree += match
        disagree += not match
        if args.verbose or not match:
            print(f"({alpha},{beta},{gamma}): case={case or '-':>3} "
                  f"braid={'y' if report.braid_ok else 'n'} "
                  f"invertible={'y' if report.invertible else 'n'} "
                  f"{'' if match else '  <-- DISAGREES'}")
    total = args.prime ** 3
    print(f"{alg.name} over F_{args.prime}: {agree}/{total} triples match the "
          f"case classification" + (f", {disagree} disagree" if disagree else ""))


if __name__ == "__main__":
    main()
