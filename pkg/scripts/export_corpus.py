#!/usr/bin/env python3
"""Write the corpus algebras as .alg files under algebras/."""

import pathlib

from ujla import corpus
from ujla.fileformat import dumps_algebra

EXPORTS = {
    "dual.alg": corpus.dual_numbers(),
    "trunc-poly-3.alg": corpus.truncated_polynomials(),
    "upper-tri-2x2.alg": corpus.upper_triangular_2x2(),
    "mat-2x2.alg": corpus.matrix_algebra_2x2(),
    "heisenberg.alg": corpus.heisenberg(),
    "sl2.alg": corpus.sl2(),
    "cross-product.alg": corpus.cross_product(),
    "jordan-mat-2x2.alg": corpus.jordan_matrix_2x2(),
}


def main() -> None:
    out = pathlib.Path(__file__).resolve().parent.parent / "algebras"
    out.mkdir(exist_ok=True)
    for name, alg in EXPORTS.items():
        (out / name).write_text(dumps_algebra(alg))
        print(f"wrote algebras/{name}")


if __name__ == "__main__":
    main()
