"""A small corpus of named algebras used by the test suite and the docs.

Builders are parameterized by field where that makes sense; defaults are
over Q.  The standard corpus covers dimensions 1 through 4 with several
members in each of the three classical classes.
"""

from __future__ import annotations

from .algebra import Algebra, algebra_from_matrix_basis, algebra_from_products
from .fields import QQ, FieldSpec
from .transforms import symmetrize


def zero_algebra(field: FieldSpec = QQ, dim: int = 2) -> Algebra:
    return algebra_from_products(f"zero-{dim}", field, [f"e{i}" for i in range(dim)], {})


def ground_field_line(field: FieldSpec = QQ) -> Algebra:
    """The field itself as a 1-dimensional unital algebra."""
    return algebra_from_products("scalars", field, ["1"], {(0, 0): {0: 1}}, unit=[1])


def dual_numbers(field: FieldSpec = QQ) -> Algebra:
    """k[x] / (x^2), basis {1, x}."""
    return algebra_from_products(
        "dual-numbers", field, ["1", "x"],
        {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}},
        unit=[1, 0],
    )


def truncated_polynomials(field: FieldSpec = QQ, n: int = 3) -> Algebra:
    """k[x] / (x^n), basis {1, x, ..., x^(n-1)}."""
    basis = ["1"] + [f"x{'^' + str(i) if i > 1 else ''}" for i in range(1, n)]
    products = {
        (i, j): {i + j: 1}
        for i in range(n) for j in range(n) if i + j < n
    }
    unit = [1] + [0] * (n - 1)
    return algebra_from_products(f"trunc-poly-{n}", field, basis, products, unit=unit)


def upper_triangular_2x2(field: FieldSpec = QQ) -> Algebra:
    """Upper-triangular 2x2 matrices, basis {E11, E12, E22}."""
    return algebra_from_matrix_basis(
        "upper-tri-2x2", field, ["E11", "E12", "E22"],
        [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [0, 1]]],
        unit=[1, 0, 1],
    )


def matrix_algebra_2x2(field: FieldSpec = QQ) -> Algebra:
    """Full 2x2 matrix algebra, basis {E11, E12, E21, E22}."""
    return algebra_from_matrix_basis(
        "mat-2x2", field, ["E11", "E12", "E21", "E22"],
        [
            [[1, 0], [0, 0]],
            [[0, 1], [0, 0]],
            [[0, 0], [1, 0]],
            [[0, 0], [0, 1]],
        ],
        unit=[1, 0, 0, 1],
    )


def diagonal_matrices_2(field: FieldSpec = QQ) -> Algebra:
    """Diagonal 2x2 matrices: commutative, associative, unital."""
    return algebra_from_products(
        "diag-2", field, ["E11", "E22"],
        {(0, 0): {0: 1}, (1, 1): {1: 1}},
        unit=[1, 1],
    )


def abelian_lie(dim: int = 1, field: FieldSpec = QQ) -> Algebra:
    return algebra_from_products(f"abelian-{dim}", field, [f"e{i}" for i in range(dim)], {})


def affine_line_lie(field: FieldSpec = QQ) -> Algebra:
    """The 2-dimensional non-abelian Lie algebra, [e, f] = f."""
    return algebra_from_products(
        "affine-line", field, ["e", "f"],
        {(0, 1): {1: 1}, (1, 0): {1: -1}},
    )


def heisenberg(field: FieldSpec = QQ) -> Algebra:
    """Basis {x, y, z} with [x, y] = z and z central."""
    return algebra_from_products(
        "heisenberg", field, ["x", "y", "z"],
        {(0, 1): {2: 1}, (1, 0): {2: -1}},
    )


def sl2(field: FieldSpec = QQ) -> Algebra:
    """Basis {e, f, h}: [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return algebra_from_products(
        "sl2", field, ["e", "f", "h"],
        {
            (0, 1): {2: 1}, (1, 0): {2: -1},
            (2, 0): {0: 2}, (0, 2): {0: -2},
            (2, 1): {1: -2}, (1, 2): {1: 2},
        },
    )


def cross_product(field: FieldSpec = QQ) -> Algebra:
    """The cross product on k^3 (Levi-Civita structure constants)."""
    return algebra_from_products(
        "cross-product", field, ["e1", "e2", "e3"],
        {
            (0, 1): {2: 1}, (1, 0): {2: -1},
            (1, 2): {0: 1}, (2, 1): {0: -1},
            (2, 0): {1: 1}, (0, 2): {1: -1},
        },
    )


def direct_sum(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """Block-diagonal sum; units do not combine, so the result carries none."""
    if a.field != b.field:
        raise ValueError("direct sum across different fields")
    field = a.field
    zero = field.zero
    d = a.dim + b.dim
    tensor = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                tensor[i][j][k] = a.tensor[i][j][k]
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                tensor[a.dim + i][a.dim + j][a.dim + k] = b.tensor[i][j][k]
    basis = tuple(f"a.{s}" for s in a.basis) + tuple(f"b.{s}" for s in b.basis)
    return Algebra(
        name or f"{a.name}(+){b.name}", field, d, basis,
        tuple(tuple(tuple(row) for row in plane) for plane in tensor),
    )


def jordan_upper_triangular(field: FieldSpec = QQ) -> Algebra:
    """Symmetrized upper-triangular 2x2 matrices (a special Jordan algebra)."""
    return symmetrize(upper_triangular_2x2(field))


def jordan_matrix_2x2(field: FieldSpec = QQ) -> Algebra:
    """Symmetrized full 2x2 matrices: commutative but not associative."""
    return symmetrize(matrix_algebra_2x2(field))


def standard_corpus() -> dict:
    """Corpus keyed by class; dimensions 1 through 4 in each list's span."""
    return {
        "assoc": [
            ground_field_line(),
            dual_numbers(),
            truncated_polynomials(),
            upper_triangular_2x2(),
            matrix_algebra_2x2(),
        ],
        "lie": [
            abelian_lie(1),
            affine_line_lie(),
            heisenberg(),
            sl2(),
            cross_product(),
            direct_sum(affine_line_lie(), affine_line_lie(), name="affine-pair"),
        ],
        "jordan": [
            ground_field_line(),
            diagonal_matrices_2(),
            jordan_upper_triangular(),
            jordan_matrix_2x2(),
        ],
    }


