"""Derivation constructions and the Leibniz-rule checker.

Linear maps are square matrices whose columns are the images of basis
vectors.  The two builders use the algebra's single product throughout
(the bracket of a Lie algebra, the circle of a Jordan algebra); no
hidden symmetrization happens here.
"""

from __future__ import annotations

from typing import Optional

from .algebra import Algebra, Vector, formal_basis_combination, vec_add, vec_sub
from .formal import Poly
from .identities import AxiomReport, ConcreteWitness, Verdict
from .linalg import Matrix, mat_vec


def _combination(alg: Algebra, terms) -> Vector:
    """Signed sum of products; terms are (+1 | -1, u, v) triples."""
    acc = alg.zero_vector()
    for sign, u, v in terms:
        prod = alg.multiply(u, v)
        acc = vec_add(alg.field, acc, prod) if sign > 0 else vec_sub(alg.field, acc, prod)
    return acc


def derivation_six_term(alg: Algebra, a: Vector, b: Vector) -> Matrix:
    """D(x) = a(bx) + b(ax) + (ax)b - a(xb) - (xb)a - (xa)b."""
    d = alg.dim
    if len(a) != d or len(b) != d:
        raise ValueError(f"{alg.name}: argument vectors must have length {d}")
    cols = []
    for k in range(d):
        x = alg.basis_vector(k)
        ax, xa = alg.multiply(a, x), alg.multiply(x, a)
        bx, xb = alg.multiply(b, x), alg.multiply(x, b)
        cols.append(_combination(alg, [
            (+1, a, bx),
            (+1, b, ax),
            (+1, ax, b),
            (-1, a, xb),
            (-1, xb, a),
            (-1, xa, b),
        ]))
    rows = tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))
    return Matrix(alg.field, rows)


def derivation_two_term(alg: Algebra, a: Vector, b: Vector) -> Matrix:
    """D(x) = a(bx) - (xa)b."""
    d = alg.dim
    if len(a) != d or len(b) != d:
        raise ValueError(f"{alg.name}: argument vectors must have length {d}")
    cols = []
    for k in range(d):
        x = alg.basis_vector(k)
        bx, xa = alg.multiply(b, x), alg.multiply(x, a)
        cols.append(_combination(alg, [(+1, a, bx), (-1, xa, b)]))
    rows = tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))
    return Matrix(alg.field, rows)


def apply_map(m: Matrix, v: Vector) -> Vector:
    return mat_vec(m, v)


def _apply_map_formal(m: Matrix, v) -> tuple:
    field = m.field
    nvars = v[0].nvars
    out = []
    for row in m.rows:
        acc = Poly.zero(field, nvars)
        for coeff, poly in zip(row, v):
            if coeff != field.zero and not poly.is_zero():
                acc = acc + poly.scale(coeff)
        out.append(acc)
    return tuple(out)


def check_derivation(
    alg: Algebra, deriv: Matrix, semantics: str = "polynomial"
) -> AxiomReport:
    """Does D satisfy D(xy) = D(x)y + xD(y)?

    ``polynomial`` checks the rule on formal vectors; ``basis`` exhausts
    basis pairs, which is equivalent because the rule is bilinear in
    (x, y).  Both are exact.
    """
    d = alg.dim
    if deriv.nrows != d or deriv.ncols != d:
        raise ValueError(f"{alg.name}: linear map must be {d}x{d}")
    if semantics == "polynomial":
        verdict = _leibniz_polynomial(alg, deriv)
    elif semantics == "basis":
        verdict = _leibniz_basis(alg, deriv)
    else:
        raise ValueError(f"unknown semantics {semantics!r} (expected 'polynomial' or 'basis')")
    return AxiomReport(algebra=alg.name, semantics=semantics, verdicts=(verdict,))


def _leibniz_polynomial(alg: Algebra, deriv: Matrix) -> Verdict:
    field = alg.field
    d = alg.dim
    nvars = 2 * d
    x = formal_basis_combination(field, d, nvars, 0)
    y = formal_basis_combination(field, d, nvars, d)
    lhs = _apply_map_formal(deriv, alg.multiply_formal(x, y))
    dx_y = alg.multiply_formal(_apply_map_formal(deriv, x), y)
    x_dy = alg.multiply_formal(x, _apply_map_formal(deriv, y))
    for k in range(d):
        diff = lhs[k] - dx_y[k] - x_dy[k]
        if not diff.is_zero():
            # The rule is bilinear, so a polynomial failure always has a
            # basis-pair counterexample.
            witness = _basis_pair_witness(alg, deriv)
            return Verdict("leibniz", False, "polynomial", concrete_witness=witness)
    return Verdict("leibniz", True, "polynomial")


def _basis_pair_witness(alg: Algebra, deriv: Matrix) -> Optional[ConcreteWitness]:
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = alg.basis_vector(i), alg.basis_vector(j)
            lhs = apply_map(deriv, alg.multiply(x, y))
            rhs = vec_add(
                alg.field,
                alg.multiply(apply_map(deriv, x), y),
                alg.multiply(x, apply_map(deriv, y)),
            )
            if lhs != rhs:
                return ConcreteWitness((("x", x), ("y", y)), lhs, rhs)
    return None


def _leibniz_basis(alg: Algebra, deriv: Matrix) -> Verdict:
    witness = _basis_pair_witness(alg, deriv)
    if witness is None:
        return Verdict("leibniz", True, "basis")
    return Verdict("leibniz", False, "basis", concrete_witness=witness)


def revalidate_leibniz(alg: Algebra, deriv: Matrix, verdict: Verdict) -> bool:
    """Recompute a failed Leibniz verdict's witness pair from scratch."""
    if verdict.passed:
        return True
    w = verdict.concrete_witness
    if w is None:
        return False
    env = dict(w.assignment)
    x, y = env["x"], env["y"]
    lhs = apply_map(deriv, alg.multiply(x, y))
    rhs = vec_add(
        alg.field,
        alg.multiply(apply_map(deriv, x), y),
        alg.multiply(x, apply_map(deriv, y)),
    )
    return lhs == w.lhs and rhs == w.rhs and lhs != rhs
