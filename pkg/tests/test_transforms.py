import itertools
from fractions import Fraction

import pytest

from ujla import corpus
from ujla.axioms import check_jordan, check_lie, check_ujla
from ujla.classify import SearchSpec, enumerate_ujla
from ujla.fields import PrimeField, QQ
from ujla.transforms import check_compatibility, commutator, deform, symmetrize


def test_commutator_of_commutative_is_abelian(dual):
    lie = commutator(dual)
    assert lie.name == "dual-numbers/lie"
    assert all(c == 0 for c in lie.tensor_flat())
    assert lie.unit is None


def test_commutator_of_upper_triangular(upper2):
    lie = commutator(upper2)
    e11, e12, e22 = (lie.basis_vector(i) for i in range(3))
    assert lie.multiply(e11, e12) == e12
    assert lie.multiply(e12, e22) == e12
    assert lie.multiply(e11, e22) == lie.zero_vector()


def test_commutator_of_heisenberg_doubles(heis):
    doubled = commutator(heis)
    x, y = doubled.basis_vector(0), doubled.basis_vector(1)
    assert doubled.multiply(x, y) == (0, 0, Fraction(2))


def test_symmetrize_fixes_commutative(dual):
    assert symmetrize(dual).tensor == dual.tensor
    assert symmetrize(dual).unit == dual.unit


def test_symmetrize_kills_lie_products(heis):
    sym = symmetrize(heis)
    assert all(c == 0 for c in sym.tensor_flat())


def test_symmetrize_needs_odd_characteristic():
    alg = corpus.dual_numbers(PrimeField(2))
    with pytest.raises(ValueError, match="characteristic 2"):
        symmetrize(alg)


def test_deform_identity(upper2):
    assert deform(upper2, 1, 0).tensor == upper2.tensor
    assert deform(upper2, 1, 0).unit == upper2.unit


def test_deform_unit_survives_only_when_coefficients_sum_to_one(upper2):
    assert deform(upper2, Fraction(1, 3), Fraction(2, 3)).unit == upper2.unit
    assert deform(upper2, 1, 1).unit is None


def test_deform_matches_commutator_and_symmetrize(upper2):
    assert deform(upper2, 1, -1).tensor == commutator(upper2).tensor
    half = Fraction(1, 2)
    assert deform(upper2, half, half).tensor == symmetrize(upper2).tensor


def test_half_half_deform_of_associative_is_jordan(upper2):
    half = Fraction(1, 2)
    assert check_jordan(deform(upper2, half, half)).passed


def test_one_minus_one_deform_of_associative_is_lie(upper2):
    assert check_lie(deform(upper2, 1, -1)).passed


def test_double_commutator_is_a_doubling(upper2, heis):
    for alg in (upper2, heis, corpus.sl2()):
        lie = commutator(alg)
        assert commutator(lie).tensor == deform(lie, 2, 0).tensor


def test_deform_of_associative_is_ujla_for_all_f5_parameters():
    F5 = PrimeField(5)
    for alg in (corpus.dual_numbers(F5), corpus.upper_triangular_2x2(F5)):
        for alpha, beta in itertools.product(range(5), repeat=2):
            assert check_ujla(deform(alg, alpha, beta)).passed, (alg.name, alpha, beta)


def test_ujla_members_commute_to_lie_and_symmetrize_to_jordan(standard_corpus):
    for algebras in standard_corpus.values():
        for alg in algebras:
            assert check_lie(commutator(alg)).passed, alg.name
            assert check_jordan(symmetrize(alg)).passed, alg.name


def test_compatibility_on_associative_and_zero(dual, upper2):
    assert check_compatibility(dual).passed
    assert check_compatibility(upper2).passed
    assert check_compatibility(corpus.zero_algebra(dim=2)).passed


def test_compatibility_on_classified_f3_structures():
    result = enumerate_ujla(SearchSpec(2, 3))
    for alg in result.representative_algebras():
        assert check_compatibility(alg).passed, alg.name


def test_compatibility_rejects_characteristic_two():
    with pytest.raises(ValueError, match="characteristic 2"):
        check_compatibility(corpus.dual_numbers(PrimeField(2)))


def test_compatibility_can_fail():
    # e0*e0 = e1 with e1*e1 = e0 is not compatible.
    from ujla.algebra import algebra_from_products

    alg = algebra_from_products(
        "incompatible", QQ, ["e0", "e1"],
        {(0, 0): {1: 1}, (1, 1): {0: 1}, (0, 1): {0: 1}},
    )
    report = check_compatibility(alg)
    assert not report.passed
    v = report.verdicts[0]
    assert v.coefficient_witness is not None
    assert v.concrete_witness is not None
