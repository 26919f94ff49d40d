from fractions import Fraction

from services.conjecture import _product_vector, render_fit, run_experiment, s_polynomial_fit, target_vector
from services.partitions import Partition


def test_product_vector():
    assert _product_vector(()) == {0: 1}
    assert _product_vector((2,)) == {2: Fraction(1, 2), -2: Fraction(-1, 2)}
    assert _product_vector((1, 1)) == {2: 1, 0: -2, -2: 1}


def test_target_vector_doubles_exponents():
    assert target_vector(Partition.of(2)) == {2: Fraction(1, 2), -2: Fraction(-1, 2)}


def test_low_degree_fits():
    assert s_polynomial_fit(Partition.of(1)) == {(): 1}
    assert s_polynomial_fit(Partition.of(2)) == {(2,): 1}
    assert s_polynomial_fit(Partition.of(1, 1)) == {(1, 1): Fraction(1, 2)}
    assert s_polynomial_fit(Partition.of(3)) == {(3, 3): 1}


def test_restricted_alphabet_has_no_fit():
    assert s_polynomial_fit(Partition.of(2), max_k=1) is None


def test_render_fit():
    assert render_fit({}) == "0"
    assert render_fit({(2,): Fraction(1)}) == "S(2λ)"
    assert render_fit({(1, 1): Fraction(1, 2)}) == "1/2*S(λ)*S(λ)"
    assert render_fit({(): Fraction(1)}) == "1"


def test_experiment_is_report_only():
    report = run_experiment(3)
    assert report.ok
    assert report.summary.info == report.summary.total == 6
    assert all(case.note for case in report.cases)
    assert report.cases[0].note == "T(1) = 1"
