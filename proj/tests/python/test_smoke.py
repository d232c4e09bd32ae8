import math

import pytest

import wheel6


def test_wheel_values():
    assert wheel6.value("A", 1) == 5
    assert wheel6.value("B", 1) == 7
    assert wheel6.value("A", 6) == 35
    assert wheel6.classify(35) == ("A", 6)
    assert wheel6.classify(37) == ("B", 6)
    assert wheel6.classify(36) is None


def test_primality():
    assert wheel6.is_prime(999983)
    assert not wheel6.is_prime(999997)
    assert wheel6.primes_in_wheel(30) == [5, 7, 11, 13, 17, 19, 23, 29]


def test_counts_match_worked_examples():
    s = wheel6.Sieve(30)
    assert s.pi_twin(60) == 6
    assert s.prime_class_counts(14) == (11, 10)
    assert s.pi_gap(28, 126) == (9, 9)
    assert s.pi_sum(94) == (4.5, 5.0)
    assert s.pi_quad(1, 10) == 2
    assert s.twin_sum_reps(20) == 3


def test_exception_scan():
    s = wheel6.Sieve(1000)
    assert s.scan_exceptions(1000) == [
        1, 16, 67, 86, 131, 151, 186, 191, 211, 226, 541, 701,
    ]


def test_estimator_layer():
    assert wheel6.mertens_product(2, 5) == pytest.approx(0.6)
    assert wheel6.eta2(28, "gap") == pytest.approx(1.2)
    assert wheel6.eta4(35) == pytest.approx(5.0)
    assert wheel6.mu2(32) == pytest.approx(0.70697, abs=1e-4)
    assert wheel6.constant_c12(100000) == pytest.approx(0.8802, abs=5e-4)
    seq = wheel6.divergence_sequence([1000, 10000, 100000])
    assert seq[0] < seq[1] < seq[2]


def test_invalid_arguments_raise():
    s = wheel6.Sieve(50)
    with pytest.raises(ValueError):
        wheel6.value("A", 0)
    with pytest.raises(ValueError):
        s.pi_twin(61)
    with pytest.raises(IndexError):
        s.pi_twin(6 * 10**6)
