from math import comb

import pytest

from nilstalk.errors import DomainError
from nilstalk.kostka import (
    QPolynomial,
    Tableau,
    char0_ic_stalk_poly,
    charge,
    charge_of_word,
    kostka_foulkes,
    ssyt_enumerate,
)
from nilstalk.partitions import Partition, column, dominance_leq, hook, n_stat, orbit_dim, partitions_of, row
from oracles import lusztig_kostka_foulkes, ssyt_bruteforce

P = Partition.parse


def test_qpolynomial_basics():
    p = QPolynomial.from_list([1, 1, 1])
    assert str(p) == "1 + q + q^2"
    assert str(QPolynomial({3: 2})) == "2q^3"
    assert str(QPolynomial()) == "0"
    assert p(1) == 3 and p.degree == 2
    assert p.reversed_shift(4) == QPolynomial({2: 1, 3: 1, 4: 1})
    assert QPolynomial({0: 1}) == 1
    assert (p + QPolynomial({0: -1})).coefficients == {1: 1, 2: 1}
    assert p.to_json() == {"0": 1, "1": 1, "2": 1}


def test_ssyt_examples():
    assert len(ssyt_enumerate(P("2,1"), P("1,1,1"))) == 2
    assert ssyt_enumerate(P("1,1,1"), P("2,1")) == []
    for mu in partitions_of(5):
        assert len(ssyt_enumerate(row(5), mu)) == 1
    with pytest.raises(DomainError):
        ssyt_enumerate(P("2"), P("1,1,1"))


def test_ssyt_matches_bruteforce_up_to_6():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                got = sorted(t.rows for t in ssyt_enumerate(lam, mu))
                assert got == ssyt_bruteforce(lam.parts, mu.parts), (lam, mu)
                assert all(t.is_semistandard() and t.shape == lam for t in ssyt_enumerate(lam, mu))


def test_charge_examples():
    t = ssyt_enumerate(row(3), column(3))[0]
    assert charge(t) == 3
    charges = sorted(charge(t) for t in ssyt_enumerate(P("2,1"), P("1,1,1")))
    assert charges == [1, 2]
    for lam in partitions_of(5):
        sup = ssyt_enumerate(lam, lam)
        assert len(sup) == 1 and charge(sup[0]) == 0
    with pytest.raises(DomainError):
        charge_of_word([2, 2, 1])


def test_reading_word():
    t = Tableau(((1, 1, 2), (2, 3)))
    assert t.reading_word() == [2, 3, 1, 1, 2]
    assert t.content() == (2, 2, 1)


def test_kostka_foulkes_examples():
    assert kostka_foulkes(P("2,1"), P("1,1,1")) == QPolynomial({1: 1, 2: 1})
    for n in range(1, 7):
        assert kostka_foulkes(row(n), column(n)) == QPolynomial({comb(n, 2): 1})
        for lam in partitions_of(n):
            assert kostka_foulkes(lam, lam) == 1


def test_single_row_identity_up_to_6():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert kostka_foulkes(row(n), mu) == QPolynomial({n_stat(mu): 1})


def test_kostka_number_at_q_equal_one():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert kostka_foulkes(lam, mu)(1) == len(ssyt_bruteforce(lam.parts, mu.parts))


def test_charge_agrees_with_lusztig_q_analogue():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert kostka_foulkes(lam, mu).coefficients == lusztig_kostka_foulkes(lam.parts, mu.parts), (lam, mu)


def test_char0_stalk_examples():
    for n in range(2, 8):
        assert char0_ic_stalk_poly(hook(n), column(n)) == QPolynomial.from_list([1] * (n - 1))
    assert char0_ic_stalk_poly(row(3), column(3)) == 1
    assert char0_ic_stalk_poly(P("2,2"), P("2,1,1")) == 1
    assert char0_ic_stalk_poly(P("2,2"), column(4)) == QPolynomial({0: 1, 2: 1})
    assert char0_ic_stalk_poly(P("2,1,1"), P("2,2")).is_zero
    with pytest.raises(DomainError):
        char0_ic_stalk_poly(P("2"), P("1,1,1"))


def test_char0_diagonal_and_strict_degree_bound_up_to_8():
    for n in range(1, 9):
        parts = partitions_of(n)
        for lam in parts:
            assert char0_ic_stalk_poly(lam, lam) == 1
            for mu in parts:
                if mu != lam and dominance_leq(mu, lam):
                    poly = char0_ic_stalk_poly(lam, mu)
                    assert poly[0] == 1
                    assert 2 * poly.degree < orbit_dim(lam) - orbit_dim(mu), (lam, mu)
