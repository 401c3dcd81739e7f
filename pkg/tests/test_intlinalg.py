import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from nilstalk.intlinalg import (
    cokernel,
    is_prime,
    prime_of,
    prime_power_factors,
    rank_mod_p,
    rank_q,
    smith_diagonal,
)

small_ints = st.integers(min_value=-12, max_value=12)


@st.composite
def matrices(draw, max_dim=4):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    return draw(st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows))


def test_prime_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power_factors(12) == [3, 4]
    assert prime_power_factors(6) == [2, 3]
    assert prime_power_factors(1) == []
    assert prime_of(8) == 2 and prime_of(9) == 3
    with pytest.raises(ValueError):
        prime_power_factors(0)


def test_cokernel_of_one_by_one():
    assert cokernel([[6]], 1) == (0, [2, 3])
    assert cokernel([[1]], 1) == (0, [])
    assert cokernel([[-1]], 1) == (0, [])
    assert cokernel([[0]], 1) == (1, [])
    for n in range(2, 30):
        assert cokernel([[n]], 1) == (0, prime_power_factors(n))


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_smith_diagonal_matches_sympy(m):
    expected = [abs(int(x)) for x in invariant_factors(sympy.Matrix(m), domain=sympy.ZZ) if x != 0]
    assert smith_diagonal(m) == expected


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_q_matches_sympy(m):
    assert rank_q(m) == sympy.Matrix(m).rank()


def _rank_gf(m, p):
    return DomainMatrix([[GF(p)(x) for x in r] for r in m], (len(m), len(m[0])), GF(p)).rank()


@settings(max_examples=200, deadline=None)
@given(matrices(), st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_against_finite_field(m, p):
    assert rank_mod_p(m, p) == _rank_gf(m, p)
