import pytest

from nilstalk.errors import DomainError
from nilstalk.gradedz import FGAbGroup, GradedGroup
from nilstalk.spaces import (
    SpaceDescriptor,
    cohomology,
    euler_characteristic,
    full_flag,
    gaussian_binomial,
    grassmannian,
    lens_space,
    projective,
    q_factorial,
)
from oracles import inversion_poincare, subset_inversion_poincare


def even_ranks(g: GradedGroup) -> list[int]:
    top = max(g.degrees)
    return [g.rank(d) for d in range(top + 1)]


def test_parse_descriptors():
    assert SpaceDescriptor.parse("proj:3") == projective(3)
    assert SpaceDescriptor.parse("grass:2,4") == grassmannian(2, 4)
    assert SpaceDescriptor.parse("flag:3") == full_flag(3)
    assert SpaceDescriptor.parse("lens:2,3") == lens_space(2, 3)
    for bad in ["proj:-1", "grass:5,4", "flag:0", "lens:0,2", "torus:2", "proj"]:
        with pytest.raises(DomainError):
            SpaceDescriptor.parse(bad)


def test_grassmannian_and_flag_tables():
    assert even_ranks(cohomology(grassmannian(2, 4))) == [1, 0, 1, 0, 2, 0, 1, 0, 1]
    assert even_ranks(cohomology(full_flag(3))) == [1, 0, 2, 0, 2, 0, 1]
    assert even_ranks(cohomology(full_flag(4))) == [1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1]


def test_flag_ranks_count_permutations_by_inversions():
    for n in range(1, 7):
        assert q_factorial(n) == inversion_poincare(n)
        ranks = cohomology(full_flag(n)).ranks()
        assert [ranks.get(2 * j, 0) for j in range(len(q_factorial(n)))] == inversion_poincare(n)


def test_gaussian_binomial_counts_subsets_by_inversions():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert gaussian_binomial(n, k) == subset_inversion_poincare(n, k), (n, k)


def test_lens_spaces():
    rp3 = cohomology(lens_space(2, 2))
    assert rp3 == GradedGroup({0: FGAbGroup(1), 2: FGAbGroup.cyclic(2), 3: FGAbGroup(1)})
    for n in range(1, 5):
        rp = cohomology(lens_space(2 * n, 2))
        assert rp[0] == FGAbGroup(1) and rp[4 * n - 1] == FGAbGroup(1)
        assert [d for d in rp.degrees if rp[d].torsion] == list(range(2, 4 * n - 1, 2))
    for m in range(1, 5):
        assert cohomology(lens_space(m, 1)) == GradedGroup.from_ranks({0: 1, 2 * m - 1: 1})


def test_euler_characteristics():
    assert euler_characteristic(projective(1)) == 2
    assert euler_characteristic(full_flag(3)) == 6
    assert euler_characteristic(grassmannian(2, 4)) == 6
    for n in range(1, 8):
        assert euler_characteristic(projective(n - 1)) == n


def test_poincare_duality_and_projective_grassmannian():
    for n in range(1, 7):
        assert cohomology(grassmannian(1, n)) == cohomology(projective(n - 1))
        for space in [projective(n), full_flag(n), grassmannian(n // 2, n)]:
            ranks = cohomology(space).ranks()
            top = 2 * space.complex_dim
            assert all(ranks.get(d, 0) == ranks.get(top - d, 0) for d in range(top + 1))


def test_lens_space_has_no_complex_dimension():
    with pytest.raises(DomainError):
        lens_space(2, 3).complex_dim
