import pytest

from nilstalk.errors import DomainError
from nilstalk.gradedz import INTEGERS, RATIONAL, FGAbGroup, GradedGroup, prime_field
from nilstalk.partitions import Partition, column, hook, row
from nilstalk.stalkcalc import (
    CaseId,
    Sl2Cone,
    Sl3Cone,
    Sl4TwoTwo,
    SlnMinimal,
    SlnSubregRestriction,
    Sp2nMinimal,
    cone_ic_stalk,
    ic_stalk_table,
    minimal_reduction_verdict,
    sl3_link_tables,
    sl4_link_tables,
    surface_slice_stalk,
)
from nilstalk.spaces import cohomology, lens_space

PRIMES = [2, 3, 5, 7, 11]


def k_at(k, *degrees):
    ranks = {}
    for d in degrees:
        ranks[d] = ranks.get(d, 0) + 1
    return GradedGroup.from_ranks(ranks, k)


def admissible_cases():
    for p in PRIMES:
        k = prime_field(p)
        yield Sl2Cone(), k
        for n in range(2, 7):
            yield SlnMinimal(n), k
            yield Sp2nMinimal(n - 1), k
            yield SlnSubregRestriction(n), k
        if p != 3:
            yield Sl3Cone(), k
        if p != 2:
            yield Sl4TwoTwo(), k


def test_case_ids():
    assert str(SlnMinimal(4)) == "sln-minimal(n=4)"
    with pytest.raises(DomainError):
        CaseId("sln-minimal")
    with pytest.raises(DomainError):
        CaseId("gl-cone")
    with pytest.raises(DomainError):
        SlnMinimal(1)
    assert Sp2nMinimal(1).n == 1


def test_cone_over_a_point_is_a_line():
    assert cone_ic_stalk(GradedGroup.point(0, prime_field(5)), 1) == k_at(prime_field(5), -1)


def test_sl2_cone_over_fields_and_integers():
    for p in PRIMES:
        k = prime_field(p)
        t = ic_stalk_table(Sl2Cone(), k)
        assert t[row(2)] == k_at(k, -2)
        assert t[column(2)] == (k_at(k, -2, -1) if p == 2 else k_at(k, -2))
    assert ic_stalk_table(Sl2Cone(), RATIONAL)[column(2)] == k_at(RATIONAL, -2)
    z = ic_stalk_table(Sl2Cone(), INTEGERS)
    assert z[column(2)] == GradedGroup.point(-2)
    zp = ic_stalk_table(Sl2Cone(), INTEGERS, "p+")
    assert zp.perversity == "p+"
    assert zp[column(2)] == GradedGroup({-2: FGAbGroup(1), 0: FGAbGroup.cyclic(2)})


def test_minimal_sln_origin_rule():
    for n in range(2, 9):
        for p in [2, 3, 5, 7]:
            k = prime_field(p)
            degrees = list(range(-2 * n + 2, -1, 2)) + ([-1] if n % p == 0 else [])
            assert ic_stalk_table(SlnMinimal(n), k)[column(n)] == k_at(k, *degrees)
        z = ic_stalk_table(SlnMinimal(n), INTEGERS)[column(n)]
        assert z == GradedGroup.from_ranks({d: 1 for d in range(-2 * n + 2, -1, 2)})
        zp = ic_stalk_table(SlnMinimal(n), INTEGERS, "p+")[column(n)]
        assert zp[0] == FGAbGroup.cyclic(n) and truncated(zp) == z


def truncated(g):
    return g.replace({d: x for d, x in g.groups.items() if d <= -1})


def test_minimal_sp2n_tables():
    for n in range(1, 7):
        f2 = prime_field(2)
        assert ic_stalk_table(Sp2nMinimal(n), f2)[column(2 * n)] == k_at(f2, *range(-2 * n, 0))
        for p in [3, 5, 7]:
            k = prime_field(p)
            assert ic_stalk_table(Sp2nMinimal(n), k)[column(2 * n)] == k_at(k, -2 * n)
        z = ic_stalk_table(Sp2nMinimal(n), INTEGERS)[column(2 * n)]
        expected = {-2 * n: FGAbGroup(1)}
        expected.update({d: FGAbGroup.cyclic(2) for d in range(-2 * n + 2, -1, 2)})
        assert z == GradedGroup(expected)
        zp = ic_stalk_table(Sp2nMinimal(n), INTEGERS, "p+")[column(2 * n)]
        assert zp == GradedGroup({**expected, 0: FGAbGroup.cyclic(2)})


def test_subregular_tables():
    for n in range(2, 9):
        d = n * n - n
        sub = hook(n, n - 1)
        for p in [2, 3, 5, 7]:
            k = prime_field(p)
            t = ic_stalk_table(SlnSubregRestriction(n), k)
            assert t[sub] == (k_at(k, -d, -d + 1) if n % p == 0 else k_at(k, -d))
        z = ic_stalk_table(SlnSubregRestriction(n), INTEGERS)
        assert z[sub] == GradedGroup.point(-d)
        zp = ic_stalk_table(SlnSubregRestriction(n), INTEGERS, "p+")
        assert zp[sub] == GradedGroup({-d: FGAbGroup(1), -d + 2: FGAbGroup.cyclic(n)})


def test_sl3_theorem():
    f2 = prime_field(2)
    t = ic_stalk_table(Sl3Cone(), f2)
    assert t[column(3)] == k_at(f2, -6, -1)
    assert t[hook(3)] == k_at(f2, -6)
    for p in [5, 7, 11]:
        k = prime_field(p)
        assert ic_stalk_table(Sl3Cone(), k)[column(3)] == k_at(k, -6)
    q = ic_stalk_table(Sl3Cone(), RATIONAL)
    assert all(s.stalk == k_at(RATIONAL, -6) for s in q.strata)


def test_sl3_link_tables_over_f2():
    f2 = prime_field(2)
    links = sl3_link_tables(f2)
    assert links["U_tilde[6]"] == k_at(f2, -6, -4, -4, -2, -2, -1, 0, 1, 1, 3, 3, 5)
    assert links["O_min[4]"] == k_at(f2, -4, -2, 1, 3)
    assert links["U[6]"] == k_at(f2, -6, -1, 0, 5)


def test_sl4_theorem_and_links():
    f3 = prime_field(3)
    t = ic_stalk_table(Sl4TwoTwo(), f3)
    assert t[column(4)] == k_at(f3, -8, -4, -1)
    assert t[hook(4)] == k_at(f3, -8)
    for p in [5, 7]:
        k = prime_field(p)
        assert ic_stalk_table(Sl4TwoTwo(), k)[column(4)] == k_at(k, -8, -4)
    links = sl4_link_tables(f3)
    assert links["U_tilde'[8]"] == k_at(f3, -8, -6, -4, -4, -2, -1, 0, 1, 3, 3, 5, 7)
    assert links["O_min[6]"] == k_at(f3, -6, -4, -2, 1, 3, 5)
    assert links["U'[8]"] == k_at(f3, -8, -4, -1, 0, 3, 7)


def test_inadmissible_characteristics():
    with pytest.raises(DomainError, match="p ≠ 3"):
        ic_stalk_table(Sl3Cone(), prime_field(3))
    with pytest.raises(DomainError, match="p ≠ 2"):
        ic_stalk_table(Sl4TwoTwo(), prime_field(2))
    for case in [Sl3Cone(), Sl4TwoTwo()]:
        with pytest.raises(DomainError):
            ic_stalk_table(case, INTEGERS)
    with pytest.raises(DomainError):
        ic_stalk_table(Sl2Cone(), INTEGERS, "q")


def test_plus_perversity_over_a_field_is_plain():
    for p in [2, 3]:
        k = prime_field(p)
        for case in [Sl2Cone(), SlnMinimal(4), Sp2nMinimal(2)]:
            plain = ic_stalk_table(case, k)
            plus = ic_stalk_table(case, k, "p+")
            assert plain.strata == plus.strata and plus.perversity == "p"


def test_support_conditions():
    for case, k in admissible_cases():
        assert ic_stalk_table(case, k).satisfies_support(), (case, k)
    for case in [Sl2Cone(), SlnMinimal(5), Sp2nMinimal(3), SlnSubregRestriction(4)]:
        for perv in ["p", "p+"]:
            assert ic_stalk_table(case, INTEGERS, perv).satisfies_support()


def test_two_routes_agree():
    for case, k in admissible_cases():
        assert ic_stalk_table(case, k, route="uct") == ic_stalk_table(case, k, route="direct"), (case, k)


def test_sp2_and_subreg2_recover_sl2():
    coeffs = [INTEGERS, RATIONAL] + [prime_field(p) for p in PRIMES]
    for k in coeffs:
        for perv in ["p", "p+"]:
            ref = [(s.label, s.dim, s.stalk) for s in ic_stalk_table(Sl2Cone(), k, perv).strata]
            for case in [Sp2nMinimal(1), SlnSubregRestriction(2)]:
                got = [(s.label, s.dim, s.stalk) for s in ic_stalk_table(case, k, perv).strata]
                assert got == ref, (case, k, perv)


def test_surface_slice_uses_lens_link():
    assert cohomology(lens_space(2, 3))[2] == FGAbGroup.cyclic(3)
    f3 = prime_field(3)
    assert surface_slice_stalk(3, f3) == k_at(f3, -2, -1)
    assert surface_slice_stalk(3, prime_field(2)) == k_at(prime_field(2), -2)


def test_reduction_verdicts():
    assert minimal_reduction_verdict(3, 2).irreducible
    v = minimal_reduction_verdict(2, 2)
    assert not v.irreducible and v.trivial_multiplicity == 1
    v = minimal_reduction_verdict(6, 3)
    assert not v.irreducible and v.trivial_multiplicity == 1
    for n in range(2, 9):
        for ell in [2, 3, 5, 7]:
            assert minimal_reduction_verdict(n, ell).irreducible == (n % ell != 0)


def test_json_round_trip():
    t = ic_stalk_table(Sp2nMinimal(2), INTEGERS, "p+")
    back = type(t).from_json(t.to_json())
    assert [(s.label, s.dim, s.stalk) for s in back.strata] == [(s.label, s.dim, s.stalk) for s in t.strata]
    assert back.perversity == "p+"
    assert t.to_json()["strata"][1]["groups"]["-2"] == {"rank": 0, "torsion": [2]}
