"""IC stalk tables for a closed list of nilpotent orbit closures.

Every origin stalk comes from the same recipe.  When the closure is a cone
over its vertex and the complement ``U`` of the vertex is smooth (or
``k``-smooth), the Deligne construction needs one step:

    IC_0 = tau_{<=-1}( RΓ(U, k)[dim] )

and ``RΓ(U, k)`` is either a Gysin computation (complement of the zero
section of a cotangent or line bundle), a lens space, or obtained from one
by removing a split summand.  Intermediate strata are read off a transverse
slice: an ``A_(n-1)`` surface singularity ``C^2/mu_n`` whose link is the lens
space ``S^3/mu_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .gradedz import (
    CoefficientSpec,
    GradedGroup,
    INTEGERS,
    change_coefficients,
    prime_field,
    shift,
    truncate_le,
    truncate_le_plus,
)
from .gysin import complement_cohomology, cotangent_euler_action, line_bundle_action_on_projective
from .partitions import Partition, column, hook, row
from .resolutions import split_subtract
from .spaces import cohomology, full_flag, grassmannian, lens_space, projective
from .stalktable import PERVERSITIES, StalkTable, Stratum

CASE_NAMES = ("sl2-cone", "sln-minimal", "sp2n-minimal", "sln-subreg", "sl3-cone", "sl4-two-two")
_NEEDS_N = {"sln-minimal", "sp2n-minimal", "sln-subreg"}


@dataclass(frozen=True)
class CaseId:
    name: str
    n: int | None = None

    def __post_init__(self):
        if self.name not in CASE_NAMES:
            raise DomainError(f"unknown case {self.name!r}; known: {', '.join(CASE_NAMES)}")
        if self.name in _NEEDS_N:
            if self.n is None:
                raise DomainError(f"case {self.name} needs n")
            if self.n < (1 if self.name == "sp2n-minimal" else 2):
                raise DomainError(f"case {self.name} needs a larger n, got {self.n}")
        elif self.n is not None:
            object.__setattr__(self, "n", None)

    def __str__(self):
        return self.name if self.n is None else f"{self.name}(n={self.n})"


def Sl2Cone():
    return CaseId("sl2-cone")


def SlnMinimal(n):
    return CaseId("sln-minimal", n)


def Sp2nMinimal(n):
    return CaseId("sp2n-minimal", n)


def SlnSubregRestriction(n):
    return CaseId("sln-subreg", n)


def Sl3Cone():
    return CaseId("sl3-cone")


def Sl4TwoTwo():
    return CaseId("sl4-two-two")


def _check_perversity(perversity):
    if perversity not in PERVERSITIES:
        raise DomainError(f"perversity must be 'p' or 'p+', got {perversity!r}")


def _over(h: GradedGroup, k: CoefficientSpec) -> GradedGroup:
    return h if k == INTEGERS else change_coefficients(h, k)


def cone_ic_stalk(link_sections: GradedGroup, dim_x: int, perversity: str = "p") -> GradedGroup:
    """Vertex stalk of the IC complex of a cone with smooth punctured part.

    ``link_sections`` is ``RΓ(U, k)`` in nonnegative degrees.  For ``p+``
    over a field this is the same as ``p``.
    """
    _check_perversity(perversity)
    shifted = shift(link_sections, dim_x)
    if perversity == "p+":
        return truncate_le_plus(shifted, -1)
    return truncate_le(shifted, -1)


# -- link cohomology --------------------------------------------------------

def _route_over(integral: GradedGroup, action, k: CoefficientSpec, route: str) -> GradedGroup:
    if k == INTEGERS:
        return integral
    if route == "uct":
        return change_coefficients(integral, k)
    if route == "direct":
        return complement_cohomology(action, k)
    raise DomainError(f"unknown route {route!r}")


def minimal_orbit_cohomology(n: int, k: CoefficientSpec = INTEGERS, route: str = "uct") -> GradedGroup:
    """``RΓ(O_min, k)`` for sl_n, via ``O_min = T^*P^(n-1)`` minus the zero section."""
    a = cotangent_euler_action(projective(n - 1))
    return _route_over(complement_cohomology(a), a, k, route)


def sp_minimal_orbit_cohomology(n: int, k: CoefficientSpec = INTEGERS, route: str = "uct") -> GradedGroup:
    """``RΓ(O_min, k)`` for sp_2n, via ``O(-2)`` on ``P^(2n-1)`` minus the zero section."""
    a = line_bundle_action_on_projective(2 * n - 1, 2)
    return _route_over(complement_cohomology(a), a, k, route)


def cotangent_complement_cohomology(base, k: CoefficientSpec = INTEGERS, route: str = "uct") -> GradedGroup:
    a = cotangent_euler_action(base)
    return _route_over(complement_cohomology(a), a, k, route)


def lens_link_cohomology(d: int, k: CoefficientSpec = INTEGERS) -> GradedGroup:
    """``RΓ(S^3/mu_d, k)``, the link of the ``A_(d-1)`` surface singularity."""
    return _over(cohomology(lens_space(2, d)), k)


def surface_slice_stalk(d: int, k: CoefficientSpec, perversity: str = "p") -> GradedGroup:
    """Vertex stalk of IC on ``C^2/mu_d`` (``d = 2`` is the sl_2 nilpotent cone)."""
    return cone_ic_stalk(lens_link_cohomology(d, k), 2, perversity)


def slice_to_stratum(slice_stalk: GradedGroup, total_dim: int, slice_dim: int = 2) -> GradedGroup:
    """Move a transverse-slice stalk to a stratum of codimension ``slice_dim``.

    The slice's ``-slice_dim`` lands on ``-total_dim``.
    """
    return shift(slice_stalk, total_dim - slice_dim)


def sl3_link_tables(k: CoefficientSpec, route: str = "uct") -> dict[str, GradedGroup]:
    """The three complexes behind the sl_3 origin stalk.

    ``RΓ(Ũ)[6] = RΓ(U)[6] ⊕ RΓ(O_min)^2[4]`` with ``Ũ`` the Springer
    resolution over ``U = O_reg ∪ O_min`` (``T^*(G/B)`` minus zero section).
    """
    _admissible(Sl3Cone(), k)
    u_tilde = shift(cotangent_complement_cohomology(full_flag(3), k, route), 6)
    o_min = shift(minimal_orbit_cohomology(3, k, route), 4)
    u = split_subtract(u_tilde, o_min, 2)
    return {"U_tilde[6]": u_tilde, "O_min[4]": o_min, "U[6]": u}


def sl4_link_tables(k: CoefficientSpec, route: str = "uct") -> dict[str, GradedGroup]:
    """The complexes behind the origin stalk of the closure of O_(2,2) in sl_4.

    ``RΓ(Ũ')[8] = RΓ(U')[8] ⊕ RΓ(O_min)[6]``, ``Ũ'`` = ``T^*Gr(2,4)`` minus
    zero section.
    """
    _admissible(Sl4TwoTwo(), k)
    u_tilde = shift(cotangent_complement_cohomology(grassmannian(2, 4), k, route), 8)
    o_min = shift(minimal_orbit_cohomology(4, k, route), 6)
    u = split_subtract(u_tilde, o_min, 1)
    return {"Gr(2,4)": cohomology(grassmannian(2, 4)), "U_tilde'[8]": u_tilde, "O_min[6]": o_min, "U'[8]": u}


# -- case tables ------------------------------------------------------------

def _admissible(case: CaseId, k: CoefficientSpec):
    if case.name == "sl3-cone":
        if not k.is_field:
            raise DomainError("sl3-cone is only computed over a field of characteristic ≠ 3")
        if k.characteristic == 3:
            raise DomainError("sl3-cone requires characteristic ≠ 3 (p ≠ 3)")
    if case.name == "sl4-two-two":
        if not k.is_field:
            raise DomainError("sl4-two-two is only computed over a field of characteristic ≠ 2")
        if k.characteristic == 2:
            raise DomainError("sl4-two-two requires characteristic ≠ 2 (p ≠ 2)")


def _open(label: Partition, dim: int, k: CoefficientSpec, name: str) -> Stratum:
    return Stratum(label, dim, GradedGroup.point(-dim, k), name)


def ic_stalk_table(case: CaseId, k: CoefficientSpec, perversity: str = "p", route: str = "uct") -> StalkTable:
    """Full stalk table of the IC complex (constant coefficients) for ``case``.

    ``route`` selects how field-coefficient link cohomology is obtained:
    ``"uct"`` changes coefficients of the integral Gysin answer, ``"direct"``
    runs the Gysin computation over the field.
    """
    _check_perversity(perversity)
    _admissible(case, k)
    n = case.n
    if case.name == "sl2-cone":
        strata = (
            _open(row(2), 2, k, "O_reg"),
            Stratum(column(2), 0, surface_slice_stalk(2, k, perversity), "{0}"),
        )
    elif case.name == "sln-minimal":
        d = 2 * n - 2
        strata = (
            _open(hook(n), d, k, "O_min"),
            Stratum(column(n), 0, cone_ic_stalk(minimal_orbit_cohomology(n, k, route), d, perversity), "{0}"),
        )
    elif case.name == "sp2n-minimal":
        d = 2 * n
        strata = (
            _open(hook(2 * n), d, k, "O_min"),
            Stratum(column(2 * n), 0, cone_ic_stalk(sp_minimal_orbit_cohomology(n, k, route), d, perversity), "{0}"),
        )
    elif case.name == "sln-subreg":
        d = n * n - n
        sub = slice_to_stratum(surface_slice_stalk(n, k, perversity), d)
        strata = (
            _open(row(n), d, k, "O_reg"),
            Stratum(hook(n, n - 1), d - 2, sub, "O_subreg"),
        )
    elif case.name == "sl3-cone":
        links = sl3_link_tables(k, route)
        strata = (
            _open(row(3), 6, k, "O_reg"),
            Stratum(hook(3), 4, slice_to_stratum(surface_slice_stalk(3, k), 6), "O_min"),
            Stratum(column(3), 0, truncate_le(links["U[6]"], -1), "{0}"),
        )
    else:
        links = sl4_link_tables(k, route)
        strata = (
            _open(Partition((2, 2)), 8, k, "O_(2,2)"),
            Stratum(hook(4), 6, slice_to_stratum(surface_slice_stalk(2, k), 8), "O_min"),
            Stratum(column(4), 0, truncate_le(links["U'[8]"], -1), "{0}"),
        )
    effective = perversity if not k.is_field else "p"
    return StalkTable(strata, k, effective, title=f"IC {case} over {k.symbol()}")


def skyscraper_table(n: int, k: CoefficientSpec) -> StalkTable:
    """``IC({0}, k)`` on the nilpotent cone of sl_n."""
    return StalkTable((Stratum(column(n), 0, GradedGroup.point(0, k), "{0}"),), k, "p", title="IC {0}")


@dataclass(frozen=True)
class ReductionVerdict:
    irreducible: bool
    trivial_multiplicity: int


def minimal_reduction_verdict(n: int, ell: int) -> ReductionVerdict:
    """Whether the reflection representation of S_n stays irreducible mod ``ell``.

    Read from the vertex stalk of IC(closure of O_min) over ``F_ell``: the
    extra copy of ``k`` in degree ``-1`` is present exactly when ``ell | n``.
    """
    t = ic_stalk_table(SlnMinimal(n), prime_field(ell))
    extra = t[column(n)].rank(-1)
    return ReductionVerdict(extra == 0, extra)
