"""Resolutions of nilpotent orbit closures described by their fibres.

A :class:`ResolutionDescriptor` lists the strata of the target together
with the integral cohomology of the fibre over each one.  Fibre cohomology
is data: it is taken from the known geometry (points over the open orbit,
projective spaces, Dynkin chains of lines, Grassmannians) and registered
under the names in :data:`REGISTRY`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import ContainmentError, DomainError
from .gradedz import (
    CoefficientSpec,
    GradedGroup,
    INTEGERS,
    change_coefficients,
    contains,
    scale,
    shift,
    subtract,
)
from .partitions import Partition, column, hook, orbit_dim, row
from .spaces import cohomology, grassmannian, projective
from .stalktable import StalkTable, Stratum


@dataclass(frozen=True)
class StratumFiberData:
    stratum: Partition
    stratum_dim: int
    fiber_cohomology: GradedGroup
    name: str = ""

    def __post_init__(self):
        if self.fiber_cohomology.coefficients != INTEGERS:
            raise DomainError("fibre cohomology is given over Z")
        if self.fiber_cohomology.rank(0) < 1:
            raise DomainError(f"fibre over {self.stratum} must be nonempty")
        if any(d < 0 for d in self.fiber_cohomology.degrees):
            raise DomainError("fibre cohomology lives in nonnegative degrees")

    @property
    def fiber_dim(self) -> int:
        return max(self.fiber_cohomology.degrees) // 2


@dataclass(frozen=True)
class ResolutionDescriptor:
    total_dim: int
    strata: tuple[StratumFiberData, ...]
    name: str = ""

    def __post_init__(self):
        if not self.strata:
            raise DomainError("a resolution needs at least one stratum")
        if self.strata[0].fiber_cohomology != GradedGroup.point():
            raise DomainError("the dense stratum must have a point fibre")
        if self.strata[0].stratum_dim != self.total_dim:
            raise DomainError("the first stratum must be dense")
        dims = [s.stratum_dim for s in self.strata]
        if any(a <= b for a, b in zip(dims, dims[1:])):
            raise DomainError("stratum dimensions must strictly decrease")


def _defect(r: ResolutionDescriptor, s: StratumFiberData) -> int:
    # 2 dim F_S - codim S; semismall means this is <= 0 everywhere
    return 2 * s.fiber_dim - (r.total_dim - s.stratum_dim)


def is_semismall(r: ResolutionDescriptor) -> bool:
    return all(_defect(r, s) <= 0 for s in r.strata)


def relevant_strata(r: ResolutionDescriptor) -> list[Partition]:
    """Non-dense strata where the semismall bound is an equality."""
    return [s.stratum for s in r.strata[1:] if _defect(r, s) == 0]


def is_small(r: ResolutionDescriptor) -> bool:
    return is_semismall(r) and not relevant_strata(r)


def pushforward_stalk_table(r: ResolutionDescriptor, k: CoefficientSpec) -> StalkTable:
    """Stalks of ``pi_* k[total_dim]``: fibre cohomology shifted by ``total_dim``."""
    strata = []
    for s in r.strata:
        h = s.fiber_cohomology if k == INTEGERS else change_coefficients(s.fiber_cohomology, k)
        strata.append(Stratum(s.stratum, s.stratum_dim, shift(h, r.total_dim), s.name))
    return StalkTable(tuple(strata), k, "p", title=f"pushforward {r.name}".strip())


def split_subtract(total: GradedGroup, summand: GradedGroup, multiplicity: int) -> GradedGroup:
    """Remove ``multiplicity`` copies of ``summand`` from ``total``.

    Models ``RΓ(Ũ) = RΓ(U) ⊕ RΓ(closed term)^m`` once the splitting is known;
    a failed containment means the splitting hypothesis is wrong.
    """
    if multiplicity < 1:
        raise DomainError(f"multiplicity must be positive, got {multiplicity}")
    removed = scale(summand, multiplicity)
    if not contains(total, removed):
        raise ContainmentError(
            f"{multiplicity} x ({summand.render()}) is not a summand of {total.render()}"
        )
    return subtract(total, removed)


# -- registry ---------------------------------------------------------------

def _point() -> GradedGroup:
    return GradedGroup.point()


def dynkin_chain(n_lines: int) -> GradedGroup:
    """Cohomology of a chain of ``n_lines`` projective lines meeting in points."""
    return GradedGroup.from_ranks({0: 1, 2: n_lines})


def springer_sl2() -> ResolutionDescriptor:
    return ResolutionDescriptor(2, (
        StratumFiberData(row(2), 2, _point(), "O_reg"),
        StratumFiberData(column(2), 0, cohomology(projective(1)), "{0}"),
    ), "springer-sl2")


def minimal_sln(n: int) -> ResolutionDescriptor:
    """``T^*P^(n-1) -> closure of O_min`` in sl_n."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return ResolutionDescriptor(2 * n - 2, (
        StratumFiberData(hook(n), 2 * n - 2, _point(), "O_min"),
        StratumFiberData(column(n), 0, cohomology(projective(n - 1)), "{0}"),
    ), f"minimal-sln n={n}")


def minimal_sp2n(n: int) -> ResolutionDescriptor:
    """Total space of ``O(-2)`` on ``P^(2n-1)`` -> closure of O_min in sp_2n.

    Labels are Jordan types in ``2n`` dimensions.  Not semismall once
    ``n >= 2`` (fibre ``P^(2n-1)`` over a codimension-``2n`` point).
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return ResolutionDescriptor(2 * n, (
        StratumFiberData(hook(2 * n), 2 * n, _point(), "O_min"),
        StratumFiberData(column(2 * n), 0, cohomology(projective(2 * n - 1)), "{0}"),
    ), f"minimal-sp2n n={n}")


def subreg_sln(n: int) -> ResolutionDescriptor:
    """Springer resolution restricted to ``O_reg ∪ O_subreg``.

    The subregular Springer fibre is ``n - 1`` lines in an ``A_(n-1)`` chain.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    d = n * n - n
    return ResolutionDescriptor(d, (
        StratumFiberData(row(n), d, _point(), "O_reg"),
        StratumFiberData(hook(n, n - 1), d - 2, dynkin_chain(n - 1), "O_subreg"),
    ), f"subreg-sln n={n}")


def springer_sl3_u() -> ResolutionDescriptor:
    r = subreg_sln(3)
    return ResolutionDescriptor(r.total_dim, r.strata, "springer-sl3-U")


def richardson_sl4_22() -> ResolutionDescriptor:
    """``T^*Gr(2,4) -> closure of O_(2,2)``; fibre P^1 over O_min, Gr(2,4) over 0."""
    lam = Partition((2, 2))
    return ResolutionDescriptor(8, (
        StratumFiberData(lam, orbit_dim(lam), _point(), "O_(2,2)"),
        StratumFiberData(hook(4), 6, cohomology(projective(1)), "O_min"),
        StratumFiberData(column(4), 0, cohomology(grassmannian(2, 4)), "{0}"),
    ), "richardson-sl4-22")


REGISTRY: dict[str, Callable[..., ResolutionDescriptor]] = {
    "springer-sl2": springer_sl2,
    "minimal-sln": minimal_sln,
    "minimal-sp2n": minimal_sp2n,
    "subreg-sln": subreg_sln,
    "springer-sl3-U": springer_sl3_u,
    "richardson-sl4-22": richardson_sl4_22,
}

NEEDS_N = {"minimal-sln", "minimal-sp2n", "subreg-sln"}


def registered(name: str, n: int | None = None) -> ResolutionDescriptor:
    try:
        factory = REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown resolution {name!r}; known: {', '.join(REGISTRY)}") from None
    if name in NEEDS_N:
        if n is None:
            raise DomainError(f"resolution {name!r} needs n")
        return factory(n)
    return factory()
