"""Cohomology of a vector bundle with its zero section removed.

For a complex rank-``r`` bundle ``E -> B`` with Euler class ``e`` the Gysin
sequence reads

    ... -> H^{i-2r}(B) --e--> H^i(B) -> H^i(E \\ 0) -> H^{i-2r+1}(B) --e--> H^{i+1}(B) -> ...

When ``H^*(B; Z)`` is free and concentrated in even degrees it splits into

* ``i`` even: ``H^i(E \\ 0) = coker(e: H^{i-2r} -> H^i)``
* ``i`` odd:  ``H^i(E \\ 0) = ker(e: H^{i-2r+1} -> H^{i+1})``

which is what :func:`complement_cohomology` evaluates, with Smith normal
form supplying the torsion of each cokernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, PreconditionError
from .gradedz import FGAbGroup, GradedGroup, INTEGERS, CoefficientSpec
from .intlinalg import Matrix, cokernel, rank_mod_p, rank_q
from .spaces import SpaceDescriptor, cohomology, euler_characteristic, projective


@dataclass(frozen=True)
class EulerAction:
    """Multiplication by the Euler class on a free, even base.

    ``maps[i]`` is the matrix of ``e: H^{i-2r} -> H^i`` (``rank(i)`` rows,
    ``rank(i-2r)`` columns).  Missing degrees mean the zero map.
    """

    base: GradedGroup
    bundle_rank: int
    maps: dict[int, Matrix] = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        if self.bundle_rank < 1:
            raise DomainError(f"bundle rank must be >= 1, got {self.bundle_rank}")
        if self.base.coefficients != INTEGERS:
            raise PreconditionError("base cohomology must have integer coefficients")
        for d, g in self.base.groups.items():
            if d % 2 or g.torsion:
                raise PreconditionError(
                    f"base cohomology must be free and even; degree {d} holds {g.render()}"
                )
        shift = 2 * self.bundle_rank
        for i, m in self.maps.items():
            rows, cols = self.base.rank(i), self.base.rank(i - shift)
            if rows == 0 or cols == 0:
                raise DomainError(f"Euler map into degree {i} has a zero source or target")
            if len(m) != rows or any(len(r) != cols for r in m):
                raise DomainError(f"Euler map into degree {i} must be {rows}x{cols}")

    def matrix(self, i: int) -> Matrix | None:
        return self.maps.get(i)


def complement_cohomology(a: EulerAction, coefficients: CoefficientSpec = INTEGERS) -> GradedGroup:
    """``H^*(E \\ 0)`` with integer or field coefficients.

    With a field, ranks and nullities are taken directly over that field;
    this is an independent route to ``change_coefficients`` of the integer
    answer.
    """
    two_r = 2 * a.bundle_rank
    top = max(a.base.degrees, default=0)

    def map_rank(i: int) -> int:
        m = a.matrix(i)
        if m is None:
            return 0
        if coefficients.kind == "F":
            return rank_mod_p(m, coefficients.p)
        return rank_q(m)

    out: dict[int, FGAbGroup] = {}
    for i in range(0, top + two_r):
        if i % 2 == 0:
            target = a.base.rank(i)
            m = a.matrix(i)
            if m is None:
                out[i] = FGAbGroup(target)
            elif coefficients.is_field:
                out[i] = FGAbGroup(target - map_rank(i))
            else:
                free, tors = cokernel(m, target)
                out[i] = FGAbGroup(free, tuple(tors))
        else:
            source = a.base.rank(i - two_r + 1)
            out[i] = FGAbGroup(source - map_rank(i + 1))
    return GradedGroup(out, coefficients)


def cotangent_euler_action(base: SpaceDescriptor) -> EulerAction:
    """Euler class of ``T^*B`` for a compact homogeneous ``B``.

    Only the map ``H^0 -> H^top`` is nonzero; it is multiplication by the
    Euler characteristic.  The sign is irrelevant for the cokernel, so the
    positive representative is used.
    """
    if base.kind == "lens":
        raise DomainError("cotangent bundle of a lens space is not supported")
    dim = base.complex_dim
    if dim == 0:
        raise DomainError(f"{base} is a point; its cotangent bundle has rank 0")
    h = cohomology(base)
    return EulerAction(h, dim, {2 * dim: [[euler_characteristic(base)]]}, label=f"T*{base}")


def line_bundle_action_on_projective(m: int, degree_multiple: int) -> EulerAction:
    """Line bundle with Euler class ``c*t`` on ``P^m``, ``t`` the hyperplane class.

    ``H^*(P^m) = Z[t]/t^(m+1)``, so every map ``H^{2j-2} -> H^{2j}`` is ``(c)``.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    h = cohomology(projective(m))
    maps = {2 * j: [[degree_multiple]] for j in range(1, m + 1)}
    return EulerAction(h, 1, maps, label=f"O({degree_multiple}) on proj:{m}")
