"""Graded finitely generated abelian groups.

Every complex over a point is, up to isomorphism, the sum of its shifted
cohomology groups (Z is hereditary), so a :class:`GradedGroup` -- one
finitely generated abelian group per degree -- is a faithful model of the
derived category of a point.  All operations are at the level of
cohomology.

Torsion is stored as elementary divisors (prime powers), so ``Z/6`` is kept
as ``[2, 3]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .errors import ContainmentError, DomainError
from .intlinalg import is_prime, prime_of, prime_power_factors


@dataclass(frozen=True)
class CoefficientSpec:
    """Coefficient ring: ``"Q"``, ``"Z"`` or ``"F"`` with a prime ``p``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "F"):
            raise DomainError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "F" and not is_prime(self.p):
            raise DomainError(f"F_p needs a prime p, got {self.p}")
        if self.kind != "F" and self.p != 0:
            raise DomainError(f"{self.kind} takes no characteristic argument")

    @classmethod
    def parse(cls, text: str) -> "CoefficientSpec":
        """``q``, ``z`` or ``f<p>`` (case-insensitive)."""
        t = text.strip().lower()
        if t == "q":
            return RATIONAL
        if t == "z":
            return INTEGERS
        if t.startswith("f") and t[1:].isdigit():
            return prime_field(int(t[1:]))
        raise DomainError(f"bad coefficient spec {text!r} (expected q, z or f<p>)")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return {"Q": "q", "Z": "z"}.get(self.kind) or f"f{self.p}"

    def symbol(self) -> str:
        return {"Q": "ℚ", "Z": "ℤ"}.get(self.kind) or f"𝔽{self.p}"


RATIONAL = CoefficientSpec("Q")
INTEGERS = CoefficientSpec("Z")


def prime_field(p: int) -> CoefficientSpec:
    return CoefficientSpec("F", p)


@dataclass(frozen=True)
class FGAbGroup:
    """``Z^rank`` plus cyclic groups of prime-power order."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise DomainError(f"negative rank {self.rank}")
        tors = tuple(sorted(int(t) for t in self.torsion))
        for t in tors:
            if t < 2 or len(prime_power_factors(t)) != 1:
                raise DomainError(f"torsion entry {t} is not a prime power >= 2")
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def cyclic(cls, n: int) -> "FGAbGroup":
        """``Z/n``; ``n = 0`` gives ``Z`` and ``n = 1`` the zero group."""
        if n == 0:
            return cls(1)
        return cls(0, tuple(prime_power_factors(n)) if abs(n) > 1 else ())

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_torsion(self) -> bool:
        return self.rank == 0

    def torsion_part(self) -> "FGAbGroup":
        return FGAbGroup(0, self.torsion)

    def p_torsion_count(self, p: int) -> int:
        return sum(1 for t in self.torsion if t % p == 0)

    def __add__(self, other: "FGAbGroup") -> "FGAbGroup":
        return FGAbGroup(self.rank + other.rank, self.torsion + other.torsion)

    def contains(self, other: "FGAbGroup") -> bool:
        """Componentwise containment of ranks and torsion multisets."""
        return other.rank <= self.rank and not (Counter(other.torsion) - Counter(self.torsion))

    def __sub__(self, other: "FGAbGroup") -> "FGAbGroup":
        if not self.contains(other):
            raise ContainmentError(f"{other.render()} does not embed in {self.render()}")
        left = Counter(self.torsion)
        left.subtract(other.torsion)
        return FGAbGroup(self.rank - other.rank, tuple(left.elements()))

    def scaled(self, m: int) -> "FGAbGroup":
        return FGAbGroup(self.rank * m, self.torsion * m)

    def render(self, coefficients: "CoefficientSpec | None" = None) -> str:
        """``ℤ^2 ⊕ ℤ/2 ⊕ ℤ/3``; field groups render as ``k``/``k^r``."""
        if self.is_zero:
            return "0"
        base = "k" if coefficients is not None and coefficients.is_field else "ℤ"
        bits = []
        if self.rank:
            bits.append(base if self.rank == 1 else f"{base}^{self.rank}")
        bits.extend(f"ℤ/{t}" for t in self.torsion)
        return " ⊕ ".join(bits)

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: Mapping) -> "FGAbGroup":
        return cls(int(data["rank"]), tuple(data.get("torsion", ())))


ZERO = FGAbGroup()


@dataclass(frozen=True)
class GradedGroup:
    """Finitely supported map degree -> :class:`FGAbGroup`.

    Zero groups are dropped on construction, so equality is structural.
    """

    groups: Mapping[int, FGAbGroup] = field(default_factory=dict)
    coefficients: CoefficientSpec = INTEGERS

    def __post_init__(self):
        clean = {}
        for d, g in self.groups.items():
            if not isinstance(g, FGAbGroup):
                g = FGAbGroup(int(g))
            if g.is_zero:
                continue
            if self.coefficients.is_field and g.torsion:
                raise DomainError(f"torsion {g.torsion} in degree {d} over a field")
            clean[int(d)] = g
        object.__setattr__(self, "groups", dict(sorted(clean.items())))

    @classmethod
    def from_ranks(cls, ranks: Mapping[int, int], coefficients: CoefficientSpec = INTEGERS):
        return cls({d: FGAbGroup(r) for d, r in ranks.items()}, coefficients)

    @classmethod
    def point(cls, degree: int = 0, coefficients: CoefficientSpec = INTEGERS):
        """The coefficient ring itself placed in a single degree."""
        return cls({degree: FGAbGroup(1)}, coefficients)

    def __getitem__(self, d: int) -> FGAbGroup:
        return self.groups.get(d, ZERO)

    def __eq__(self, other):
        if not isinstance(other, GradedGroup):
            return NotImplemented
        return self.coefficients == other.coefficients and self.groups == other.groups

    def __hash__(self):
        return hash((self.coefficients, tuple(self.groups.items())))

    @property
    def degrees(self) -> list[int]:
        return list(self.groups)

    @property
    def is_zero(self) -> bool:
        return not self.groups

    def rank(self, d: int) -> int:
        return self[d].rank

    def ranks(self) -> dict[int, int]:
        return {d: g.rank for d, g in self.groups.items() if g.rank}

    def replace(self, groups) -> "GradedGroup":
        return GradedGroup(groups, self.coefficients)

    def to_json(self) -> dict:
        return {str(d): g.to_json() for d, g in self.groups.items()}

    @classmethod
    def from_json(cls, data: Mapping, coefficients: CoefficientSpec = INTEGERS):
        return cls({int(d): FGAbGroup.from_json(g) for d, g in data.items()}, coefficients)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(f"{g.render(self.coefficients)}@{d}" for d, g in self.groups.items())

    def __repr__(self):
        return f"GradedGroup[{self.coefficients}]({self.render()})"


def _same_coefficients(a: GradedGroup, b: GradedGroup):
    if a.coefficients != b.coefficients:
        raise DomainError(f"coefficient mismatch: {a.coefficients} vs {b.coefficients}")


def shift(c: GradedGroup, s: int) -> GradedGroup:
    """``C[s]``: degree ``d`` of the result is degree ``d + s`` of ``c``."""
    return c.replace({d - s: g for d, g in c.groups.items()})


def truncate_le(c: GradedGroup, i: int) -> GradedGroup:
    return c.replace({d: g for d, g in c.groups.items() if d <= i})


def truncate_le_plus(c: GradedGroup, i: int) -> GradedGroup:
    """Keep degrees ``<= i`` and the torsion subgroup in degree ``i + 1``.

    Over a field this is plain :func:`truncate_le`.
    """
    out = {d: g for d, g in c.groups.items() if d <= i}
    if not c.coefficients.is_field:
        out[i + 1] = c[i + 1].torsion_part()
    return c.replace(out)


def dual_point(c: GradedGroup) -> GradedGroup:
    """``RHom(-, k)`` on a point.

    Free parts go from degree ``d`` to ``-d``; ``Z/l^a`` in degree ``d``
    goes to degree ``1 - d``.
    """
    out: dict[int, FGAbGroup] = {}
    for d, g in c.groups.items():
        if g.rank:
            out[-d] = out.get(-d, ZERO) + FGAbGroup(g.rank)
        if g.torsion:
            out[1 - d] = out.get(1 - d, ZERO) + FGAbGroup(0, g.torsion)
    return c.replace(out)


def change_coefficients(c: GradedGroup, k: CoefficientSpec) -> GradedGroup:
    """``k ⊗^L_Z C`` for ``k = Q`` or ``F_p``.

    Over ``F_p`` each ``Z/p^a`` in degree ``d`` contributes a copy of ``k``
    in degrees ``d`` and ``d - 1``; torsion prime to ``p`` dies.
    """
    if c.coefficients != INTEGERS:
        raise DomainError("change_coefficients expects integer coefficients")
    if not k.is_field:
        raise DomainError("target coefficients must be a field (Q or F_p)")
    ranks: Counter[int] = Counter()
    for d, g in c.groups.items():
        ranks[d] += g.rank
        if k.kind == "F":
            t = g.p_torsion_count(k.p)
            ranks[d] += t
            ranks[d - 1] += t
    return GradedGroup.from_ranks(ranks, k)


def direct_sum(a: GradedGroup, b: GradedGroup) -> GradedGroup:
    _same_coefficients(a, b)
    out = dict(a.groups)
    for d, g in b.groups.items():
        out[d] = out.get(d, ZERO) + g
    return a.replace(out)


def scale(a: GradedGroup, m: int) -> GradedGroup:
    """``a`` summed with itself ``m`` times."""
    if m < 0:
        raise DomainError(f"negative multiplicity {m}")
    return a.replace({d: g.scaled(m) for d, g in a.groups.items()})


def contains(a: GradedGroup, b: GradedGroup) -> bool:
    return all(a[d].contains(g) for d, g in b.groups.items())


def subtract(a: GradedGroup, b: GradedGroup) -> GradedGroup:
    """Remove a summand ``b`` from ``a`` (field coefficients only)."""
    _same_coefficients(a, b)
    if not a.coefficients.is_field:
        raise DomainError("subtract is only defined over field coefficients")
    if not contains(a, b):
        raise ContainmentError(f"{b.render()} is not a summand of {a.render()}")
    out = dict(a.groups)
    for d, g in b.groups.items():
        out[d] = out[d] - g
    return a.replace(out)


def euler(c: GradedGroup) -> int:
    """Alternating sum of ranks; torsion is ignored."""
    return sum((-1) ** (d % 2) * g.rank for d, g in c.groups.items())


def torsion_primes(c: GradedGroup) -> set[int]:
    return {prime_of(t) for g in c.groups.values() for t in g.torsion}
