"""Integral cohomology of projective spaces, Grassmannians, full flag
varieties and lens spaces, in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .gradedz import FGAbGroup, GradedGroup, INTEGERS, euler


@dataclass(frozen=True)
class SpaceDescriptor:
    """One of ``proj``, ``grass``, ``flag``, ``lens`` with integer arguments.

    ``lens(m, d)`` is ``S^(2m-1) / mu_d``.
    """

    kind: str
    args: tuple[int, ...]

    def __post_init__(self):
        k, a = self.kind, self.args
        ok = {
            "proj": len(a) == 1 and a[0] >= 0,
            "grass": len(a) == 2 and 0 <= a[0] <= a[1],
            "flag": len(a) == 1 and a[0] >= 1,
            "lens": len(a) == 2 and a[0] >= 1 and a[1] >= 1,
        }.get(k)
        if not ok:
            raise DomainError(f"invalid space descriptor {k}:{','.join(map(str, a))}")

    @classmethod
    def parse(cls, text: str) -> "SpaceDescriptor":
        """``proj:m``, ``grass:k,n``, ``flag:n`` or ``lens:m,d``."""
        kind, sep, rest = text.strip().partition(":")
        if not sep:
            raise DomainError(f"cannot parse space {text!r}")
        try:
            args = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise DomainError(f"cannot parse space {text!r}") from None
        return cls(kind, args)

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.args))}"

    @property
    def complex_dim(self) -> int:
        """Complex dimension (lens spaces are not complex; raises)."""
        if self.kind == "proj":
            return self.args[0]
        if self.kind == "grass":
            k, n = self.args
            return k * (n - k)
        if self.kind == "flag":
            n = self.args[0]
            return n * (n - 1) // 2
        raise DomainError("lens spaces have no complex dimension")


def projective(m: int) -> SpaceDescriptor:
    return SpaceDescriptor("proj", (m,))


def grassmannian(k: int, n: int) -> SpaceDescriptor:
    return SpaceDescriptor("grass", (k, n))


def full_flag(n: int) -> SpaceDescriptor:
    return SpaceDescriptor("flag", (n,))


def lens_space(m: int, d: int) -> SpaceDescriptor:
    return SpaceDescriptor("lens", (m, d))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def q_integer(m: int) -> list[int]:
    return [1] * m


def q_factorial(n: int) -> list[int]:
    out = [1]
    for m in range(1, n + 1):
        out = _poly_mul(out, q_integer(m))
    return out


def gaussian_binomial(n: int, k: int) -> list[int]:
    """Coefficients of ``[n choose k]_q``, via Pascal's q-recurrence."""
    if k < 0 or k > n:
        return [0]
    row = [[1]]  # row[k] for the current n
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = row[j] if j < m else [0]
            below = row[j - 1] if j >= 1 else [0]
            # [m, j] = [m-1, j] + q^(m-j) [m-1, j-1]
            term = [0] * (m - j) + below if j >= 1 else [0]
            size = max(len(left), len(term))
            new.append([
                (left[i] if i < len(left) else 0) + (term[i] if i < len(term) else 0)
                for i in range(size)
            ])
        row = [_trim(r) for r in new]
    return row[k]


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _even_free(coeffs) -> GradedGroup:
    return GradedGroup.from_ranks({2 * j: c for j, c in enumerate(coeffs)}, INTEGERS)


def cohomology(s: SpaceDescriptor) -> GradedGroup:
    if s.kind == "proj":
        return _even_free([1] * (s.args[0] + 1))
    if s.kind == "grass":
        k, n = s.args
        return _even_free(gaussian_binomial(n, k))
    if s.kind == "flag":
        return _even_free(q_factorial(s.args[0]))
    m, d = s.args
    groups = {0: FGAbGroup(1), 2 * m - 1: FGAbGroup(1)}
    for j in range(1, m):
        groups[2 * j] = FGAbGroup.cyclic(d)
    return GradedGroup(groups, INTEGERS)


def euler_characteristic(s: SpaceDescriptor) -> int:
    return euler(cohomology(s))
