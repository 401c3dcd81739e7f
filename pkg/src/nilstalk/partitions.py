"""Partitions labelling nilpotent orbits of sl_n.

The orbit of nilpotent matrices with Jordan type ``lam`` is written O_lam.
Closure order on orbits is the dominance order on partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import comb

from .errors import DomainError
from .intlinalg import is_prime


@total_ordering
@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Comparison operators give a *total* order (lexicographic on parts), used
    only for deterministic sorting.  Dominance is :func:`dominance_leq`.
    """

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"2,1,1"``.  Whitespace is ignored."""
        text = text.strip()
        if not text:
            raise DomainError("empty partition string")
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise DomainError(f"cannot parse partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {text!r}")
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({str(self)!r})"

    def compact(self) -> str:
        """Exponential notation, e.g. ``2,1,1`` -> ``21^2``."""
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            m = j - i
            out.append(f"{self.parts[i]}" + (f"^{m}" if m > 1 else ""))
            i = j
        return "".join(out) if all(p < 10 for p in self.parts) else " ".join(out)


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1))


def _partial_sums(parts, length):
    out, s = [], 0
    for i in range(length):
        s += parts[i] if i < len(parts) else 0
        out.append(s)
    return out


def _check_sizes(a: Partition, b: Partition):
    if a.size != b.size:
        raise DomainError(f"partitions of different sizes: {a} ({a.size}) vs {b} ({b.size})")


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu <= lam`` in dominance order."""
    _check_sizes(mu, lam)
    length = max(len(mu), len(lam))
    return all(a <= b for a, b in zip(_partial_sums(mu, length), _partial_sums(lam, length)))


def closure_contains(lam: Partition, mu: Partition) -> bool:
    """True iff O_mu lies in the closure of O_lam."""
    return dominance_leq(mu, lam)


def orbit_dim(lam: Partition) -> int:
    """Complex dimension of O_lam in sl_n: n^2 minus the sum of squared conjugate parts."""
    n = lam.size
    return n * n - sum(c * c for c in conjugate(lam).parts)


def n_stat(lam: Partition) -> int:
    return sum(i * p for i, p in enumerate(lam.parts))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> [str(p) for p in partitions_of(3)]
    ['3', '2,1', '1,1,1']
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return out


def springer_dual(lam: Partition) -> Partition:
    """Relabel between orbits and Weyl group modules (transposition)."""
    return conjugate(lam)


def is_ell_regular(lam: Partition, ell: int) -> bool:
    """No part is repeated ``ell`` or more times."""
    if not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    return all(lam.parts.count(v) < ell for v in set(lam.parts))


def hook(n: int, k: int = 2) -> Partition:
    """Partition ``(k, 1^(n-k))``; with the default this is the minimal orbit label."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    return Partition([k] + [1] * (n - k))


def column(n: int) -> Partition:
    """``(1^n)``, the zero orbit."""
    return Partition([1] * n)


def row(n: int) -> Partition:
    """``(n)``, the regular orbit."""
    return Partition([n])


def linear_extension(parts: list[Partition]) -> list[Partition]:
    """Sort by increasing orbit dimension; ties broken lexicographically."""
    return sorted(parts, key=lambda p: (orbit_dim(p), p.parts))


# n_stat(lam) also equals sum of C(lam'_i, 2); kept here as a cross-check helper.
def n_stat_from_conjugate(lam: Partition) -> int:
    return sum(comb(c, 2) for c in conjugate(lam).parts)
