"""Kostka-Foulkes polynomials by the charge statistic.

In characteristic zero the stalk of ``IC(closure O_lam, Q)`` at a point of
``O_mu`` is pure and even, and its Poincare polynomial (in ``q`` = degree
two) is the renormalised Kostka-Foulkes polynomial

    q^(n(mu) - n(lam)) * K_{lam,mu}(q^-1).

This is the reference the modular tables are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import DomainError
from .partitions import Partition, dominance_leq, n_stat


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in ``q`` with integer coefficients, stored sparsely."""

    coefficients: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(e): int(c) for e, c in self.coefficients.items() if c}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @classmethod
    def from_list(cls, coeffs) -> "QPolynomial":
        return cls(dict(enumerate(coeffs)))

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, int):
            return self.coefficients == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __getitem__(self, e: int) -> int:
        return self.coefficients.get(e, 0)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self.coefficients)
        for e, c in other.coefficients.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        return max(self.coefficients, default=-1)

    def __call__(self, q):
        return sum(c * q**e for e, c in self.coefficients.items())

    def reversed_shift(self, top: int) -> "QPolynomial":
        """``q^top * P(1/q)``."""
        return QPolynomial({top - e: c for e, c in self.coefficients.items()})

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for e, c in self.coefficients.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {str(e): c for e, c in self.coefficients.items()}


@dataclass(frozen=True)
class Tableau:
    """Rows of a semistandard Young tableau, top row first."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        top = max((x for r in self.rows for x in r), default=0)
        flat = [x for r in self.rows for x in r]
        return tuple(flat.count(i) for i in range(1, top + 1))

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def reading_word(self) -> list[int]:
        """Rows from bottom to top, each read left to right."""
        return [x for r in reversed(self.rows) for x in r]


def _horizontal_strips(shape: tuple[int, ...], outer: tuple[int, ...], k: int):
    """Ways to add ``k`` boxes to ``shape``, no two in a column, staying inside ``outer``."""
    rows = len(outer)
    shape = shape + (0,) * (rows - len(shape))

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        # row i may grow up to the previous row's *old* length
        cap = outer[i] if i == 0 else min(outer[i], shape[i - 1])
        for add in range(min(left, cap - shape[i]), -1, -1):
            yield from rec(i + 1, left - add, acc + [shape[i] + add])

    yield from rec(0, k, [])


def ssyt_enumerate(lam: Partition, mu: Partition) -> list[Tableau]:
    """All semistandard tableaux of shape ``lam`` and content ``mu``.

    Entries ``1, 2, ...`` are placed one value at a time as horizontal strips.
    """
    if lam.size != mu.size:
        raise DomainError(f"shape {lam} and content {mu} have different sizes")
    outer = lam.parts
    out = []

    def rec(value, shape, fill):
        if value > len(mu):
            if shape == outer:
                out.append(Tableau(tuple(tuple(r) for r in fill)))
            return
        for new in _horizontal_strips(shape, outer, mu[value - 1]):
            rows = [list(r) for r in fill] + [[] for _ in range(len(new) - len(fill))]
            for i, (a, b) in enumerate(zip(shape + (0,) * (len(new) - len(shape)), new)):
                rows[i].extend([value] * (b - a))
            new_shape = tuple(x for x in new if x)
            rec(value + 1, new_shape, [r for r in rows if r])

    rec(1, (), [])
    return out


def _standard_subwords(word: list[int]) -> Iterator[list[int]]:
    """Split a word of partition content into standard subwords.

    Each pass scans leftwards (cyclically) from the right end picking up
    ``1, 2, 3, ...``; the subword keeps the original relative order.
    """
    word = list(word)
    while word:
        top = max(word)
        chosen = []
        pos = len(word)
        for letter in range(1, top + 1):
            # scan left from pos-1, wrapping around
            n = len(word)
            found = None
            for step in range(1, n + 1):
                j = (pos - step) % n
                if word[j] == letter:
                    found = j
                    break
            if found is None:
                break
            chosen.append(found)
            pos = found
        chosen_set = set(chosen)
        yield [word[j] for j in sorted(chosen_set)]
        word = [w for j, w in enumerate(word) if j not in chosen_set]


def _standard_charge(word: list[int]) -> int:
    where = {x: i for i, x in enumerate(word)}
    index = 0
    total = 0
    for r in range(2, len(word) + 1):
        if where[r] > where[r - 1]:
            index += 1
        total += index
    return total


def charge_of_word(word: list[int]) -> int:
    if not word:
        return 0
    top = max(word)
    counts = [word.count(i) for i in range(1, top + 1)]
    if any(c == 0 for c in counts) or any(a < b for a, b in zip(counts, counts[1:])):
        raise DomainError(f"charge needs partition content, got counts {counts}")
    return sum(_standard_charge(sub) for sub in _standard_subwords(word))


def charge(t: Tableau) -> int:
    return charge_of_word(t.reading_word())


def kostka_foulkes(lam: Partition, mu: Partition) -> QPolynomial:
    out: dict[int, int] = {}
    for t in ssyt_enumerate(lam, mu):
        c = charge(t)
        out[c] = out.get(c, 0) + 1
    return QPolynomial(out)


def char0_ic_stalk_poly(lam: Partition, mu: Partition) -> QPolynomial:
    """Poincare polynomial of ``IC(closure O_lam, Q)[-dim O_lam]`` at ``x_mu``.

    Exponent ``i`` counts cohomology in degree ``-dim O_lam + 2i``.  Zero when
    ``O_mu`` is not in the closure.
    """
    if lam.size != mu.size:
        raise DomainError(f"partitions of different sizes: {lam}, {mu}")
    if not dominance_leq(mu, lam):
        return QPolynomial()
    k = kostka_foulkes(lam, mu)
    return k.reversed_shift(n_stat(mu) - n_stat(lam))
