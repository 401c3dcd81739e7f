"""Decomposition matrices from stalk tables.

The class of a complex in the Grothendieck group of constructible sheaves
is recorded by the Euler characteristic of its stalk on each stratum.
Derived reduction mod ``p`` preserves these numbers, so the class of
``F ⊗ IC_Z(lam)`` equals that of ``IC_Q(lam)``, and solving

    class(IC_Q(lam)) = sum_mu d[lam, mu] * class(IC_F(mu))

top-down in dominance order gives the decomposition numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DomainError, InconsistencyError
from .gradedz import CoefficientSpec, RATIONAL, euler, prime_field
from .partitions import (
    Partition,
    dominance_leq,
    is_ell_regular,
    linear_extension,
    springer_dual,
)
from .stalkcalc import (
    CaseId,
    Sl2Cone,
    Sl3Cone,
    Sl4TwoTwo,
    SlnMinimal,
    ic_stalk_table,
    skyscraper_table,
)
from .stalktable import StalkTable

ClassVector = dict  # Partition -> int


def class_vector(t: StalkTable) -> dict[Partition, int]:
    """Stratumwise Euler characteristics of a field-coefficient table."""
    if not t.coefficients.is_field:
        raise DomainError("class vectors need field coefficients")
    return {s.label: euler(s.stalk) for s in t.strata}


@dataclass(frozen=True)
class DecompositionMatrix:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple = ()
    col_labels: tuple = ()

    def entry(self, r, c) -> int:
        return self.entries[self.rows.index(str(r))][self.cols.index(str(c))]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols), "entries": self.as_lists()}

    def render(self) -> str:
        width = max([len(c) for c in self.cols] + [len(str(x)) for r in self.entries for x in r])
        lead = max(len(r) for r in self.rows)
        lines = [" " * lead + "  " + " ".join(c.rjust(width) for c in self.cols)]
        for r, vals in zip(self.rows, self.entries):
            lines.append(r.ljust(lead) + "  " + " ".join(str(v).rjust(width) for v in vals))
        return "\n".join(lines)


def _check_unitriangular(family: Mapping[Partition, Mapping[Partition, int]], what: str):
    for lam, vec in family.items():
        if vec.get(lam) != 1:
            raise InconsistencyError(f"{what} class of {lam} has diagonal {vec.get(lam)}, expected 1")
        for mu, v in vec.items():
            if v and not dominance_leq(mu, lam):
                raise InconsistencyError(f"{what} class of {lam} is nonzero off its closure at {mu}")


def solve_decomposition(
    char0: Mapping[Partition, Mapping[Partition, int]],
    modp: Mapping[Partition, Mapping[Partition, int]],
) -> DecompositionMatrix:
    """Unique ``d`` with ``char0[lam] = sum_mu d[lam, mu] * modp[mu]``.

    Rows and columns are in increasing orbit dimension.
    """
    if set(char0) != set(modp):
        raise DomainError("characteristic-zero and modular families must share labels")
    _check_unitriangular(char0, "characteristic-zero")
    _check_unitriangular(modp, "modular")
    order = linear_extension(list(char0))
    rows = []
    for lam in order:
        residual = {mu: char0[lam].get(mu, 0) for mu in order}
        d = {}
        for mu in reversed(order):
            coeff = residual[mu]
            if coeff < 0:
                raise InconsistencyError(f"negative decomposition number d[{lam},{mu}] = {coeff}")
            d[mu] = coeff
            if coeff:
                for nu, v in modp[mu].items():
                    residual[nu] -= coeff * v
        rows.append(tuple(d[mu] for mu in order))
    labels = tuple(str(p) for p in order)
    return DecompositionMatrix(labels, labels, tuple(rows), tuple(order), tuple(order))


def symmetric_group_submatrix(d: DecompositionMatrix, ell: int) -> DecompositionMatrix:
    """Rows ``S_(lam')``, columns ``D_(mu')`` for ``ell``-regular ``mu'``."""
    keep = [j for j, mu in enumerate(d.col_labels) if is_ell_regular(springer_dual(mu), ell)]
    rows = tuple(f"S_({springer_dual(lam).compact()})" for lam in d.row_labels)
    cols = tuple(f"D_({springer_dual(d.col_labels[j]).compact()})" for j in keep)
    entries = tuple(tuple(r[j] for j in keep) for r in d.entries)
    return DecompositionMatrix(
        rows, cols, entries,
        tuple(springer_dual(lam) for lam in d.row_labels),
        tuple(springer_dual(d.col_labels[j]) for j in keep),
    )


# -- registered chains of closures -------------------------------------------

def _chain(name: str, n: int | None) -> tuple[int, list[CaseId | None]]:
    """Closures whose IC tables give one class each; ``None`` is the point."""
    if name in ("sl2", "sl2-cone"):
        return 2, [None, Sl2Cone()]
    if name in ("sl3", "sl3-cone"):
        return 3, [None, SlnMinimal(3), Sl3Cone()]
    if name in ("sl4-two-two", "sl4-22", "sl4"):
        return 4, [None, SlnMinimal(4), Sl4TwoTwo()]
    if name in ("sln-minimal",):
        if n is None:
            raise DomainError("sln-minimal needs n")
        return n, [None, SlnMinimal(n)]
    raise DomainError(f"no decomposition chain named {name!r}")


DECOMPOSITION_CASES = ("sl2", "sl3", "sl4-two-two", "sln-minimal")


def chain_tables(name: str, k: CoefficientSpec, n: int | None = None) -> list[StalkTable]:
    size, chain = _chain(name, n)
    return [skyscraper_table(size, k) if c is None else ic_stalk_table(c, k) for c in chain]


def family(tables: Sequence[StalkTable]) -> dict[Partition, dict[Partition, int]]:
    """Class vectors keyed by the open stratum of each table."""
    return {t.strata[0].label: class_vector(t) for t in tables}


def decomposition_matrix(name: str, p: int, n: int | None = None) -> DecompositionMatrix:
    char0 = family(chain_tables(name, RATIONAL, n))
    modp = family(chain_tables(name, prime_field(p), n))
    return solve_decomposition(char0, modp)


def reconstruct(d: DecompositionMatrix, modp) -> dict[Partition, dict[Partition, int]]:
    """``sum_mu d[lam, mu] * modp[mu]`` for every row."""
    out = {}
    for lam, row in zip(d.row_labels, d.entries):
        acc: dict[Partition, int] = {}
        for mu, c in zip(d.col_labels, row):
            for nu, v in modp[mu].items():
                acc[nu] = acc.get(nu, 0) + c * v
        out[lam] = {k: v for k, v in acc.items() if v}
    return out


__all__ = [
    "ClassVector",
    "DecompositionMatrix",
    "class_vector",
    "solve_decomposition",
    "symmetric_group_submatrix",
    "decomposition_matrix",
    "chain_tables",
    "family",
    "reconstruct",
]
