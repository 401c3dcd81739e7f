"""Per-stratum stalk cohomology of a constructible complex."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .gradedz import CoefficientSpec, FGAbGroup, GradedGroup
from .partitions import Partition

PERVERSITIES = ("p", "p+")


@dataclass(frozen=True)
class Stratum:
    label: Partition
    dim: int
    stalk: GradedGroup
    name: str = ""

    @property
    def display(self) -> str:
        return self.name or str(self.label)


@dataclass(frozen=True)
class StalkTable:
    """Strata in decreasing dimension, each with its stalk cohomology."""

    strata: tuple[Stratum, ...]
    coefficients: CoefficientSpec
    perversity: str = "p"
    title: str = ""

    def __post_init__(self):
        if self.perversity not in PERVERSITIES:
            raise DomainError(f"unknown perversity {self.perversity!r}")
        dims = [s.dim for s in self.strata]
        if any(a < b for a, b in zip(dims, dims[1:])):
            raise DomainError("strata must be listed by decreasing dimension")
        for s in self.strata:
            if s.stalk.coefficients != self.coefficients:
                raise DomainError(f"stratum {s.display} has coefficients {s.stalk.coefficients}")

    def __getitem__(self, label) -> GradedGroup:
        return self.stratum(label).stalk

    def stratum(self, label) -> Stratum:
        if isinstance(label, str):
            label = Partition.parse(label)
        for s in self.strata:
            if s.label == label:
                return s
        raise KeyError(label)

    @property
    def labels(self) -> list[Partition]:
        return [s.label for s in self.strata]

    @property
    def total_dim(self) -> int:
        return self.strata[0].dim

    def degree_range(self) -> tuple[int, int]:
        ds = [d for s in self.strata for d in s.stalk.degrees]
        return (min(ds), max(ds)) if ds else (0, 0)

    def satisfies_support(self) -> bool:
        """Stalk support bounds for the table's perversity.

        ``p``: stratum ``S`` vanishes above ``-dim S``.  ``p+`` over Z: it
        vanishes above ``-dim S + 1`` and is torsion in degree ``-dim S + 1``.
        Both require the open stratum to be rank one in degree ``-dim``.
        """
        top = self.strata[0]
        if top.stalk != GradedGroup({-top.dim: FGAbGroup(1)}, self.coefficients):
            return False
        for s in self.strata:
            if self.perversity == "p" or self.coefficients.is_field:
                if any(d > -s.dim for d in s.stalk.degrees):
                    return False
            else:
                if any(d > -s.dim + 1 for d in s.stalk.degrees):
                    return False
                if not s.stalk[-s.dim + 1].is_torsion:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "coefficients": str(self.coefficients),
            "perversity": self.perversity,
            "strata": [
                {"label": str(s.label), "dim": s.dim, "groups": s.stalk.to_json()}
                for s in self.strata
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StalkTable":
        k = CoefficientSpec.parse(data["coefficients"])
        strata = tuple(
            Stratum(Partition.parse(s["label"]), int(s["dim"]), GradedGroup.from_json(s["groups"], k))
            for s in data["strata"]
        )
        return cls(strata, k, data.get("perversity", "p"), data.get("title", ""))
