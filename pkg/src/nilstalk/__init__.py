"""Intersection cohomology stalks on nilpotent orbit closures, with integral
and modular coefficients, plus the decomposition numbers they determine."""

from .decmatrix import DecompositionMatrix, decomposition_matrix, symmetric_group_submatrix
from .errors import ContainmentError, DomainError, InconsistencyError, NilstalkError, PreconditionError
from .gradedz import FGAbGroup, CoefficientSpec, GradedGroup, INTEGERS, RATIONAL, prime_field
from .kostka import QPolynomial, char0_ic_stalk_poly, kostka_foulkes
from .partitions import Partition, conjugate, dominance_leq, orbit_dim, partitions_of
from .stalkcalc import (
    CaseId,
    Sl2Cone,
    Sl3Cone,
    Sl4TwoTwo,
    SlnMinimal,
    SlnSubregRestriction,
    Sp2nMinimal,
    ic_stalk_table,
)
from .stalktable import StalkTable, Stratum

__version__ = "0.1.0"

__all__ = [
    "CaseId",
    "CoefficientSpec",
    "ContainmentError",
    "DecompositionMatrix",
    "DomainError",
    "FGAbGroup",
    "GradedGroup",
    "INTEGERS",
    "InconsistencyError",
    "NilstalkError",
    "Partition",
    "PreconditionError",
    "QPolynomial",
    "RATIONAL",
    "Sl2Cone",
    "Sl3Cone",
    "Sl4TwoTwo",
    "SlnMinimal",
    "SlnSubregRestriction",
    "Sp2nMinimal",
    "StalkTable",
    "Stratum",
    "char0_ic_stalk_poly",
    "conjugate",
    "decomposition_matrix",
    "dominance_leq",
    "ic_stalk_table",
    "kostka_foulkes",
    "orbit_dim",
    "partitions_of",
    "prime_field",
    "symmetric_group_submatrix",
]
