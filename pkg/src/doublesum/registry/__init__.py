"""Declarative table of displayed identities with independent evaluators."""
from __future__ import annotations

from . import bernoulli_fibonacci, foundations, general, harmonic_catalan, polynomial, stirling_mstep  # noqa: F401  (registration side effects)
from .core import (
    STATUSES,
    DomainError,
    Evaluation,
    Identity,
    UnknownIdentityError,
    all_identities,
    check_witness,
    default_domain,
    evaluate_identity,
    evaluate_point,
    get_identity,
)

__all__ = [
    "STATUSES",
    "DomainError",
    "Evaluation",
    "Identity",
    "UnknownIdentityError",
    "all_identities",
    "check_witness",
    "default_domain",
    "evaluate_identity",
    "evaluate_point",
    "get_identity",
]
