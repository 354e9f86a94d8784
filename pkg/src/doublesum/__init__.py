"""Exact-rational verification of double sums built from binomial transform pairs."""
from __future__ import annotations

from .exact import Q, format_rational, parse_rational
from .registry import evaluate_identity, get_identity, all_identities
from .verifier import verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "Q",
    "all_identities",
    "evaluate_identity",
    "format_rational",
    "get_identity",
    "parse_rational",
    "verify",
    "verify_all",
]
