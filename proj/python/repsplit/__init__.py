"""Exact irreducible decomposition of transitive permutation representations.

The heavy lifting lives in the compiled extension ``_repsplit``; this wrapper
adds dict-returning conveniences on top of its JSON interfaces.
"""

import json as _json

from _repsplit import (  # noqa: F401
    ArtifactMismatchError,
    DegreeMismatchError,
    MalformedInputError,
    NotABijectionError,
    NotTransitiveError,
    report,
    split_json,
    tables_json,
    verify,
)


def split(generators, format="cycles", seed=0, precision=64, with_basis=False):
    """Decompose a transitive permutation representation.

    Returns the artifact as a dict: degree, rank, suborbits, field and the
    component list with exact projector coefficients.
    """
    return _json.loads(split_json(generators, format, seed, precision, with_basis))


def tables(generators, format="cycles"):
    """Suborbit data and the structure-constant tensor as a dict."""
    return _json.loads(tables_json(generators, format))


__all__ = [
    "split",
    "split_json",
    "tables",
    "tables_json",
    "verify",
    "report",
    "MalformedInputError",
    "NotABijectionError",
    "DegreeMismatchError",
    "NotTransitiveError",
    "ArtifactMismatchError",
]
