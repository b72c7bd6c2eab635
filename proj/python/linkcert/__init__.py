"""Certified links in straight-line embeddings of complete graphs.

Thin wrappers over the C++ core: embeddings and certificates travel as JSON
(dicts on the Python side), exact integers as Python ints.
"""

import json

from ._linkcert import (  # noqa: F401
    PreconditionError,
    SearchExhausted,
    gauss_estimate as _gauss_estimate,
    generic_direction_shears as _generic_direction_shears,
    linking_number as _linking_number,
    construct as _construct,
    random_embedding_json as _random_embedding_json,
    required_vertices,
    seq,
    validate_embedding_json as _validate_embedding_json,
    verify_certificate as _verify_certificate,
)

__all__ = [
    "PreconditionError",
    "SearchExhausted",
    "construct",
    "gauss_estimate",
    "generic_direction",
    "linking_number",
    "random_embedding",
    "required_vertices",
    "seq",
    "validate_embedding",
    "verify_certificate",
]


def random_embedding(n, seed=0, coord_range=10**6):
    """Seeded general-position embedding of K_n as a dict."""
    return json.loads(_random_embedding_json(n, seed, str(coord_range)))


def validate_embedding(embedding):
    """(ok, summary) for the three general-position invariants."""
    return _validate_embedding_json(json.dumps(embedding))


def linking_number(embedding, cycle_a, cycle_b):
    """Exact linking number of two vertex-disjoint cycles."""
    return _linking_number(json.dumps(embedding), list(cycle_a), list(cycle_b))


def gauss_estimate(embedding, cycle_a, cycle_b):
    """Numerical Gauss-integral estimate (test oracle)."""
    return _gauss_estimate(json.dumps(embedding), list(cycle_a), list(cycle_b))


def generic_direction(embedding, seed=0):
    """Shear pair (a, b) of a direction generic for the whole embedding."""
    return _generic_direction_shears(json.dumps(embedding), seed)


def construct(embedding, theorem, seed=0, max_tuples=0, relax_sizes=False):
    """Run a theorem engine; returns the certificate as a dict."""
    return json.loads(
        _construct(json.dumps(embedding), theorem, seed, max_tuples, relax_sizes)
    )


def verify_certificate(embedding, certificate):
    """(ok, detail) after recomputing the linking matrix from coordinates."""
    return _verify_certificate(json.dumps(embedding), json.dumps(certificate))
