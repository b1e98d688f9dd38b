"""Exact computations in q-Schur algebras of n-step flags over finite fields.

Indices are 0-based. Elements are plain dicts in the CLI's JSON formats.
"""

import json

from . import _core
from ._core import (
    AnsatzFailure,
    DomainError,
    FlagSchurError,
    Incompatible,
    NoStabilization,
    ParseError,
    TooLarge,
    UnsupportedShape,
    convolve_oracle,
    counting_lemmas,
    limit_rtt_ok,
    oracle_sweep,
    schur_rtt_ok,
)

__all__ = [
    "AnsatzFailure",
    "DomainError",
    "FlagSchurError",
    "Incompatible",
    "NoStabilization",
    "ParseError",
    "TooLarge",
    "UnsupportedShape",
    "convert",
    "convolve_oracle",
    "counting_lemmas",
    "generator",
    "limit_generator",
    "limit_multiply",
    "limit_rtt_ok",
    "multiply",
    "oracle_sweep",
    "schur_rtt_ok",
    "stabilize",
    "theta",
    "triangular",
]


def theta(n, d):
    return json.loads(_core.theta(n, d))


def generator(i, j, n, d):
    return json.loads(_core.generator(i, j, n, d))


def multiply(x, y):
    return json.loads(_core.multiply(json.dumps(x), json.dumps(y)))


def convert(x, basis):
    return json.loads(_core.convert(json.dumps(x), basis))


def stabilize(factors):
    return json.loads(_core.stabilize(factors))


def limit_generator(i, j, n):
    return json.loads(_core.limit_generator(i, j, n))


def limit_multiply(x, y):
    return json.loads(_core.limit_multiply(json.dumps(x), json.dumps(y)))


def triangular(rows):
    return json.loads(_core.triangular(rows))
