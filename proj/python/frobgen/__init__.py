"""Frobenius descent operators over F_p[x1..xd].

Polynomials are passed as text such as ``"x1^2 + 2*x2"``; structured
results come back as plain dicts and lists.
"""

import json

from . import _core
from ._core import FrobgenError

__all__ = [
    "FrobgenError",
    "normalize",
    "power",
    "frobenius",
    "decompose",
    "chain",
    "witness",
    "verify",
    "power_witness",
    "generator_witness",
    "apply",
    "example_quadric",
]

normalize = _core.normalize
power = _core.power
frobenius = _core.frobenius


def decompose(p, d, f, n):
    """p^n-decomposition of f as ``{"n", "parts": [{"alpha", "root"}]}``."""
    return json.loads(_core.decompose(p, d, f, n))


def chain(p, d, f, **limits):
    """Chain I_n(f^(p^n - 1)) up to its stabilization level s."""
    return json.loads(_core.chain(p, d, f, **limits))


def witness(p, d, f, expand=False, **limits):
    """Verified certificate for an operator Q with Q(1/f) = 1/f^p."""
    return json.loads(_core.witness(p, d, f, expand, **limits))


def verify(certificate):
    """Re-runs every check of a certificate dict; returns verdict and transcript."""
    return json.loads(_core.verify(json.dumps(certificate)))


def power_witness(p, d, f, e):
    """Operator P with P(1/f) = 1/f^(p^e)."""
    return json.loads(_core.power_witness(p, d, f, e))


def generator_witness(p, d, f, k):
    """Operator P with P(1/f) = 1/f^k."""
    return json.loads(_core.generator_witness(p, d, f, k))


def apply(op, p, d, numerator, denom_level, f):
    """Applies an operator or certificate dict to numerator / f^(p^denom_level)."""
    return json.loads(_core.apply(json.dumps(op), p, d, numerator, denom_level, f))


def example_quadric(p):
    """Witness for x1^2 + x2^2 + x3^2 + x4^2 at an odd prime p."""
    return json.loads(_core.example_quadric(p))
