"""Branch data, exact invariants and slope bounds of primitive cyclic
covering fibrations.

Everything is exact: rationals are returned as strings "p/q" (use
``fractions.Fraction`` to compute with them), and structured data (germs,
models, reports) crosses the boundary as JSON.
"""

import json as _json
from fractions import Fraction

from ._core import (
    CyclicSlopeError,
    blowup_transition,
    coprime_shift_check,
    coprime_shift_witness,
    derive_r,
    genus_hypothesis_holds,
    multiplicity_sequence,
    product_example,
    resolvable_search,
    slope_constants,
    standardize,
)
from . import _core


def rational(text):
    """Parses the canonical 'p/q' string into a Fraction."""
    return Fraction(text)


def lambda_lower(g, h, n):
    return Fraction(_core.lambda_lower(g, h, n))


def lambda_upper(g, n):
    return Fraction(_core.lambda_upper(g, n))


def enumerate_germs(n, r, max_nodes, max_mult=0, max_depth=8):
    """All valid fiber germs within the budget, as dicts."""
    return [_json.loads(g) for g in _core.enumerate_germs(n, r, max_nodes, max_mult, max_depth)]


def validate_germ(germ):
    return _json.loads(_core.validate_germ(_json.dumps(germ)))


def resolve_germ(germ):
    """Resolves a germ (dict) into its index ledger (dict)."""
    return _json.loads(_core.resolve_germ(_json.dumps(germ)))


def validate_model(model):
    return _json.loads(_core.validate_model(_json.dumps(model)))


def invariant_report(model):
    return _json.loads(_core.invariant_report(_json.dumps(model)))


def upper_bound_certificate(model):
    return _json.loads(_core.upper_bound_certificate(_json.dumps(model)))


def verify_suite(n, r, budget, max_mult=0, max_depth=8, threads=0):
    return _json.loads(_core.verify_suite(n, r, budget, max_mult, max_depth, threads))


__all__ = [
    "CyclicSlopeError",
    "blowup_transition",
    "coprime_shift_check",
    "coprime_shift_witness",
    "derive_r",
    "enumerate_germs",
    "genus_hypothesis_holds",
    "invariant_report",
    "lambda_lower",
    "lambda_upper",
    "multiplicity_sequence",
    "product_example",
    "rational",
    "resolvable_search",
    "resolve_germ",
    "slope_constants",
    "standardize",
    "upper_bound_certificate",
    "validate_germ",
    "validate_model",
    "verify_suite",
]
