"""Exact (sigma, tau)-derivations of finite group rings."""

import json

from ._drvkit import (
    CapExceeded,
    Group,
    MismatchError,
    ValidationError,
    derivation_basis,
    inner_automorphism,
    inner_derivation,
    inner_dimension,
    is_derivation,
    run_cli,
    twisted_orbits,
)
from . import _drvkit

__all__ = [
    "CapExceeded",
    "Group",
    "MismatchError",
    "ValidationError",
    "derivation_basis",
    "inner_automorphism",
    "inner_derivation",
    "inner_dimension",
    "integralize",
    "is_derivation",
    "run_cli",
    "solve_witness",
    "twisted_orbits",
]


def solve_witness(group, values, ring="Q", sigma=None, tau=None):
    """Witness report for the derivation with the given values, as a dict."""
    return json.loads(_drvkit.solve_witness_json(group, values, ring, sigma, tau))


def integralize(group, values, sigma=None, tau=None):
    """Integral witness pipeline for a Z-valued derivation, as a dict."""
    return json.loads(_drvkit.integralize_json(group, values, sigma, tau))
