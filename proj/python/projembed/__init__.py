"""Quadratic embeddings of real and complex projective spaces into unit spheres."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    HermitianQuadMap,
    PreconditionError,
    RealQuadMap,
    StructuralError,
    UsageError,
    ambient_dims,
    build_complex,
    build_real,
    domain_radius,
    global_invariants,
    hopf,
    real_restriction,
    sphere_volume,
)

__all__ = [
    "DomainError",
    "HermitianQuadMap",
    "PreconditionError",
    "RealQuadMap",
    "StructuralError",
    "UsageError",
    "ambient_dims",
    "build_complex",
    "build_real",
    "domain_radius",
    "global_invariants",
    "hopf",
    "radius_pow4",
    "real_restriction",
    "run_claim_audit",
    "sphere_volume",
    "step_constants",
]


def radius_pow4(n, mode="closed"):
    """Exact r_n^4."""
    return Fraction(_core.radius_pow4(n, mode))


def step_constants(n):
    """Exact (a^2, b^2) for level n >= 2."""
    a_sq, b_sq = _core.step_constants(n)
    return Fraction(a_sq), Fraction(b_sq)


def run_claim_audit(n_max_real=4, n_max_complex=4, seed=0, samples=1000, pair_count=10000, tol=1e-8):
    """Claim audit as a list of dicts ordered by claim_id."""
    return json.loads(_core.run_claim_audit_json(n_max_real, n_max_complex, seed, samples, pair_count, tol))
