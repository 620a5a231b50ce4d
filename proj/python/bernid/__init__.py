"""Exact Bernoulli and Euler polynomials with mechanical identity checks."""

from ._core import (
    bbar,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_str,
    catalog,
    catalog_ids,
    dunne_schubert_residual,
    euler_at_zero,
    euler_poly,
    euler_poly_str,
    harmonic,
    beta_hockey_stick_residual,
    load_cache,
    save_cache,
    verify,
    verify_sweep,
)

__all__ = [
    "bbar",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_str",
    "catalog",
    "catalog_ids",
    "dunne_schubert_residual",
    "euler_at_zero",
    "euler_poly",
    "euler_poly_str",
    "harmonic",
    "beta_hockey_stick_residual",
    "load_cache",
    "save_cache",
    "verify",
    "verify_sweep",
]
