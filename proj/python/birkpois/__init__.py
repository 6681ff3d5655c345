"""Python bindings for the birkpois C++ core."""

import json as _json

from ._core import (
    DomainError,
    birkhoff_factor,
    canonical_rep,
    cartan_embed,
    chart_of,
    cp1_family,
    dimensions,
    grassmann_equivariant_pi,
    grassmann_local_pi,
    iwasawa_factor,
    leaf_factorize,
    moment_values,
    omega_matrix,
    pi_rank,
    principal_minors,
    run_cli,
    suite_names,
)
from ._core import verify as _verify


def verify(suite="all", seed=1, tol=1e-9, fd_step=1e-5):
    """Run a verification suite and return the parsed report."""
    return _json.loads(_verify(suite, seed, tol, fd_step))


def verify_json(suite="all", seed=1, tol=1e-9, fd_step=1e-5):
    """Same report as `bp verify`, as the exact JSON text."""
    return _verify(suite, seed, tol, fd_step)


__all__ = [
    "DomainError",
    "birkhoff_factor",
    "canonical_rep",
    "cartan_embed",
    "chart_of",
    "cp1_family",
    "dimensions",
    "grassmann_equivariant_pi",
    "grassmann_local_pi",
    "iwasawa_factor",
    "leaf_factorize",
    "moment_values",
    "omega_matrix",
    "pi_rank",
    "principal_minors",
    "run_cli",
    "suite_names",
    "verify",
    "verify_json",
]
