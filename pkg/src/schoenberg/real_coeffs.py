"""Coefficient sequences on real spheres: quadrature and reconstruction.

For dimension d >= 2 the degree-n coefficient of a function psi on
``[0, pi]`` is

    b_n = kappa(n, d) * integral_0^pi psi(theta) P_n(cos theta)
                                   * sin(theta)^(d-1) dtheta,

with P_n the raw order-(d-1)/2 Gegenbauer polynomial and kappa the
normalizing constant making the map exact on basis functions. For d = 1
the cosine-series formulas apply:

    b_0 = (1/pi) * integral psi,   b_n = (2/pi) * integral psi cos(n theta).
"""
from __future__ import annotations

import math
import warnings

import numpy as np

from .gegenbauer import (
    gegenbauer_table,
    normalized_gegenbauer_table,
    order_for_dimension,
)
from .quadrature import (
    QuadratureResolutionWarning,
    QuadratureRule,
    default_node_count,
    interval_rule,
)
from .sequences import RealSchoenbergSequence

__all__ = ["kappa", "compute_real_coeffs", "reconstruct"]

#: total |coefficient| mass above 1 by more than this flags under-resolution
ILL_CONDITION_TOL = 1e-6


def kappa(n: int, d: int) -> float:
    """Normalizing constant of the degree-n coefficient integral, d >= 2.

    Equals ``(2n + d - 1) Gamma((d-1)/2)^2 / (2^(3-d) pi Gamma(d-1))``,
    evaluated through log-gamma so large dimensions cannot overflow.
    """
    if d < 2:
        raise ValueError("kappa is defined for d >= 2")
    if n < 0:
        raise ValueError("degree n must be nonnegative")
    log_value = (
        2.0 * math.lgamma(0.5 * (d - 1))
        - math.lgamma(d - 1.0)
        + (d - 3.0) * math.log(2.0)
        - math.log(math.pi)
    )
    return (2.0 * n + d - 1.0) * math.exp(log_value)


def _rule_for(d: int, truncation: int, rule: QuadratureRule | None) -> QuadratureRule:
    if rule is None:
        return interval_rule(d, default_node_count(truncation))
    if rule.kind != "interval-legendre":
        raise ValueError("real-sphere coefficients need an interval rule")
    return rule


def _project_values(values: np.ndarray, d: int, truncation: int, rule: QuadratureRule) -> np.ndarray:
    """Coefficient vectors for function samples taken on the rule's nodes.

    ``values`` has shape ``(..., K)`` with K the node count; one coefficient
    array of length ``truncation + 1`` is produced per leading row.
    """
    values = np.asarray(values, dtype=float)
    w = rule.weights
    if d == 1:
        if rule.variable != "theta":
            raise ValueError("d = 1 requires a theta-variable rule")
        theta = rule.nodes
        basis = np.cos(np.outer(np.arange(truncation + 1), theta))
        scale = np.full(truncation + 1, 2.0 / math.pi)
        scale[0] = 1.0 / math.pi
    else:
        order = order_for_dimension(d)
        if rule.variable == "u":
            u = rule.nodes
            weight_factor = (1.0 - u * u) ** (0.5 * (d - 2))
        else:
            theta = rule.nodes
            u = np.cos(theta)
            weight_factor = np.sin(theta) ** (d - 1)
        basis = gegenbauer_table(truncation, order, u) * weight_factor
        scale = np.array([kappa(n, d) for n in range(truncation + 1)])
    return scale * ((values * w) @ basis.T)


def compute_real_coeffs(
    psi,
    d: int,
    truncation: int,
    rule: QuadratureRule | None = None,
) -> RealSchoenbergSequence:
    """Coefficient sequence of ``psi`` at dimension d, degrees 0..truncation.

    ``psi`` is either an IsotropicFunction or a plain vectorized callable on
    ``[0, pi]``. The default rule has ``max(128, 2 * truncation + 32)``
    nodes, ample for the polynomial integrands arising from truncated
    expansions and for analytic inputs. Emits QuadratureResolutionWarning
    when the computed absolute mass exceeds 1 beyond roundoff, the telltale
    sign of an under-resolved rule.
    """
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    fn = getattr(psi, "eval", psi)
    rule = _rule_for(d, truncation, rule)
    theta = rule.nodes if rule.variable == "theta" else np.arccos(rule.nodes)
    values = np.asarray(fn(theta), dtype=float)
    coeffs = _project_values(values, d, truncation, rule)
    if np.abs(coeffs).sum() > 1.0 + ILL_CONDITION_TOL:
        warnings.warn(
            f"absolute coefficient mass {np.abs(coeffs).sum():.6g} exceeds 1; "
            "the quadrature rule looks under-resolved",
            QuadratureResolutionWarning,
            stacklevel=2,
        )
    return RealSchoenbergSequence(d, coeffs)


def reconstruct(seq: RealSchoenbergSequence, theta):
    """Evaluate the truncated expansion of ``seq`` at angle(s) theta."""
    scalar = np.ndim(theta) == 0
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any((theta < -1e-12) | (theta > math.pi + 1e-12)):
        raise ValueError("theta must lie in [0, pi]")
    basis = normalized_gegenbauer_table(seq.truncation, seq.d, np.cos(theta))
    out = seq.coeffs @ basis
    return float(out[0]) if scalar else out
