"""Quadrature rules shared by the coefficient integrals.

Two interval flavors of Gauss-Legendre are used for the sphere integrals:

* even dimensions substitute ``u = cos(theta)``, which turns the surface
  weight ``sin(theta)^(d-1)`` into the polynomial ``(1 - u^2)^((d-2)/2)``,
  so the rule is exact for polynomial integrands;
* odd dimensions (and the circle) integrate in ``theta`` itself, where the
  full integrand is a trigonometric polynomial and Gauss-Legendre converges
  far below the tolerances used here at the default node counts.

The disk rule is a product of Gauss-Legendre in ``s = r^2`` (radial weight
folded into the quadrature weights) with a uniform angular grid, which is
exact for trigonometric polynomials in the angle.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuadratureRule",
    "QuadratureResolutionWarning",
    "default_node_count",
    "gauss_legendre",
    "interval_rule",
]


class QuadratureResolutionWarning(UserWarning):
    """A computed coefficient sequence looks under-resolved."""


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Node/weight table for interval or disk integration.

    ``kind`` is either ``"interval-legendre"`` (nodes shape ``(K,)``) or
    ``"disk-product"`` (nodes shape ``(K, 2)`` holding x, y). ``variable``
    records what the nodes parameterize: ``"u"`` for cos(theta) on
    ``[-1, 1]``, ``"theta"`` for ``[0, pi]``, ``"xy"`` for disk points.
    """

    kind: str
    nodes: np.ndarray
    weights: np.ndarray
    variable: str

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))
        if self.kind not in ("interval-legendre", "disk-product"):
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if np.any(self.weights <= 0.0):
            raise ValueError("quadrature weights must be positive")
        if len(self.weights) != len(self.nodes):
            raise ValueError("nodes and weights must have equal length")

    @property
    def total_weight(self) -> float:
        return float(self.weights.sum())

    @property
    def complex_nodes(self) -> np.ndarray:
        """Disk nodes as complex numbers (disk-product rules only)."""
        if self.kind != "disk-product":
            raise ValueError("complex_nodes is only defined for disk rules")
        return self.nodes[:, 0] + 1j * self.nodes[:, 1]


def gauss_legendre(n_nodes: int, a: float = -1.0, b: float = 1.0):
    """Gauss-Legendre nodes and weights mapped to the interval [a, b]."""
    if n_nodes < 1:
        raise ValueError("need at least one node")
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * x, half * w


def default_node_count(truncation: int) -> int:
    """Node count giving polynomial exactness plus margin for analytic inputs."""
    return max(128, 2 * truncation + 32)


def interval_rule(d: int, n_nodes: int) -> QuadratureRule:
    """Interval rule for the dimension-d coefficient integrals.

    Even d gets the cos(theta) substitution; odd d (and d = 1) stays in
    theta, where the surface weight is itself a trigonometric polynomial.
    """
    if d < 1:
        raise ValueError("dimension d must be >= 1")
    if d >= 2 and d % 2 == 0:
        x, w = gauss_legendre(n_nodes)
        return QuadratureRule("interval-legendre", x, w, "u")
    theta, w = gauss_legendre(n_nodes, 0.0, np.pi)
    return QuadratureRule("interval-legendre", theta, w, "theta")
