"""Gauss-weighted quadrature engine.

Every operator-function evaluation in this package reduces to integrals of the
form integral exp(-A k^2) G(k) dk with G smooth, which a Gauss-Hermite rule
handles after the substitution k = u / sqrt(A).  Rules self-check their
Gaussian moments at construction; evaluations double the node count until two
successive results agree, warning at the 1024-node cap.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, sqrt
from typing import Callable

import numpy as np
import scipy.special

from ..errors import InvalidParameterError

DEFAULT_START_NODES = 128
NODE_CAP = 1024
CONVERGENCE_TOL = 1e-10


class QuadratureConvergenceWarning(UserWarning):
    """Raised when doubling hits the node cap without two matching results."""


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    family: str
    node_count: int


def _check_hermite_moments(nodes: np.ndarray, weights: np.ndarray) -> None:
    # moments: integral e^{-k^2} k^{2m} dk = Gamma(m + 1/2); checked in log space
    # densely for small m and on a sparse sample up to the theoretical limit.
    # k^{2m} amplifies node rounding by ~2m ulp, so the very high moments get a
    # proportional allowance on top of the 1e-13 baseline.
    n = len(nodes)
    limit = n // 2 - 1
    ms = list(range(0, min(limit, 60) + 1))
    ms += [int(v) for v in np.geomspace(61, limit, 12)] if limit > 60 else []
    with np.errstate(divide="ignore"):
        # extreme-node weights underflow to 0 at >= 1024 nodes; -inf drops them
        logw = np.log(weights)
        logk = np.log(np.abs(nodes))
    for m in sorted(set(ms)):
        ref = scipy.special.gammaln(m + 0.5)
        terms = np.exp(logw - ref) if m == 0 else np.exp(logw + 2 * m * logk - ref)
        if abs(np.sum(terms) - 1.0) > 1e-13 * (1.0 + m / 32.0):
            raise InvalidParameterError(
                f"gauss-hermite rule with {n} nodes fails the moment self-check at m={m}"
            )


@lru_cache(maxsize=None)
def gauss_hermite_rule(node_count: int) -> QuadratureRule:
    """Gauss-Hermite rule for weight e^{-k^2}, moment-checked at construction."""
    nodes, weights = scipy.special.roots_hermite(node_count)
    _check_hermite_moments(nodes, weights)
    return QuadratureRule(nodes, weights, "gauss-hermite", node_count)


@lru_cache(maxsize=None)
def legendre_composite_rule(a: float, b: float, panels: int, order: int = 12) -> QuadratureRule:
    """Composite Gauss-Legendre rule over [a, b] split into equal panels."""
    if b <= a or panels < 1:
        raise InvalidParameterError("legendre composite rule needs b > a and panels >= 1")
    base_nodes, base_weights = scipy.special.roots_legendre(order)
    edges = np.linspace(a, b, panels + 1)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = (lo + hi) / 2, (hi - lo) / 2
        nodes.append(mid + half * base_nodes)
        weights.append(half * base_weights)
    return QuadratureRule(np.concatenate(nodes), np.concatenate(weights), "gauss-legendre-composite", panels * order)


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    node_count: int
    converged: bool

    def __complex__(self) -> complex:
        return complex(self.value)


def adaptive_hermite(
    g: Callable[[np.ndarray], np.ndarray],
    *,
    start: int = DEFAULT_START_NODES,
    cap: int = NODE_CAP,
    tol: float = CONVERGENCE_TOL,
) -> QuadratureResult:
    """Sum w_i g(u_i) over Gauss-Hermite rules, doubling nodes until stable."""
    previous = None
    n = start
    while True:
        rule = gauss_hermite_rule(n)
        value = complex(np.sum(rule.weights * np.asarray(g(rule.nodes), dtype=complex)))
        if previous is not None and abs(value - previous) < tol * max(1.0, abs(value)):
            return QuadratureResult(value, n, True)
        if n >= cap:
            warnings.warn(
                f"quadrature did not converge below {tol:g} at {cap} nodes",
                QuadratureConvergenceWarning,
                stacklevel=2,
            )
            return QuadratureResult(value, n, False)
        previous = value
        n *= 2


def gaussian_fourier_integral(
    gauss_coeff: float,
    g: Callable[[np.ndarray], np.ndarray],
    **kwargs,
) -> QuadratureResult:
    """integral exp(-gauss_coeff k^2) g(k) dk via substitution k = u / sqrt(gauss_coeff)."""
    if gauss_coeff <= 0:
        raise InvalidParameterError("gaussian fourier integral needs a positive gaussian coefficient")
    s = 1.0 / sqrt(gauss_coeff)
    res = adaptive_hermite(lambda u: g(u * s), **kwargs)
    return QuadratureResult(res.value * s, res.node_count, res.converged)


def gauss_weighted_integral(h: Callable[[np.ndarray], np.ndarray], y: float, **kwargs) -> QuadratureResult:
    """integral exp(-k^2 / 4y) h(k) dk, y > 0, via k = 2 sqrt(y) u.

    With h = 1 the value is 2 sqrt(pi y).
    """
    if y <= 0:
        raise InvalidParameterError("gauss_weighted_integral needs y > 0")
    return gaussian_fourier_integral(1.0 / (4.0 * y), h, **kwargs)


@dataclass(frozen=True)
class FourierSymbol:
    """A symbol function Phi through its Fourier transform, split as
    Phi~(k) = exp(-gauss_coeff k^2) * envelope(k).

    The explicit Gaussian factor is what lets the Gauss-Hermite engine absorb
    the decay; `envelope` must stay subdominant (polynomial or cosh growth).
    `func` is the symbol itself, used by spectral/series oracles.
    """

    gauss_coeff: float
    envelope: Callable[[np.ndarray], np.ndarray]
    func: Callable[[complex], complex] | None = None

    def ft(self, k):
        return np.exp(-self.gauss_coeff * np.asarray(k) ** 2) * self.envelope(np.asarray(k))


def gaussian_symbol(scale: float = 1.0) -> FourierSymbol:
    """Phi(u) = exp(-scale u^2); transform (1/sqrt(2 scale)) exp(-k^2 / (4 scale))."""
    if scale <= 0:
        raise InvalidParameterError("gaussian symbol needs scale > 0")
    amp = 1.0 / sqrt(2.0 * scale)
    return FourierSymbol(
        gauss_coeff=1.0 / (4.0 * scale),
        envelope=lambda k: np.full_like(np.asarray(k, dtype=float), amp, dtype=complex),
        func=lambda u: np.exp(-scale * u ** 2),
    )


def cos_gaussian_symbol(scale: float = 1.0) -> FourierSymbol:
    """Phi(u) = cos(u) exp(-scale u^2); transform carries a cosh(k / 2 scale) envelope."""
    if scale <= 0:
        raise InvalidParameterError("cos-gaussian symbol needs scale > 0")
    amp = np.exp(-1.0 / (4.0 * scale)) / sqrt(2.0 * scale)
    return FourierSymbol(
        gauss_coeff=1.0 / (4.0 * scale),
        envelope=lambda k: amp * np.cosh(np.asarray(k) / (2.0 * scale)),
        func=lambda u: np.cos(u) * np.exp(-scale * u ** 2),
    )


def gaussian_taylor(scale: Fraction, order: int) -> tuple[Fraction, ...]:
    """Exact Taylor coefficients of exp(-scale u^2) through the given order."""
    scale = Fraction(scale)
    out = [Fraction(0)] * (order + 1)
    for l in range(order // 2 + 1):
        out[2 * l] = (-scale) ** l / factorial(l)
    return tuple(out)
