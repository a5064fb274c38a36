"""Operator functions through the Fourier representation.

Phi(op) f = (1/sqrt(2 pi)) integral Phi~(k) e^{i k op} f dk, with the ordered
exponential worked out per operator family and the integral done by the
Gauss-Hermite engine.  Ordered forms are the verified ones (regenerated from
the disentanglement checks), not the printed constants.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, pi, sqrt
from typing import Callable

import numpy as np

from ..errors import (
    DivergenceError,
    DomainTooSmallError,
    InvalidParameterError,
    TruncationError,
    UnsupportedSymbolError,
)
from ..gftrans import PowerSeries
from ..seqcore import Sequence
from ..specfun import hermite2, tricomi_c
from .quadrature import (
    FourierSymbol,
    gauss_weighted_integral,
    gaussian_fourier_integral,
    legendre_composite_rule,
)

_SQRT2PI = sqrt(2.0 * pi)


@dataclass(frozen=True)
class GridFunction:
    """Samples on the uniform grid x_j = -extent + j h, h = 2 extent / size, size a power of two."""

    samples: np.ndarray
    extent: float

    def __post_init__(self) -> None:
        n = len(self.samples)
        if n < 2 or n & (n - 1):
            raise InvalidParameterError("grid size must be a power of two")
        if self.extent <= 0:
            raise InvalidParameterError("grid extent must be positive")
        object.__setattr__(self, "samples", np.asarray(self.samples, dtype=complex))

    @property
    def spacing(self) -> float:
        return 2.0 * self.extent / len(self.samples)

    def xs(self) -> np.ndarray:
        return -self.extent + self.spacing * np.arange(len(self.samples))

    @classmethod
    def sample(cls, func: Callable[[np.ndarray], np.ndarray], extent: float, size: int) -> "GridFunction":
        probe = cls(np.zeros(size), extent)
        return cls(np.asarray(func(probe.xs()), dtype=complex), extent)


BOUNDARY_DECAY = 1e-12


def heat_evolve_ft(f: GridFunction, alpha: float) -> GridFunction:
    """Evolve d/d alpha F = d^2/dx^2 F by one step alpha: multiply the spectrum by e^{-alpha k^2}."""
    if alpha < 0:
        raise InvalidParameterError("heat evolution needs alpha >= 0")
    edge = max(abs(f.samples[0]), abs(f.samples[-1]))
    if edge > BOUNDARY_DECAY:
        raise DomainTooSmallError(
            f"boundary samples reach {edge:.2e} > {BOUNDARY_DECAY:g}; enlarge the grid extent"
        )
    k = 2.0 * pi * np.fft.fftfreq(len(f.samples), d=f.spacing)
    spectrum = np.fft.fft(f.samples) * np.exp(-alpha * k * k)
    return GridFunction(np.fft.ifft(spectrum), f.extent)


def phi_shift_transform(symbol: FourierSymbol, f: Callable, x: complex, **quad_opts) -> complex:
    """F(x) = (1/sqrt(2 pi)) integral Phi~(k) f(x + i k) dk.

    f must be entire (evaluable on the needed strip) and vectorized over numpy
    arrays; Phi~ must be Gaussian-dominated, which the FourierSymbol encodes.
    """
    res = gaussian_fourier_integral(
        symbol.gauss_coeff, lambda k: symbol.envelope(k) * f(x + 1j * k), **quad_opts
    )
    return res.value / _SQRT2PI


def monomial_from_hermite(n: int, x: complex, y: float, **quad_opts) -> complex:
    """(1/(2 sqrt(pi y))) integral e^{-k^2/4y} H_n(x + ik, y) dk; equals x^n."""
    if y <= 0:
        raise InvalidParameterError("monomial_from_hermite needs y > 0")
    res = gauss_weighted_integral(lambda k: hermite2(n, x + 1j * k, y), y, **quad_opts)
    return res.value / (2.0 * sqrt(pi * y))


def gabor_like_transform(symbol: FourierSymbol, f_coeffs, alpha: float, beta: float, x: complex) -> complex:
    """Phi(alpha d/dx + beta x) f for polynomial f:

    (1/sqrt(2 pi)) integral Phi~(k) e^{-(alpha beta / 2) k^2 + i k beta x} f(x + i alpha k) dk.
    """
    if alpha * beta < 0:
        raise DivergenceError("alpha*beta < 0 grows the integrand; no damped ordered form exists")
    coeffs = [complex(c) for c in f_coeffs]

    def g(k):
        u = x + 1j * alpha * k
        poly = np.zeros_like(u)
        for c in reversed(coeffs):
            poly = poly * u + c
        return symbol.envelope(k) * np.exp(1j * k * beta * x) * poly

    res = gaussian_fourier_integral(symbol.gauss_coeff + alpha * beta / 2.0, g)
    return res.value / _SQRT2PI


def big_o_on_monomial(
    symbol: FourierSymbol,
    alpha: float,
    beta: float,
    n: int,
    x: complex,
    printed_constants: bool = False,
) -> complex:
    """f(alpha d^2/dx^2 + beta x) x^n via the ordered exponential:

    (1/sqrt(2 pi)) integral f~(k) e^{-i (k^3/3) alpha beta^2} e^{i k beta x}
                            H_n(x - k^2 alpha beta, i k alpha) dk.

    The phase 1/3 and unit shift come from the verified disentanglement;
    printed_constants=True substitutes the printed 10/3 and doubled shift,
    which the oracle rejects (errata evidence).
    """
    phase = 10.0 / 3.0 if printed_constants else 1.0 / 3.0
    shift = 2.0 if printed_constants else 1.0

    def g(k):
        return (
            symbol.envelope(k)
            * np.exp(-1j * phase * k ** 3 * alpha * beta ** 2)
            * np.exp(1j * k * beta * x)
            * hermite2(n, x - shift * k * k * alpha * beta, 1j * k * alpha)
        )

    res = gaussian_fourier_integral(symbol.gauss_coeff, g)
    return res.value / _SQRT2PI


def matrix_function_pauli(symbol: FourierSymbol, omega_mag: float) -> np.ndarray:
    """f(Omega sigma+ + Omega* sigma-) for Omega = i |Omega|:

    (1/sqrt(2 pi)) integral f~(k) [[cos, -sin], [sin, cos]](|Omega| k) dk.
    """
    if omega_mag < 0:
        raise InvalidParameterError("needs |Omega| >= 0")
    cos_part = gaussian_fourier_integral(
        symbol.gauss_coeff, lambda k: symbol.envelope(k) * np.cos(omega_mag * k)
    ).value / _SQRT2PI
    sin_part = gaussian_fourier_integral(
        symbol.gauss_coeff, lambda k: symbol.envelope(k) * np.sin(omega_mag * k)
    ).value / _SQRT2PI
    return np.array([[cos_part, -sin_part], [sin_part, cos_part]], dtype=complex)


def tricomi_evolution(x: float, tau: float) -> complex:
    """Solution of d/d tau F = -D^{-2} F, F(x, 0) = 1:

    F(x, tau) = (1/(2 sqrt(pi tau))) integral e^{-k^2/4 tau} C_0(-i k x) dk.
    """
    if tau == 0:
        return 1.0 + 0j
    if tau < 0:
        raise InvalidParameterError("tricomi evolution needs tau >= 0")
    res = gauss_weighted_integral(lambda k: tricomi_c(0, -1j * k * x), tau)
    return res.value / (2.0 * sqrt(pi * tau))


def _ordinary_coeffs(f: PowerSeries) -> list[complex]:
    if f.kind == "ordinary":
        return [complex(c) for c in f.coeffs]
    return [complex(c) / factorial(n) for n, c in enumerate(f.coeffs)]


def _evolved_series_values(f_ord: list[complex], beta: float, ks: np.ndarray, x: float, work_order: int) -> np.ndarray:
    """Per-node values of e^{i beta k D^{-1}} e^{i k LD} f at x, via the Borel route."""
    tf = len(f_ord) - 1
    borel = [factorial(n) * c for n, c in enumerate(f_ord)]
    ik = 1j * ks
    pow_ik = np.ones((tf + 1, len(ks)), dtype=complex)
    for p in range(1, tf + 1):
        pow_ik[p] = pow_ik[p - 1] * ik
    # e^{ik LD} f = f_B(D^{-1} + ik) . 1: coefficient of x^j
    c1 = np.zeros((tf + 1, len(ks)), dtype=complex)
    for j in range(tf + 1):
        acc = np.zeros(len(ks), dtype=complex)
        for n in range(j, tf + 1):
            if borel[n]:
                acc += (comb(n, j) * borel[n]) * pow_ik[n - j]
        c1[j] = acc / factorial(j)
    # e^{i beta k D^{-1}}: coefficient l picks up c1[j] (i beta k)^{l-j} j!/((l-j)! l!)
    ibk = 1j * beta * ks
    pow_ibk = np.ones((work_order + 1, len(ks)), dtype=complex)
    for p in range(1, work_order + 1):
        pow_ibk[p] = pow_ibk[p - 1] * ibk
    values = np.zeros(len(ks), dtype=complex)
    xpow = 1.0
    for l in range(work_order + 1):
        c2l = np.zeros(len(ks), dtype=complex)
        for j in range(min(l, tf) + 1):
            w = float(Fraction(factorial(j), factorial(l - j) * factorial(l)))
            c2l += c1[j] * (w * pow_ibk[l - j])
        values += c2l * xpow
        xpow *= x
    return values


def _e_tilde_grid(m: int, tau: float, ks: np.ndarray) -> np.ndarray:
    """Numerical transform pair of e^{-tau x^m} for even m >= 4, chunked over k."""
    X = (40.0 / tau) ** (1.0 / m)
    kmax = float(np.max(np.abs(ks))) if len(ks) else 1.0
    panels = max(64, int(2 * X * max(kmax, 1.0) / pi) + 1)
    rule = legendre_composite_rule(0.0, X, panels, 16)
    body = rule.weights * np.exp(-tau * rule.nodes ** m)
    out = np.empty(len(ks))
    for start in range(0, len(ks), 256):
        block = ks[start : start + 256]
        out[start : start + 256] = np.cos(np.outer(block, rule.nodes)) @ body
    return (2.0 / _SQRT2PI) * out


INTEGRO_REGION = 0.5


def integro_diff_evolve(f: PowerSeries, beta: float, m: int, tau: float, x: float) -> complex:
    """Solution of d/d tau F = -(LD + beta D^{-1})^m F, F(x, 0) = f(x), for even m:

    F(x, tau) = (1/sqrt(2 pi)) integral e~_m(k, tau) e^{-beta k^2 / 2}
                [e^{i beta k D^{-1}} e^{i k LD} f](x) dk

    with e~_m the transform pair of e^{-tau x^m} (analytic Gaussian for m = 2,
    grid transform otherwise).  Odd m has no transform pair on the line and is
    rejected.
    """
    if m <= 0 or m % 2:
        raise UnsupportedSymbolError(f"m = {m}: e^(-tau x^m) has no Fourier transform for odd m")
    if beta < 0:
        raise DivergenceError("beta < 0 grows the disentanglement factor e^{-beta k^2/2}")
    if tau < 0:
        raise InvalidParameterError("needs tau >= 0")
    if abs(x) > INTEGRO_REGION:
        raise TruncationError(f"|x| = {abs(x):g} outside the truncation-controlled region {INTEGRO_REGION}")
    f_ord = _ordinary_coeffs(f)
    if tau == 0:
        value = 0j
        for c in reversed(f_ord):
            value = value * x + c
        return value
    work_order = max(len(f_ord) - 1, 48) + 16

    if m == 2:
        amp = 1.0 / sqrt(2.0 * tau)

        def g(k):
            return amp * _evolved_series_values(f_ord, beta, k, x, work_order)

        res = gaussian_fourier_integral(1.0 / (4.0 * tau) + beta / 2.0, g)
        return res.value / _SQRT2PI

    # even m >= 4: locate a cutoff where the damped symbol is negligible
    K = 4.0
    while K < 64.0:
        tail = abs(_e_tilde_grid(m, tau, np.array([K, 1.25 * K])).max()) * np.exp(-beta * K * K / 2.0)
        if tail < 1e-15:
            break
        K *= 2.0
    # e^{ik LD} on a series truncated at degree T carries truncation junk
    # ~ k^T / T!, only negligible over |k| <= K when T >= 2.5 K; the Gaussian
    # pair (m = 2) crushes large k on its own, the fatter e~_m tails do not
    needed = int(2.5 * K + 1)
    if len(f_ord) - 1 < needed:
        raise TruncationError(
            f"m={m}, tau={tau:g} integrates out to |k| ~ {K:g}: the initial series must "
            f"carry coefficients through degree {needed} (got {len(f_ord) - 1})"
        )
    rule = legendre_composite_rule(-K, K, max(64, int(8 * K)), 12)
    ks = rule.nodes
    integrand = (
        _e_tilde_grid(m, tau, ks)
        * np.exp(-beta * ks ** 2 / 2.0)
        * _evolved_series_values(f_ord, beta, ks, x, work_order)
    )
    return complex(np.sum(rule.weights * integrand)) / _SQRT2PI


def umbral_operator_transform(
    symbol: FourierSymbol | None,
    a: Sequence,
    x: float,
    growth: tuple[float, float] | None = None,
) -> complex:
    """F(d/da^) f(x) for f the ordinary generating function of a:

    (1/sqrt(2 pi)) integral F~(k) / (1 - i k x) f(x / (1 - i k x)) dk.

    The shift e^{ik d/da^} sends a^ to a^ + ik, which puts 1 - ikx in the
    denominator; the printed 1 + ikx agrees only for even symbols.
    symbol=None is the identity path (F == 1): plain series evaluation.
    """
    if growth is not None:
        M, rho = growth
        if rho * abs(x) >= 1.0:
            raise DivergenceError(f"rho |x| = {rho * abs(x):g} >= 1: outside the series radius")
    coeffs = [complex(t) for t in a.terms]

    def series_at(u):
        val = np.zeros_like(u)
        for c in reversed(coeffs):
            val = val * u + c
        return val

    if symbol is None:
        return complex(series_at(np.asarray(x, dtype=complex)))

    def g(k):
        den = 1.0 - 1j * k * x
        return symbol.envelope(k) * series_at(x / den) / den

    res = gaussian_fourier_integral(symbol.gauss_coeff, g)
    return res.value / _SQRT2PI
