"""Independent oracles for the quadrature operations.

Each quadrature claim is checked against a second route that never touches the
Fourier representation: truncated-operator matrices (Taylor sums or matrix
exponentials), spectral decomposition for the 2x2 case, plain series for the
evolution solutions, and exact-rational double sums for the umbral transform.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence as SequenceABC

import numpy as np
import scipy.linalg
import scipy.special

from ..errors import InvalidParameterError
from ..seqcore import Sequence
from ..specfun import tricomi_series
from .operators import TruncatedOperator, polyval_coeffs


def apply_entire_function(
    taylor: Callable[[int], complex],
    op: TruncatedOperator,
    coeffs,
    x: complex,
    max_terms: int = 160,
    rtol: float = 1e-18,
) -> complex:
    """sum_j taylor(j) (op^j f)(x): Taylor sum of f(op) applied to a polynomial.

    Terms must decay for the configured operator/symbol pair (Gaussian symbols
    against the small parameters used in the tests); summation stops after the
    terms stay negligible for several consecutive orders.
    """
    if op.degree_cap < len(coeffs) - 1 + max_terms:
        raise InvalidParameterError(
            "operator cap too small for the Taylor sum: need input degree + max_terms"
        )
    v = list(coeffs) + [0] * (op.degree_cap + 1 - len(coeffs))
    total = 0j
    quiet = 0
    for j in range(max_terms):
        t = taylor(j)
        if t:
            term = complex(t) * complex(polyval_coeffs(v, x))
            total += term
            if abs(term) < rtol * max(abs(total), 1e-30):
                quiet += 1
            else:
                quiet = 0
            if quiet >= 4 and j > 8:
                break
        v = list(op.apply(v))
    return total


def pauli_argument_matrix(omega_mag: float) -> np.ndarray:
    """M = Omega sigma+ + Omega* sigma- with Omega = i |Omega|; Hermitian, eigenvalues +-|Omega|."""
    return np.array([[0.0, 1j * omega_mag], [-1j * omega_mag, 0.0]], dtype=complex)


def pauli_spectral(f: Callable[[float], complex], omega_mag: float) -> np.ndarray:
    """f(M) by spectral decomposition of the Hermitian argument matrix."""
    M = pauli_argument_matrix(omega_mag)
    eigvals, eigvecs = np.linalg.eigh(M)
    return eigvecs @ np.diag([f(v) for v in eigvals]) @ eigvecs.conj().T


def tricomi_evolution_series(x: float, tau: float, rtol: float = 1e-16) -> float:
    """Series solution e^{-tau D^{-2}} 1 = sum_m (-tau)^m x^{2m} / (m! (2m)!)."""
    total, term, m = 0.0, 1.0, 0
    while True:
        total += term
        m += 1
        term *= -tau * x * x / (m * (2 * m) * (2 * m - 1))
        if abs(term) < rtol * max(abs(total), 1e-30) and m > 4:
            return total
        if m > 500:
            raise InvalidParameterError("series solution failed to converge")


def integro_matrix_oracle(
    f_ord_coeffs: SequenceABC[complex],
    beta: float,
    m: int,
    tau: float,
    x: float,
    degree_cap: int = 40,
) -> complex:
    """e^{-tau (LD + beta D^{-1})^m} f on the degree-capped basis.

    Worked in the basis e_n = x^n / n!, where LD shifts down with factor n and
    D^{-1} shifts up with factor 1: the generator is bidiagonal and similar,
    via the diagonal scaling s_n = sqrt(beta^n / n!), to a symmetric
    tridiagonal matrix with off-diagonals sqrt(n beta).  Its eigensystem is
    numerically benign and exp(-tau lambda^m) <= 1 for even m, unlike the raw
    monomial-basis matrix whose dense expm overflows.  beta = 0 degenerates to
    a nilpotent shift, summed exactly.
    """
    if beta < 0:
        raise InvalidParameterError("oracle implemented for beta >= 0")
    n_basis = degree_cap + 1
    coeffs = list(f_ord_coeffs)[:n_basis]
    e_coeffs = np.zeros(n_basis, dtype=complex)
    for n, c in enumerate(coeffs):
        e_coeffs[n] = complex(c) * factorial(n)

    if beta == 0.0:
        # generator = LD^m, strictly lowering: nilpotent Taylor, terms stay O(|e_coeffs|)
        def ld_e(v):
            out = np.zeros_like(v)
            out[:-1] = v[1:] * np.arange(1, n_basis)
            return out

        total = e_coeffs.copy()
        term = e_coeffs.copy()
        k = 0
        while True:
            k += 1
            for _ in range(m):
                term = ld_e(term)
            term = term * (-tau) / k
            if not np.any(term):
                break
            total += term
        evolved_e = total
    else:
        off = np.sqrt(beta * np.arange(1, n_basis))
        eigvals, eigvecs = scipy.linalg.eigh_tridiagonal(np.zeros(n_basis), off)
        # log-scale the similarity transform to dodge under/overflow
        log_s = 0.5 * (np.arange(n_basis) * np.log(beta) - scipy.special.gammaln(np.arange(n_basis) + 1.0))
        d = e_coeffs * np.exp(-log_s)
        d = eigvecs @ (np.exp(-tau * eigvals ** m) * (eigvecs.T @ d))
        evolved_e = d * np.exp(log_s)

    evolved = np.array([evolved_e[n] / factorial(n) for n in range(n_basis)])
    return complex(polyval_coeffs(evolved, x))


def c0_series(order: int):
    """Exact ordinary coefficients of the 0-th Tricomi-Bessel function."""
    return tricomi_series(0, order)


def umbral_double_sum(taylor: SequenceABC[Fraction], a: Sequence, x: float) -> complex:
    """sum_n x^n sum_{m<=n} c_m n!/(n-m)! a_{n-m}, optimally truncated.

    The outer series is asymptotic (inner values grow super-geometrically);
    inner sums are done in exact rational arithmetic to dodge cancellation and
    the outer sum stops at its smallest term, the standard superasymptotic
    truncation.  With the narrow symbols used in tests the smallest term is
    far below every tolerance in play.
    """
    nmax = len(a) - 1
    inner = []
    for n in range(nmax + 1):
        tot = Fraction(0)
        for m in range(min(n, len(taylor) - 1) + 1):
            if taylor[m]:
                tot += Fraction(taylor[m]) * (factorial(n) // factorial(n - m)) * a[n - m]
        inner.append(tot)
    terms = [float(v) * x ** n for n, v in enumerate(inner)]
    if len(terms) > 3:
        cut = min(range(2, len(terms)), key=lambda n: abs(terms[n]))
    else:
        cut = len(terms) - 1
    return complex(sum(terms[: cut + 1]))
