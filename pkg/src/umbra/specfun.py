"""Reference special functions the rest of the package tests against.

Two-variable Hermite and Laguerre polynomials, Tricomi-Bessel functions,
Stirling numbers of the second kind.  Rational inputs stay exact; complex
inputs go through float arithmetic (the quadrature engine evaluates C_n at
imaginary arguments).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .errors import InternalConsistencyError, InvalidParameterError


def _is_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def hermite2(n: int, x, y):
    """Two-variable Hermite polynomial H_n(x, y) = n! sum_r x^{n-2r} y^r / ((n-2r)! r!).

    Generating function: sum t^n H_n(x,y) / n! = exp(x t + y t^2).
    Accepts exact rationals (exact result), floats, complex, or numpy arrays.
    """
    total = 0
    for r in range(n // 2 + 1):
        coeff = factorial(n) // (factorial(n - 2 * r) * factorial(r))
        total = total + coeff * x ** (n - 2 * r) * y ** r
    return total


def laguerre2(n: int, x, y):
    """Two-variable Laguerre polynomial L_n(x, y) = n! sum_r (-1)^r x^r y^{n-r} / ((r!)^2 (n-r)!).

    L_n(x, 1) is the classical Laguerre polynomial.
    """
    exact = _is_exact(x, y)
    total = Fraction(0) if exact else 0
    for r in range(n + 1):
        coeff = Fraction((-1) ** r * factorial(n), factorial(r) ** 2 * factorial(n - r))
        if not exact:
            coeff = float(coeff)
        total = total + coeff * x ** r * y ** (n - r)
    return total


#: relative cutoff for tricomi series tails; terms decay factorially
_TRICOMI_RELATIVE_CUTOFF = 1e-18


def tricomi_c(n: int, x):
    """Tricomi-Bessel function C_n(x) = sum_r (-1)^r x^r / (r! (n+r)!).

    C_0(x) = J_0(2 sqrt(x)) for x >= 0.  Entire of order 1/2: the series is
    summed until the term magnitude drops below 1e-18 of the running sum,
    with a minimum of n + 10 terms.  Accepts complex scalars or numpy arrays.
    """
    z = np.asarray(x, dtype=complex)
    term = np.full(z.shape, 1.0 / factorial(n), dtype=complex)
    total = term.copy()
    r = 0
    while True:
        term = term * (-z) / ((r + 1) * (n + r + 1))
        total += term
        r += 1
        if r >= n + 10 and np.max(np.abs(term)) < _TRICOMI_RELATIVE_CUTOFF * max(np.max(np.abs(total)), 1e-300):
            break
        if r > 1000:  # unreachable for finite inputs; guards NaN propagation
            raise InternalConsistencyError("tricomi series failed to converge")
    if np.ndim(x) == 0:
        return complex(total)
    return total


def tricomi_series(n: int, order: int) -> tuple[Fraction, ...]:
    """Exact ordinary coefficients of C_n: coefficient of x^r is (-1)^r / (r! (n+r)!)."""
    return tuple(Fraction((-1) ** r, factorial(r) * factorial(n + r)) for r in range(order + 1))


def stirling2(k: int, n: int) -> int:
    """Stirling number of the second kind, S2(k, n) = (1/k!) sum_j (-1)^{k-j} C(k,j) j^n.

    Argument order follows the source formula: k is the number of blocks (the
    classical literature often writes S(n, k) with the arguments swapped).
    Convention 0^0 = 1, so S2(0, 0) = 1.
    """
    if k < 0 or n < 0:
        raise InvalidParameterError("stirling2 needs nonnegative arguments")
    total = 0
    for j in range(k + 1):
        jn = 1 if n == 0 else j ** n
        total += (-1) ** (k - j) * comb(k, j) * jn
    q, rem = divmod(total, factorial(k))
    if rem:
        raise InternalConsistencyError(f"S2({k},{n}) sum not divisible by {k}!")
    return q


def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


@dataclass(frozen=True)
class Stirling2Table:
    """Triangular table of S2(k, n) for n up to nmax, self-checked at construction.

    Self-check: x^n = sum_k S2(k, n) * falling(x, k) for integer x, the
    classical power-to-falling-factorial identity.
    """

    nmax: int
    rows: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(stirling2(k, n) for k in range(n + 1)) for n in range(self.nmax + 1))
        object.__setattr__(self, "rows", rows)
        for n in range(self.nmax + 1):
            for x in range(self.nmax + 2):
                lhs = 1 if n == 0 else x ** n
                rhs = sum(rows[n][k] * _falling(x, k) for k in range(n + 1))
                if lhs != rhs:
                    raise InternalConsistencyError(f"Stirling row {n} fails the power identity at x={x}")

    def value(self, k: int, n: int) -> int:
        if n > self.nmax:
            raise InvalidParameterError(f"table built for n <= {self.nmax}")
        if k > n:
            return 0
        return self.rows[n][k]


def hermite_addition_check(n: int, x, y, z):
    """Residual of the addition theorem: sum_s C(n,s) x^s H_{n-s}(y,z) - H_n(x+y, z).

    Exactly zero on rational inputs.
    """
    lhs = sum(comb(n, s) * x ** s * hermite2(n - s, y, z) for s in range(n + 1))
    return lhs - hermite2(n, x + y, z)
