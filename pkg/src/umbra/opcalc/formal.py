"""Order-by-order verification of operator disentanglement identities.

Identities like e^{A+B} = e^A e^B e^{-[A,B]/2} are checked as power series in
a formal parameter eps (standing for ik), with exact rational coefficients.
Every operator term carries at least one power of eps, so exponentials
truncate at the order cap and residuals are exactly zero or exactly nonzero;
no numerical tolerance enters.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..errors import InvalidParameterError

Poly = tuple[Fraction, ...]


def _poly_trim(p: list[Fraction]) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _poly_trim([
        (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ])


def _poly_scale(a: Poly, s: Fraction) -> Poly:
    if s == 0:
        return ()
    return tuple(c * s for c in a)


def _poly_diff(a: Poly) -> Poly:
    return tuple(i * a[i] for i in range(1, len(a)))


def _poly_xmul(a: Poly) -> Poly:
    return (Fraction(0),) + a if a else ()


_ACTIONS = {
    "1": lambda p: p,
    "d": _poly_diff,
    "d2": lambda p: _poly_diff(_poly_diff(p)),
    "x": _poly_xmul,
}


@dataclass(frozen=True)
class OperatorTerm:
    """One term scalar * eps^shift * action, with action in {1, d, d2, x}."""

    eps_shift: int
    scalar: Fraction
    action: str

    def __post_init__(self) -> None:
        if self.action not in _ACTIONS:
            raise InvalidParameterError(f"unknown action {self.action!r}")
        if self.eps_shift < 1:
            raise InvalidParameterError("operator terms must carry at least eps^1")


@dataclass(frozen=True)
class FormalExpansion:
    """Polynomial-valued power series in eps, exact rational, truncated at order_cap."""

    orders: tuple[Poly, ...]

    @property
    def order_cap(self) -> int:
        return len(self.orders) - 1

    @classmethod
    def from_poly(cls, poly, order_cap: int) -> "FormalExpansion":
        base = _poly_trim([Fraction(c) for c in poly])
        return cls((base,) + ((),) * order_cap)

    @classmethod
    def monomial(cls, degree: int, order_cap: int) -> "FormalExpansion":
        return cls.from_poly([0] * degree + [1], order_cap)

    def __sub__(self, other: "FormalExpansion") -> "FormalExpansion":
        if self.order_cap != other.order_cap:
            raise InvalidParameterError("expansions must share an order cap")
        return FormalExpansion(
            tuple(_poly_add(a, _poly_scale(b, Fraction(-1))) for a, b in zip(self.orders, other.orders))
        )

    def max_abs(self) -> Fraction:
        worst = Fraction(0)
        for poly in self.orders:
            for c in poly:
                worst = max(worst, abs(c))
        return worst

    def is_zero(self) -> bool:
        return all(len(p) == 0 for p in self.orders)


def apply_operator(terms: list[OperatorTerm], state: FormalExpansion) -> FormalExpansion:
    cap = state.order_cap
    out: list[Poly] = [()] * (cap + 1)
    for term in terms:
        act = _ACTIONS[term.action]
        for o in range(cap + 1 - term.eps_shift):
            if not state.orders[o]:
                continue
            contrib = _poly_scale(act(state.orders[o]), term.scalar)
            if contrib:
                out[o + term.eps_shift] = _poly_add(out[o + term.eps_shift], contrib)
    return FormalExpansion(tuple(out))


def exp_apply(terms: list[OperatorTerm], state: FormalExpansion) -> FormalExpansion:
    """Apply exp(sum of terms): the series terminates because every term raises the eps order."""
    total = state
    current = state
    for m in range(1, state.order_cap + 1):
        current = apply_operator(terms, current)
        current = FormalExpansion(tuple(_poly_scale(p, Fraction(1, m)) for p in current.orders))
        if current.is_zero():
            break
        total = FormalExpansion(tuple(_poly_add(a, b) for a, b in zip(total.orders, current.orders)))
    return total


def _exact_sqrt(q: Fraction) -> Fraction:
    if q < 0:
        raise InvalidParameterError("needs a nonnegative perfect square")
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise InvalidParameterError(f"{q} is not the square of a rational")
    return Fraction(rn, rd)


def weyl_check(a, b, order: int = 8, max_degree: int = 8) -> Fraction:
    """Residual of e^{A+B} = e^A e^B e^{-[A,B]/2} for A = eps a d/dx, B = eps b x.

    [A, B] = eps^2 a b is central, so the residual must vanish identically;
    returns the largest coefficient of lhs - rhs over monomials up to
    max_degree, exactly.
    """
    if order > 16:
        raise InvalidParameterError("weyl check is exact but quadratic in order; keep order <= 16")
    a, b = Fraction(a), Fraction(b)
    A = OperatorTerm(1, a, "d")
    B = OperatorTerm(1, b, "x")
    comm_half = OperatorTerm(2, -a * b / 2, "1")
    worst = Fraction(0)
    for degree in range(max_degree + 1):
        state = FormalExpansion.monomial(degree, order)
        lhs = exp_apply([A, B], state)
        rhs = exp_apply([A], exp_apply([B], exp_apply([comm_half], state)))
        worst = max(worst, (lhs - rhs).max_abs())
    return worst


def cubic_disentangle_check(
    alpha,
    beta,
    order: int = 8,
    max_degree: int = 6,
    printed_m: bool = False,
) -> Fraction:
    """Residual of the cubic disentanglement e^{A+B} = e^{m^2/12 - (m/2) A^{1/2} + A} e^B
    with A = eps alpha d^2, B = eps beta x, [A, B] = m A^{1/2}.

    The commutator forces m = 2 eps^{3/2} sqrt(alpha) beta, under which the
    exponent is rational: m^2/12 = eps^3 alpha beta^2 / 3 and (m/2) A^{1/2}
    = eps^2 alpha beta d.  With printed_m=True the printed alpha^2 factor is
    substituted instead (alpha must then be a rational square), which makes the
    residual nonzero for alpha != 1: that run is errata evidence.
    """
    if order > 10:
        raise InvalidParameterError("cubic check is exact but cubic in order; keep order <= 10")
    alpha, beta = Fraction(alpha), Fraction(beta)
    A = OperatorTerm(1, alpha, "d2")
    B = OperatorTerm(1, beta, "x")
    if printed_m:
        # m = 2 eps^{3/2} alpha^2 beta: m^2/12 = eps^3 alpha^4 beta^2/3,
        # (m/2) A^{1/2} = eps^2 alpha^{5/2} beta d
        alpha_52 = alpha ** 2 * _exact_sqrt(alpha)
        scalar = OperatorTerm(3, alpha ** 4 * beta ** 2 / 3, "1")
        drift = OperatorTerm(2, -alpha_52 * beta, "d")
    else:
        scalar = OperatorTerm(3, alpha * beta ** 2 / 3, "1")
        drift = OperatorTerm(2, -alpha * beta, "d")
    worst = Fraction(0)
    for degree in range(max_degree + 1):
        state = FormalExpansion.monomial(degree, order)
        lhs = exp_apply([A, B], state)
        rhs = exp_apply([scalar, drift, A], exp_apply([B], state))
        worst = max(worst, (lhs - rhs).max_abs())
    return worst
