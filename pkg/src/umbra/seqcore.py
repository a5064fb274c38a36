"""Exact-arithmetic sequence transforms.

All transforms act on a finite prefix (a_0 .. a_N) of exact rational terms and
return a sequence of the same length.  Everything here is a polynomial identity
in the inputs, so no floating point is allowed to enter: roundtrips and
involutions hold with exact equality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable

from .errors import InvalidParameterError, SequenceFormatError

Rational = Fraction | int | str


def _frac(value: Rational) -> Fraction:
    if isinstance(value, float):
        raise TypeError("exact sequences do not accept floats; pass Fraction, int or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class Sequence:
    """Finite prefix of exact rational terms a_0 .. a_N."""

    terms: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(_frac(t) for t in self.terms))
        if len(self.terms) < 1:
            raise InvalidParameterError("a sequence needs at least one term")

    @classmethod
    def of(cls, terms: Iterable[Rational]) -> "Sequence":
        return cls(tuple(terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> Fraction:
        return self.terms[n]


@dataclass(frozen=True)
class ModularParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _frac(self.alpha))
        object.__setattr__(self, "beta", _frac(self.beta))


@dataclass(frozen=True)
class HermiteParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _frac(self.alpha))
        object.__setattr__(self, "beta", _frac(self.beta))


@dataclass(frozen=True)
class LaguerreParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _frac(self.alpha))
        object.__setattr__(self, "beta", _frac(self.beta))


def binomial_transform(a: Sequence) -> Sequence:
    """b_n = sum_{s<=n} (-1)^s C(n,s) a_s.  Self-inverse."""
    return Sequence.of(
        sum((-1) ** s * comb(n, s) * a[s] for s in range(n + 1))
        for n in range(len(a))
    )


def _int_powers(base: int, count: int) -> list[int]:
    out = [1]
    for _ in range(count):
        out.append(out[-1] * base)
    return out


def _clear_denominators(terms: tuple[Fraction, ...]) -> tuple[int, list[int]]:
    common = 1
    for t in terms:
        common = common * t.denominator // gcd(common, t.denominator)
    return common, [t.numerator * (common // t.denominator) for t in terms]


def _modular_core(a: Sequence, alpha: Fraction, beta: Fraction) -> list[Fraction]:
    # cleared-denominator integer convolution: the per-term Fraction
    # normalizations would otherwise dominate on large random inputs
    top = len(a) - 1
    common, ints = _clear_denominators(a.terms)
    up = _int_powers(alpha.numerator * beta.denominator, top)
    down = _int_powers(alpha.denominator * beta.numerator, top)
    scale = _int_powers(alpha.denominator * beta.denominator, top)
    out = []
    for n in range(len(a)):
        total = 0
        for s in range(n + 1):
            term = comb(n, s) * up[n - s] * down[s] * ints[s]
            total = total - term if s % 2 else total + term
        out.append(Fraction(total, common * scale[n]))
    return out


def modular_transform(a: Sequence, p: ModularParams) -> Sequence:
    """b_n = sum_{s<=n} (-1)^s C(n,s) alpha^{n-s} beta^s a_s."""
    return Sequence.of(_modular_core(a, p.alpha, p.beta))


def modular_inverse(b: Sequence, p: ModularParams) -> Sequence:
    """a_n = beta^{-n} sum_{s<=n} (-1)^s C(n,s) alpha^{n-s} b_s."""
    if p.beta == 0:
        raise InvalidParameterError("modular inverse needs beta != 0")
    inner = _modular_core(b, p.alpha, Fraction(1))
    inv = Fraction(p.beta.denominator, p.beta.numerator)
    power = Fraction(1)
    out = []
    for n in range(len(b)):
        out.append(power * inner[n])
        power *= inv
    return Sequence.of(out)


def _spow(s: int, k: int) -> int:
    # 0^0 = 1 so that k = 0 reduces to the plain binomial transform
    return 1 if k == 0 else s ** k


def rising_k_binomial(a: Sequence, k: int) -> Sequence:
    """b_n = sum_{s<=n} (-1)^s C(n,s) s^k a_s, with 0^0 = 1."""
    if k < 0:
        raise InvalidParameterError("k must be a nonnegative integer")
    return Sequence.of(
        sum((-1) ** s * comb(n, s) * _spow(s, k) * a[s] for s in range(n + 1))
        for n in range(len(a))
    )


def hermite_transform_seq(a: Sequence, p: HermiteParams) -> Sequence:
    """b_n = sum_{r<=n/2} n!/((n-2r)! r!) alpha^{n-2r} beta^r a_r."""
    out = []
    for n in range(len(a)):
        total = Fraction(0)
        for r in range(n // 2 + 1):
            coeff = factorial(n) // (factorial(n - 2 * r) * factorial(r))
            total += coeff * p.alpha ** (n - 2 * r) * p.beta ** r * a[r]
        out.append(total)
    return Sequence.of(out)


def hermite_complementary_seq(a: Sequence, p: HermiteParams) -> Sequence:
    """b_n = n! sum_{r<=n/2} alpha^{n-2r} beta^r a_{n-2r} / ((n-2r)! r!).

    The printed coefficient C(n,2r) would contradict the closed form
    e^{beta x^2} g(alpha x); the umbral coefficient n!/((n-2r)! r!) is used
    instead and the generating-function tests enforce it.
    """
    out = []
    for n in range(len(a)):
        total = Fraction(0)
        for r in range(n // 2 + 1):
            coeff = factorial(n) // (factorial(n - 2 * r) * factorial(r))
            total += coeff * p.alpha ** (n - 2 * r) * p.beta ** r * a[n - 2 * r]
        out.append(total)
    return Sequence.of(out)


def hermite_inverse_seq(b: Sequence, p: HermiteParams) -> Sequence:
    """a_n = alpha^{-n} n! sum_r b_{n-2r} (-beta)^r / ((n-2r)! r!).

    Inverts hermite_complementary_seq exactly.  The degree-doubling transform
    hermite_transform_seq has no termwise inverse at all on finite prefixes
    (b_1 = alpha a_0 never sees a_1), so this is the only pairing the
    inversion identity can refer to.
    """
    if p.alpha == 0:
        raise InvalidParameterError("hermite inverse needs alpha != 0")
    out = []
    for n in range(len(b)):
        total = Fraction(0)
        for r in range(n // 2 + 1):
            coeff = factorial(n) // (factorial(n - 2 * r) * factorial(r))
            total += coeff * (-p.beta) ** r * b[n - 2 * r]
        out.append(p.alpha ** -n * total)
    return Sequence.of(out)


def laguerre_transform_seq(a: Sequence, p: LaguerreParams) -> Sequence:
    """b_n = n! sum_{r<=n} (-1)^r beta^{n-r} alpha^r a_r / ((r!)^2 (n-r)!).

    Carries the n! prefactor missing from the printed coefficient so that the
    transform of (1,1,...) at alpha = beta = 1 is the classical Laguerre value
    L_n(1); the generating function e^{yt} C_0(xt) forces this normalization.
    """
    out = []
    for n in range(len(a)):
        total = Fraction(0)
        for r in range(n + 1):
            coeff = Fraction((-1) ** r * factorial(n), factorial(r) ** 2 * factorial(n - r))
            total += coeff * p.beta ** (n - r) * p.alpha ** r * a[r]
        out.append(total)
    return Sequence.of(out)


@dataclass(frozen=True)
class Stage:
    """One step of a transform pipeline."""

    name: str
    alpha: Fraction | None = None
    beta: Fraction | None = None
    k: int | None = None

    def apply(self, a: Sequence) -> Sequence:
        try:
            runner = _STAGES[self.name]
        except KeyError:
            raise InvalidParameterError(f"unknown transform {self.name!r}") from None
        return runner(self, a)


def _need(value, what: str):
    if value is None:
        raise InvalidParameterError(f"stage needs parameter {what}")
    return value


_STAGES = {
    "binomial": lambda st, a: binomial_transform(a),
    "modular": lambda st, a: modular_transform(a, ModularParams(_need(st.alpha, "alpha"), _need(st.beta, "beta"))),
    "modular-inverse": lambda st, a: modular_inverse(a, ModularParams(_need(st.alpha, "alpha"), _need(st.beta, "beta"))),
    "k-binomial": lambda st, a: rising_k_binomial(a, _need(st.k, "k")),
    "hermite": lambda st, a: hermite_transform_seq(a, HermiteParams(_need(st.alpha, "alpha"), _need(st.beta, "beta"))),
    "hermite-complementary": lambda st, a: hermite_complementary_seq(a, HermiteParams(_need(st.alpha, "alpha"), _need(st.beta, "beta"))),
    "hermite-inverse": lambda st, a: hermite_inverse_seq(a, HermiteParams(_need(st.alpha, "alpha"), _need(st.beta, "beta"))),
    "laguerre": lambda st, a: laguerre_transform_seq(a, LaguerreParams(_need(st.alpha, "alpha"), _need(st.beta, "beta"))),
}

TRANSFORM_NAMES = tuple(_STAGES)


def compose_transforms(pipeline: Iterable[Stage], a: Sequence) -> Sequence:
    """Apply pipeline stages left to right; empty pipeline is the identity."""
    out = a
    for stage in pipeline:
        out = stage.apply(out)
    return out


def composed_hermite_modular_closed_form(a: Sequence, alpha, beta, gamma, delta) -> Sequence:
    """Umbral reading of the printed closed composite: b_n = H_n(alpha - beta*gamma*a^, beta^2*delta).

    Literal transcription of the published composite identity.  It does NOT
    reproduce the sequential pipeline (see the soft check below); it is kept
    to measure and report the discrepancy, never to silently fix it.
    """
    alpha, beta, gamma, delta = map(_frac, (alpha, beta, gamma, delta))
    out = []
    for n in range(len(a)):
        total = Fraction(0)
        for r in range(n // 2 + 1):
            m = n - 2 * r
            hcoeff = factorial(n) // (factorial(m) * factorial(r))
            # (alpha - beta*gamma*a^)^m . 1 expanded binomially
            inner = sum(comb(m, s) * alpha ** (m - s) * (-beta * gamma) ** s * a[s] for s in range(m + 1))
            total += hcoeff * (beta ** 2 * delta) ** r * inner
        out.append(total)
    return Sequence.of(out)


def hermite_after_modular_gap(a: Sequence, alpha, beta, gamma, delta) -> tuple[Fraction, ...]:
    """Residual of the printed composite formula against the sequential pipeline H(gamma,delta) o B(alpha,beta).

    Reported as a soft property: generically nonzero, flagged in the identity
    suite as errata evidence.
    """
    sequential = compose_transforms(
        [Stage("modular", alpha=_frac(alpha), beta=_frac(beta)),
         Stage("hermite", alpha=_frac(gamma), beta=_frac(delta))],
        a,
    )
    closed = composed_hermite_modular_closed_form(a, alpha, beta, gamma, delta)
    return tuple(s - c for s, c in zip(sequential.terms, closed.terms))


def modular_after_hermite_gap(a: Sequence, alpha, beta, gamma, delta) -> tuple[Fraction, ...]:
    """Residual of B(alpha,beta) o H(gamma,delta) against the single Hermite transform with
    parameters (alpha - beta*gamma, beta^2*delta).

    Derived from the exponential generating functions; expected to vanish
    identically, which pins down what the garbled composite formula intends.
    """
    alpha, beta, gamma, delta = map(_frac, (alpha, beta, gamma, delta))
    sequential = compose_transforms(
        [Stage("hermite", alpha=gamma, beta=delta),
         Stage("modular", alpha=alpha, beta=beta)],
        a,
    )
    closed = hermite_transform_seq(a, HermiteParams(alpha - beta * gamma, beta ** 2 * delta))
    return tuple(s - c for s, c in zip(sequential.terms, closed.terms))


def render_rational(q: Fraction) -> str:
    return str(q)


def sequence_to_json(a: Sequence) -> str:
    """Serialize in the exchange format: {"terms": ["p/q" | "p", ...]}."""
    return json.dumps({"terms": [render_rational(t) for t in a.terms]})


def sequence_from_json(text: str) -> Sequence:
    """Parse the exchange format; exact round-trip with sequence_to_json."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFormatError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict) or "terms" not in doc:
        raise SequenceFormatError("document must be an object with a 'terms' field")
    raw = doc["terms"]
    if not isinstance(raw, list) or not raw:
        raise SequenceFormatError("'terms' must be a non-empty list")
    terms = []
    for i, item in enumerate(raw):
        if not isinstance(item, (str, int)):
            raise SequenceFormatError(f"term {i} must be a string or integer, got {type(item).__name__}")
        try:
            terms.append(Fraction(item))
        except (ValueError, ZeroDivisionError) as exc:
            raise SequenceFormatError(f"term {i} is not a valid rational: {item!r}") from exc
    return Sequence.of(terms)
