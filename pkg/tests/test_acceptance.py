"""Acceptance criteria: every exit criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with -s to see them live).  The
random suites use a fixed seed; tolerances are pinned here, not configurable.
"""
import random
import time
from fractions import Fraction
from math import exp, factorial, sqrt

import numpy as np
import scipy.special

from umbra import appell as ap
from umbra import checks
from umbra import gftrans as gf
from umbra import opcalc as oc
from umbra import seqcore as sq
from umbra import specfun as sf

SEED = checks.DEFAULT_SEED


def report(number: int, label: str, ok: bool, extra: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number:2d} [{status}] {label}" + (f" ({extra})" if extra else ""))
    assert ok, f"criterion {number}: {label} {extra}"


def test_01_involution_exact():
    rng = random.Random(SEED)
    start = time.perf_counter()
    ok = True
    for _ in range(200):
        a = checks.random_sequence(rng, max_len=32, bound=10 ** 6)
        if sq.binomial_transform(sq.binomial_transform(a)).terms != a.terms:
            ok = False
            break
    elapsed = time.perf_counter() - start
    report(1, "binomial involution exact on 200 random sequences", ok and elapsed < 1.0,
           f"{elapsed:.2f}s")


def test_02_modular_roundtrip_exact():
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    ok = True
    for _ in range(200):
        a = checks.random_sequence(rng, max_len=32, bound=10 ** 6)
        p = sq.ModularParams(checks.nonzero_rational(rng, 10 ** 6), checks.nonzero_rational(rng, 10 ** 6))
        if sq.modular_inverse(sq.modular_transform(a, p), p).terms != a.terms:
            ok = False
            break
    elapsed = time.perf_counter() - start
    report(2, "modular roundtrip exact on 200 random draws", ok and elapsed < 1.0, f"{elapsed:.2f}s")


def test_03_k_binomial_closed_forms():
    worst = 0.0
    ok = True
    for k in range(4):
        for case in checks._k_binomial_cases(k):
            outcome = checks.run_master_case(case, order=64, sequences=checks.K_BINOMIAL_SEQUENCES)
            if outcome.passed is False:
                ok = False
            worst = max(worst, outcome.residual)
    report(3, "k-binomial closed forms within tail budgets", ok and worst <= 1e-10,
           f"worst rel {worst:.2e}")


def test_04_generating_function_master_property():
    worst = 0.0
    ok = True
    for case in checks.master_cases():
        outcome = checks.run_master_case(case, order=64)
        if outcome.passed is False:
            ok = False
        worst = max(worst, outcome.residual)
    report(4, "closed generating forms on 8 kinds x 5 sequences x 20 points", ok and worst <= 1e-10,
           f"worst rel {worst:.2e}")


def test_05_laguerre_special_cases():
    ones = sq.Sequence.of([1] * 65)
    worst = 0.0
    for x in np.linspace(0.0, 0.5, 11):
        bessel = gf.laguerre_gf(ones, 1, 1, complex(x), "exponential")
        worst = max(worst, abs(bessel - exp(x) * scipy.special.j0(2 * sqrt(x))))
        resolvent = gf.laguerre_gf(ones, 1, 1, complex(x), "ordinary")
        worst = max(worst, abs(resolvent - exp(-x / (1 - x)) / (1 - x)))
    report(5, "laguerre specials vs independent Bessel oracle", worst <= 1e-10, f"worst {worst:.2e}")


def test_06_hermite_integral_representations():
    start = time.perf_counter()
    worst = 0.0
    ns = (0, 2, 5, 8, 10)
    xs = np.linspace(-2.0, 2.0, 5)
    ys = np.linspace(0.1, 2.0, 5)
    for n in ns:
        for x in xs:
            for y in ys:
                got = oc.phi_shift_transform(
                    oc.gaussian_symbol(float(y)), lambda u, n=n: u ** n, float(x), start=64, tol=5e-9
                )
                worst = max(worst, abs(got - complex(sf.hermite2(n, float(x), -float(y)))))
                mono = oc.monomial_from_hermite(n, float(x), float(y), start=64, tol=5e-9)
                worst = max(worst, abs(mono - float(x) ** n))
    elapsed = time.perf_counter() - start
    report(6, "hermite integral representations on the 125-point grid",
           worst <= 1e-8 and elapsed < 10.0, f"worst {worst:.2e}, {elapsed:.1f}s")


def test_07_tricomi_evolution():
    worst = 0.0
    for x in np.linspace(0.0, 1.0, 11):
        for tau in np.linspace(0.0, 1.0, 11):
            got = oc.tricomi_evolution(float(x), float(tau))
            worst = max(worst, abs(got - oc.tricomi_evolution_series(float(x), float(tau))))
    spot = abs(oc.tricomi_evolution(1.0, 1.0).real - 0.5206029)
    report(7, "tricomi evolution vs series on 11x11 grid plus spot value",
           worst <= 1e-8 and spot <= 5e-7, f"worst {worst:.2e}, spot {spot:.1e}")


def test_08_disentanglement_exact_and_errata():
    derived_zero = (
        oc.weyl_check(1, 1, order=8) == 0
        and oc.weyl_check(Fraction(3, 2), Fraction(-2, 3), order=8) == 0
        and oc.cubic_disentangle_check(1, 1, order=8) == 0
        and oc.cubic_disentangle_check(Fraction(3, 4), 2, order=8) == 0
    )
    printed_nonzero = oc.cubic_disentangle_check(4, 1, order=6, printed_m=True) != 0
    rows = checks.run_selected("disentangle")
    flagged = {r.equation for _, r in rows if r.status == "flagged-errata"}
    report(8, "disentanglement residuals exactly zero; printed constants flagged",
           derived_zero and printed_nonzero and flagged == {"Eq. 72", "Eq. 75"})


def test_09_pauli_matrix_functions():
    worst = 0.0
    for factory in (oc.gaussian_symbol, oc.cos_gaussian_symbol):
        symbol = factory(1.0)
        for omega in (0.0, 0.7, 1.0, 2.0):
            got = oc.matrix_function_pauli(symbol, omega)
            want = oc.pauli_spectral(symbol.func, omega)
            worst = max(worst, float(np.max(np.abs(got - want))))
    spot = float(np.max(np.abs(
        oc.matrix_function_pauli(oc.gaussian_symbol(1.0), 1.0) - exp(-1.0) * np.eye(2)
    )))
    report(9, "pauli matrix functions vs spectral oracle", worst <= 1e-8 and spot <= 1e-8,
           f"worst {worst:.2e}")


def test_10_weyl_algebra_and_borel():
    commutator_zero = all(
        all(c == 0 for c in oc.commutator_check_LD(gf.PowerSeries(coeffs, "ordinary")).coeffs)
        for coeffs in ((0, Fraction(1)), (0, 0, 0, Fraction(1)), (0, Fraction(3), 0, Fraction(-2)))
    )
    borel_exact = oc.borel_transform(gf.PowerSeries(oc.c0_series(20), "ordinary")).coeffs == tuple(
        Fraction((-1) ** n, factorial(n)) for n in range(21)
    )
    c0 = gf.PowerSeries(oc.c0_series(24), "ordinary")
    evolved = oc.exp_laguerre_derivative(Fraction(1, 2), c0)  # dual routes checked inside
    eigen = max(abs(float(evolved.coeffs[j] / c0.coeffs[j]) - exp(-0.5)) for j in range(12))
    report(10, "weyl algebra, borel transform, dual-route evolution",
           commutator_zero and borel_exact and eigen <= 1e-10, f"eigen dev {eigen:.2e}")


def test_11_integro_differential_evolution():
    start = time.perf_counter()
    f = gf.PowerSeries(oc.c0_series(40), "ordinary")
    f_ord = [float(c) for c in oc.c0_series(40)]
    worst = 0.0
    for beta in (0.0, 0.5, 1.0):
        for x in np.linspace(0.0, 0.5, 5):
            for tau in np.linspace(0.0, 0.5, 5):
                got = oc.integro_diff_evolve(f, beta, 2, float(tau), float(x))
                want = oc.integro_matrix_oracle(f_ord, beta, 2, float(tau), float(x), 40)
                worst = max(worst, abs(got - want))
    elapsed = time.perf_counter() - start
    report(11, "integro-differential evolution vs degree-40 matrix oracle",
           worst <= 1e-6 and elapsed < 60.0, f"worst {worst:.2e}, {elapsed:.1f}s")


def test_12_appell_expansion():
    bern = ap.bernoulli_family()
    g1 = ap.GaussianFunction(Fraction(1))
    quad = ap.expansion_coefficients(bern, g1, 10)
    oracle = ap.operational_coefficients(bern, g1, 10)
    worst = max(abs(complex(c) - float(o)) for c, o in zip(quad.coefficients, oracle))
    gh = ap.gauss_hermite_family()
    g8 = ap.GaussianFunction(Fraction(1, 8))
    quad_h = ap.expansion_coefficients(gh, g8, 10)
    oracle_h = ap.operational_coefficients(gh, g8, 10)
    worst = max(worst, max(abs(complex(c) - float(o)) for c, o in zip(quad_h.coefficients, oracle_h)))
    exact_poly = ap.appell_poly(bern, 2, "plus") == (Fraction(1, 6), Fraction(-1), Fraction(1))
    report(12, "appell coefficients vs operational oracle; bernoulli a_2 exact",
           worst <= 1e-8 and exact_poly, f"worst {worst:.2e}")


def test_13_umbral_transform():
    scale = Fraction(1, 32)
    taylor = oc.gaussian_taylor(scale, 120)
    a = sq.Sequence.of([1] * 80)
    worst = 0.0
    for x in (-0.3, -0.2, -0.1, 0.05, 0.15, 0.25, 0.3):
        got = oc.umbral_operator_transform(oc.gaussian_symbol(float(scale)), a, x, growth=(1.0, 1.0))
        worst = max(worst, abs(got - oc.umbral_double_sum(taylor, a, x)))
    bridge = ap.gauss_umbral_bridge_residual(sq.Sequence.of([1] * 40), Fraction(1, 4),
                                             np.linspace(-0.8, 0.8, 10))
    report(13, "umbral transform vs double-sum oracle; gaussian-evolution bridge",
           worst <= 1e-7 and bridge <= 1e-10, f"worst {worst:.2e}, bridge {bridge:.2e}")


def test_14_heat_evolution():
    g = oc.GridFunction.sample(lambda t: np.exp(-t ** 2 / 2), 16.0, 1024)
    out = oc.heat_evolve_ft(g, 0.5)
    expected = np.exp(-g.xs() ** 2 / 4) / sqrt(2.0)
    worst = float(np.max(np.abs(out.samples - expected)))
    report(14, "heat evolution matches gaussian widening on-grid", worst <= 1e-6, f"worst {worst:.2e}")
