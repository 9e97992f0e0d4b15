"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import math
import time

import numpy as np
import pytest

from rwbounds import presets
from rwbounds.adjustment import adjustment_coefficient, closed_form_alpha
from rwbounds.bounds import (
    bm_expected_max,
    dichotomous_expected_max,
    expected_max_bounds,
    min_tail_bounds,
)
from rwbounds.embedding import (
    SCHEMES,
    AtomicDistribution,
    coupled_drawdown_experiment,
    embed_many,
)
from rwbounds.excess import d_plus, excess_constants
from rwbounds.montecarlo import (
    estimate_expected_max,
    estimate_min_tail,
    martingale_check,
    stopped_martingale_check,
)
from rwbounds.streams import DEFAULT_SEED

from conftest import Phi, double_exponential, gaussian, shifted_exponential, two_point
from oracles import ruin_probability

SEED = DEFAULT_SEED


@pytest.fixture
def verdict(capsys):
    """Print one PASS/FAIL line for the criterion, then fail loudly if needed."""

    def record(number, title, checks):
        failed = [name for name, ok in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        detail = "" if not failed else " (" + "; ".join(failed) + ")"
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] {status}: {title}{detail}")
        assert not failed, failed

    return record


def test_criterion_01_asymmetric_dichotomous_example(verdict):
    dist = presets.load("example5")
    res = adjustment_coefficient(dist)
    timings = []
    for _ in range(200):
        start = time.perf_counter()
        adjustment_coefficient(dist)
        timings.append(time.perf_counter() - start)
    median = float(np.median(timings))
    verdict(1, f"alpha={res.alpha:.6f} gaussian_rate={res.gaussian_rate:.6f} "
               f"median time={median * 1e3:.3f} ms", [
        ("alpha = 0.318 +- 5e-4", abs(res.alpha - 0.318) <= 5e-4),
        ("gaussian_rate = 0.351 +- 5e-4", abs(res.gaussian_rate - 0.351) <= 5e-4),
        ("runtime < 1 ms", median < 1e-3),
    ])


def test_criterion_02_closed_form_agreement(verdict):
    cases = {
        "gaussian(1,1)": gaussian(1, 1),
        "double_exponential(0.75,1,1)": double_exponential(0.75, 1, 1),
        "shifted_exponential(1,0.5)": shifted_exponential(1, 0.5),
        "two_point(0.7)": two_point(0.7),
    }
    checks, worst = [], 0.0
    for name, dist in cases.items():
        closed = closed_form_alpha(dist)
        numeric = adjustment_coefficient(dist, method="numeric").alpha
        worst = max(worst, abs(numeric - closed))
        checks.append((f"{name}: |{numeric!r} - {closed!r}| <= 1e-10",
                       abs(numeric - closed) <= 1e-10))
    verdict(2, f"numeric vs closed-form alpha, worst gap {worst:.2e}", checks)


def test_criterion_03_excess_constants(verdict):
    tp = excess_constants(two_point(0.7), math.log(7 / 3))
    se = shifted_exponential(1, 0.5)
    se_exc = excess_constants(se, adjustment_coefficient(se).alpha)
    g = excess_constants(gaussian(1, 1), 2.0)
    de = double_exponential(0.75, 1, 1)
    de_exc = excess_constants(de, 0.5)
    verdict(3, f"two_point d+={tp.d_plus!r} d-={tp.d_minus!r}; shifted d+={se_exc.d_plus:.12f}; "
               f"gaussian d+={g.d_plus:.10f}", [
        ("two_point d+ = d- = 1", tp.d_plus == 1.0 and tp.d_minus == 1.0),
        ("shifted exponential d+ = shift", abs(se_exc.d_plus - 0.5) <= 1e-10),
        ("gaussian d+ = d-", abs(g.d_plus - g.d_minus) <= 1e-6),
        ("gaussian e^{alpha d+} = Phi(1)/(1-Phi(1))",
         abs(math.exp(2 * g.d_plus) - Phi(1) / (1 - Phi(1))) <= 1e-6),
        ("double exponential e^{alpha d0} = p mu/((1-p) theta)",
         abs(math.exp(0.5 * de_exc.d_zero) - 0.75 * 1 / (0.25 * 1)) <= 1e-6),
    ])


def test_criterion_04_dichotomous_sandwich(verdict):
    start = time.perf_counter()
    a = math.log(7 / 3)
    checks = []
    for d in (1, 2, 3):
        exact = dichotomous_expected_max(0.7, d)
        pair = expected_max_bounds(a, d, 2.0)
        checks.append((f"d={d}: {pair.lower:.4f} <= {exact:.4f} <= {pair.upper:.4f}",
                       pair.lower <= exact <= pair.upper))
    est = estimate_expected_max(two_point(0.7), 2.0, 10**5, SEED)
    exact = dichotomous_expected_max(0.7, 2.0)
    checks.append((f"MC {est.mean:.4f} +- {est.stderr:.4f} vs exact {exact:.4f}",
                   abs(est.mean - exact) <= 3 * est.stderr))
    elapsed = time.perf_counter() - start
    checks.append((f"runtime {elapsed:.2f} s < 10 s", elapsed < 10))
    verdict(4, f"exact E[M_2]={exact:.5f}, MC {est.mean:.5f} +- {est.stderr:.5f}, "
               f"{elapsed:.2f} s", checks)


def test_criterion_05_continuous_sandwich(verdict):
    g = gaussian(1, 1)
    d_zero = excess_constants(g, 2.0).d_zero
    lower, upper = expected_max_bounds(2.0, 1.0, d_zero)
    est = estimate_expected_max(g, 1.0, 10**5, SEED)
    band = 3 * est.stderr

    se = shifted_exponential(1, 0.5)
    adj = adjustment_coefficient(se)
    se_lower = expected_max_bounds(adj.alpha, 1.0, 0.0).lower
    se_est = estimate_expected_max(se, 1.0, 10**5, SEED)
    # Brownian motion with the same mean and variance: rate 2 mu / sigma^2
    gaussian_matched = bm_expected_max(se.mean, se.std, 1.0)
    verdict(5, f"gaussian E[M_1]={est.mean:.3f} +- {est.stderr:.3f} in [{lower:.4f}, {upper:.2f}]; "
               f"shifted exponential {se_est.mean:.3f} vs lower {se_lower:.3f}", [
        ("gaussian inside computed bounds", lower - band <= est.mean <= upper + band),
        ("gaussian inside [3.1945, 103.37]", 3.1945 - band <= est.mean <= 103.37 + band),
        ("shifted exponential above its lower bound",
         se_est.mean - 3 * se_est.stderr > se_lower),
        ("shifted exponential above the variance-matched BM value",
         se_est.mean - 3 * se_est.stderr > gaussian_matched),
    ])


def test_criterion_06_minimum_tail(verdict):
    g = gaussian(1, 1)
    xs = [0.5, 1.0, 2.0]
    d_minus = excess_constants(g, 2.0).d_minus
    ests = estimate_min_tail(g, xs, 10**5, SEED, eps=1e-6)
    checks = []
    for x, est in zip(xs, ests):
        lo, up = min_tail_bounds(2.0, x, d_minus)
        band = 3 * est.stderr
        checks.append((f"gaussian x={x}: {est.mean:.4f} in [{lo:.4f}, {up:.4f}]",
                       lo - band <= est.mean <= up + band))
    tp = two_point(0.7)
    tp_ests = estimate_min_tail(tp, xs, 10**5, SEED, eps=1e-6)
    for x, est in zip(xs, tp_ests):
        oracle = ruin_probability(tp, math.floor(x) + 1)
        checks.append((f"two_point x={x}: {est.mean:.4f} vs ruin oracle {oracle:.4f}",
                       abs(est.mean - oracle) <= 3 * est.stderr))
    summary = ", ".join(f"{e.mean:.4f}" for e in ests)
    verdict(6, f"gaussian P(-min > x) = {summary}", checks)


def test_criterion_07_martingale_identities(verdict):
    # exp(-alpha S_n) is lognormal for Gaussian steps with log-sd alpha sigma sqrt(n);
    # past two steps its sample mean is dominated by rare paths and the
    # 4-stderr check stops being a test of the identity
    cases = [("twopoint_07", 10, 2.0), ("gaussian_1_1", 2, 1.0)]
    checks, parts = [], []
    for name, steps, d in cases:
        dist = presets.load(name)
        alpha = adjustment_coefficient(dist).alpha
        plain = martingale_check(dist, alpha, steps, 10**6, SEED)
        stopped = stopped_martingale_check(dist, d, 10**6, SEED, alpha)
        for label, est in (("E[exp(-a S_n)]", plain), ("E[exp(-a S_tau)]", stopped)):
            checks.append((f"{name} {label} = {est.mean:.5f} +- {est.stderr:.5f}",
                           abs(est.mean - 1) <= 4 * est.stderr))
            parts.append(f"{name} {label}={est.mean:.4f}")
    verdict(7, "; ".join(parts), checks)


EMBED_LAWS = [
    [(-1, 0.5), (1, 0.5)],
    [(-2, 0.25), (0, 0.5), (2, 0.25)],
    [(-3, 0.1), (-1, 0.2), (0.5, 0.3), (2, 0.4)],
    [(-4, 0.05), (-1, 0.25), (0, 0.2), (1, 0.3), (3, 0.2)],
    [(-1, 1 / 11), (0.12, 10 / 11)],
]


def test_criterion_08_embeddings(verdict):
    start = time.perf_counter()
    n = 10**6
    checks = []
    for i, law in enumerate(EMBED_LAWS):
        F = AtomicDistribution.from_pairs(law)
        ps = np.array(F.ps)
        se = np.sqrt(ps * (1 - ps) / n)
        chain_max = {}
        for scheme in SCHEMES:
            batch = embed_many(F, scheme, n, SEED)
            freq = batch.frequencies(len(ps))
            z = float(np.max(np.abs(freq - ps) / se))
            checks.append((f"law {i} {scheme}: max |z| = {z:.2f}", z <= 4))
            qt = batch.quadratic_time
            qse = float(qt.std(ddof=1)) / math.sqrt(n)
            # two-atom laws give a constant quadratic time, so allow rounding slack
            slack = max(3 * qse, 1e-12 * F.variance)
            checks.append((f"law {i} {scheme}: Wald {qt.mean():.5f} vs {F.variance:.5f}",
                           abs(qt.mean() - F.variance) <= slack))
            chain_max[scheme] = batch.chain_max
        for q in (0.5, 0.9):
            ay = float(np.quantile(chain_max["ay"], q))
            du = float(np.quantile(chain_max["dubins"], q))
            checks.append((f"law {i}: AY max q{q} {ay:.4f} >= Dubins {du:.4f}",
                           ay >= du - 1e-12))
    elapsed = time.perf_counter() - start
    checks.append((f"runtime {elapsed:.1f} s < 60 s", elapsed < 60))
    verdict(8, f"5 laws x {len(SCHEMES)} schemes at n=1e6 in {elapsed:.1f} s", checks)


def test_criterion_09_coupling(verdict):
    checks, parts = [], []
    for name, d in (("twopoint_07", 2.0), ("three_atom", 2.0)):
        rep = coupled_drawdown_experiment(presets.load(name), d, 10**4, SEED)
        checks.append((f"{name}: {rep.violations}", rep.total_violations == 0))
        parts.append(f"{name} d={d}: {rep.total_violations} violations")
    verdict(9, "; ".join(parts), checks)


def test_criterion_10_power_law_shape(verdict):
    dist = presets.load("lomax_gamma3")
    alpha = adjustment_coefficient(dist).alpha
    ratios = [d_plus(dist, alpha, cap=d).value / math.log(d) for d in (1e2, 1e3, 1e4)]
    spread = max(ratios) / min(ratios) - 1
    verdict(10, "capped d+/ln d = " + ", ".join(f"{r:.4f}" for r in ratios)
                + f" (spread {spread:.1%})", [
        ("ratios within 15%", spread <= 0.15),
    ])
