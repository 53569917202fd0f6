"""Identity verification suites.

Each lettered law from the construction is checked over randomized inputs
with explicit tolerances, and reported as a named pass/fail with the worst
residual observed. The CLI `verify` subcommand drives these; the acceptance
tests call them directly.

Residuals are relative: for series comparisons, max over the union of
exponents of |ca - cb| / max(|ca|, |cb|); exact-equality laws (shift
commutativity, kernel annihilation) report 0.0 or fail outright.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .coeffseq import (
    CoeffSeq,
    GenSeries,
    int_antiderivative,
    int_derivative,
    lift_jet,
    monomial,
    project as seq_project,
    series_eval,
)
from .gamma import gamma, gamma_ratio, recip_gamma, sinpi
from .lifted import LiftedSeq, embed, lift_gen, project, shift
from .oracle import QuadratureConfig, rl_oracle
from .parser import to_series
from .rl import rl_kernel_predicate, rl_series

K_SET = (0.5, 1.0, 1.5, -0.5, math.pi / 3.0)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_residual: float
    cases: int
    note: str = ""


def series_residual(f: GenSeries, g: GenSeries, exp_tol=1e-9) -> float:
    """Worst relative coefficient difference over matched exponents; a term
    present on one side only counts as residual 1."""
    gb = {e: c for e, c in g.terms}
    worst = 0.0
    unmatched = dict(gb)
    for e, c in f.terms:
        match = None
        for eg in unmatched:
            if abs(eg - e) <= exp_tol:
                match = eg
                break
        if match is None:
            worst = max(worst, 1.0)
            continue
        cg = unmatched.pop(match)
        den = max(abs(c), abs(cg))
        if den > 0.0:
            worst = max(worst, abs(c - cg) / den)
    if unmatched:
        worst = max(worst, 1.0)
    return worst


def seq_residual(a: CoeffSeq, b: CoeffSeq) -> float:
    worst = 0.0
    for i in set(a.entries) | set(b.entries):
        va, vb = a[i], b[i]
        den = max(abs(va), abs(vb))
        if den > 0.0:
            worst = max(worst, abs(va - vb) / den)
    return worst


def _random_seq(rng, lo=-8, hi=16, nmax=12, basepoint=0.0) -> CoeffSeq:
    support = rng.sample(range(lo, hi + 1), rng.randint(1, nmax))
    return CoeffSeq(basepoint, {i: rng.uniform(-10.0, 10.0) for i in support})


def _random_jet(rng, order=16, basepoint=0.0) -> GenSeries:
    exps = rng.sample(range(0, order + 1), rng.randint(1, min(10, order + 1)))
    return GenSeries(basepoint,
                     tuple((float(e), rng.uniform(-10.0, 10.0)) for e in exps))


def _random_lifted(rng) -> LiftedSeq:
    sigma = _random_seq(rng)
    rho = embed(sigma)
    return shift(rho, rng.uniform(-2.0, 2.0))


# --------------------------------------------------------------------------
# gamma suite


def suite_gamma(trials=200, seed=0, reflection_points=1000):
    rng = random.Random(seed)
    results = []

    worst = 0.0
    n = 0
    while n < reflection_points:
        x = rng.uniform(-30.0, 30.0)
        if abs(x - round(x)) <= 1e-6:
            continue
        n += 1
        worst = max(worst, abs(gamma(x) * gamma(1.0 - x) * sinpi(x) / math.pi - 1.0))
    results.append(SuiteResult("gamma-reflection", worst <= 1e-10, worst, n))

    worst = 0.0
    for _ in range(trials):
        x = rng.uniform(0.1, 60.0)
        worst = max(worst, abs(gamma(x + 1.0) / (x * gamma(x)) - 1.0))
    results.append(SuiteResult("gamma-recurrence", worst <= 1e-12, worst, trials))

    ok = all(recip_gamma(float(-i)) == 0.0 for i in range(0, 51))
    results.append(SuiteResult("recip-gamma-pole-zeros", ok, 0.0, 51))

    worst = 0.0
    for _ in range(trials):
        p = rng.uniform(-20.0, 20.0)
        q = rng.uniform(-20.0, 20.0)
        if abs(p - round(p)) <= 1e-3 or abs(q - round(q)) <= 1e-3:
            continue
        worst = max(worst, abs(gamma_ratio(p, q) * gamma_ratio(q, p) - 1.0))
    results.append(SuiteResult("gamma-ratio-inverse", worst <= 1e-10, worst, trials))

    worst = 0.0
    for _ in range(trials):
        p = rng.uniform(0.1, 60.0)
        q = rng.uniform(-20.0, 20.0)
        if abs(q - round(q)) <= 1e-3:
            continue
        r1 = gamma_ratio(p, q)
        r2 = gamma(p) * recip_gamma(q)
        worst = max(worst, abs(r1 - r2) / max(abs(r1), abs(r2), 1e-30))
    results.append(SuiteResult("gamma-ratio-vs-product", worst <= 1e-10, worst, trials))
    return results


# --------------------------------------------------------------------------
# projection suite (R1', R2, linearity, kernel)


def suite_projection(trials=200, seed=1, order=16):
    rng = random.Random(seed)
    results = []

    worst = 0.0
    for _ in range(trials):
        f = _random_jet(rng, order)
        worst = max(worst, series_residual(seq_project(lift_jet(f)), f))
    results.append(SuiteResult("R1'", worst <= 1e-12, worst, trials))

    worst = 0.0
    ok = True
    for _ in range(trials):
        sigma = _random_seq(rng)
        back = lift_jet(seq_project(sigma))
        for i in back.entries:
            if i < 0:
                ok = False
        expected = CoeffSeq(sigma.basepoint,
                            {i: v for i, v in sigma.entries.items() if i >= 0})
        worst = max(worst, seq_residual(back, expected))
    results.append(SuiteResult("R2", ok and worst <= 1e-12, worst, trials))

    worst = 0.0
    for _ in range(trials):
        a = _random_seq(rng)
        b = _random_seq(rng)
        c = rng.uniform(-5.0, 5.0)
        worst = max(worst, series_residual(seq_project(a + b),
                                           seq_project(a) + seq_project(b)))
        worst = max(worst, series_residual(seq_project(c * a), c * seq_project(a)))
    results.append(SuiteResult("R-linearity", worst <= 1e-12, worst, trials))

    ok = True
    for _ in range(trials):
        neg = CoeffSeq(0.0, {-rng.randint(1, 8): rng.uniform(-10, 10)
                             for _ in range(3)})
        if not seq_project(neg).is_zero:
            ok = False
        mixed = _random_seq(rng)
        has_nonneg = any(i >= 0 for i in mixed.entries)
        if seq_project(mixed).is_zero == has_nonneg:
            ok = False
    results.append(SuiteResult("R-kernel", ok, 0.0, trials))
    return results


# --------------------------------------------------------------------------
# shift-operator suite (D1-D8)


def suite_shift(trials=200, seed=2):
    rng = random.Random(seed)
    results = []

    ok = True
    for _ in range(trials):
        rho = _random_lifted(rng)
        a = rng.uniform(-3.0, 3.0)
        b = rng.uniform(-3.0, 3.0)
        if shift(shift(rho, a), b) != shift(shift(rho, b), a):
            ok = False
    results.append(SuiteResult("D1", ok, 0.0, trials, "bit-identical"))

    ok = True
    for _ in range(trials):
        rho = _random_lifted(rng)
        # dyadic orders so a+b is itself exact in floating point
        a = rng.randrange(-(1 << 20), 1 << 20) / 1024.0
        b = rng.randrange(-(1 << 20), 1 << 20) / 1024.0
        if shift(shift(rho, a), b) != shift(rho, a + b):
            ok = False
    results.append(SuiteResult("D2", ok, 0.0, trials))

    ok = True
    for _ in range(trials):
        rho = _random_lifted(rng)
        a = rng.uniform(-3.0, 3.0)
        if shift(shift(rho, a), -a) != rho or shift(rho, 0.0) != rho:
            ok = False
    results.append(SuiteResult("D3", ok, 0.0, trials))

    ok = True
    for _ in range(trials):
        sigma = _random_seq(rng)
        tau = _random_seq(rng)
        k = rng.uniform(-3.0, 3.0)
        rho, pi_ = embed(sigma), embed(tau)
        if shift(rho + pi_, k) != shift(rho, k) + shift(pi_, k):
            ok = False
    results.append(SuiteResult("D4", ok, 0.0, trials))

    ok = True
    for _ in range(trials):
        rho = _random_lifted(rng)
        c = rng.uniform(-5.0, 5.0)
        k = rng.uniform(-3.0, 3.0)
        if shift(c * rho, k) != c * shift(rho, k):
            ok = False
    results.append(SuiteResult("D5", ok, 0.0, trials))

    worst = 0.0
    for _ in range(trials // 4):
        f = _random_jet(rng, 10)
        sigma = lift_jet(f)
        for n in (0, 1, 2, 3):
            worst = max(worst, series_residual(seq_project(sigma.shift(n)),
                                               int_derivative(f, n)))
        for n in (1, 2):
            worst = max(worst, series_residual(seq_project(sigma.shift(-n)),
                                               int_antiderivative(f, n)))
    results.append(SuiteResult("D6", worst <= 1e-12, worst, trials // 4))

    # D7: lifting the n-th derivative of the projection shifts the sequence,
    # except that negative indices (including resurrected ones for n > 0) are
    # zeroed by the jet lift.
    worst = 0.0
    for _ in range(trials // 4):
        sigma = _random_seq(rng)
        for n in (0, 1, 2, 3):
            lhs = lift_jet(int_derivative(seq_project(sigma), n))
            expected = CoeffSeq(sigma.basepoint,
                                {i - n: v for i, v in sigma.entries.items()
                                 if i >= max(n, 0)})
            worst = max(worst, seq_residual(lhs, expected))
    results.append(SuiteResult("D7", worst <= 1e-12, worst, trials // 4))

    worst = 0.0
    for _ in range(trials // 4):
        sigma = _random_seq(rng)
        for n in (0, 1, 2, 3):
            lhs = int_derivative(seq_project(sigma.shift(-n)), n)
            worst = max(worst, series_residual(lhs, seq_project(sigma)))
    results.append(SuiteResult("D8", worst <= 1e-12, worst, trials // 4))
    return results


# --------------------------------------------------------------------------
# embedding suite (I1-I4)


def suite_embedding(trials=200, seed=3, order=16):
    rng = random.Random(seed)
    results = []

    ok = True
    for _ in range(trials):
        sigma = _random_seq(rng)
        if embed(sigma).on_integers() != sigma:
            ok = False
    results.append(SuiteResult("I1", ok, 0.0, trials))

    ok = True
    for _ in range(trials):
        sigma = _random_seq(rng)
        k = rng.randint(-6, 6)
        if shift(embed(sigma), float(k)).on_integers() != sigma.shift(k):
            ok = False
    results.append(SuiteResult("I2", ok, 0.0, trials))

    ok = True
    for _ in range(trials):
        f = _random_jet(rng, order)
        sigma = lift_jet(f)
        if embed(sigma).on_integers() != sigma:
            ok = False
    results.append(SuiteResult("I3", ok, 0.0, trials))

    worst = 0.0
    for _ in range(trials):
        f = _random_jet(rng, order)
        worst = max(worst, series_residual(project(embed(lift_jet(f))), f))
    results.append(SuiteResult("I4", worst <= 1e-12, worst, trials))
    return results


# --------------------------------------------------------------------------
# diagram suite (D6', D8', kernel repair)


def diagram_inputs(order=16):
    return (
        monomial(1.0),
        monomial(2.0),
        to_series("exp(x)", 0.0, order),
        to_series("sin(x)", 0.0, order + 1),
    )


def suite_diagram(trials=0, seed=4, order=16):
    results = []
    fs = diagram_inputs(order)

    worst = 0.0
    cases = 0
    for f in fs:
        for k in K_SET:
            lifted_path = project(shift(embed(lift_jet(f)), k))
            direct = rl_series(f, k)
            worst = max(worst, series_residual(lifted_path, direct))
            cases += 1
    results.append(SuiteResult("D6'", worst <= 1e-12, worst, cases,
                               "project(shift(embed(lift_jet(f)), k)) vs termwise"))

    worst = 0.0
    cases = 0
    for f in fs:
        for k in K_SET:
            back = rl_series(project(shift(embed(lift_jet(f)), -k)), k)
            worst = max(worst, series_residual(back, f))
            cases += 1
    results.append(SuiteResult("D8'", worst <= 1e-10, worst, cases))

    # kernel repair: half-differentiating x^(-1/2) twice dies termwise but
    # survives through the lifted space, matching the order-1 result.
    f = monomial(-0.5)
    once = rl_series(f, 0.5)
    twice = rl_series(once, 0.5)
    direct = rl_series(f, 1.0)
    repaired = project(shift(shift(lift_gen(f), 0.5), 0.5))
    expected = monomial(-1.5, -0.5)
    resid = max(series_residual(repaired, direct),
                series_residual(repaired, expected))
    ok = once.is_zero and twice.is_zero and not direct.is_zero and resid <= 1e-12
    results.append(SuiteResult("diagram-kernel-repair", ok, resid, 1))
    return results


# --------------------------------------------------------------------------
# semigroup suite


def suite_semigroup(trials=100, seed=5):
    rng = random.Random(seed)
    results = []

    worst = 0.0
    done = 0
    while done < trials:
        f = _random_jet(rng, 8)
        j = rng.uniform(0.05, 1.95)
        k = rng.uniform(0.05, 1.95)
        if any(rl_kernel_predicate(e, o, 1e-6)
               for e in f.exponents() for o in (j, k, j + k)):
            continue
        two_step = rl_series(rl_series(f, j), k)
        one_step = rl_series(f, j + k)
        worst = max(worst, series_residual(two_step, one_step))
        done += 1
    results.append(SuiteResult("semigroup-safe", worst <= 1e-10, worst, trials))

    # boundary: first order annihilates a term the summed order keeps, so the
    # two-step path collapses to zero while the lifted path still reaches the
    # direct j+k answer.
    worst = 0.0
    ok = True
    done = 0
    while done < trials:
        m = rng.randint(0, 3)
        j = rng.uniform(0.05, 1.95)
        k = rng.uniform(0.05, 1.95)
        if abs(j - round(j)) < 0.05 or abs(k - round(k)) < 0.05:
            continue
        d = math.fmod(j - k, 1.0)
        if min(abs(d), 1.0 - abs(d)) < 0.05:
            continue
        alpha = j - 1.0 - m  # alpha + 1 - j = -m: order-j kernel
        f = monomial(alpha)
        step1 = rl_series(f, j)
        two_step = rl_series(step1, k)
        direct = rl_series(f, j + k)
        lifted_path = project(shift(shift(lift_gen(f), j), k))
        if not (step1.is_zero and two_step.is_zero and not direct.is_zero):
            ok = False
        worst = max(worst, series_residual(lifted_path, direct))
        done += 1
    results.append(SuiteResult("semigroup-boundary", ok and worst <= 1e-12,
                               worst, trials,
                               "two-step 0, direct nonzero, lifted = direct"))
    return results


# --------------------------------------------------------------------------
# oracle suite


def suite_oracle(trials=0, seed=6, cfg=None):
    cfg = cfg or QuadratureConfig()
    worst = 0.0
    cases = 0
    for alpha in (0.0, 0.5, 1.0, 2.0, 3.5):
        f = monomial(alpha)
        for k in (-1.0, -0.5, 0.5, 1.0, 1.5):
            g = rl_series(f, k)
            for x in (0.5, 1.0, 2.0):
                termwise = series_eval(g, x)
                num = rl_oracle(lambda t: series_eval(f, t), 0.0, k, x, cfg)
                resid = abs(num - termwise) / max(1.0, abs(termwise))
                worst = max(worst, resid)
                cases += 1
    return [SuiteResult("oracle-vs-termwise", worst <= 1e-5, worst, cases)]


SUITES = {
    "gamma": suite_gamma,
    "R": suite_projection,
    "D": suite_shift,
    "I": suite_embedding,
    "diagram": suite_diagram,
    "semigroup": suite_semigroup,
    "oracle": suite_oracle,
}


def run_suites(names, trials=200, seed=0, order=16):
    """Run named suites (or all); returns the flat list of SuiteResults."""
    if names in ("all", None):
        names = list(SUITES)
    elif isinstance(names, str):
        names = [names]
    out = []
    for i, name in enumerate(names):
        if name not in SUITES:
            raise KeyError("unknown suite %r (choose from %s)"
                           % (name, ", ".join(SUITES)))
        fn = SUITES[name]
        kwargs = {"seed": seed + 17 * i}
        if name in ("R", "I"):
            kwargs.update(trials=trials, order=order)
        elif name == "diagram":
            kwargs.update(order=order)
        elif name == "semigroup":
            kwargs.update(trials=min(trials, 100))
        elif name == "oracle":
            kwargs = {"seed": seed}
        else:
            kwargs.update(trials=trials)
        out.extend(fn(**kwargs))
    return out
