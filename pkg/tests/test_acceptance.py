"""Acceptance checks, one marked group per criterion.

Each test times its own work; the budget is part of the criterion.  A
criterion counts as passed only when every test carrying its marker passes.
"""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from bayes_recipient.categorical import CategoricalCounts, Conclusion, conclusion_lr
from bayes_recipient.coins import coin_beta, coin_fair, coin_markov
from bayes_recipient.continuous import (
    VAGUE_PRIOR_H1,
    VAGUE_PRIOR_H2,
    NormalGamma,
    ValidationSummary,
    log_lr_a,
    predictive,
    summarize,
    update,
)
from bayes_recipient.finite_space import FiniteSpace, coherence_violations, two_coin_space
from bayes_recipient.numerics import student_t_cdf
from bayes_recipient.recipient import posterior_odds
from oracles import ks_distance, mc_triangle_means, sample_normal_gamma_predictive

criterion = pytest.mark.criterion


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f} s, budget {self.seconds} s"


def prior_lr(x):
    return math.exp(log_lr_a(x, predictive(VAGUE_PRIOR_H1), predictive(VAGUE_PRIOR_H2)))


@criterion(1, "categorical LR with no validation data is 2")
def test_no_data_conclusion_lr():
    with Budget(1.0):
        lr = conclusion_lr(CategoricalCounts(0, 0, 0, 0), Conclusion.IDENTIFIED)
    assert abs(lr - 2.0) <= 1e-9


@criterion(2, "categorical LR at 9500/10000 vs 500/10000 lies in (18, 19.5) and matches Monte Carlo")
def test_large_validation_conclusion_lr():
    with Budget(30.0):
        lr = conclusion_lr(CategoricalCounts(9500, 10000, 500, 10000), Conclusion.IDENTIFIED)
    assert 18.0 < lr < 19.5
    _, _, _, _, mc_lr, se = mc_triangle_means(9500, 10000, 500, 10000, draws=10_000_000, seed=20240)
    assert abs(lr - mc_lr) <= 3 * se


@criterion(3, "prior-only LR_A anchors, argmax at 15, flat tails at +-200")
def test_prior_curve_anchors():
    with Budget(1.0):
        at_zero = prior_lr(0.0)
        at_fifteen = prior_lr(15.0)
        xs = np.round(np.arange(-200.0, 200.0 + 1e-9, 0.01), 2)
        values = [abs(prior_lr(float(x))) for x in xs]
    assert abs(at_zero - 1.0) <= 1e-12
    assert abs(at_fifteen - 2.0) <= 1e-9
    assert xs[int(np.argmax(values))] == 15.0


@criterion(3, "prior-only LR_A anchors, argmax at 15, flat tails at +-200")
def test_prior_curve_tails():
    # Two Cauchy densities with locations +-5 and squared scale 200 give
    # LR_A(x) = (200 + (x + 5)^2) / (200 + (x - 5)^2), so LR_A(200) = 42225/38225.
    with Budget(1.0):
        right, left = prior_lr(200.0), prior_lr(-200.0)
    assert right == pytest.approx(42225 / 38225, rel=1e-12)
    assert abs(right - 1.0) <= 0.02
    assert abs(left - 1.0) <= 0.02


@criterion(4, "batch and sequential updates agree; spread never shrinks")
def test_update_equivalence():
    rng = random.Random(404)
    with Budget(5.0):
        for _ in range(100):
            prior = NormalGamma(rng.uniform(-20, 20), rng.uniform(0.1, 20), rng.uniform(1e-3, 5), rng.uniform(0.1, 20))
            values = [rng.gauss(rng.uniform(-15, 15), rng.uniform(0.5, 10)) for _ in range(rng.randint(1, 200))]
            cut = rng.randint(0, len(values))
            batch = update(prior, summarize(values))
            seq = update(update(prior, summarize(values[:cut])), summarize(values[cut:]))
            for name in ("mu0", "n_mu", "tau0", "n_tau"):
                assert getattr(seq, name) == pytest.approx(getattr(batch, name), rel=1e-10, abs=0)
            assert batch.n_tau / batch.tau0 >= prior.n_tau / prior.tau0


@criterion(5, "Student-t predictive matches hierarchical Monte Carlo (KS < 0.02)")
def test_predictive_ks():
    with Budget(10.0):
        p = VAGUE_PRIOR_H1
        draws = sample_normal_gamma_predictive(p.mu0, p.n_mu, p.tau0, p.n_tau, size=100_000, seed=5005)
        t = predictive(p)
        distance = ks_distance(draws, lambda x: student_t_cdf(x, t))
    assert distance < 0.02


@criterion(6, "LR_A at x=8 grows with validation size towards the normal limit")
def test_validation_convergence():
    with Budget(10.0):
        values = []
        for n in (1, 10, 100, 1000, 10_000):
            var = 0.0 if n == 1 else 25.0
            h1 = predictive(update(VAGUE_PRIOR_H1, ValidationSummary(n, 8.0, var)))
            h2 = predictive(update(VAGUE_PRIOR_H2, ValidationSummary(n, -12.5, var)))
            values.append(math.exp(log_lr_a(8.0, h1, h2)))
    target = math.exp(420.25 / 50)
    assert abs(values[-1] - target) <= 0.05 * target
    assert all(a <= b for a, b in zip(values, values[1:]))


@criterion(7, "three coin models on HHHHHTTT")
def test_coins():
    with Budget(1.0):
        fair = coin_fair("HHHHHTTT")
        beta = coin_beta("HHHHHTTT")
        markov = coin_markov("HHHHHTTT", "equal")
        markov_exact = coin_markov("HHHHHTTT", "equal", exact=True)
    assert fair == 0.5
    assert abs(beta - 0.6) <= 1e-12
    assert abs(markov - 0.325) <= 1e-12
    assert markov_exact == Fraction(13, 40)


def _random_space(rng):
    labels = [f"w{i}" for i in range(rng.randint(1, 8))]
    weights = [rng.randint(0, 20) for _ in labels]
    weights[rng.randrange(len(weights))] += 1
    total = sum(weights)
    events = {f"E{j}": {w for w in labels if rng.random() < 0.4} for j in range(rng.randint(0, 6))}
    return FiniteSpace({w: Fraction(k, total) for w, k in zip(labels, weights)}, events)


@criterion(8, "conditioning counterexample and coherence axioms")
def test_counterexample_and_axioms():
    rng = random.Random(808)
    with Budget(5.0):
        s = two_coin_space(exact=True)
        both = s.cond_prob("A", ["B", "C"])
        only_c = s.cond_prob("A", ["C"])
        independent = s.independent("A", "B")
        failures = [coherence_violations(_random_space(rng)) for _ in range(1000)]
    assert both == 1 and isinstance(both, Fraction)
    assert only_c == Fraction(1, 2)
    assert independent
    assert all(f == [] for f in failures)


@criterion(9, "posterior odds 0.1 x 100 = 10")
def test_odds_anchor():
    assert posterior_odds(0.1, 100) == 10


def _cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "bayes_recipient", *argv], capture_output=True, check=True
    )
    return proc.stdout


@criterion(10, "figure commands are byte-identical across runs; fig4 origin is 2")
def test_cli_determinism():
    for command in ("fig2", "fig3", "fig4"):
        first, second = _cli(command), _cli(command)
        assert first and first == second
    header, origin = _cli("fig4").decode().splitlines()[:2]
    assert header.split(",")[:3] == ["n1", "n2", "lr"]
    n1, n2, lr = origin.split(",")[:3]
    assert (n1, n2) == ("0", "0")
    assert abs(float(lr) - 2.0) <= 1e-9
