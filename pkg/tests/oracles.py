"""Independent reference computations used by the test-suite.

None of these touch the package's quadrature or special functions: they use
closed forms, exact symbolic integration, or Monte Carlo sampling with numpy.
"""

import math

import numpy as np
import sympy


def cauchy_lr(x, loc1=5.0, loc2=-5.0, scale2=200.0):
    """LR between two Cauchy densities sharing a squared scale."""
    return (scale2 + (x - loc2) ** 2) / (scale2 + (x - loc1) ** 2)


def normal_log_ratio(x, m1, v1, m2, v2):
    return (
        -0.5 * math.log(v1) - (x - m1) ** 2 / (2 * v1)
        + 0.5 * math.log(v2) + (x - m2) ** 2 / (2 * v2)
    )


def exact_triangle_means(k1, n1, k2, n2):
    """E[p], E[q] under the ordered-uniform prior by exact polynomial integration."""
    p, q = sympy.symbols("p q", positive=True)
    kernel = p**k1 * (1 - p) ** (n1 - k1) * q**k2 * (1 - q) ** (n2 - k2)

    def over_triangle(expr):
        inner = sympy.integrate(sympy.expand(expr), (p, q, 1))
        return sympy.integrate(sympy.expand(inner), (q, 0, 1))

    z = over_triangle(kernel)
    return over_triangle(p * kernel) / z, over_triangle(q * kernel) / z


def mc_triangle_means(k1, n1, k2, n2, draws, seed):
    """Importance-sampling Monte Carlo for the constrained posterior.

    Proposals are the unconstrained Beta posteriors, so the self-normalised
    weights reduce to the indicator of p > q.  Returns (E_p, se_p, E_q, se_q, lr, se_lr) where the LR standard error
    comes from the delta method with the sample covariance of (p, q).
    """
    rng = np.random.default_rng(seed)
    chunk = 1_000_000
    sums = np.zeros(5)
    kept = 0
    remaining = draws
    while remaining > 0:
        m = min(chunk, remaining)
        remaining -= m
        ps = rng.beta(k1 + 1, n1 - k1 + 1, size=m)
        qs = rng.beta(k2 + 1, n2 - k2 + 1, size=m)
        ok = ps > qs
        ps, qs = ps[ok], qs[ok]
        kept += ps.size
        sums += [ps.sum(), qs.sum(), (ps * ps).sum(), (qs * qs).sum(), (ps * qs).sum()]
    ep, eq = sums[0] / kept, sums[1] / kept
    vp = sums[2] / kept - ep**2
    vq = sums[3] / kept - eq**2
    cpq = sums[4] / kept - ep * eq
    lr = ep / eq
    var_lr = (vp / eq**2 + vq * ep**2 / eq**4 - 2 * cpq * ep / eq**3) / kept
    return ep, math.sqrt(vp / kept), eq, math.sqrt(vq / kept), lr, math.sqrt(max(var_lr, 0.0))


def sample_normal_gamma_predictive(mu0, n_mu, tau0, n_tau, size, seed):
    """Hierarchical draws: tau ~ Gamma, mu | tau ~ Normal, y | mu, tau ~ Normal."""
    rng = np.random.default_rng(seed)
    shape = n_tau / 2.0
    rate = n_tau / (2.0 * tau0)
    tau = rng.gamma(shape, 1.0 / rate, size=size)
    mu = rng.normal(mu0, 1.0 / np.sqrt(n_mu * tau))
    return rng.normal(mu, 1.0 / np.sqrt(tau))


def ks_distance(samples, cdf):
    xs = np.sort(np.asarray(samples))
    n = xs.size
    f = np.array([cdf(float(x)) for x in xs])
    upper = np.arange(1, n + 1) / n - f
    lower = f - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))
