"""Recipient uncertainty about an expert's numeric log-LR output.

Under each hypothesis the recipient models the expert's log-LR as
Normal(mu, 1/tau) with a Normal-Gamma prior on (mu, tau):

    tau       ~ Gamma(shape=n_tau/2, rate=n_tau/(2*tau0))
    mu | tau  ~ Normal(mu0, precision=n_mu*tau)

so ``tau0`` is the prior guess of the precision and ``n_mu``/``n_tau`` are the
pseudo-observation counts backing the mean and the precision.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .numerics import StudentT, student_t_logpdf

__all__ = [
    "NormalGamma",
    "ValidationSummary",
    "VAGUE_PRIOR_H1",
    "VAGUE_PRIOR_H2",
    "summarize",
    "pool",
    "update",
    "predictive",
    "log_lr_a",
    "lr_a",
    "mirror",
]


@dataclass(frozen=True)
class NormalGamma:
    mu0: float
    n_mu: float
    tau0: float
    n_tau: float

    def __post_init__(self):
        if not math.isfinite(self.mu0):
            raise DomainError(f"mu0 must be finite, got {self.mu0!r}")
        for name in ("n_mu", "tau0", "n_tau"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")

    @property
    def scaled_inverse_precision(self):
        """n_tau / tau0, the quantity the update adds sums of squares to."""
        return self.n_tau / self.tau0


@dataclass(frozen=True)
class ValidationSummary:
    """Sufficient statistics of n validation log-LRs.

    ``var`` uses divisor n, so ``n * var`` is the sum of squared deviations.
    """

    n: int = 0
    mean: float = 0.0
    var: float = 0.0

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError(f"n must be a nonnegative integer, got {self.n!r}")
        if self.n > 0 and not math.isfinite(self.mean):
            raise DomainError(f"mean must be finite, got {self.mean!r}")
        if not (self.var >= 0 and math.isfinite(self.var)):
            raise DomainError(f"var must be nonnegative and finite, got {self.var!r}")
        if self.n == 1 and self.var != 0:
            raise DomainError("a single observation has zero variance")


# Vague priors used in the glass-fragment illustration.
VAGUE_PRIOR_H1 = NormalGamma(mu0=5.0, n_mu=1.0, tau0=0.01, n_tau=1.0)
VAGUE_PRIOR_H2 = NormalGamma(mu0=-5.0, n_mu=1.0, tau0=0.01, n_tau=1.0)


def summarize(values):
    """(n, mean, divisor-n variance) of a sequence of log-LRs."""
    values = [float(v) for v in values]
    n = len(values)
    if n == 0:
        return ValidationSummary()
    mean = math.fsum(values) / n
    if n == 1:
        return ValidationSummary(1, mean, 0.0)
    var = math.fsum((v - mean) ** 2 for v in values) / n
    return ValidationSummary(n, mean, var)


def pool(first, second):
    """Combine two summaries into the summary of the concatenated sample."""
    if first.n == 0:
        return second
    if second.n == 0:
        return first
    n = first.n + second.n
    mean = (first.n * first.mean + second.n * second.mean) / n
    ss = (
        first.n * first.var
        + second.n * second.var
        + first.n * second.n * (first.mean - second.mean) ** 2 / n
    )
    return ValidationSummary(n, mean, ss / n)


def update(prior, data):
    """Conjugate Normal-Gamma update with validation summary ``data``."""
    if data.n == 0:
        return prior
    n = data.n
    n_mu = prior.n_mu + n
    mu = (prior.n_mu * prior.mu0 + n * data.mean) / n_mu
    n_tau = prior.n_tau + n
    spread = (
        prior.scaled_inverse_precision
        + n * data.var
        + prior.n_mu * n * (data.mean - prior.mu0) ** 2 / n_mu
    )
    return NormalGamma(mu0=mu, n_mu=n_mu, tau0=n_tau / spread, n_tau=n_tau)


def predictive(ng):
    """Marginal law of the next log-LR: Student-t with n_tau degrees of freedom."""
    scale = math.sqrt((ng.n_mu + 1.0) / (ng.n_mu * ng.tau0))
    return StudentT(df=ng.n_tau, loc=ng.mu0, scale=scale)


def log_lr_a(x, h1, h2):
    """Log of the recipient's LR for a reported log-LR ``x``."""
    return student_t_logpdf(x, h1) - student_t_logpdf(x, h2)


def lr_a(x, h1, h2):
    return math.exp(log_lr_a(x, h1, h2))


def mirror(t):
    return StudentT(df=t.df, loc=-t.loc, scale=t.scale)
