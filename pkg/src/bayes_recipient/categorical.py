"""Recipient uncertainty about an expert's categorical conclusion.

p and q are the chances the expert says "identified" when H1 and H2
respectively are true.  The prior is uniform on the triangle q < p, and
validation tallies multiply in Bernoulli likelihoods, so the posterior is two
independent Beta laws restricted to p > q.

Posterior moments reduce to one-dimensional integrals over q:

    P(p > q)          = int Beta(q; k2+1, m2+1) * S(q; k1+1, m1+1) dq
    E[p; p > q] / Ep  = int Beta(q; k2+1, m2+1) * S(q; k1+2, m1+1) dq
    E[q; p > q] / Eq  = int Beta(q; k2+2, m2+1) * S(q; k1+1, m1+1) dq

with S(q; a, b) = 1 - I_q(a, b) the Beta survival function, m = n - k and
Ep, Eq the unconstrained Beta means.
"""

import enum
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import DomainError
from .numerics import beta_logpdf, integrate, log_reg_inc_beta

__all__ = [
    "Conclusion",
    "CategoricalCounts",
    "posterior_means",
    "conclusion_lr",
    "round_half_away",
    "figure4_grid",
]

_TOL = 1e-10
_PROBES = 256


class Conclusion(enum.Enum):
    IDENTIFIED = "identified"
    NOT_IDENTIFIED = "not_identified"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.strip())
        except ValueError:
            raise DomainError(
                f"unknown conclusion {text!r}; expected one of "
                + ", ".join(c.value for c in cls)
            ) from None


@dataclass(frozen=True)
class CategoricalCounts:
    """"identified" tallies: k1 of n1 H1-true tests and k2 of n2 H2-true tests."""

    k1: int = 0
    n1: int = 0
    k2: int = 0
    n2: int = 0

    def __post_init__(self):
        for name in ("k1", "n1", "k2", "n2"):
            value = getattr(self, name)
            if int(value) != value or value < 0:
                raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")
        if self.k1 > self.n1 or self.k2 > self.n2:
            raise DomainError(f"need k1 <= n1 and k2 <= n2, got {self}")

    def mirrored(self):
        """Counts for the reflection (p, q) -> (1 - q, 1 - p) of the triangle."""
        return CategoricalCounts(self.n2 - self.k2, self.n2, self.n1 - self.k1, self.n1)


def _log_survival(q, a, b):
    # ln(1 - I_q(a, b)) == ln I_{1-q}(b, a), evaluated without the subtraction.
    return log_reg_inc_beta(1.0 - q, b, a)


def _bulk_points(a, b):
    """Partition hints around the bulk of a Beta(a, b) density."""
    mean = a / (a + b)
    sd = math.sqrt(a * b / ((a + b) ** 2 * (a + b + 1.0)))
    return [mean + j * sd for j in (-12, -8, -5, -3, -1.5, 0, 1.5, 3, 5, 8, 12)]


def _log_kernel(q, qa, qb, pa, pb):
    log_density = beta_logpdf(q, qa, qb)
    if log_density == -math.inf:
        return -math.inf
    return log_density + _log_survival(q, pa, pb)


def _locate_peak(qa, qb, pa, pb):
    """Grid maximum of the log integrand and a few refinement points around it.

    Conflicting data can push the whole posterior onto a thin ridge far from
    either Beta bulk, where the raw integrand underflows; the returned log
    maximum is used to rescale it.
    """
    grid = [(i + 0.5) / _PROBES for i in range(_PROBES)]
    values = [_log_kernel(q, qa, qb, pa, pb) for q in grid]
    i = max(range(_PROBES), key=values.__getitem__)
    h = 1.0 / _PROBES
    points = [grid[i] + j * h for j in (-4, -2, -1, -0.5, 0.5, 1, 2, 4)]
    return values[i], points


def _weighted_mass(qa, qb, pa, pb, shift, points):
    def f(q):
        value = _log_kernel(q, qa, qb, pa, pb)
        return 0.0 if value == -math.inf else math.exp(value - shift)

    return integrate(f, 0.0, 1.0, tol=_TOL, points=points)


def posterior_means(c):
    """(E[p | data], E[q | data]) under the ordered-uniform prior."""
    a1, b1 = c.k1 + 1.0, c.n1 - c.k1 + 1.0
    a2, b2 = c.k2 + 1.0, c.n2 - c.k2 + 1.0
    shift, peak_points = _locate_peak(a2, b2, a1, b1)
    points = _bulk_points(a2, b2) + _bulk_points(a1, b1) + peak_points

    z = _weighted_mass(a2, b2, a1, b1, shift, points)
    p_part = _weighted_mass(a2, b2, a1 + 1.0, b1, shift, points)
    q_part = _weighted_mass(a2 + 1.0, b2, a1, b1, shift, points)

    e_p = a1 / (a1 + b1) * p_part / z
    e_q = a2 / (a2 + b2) * q_part / z
    return e_p, e_q


def conclusion_lr(c, label=Conclusion.IDENTIFIED):
    """The recipient's LR for hearing ``label`` given validation counts ``c``."""
    e_p, e_q = posterior_means(c)
    if label is Conclusion.IDENTIFIED:
        return e_p / e_q
    if label is Conclusion.NOT_IDENTIFIED:
        return (1.0 - e_p) / (1.0 - e_q)
    raise DomainError(f"unknown conclusion {label!r}")


def round_half_away(rate, n):
    """Integer nearest ``rate * n`` with ties away from zero, in decimal arithmetic."""
    exact = Decimal(str(rate)) * Decimal(int(n))
    return int(exact.to_integral_value(rounding=ROUND_HALF_UP))


def figure4_grid(n_values, rate1=0.95, rate2=0.05):
    """Conclusion LR over every (n1, n2) pair drawn from ``n_values``.

    Rows come back row-major in (n1, n2) as ``(n1, n2, lr)``.
    """
    if not (0.0 <= rate1 <= 1.0 and 0.0 <= rate2 <= 1.0):
        raise DomainError(f"rates must lie in [0, 1], got {rate1!r}, {rate2!r}")
    n_values = list(n_values)
    for n in n_values:
        if int(n) != n or n < 0:
            raise DomainError(f"n values must be nonnegative integers, got {n!r}")
    rows = []
    for n1 in n_values:
        for n2 in n_values:
            counts = CategoricalCounts(
                round_half_away(rate1, n1), int(n1), round_half_away(rate2, n2), int(n2)
            )
            rows.append((int(n1), int(n2), conclusion_lr(counts, Conclusion.IDENTIFIED)))
    return rows
