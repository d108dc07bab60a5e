"""Next-toss probabilities for one coin record under different personal models.

Each function returns the probability that the next toss lands heads after a
recorded sequence of tosses, under a different personal model of the tossing
device.  Pass ``exact=True`` to get a ``Fraction`` instead of a float.
"""

import math
from fractions import Fraction

from .errors import DomainError

__all__ = ["parse_flips", "coin_fair", "coin_beta", "coin_markov", "WEIGHTINGS"]

WEIGHTINGS = ("equal", "posterior")


def parse_flips(seq):
    """Normalise a sequence of 'H'/'T' symbols into a tuple."""
    flips = tuple(seq.strip().upper()) if isinstance(seq, str) else tuple(seq)
    bad = sorted({f for f in flips if f not in ("H", "T")})
    if bad:
        raise DomainError(f"coin sequence may only contain H and T, found {bad}")
    return flips


def _out(value, exact):
    return value if exact else float(value)


def coin_fair(seq, exact=False):
    """Fair, independent tosses: the record is ignored."""
    parse_flips(seq)
    return _out(Fraction(1, 2), exact)


def coin_beta(seq, alpha0=1, beta0=1, exact=False):
    """Exchangeable Bernoulli tosses with a Beta(alpha0, beta0) prior."""
    flips = parse_flips(seq)
    if not (alpha0 > 0 and beta0 > 0):
        raise DomainError(f"Beta prior parameters must be positive, got {alpha0!r}, {beta0!r}")
    heads = flips.count("H")
    if exact:
        alpha0, beta0 = Fraction(alpha0), Fraction(beta0)
    return (alpha0 + heads) / (alpha0 + beta0 + len(flips))


def _transition_counts(flips, start):
    """Tally (after-H heads, after-H tails, after-T heads, after-T tails)."""
    counts = {("H", "H"): 0, ("H", "T"): 0, ("T", "H"): 0, ("T", "T"): 0}
    prev = start
    for flip in flips:
        counts[(prev, flip)] += 1
        prev = flip
    return counts[("H", "H")], counts[("H", "T")], counts[("T", "H")], counts[("T", "T")]


def _beta_fn(a, b, exact):
    # Beta function for the integer parameters produced by uniform priors.
    if exact:
        return Fraction(math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1))
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def coin_markov(seq, weighting="equal", exact=False):
    """First-order Markov tosses with independent uniform priors on p and q.

    p = P(H | previous H), q = P(H | previous T).  The toss before the record
    is unknown, so both possibilities are carried.  ``weighting="equal"``
    averages them half and half; ``"posterior"`` weights each by the marginal
    likelihood of the record under it.
    """
    flips = parse_flips(seq)
    if not flips:
        raise DomainError("the Markov model needs at least one observed toss")
    if weighting not in WEIGHTINGS:
        raise DomainError(f"weighting must be one of {WEIGHTINGS}, got {weighting!r}")

    means = []
    evidence = []
    for start in ("H", "T"):
        hh, ht, th, tt = _transition_counts(flips, start)
        # Posteriors Beta(hh+1, ht+1) for p and Beta(th+1, tt+1) for q.
        if flips[-1] == "H":
            means.append(Fraction(hh + 1, hh + ht + 2))
        else:
            means.append(Fraction(th + 1, th + tt + 2))
        evidence.append(_beta_fn(hh + 1, ht + 1, exact) * _beta_fn(th + 1, tt + 1, exact))

    if weighting == "equal":
        weights = (Fraction(1, 2), Fraction(1, 2))
    else:
        total = evidence[0] + evidence[1]
        weights = (evidence[0] / total, evidence[1] / total)

    if exact:
        return weights[0] * means[0] + weights[1] * means[1]
    return float(weights[0]) * float(means[0]) + float(weights[1]) * float(means[1])
