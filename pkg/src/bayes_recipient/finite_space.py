"""Finite probability spaces with named events.

Probabilities may be ``Fraction`` (exact arithmetic, exact comparisons) or
float (comparisons within 1e-12).  The module also carries the coherence
axioms (nonnegativity, unit mass on the sure event, finite additivity) as
checks that can be run on any space.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "FiniteSpace",
    "SURE",
    "EMPTY",
    "two_coin_space",
    "coherence_violations",
]

SURE = "S"
EMPTY = "EMPTY"
_FLOAT_TOL = 1e-12


@dataclass(frozen=True)
class FiniteSpace:
    """Outcome probabilities plus a table of named events.

    ``outcomes`` maps labels to probabilities; ``events`` maps names to sets
    of outcome labels.  The sure event ``"S"`` and the empty event
    ``"EMPTY"`` are always available.
    """

    outcomes: dict
    events: dict

    def __init__(self, outcomes, events=None):
        outcomes = dict(outcomes)
        if not outcomes:
            raise DomainError("a finite space needs at least one outcome")
        for label, p in outcomes.items():
            if p < 0:
                raise DomainError(f"outcome {label!r} has negative probability {p!r}")
        total = sum(outcomes.values())
        exact = all(isinstance(p, (int, Fraction)) for p in outcomes.values())
        if (total != 1) if exact else abs(total - 1.0) > _FLOAT_TOL:
            raise DomainError(f"outcome probabilities sum to {total}, not 1")
        named = {SURE: frozenset(outcomes), EMPTY: frozenset()}
        for name, members in (events or {}).items():
            members = frozenset(members)
            unknown = members - named[SURE]
            if unknown:
                raise DomainError(f"event {name!r} refers to unknown outcomes {sorted(unknown, key=str)}")
            named[name] = members
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "events", named)

    @property
    def exact(self):
        return all(isinstance(p, (int, Fraction)) for p in self.outcomes.values())

    def event(self, name):
        if isinstance(name, (set, frozenset)):
            return frozenset(name)
        try:
            return self.events[name]
        except KeyError:
            raise DomainError(f"unknown event {name!r}") from None

    def with_event(self, name, members):
        return FiniteSpace(self.outcomes, {**self.events, name: members})

    def _mass(self, members):
        if self.exact:
            return sum((Fraction(self.outcomes[m]) for m in members), Fraction(0))
        return float(sum(self.outcomes[m] for m in members))

    def _intersect(self, names):
        members = self.events[SURE]
        for name in names:
            members = members & self.event(name)
        return members

    def prob(self, event):
        return self._mass(self.event(event))

    def cond_prob(self, a, given):
        """P(a | all events in ``given``)."""
        if isinstance(given, (str, set, frozenset)):
            given = [given]
        condition = self._intersect(given)
        denom = self._mass(condition)
        if denom == 0:
            raise DomainError(f"conditioning event {list(given)!r} has probability zero")
        return self._mass(condition & self.event(a)) / denom

    def _equal(self, x, y):
        if self.exact:
            return x == y
        return abs(x - y) <= _FLOAT_TOL

    def independent(self, a, b):
        joint = self._mass(self.event(a) & self.event(b))
        return self._equal(joint, self.prob(a) * self.prob(b))

    def cond_independent(self, a, b, given):
        """Whether P(a, b | given) = P(a | given) P(b | given)."""
        if isinstance(given, (str, set, frozenset)):
            given = [given]
        condition = self._intersect(given)
        denom = self._mass(condition)
        if denom == 0:
            raise DomainError(f"conditioning event {list(given)!r} has probability zero")
        ea, eb = self.event(a), self.event(b)
        joint = self._mass(condition & ea & eb) * denom
        return self._equal(joint, self._mass(condition & ea) * self._mass(condition & eb))


def two_coin_space(exact=True):
    """Two independent fair tosses with events A (first H), B (second H), C (match)."""
    quarter = Fraction(1, 4) if exact else 0.25
    outcomes = {"HH": quarter, "HT": quarter, "TH": quarter, "TT": quarter}
    events = {
        "A": {"HH", "HT"},
        "B": {"HH", "TH"},
        "C": {"HH", "TT"},
    }
    return FiniteSpace(outcomes, events)


def coherence_violations(space, events=None):
    """Check the coherence axioms on ``space``; return a list of failures.

    Checked: every event has nonnegative probability, the sure event has
    probability one, and P(E or F) = P(E) + P(F) for every disjoint pair of
    the events checked.  ``events`` defaults to all named events.
    """
    names = list(space.events) if events is None else list(events)
    problems = []
    for name in names:
        if space.prob(name) < 0:
            problems.append(f"P({name}) < 0")
    if not space._equal(space.prob(SURE), 1):
        problems.append(f"P(S) = {space.prob(SURE)} != 1")
    for e, f in itertools.combinations(names, 2):
        ee, ff = space.event(e), space.event(f)
        if ee & ff:
            continue
        union = space.prob(ee | ff)
        if not space._equal(union, space.prob(e) + space.prob(f)):
            problems.append(f"P({e} or {f}) = {union} != P({e}) + P({f})")
    return problems
