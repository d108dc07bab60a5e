"""The recipient engine: validation data in, LR_A and posterior odds out.

The recipient never adopts the expert's number as its own likelihood ratio.
It treats the report as data, asks how probable that report is under each
hypothesis given what it has learned from ground-truth validation tests, and
multiplies its own prior odds by the resulting ratio.  ``hybrid_posterior_odds``
is kept alongside so the two answers can be shown side by side.
"""

import csv
import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from . import categorical, continuous
from .categorical import CategoricalCounts, Conclusion
from .continuous import NormalGamma, ValidationSummary
from .errors import DomainError, UsageError, ValidationFormatError

__all__ = [
    "Hypothesis",
    "ReportKind",
    "ExpertReport",
    "ValidationRecord",
    "NumericValidation",
    "RecipientQuery",
    "HybridOdds",
    "RecipientAnswer",
    "summarize_validation",
    "read_validation_csv",
    "parse_validation_rows",
    "lr_a",
    "posterior_odds",
    "hybrid_posterior_odds",
    "answer",
]


class Hypothesis(enum.Enum):
    H1 = "H1"
    H2 = "H2"


class ReportKind(enum.Enum):
    NUMERIC_LOG_LR = "numeric_log_lr"
    CATEGORICAL = "categorical"


@dataclass(frozen=True)
class ExpertReport:
    kind: ReportKind
    value: Union[float, Conclusion]

    def __post_init__(self):
        if self.kind is ReportKind.NUMERIC_LOG_LR:
            if isinstance(self.value, (Conclusion, bool)) or not math.isfinite(self.value):
                raise DomainError(f"numeric report needs a finite log-LR, got {self.value!r}")
        elif not isinstance(self.value, Conclusion):
            raise DomainError(f"categorical report needs a Conclusion, got {self.value!r}")

    @classmethod
    def numeric(cls, log_lr):
        return cls(ReportKind.NUMERIC_LOG_LR, float(log_lr))

    @classmethod
    def from_linear_lr(cls, lr):
        if not lr > 0:
            raise DomainError(f"a likelihood ratio must be positive, got {lr!r}")
        return cls.numeric(math.log(lr))

    @classmethod
    def categorical(cls, label):
        if isinstance(label, str):
            label = Conclusion.parse(label)
        return cls(ReportKind.CATEGORICAL, label)


@dataclass(frozen=True)
class ValidationRecord:
    hypothesis: Hypothesis
    outcome: Union[float, Conclusion]

    @property
    def kind(self):
        if isinstance(self.outcome, Conclusion):
            return ReportKind.CATEGORICAL
        return ReportKind.NUMERIC_LOG_LR


class NumericValidation(NamedTuple):
    h1: ValidationSummary = ValidationSummary()
    h2: ValidationSummary = ValidationSummary()


@dataclass(frozen=True)
class RecipientQuery:
    prior_odds: float
    report: ExpertReport
    prior_h1: NormalGamma = field(default=continuous.VAGUE_PRIOR_H1)
    prior_h2: NormalGamma = field(default=continuous.VAGUE_PRIOR_H2)

    def __post_init__(self):
        if not (self.prior_odds > 0 and math.isfinite(self.prior_odds)):
            raise DomainError(f"prior odds must be positive and finite, got {self.prior_odds!r}")


class HybridOdds(NamedTuple):
    """Posterior odds from multiplying by someone else's LR."""

    value: float
    rule: str = "hybrid"


class RecipientAnswer(NamedTuple):
    lr_a: float
    posterior_odds: float
    hybrid: Union[HybridOdds, None]


def summarize_validation(records, kind=None):
    """Sufficient statistics of validation records.

    Numeric records give a ``NumericValidation`` of per-hypothesis
    (n, mean, divisor-n variance); categorical records give
    ``CategoricalCounts`` of "identified" tallies.  With no records the
    result follows ``kind`` and defaults to numeric.
    """
    records = list(records)
    kinds = {r.kind for r in records}
    if len(kinds) > 1:
        raise ValidationFormatError("validation records mix numeric and categorical outcomes")
    if kinds:
        found = kinds.pop()
        if kind is not None and found is not kind:
            raise ValidationFormatError(
                f"validation records are {found.value} but {kind.value} was requested"
            )
        kind = found
    if kind is ReportKind.CATEGORICAL:
        tally = {Hypothesis.H1: [0, 0], Hypothesis.H2: [0, 0]}
        for r in records:
            tally[r.hypothesis][1] += 1
            if r.outcome is Conclusion.IDENTIFIED:
                tally[r.hypothesis][0] += 1
        (k1, n1), (k2, n2) = tally[Hypothesis.H1], tally[Hypothesis.H2]
        return CategoricalCounts(k1, n1, k2, n2)
    return NumericValidation(
        continuous.summarize(r.outcome for r in records if r.hypothesis is Hypothesis.H1),
        continuous.summarize(r.outcome for r in records if r.hypothesis is Hypothesis.H2),
    )


def _parse_outcome(text, line_no):
    text = text.strip()
    try:
        return Conclusion(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise ValidationFormatError(f"line {line_no}: unrecognised outcome {text!r}") from None
    if not math.isfinite(value):
        raise ValidationFormatError(f"line {line_no}: outcome must be finite, got {text!r}")
    return value


def parse_validation_rows(lines):
    """Parse ``hypothesis,outcome`` CSV lines (header first) into records."""
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["hypothesis", "outcome"]:
        raise ValidationFormatError("validation file must start with header 'hypothesis,outcome'")
    records = []
    for line_no, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise ValidationFormatError(f"line {line_no}: expected 2 fields, got {len(row)}")
        try:
            hypothesis = Hypothesis(row[0].strip())
        except ValueError:
            raise ValidationFormatError(
                f"line {line_no}: hypothesis must be H1 or H2, got {row[0]!r}"
            ) from None
        records.append(ValidationRecord(hypothesis, _parse_outcome(row[1], line_no)))
    if len({r.kind for r in records}) > 1:
        raise ValidationFormatError("validation file mixes numeric and categorical outcomes")
    return records


def read_validation_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_validation_rows(fh)


def lr_a(query, data=None):
    """The recipient's own likelihood ratio for the expert's report."""
    report = query.report
    if report.kind is ReportKind.NUMERIC_LOG_LR:
        if data is None:
            data = NumericValidation()
        if not isinstance(data, NumericValidation):
            raise UsageError("numeric report needs numeric validation summaries")
        h1 = continuous.predictive(continuous.update(query.prior_h1, data.h1))
        h2 = continuous.predictive(continuous.update(query.prior_h2, data.h2))
        return continuous.lr_a(report.value, h1, h2)
    if data is None:
        data = CategoricalCounts()
    if not isinstance(data, CategoricalCounts):
        raise UsageError("categorical report needs categorical validation counts")
    return categorical.conclusion_lr(data, report.value)


def _check_odds_inputs(odds, lr):
    for name, value in (("prior odds", odds), ("likelihood ratio", lr)):
        if not value > 0:
            raise DomainError(f"{name} must be positive, got {value!r}")


def posterior_odds(prior_odds, lr):
    """Bayes' rule in odds form.  Works on floats and on Fractions."""
    _check_odds_inputs(prior_odds, lr)
    return prior_odds * lr


def hybrid_posterior_odds(prior_odds_dm, lr_expert):
    """The decision maker's prior odds times the expert's own LR.

    This is not what a Bayesian recipient computes; it is returned tagged so
    it cannot be mistaken for ``posterior_odds``.
    """
    _check_odds_inputs(prior_odds_dm, lr_expert)
    return HybridOdds(prior_odds_dm * lr_expert)


def answer(query, data=None):
    """LR_A, the recipient's posterior odds and, for numeric reports, the hybrid contrast."""
    value = lr_a(query, data)
    hybrid = None
    if query.report.kind is ReportKind.NUMERIC_LOG_LR:
        try:
            expert_lr = math.exp(query.report.value)
        except OverflowError:
            expert_lr = math.inf
        hybrid = hybrid_posterior_odds(query.prior_odds, expert_lr)
    return RecipientAnswer(value, posterior_odds(query.prior_odds, value), hybrid)
