"""Plot-ready tables for the recipient's predictive curves and LR surfaces."""

import io
import math
from dataclasses import dataclass

from . import categorical, continuous
from .continuous import VAGUE_PRIOR_H1, VAGUE_PRIOR_H2, ValidationSummary
from .errors import DomainError
from .numerics import student_t_logpdf

__all__ = [
    "FigureTable",
    "x_grid",
    "prior_curves",
    "validation_curves",
    "conclusion_heatmap",
    "DEFAULT_FIG3_N",
    "DEFAULT_FIG4_N",
]

DEFAULT_FIG3_N = (1, 10, 100, 1000)
DEFAULT_FIG4_N = (0, 10, 20, 40, 100, 200, 400, 1000)


def _fmt(value):
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


@dataclass(frozen=True)
class FigureTable:
    columns: tuple
    rows: tuple

    def __post_init__(self):
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise DomainError(f"row {row!r} does not match header {self.columns!r}")
            for value in row:
                if not math.isfinite(value):
                    raise DomainError(f"non-finite value in row {row!r}")

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self):
        out = io.StringIO()
        out.write(",".join(self.columns) + "\n")
        for row in self.rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
        return out.getvalue()


def x_grid(x_min=-40.0, x_max=40.0, step=0.5):
    """Evenly spaced points x_min + i*step up to and including x_max."""
    if not step > 0:
        raise DomainError(f"step must be positive, got {step!r}")
    if not (math.isfinite(x_min) and math.isfinite(x_max)) or x_max < x_min:
        raise DomainError(f"invalid range [{x_min!r}, {x_max!r}]")
    count = int(math.floor((x_max - x_min) / step + 1e-9)) + 1
    return [x_min + i * step for i in range(count)]


def _curve_rows(xs, h1, h2, log10, prefix=()):
    rows = []
    for x in xs:
        l1 = student_t_logpdf(x, h1)
        l2 = student_t_logpdf(x, h2)
        row = prefix + (x, math.exp(l1), math.exp(l2), math.exp(l1 - l2))
        if log10:
            row += ((l1 - l2) / math.log(10.0),)
        rows.append(row)
    return rows


def prior_curves(x_min=-40.0, x_max=40.0, step=0.5, prior_h1=VAGUE_PRIOR_H1,
                 prior_h2=VAGUE_PRIOR_H2, log10=False):
    """Predictive densities of the expert's log-LR and LR_A, before any validation data."""
    h1 = continuous.predictive(prior_h1)
    h2 = continuous.predictive(prior_h2)
    columns = ("x", "pdf_h1", "pdf_h2", "lr_a") + (("log10_lr_a",) if log10 else ())
    return FigureTable(columns, tuple(_curve_rows(x_grid(x_min, x_max, step), h1, h2, log10)))


def validation_curves(n_values=DEFAULT_FIG3_N, x_min=-40.0, x_max=40.0, step=0.5,
                      mean1=8.0, var1=25.0, mean2=-12.5, var2=25.0,
                      prior_h1=VAGUE_PRIOR_H1, prior_h2=VAGUE_PRIOR_H2, log10=False):
    """Same curves after n validation log-LRs per hypothesis with fixed mean and variance.

    A single observation carries no spread, so n = 1 uses variance 0.
    """
    xs = x_grid(x_min, x_max, step)
    rows = []
    for n in n_values:
        if int(n) != n or n < 0:
            raise DomainError(f"n values must be nonnegative integers, got {n!r}")
        n = int(n)
        s1 = ValidationSummary(n, mean1, var1 if n > 1 else 0.0)
        s2 = ValidationSummary(n, mean2, var2 if n > 1 else 0.0)
        h1 = continuous.predictive(continuous.update(prior_h1, s1))
        h2 = continuous.predictive(continuous.update(prior_h2, s2))
        rows.extend(_curve_rows(xs, h1, h2, log10, prefix=(n,)))
    columns = ("n", "x", "pdf_h1", "pdf_h2", "lr_a") + (("log10_lr_a",) if log10 else ())
    return FigureTable(columns, tuple(rows))


def conclusion_heatmap(n_values=DEFAULT_FIG4_N, rate1=0.95, rate2=0.05, log10=False):
    """LR_A for an "identified" conclusion over a grid of validation sizes."""
    rows = []
    for n1, n2, lr in categorical.figure4_grid(n_values, rate1, rate2):
        rows.append((n1, n2, lr, math.log10(lr)) if log10 else (n1, n2, lr))
    columns = ("n1", "n2", "lr") + (("log10_lr",) if log10 else ())
    return FigureTable(columns, tuple(rows))
