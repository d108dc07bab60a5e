"""How a Bayesian recipient should update on an expert's reported evidence.

The recipient's own likelihood ratio for an expert's report (``LR_A``)
comes from the recipient's uncertainty about how the expert's method behaves
under each hypothesis, sharpened by ground-truth validation data.  Numeric
log-LR reports use Normal-Gamma priors with Student-t predictives.
Categorical conclusions use an ordered-uniform prior on the two hit rates.
"""

from .categorical import CategoricalCounts, Conclusion, conclusion_lr, posterior_means
from .continuous import (
    VAGUE_PRIOR_H1,
    VAGUE_PRIOR_H2,
    NormalGamma,
    ValidationSummary,
    log_lr_a,
    predictive,
    update,
)
from .errors import ConvergenceError, DomainError, UsageError, ValidationFormatError
from .numerics import StudentT
from .recipient import (
    ExpertReport,
    RecipientQuery,
    ValidationRecord,
    answer,
    hybrid_posterior_odds,
    lr_a,
    posterior_odds,
    summarize_validation,
)

__version__ = "0.1.0"
