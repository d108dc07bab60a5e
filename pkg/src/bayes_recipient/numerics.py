"""Special functions, Student-t densities and adaptive quadrature.

Everything here is a pure function of its arguments.  Densities are handled
in log space; Beta normalisers for large counts go through a Stirling-form
prefactor so that counts in the tens of thousands keep full precision.
"""

import heapq
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = [
    "StudentT",
    "log_gamma",
    "log_beta",
    "reg_inc_beta",
    "log_reg_inc_beta",
    "beta_logpdf",
    "student_t_logpdf",
    "student_t_pdf",
    "student_t_cdf",
    "integrate",
]

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_FPMIN = 1e-300
_CF_EPS = 1e-16


def log_gamma(x):
    """Natural log of the Gamma function for positive finite ``x``."""
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"log_gamma needs a positive finite argument, got {x!r}")
    return math.lgamma(x)


def _stirling_remainder(z):
    # lgamma(z) - [(z - 1/2) ln z - z + ln sqrt(2 pi)]
    if z >= 15.0:
        iz = 1.0 / z
        iz2 = iz * iz
        return iz * (1.0 / 12 - iz2 * (1.0 / 360 - iz2 * (1.0 / 1260 - iz2 * (1.0 / 1680 - iz2 / 1188))))
    return math.lgamma(z) - ((z - 0.5) * math.log(z) - z + _HALF_LOG_2PI)


def _lgamma_shift(b, a):
    """lgamma(b) - lgamma(a + b) without cancelling two large values."""
    if b < 15.0:
        return math.lgamma(b) - math.lgamma(a + b)
    s = a + b
    return (
        -(b - 0.5) * math.log1p(a / b)
        - a * math.log(s)
        + a
        + _stirling_remainder(b)
        - _stirling_remainder(s)
    )


def log_beta(a, b):
    """ln B(a, b)."""
    if not (a > 0 and b > 0):
        raise DomainError(f"log_beta needs a, b > 0, got a={a!r}, b={b!r}")
    if a > b:
        a, b = b, a
    return math.lgamma(a) + _lgamma_shift(b, a)


def _log_beta_prefactor(x, a, b):
    """ln[x**a * (1-x)**b / B(a, b)] for 0 < x < 1.

    Written around the Beta mean so the large a*ln(x) and ln B(a, b) terms
    cancel analytically instead of in floating point.
    """
    s = a + b
    if a < 1.0 or b < 1.0 or s < 30.0:
        return a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
    e = x * s - a
    u = e / a
    v = -e / b
    # log1p only pays off near the mean; far out the direct logs are exact enough.
    log_u = math.log1p(u) if abs(u) < 0.5 else math.log(x) + math.log(s / a)
    log_v = math.log1p(v) if abs(v) < 0.5 else math.log1p(-x) + math.log(s / b)
    core = a * (log_u - u) + b * (log_v - v)
    return (
        core
        + 0.5 * math.log(a * b / s)
        - _HALF_LOG_2PI
        + _stirling_remainder(s)
        - _stirling_remainder(a)
        - _stirling_remainder(b)
    )


def _beta_cf(x, a, b, max_iter):
    # Modified Lentz evaluation of the incomplete-beta continued fraction.
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ConvergenceError(
        f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})", h
    )


def reg_inc_beta(x, a, b):
    """Regularised incomplete Beta function I_x(a, b).

    Continued fraction with the usual switch to 1 - I_{1-x}(b, a) when
    ``x > (a + 1) / (a + b + 2)``.
    """
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"reg_inc_beta needs a, b > 0, got a={a!r}, b={b!r}")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"reg_inc_beta needs 0 <= x <= 1, got {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    max_iter = 200 + int(20 * math.sqrt(max(a, b)))
    if x > (a + 1.0) / (a + b + 2.0):
        front = math.exp(_log_beta_prefactor(1.0 - x, b, a))
        value = 1.0 - front * _beta_cf(1.0 - x, b, a, max_iter) / b
    else:
        front = math.exp(_log_beta_prefactor(x, a, b))
        value = front * _beta_cf(x, a, b, max_iter) / a
    return min(1.0, max(0.0, value))


def log_reg_inc_beta(x, a, b):
    """ln I_x(a, b), finite even where I_x(a, b) underflows."""
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"log_reg_inc_beta needs a, b > 0, got a={a!r}, b={b!r}")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"log_reg_inc_beta needs 0 <= x <= 1, got {x!r}")
    if x == 0.0:
        return -math.inf
    if x == 1.0:
        return 0.0
    max_iter = 200 + int(20 * math.sqrt(max(a, b)))
    if x > (a + 1.0) / (a + b + 2.0):
        front = math.exp(_log_beta_prefactor(1.0 - x, b, a))
        complement = front * _beta_cf(1.0 - x, b, a, max_iter) / b
        return math.log1p(-complement) if complement < 1.0 else -math.inf
    return _log_beta_prefactor(x, a, b) + math.log(_beta_cf(x, a, b, max_iter) / a)


def beta_logpdf(x, a, b):
    """Log density of Beta(a, b) at ``x`` in the open unit interval."""
    if x <= 0.0 or x >= 1.0:
        if (x == 0.0 and a == 1.0) or (x == 1.0 and b == 1.0):
            return -log_beta(a, b)
        return -math.inf
    return _log_beta_prefactor(x, a, b) - math.log(x) - math.log1p(-x)


@dataclass(frozen=True)
class StudentT:
    """Location-scale Student-t distribution."""

    df: float
    loc: float
    scale: float

    def __post_init__(self):
        if not (self.df > 0 and self.scale > 0):
            raise DomainError(f"StudentT needs df > 0 and scale > 0, got {self}")
        if not (math.isfinite(self.loc) and math.isfinite(self.scale)):
            raise DomainError(f"StudentT needs finite loc and scale, got {self}")


def student_t_logpdf(x, t):
    nu = t.df
    z = (x - t.loc) / t.scale
    log_norm = (
        math.lgamma(0.5 * (nu + 1.0))
        - math.lgamma(0.5 * nu)
        - 0.5 * math.log(nu * math.pi)
        - math.log(t.scale)
    )
    return log_norm - 0.5 * (nu + 1.0) * math.log1p(z * z / nu)


def student_t_pdf(x, t):
    return math.exp(student_t_logpdf(x, t))


def student_t_cdf(x, t):
    """CDF of a location-scale Student-t through the incomplete Beta function."""
    nu = t.df
    z = (x - t.loc) / t.scale
    if z == 0.0:
        return 0.5
    z2 = z * z
    # tail = P(T > |z|) = I_{nu/(nu+z^2)}(nu/2, 1/2) / 2
    if z2 > nu:
        tail = 0.5 * reg_inc_beta(nu / (nu + z2), 0.5 * nu, 0.5)
    else:
        tail = 0.5 * (1.0 - reg_inc_beta(z2 / (nu + z2), 0.5, 0.5 * nu))
    return 1.0 - tail if z > 0 else tail


# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK qk15).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f, a, b):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    kronrod = fc * _WGK[7]
    gauss = fc * _WG[3]
    for j in range(7):
        dx = half * _XGK[j]
        pair = f(center - dx) + f(center + dx)
        kronrod += _WGK[j] * pair
        if j % 2 == 1:
            gauss += _WG[j // 2] * pair
    kronrod *= half
    gauss *= half
    return kronrod, abs(kronrod - gauss)


def integrate(f, a, b, tol=1e-10, points=None, max_panels=4000):
    """Adaptive Gauss-Kronrod (7/15) quadrature of ``f`` over ``[a, b]``.

    The panel with the largest error estimate is bisected until the summed
    error estimate drops below ``tol``.  ``points`` optionally seeds the
    initial partition, which is how callers flag narrow peaks that a single
    coarse panel could step over.

    Raises ConvergenceError (carrying the current estimate) once more than
    ``max_panels`` panels would be needed.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not (math.isfinite(a) and math.isfinite(b)) or a > b:
        raise DomainError(f"need finite a <= b, got a={a!r}, b={b!r}")
    if a == b:
        return 0.0

    cuts = sorted({a, b, *(p for p in (points or ()) if a < p < b)})
    heap = []
    for lo, hi in zip(cuts, cuts[1:]):
        value, err = _gk15(f, lo, hi)
        heap.append((-err, lo, hi, value))
    heapq.heapify(heap)

    total_err = math.fsum(-item[0] for item in heap)
    while total_err > tol:
        if len(heap) >= max_panels:
            estimate = math.fsum(item[3] for item in heap)
            raise ConvergenceError(
                f"quadrature error estimate {total_err:.3g} above tol {tol:.3g} "
                f"after {len(heap)} panels",
                estimate,
            )
        _, lo, hi, value = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # Panel cannot be split further in floating point.
            estimate = value + math.fsum(item[3] for item in heap)
            raise ConvergenceError("quadrature panel underflow", estimate)
        for sub_lo, sub_hi in ((lo, mid), (mid, hi)):
            sub_value, sub_err = _gk15(f, sub_lo, sub_hi)
            heapq.heappush(heap, (-sub_err, sub_lo, sub_hi, sub_value))
        total_err = math.fsum(-item[0] for item in heap)

    return math.fsum(item[3] for item in heap)
