"""Divergences and hypothesis tests.

Jensen-Shannon divergence uses base-2 logarithms so values live in
[0, 1]. Mann-Whitney U switches from an exact null distribution (counting
recurrence) to a tie-corrected, continuity-corrected normal approximation
above a combined sample size of 16 or in the presence of ties. The
Student t CDF is computed through the regularized incomplete beta
function (continued fraction), good to well below 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import NumericError

MANN_WHITNEY_EXACT_LIMIT = 16  # combined sample size; above this: normal approx
ORDERING_TOLERANCE = 1e-12

MANN_WHITNEY_EXACT = "mann_whitney_u_exact"
MANN_WHITNEY_NORMAL = "mann_whitney_u_normal"
PAIRED_T = "paired_t"


class Shift(str, Enum):
    TOWARD = "shift_toward"
    AWAY = "shift_away"
    TIE = "tie"


@dataclass
class TestResult:
    statistic: float
    p_value: float
    method: str
    degenerate: bool = False


def _as_distribution(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise NumericError(f"{name} must be a 1-d vector")
    if np.any(arr < 0):
        raise NumericError(f"{name} has negative mass")
    if abs(float(arr.sum()) - 1.0) > 1e-9:
        raise NumericError(f"{name} is not normalized (sum={arr.sum()!r})")
    return arr


def jsd(p, q) -> float:
    """Jensen-Shannon divergence with base-2 logs; 0 <= jsd <= 1.

    jsd(p, q) = (KL(p||m) + KL(q||m)) / 2 with m = (p + q) / 2.
    Zero-mass entries contribute zero.
    """
    p = _as_distribution(p, "p")
    q = _as_distribution(q, "q")
    if p.shape != q.shape:
        raise NumericError(f"length mismatch: {p.shape[0]} vs {q.shape[0]}")
    m = 0.5 * (p + q)
    value = 0.5 * (_kl_bits(p, m) + _kl_bits(q, m))
    return min(1.0, max(0.0, value))


def _kl_bits(p: np.ndarray, m: np.ndarray) -> float:
    mask = p > 0
    return float(np.sum(p[mask] * np.log2(p[mask] / m[mask])))


@lru_cache(maxsize=None)
def _u_counts(n1: int, n2: int) -> tuple[int, ...]:
    """Null distribution of the U statistic: counts[u] over u = 0..n1*n2.

    f(n1, n2, u) = f(n1-1, n2, u-n2) + f(n1, n2-1, u), seeded by
    f(0, n2, 0) = f(n1, 0, 0) = 1.
    """
    if n1 == 0 or n2 == 0:
        return (1,)
    shorter = _u_counts(n1 - 1, n2)
    longer = _u_counts(n1, n2 - 1)
    total = n1 * n2
    counts = []
    for u in range(total + 1):
        c = 0
        if u - n2 >= 0 and u - n2 < len(shorter):
            c += shorter[u - n2]
        if u < len(longer):
            c += longer[u]
        counts.append(c)
    return tuple(counts)


def _ranks_with_ties(pooled: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Mean ranks (1-based) and tie-group sizes of the pooled sample."""
    order = np.argsort(pooled, kind="stable")
    sorted_vals = pooled[order]
    ranks = np.empty(len(pooled))
    tie_sizes = []
    i = 0
    while i < len(sorted_vals):
        j = i
        while j + 1 < len(sorted_vals) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        tie_sizes.append(j - i + 1)
        i = j + 1
    return ranks, np.array(tie_sizes)


def mann_whitney_u(x, y) -> TestResult:
    """Two-sided Mann-Whitney U test; statistic is U of the first sample.

    Exact null distribution when the combined size is at most 16 and the
    pooled data is tie-free; otherwise a normal approximation with
    tie-corrected variance and continuity correction. Identical pooled
    values yield p = 1.0 by convention.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n1, n2 = len(x), len(y)
    if n1 < 1 or n2 < 1:
        raise NumericError("both samples must be non-empty")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise NumericError("samples must be finite")
    pooled = np.concatenate([x, y])
    ranks, tie_sizes = _ranks_with_ties(pooled)
    u_x = float(ranks[:n1].sum()) - n1 * (n1 + 1) / 2.0
    u_y = n1 * n2 - u_x
    has_ties = bool(np.any(tie_sizes > 1))

    if not has_ties and n1 + n2 <= MANN_WHITNEY_EXACT_LIMIT:
        counts = _u_counts(n1, n2)
        u_max = int(round(max(u_x, u_y)))
        tail = sum(counts[u_max:])
        p = min(1.0, 2.0 * tail / sum(counts))
        return TestResult(u_x, p, MANN_WHITNEY_EXACT)

    n = n1 + n2
    tie_term = float(np.sum(tie_sizes**3 - tie_sizes)) / (n * (n - 1))
    variance = n1 * n2 / 12.0 * ((n + 1) - tie_term)
    if variance <= 0:
        # every pooled value identical
        return TestResult(u_x, 1.0, MANN_WHITNEY_NORMAL, degenerate=True)
    mean = n1 * n2 / 2.0
    z = max(0.0, abs(u_x - mean) - 0.5) / math.sqrt(variance)
    p = min(1.0, math.erfc(z / math.sqrt(2.0)))
    return TestResult(u_x, p, MANN_WHITNEY_NORMAL)


def paired_t(a, b) -> TestResult:
    """Two-sided paired Student's t test on per-label differences.

    t = mean(d) / (sd(d) / sqrt(n)) with sample sd (n-1 denominator) and
    n-1 degrees of freedom. Zero-variance differences degenerate to
    p = 1.0 (zero mean) or p = 0.0 (nonzero mean), flagged.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise NumericError("paired samples must be 1-d vectors of equal length")
    n = len(a)
    if n < 2:
        raise NumericError("paired t needs at least 2 pairs")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise NumericError("samples must be finite")
    d = a - b
    mean = float(d.mean())
    sd = float(d.std(ddof=1))
    if sd == 0.0:
        if mean == 0.0:
            return TestResult(0.0, 1.0, PAIRED_T, degenerate=True)
        return TestResult(math.copysign(math.inf, mean), 0.0, PAIRED_T, degenerate=True)
    t = mean / (sd / math.sqrt(n))
    return TestResult(t, student_t_two_sided_p(t, n - 1), PAIRED_T)


def ordering_check(
    d_before: float, d_after: float, tolerance: float = ORDERING_TOLERANCE
) -> Shift:
    """Compare the two divergences-to-source; smaller after means a shift
    toward the source community."""
    if not (math.isfinite(d_before) and math.isfinite(d_after)):
        raise NumericError("divergences must be finite")
    if d_before < 0 or d_after < 0:
        raise NumericError("divergences must be non-negative")
    if d_after < d_before - tolerance:
        return Shift.TOWARD
    if d_after > d_before + tolerance:
        return Shift.AWAY
    return Shift.TIE


# --- Student t distribution -------------------------------------------------

_BETACF_MAX_ITER = 500
_BETACF_EPS = 1e-16
_BETACF_FPMIN = 1e-300


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (modified
    Lentz's method)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _BETACF_FPMIN:
        d = _BETACF_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETACF_FPMIN:
            d = _BETACF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _BETACF_FPMIN:
            c = _BETACF_FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETACF_FPMIN:
            d = _BETACF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _BETACF_FPMIN:
            c = _BETACF_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_EPS:
            return h
    raise NumericError(f"incomplete beta did not converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and 0 <= x <= 1."""
    if a <= 0 or b <= 0:
        raise NumericError("incomplete beta requires a, b > 0")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_cdf(t: float, df: float) -> float:
    """P(T <= t) for Student's t with df degrees of freedom."""
    if df <= 0:
        raise NumericError("degrees of freedom must be positive")
    if t == 0.0:
        return 0.5
    x = df / (df + t * t)
    tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x)
    return 1.0 - tail if t > 0 else tail


def student_t_two_sided_p(t: float, df: float) -> float:
    """P(|T| >= |t|), the two-sided p-value."""
    if df <= 0:
        raise NumericError("degrees of freedom must be positive")
    if not math.isfinite(t):
        return 0.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)
