"""Plane fitting and agreement statistics.

`fit_plane` performs the ordinary least squares fit of ``gl`` against
``c1 + c2*x + c3*y`` used to adapt formula coefficients, with the usual
diagnostics (standard errors, two-sided t-test p-values, R²).  The 3x3
normal system is solved directly with partially pivoted elimination; at
this size that is exact to machine precision and a closed-form oracle in
the test suite cross-checks it.

`pearson` and `mean_diff_band` quantify agreement between two score
series (the adapted-formula output versus a reference), the latter with
a two-standard-deviation margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from scipy.special import betainc

from .errors import (
    InvalidDofError,
    LengthMismatchError,
    RankDeficientError,
    TooFewRowsError,
    ZeroVarianceError,
)

_MIN_ROWS = 4  # 3 coefficients + at least 1 residual degree of freedom


@dataclass(frozen=True)
class RegressionFit:
    """Coefficients of a fitted plane with their diagnostics."""

    c1: float
    c2: float
    c3: float
    se1: float
    se2: float
    se3: float
    p1: float
    p2: float
    p3: float
    r2: float
    residuals: tuple[float, ...]

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    @property
    def standard_errors(self) -> tuple[float, float, float]:
        return (self.se1, self.se2, self.se3)

    @property
    def p_values(self) -> tuple[float, float, float]:
        return (self.p1, self.p2, self.p3)


@dataclass(frozen=True)
class ComparisonStats:
    """Pearson correlation and mean difference ± two standard deviations.

    ``pearson`` is ``None`` when either series is constant, where the
    correlation is undefined.
    """

    pearson: float | None
    mean_diff: float
    half_width: float


def _solve3(matrix: list[list[float]], rhs: list[float]) -> list[float]:
    """Solve a 3x3 linear system by Gaussian elimination, partial pivoting."""
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    n = 3
    scale = max(abs(v) for row in matrix for v in row) or 1.0
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[pivot_row][col]) < 1e-12 * scale:
            raise RankDeficientError("design matrix is rank deficient")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            for c in range(col, n + 1):
                a[r][c] -= factor * a[col][c]
    x = [0.0] * n
    for r in range(n - 1, -1, -1):
        acc = a[r][n] - sum(a[r][c] * x[c] for c in range(r + 1, n))
        x[r] = acc / a[r][r]
    return x


def student_t_p_value(t: float, dof: int) -> float:
    """Two-sided tail probability of Student's t distribution.

    Evaluated through the regularized incomplete beta function, which is
    numerically stable for large ``|t|`` where naive integration is not.
    """
    if dof < 1:
        raise InvalidDofError(f"degrees of freedom must be >= 1, got {dof}")
    if math.isinf(t):
        return 0.0
    x = dof / (dof + t * t)
    return float(betainc(dof / 2.0, 0.5, x))


def fit_plane(rows: Sequence[tuple[float, float, float]]) -> RegressionFit:
    """Least-squares fit of ``gl = c1 + c2*x + c3*y`` over (x, y, gl) rows.

    Requires at least four rows and a full-rank design matrix (x and y not
    collinear with each other or with the constant column).  Standard
    errors come from the residual variance and the inverse normal matrix;
    p-values from a two-sided t-test with N-3 degrees of freedom.
    """
    n = len(rows)
    if n < _MIN_ROWS:
        raise TooFewRowsError(f"need at least {_MIN_ROWS} rows, got {n}")

    sx = sy = sxx = syy = sxy = sg = sgx = sgy = 0.0
    for x, y, gl in rows:
        sx += x
        sy += y
        sxx += x * x
        syy += y * y
        sxy += x * y
        sg += gl
        sgx += gl * x
        sgy += gl * y

    normal = [
        [float(n), sx, sy],
        [sx, sxx, sxy],
        [sy, sxy, syy],
    ]
    rhs = [sg, sgx, sgy]
    c1, c2, c3 = _solve3(normal, rhs)

    residuals = tuple(gl - (c1 + c2 * x + c3 * y) for x, y, gl in rows)
    ss_res = sum(r * r for r in residuals)
    mean_gl = sg / n
    ss_tot = sum((gl - mean_gl) ** 2 for _, _, gl in rows)
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot

    dof = n - 3
    sigma2 = ss_res / dof
    # diagonal of the inverse normal matrix, one solve per unit vector
    inv_diag = [
        _solve3(normal, [1.0, 0.0, 0.0])[0],
        _solve3(normal, [0.0, 1.0, 0.0])[1],
        _solve3(normal, [0.0, 0.0, 1.0])[2],
    ]
    ses = [math.sqrt(max(sigma2 * d, 0.0)) for d in inv_diag]
    pvals = [
        student_t_p_value(c / se, dof) if se > 0.0 else 0.0
        for c, se in zip((c1, c2, c3), ses)
    ]

    return RegressionFit(
        c1=c1, c2=c2, c3=c3,
        se1=ses[0], se2=ses[1], se3=ses[2],
        p1=pvals[0], p2=pvals[1], p3=pvals[2],
        r2=r2,
        residuals=residuals,
    )


def pearson(a: Sequence[float], b: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient of two equal-length series."""
    if len(a) != len(b):
        raise LengthMismatchError(f"series lengths differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise TooFewRowsError("correlation needs at least two pairs")
    mean_a = sum(a) / n
    mean_b = sum(b) / n
    cov = sum((x - mean_a) * (y - mean_b) for x, y in zip(a, b))
    var_a = sum((x - mean_a) ** 2 for x in a)
    var_b = sum((y - mean_b) ** 2 for y in b)
    if var_a == 0.0 or var_b == 0.0:
        raise ZeroVarianceError("correlation undefined for a constant series")
    return cov / math.sqrt(var_a * var_b)


def mean_diff_band(a: Sequence[float], b: Sequence[float]) -> ComparisonStats:
    """Mean of a-b with a two-sample-standard-deviation half width.

    Uses the N-1 (sample) standard deviation of the differences.  The
    correlation field is populated alongside for convenience.
    """
    if len(a) != len(b):
        raise LengthMismatchError(f"series lengths differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise TooFewRowsError("difference band needs at least two pairs")
    diffs = [x - y for x, y in zip(a, b)]
    mean = sum(diffs) / n
    var = sum((d - mean) ** 2 for d in diffs) / (n - 1)
    try:
        corr = pearson(a, b)
    except ZeroVarianceError:
        corr = None
    return ComparisonStats(
        pearson=corr,
        mean_diff=mean,
        half_width=2.0 * math.sqrt(var),
    )
