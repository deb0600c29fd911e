"""Real-valued interaction asymptotics and finite-size sweeps.

Determinants entering any report are computed exactly (Schur form, rational
arithmetic) and converted to floats only at the end; the constants of the
predicted interactions use ordinary double precision.

The predicted interactions follow the electrostatic picture: each induced
hole carries its charge, the bulk interaction multiplies pairwise distances
raised to half the product of the charges, and the free-boundary interaction
adjoins mirror charges across the conductor and halves the exponents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from statistics import linear_regression
from typing import Sequence

from .matrices import det_exact, hole_matrix
from .regions import InducedHole, RegionSpec, distance, induced_holes, validate

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class CorrelationReport:
    n: int
    m: int
    xi: float
    det_lower: float
    det_upper: float
    omega: float
    predicted: float
    ratio: float

    def csv_row(self) -> str:
        reals = (self.det_lower, self.det_upper, self.omega, self.predicted, self.ratio)
        return ",".join([str(self.n), str(self.m), repr(self.xi)]
                        + [repr(x) for x in reals])


CSV_HEADER = "n,m,xi,det_lower,det_upper,omega,predicted,ratio"


@dataclass(frozen=True)
class Regime:
    tag: str  # critical | exponential_decay | exponential_growth


def entry_asym(r: int, l: int, xi: float, kind: str) -> float:
    """Large-separation limit entry of a hole matrix at aspect ratio xi.

    The lower and upper variants differ only by the factor xi*(xi+2).
    """
    if r == l:
        raise ValueError("undefined separation r = l")
    if xi <= 0:
        raise ValueError("xi must be positive")
    base = (2.0 / (xi + 1.0)) ** (r - l + 2) / (math.pi * (r - l))
    scale = math.sqrt(xi * (xi + 2.0))
    if kind == "lower":
        return scale * base
    if kind == "upper":
        return base / scale
    raise ValueError(f"unknown kind {kind!r}")


def cauchy_det(left: Sequence[int], right: Sequence[int]) -> float:
    """|det| of the critical-limit hole matrix, in closed product form.

    Entries are 1/(2 pi (x_i - y_j)) with x, y the rescaled hole positions;
    the product form is the classical Cauchy evaluation.  Both the product
    and the direct determinant are computed and must agree to 1e-12
    relative; the product value is returned.
    """
    p = len(left)
    if len(right) != p:
        raise ValueError("need equally many holes of each orientation")
    if len(set(left) | set(right)) != 2 * p:
        raise ValueError("coincident hole positions")
    if p == 0:
        return 1.0
    product = (1.0 / (2.0 * math.pi)) ** p
    for i in range(1, p):
        for j in range(i):
            product *= distance(right[i], right[j]) * distance(left[i], left[j])
    for l in left:
        for r in right:
            product /= distance(r, l)

    x = [-SQRT3 / 2.0 * l for l in left]
    y = [-SQRT3 / 2.0 * r for r in right]
    rows = [[1.0 / (2.0 * math.pi * (xi - yj)) for yj in y] for xi in x]
    direct = _det_float(rows)
    if abs(abs(direct) - product) > 1e-12 * max(product, 1.0):
        raise ArithmeticError("Cauchy product and direct determinant disagree")
    return product


def _det_float(rows: list) -> float:
    size = len(rows)
    work = [row[:] for row in rows]
    det = 1.0
    for col in range(size):
        pivot = max(range(col, size), key=lambda r: abs(work[r][col]))
        if work[pivot][col] == 0.0:
            return 0.0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        for r in range(col + 1, size):
            f = work[r][col] / work[col][col]
            for c in range(col, size):
                work[r][c] -= f * work[col][c]
    return det


def _single_hole_constant(charge: int, model: str) -> float:
    value = 1.0
    for s in range(abs(charge) // 2):
        if model == "bulk":
            value *= 3.0 ** (s + 0.5) * math.factorial(s) ** 2 / (2.0 * math.pi)
        else:
            value *= 3.0 ** (s / 2.0) * math.factorial(s) / math.sqrt(2.0 * math.pi)
    return value


def predicted_interaction(holes: Sequence[InducedHole], model: str = "bulk") -> float:
    """Coulomb-law prediction for a family of well-separated induced holes."""
    if model == "bulk":
        if sum(h.charge for h in holes) != 0:
            raise ValueError("bulk interaction needs total charge zero")
        charged = [(h.position, h.charge) for h in holes]
        exponent_scale = 0.5
    elif model == "free_boundary":
        if any(h.charge > 0 for h in holes):
            raise ValueError("free-boundary interaction needs left-pointing holes only")
        if any(h.position >= 0 for h in holes):
            raise ValueError("free-boundary holes must lie left of the conductor")
        charged = [(h.position, h.charge) for h in holes]
        charged += [(-pos, -q) for pos, q in charged]  # mirror images
        exponent_scale = 0.25
    else:
        raise ValueError(f"unknown model {model!r}")
    value = 1.0
    for _, q in charged:
        value *= _single_hole_constant(q, model)
    for i in range(1, len(charged)):
        for j in range(i):
            (xi_, qi), (xj, qj) = charged[i], charged[j]
            value *= distance(xi_, xj) ** (exponent_scale * qi * qj)
    return value


def finite_correlation(spec: RegionSpec, model: str = "bulk") -> CorrelationReport:
    """Exact finite-size determinants against the asymptotic prediction."""
    if model == "free_boundary":
        if tuple(sorted(-x for x in spec.left)) != spec.right:
            raise ValueError("free-boundary model requires R = -L")
    det_lower = det_exact(hole_matrix(spec, "lower"))
    det_upper = det_exact(hole_matrix(spec, "upper"))
    if model == "bulk":
        omega = float(det_lower * det_upper)
        predicted = predicted_interaction(induced_holes(spec), "bulk")
    else:
        omega = abs(float(det_upper))
        left_only = [h for h in induced_holes(spec) if h.charge < 0]
        predicted = predicted_interaction(left_only, "free_boundary")
    ratio = omega / predicted if predicted else math.inf
    return CorrelationReport(
        n=spec.n, m=spec.m, xi=2.0 * spec.m / spec.n,
        det_lower=float(det_lower), det_upper=float(det_upper),
        omega=omega, predicted=predicted, ratio=ratio,
    )


def aspect_m(xi: Fraction, n: int) -> int:
    """The number of boundary paths for aspect ratio xi: m = round(xi*n/2)."""
    m = round(Fraction(xi) * n / 2)
    if m < 1:
        raise ValueError("aspect ratio too small for this n")
    return m


def separation_sweep(n: int, xi: Fraction, half_separations: Sequence[int],
                     model: str = "bulk"):
    """Correlations for hole pairs at positions -d, +d with d in the list.

    Returns (reports, slope, intercept) where slope and intercept come from
    the least-squares fit of log omega against log pairwise distance.
    """
    m = aspect_m(xi, n)
    reports = []
    log_d = []
    log_w = []
    for d in half_separations:
        spec = validate(n, m, [-d], [d])
        report = finite_correlation(spec, model)
        reports.append(report)
        log_d.append(math.log(distance(-d, d)))
        log_w.append(math.log(abs(report.omega)))
    slope, intercept = linear_regression(log_d, log_w)
    return reports, slope, intercept


def size_sweep(left: Sequence[int], right: Sequence[int], xi: Fraction,
               n_values: Sequence[int], scale_holes: bool = False):
    """Correlations for fixed or n-scaled holes across hexagon sizes.

    With ``scale_holes`` the given positions are treated as fractions of n
    in quarters, i.e. position q becomes 2*round(q*n/8) -- this keeps hole
    separations growing with n, which is what exposes the off-critical
    exponential regimes.  Returns (reports, trend) with ``trend`` the
    least-squares slope of log |det_upper| against n.
    """
    reports = []
    xs, ys = [], []
    for n in n_values:
        m = aspect_m(xi, n)
        if scale_holes:
            lefts = [2 * round(q * n / 8) for q in left]
            rights = [2 * round(q * n / 8) for q in right]
        else:
            lefts, rights = list(left), list(right)
        spec = validate(n, m, lefts, rights)
        report = finite_correlation(spec, "bulk")
        reports.append(report)
        xs.append(float(n))
        ys.append(math.log(abs(report.det_upper)))
    slope, _ = linear_regression(xs, ys)
    return reports, slope


def classify_regime(spec: RegionSpec, xi) -> Regime:
    """Off-critical behaviour of the hole interaction in the separations.

    At xi = 1 the interaction is critical (power law).  Away from xi = 1
    the leftmost hole decides: its matrix row (left-pointing) or column
    (right-pointing) carries the factor (2/(xi+1))**separation, and the
    determinant follows that row or column.  For xi > 1 a left-pointing
    leftmost hole therefore sends the determinant to zero and a
    right-pointing one makes it grow; for xi < 1 the converse holds.
    """
    if spec.p < 1:
        raise ValueError("regime classification needs at least one hole")
    xi = Fraction(xi)
    if xi <= 0:
        raise ValueError("xi must be positive")
    if xi == 1:
        return Regime("critical")
    leftmost_is_left = min(spec.left) < min(spec.right)
    if xi > 1:
        return Regime("exponential_decay" if leftmost_is_left else "exponential_growth")
    return Regime("exponential_growth" if leftmost_is_left else "exponential_decay")
