"""Path-count matrices, their LU factors, hole matrices, and exact counts.

The source of truth for every matrix entry is the reflection-principle path
count; the printed Gamma-ratio and hypergeometric closed forms are evaluated
only as cross-checks.  The hole (Schur-complement) matrices are computed by
the subtraction formula

    e[i][j] = Q[m+i][m+j] - sum_{s=1..m} B(s; l_i) * D(s; r_j)

without materialising the full (m+p) x (m+p) matrix, which keeps large-n
sweeps cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import binomial, gamma_ratio, hyp_terminating, product_formula
from .regions import RegionSpec, lgv_points

HALF = Fraction(1, 2)

Matrix = list  # of list of Fraction/int rows


class RouteMismatchError(ArithmeticError):
    """Two supposedly equal exact computation routes disagreed."""


# ---------------------------------------------------------------------------
# path counts

def path_count(start, end, variant: str = "plain") -> int:
    """Number of north/east lattice paths from start to end.

    ``avoid_diagonal`` counts paths never touching y = x via the reflection
    difference P(end) - P(end reflected); ``weighted_below`` counts paths
    weakly below the diagonal with weight 2 per diagonal touch, which the
    reflection principle turns into the sum P(end) + P(end reflected).
    Both endpoints are expected weakly below y = x - 1.
    """
    (a, b), (c, d) = start, end

    def plain(cx, dy):
        east, north = cx - a, dy - b
        if east < 0 or north < 0:
            return 0
        return math.comb(east + north, east)

    if variant == "plain":
        return plain(c, d)
    if variant == "avoid_diagonal":
        return plain(c, d) - plain(d, c)
    if variant == "weighted_below":
        return plain(c, d) + plain(d, c)
    raise ValueError(f"unknown path count variant {variant!r}")


_VARIANT_OF_KIND = {"lower": "avoid_diagonal", "upper": "weighted_below"}


def path_matrix(spec: RegionSpec, kind: str) -> Matrix:
    """The (m+p) x (m+p) constrained path-count matrix for a half region."""
    starts, ends = lgv_points(spec, kind)
    variant = _VARIANT_OF_KIND[kind]
    return [[Fraction(path_count(s, e, variant)) for e in ends] for s in starts]


def printed_path_entry(spec: RegionSpec, kind: str, i: int, j: int,
                       mixed_variant: str = "recurrence") -> Fraction:
    """The closed-form matrix entry as printed, for cross-checking.

    Indices are 1-based.  For the lower matrix the hole-row/boundary-column
    entry appears in print in two versions that disagree for j >= 2;
    ``mixed_variant`` selects ``"display"`` (the matrix display, which the
    cross-check reports as off) or ``"recurrence"`` (the identity used in
    the LU proof, which matches the path counts).
    """
    n, m = spec.n, spec.m
    half = n // 2
    if kind == "lower":
        if i <= m and j <= m:
            return Fraction(binomial(2 * n, n + j - i) - binomial(2 * n, n + 1 - i - j))
        if i <= m and j > m:
            r = spec.right[j - m - 1]
            return Fraction(2 * i - 1, n + r + 1) * binomial(n + r + 1, half + r // 2 + 1 - i)
        if i > m and j <= m:
            l = spec.left[i - m - 1]
            if mixed_variant == "display":
                k = half - l // 2 - 1 + j
            else:
                k = half - l // 2 + 1 - j
            return Fraction(2 * j - 1, n - l + 1) * binomial(n - l + 1, k)
        r = spec.right[j - m - 1]
        l = spec.left[i - m - 1]
        if r < l:
            return Fraction(0)
        return Fraction(1, r - l + 1) * binomial(r - l + 1, (r - l) // 2)
    if kind == "upper":
        if i <= m and j <= m:
            return Fraction(binomial(2 * n, n + j - i) + binomial(2 * n, n + 1 - i - j))
        if i <= m and j > m:
            r = spec.right[j - m - 1]
            return Fraction(binomial(n + r + 1, half + r // 2 + 1 - i))
        if i > m and j <= m:
            l = spec.left[i - m - 1]
            return Fraction(binomial(n - l + 1, half - l // 2 + 1 - j))
        r = spec.right[j - m - 1]
        l = spec.left[i - m - 1]
        if r < l:
            return Fraction(0)
        return Fraction(binomial(r - l + 1, (r - l) // 2))
    raise ValueError(f"no printed entries for kind {kind!r}")


# ---------------------------------------------------------------------------
# LU factor entries

def _lower_L_boundary(n: int, i: int, j: int) -> Fraction:
    if j > i:
        return Fraction(0)
    return gamma_ratio(
        [2 * i, n + 1, i + j - 1, 2 * j + n],
        [2 * i - 1, 2 * j, i - j + 1, j - i + n + 1, i + j + n],
    )


def _lower_L_hole(n: int, j: int, l: int) -> Fraction:
    sign = -1 if j % 2 == 0 else 1
    return sign * gamma_ratio(
        [j + n - 1, 2 * j + n, n - l + 1, j + l // 2 + n // 2 - 1],
        [j, 2 * j + 2 * n - 2, n // 2 - l // 2 + 1, l // 2 + n // 2, j - l // 2 + n // 2 + 1],
    ) / 2


def _lower_U_boundary(n: int, i: int, j: int) -> Fraction:
    if i > j:
        return Fraction(0)
    return gamma_ratio(
        [2 * j, n + 1, i + j - 1, 2 * i + 2 * n - 1],
        [2 * j - 1, j - i + 1, 2 * i + n - 1, i - j + n + 1, i + j + n],
    )


def _lower_U_hole(n: int, i: int, r: int) -> Fraction:
    sign = -1 if i % 2 == 0 else 1
    return sign * gamma_ratio(
        [2 * i + 1, i + n, n + r + 1, i + n // 2 - r // 2 - 1],
        [2 * i + n - 1, i + 1, n // 2 - r // 2, n // 2 + r // 2 + 1, i + n // 2 + r // 2 + 1],
    ) / 2


def _upper_L_boundary(n: int, i: int, j: int) -> Fraction:
    if j > i:
        return Fraction(0)
    return gamma_ratio(
        [n + 1, i + j - 1, 2 * j + n],
        [2 * j - 1, i - j + 1, j - i + n + 1, i + j + n],
    )


def _upper_L_hole(n: int, j: int, l: int) -> Fraction:
    sign = -1 if j % 2 == 0 else 1
    return sign * gamma_ratio(
        [j + n, 2 * j + n, n - l + 2, j + l // 2 + n // 2 - 1],
        [j, 2 * j + 2 * n, n // 2 - l // 2 + 1, l // 2 + n // 2, j - l // 2 + n // 2 + 1],
    )


def _upper_U_boundary(n: int, i: int, j: int) -> Fraction:
    if i > j:
        return Fraction(0)
    return gamma_ratio(
        [n + 1, i + j - 1, 2 * i + 2 * n],
        [j - i + 1, 2 * i + n - 1, i - j + n + 1, i + j + n],
    )


def _upper_U_hole(n: int, i: int, r: int) -> Fraction:
    sign = -1 if i % 2 == 0 else 1
    return sign * gamma_ratio(
        [2 * i - 1, i + n, n + r + 2, i + n // 2 - r // 2 - 1],
        [i, 2 * i + n - 1, n // 2 - r // 2, n // 2 + r // 2 + 1, i + n // 2 + r // 2 + 1],
    )


LU_BLOCKS = ("l_boundary", "l_hole", "u_boundary", "u_hole")


def lu_factor_entry(block: str, i: int, j: int, spec: RegionSpec, kind: str) -> Fraction:
    """One entry of the explicit LU factors of a half-region path matrix.

    ``l_boundary``/``u_boundary`` take boundary indices 1..m (diagonal
    entries of the L factor evaluate to exactly 1); ``l_hole`` rows and
    ``u_hole`` columns take a hole index in m+1..m+p, with the relevant
    hole position read off the spec.  Signs alternate with the boundary
    index as printed.
    """
    n, m = spec.n, spec.m
    lower = kind == "lower"
    if block == "l_boundary":
        return (_lower_L_boundary if lower else _upper_L_boundary)(n, i, j)
    if block == "u_boundary":
        return (_lower_U_boundary if lower else _upper_U_boundary)(n, i, j)
    if block == "l_hole":
        l = spec.left[i - m - 1]
        return (_lower_L_hole if lower else _upper_L_hole)(n, j, l)
    if block == "u_hole":
        r = spec.right[j - m - 1]
        return (_lower_U_hole if lower else _upper_U_hole)(n, i, r)
    raise ValueError(f"unknown LU block {block!r}")


def _hole_to_hole(l: int, r: int, kind: str) -> Fraction:
    if r < l:
        return Fraction(0)
    if kind == "lower":
        return Fraction(binomial(r - l + 1, (r - l) // 2), r - l + 1)
    return Fraction(binomial(r - l + 1, (r - l) // 2))


def _schur_term(n: int, s: int, l: int, r: int, kind: str) -> Fraction:
    # fused B(s; l) * D(s; r); the alternating signs cancel pairwise
    if kind == "lower":
        nums = [s + n - 1, 2 * s + n, n - l + 1, s + l // 2 + n // 2 - 1,
                2 * s + 1, s + n, n + r + 1, s + n // 2 - r // 2 - 1]
        dens = [s, 2 * s + 2 * n - 2, n // 2 - l // 2 + 1, l // 2 + n // 2,
                s - l // 2 + n // 2 + 1,
                2 * s + n - 1, s + 1, n // 2 - r // 2, n // 2 + r // 2 + 1,
                s + n // 2 + r // 2 + 1]
        return gamma_ratio(nums, dens) / 4
    nums = [s + n, 2 * s + n, n - l + 2, s + l // 2 + n // 2 - 1,
            2 * s - 1, s + n, n + r + 2, s + n // 2 - r // 2 - 1]
    dens = [s, 2 * s + 2 * n, n // 2 - l // 2 + 1, l // 2 + n // 2,
            s - l // 2 + n // 2 + 1,
            s, 2 * s + n - 1, n // 2 - r // 2, n // 2 + r // 2 + 1,
            s + n // 2 + r // 2 + 1]
    return gamma_ratio(nums, dens)


def hole_matrix_entry(spec: RegionSpec, kind: str, i: int, j: int) -> Fraction:
    """Entry (i, j), 1-based, of the p x p hole matrix by subtraction."""
    l = spec.left[i - 1]
    r = spec.right[j - 1]
    n = spec.n
    total = _hole_to_hole(l, r, kind)
    for s in range(1, spec.m + 1):
        total -= _schur_term(n, s, l, r, kind)
    return total


def hole_matrix(spec: RegionSpec, kind: str) -> Matrix:
    """The p x p Schur-complement matrix isolating the holes' contribution."""
    if kind not in _VARIANT_OF_KIND:
        raise ValueError(f"no hole matrix for kind {kind!r}")
    p = spec.p
    return [[hole_matrix_entry(spec, kind, i, j) for j in range(1, p + 1)]
            for i in range(1, p + 1)]


# ---------------------------------------------------------------------------
# hypergeometric closed forms for the hole-matrix entries

def _gamma_half(a: Fraction) -> tuple[Fraction, int]:
    """Gamma(a) for half-integer a as (rational, exponent of sqrt(pi))."""
    value = Fraction(1)
    x = HALF
    if a >= x:
        while x < a:
            value *= x
            x += 1
    else:
        while x > a:
            x -= 1
            value /= x
    return value, 1


def gamma_product(numerators: Sequence, denominators: Sequence,
                  pi_half_power: int = 0) -> Fraction:
    """Exact prod Gamma(num) / prod Gamma(den) * pi^(pi_half_power/2).

    Arguments may be integers or half-integers.  The sqrt(pi) factors from
    half-integer arguments must cancel against pi_half_power exactly; the
    caller pairing them up is what keeps this module free of floating
    point.
    """
    num_int, den_int = [], []
    value = Fraction(1)
    power = pi_half_power
    for a in numerators:
        a = Fraction(a)
        if a.denominator == 1:
            num_int.append(int(a))
        else:
            v, p = _gamma_half(a)
            value *= v
            power += p
    for b in denominators:
        b = Fraction(b)
        if b.denominator == 1:
            den_int.append(int(b))
        else:
            v, p = _gamma_half(b)
            value /= v
            power -= p
    if power != 0:
        raise ArithmeticError("sqrt(pi) factors do not cancel")
    return value * gamma_ratio(num_int, den_int)


def closed_form_entry(spec: RegionSpec, kind: str, i: int, j: int) -> Fraction:
    """The printed hypergeometric closed form of a hole-matrix entry.

    Exact evaluation; serves as a cross-check of hole_matrix_entry, which
    stays authoritative.  The two branches split on the sign of r_j - l_i.
    """
    n, m = spec.n, spec.m
    l = spec.left[i - 1]
    r = spec.right[j - 1]
    N, Lh, Rh = Fraction(n, 2), Fraction(l, 2), Fraction(r, 2)
    two = Fraction(2)
    if kind == "lower":
        if r > l:
            series = hyp_terminating(
                [Rh - N + 1, 1, Rh - Lh + 2, N + Rh + HALF],
                [m + N + Rh + 2, Rh - m - N + 2, Rh - Lh + Fraction(3, 2)], 1)
            prefactor = gamma_product(
                [m + n + 1, N + Rh + HALF, Lh + m + N, m + N - Rh - 1,
                 m + Fraction(3, 2), N - Lh + HALF],
                [N - Rh, m - Lh + N + 1, m + N + Rh + 2, m, Lh + N,
                 m + n - HALF],
                pi_half_power=-2)
            return series * prefactor * two ** (r - l + 2) / (r - l + 1)
        series = hyp_terminating(
            [2 - Lh + Rh, Fraction(3, 2), m + n + 1, 1 - m],
            [N + 2 - Lh, N + Rh + 2, Fraction(5, 2)], 1)
        prefactor = gamma_product(
            [m + Fraction(3, 2), N - Lh + HALF, m + n + 1, N + Rh + HALF],
            [m, N - Lh + 2, m + n - HALF, N + Rh + 2],
            pi_half_power=-2)
        return -series * prefactor * two ** (r - l + 2) / 3
    if kind == "upper":
        if r > l:
            series = hyp_terminating(
                [Rh - N + 1, 1, Rh - Lh + 2, N + Rh + Fraction(3, 2)],
                [m + N + Rh + 2, Rh - m - N + 2, Rh - Lh + Fraction(5, 2)], 1)
            prefactor = gamma_product(
                [m + n + 1, N + Rh + Fraction(3, 2), Lh + m + N,
                 m + N - Rh - 1, m + HALF, N - Lh + Fraction(3, 2)],
                [N - Rh, N - Lh + m + 1, N + m + Rh + 2, m, Lh + N,
                 m + n + HALF],
                pi_half_power=-2)
            return series * prefactor * two ** (r - l + 2) / (r - l + 3)
        series = hyp_terminating(
            [2 + Rh - Lh, HALF, m + n + 1, 1 - m],
            [N - Lh + 2, N + Rh + 2, Fraction(3, 2)], 1)
        prefactor = gamma_product(
            [m + HALF, N - Lh + Fraction(3, 2), m + n + 1, N + Rh + Fraction(3, 2)],
            [m, N - Lh + 2, m + n + HALF, N + Rh + 2],
            pi_half_power=-2)
        return -series * prefactor * two ** (r - l + 2)
    raise ValueError(f"no closed form for kind {kind!r}")


# ---------------------------------------------------------------------------
# determinants and counts

def det_exact(matrix: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals.

    Pivot on the first nonzero entry of each column; the determinant of the
    empty matrix is 1.
    """
    size = len(matrix)
    work = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            sign = -sign
        pivot = work[col][col]
        result *= pivot
        for r in range(col + 1, size):
            factor = work[r][col] / pivot
            if factor:
                row = work[r]
                top = work[col]
                for c in range(col, size):
                    row[c] -= factor * top[c]
    return sign * result


def verify_lu(spec: RegionSpec, kind: str, _perturb=None) -> dict:
    """Check Q = L*U entrywise on the three boundary-touching blocks.

    Returns {"ok": bool, "checked": int, "first_failure": (block, i, j) or
    None}.  ``_perturb`` is a test hook (block, i, j, delta) that offsets a
    single factor entry to confirm the check is sensitive.
    """
    n, m, p = spec.n, spec.m, spec.p
    q = path_matrix(spec, kind)

    def entry(block, i, j):
        value = lu_factor_entry(block, i, j, spec, kind)
        if _perturb and _perturb[:3] == (block, i, j):
            value += _perturb[3]
        return value

    checked = 0
    failure = None

    def mismatch(block, i, j, total, target):
        nonlocal failure
        if total != target and failure is None:
            failure = (block, i, j)

    for i in range(1, m + 1):
        for j in range(1, m + 1):
            total = sum(entry("l_boundary", i, s) * entry("u_boundary", s, j)
                        for s in range(1, min(i, j) + 1))
            checked += 1
            mismatch("boundary", i, j, total, q[i - 1][j - 1])
    for i in range(1, m + 1):
        for j in range(m + 1, m + p + 1):
            total = sum(entry("l_boundary", i, s) * entry("u_hole", s, j)
                        for s in range(1, i + 1))
            checked += 1
            mismatch("boundary_to_hole", i, j, total, q[i - 1][j - 1])
    for i in range(m + 1, m + p + 1):
        for j in range(1, m + 1):
            total = sum(entry("l_hole", i, s) * entry("u_boundary", s, j)
                        for s in range(1, j + 1))
            checked += 1
            mismatch("hole_to_boundary", i, j, total, q[i - 1][j - 1])
    return {"ok": failure is None, "checked": checked, "first_failure": failure}


@dataclass(frozen=True)
class CountResult:
    """An exact count together with the factors that produced it."""

    spec: RegionSpec
    kind: str
    value: int
    factors: dict

    def to_json_dict(self) -> dict:
        def encode(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
            return str(x)
        return {
            "spec": self.spec.to_text(),
            "kind": self.kind,
            "count": str(self.value),
            "factors": {name: encode(value) for name, value in self.factors.items()},
        }


COUNT_KINDS = ("lower", "upper_weighted", "full", "free_half")


def count_region(spec: RegionSpec, kind: str) -> CountResult:
    """Exact (weighted) tiling count of a region, via two asserted routes.

    lower           |det Q_lower|  == TC(n,m) * |det E_lower|
    upper_weighted  |det Q_upper|  == VS(n,m) * |det E_upper|
    full            lower * upper_weighted == box(n,m) * detE_lower * detE_upper
    free_half       == upper_weighted, requires R = -L

    A disagreement between routes means a formula bug and raises.
    """
    n, m = spec.n, spec.m
    if kind == "free_half":
        if tuple(sorted(-x for x in spec.left)) != spec.right:
            raise ValueError("free_half requires R = -L")
        inner = count_region(spec, "upper_weighted")
        return CountResult(spec, "free_half", inner.value, inner.factors)
    if kind in ("lower", "upper_weighted"):
        half_kind = "lower" if kind == "lower" else "upper"
        formula = ("transpose_complement" if kind == "lower" else "vertical_symmetric")
        det_q = det_exact(path_matrix(spec, half_kind))
        prefactor = product_formula(formula, n, m)
        det_e = det_exact(hole_matrix(spec, half_kind))
        if abs(det_q) != prefactor * abs(det_e):
            raise RouteMismatchError(
                f"{kind}: |det Q| = {det_q} but prefactor * |det E| = {prefactor * abs(det_e)}")
        value = abs(det_q)
        if value.denominator != 1:
            raise RouteMismatchError(f"{kind} count is not an integer: {value}")
        return CountResult(spec, kind, value.numerator, {
            "prefactor": prefactor,
            "hole_det": det_e,
            "path_det": det_q,
        })
    if kind == "full":
        lower = count_region(spec, "lower")
        upper = count_region(spec, "upper_weighted")
        box = product_formula("box", n, m)
        det_lower = lower.factors["hole_det"]
        det_upper = upper.factors["hole_det"]
        product = box * det_lower * det_upper
        if det_lower * det_upper < 0:
            raise RouteMismatchError(
                f"hole determinants have opposite signs: {det_lower}, {det_upper}")
        if product != lower.value * upper.value:
            raise RouteMismatchError(
                f"full: box * detE * detE = {product} but factor product = "
                f"{lower.value * upper.value}")
        return CountResult(spec, "full", lower.value * upper.value, {
            "box": box,
            "lower": lower.value,
            "upper_weighted": upper.value,
            "hole_det_lower": det_lower,
            "hole_det_upper": det_upper,
        })
    raise ValueError(f"unknown count kind {kind!r}")
