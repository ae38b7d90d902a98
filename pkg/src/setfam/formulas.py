"""Closed-form values and bounds for disjointness statistics, evaluated exactly.

Every function here returns a Python int or Fraction; no floating point
enters any bound (the one informational threshold involving e^{3q} is
explicitly labeled as such and kept out of the bound reports).

The central quantity is the exact disjoint-pair count of the lex segment:
writing r for the slice index of s (the segment fills r-1 full stars and
part of the r-th slice), a set whose least element is i is disjoint from
exactly C(n-j-k, k-1) sets of slice j < i, and sets sharing a slice are
never disjoint.  Summing gives

    sum_{i=2}^{r-1} C(n-i,k-1) * sum_{j=1}^{i-1} C(n-j-k,k-1)
    + (s - sum_{i=1}^{r-1} C(n-i,k-1)) * sum_{j=1}^{r-1} C(n-j-k,k-1),

with empty sums equal to zero (so the intersecting range r <= 1 gives 0).
The derivation only needs the zero convention C(m, j) = 0 for m < j, so the
formula is exact for every 0 <= s <= C(n,k), not just the theorem ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Params, RangeError, binom, derive_r

BOUND_NAMES = (
    "lex_formula",
    "upper_eq1",
    "bonferroni_eq2",
    "qmatch_upper_eq3",
    "qmatch_lower_eq4_core",
    "tstar_heuristic_eq5",
    "prop21_floor",
    "spectral_kneser",
)


def value_str(value) -> str | None:
    """Decimal string for ints, 'p/q' for rationals, None passes through."""
    if value is None:
        return None
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass(frozen=True)
class BoundReport:
    """One named bound value, or the reason it does not apply."""

    name: str
    value: int | Fraction | None
    applicable: bool
    reason: str | None = None

    def __post_init__(self):
        if self.name not in BOUND_NAMES:
            raise RangeError(f"unknown bound name {self.name!r}")

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "value": value_str(self.value),
            "applicable": self.applicable,
            "reason": self.reason,
        }


def lex_disj_formula(n: int, k: int, s: int) -> int:
    """Exact disjoint-pair count of the s lexicographically first k-sets."""
    r = derive_r(n, k, s)
    if r <= 1:
        return 0

    def slice_pairs(i: int) -> int:
        # disjoint partners of a set with least element i, in earlier slices
        return sum(binom(n - j - k, k - 1) for j in range(1, i))

    total = sum(binom(n - i, k - 1) * slice_pairs(i) for i in range(2, r))
    prefix = sum(binom(n - i, k - 1) for i in range(1, r))
    return total + (s - prefix) * slice_pairs(r)


def upper_bound_eq1(s: int, r: int) -> Fraction:
    """Equal-distribution upper bound (1/2)(1 - 1/r)s^2 on the lex minimum."""
    if r < 1:
        raise RangeError(f"need r >= 1, got r={r}")
    return Fraction(1, 2) * (1 - Fraction(1, r)) * s * s


def lower_order_eq2(n: int, k: int, r: int) -> tuple[int, Fraction]:
    """Size forced by r slices: the Bonferroni value and its simplified form.

    Returns ((r-1)C(n-1,k-1) - C(r-1,2)C(n-2,k-2), (rn/3k)C(n-2,k-2)).
    The first is the exact inclusion-exclusion truncation; the second is the
    coarser closed form implied by it.
    """
    if r < 1 or n < 2:
        raise RangeError(f"need r >= 1 and n >= 2, got r={r} n={n}")
    bonferroni = (r - 1) * binom(n - 1, k - 1) - binom(r - 1, 2) * binom(n - 2, k - 2)
    simplified = Fraction(r * n, 3 * k) * binom(n - 2, k - 2)
    return bonferroni, simplified


def qmatch_upper_eq3(s: int, r: int, q: int) -> Fraction:
    """Equal-distribution upper bound C(r,q)(s/r)^q on the lex q-matching count."""
    if r < 1 or q < 1:
        raise RangeError(f"need r >= 1 and q >= 1, got r={r} q={q}")
    return binom(r, q) * Fraction(s, r) ** q


def qmatch_lower_eq4_core(n: int, k: int, r: int, q: int, alpha: Fraction) -> Fraction:
    """Two-term q-matching lower bound for the lex segment, pre-asymptotic form.

    alpha is the fill fraction of the r-th slice measured against the full
    star size C(n-1,k-1).  Valid as a lower bound for the lex segment only,
    not for arbitrary families.
    """
    if n <= k * q + r:
        raise RangeError(f"need n > k*q + r, got n={n} k={k} q={q} r={r}")
    base = binom(n - k * q - r, k - 1)
    return (
        Fraction(alpha) * binom(n - 1, k - 1) * binom(r - 1, q - 1) * base ** (q - 1)
        + binom(r - 1, q) * base**q
    )


def tstar_heuristic_eq5(n: int, k: int, t: int) -> int:
    """Upper bound (k-t+1)C(n-t-1,k-t-1) on t-intersections with a full t-star.

    Bounds how many members of a full t-star meet a set F outside the star in
    at least t elements; the worst F meets the center in t-1 elements.  Exact
    for k-t = 1, a strict union bound for k-t >= 2.
    """
    if not 1 <= t < k < n:
        raise RangeError(f"need 1 <= t < k < n, got n={n} k={k} t={t}")
    return (k - t + 1) * binom(n - t - 1, k - t - 1)


def prop21_floor(n: int, k: int) -> int:
    """Disjoint pairs forced once a family outgrows a star by one set.

    Any family of C(n-1,k-1)+1 sets has at least C(n-k-1,k-1) disjoint pairs.
    """
    if n < 2 * k:
        raise RangeError(f"need n >= 2k, got n={n} k={k}")
    return binom(n - k - 1, k - 1)


@dataclass(frozen=True)
class ThresholdReport:
    """Slice index, hypothesis flags and fill fractions for given parameters.

    alpha measures how full the r-th slice is against the full star size
    C(n-t,k-t) (the classical normalization); alpha_slice measures it against
    the actual r-th slice size C(n-t-r+1,k-t).  Both are exact rationals in
    [0, 1].  n1_informational is the suggested-order threshold
    c*ell^2*k^5*(ell^2+k^2)*e^{3q}, reported as a float for information only.
    """

    n: int
    k: int
    s: int
    t: int
    q: int
    ell: int
    r: int | None
    alpha: Fraction | None
    alpha_slice: Fraction | None
    n_ok_thm14: bool
    range_ok: bool
    n1_informational: float

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "s": self.s,
            "t": self.t,
            "q": self.q,
            "ell": self.ell,
            "r": self.r,
            "alpha": value_str(self.alpha),
            "alpha_slice": value_str(self.alpha_slice),
            "n_ok_thm14": self.n_ok_thm14,
            "range_ok": self.range_ok,
            "n1_informational": self.n1_informational,
        }


def _slice_prefix_size(n: int, k: int, t: int, j: int) -> int:
    """Size of the union of the first j full t-stars on the common core."""
    return binom(n - t + 1, k - t + 1) - binom(n - t - j + 1, k - t + 1)


def thresholds(params: Params, const_c: float = 1.0) -> ThresholdReport:
    """Hypothesis flags and the exact fill fraction alpha for given parameters."""
    n, k, s, t, q = params.n, params.k, params.s, params.t, params.q
    ell = params.ell_effective
    r = params.r
    if r is None:
        alpha = alpha_slice = None
    elif r == 0:
        alpha = alpha_slice = Fraction(0)
    else:
        extra = s - _slice_prefix_size(n, k, t, r - 1)
        alpha = Fraction(extra, binom(n - t, k - t))
        alpha_slice = Fraction(extra, binom(n - t - r + 1, k - t))
    n_ok = n > 108 * k * k * ell * (k + ell)
    range_ok = s <= binom(n - t + 1, k - t + 1) - binom(n - t - ell + 1, k - t + 1)
    n1 = const_c * ell * ell * k**5 * (ell * ell + k * k) * math.exp(3 * q)
    return ThresholdReport(n, k, s, t, q, ell, r, alpha, alpha_slice, n_ok, range_ok, n1)


def evaluate_all(params: Params) -> list[BoundReport]:
    """Every named bound at these parameters, inapplicable ones flagged."""
    from .kneser import spectral_lower_bound

    n, k, s, t, q = params.n, params.k, params.s, params.t, params.q
    r = params.r
    th = thresholds(params)
    reports = []

    if r is None:
        reports.append(
            BoundReport("lex_formula", None, False, "s lies beyond the common-core block for this t")
        )
    else:
        reports.append(BoundReport("lex_formula", lex_disj_formula(n, k, s), True))

    if r is None or r < 1:
        reports.append(BoundReport("upper_eq1", None, False, "no slice index (s = 0)"))
        reports.append(BoundReport("qmatch_upper_eq3", None, False, "no slice index (s = 0)"))
    else:
        reports.append(BoundReport("upper_eq1", upper_bound_eq1(s, r), True))
        reports.append(BoundReport("qmatch_upper_eq3", qmatch_upper_eq3(s, r, q), True))

    if r is None or r < 1:
        reports.append(BoundReport("bonferroni_eq2", None, False, "no slice index (s = 0)"))
    else:
        bonf, simplified = lower_order_eq2(n, k, r)
        reports.append(
            BoundReport("bonferroni_eq2", bonf, True, f"simplified form (rn/3k)C(n-2,k-2) = {simplified}")
        )

    if r is None or r < 1:
        reports.append(BoundReport("qmatch_lower_eq4_core", None, False, "no slice index (s = 0)"))
    elif n <= k * q + r:
        reports.append(BoundReport("qmatch_lower_eq4_core", None, False, f"requires n > k*q + r = {k * q + r}"))
    else:
        reports.append(
            BoundReport(
                "qmatch_lower_eq4_core",
                qmatch_lower_eq4_core(n, k, r, q, th.alpha),
                True,
                "lower bound for the lex segment only",
            )
        )

    if 1 <= t < k < n:
        reports.append(BoundReport("tstar_heuristic_eq5", tstar_heuristic_eq5(n, k, t), True))
    else:
        reports.append(BoundReport("tstar_heuristic_eq5", None, False, "requires 1 <= t < k < n"))

    if n >= 2 * k:
        reports.append(BoundReport("prop21_floor", prop21_floor(n, k), True))
    else:
        reports.append(BoundReport("prop21_floor", None, False, "requires n >= 2k"))

    reports.append(BoundReport("spectral_kneser", spectral_lower_bound(n, k, s), True))
    return reports
