"""Closed-form and Euler-Rayleigh bounds for the largest zero x_{1,n}(lam).

All formulas are evaluated in exact rationals; a square root or m-th root is
taken only at the very end, so a strictness verdict at 1e-12 is never decided
by formula round-off.

The Euler-Rayleigh engine works on the normalised t-basis polynomial
f(t) = sum a_k t^k (a_0 = 1, t = (1-x)/2) and the reciprocal power sums
S_j = sum_k t_k^(-j), obtained from Newton's identities

    S_j = -j a_j - sum_{i=1}^{j-1} a_i S_{j-i}      (a_j = 0 for j > deg f).

Because x = 1 - 2t is decreasing, a lower bound on the smallest t-root is an
upper bound on x_{1,n} and vice versa.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .core import HALF, Params, coeffs_t
from .errors import DegenerateParameters, DomainError, PreconditionViolated
from .zeros import largest_zero

__all__ = [
    "Side",
    "Bound",
    "PowerSums",
    "BoundReport",
    "STRICT_TOL",
    "bound_upper_thm21",
    "bound_lower_thm22",
    "power_sums",
    "newton_power_sums",
    "er_bounds_positive",
    "er_bounds_quasi",
    "bounds_thm33",
    "thm33_printed_middle",
    "bound_report",
]

log = logging.getLogger(__name__)

STRICT_TOL = 1e-12
THREE_HALVES = Fraction(3, 2)


class Side(str, enum.Enum):
    LOWER = "LOWER"
    UPPER = "UPPER"


class Verdict(str, enum.Enum):
    PASS = "PASS"
    EQUALITY = "EQUALITY"
    FAIL = "FAIL"


@dataclass(frozen=True)
class Bound:
    label: str
    side: Side
    value: float
    note: str = ""


@dataclass(frozen=True)
class PowerSums:
    params: Params
    m_max: int
    values: tuple

    def __getitem__(self, j: int) -> Fraction:
        """S_j, one-based."""
        if not 1 <= j <= self.m_max:
            raise IndexError(f"S_{j} not computed (m_max={self.m_max})")
        return self.values[j - 1]


@dataclass
class BoundReport:
    params: Params
    bounds: list
    witness: float | None = None
    verdicts: dict = field(default_factory=dict)
    margins: dict = field(default_factory=dict)
    m: int | None = None
    extras: dict = field(default_factory=dict)

    def __getitem__(self, label: str) -> float:
        for b in self.bounds:
            if b.label == label:
                return b.value
        raise KeyError(label)

    def labels(self):
        return [b.label for b in self.bounds]

    def lowers(self):
        return [b for b in self.bounds if b.side is Side.LOWER]

    def uppers(self):
        return [b for b in self.bounds if b.side is Side.UPPER]

    def judge(self, witness: float, tol: float = STRICT_TOL) -> "BoundReport":
        self.witness = float(witness)
        for b in self.bounds:
            slack = witness - b.value if b.side is Side.LOWER else b.value - witness
            self.margins[b.label] = slack
            if slack > tol:
                self.verdicts[b.label] = Verdict.PASS
            elif slack >= -tol:
                self.verdicts[b.label] = Verdict.EQUALITY
            else:
                self.verdicts[b.label] = Verdict.FAIL
        return self

    @property
    def verdict(self) -> Verdict | None:
        if not self.verdicts:
            return None
        vs = set(self.verdicts.values())
        if Verdict.FAIL in vs:
            return Verdict.FAIL
        if Verdict.EQUALITY in vs:
            return Verdict.EQUALITY
        return Verdict.PASS

    def to_dict(self) -> dict:
        return {
            "n": self.params.n,
            "lambda": str(self.params.lam),
            "m": self.m,
            "witness": self.witness,
            "verdict": self.verdict.value if self.verdict else None,
            "bounds": [
                {
                    "label": b.label,
                    "side": b.side.value,
                    "value": b.value,
                    "verdict": self.verdicts[b.label].value if b.label in self.verdicts else None,
                    "margin": self.margins.get(b.label),
                    "note": b.note,
                }
                for b in self.bounds
            ],
        }


def _params(p) -> Params:
    return p if isinstance(p, Params) else Params(*p)


def _root(q: Fraction, k: int = 2) -> float:
    """Positive k-th root of an exact positive rational, correctly rounded."""
    if q <= 0:
        raise ValueError(f"root of non-positive {q}")
    with mpmath.workdps(40):
        return float(mpmath.root(mpmath.mpf(q.numerator) / q.denominator, k))


# ---------------------------------------------------------------- closed forms


def thm21_square(p: Params) -> Fraction:
    n, lam = p.n, p.lam
    if n < 2:
        raise DegenerateParameters("needs n >= 2")
    if n + 2 * lam <= 0:
        raise DegenerateParameters(f"n + 2*lambda = {n + 2 * lam} <= 0")
    return Fraction(n - 1) / (n + 2 * lam)


def bound_upper_thm21(p) -> float:
    """sqrt((n-1)/(n+2lam)), an upper bound for x_{1,n} in the quasi regime."""
    return _root(thm21_square(_params(p)))


def thm22_square(p: Params) -> Fraction:
    n, lam = p.n, p.lam
    if n < 2:
        raise DegenerateParameters("needs n >= 2")
    if n + 2 * lam + 1 <= 0:
        raise DegenerateParameters(f"n + 2*lambda + 1 = {n + 2 * lam + 1} <= 0")
    arg = 1 + (2 * lam + 1) * (2 * lam + 3) / ((n - 1) * (n + 2 * lam + 1))
    if arg <= 0:
        raise DegenerateParameters(f"radicand {arg} <= 0 for {p}")
    return 1 / arg


def bound_lower_thm22(p) -> float:
    """(1 + (2lam+1)(2lam+3)/((n-1)(n+2lam+1)))^(-1/2)."""
    return _root(thm22_square(_params(p)))


def thm33_lower1_exact(p: Params) -> Fraction:
    n, lam = p.n, p.lam
    if n < 2 or n + 2 * lam + 1 <= 0:
        raise DegenerateParameters(f"lower bound undefined for {p}")
    return 1 / (1 + (2 * lam + 1) * (2 * lam + 3) / (2 * (n - 1) * (n + 2 * lam + 1)))


def thm33_upper_exact(p: Params) -> Fraction:
    n, lam = p.n, p.lam
    if n + 2 * lam <= 0:
        raise DegenerateParameters(f"n + 2*lambda = {n + 2 * lam} <= 0")
    return 1 - (2 * lam + 1) / (n * (n + 2 * lam))


def s2_closed_form(p: Params) -> Fraction:
    n, lam = p.n, p.lam
    u = 2 * lam + 1
    return 4 * n * (n + 2 * lam) * (2 * n * n + 4 * n * lam + u * u) / (u * u * (2 * lam + 3))


def thm33_printed_middle(p) -> float:
    """The middle lower bound exactly as typeset, leading factor 2 included.

    It equals 1 + 4 S_2^(-1/2), twice the correction 1 + 2 S_2^(-1/2) that
    the power-sum chain actually gives, and overshoots x_{1,n}. Kept only so
    the discrepancy can be checked.
    """
    p = _params(p)
    n, lam = p.n, p.lam
    u = 2 * lam + 1
    num = 2 * u
    rad = (2 * lam + 3) / (n * (2 * lam + n) * (4 * lam * lam + 4 * n * lam + 2 * n * n + 4 * lam + 1))
    return 1 - float(num) * _root(rad)


# ------------------------------------------------------------- power sums


def newton_power_sums(a, m: int) -> list:
    """S_1..S_m of the reciprocal roots of sum a_k t^k, a[0] == 1."""
    a = list(a)
    if a[0] != 1:
        raise ValueError("constant coefficient must be 1")
    deg = len(a) - 1
    s = []
    for j in range(1, m + 1):
        acc = -j * a[j] if j <= deg else 0
        for i in range(1, min(j - 1, deg) + 1):
            acc -= a[i] * s[j - i - 1]
        s.append(acc)
    return s


def power_sums(p, m: int) -> PowerSums:
    p = _params(p)
    if m < 1:
        raise ValueError("m must be >= 1")
    a = coeffs_t(p).coeffs
    return PowerSums(p, m, tuple(newton_power_sums(a, m)))


# ----------------------------------------------------------- Euler-Rayleigh


def er_bounds_positive(p, m: int = 1) -> BoundReport:
    """Order-m bounds when every t-root lies in (0, 1), i.e. lam > -1/2.

    S_m^(-1/m) <= t_1 <= S_m / S_{m+1}, mapped through x = 1 - 2t.
    """
    p = _params(p)
    if p.lam <= -HALF:
        raise DomainError(f"positive-root chain needs lambda > -1/2, got {p.lam}")
    s = power_sums(p, m + 1)
    sm, sm1 = s[m], s[m + 1]
    if sm <= 0 or sm1 <= 0:
        raise PreconditionViolated(f"S_{m}, S_{m + 1} must be positive for {p}")
    t_lo = 1 / _root(sm, m)
    t_hi = sm / sm1
    rep = BoundReport(
        p,
        [
            Bound("er_m_lower", Side.LOWER, float(1 - 2 * t_hi), f"m={m}"),
            Bound("er_m_upper", Side.UPPER, 1.0 - 2.0 * t_lo, f"m={m}"),
        ],
        m=m,
    )
    rep.extras["t_interval"] = (t_lo, float(t_hi))
    return rep


def er_bounds_quasi(p, m: int = 1) -> BoundReport:
    """Order-m bounds when exactly one t-root is negative.

    With S_odd < 0 < S_even:
        -|S_{2m-1}|^(-1/(2m-1)) < t_1 < -S_{2m}^(-1/(2m)) < S_{2m-1}/S_{2m}
        S_{2m}/S_{2m+1} < t_1
    """
    p = _params(p)
    if not (-THREE_HALVES < p.lam < -HALF):
        raise DomainError(f"one-negative-root chain needs -3/2 < lambda < -1/2, got {p.lam}")
    if p.n + 2 * p.lam <= 0:
        raise DegenerateParameters(f"n + 2*lambda <= 0 for {p}")
    a1 = coeffs_t(p).coeffs[1]
    if a1 <= 0:
        raise PreconditionViolated(f"a_1 = {a1} must be positive")
    s = power_sums(p, 2 * m + 1)
    s_odd, s_even, s_next = s[2 * m - 1], s[2 * m], s[2 * m + 1]
    if not (s_odd < 0 < s_even and s_next < 0):
        raise PreconditionViolated(
            f"sign pattern broken for {p}: S_{2 * m - 1}={float(s_odd):.3g}, "
            f"S_{2 * m}={float(s_even):.3g}, S_{2 * m + 1}={float(s_next):.3g}"
        )
    k_odd, k_even = 2 * m - 1, 2 * m
    t_lo_root = -1 / _root(-s_odd, k_odd)
    t_hi_root = -1 / _root(s_even, k_even)
    t_lo_ratio = s_even / s_next
    t_hi_ratio = s_odd / s_even
    note = f"m={m}"
    rep = BoundReport(
        p,
        [
            Bound("er_m_lower", Side.LOWER, 1.0 - 2.0 * t_hi_root, note),
            Bound("er_m_lower_ratio", Side.LOWER, float(1 - 2 * t_hi_ratio), note),
            Bound("er_m_upper", Side.UPPER, 1.0 - 2.0 * t_lo_root, note),
            Bound("er_m_upper_ratio", Side.UPPER, float(1 - 2 * t_lo_ratio), note),
        ],
        m=m,
    )
    rep.extras["t_interval"] = (max(t_lo_root, float(t_lo_ratio)), t_hi_root)
    return rep


# ------------------------------------------------------------------ report


def bounds_thm33(p) -> BoundReport:
    """The three-term chain lower1 < lower2 < x_{1,n} < upper.

    lower1 = 1 - 2 S_1/S_2, lower2 = 1 + 2 S_2^(-1/2), upper = 1 + 2/|S_1|.
    For lam > -1/2 only lower1 and upper apply (all t-roots positive);
    at lam = -1/2 all three collapse to 1.
    """
    p = _params(p)
    if p.lam <= -THREE_HALVES:
        raise DomainError(f"lambda must exceed -3/2, got {p.lam}")
    if p.n < 2 or p.n + 2 * p.lam <= 0:
        raise DegenerateParameters(f"bounds undefined for {p}")
    lower1 = thm33_lower1_exact(p)
    upper = thm33_upper_exact(p)
    extended = p.lam > -HALF
    note = "extended range lambda > -1/2" if extended else ""
    out = [Bound("thm33_lower1", Side.LOWER, float(lower1), note)]
    extras = {}
    if p.lam == -HALF:
        out.append(Bound("thm33_lower2", Side.LOWER, 1.0))
    elif not extended:
        s2 = power_sums(p, 2)[2]
        out.append(Bound("thm33_lower2", Side.LOWER, 1.0 + 2.0 / _root(s2)))
        extras["printed_lower2"] = thm33_printed_middle(p)
        log.debug("%s: lower2 from S_2 = %.15g, as printed = %.15g", p, out[-1].value,
                  extras["printed_lower2"])
    out.append(Bound("thm33_upper", Side.UPPER, float(upper), note))
    rep = BoundReport(p, out)
    rep.extras.update(extras)
    return rep


def bound_report(p, m: int = 1, witness: float | None = None,
                 tol: float = STRICT_TOL) -> BoundReport:
    """Every applicable bound for x_{1,n}(lam) judged against the computed zero."""
    p = _params(p)
    if p.lam <= -THREE_HALVES:
        raise DomainError(f"lambda must exceed -3/2, got {p.lam}")
    if p.n < 2:
        raise DomainError("bounds need n >= 2")
    if p.n + 2 * p.lam <= 0:
        raise DegenerateParameters(f"n + 2*lambda = {p.n + 2 * p.lam} <= 0")
    quasi = p.lam < -HALF
    items = []
    if p.lam <= -HALF:
        items.append(Bound("thm21_upper", Side.UPPER, bound_upper_thm21(p)))
        items.append(Bound("thm22_lower", Side.LOWER, bound_lower_thm22(p)))
    t33 = bounds_thm33(p)
    items.extend(t33.bounds)
    if quasi:
        er = er_bounds_quasi(p, m)
    elif p.lam > -HALF:
        er = er_bounds_positive(p, m)
    else:
        er = None
    if er is not None:
        items.extend(er.bounds)
    rep = BoundReport(p, items, m=m, extras=dict(t33.extras))
    if witness is None:
        witness = largest_zero(p)
    return rep.judge(witness, tol)
