"""Evaluation and exact coefficients of ultraspherical polynomials C_n^(lam).

Two coefficient routes are kept side by side:

* ``coeffs_x`` unrolls the three-term recurrence in exact rationals. It is
  valid for every rational ``lam`` but is identically zero at the trivial
  values lam* = 0, -1, ..., -floor((n-1)/2).
* ``coeffs_t`` gives the terminating 2F1(-n, n+2lam; lam+1/2; t) series in
  t = (1-x)/2, normalised to start at 1. It survives lam* (its zeros are the
  non-trivial zeros there) but is singular when lam+1/2 is a non-positive
  integer reachable by the series.

``prefactor(p) * coeffs_t(p)(t) == C_n^(lam)(x)`` wherever both are defined.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from numbers import Rational

import mpmath
import numpy as np

from .errors import DomainError, SingularHypergeometricParameter, TrivialParameter

__all__ = [
    "Basis",
    "Params",
    "RationalPoly",
    "parse_rational",
    "is_trivial",
    "trivial_set",
    "eval_recurrence",
    "eval_exact",
    "eval_with_derivative",
    "eval_nontrivial",
    "coeffs_x",
    "coeffs_t",
    "prefactor",
    "pochhammer",
]

HALF = Fraction(1, 2)


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, a terminating decimal, an int or a Fraction exactly.

    Binary floats are rejected unless they are integral: ``-0.75`` must come
    in as a string so it is read as -3/4, not as its double approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise ValueError(f"pass {value!r} as a string to keep it exact")
    if isinstance(value, str):
        s = value.strip().replace("−", "-")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as an exact rational") from exc
    raise TypeError(f"unsupported type for rational: {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Params:
    """Degree ``n`` and exact parameter ``lam`` of one polynomial C_n^(lam)."""

    n: int
    lam: Fraction

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError("n must be an integer")
        if self.n < 1:
            raise DomainError(f"degree must be >= 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "lam", parse_rational(self.lam))

    @property
    def trivial(self) -> bool:
        return is_trivial(self.n, self.lam)

    def __str__(self):
        return f"(n={self.n}, lambda={self.lam})"


class Basis(enum.Enum):
    X_BASIS = "x"
    T_BASIS = "t"


@dataclass(frozen=True)
class RationalPoly:
    """Exact coefficients, ``coeffs[k]`` multiplying ``var**k``."""

    basis: Basis
    coeffs: tuple
    normalized: bool = False

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs or (len(cs) == 1 and cs[0] == 0):
            raise ValueError("identically zero polynomial is not stored")
        if self.normalized and (self.basis is not Basis.T_BASIS or cs[0] != 1):
            raise ValueError("normalized polynomials live in the t-basis with coeffs[0] == 1")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, v):
        """Horner evaluation; exact for Fraction input, float otherwise."""
        if isinstance(v, (Fraction, int)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * v + c
            return acc
        cs = [float(c) for c in self.coeffs]
        acc = np.zeros_like(np.asarray(v, dtype=float))
        for c in reversed(cs):
            acc = acc * v + c
        return acc if acc.ndim else float(acc)

    def to_x_basis(self) -> "RationalPoly":
        """Substitute t = (1-x)/2; the normalised flag is dropped."""
        if self.basis is Basis.X_BASIS:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        # (1-x)^k / 2^k expanded by binomial coefficients
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            scale = c / 2**k
            binom = 1
            for j in range(k + 1):
                out[j] += scale * binom * (-1) ** j
                binom = binom * (k - j) // (j + 1)
        return RationalPoly(Basis.X_BASIS, tuple(out))

    def float_coeffs(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])


def pochhammer(a, k: int):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1)."""
    out = Fraction(1) if isinstance(a, (Fraction, int)) else 1.0
    for i in range(k):
        out *= a + i
    return out


def trivial_set(n: int) -> list[Fraction]:
    """The lambda* values where C_n vanishes identically: 0, -1, ..., -floor((n-1)/2)."""
    return [Fraction(-j) for j in range((n - 1) // 2 + 1)]


def is_trivial(n: int, lam) -> bool:
    lam = Fraction(lam)
    return lam.denominator == 1 and -((n - 1) // 2) <= lam <= 0


def eval_recurrence(p: Params, x):
    """C_n^(lam)(x) by forward recurrence in double precision.

    Accepts scalars or numpy arrays for ``x``. Returns 0 everywhere at a
    trivial lam*, which is correct for the unnormalised polynomial.
    """
    lam = float(p.lam)
    x = np.asarray(x, dtype=float)
    c_prev = np.ones_like(x)
    c = 2.0 * lam * x
    for k in range(2, p.n + 1):
        c_prev, c = c, (2.0 * (k + lam - 1) * x * c - (k + 2.0 * lam - 2) * c_prev) / k
    return c if c.ndim else float(c)


def eval_exact(p: Params, x) -> Fraction:
    """Same recurrence as :func:`eval_recurrence` carried out in rationals."""
    lam = p.lam
    x = Fraction(x)
    c_prev, c = Fraction(1), 2 * lam * x
    for k in range(2, p.n + 1):
        c_prev, c = c, (2 * (k + lam - 1) * x * c - (k + 2 * lam - 2) * c_prev) / k
    return c


def _recurrence_jet(n: int, lam: float, x: np.ndarray):
    """Values and x-derivatives of C_n and of dC_n/dlam."""
    c0, c1 = np.ones_like(x), 2.0 * lam * x
    dc0, dc1 = np.zeros_like(x), np.full_like(x, 2.0 * lam)
    l0, l1 = np.zeros_like(x), 2.0 * x
    dl0, dl1 = np.zeros_like(x), np.full_like(x, 2.0)
    for k in range(2, n + 1):
        a = 2.0 * (k + lam - 1)
        b = k + 2.0 * lam - 2
        c2 = (a * x * c1 - b * c0) / k
        dc2 = (a * (c1 + x * dc1) - b * dc0) / k
        l2 = (2.0 * x * c1 + a * x * l1 - 2.0 * c0 - b * l0) / k
        dl2 = (2.0 * (c1 + x * dc1) + a * (l1 + x * dl1) - 2.0 * dc0 - b * dl0) / k
        c0, c1, dc0, dc1, l0, l1, dl0, dl1 = c1, c2, dc1, dc2, l1, l2, dl1, dl2
    return c1, dc1, l1, dl1


def eval_with_derivative(p: Params, x):
    """(C_n(x), C_n'(x)) in double precision."""
    x = np.asarray(x, dtype=float)
    c, dc, _, _ = _recurrence_jet(p.n, float(p.lam), x)
    if c.ndim:
        return c, dc
    return float(c), float(dc)


# Within this distance of a trivial lam* the float recurrence cancels to
# roughly eps / dist relative accuracy; switch to raised precision there.
NEAR_TRIVIAL = Fraction(1, 100)


@lru_cache(maxsize=65536)
def _distance_to_trivial(p: Params) -> Fraction:
    return min(abs(p.lam - t) for t in trivial_set(p.n))


def _scalar_jet(n: int, lam: float, x: float, lam_derivative: bool):
    """Plain-float version of :func:`_recurrence_jet` for a single point."""
    c0, c1 = 1.0, 2.0 * lam * x
    dc0, dc1 = 0.0, 2.0 * lam
    if not lam_derivative:
        for k in range(2, n + 1):
            a = 2.0 * (k + lam - 1)
            b = k + 2.0 * lam - 2
            c0, c1, dc0, dc1 = c1, (a * x * c1 - b * c0) / k, dc1, (a * (c1 + x * dc1) - b * dc0) / k
        return c1, dc1
    l0, l1 = 0.0, 2.0 * x
    dl0, dl1 = 0.0, 2.0
    for k in range(2, n + 1):
        a = 2.0 * (k + lam - 1)
        b = k + 2.0 * lam - 2
        l2 = (2.0 * x * c1 + a * x * l1 - 2.0 * c0 - b * l0) / k
        dl2 = (2.0 * (c1 + x * dc1) + a * (l1 + x * dl1) - 2.0 * dc0 - b * dl0) / k
        c0, c1, dc0, dc1 = c1, (a * x * c1 - b * c0) / k, dc1, (a * (c1 + x * dc1) - b * dc0) / k
        l0, l1, dl0, dl1 = l1, l2, dl1, dl2
    return l1, dl1


def _jet_mp(p: Params, x: np.ndarray, dps: int):
    n, lam = p.n, p.lam
    flat = np.ravel(x)
    vals = np.empty_like(flat)
    ders = np.empty_like(flat)
    with mpmath.workdps(dps):
        lm = mpmath.mpf(lam.numerator) / lam.denominator
        for i, xi in enumerate(flat):
            xm = mpmath.mpf(float(xi))
            c0, c1 = mpmath.mpf(1), 2 * lm * xm
            d0, d1 = mpmath.mpf(0), 2 * lm
            for k in range(2, n + 1):
                a = 2 * (k + lm - 1)
                b = k + 2 * lm - 2
                c0, c1, d0, d1 = (
                    c1,
                    (a * xm * c1 - b * c0) / k,
                    d1,
                    (a * (c1 + xm * d1) - b * d0) / k,
                )
            vals[i] = float(c1)
            ders[i] = float(d1)
    return vals.reshape(x.shape), ders.reshape(x.shape)


def eval_nontrivial(p: Params, x):
    """A float function with exactly the non-trivial zeros of C_n^(lam), plus its slope.

    Away from lam* this is C_n itself. At lam* it is dC_n/dlam, which is a
    constant multiple of the normalised 2F1 polynomial: C_n = prefactor * F
    and the prefactor has a simple zero at lam*.
    """
    dist = _distance_to_trivial(p)
    near = 0 < dist < NEAR_TRIVIAL
    if not near and np.ndim(x) == 0:
        return _scalar_jet(p.n, float(p.lam), float(x), p.trivial)
    x = np.asarray(x, dtype=float)
    if near:
        dps = 30 + int(math.ceil(-math.log10(dist)))
        c, dc = _jet_mp(p, x, dps)
        if c.ndim:
            return c, dc
        return float(c), float(dc)
    c, dc, l, dl = _recurrence_jet(p.n, float(p.lam), x)
    if p.trivial:
        c, dc = l, dl
    if c.ndim:
        return c, dc
    return float(c), float(dc)


def eval_nontrivial_value(p: Params, x):
    """Value-only companion of :func:`eval_nontrivial`, for sign tests."""
    if p.trivial or 0 < _distance_to_trivial(p) < NEAR_TRIVIAL:
        return eval_nontrivial(p, x)[0]
    return eval_recurrence(p, x)


def coeffs_x(p: Params) -> RationalPoly:
    """Exact x-basis coefficients of C_n^(lam).

    Raises TrivialParameter at lam*, where the polynomial is identically zero.
    The degree drops below n when (lam)_n = 0 but lam is not trivial.
    """
    if p.trivial:
        raise TrivialParameter(p.lam, p.n)
    lam = p.lam
    prev = [Fraction(1)]
    cur = [Fraction(0), 2 * lam]
    for k in range(2, p.n + 1):
        a = 2 * (k + lam - 1) / k
        b = (k + 2 * lam - 2) / k
        nxt = [Fraction(0)] * (k + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] += a * c
        for i, c in enumerate(prev):
            nxt[i] -= b * c
        prev, cur = cur, nxt
    return RationalPoly(Basis.X_BASIS, tuple(cur))


def coeffs_t(p: Params) -> RationalPoly:
    """Normalised 2F1(-n, n+2lam; lam+1/2; t) coefficients a_k, a_0 = 1."""
    n, lam = p.n, p.lam
    c = lam + HALF
    if c.denominator == 1 and -(n - 1) <= c <= 0:
        raise SingularHypergeometricParameter(
            f"lam + 1/2 = {c} is a non-positive integer > -n for n={n}"
        )
    b = n + 2 * lam
    coeffs = [Fraction(1)]
    a_k = Fraction(1)
    for k in range(n):
        a_k = a_k * (-n + k) * (b + k) / ((c + k) * (k + 1))
        coeffs.append(a_k)
    return RationalPoly(Basis.T_BASIS, tuple(coeffs), normalized=True)


def prefactor(p: Params) -> Fraction:
    """Generalised binomial C(n+2lam-1, n) = (2lam)_n / n!, equal to C_n^(lam)(1)."""
    out = Fraction(1)
    for i in range(p.n):
        out *= (2 * p.lam + i) / (i + 1)
    return out
