"""Real zeros of C_n^(lam) for lam > -3/2, listed in decreasing order.

Orthogonal regime (lam > -1/2): eigenvalues of the symmetric Jacobi matrix,
then one Newton step. Quasi-orthogonal regime (-3/2 < lam < -1/2): the inner
zeros are bracketed by the zeros of the orthogonal C_{n-1}^(lam+1), which
interlace with them; the single zero above 1 is found by a doubling scan
away from x = 1, and the zero below -1 by symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .core import HALF, Params, eval_nontrivial, eval_nontrivial_value, prefactor
from .errors import BracketFailure, DegenerateParameters, DomainError

__all__ = ["ZeroSet", "zeros", "zeros_orthogonal", "zeros_quasi", "largest_zero"]

EPS = np.finfo(float).eps
SCAN_START = 1e-12
SCAN_LIMIT = 64.0


@dataclass(frozen=True)
class ZeroSet:
    params: Params
    zeros: tuple
    outside_count: int
    precision: float

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, k):
        return self.zeros[k]

    def as_array(self) -> np.ndarray:
        return np.array(self.zeros)


def _params(p, lam=None) -> Params:
    return p if isinstance(p, Params) else Params(p, lam)


def _make(p: Params, xs, precision: float) -> ZeroSet:
    xs = np.sort(np.asarray(xs, dtype=float))[::-1]
    xs = 0.5 * (xs - xs[::-1])
    outside = int(np.sum(np.abs(xs) > 1.0))
    return ZeroSet(p, tuple(float(v) for v in xs), outside, float(precision))


def _bisect(p: Params, lo, hi, sign_lo, maxiter=200):
    """Vectorised bisection of the non-trivial polynomial on [lo, hi] brackets."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    sign_lo = np.broadcast_to(np.asarray(sign_lo, dtype=float), lo.shape).copy()
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        active = (mid != lo) & (mid != hi)
        if not active.any():
            break
        fm = np.atleast_1d(eval_nontrivial_value(p, mid))
        exact = fm == 0.0
        same = np.sign(fm) == sign_lo
        lo = np.where(active & same & ~exact, mid, lo)
        hi = np.where(active & ~same & ~exact, mid, hi)
        lo = np.where(exact, mid, lo)
        hi = np.where(exact, mid, hi)
    return lo, hi


def _newton_polish(p: Params, x, lo=None, hi=None):
    """One Newton step; a step that leaves the bracket is discarded."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    f, df = eval_nontrivial(p, x)
    f, df = np.atleast_1d(f), np.atleast_1d(df)
    with np.errstate(divide="ignore", invalid="ignore"):
        step = np.where(df != 0.0, f / df, 0.0)
    new = x - step
    ok = np.isfinite(new)
    if lo is not None:
        ok &= (new >= np.minimum(lo, hi)) & (new <= np.maximum(lo, hi))
    new = np.where(ok, new, x)
    return new, np.abs(np.where(ok, step, 0.0))


def _jacobi_offdiag(n: int, lam: Fraction) -> np.ndarray:
    # monic recurrence p_{k+1} = x p_k - beta_k p_{k-1}
    betas = []
    for k in range(1, n):
        if k == 1:
            beta = 1 / (2 * (1 + lam))
        else:
            beta = Fraction(k) * (k + 2 * lam - 1) / (4 * (k + lam) * (k + lam - 1))
        betas.append(float(beta))
    return np.sqrt(np.array(betas))


def zeros_orthogonal(p, lam=None) -> ZeroSet:
    """Zeros for lam > -1/2 from the n x n Jacobi matrix.

    lam = 0 is allowed: the k = 1 coefficient is taken in simplified form, so
    the eigenvalues are the Chebyshev nodes, the limits of the zeros there.
    """
    p = _params(p, lam)
    if p.lam <= -HALF:
        raise DomainError(f"orthogonal route needs lambda > -1/2, got {p.lam}")
    if p.n == 1:
        return ZeroSet(p, (0.0,), 0, 0.0)
    ev = eigh_tridiagonal(np.zeros(p.n), _jacobi_offdiag(p.n, p.lam), eigvals_only=True)
    x, step = _newton_polish(p, ev)
    precision = float(step.max()) + 4 * p.n * EPS
    return _make(p, x, precision)


def _sign_at_one(p: Params) -> float:
    if p.trivial:
        return float(np.sign(eval_nontrivial(p, 1.0)[0]))
    return float(np.sign(prefactor(p)))


def _outer_zero(p: Params):
    """Largest zero above 1 by a doubling scan anchored at x = 1.

    The sign at x = 1 is exact (it is the sign of the binomial prefactor);
    the first probe is 1 + 1e-12 and the width doubles until a sign change.
    """
    s1 = _sign_at_one(p)
    if s1 == 0:
        raise DomainError(f"C_n vanishes at x = 1 for {p}")
    a, w = 1.0, SCAN_START
    while True:
        b = 1.0 + w
        if b > SCAN_LIMIT:
            raise BracketFailure(f"no sign change in (1, {SCAN_LIMIT}] for {p}")
        fb, _ = eval_nontrivial(p, b)
        if fb == 0.0:
            return b, 0.0
        if np.sign(fb) != s1:
            break
        a, w = b, 2 * w
    lo, hi = a, b
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm, _ = eval_nontrivial(p, mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if np.sign(fm) == s1:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    f, df = eval_nontrivial(p, x)
    step = f / df if df != 0.0 else 0.0
    if lo <= x - step <= hi:
        x -= step
    else:
        step = 0.0
    return float(x), float(max(abs(step), hi - lo))


def _check_quasi(p: Params):
    if not (-Fraction(3, 2) < p.lam < -HALF):
        raise DomainError(f"quasi-orthogonal route needs -3/2 < lambda < -1/2, got {p.lam}")
    if p.n == 1:
        raise DomainError("degree 1 has the single zero 0 and no outer pair")
    if p.n + 2 * p.lam <= 0:
        raise DegenerateParameters(
            f"n + 2*lambda = {p.n + 2 * p.lam} <= 0: the zeros of {p} are not real"
        )


def zeros_quasi(p, lam=None) -> ZeroSet:
    p = _params(p, lam)
    _check_quasi(p)
    x1, prec = _outer_zero(p)
    if p.n == 2:
        return _make(p, [x1, -x1], prec + 2 * EPS)
    inner_ref = zeros_orthogonal(Params(p.n - 1, p.lam + 1)).as_array()
    hi, lo = inner_ref[:-1], inner_ref[1:]
    f_hi = np.atleast_1d(eval_nontrivial_value(p, hi))
    f_lo = np.atleast_1d(eval_nontrivial_value(p, lo))
    if np.any(np.sign(f_hi) == np.sign(f_lo)):
        bad = int(np.argmax(np.sign(f_hi) == np.sign(f_lo)))
        raise BracketFailure(
            f"interlacing seed failed for {p}: no sign change on "
            f"[{lo[bad]!r}, {hi[bad]!r}]"
        )
    blo, bhi = _bisect(p, lo, hi, np.sign(f_lo))
    inner, step = _newton_polish(p, 0.5 * (blo + bhi), blo, bhi)
    prec = max(prec, float(np.max(np.maximum(step, bhi - blo))))
    return _make(p, np.concatenate([[x1], inner, [-x1]]), prec + 2 * EPS)


def _zeros_half(p: Params) -> ZeroSet:
    # C_n^(-1/2) = const * (1 - x^2) * C_{n-2}^(3/2) for n >= 2
    if p.n == 2:
        return ZeroSet(p, (1.0, -1.0), 0, 0.0)
    inner = zeros_orthogonal(Params(p.n - 2, Fraction(3, 2)))
    xs = (1.0,) + inner.zeros + (-1.0,)
    return ZeroSet(p, xs, 0, inner.precision)


@lru_cache(maxsize=4096)
def _zeros_cached(p: Params) -> ZeroSet:
    if p.lam <= -Fraction(3, 2):
        raise DomainError(f"zeros are only computed for lambda > -3/2, got {p.lam}")
    if p.n == 1:
        return ZeroSet(p, (0.0,), 0, 0.0)
    if p.lam > -HALF:
        return zeros_orthogonal(p)
    if p.lam == -HALF:
        return _zeros_half(p)
    return zeros_quasi(p)


def zeros(p, lam=None) -> ZeroSet:
    """All real zeros of C_n^(lam), decreasing; non-trivial zeros at lam*."""
    return _zeros_cached(_params(p, lam))


@lru_cache(maxsize=8192)
def _largest_cached(p: Params) -> float:
    if -Fraction(3, 2) < p.lam < -HALF and p.n >= 2:
        _check_quasi(p)
        return _outer_zero(p)[0]
    return _zeros_cached(p).zeros[0]


def largest_zero(p, lam=None) -> float:
    """x_{1,n}(lam); skips the inner zeros in the quasi-orthogonal regime."""
    return _largest_cached(_params(p, lam))
