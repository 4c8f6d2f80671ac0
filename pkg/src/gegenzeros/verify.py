"""Executable checks for the qualitative claims about C_n^(lam) and its zeros.

Each ``check_*`` returns a :class:`CheckResult` (one instance of one claim).
:func:`run_suite` sweeps them over grids described by a :class:`SuiteConfig`.
Checks that reject their parameters raise DomainError; the suite records
those as SKIPPED.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import roots_jacobi

from . import bounds as B
from .core import HALF, Params, eval_nontrivial, eval_recurrence, is_trivial
from .errors import DomainError, GegenbauerError, LengthMismatch
from .zeros import ZeroSet, largest_zero, zeros

__all__ = [
    "CheckResult",
    "GridSpec",
    "SuiteConfig",
    "CHECKS",
    "check_interlacing",
    "check_order_reversal",
    "check_zero_ordering",
    "check_coprimality",
    "check_derivative_at_half",
    "check_bound_slopes",
    "check_quasi_orthogonality",
    "check_identity_35",
    "check_identity_37_at_zeros",
    "check_bounds",
    "check_comparisons",
    "check_euler_rayleigh",
    "check_erratum",
    "derivative_slope",
    "run_suite",
    "summarize",
]

THREE_HALVES = Fraction(3, 2)
OK_STATUSES = {"PASS", "SKIPPED", "EQUALITY", "INFO"}


@dataclass
class CheckResult:
    name: str
    params: str
    status: str
    margin: float = float("nan")
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in ("PASS", "EQUALITY")

    @property
    def ok(self) -> bool:
        return self.status in OK_STATUSES

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        if not np.isfinite(self.margin):
            d["margin"] = None
        return d


def _status(flag: bool) -> str:
    return "PASS" if flag else "FAIL"


def _values(zs) -> list:
    if isinstance(zs, ZeroSet):
        return list(zs.zeros)
    return [float(v) for v in zs]


def _C(n: int, lam, x):
    """C_n^(lam)(x) in floats, with C_0 = 1."""
    if n == 0:
        return np.ones_like(np.asarray(x, dtype=float)) if np.ndim(x) else 1.0
    return eval_recurrence(Params(n, lam), x)


# ---------------------------------------------------------------- interlacing


def check_interlacing(a, b, augment_endpoints: bool = False) -> CheckResult:
    """Strict alternation of two zero sets whose sizes differ by one.

    With ``augment_endpoints`` the points +1 and -1 are added to the smaller
    set first, i.e. the zeros of (1 - x^2) p are compared with those of q.
    The margin is the smallest gap in the expected alternating sequence, so
    it is positive exactly when the alternation is strict.
    """
    xa, xb = sorted(_values(a), reverse=True), sorted(_values(b), reverse=True)
    if augment_endpoints:
        if len(xa) <= len(xb):
            xa = sorted(xa + [1.0, -1.0], reverse=True)
        else:
            xb = sorted(xb + [1.0, -1.0], reverse=True)
    if abs(len(xa) - len(xb)) != 1:
        raise LengthMismatch(f"zero counts {len(xa)} and {len(xb)} cannot interlace")
    longer, shorter = (xa, xb) if len(xa) > len(xb) else (xb, xa)
    merged = [v for pair in zip(longer, shorter) for v in pair] + [longer[-1]]
    gaps = np.diff(merged) * -1.0
    margin = float(gaps.min())
    label = getattr(a, "params", None), getattr(b, "params", None)
    return CheckResult(
        "interlacing" + ("_augmented" if augment_endpoints else ""),
        f"{label[0]} vs {label[1]}" if label[0] else f"{len(xa)} vs {len(xb)} points",
        _status(margin > 0),
        margin,
        {"merged": merged},
    )


def _chain_margin(chain: Sequence[float]) -> float:
    return float(min(np.asarray(chain[:-1]) - np.asarray(chain[1:])))


def _positive_chain(n: int, lam, regime: str) -> list:
    zn, zn1 = zeros(n, lam).zeros, zeros(n + 1, lam).zeros
    pos_n = [v for v in zn if v > 0]
    pos_n1 = [v for v in zn1 if v > 0]
    if regime == "orthogonal":
        chain = [1.0]
        for k in range(len(pos_n1)):
            chain.append(pos_n1[k])
            if k < len(pos_n):
                chain.append(pos_n[k])
        return chain
    chain = [pos_n[0], pos_n1[0], 1.0]
    for k in range(1, len(pos_n1)):
        chain.append(pos_n1[k])
        if k < len(pos_n):
            chain.append(pos_n[k])
    return chain


def check_zero_ordering(n: int, lam) -> CheckResult:
    """Positive zeros of C_n and C_{n+1} against the constant 1.

    lam > -1/2:          1 > x_{1,n+1} > x_{1,n} > x_{2,n+1} > x_{2,n} > ...
    -3/2 < lam < -1/2:   x_{1,n} > x_{1,n+1} > 1 > x_{2,n+1} > x_{2,n} > ...
    """
    lam = Fraction(lam)
    if lam > -HALF:
        regime = "orthogonal"
    elif -THREE_HALVES < lam < -HALF:
        regime = "quasi"
    else:
        raise DomainError(f"ordering is stated for lambda != -1/2 above -3/2, got {lam}")
    chain = _positive_chain(n, lam, regime)
    margin = _chain_margin(chain)
    return CheckResult(f"ordering_{regime}", str(Params(n, lam)), _status(margin > 0), margin,
                       {"chain": chain})


def check_order_reversal(n: int, lam_neg, lam_pos) -> CheckResult:
    lam_neg, lam_pos = Fraction(lam_neg), Fraction(lam_pos)
    if not (-THREE_HALVES < lam_neg < -HALF < lam_pos):
        raise DomainError(f"need -3/2 < {lam_neg} < -1/2 < {lam_pos}")
    if n < 2:
        raise DomainError("order reversal needs n >= 2")
    pos = _positive_chain(n, lam_pos, "orthogonal")[:5]
    neg = _positive_chain(n, lam_neg, "quasi")[:5]
    margin = min(_chain_margin(pos), _chain_margin(neg))
    return CheckResult(
        "order_reversal",
        f"n={n}, lambda_neg={lam_neg}, lambda_pos={lam_pos}",
        _status(margin > 0),
        margin,
        {"lambda_pos_chain": pos, "lambda_neg_chain": neg},
    )


# --------------------------------------------------------------- coprimality


def _exceptional_coprime(n: int, lam: Fraction) -> bool:
    half_odd = (2 * lam).denominator == 1 and (2 * lam) % 2 == 1 and lam < 0
    return half_odd or is_trivial(n, lam) or is_trivial(n + 1, lam)


def check_coprimality(n: int, lam, threshold: float = 1e-8) -> CheckResult:
    """No common zero of C_n and C_{n+1} off the exceptional parameter set.

    min |C_n| over the zeros of C_{n+1} is compared with ``threshold`` times
    max |C_n| sampled on [-max(1, x_1), max(1, x_1)].
    """
    lam = Fraction(lam)
    if _exceptional_coprime(n, lam):
        raise DomainError(f"lambda = {lam} is exceptional for coprimality at n={n}")
    if lam <= -THREE_HALVES:
        raise DomainError(f"zeros are only computed for lambda > -3/2, got {lam}")
    z = np.array(zeros(n + 1, lam).zeros)
    reach = max(1.0, float(z[0]))
    scale = float(np.max(np.abs(eval_recurrence(Params(n, lam), np.linspace(-reach, reach, 2001)))))
    smallest = float(np.min(np.abs(eval_recurrence(Params(n, lam), z))))
    margin = smallest / scale - threshold
    return CheckResult("coprimality", str(Params(n, lam)), _status(margin > 0), margin,
                       {"min_abs": smallest, "scale": scale})


# ----------------------------------------------------------- lambda = -1/2


@lru_cache(maxsize=None)
def derivative_slope(n: int, h1: Fraction = Fraction(1, 1000), h2: Fraction = Fraction(1, 10000)):
    """d x_{1,n} / d lam at -1/2 by central differences and Richardson extrapolation."""

    def central(h):
        up = largest_zero(Params(n, -HALF + h))
        down = largest_zero(Params(n, -HALF - h))
        return (up - down) / (2 * float(h))

    d1, d2 = central(h1), central(h2)
    r = float(h1 / h2) ** 2
    return (r * d2 - d1) / (r - 1), d1, d2


def check_derivative_at_half(n: int, tol: float = 1e-5) -> CheckResult:
    if n < 2:
        raise DomainError("needs n >= 2")
    slope, d1, d2 = derivative_slope(n)
    expected = -2.0 / (n * n - n)
    err = abs(slope - expected)
    margin = tol - err
    detail = {"slope": slope, "expected": expected, "central_1e-3": d1, "central_1e-4": d2}
    ok = err <= tol
    if n > 2:
        prev = derivative_slope(n - 1)[0]
        detail["previous_slope"] = prev
        ok = ok and slope > prev
        margin = min(margin, slope - prev)
    return CheckResult("derivative", f"n={n}", _status(ok), margin, detail)


def check_bound_slopes(n: int, tol: float = 1e-6, h: Fraction = Fraction(1, 10**4)) -> CheckResult:
    """The lam-slopes of lower1 and upper at -1/2 both equal -2/(n^2 - n)."""
    if n < 2:
        raise DomainError("needs n >= 2")
    expected = -2.0 / (n * n - n)
    slopes = {}
    for name, fn in (("lower1", B.thm33_lower1_exact), ("upper", B.thm33_upper_exact)):
        up, down = fn(Params(n, -HALF + h)), fn(Params(n, -HALF - h))
        slopes[name] = float((up - down) / (2 * h))
    err = max(abs(s - expected) for s in slopes.values())
    return CheckResult("bound_slopes", f"n={n}", _status(err <= tol), tol - err,
                       dict(slopes, expected=expected))


# -------------------------------------------------------- quasi-orthogonality


def _moments(n: int, lam: Fraction, nodes: int):
    alpha = float(lam + HALF)
    x, w = roots_jacobi(nodes, alpha, alpha)
    c, _ = eval_nontrivial(Params(n, lam), x)
    moments = np.array([np.sum(w * x**k * c) for k in range(n - 1)])
    scale = float(np.sum(w * np.abs(c)))
    return moments, scale


def check_quasi_orthogonality(n: int, lam, quad_points: int | None = None,
                              zero_tol: float = 1e-10, nonzero_tol: float = 1e-6,
                              stability_tol: float = 1e-11) -> CheckResult:
    """Moments against (1 - x^2)^(lam + 1/2) vanish for k <= n-3 but not for k = n-2."""
    lam = Fraction(lam)
    if not (-THREE_HALVES < lam < -HALF):
        raise DomainError(f"weight (1-x^2)^(lam+1/2) needs -3/2 < lam < -1/2, got {lam}")
    if n < 3:
        raise DomainError("needs n >= 3")
    nodes = quad_points or max(64, 2 * n)
    if nodes < n + 2:
        raise DomainError(f"{nodes} nodes cannot integrate degree {2 * n - 2} exactly")
    m1, scale = _moments(n, lam, nodes)
    m2, _ = _moments(n, lam, 2 * nodes)
    drift = float(np.max(np.abs(m1 - m2))) / scale
    vanishing = float(np.max(np.abs(m1[: n - 2]))) / scale
    last = float(abs(m1[n - 2])) / scale
    detail = {"moments": m1.tolist(), "scale": scale, "drift": drift, "nodes": nodes}
    if drift > stability_tol:
        return CheckResult("quasi_orthogonality", str(Params(n, lam)), "UNSTABLE", float("nan"), detail)
    margin = min(zero_tol - vanishing, last - nonzero_tol)
    return CheckResult("quasi_orthogonality", str(Params(n, lam)),
                       _status(vanishing <= zero_tol and last > nonzero_tol), margin, detail)


# ------------------------------------------------------------------ identities


def _rel(lhs, rhs):
    return np.abs(lhs - rhs) / (1.0 + np.abs(lhs) + np.abs(rhs))


def identity_35_sides(n: int, lam, x):
    lf = float(lam)
    x = np.asarray(x, dtype=float)
    lhs = 4 * lf * (lf + 1) * (1 - x * x) ** 2 * _C(n - 2, lam + 2, x)
    rhs = ((2 * lf + n) * (x * x * (n + 2 * lf + 1) - n) * _C(n, lam, x)
           - (2 * lf + 1) * (n + 1) * x * _C(n + 1, lam, x))
    return lhs, rhs


def check_identity_35(n: int, lam, xs, tol: float = 1e-9) -> CheckResult:
    lam = Fraction(lam)
    if n < 2:
        raise DomainError("needs n >= 2")
    lhs, rhs = identity_35_sides(n, lam, xs)
    worst = float(np.max(_rel(lhs, rhs)))
    return CheckResult("identity35", str(Params(n, lam)), _status(worst <= tol), tol - worst,
                       {"max_rel_residual": worst, "points": len(np.atleast_1d(xs))})


def identity_37_sides(n: int, lam, x):
    lf = float(lam)
    x = np.asarray(x, dtype=float)
    lhs = 8 * lf * (lf + 1) * (lf + 2) * (1 - x * x) ** 3 * _C(n - 2, lam + 3, x)
    k = n * (n + 2 * lf + 2)
    rhs = (2 * lf + n) * (x * x * (k + (2 * lf + 1) * (2 * lf + 3)) - k) * _C(n, lam, x)
    return lhs, rhs


def check_identity_37_at_zeros(n: int, lam, tol: float = 1e-8) -> CheckResult:
    """The mixed relation with its unknown g(x) C_{n+1} term, at zeros of C_{n+1}."""
    lam = Fraction(lam)
    if n < 3:
        raise DomainError("needs n >= 3")
    if not (-THREE_HALVES < lam < -HALF) or lam in (0, -1, -2):
        raise DomainError(f"lambda = {lam} outside the checked range")
    z = np.array(zeros(n + 1, lam).zeros)
    lhs, rhs = identity_37_sides(n, lam, z)
    worst = float(np.max(_rel(lhs, rhs)))
    return CheckResult("identity37", str(Params(n, lam)), _status(worst <= tol), tol - worst,
                       {"max_rel_residual": worst, "points": len(z)})


# ---------------------------------------------------------------------- bounds


def check_bounds(n: int, lam, m: int = 1) -> CheckResult:
    rep = B.bound_report(Params(n, lam), m=m)
    margin = min(rep.margins.values())
    return CheckResult("bounds", str(rep.params), rep.verdict.value, margin, rep.to_dict())


def check_comparisons(n: int, lam) -> list:
    """Sharper-upper (n >= 6) and sharper-lower (n >= 2) comparisons between the two methods."""
    p = Params(n, lam)
    lam = p.lam
    if not (-THREE_HALVES < lam <= -HALF):
        raise DomainError(f"comparisons are stated for -3/2 < lambda <= -1/2, got {lam}")
    out = []
    up33 = float(B.thm33_upper_exact(p))
    up21 = B.bound_upper_thm21(p)
    if lam == -HALF:
        d = abs(up33 - up21)
        out.append(CheckResult("compare_upper", str(p), _status(d <= 1e-14), 1e-14 - d,
                               {"thm33_upper": up33, "thm21_upper": up21}))
    else:
        status = _status(up33 < up21) if n >= 6 else "INFO"
        out.append(CheckResult("compare_upper", str(p), status, up21 - up33,
                               {"thm33_upper": up33, "thm21_upper": up21, "asserted": n >= 6}))
    if n >= 3 or (n == 2 and -1 < lam < -HALF):
        lo22 = B.bound_lower_thm22(p)
        lo33 = float(B.thm33_lower1_exact(p))
        if lam == -HALF:
            status = _status(abs(lo22 - lo33) <= 1e-14)
        else:
            status = _status(lo22 > lo33)
        out.append(CheckResult("compare_lower", str(p), status, lo22 - lo33,
                               {"thm22_lower": lo22, "thm33_lower1": lo33}))
    return out


def check_euler_rayleigh(n: int, lam, m_max: int = 5) -> CheckResult:
    """Sign pattern of S_j (one negative t-root) or shrinking t-intervals (all positive)."""
    p = Params(n, lam)
    if -THREE_HALVES < p.lam < -HALF:
        if n + 2 * p.lam <= 0:
            raise DomainError(f"n + 2*lambda <= 0 for {p}")
        s = B.power_sums(p, m_max)
        signs = [(-1) ** j * (1 if s[j] > 0 else -1) for j in range(1, m_max + 1)]
        ok = all(v == 1 for v in signs)
        worst = min(abs(float(s[j])) for j in range(1, m_max + 1))
        return CheckResult("er_sign_pattern", str(p), _status(ok), worst if ok else -worst,
                           {"S": [str(v) for v in s.values]})
    if p.lam > -HALF:
        ivs = [B.er_bounds_positive(p, m).extras["t_interval"] for m in range(1, m_max + 1)]
        widths = [hi - lo for lo, hi in ivs]
        lows = [lo for lo, _ in ivs]
        highs = [hi for _, hi in ivs]
        steps = [lows[i + 1] - lows[i] for i in range(m_max - 1)]
        steps += [highs[i] - highs[i + 1] for i in range(m_max - 1)]
        margin = min(steps) if steps else float("inf")
        return CheckResult("er_monotone", str(p), _status(margin > 0), margin,
                           {"t_intervals": ivs, "widths": widths})
    raise DomainError("lambda = -1/2 has a singular t-basis")


def check_erratum(n: int = 3, lam=Fraction(-3, 4)) -> CheckResult:
    """The power-sum middle bound is valid while the printed expression overshoots."""
    p = Params(n, lam)
    x1 = largest_zero(p)
    lower2 = B.bounds_thm33(p)["thm33_lower2"]
    printed = B.thm33_printed_middle(p)
    ok = lower2 < x1 < printed
    return CheckResult("erratum", str(p), _status(ok), min(x1 - lower2, printed - x1),
                       {"x1": x1, "lower2_from_S2": lower2, "printed_middle": printed})


# ------------------------------------------------------------------ the suite


@dataclass(frozen=True)
class GridSpec:
    start: Fraction
    end: Fraction
    steps: int

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        from .core import parse_rational

        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must be start:end:steps, got {text!r}")
        steps = int(parts[2])
        if steps < 1:
            raise ValueError("steps must be >= 1")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]), steps)

    def points(self) -> list:
        if self.steps == 1:
            return [self.start]
        return [self.start + (self.end - self.start) * i / (self.steps - 1) for i in range(self.steps)]

    def __str__(self):
        return f"{self.start}:{self.end}:{self.steps}"


DEFAULT_QUASI_GRID = GridSpec(Fraction(-1499, 1000), Fraction(-501, 1000), 40)
DEFAULT_ORTH_GRID = GridSpec(Fraction(-499, 1000), Fraction(3), 40)


def split_lambdas(points) -> tuple:
    """Partition lambda values into (quasi, boundary, orthogonal) by their side of -1/2."""
    quasi = tuple(p for p in points if p < -HALF)
    boundary = tuple(p for p in points if p == -HALF)
    orth = tuple(p for p in points if p > -HALF)
    return quasi, boundary, orth


@dataclass
class SuiteConfig:
    quasi_lambdas: tuple = tuple(DEFAULT_QUASI_GRID.points())
    orth_lambdas: tuple = tuple(DEFAULT_ORTH_GRID.points())
    boundary_lambdas: tuple = ()
    n_min: int = 3
    n_max: int = 25
    n_max_bounds: int = 40
    n_max_derivative: int = 40
    n_max_quasi_orth: int = 12
    quasi_orth_lambdas: tuple = (Fraction(-3, 4), Fraction(-6, 5))
    identity_points: int = 50
    n_max_identity: int = 20
    seed: int = 20160209
    m: int = 1
    tol_identity35: float = 1e-9
    tol_identity37: float = 1e-8
    tol_derivative: float = 1e-5
    checks: tuple = ()

    @classmethod
    def quick(cls, **overrides) -> "SuiteConfig":
        base = dict(
            quasi_lambdas=tuple(GridSpec(Fraction(-1499, 1000), Fraction(-501, 1000), 6).points()),
            orth_lambdas=tuple(GridSpec(Fraction(-499, 1000), Fraction(3), 6).points()),
            n_max=10,
            n_max_bounds=12,
            n_max_derivative=12,
            n_max_quasi_orth=8,
            identity_points=10,
            n_max_identity=10,
        )
        base.update(overrides)
        return cls(**base)

    def with_lambdas(self, points) -> "SuiteConfig":
        q, b, o = split_lambdas(points)
        return replace(self, quasi_lambdas=q, boundary_lambdas=b, orth_lambdas=o)

    def to_dict(self) -> dict:
        d = {}
        for k, v in asdict(self).items():
            if isinstance(v, (list, tuple)):
                v = [str(i) for i in v]
            d[k] = v
        return d


def _safe(fn: Callable, name: str, label: str) -> list:
    try:
        res = fn()
    except GegenbauerError as exc:
        return [CheckResult(name, label, "SKIPPED", float("nan"), {"reason": f"{exc.name}: {exc}"})]
    return res if isinstance(res, list) else [res]


def _suite_bounds(cfg):
    for n in range(3, cfg.n_max_bounds + 1):
        for lam in cfg.quasi_lambdas:
            yield lambda n=n, lam=lam: check_bounds(n, lam, cfg.m), "bounds", f"n={n}, lambda={lam}"


def _suite_comparisons(cfg):
    for n in range(2, cfg.n_max_bounds + 1):
        for lam in list(cfg.quasi_lambdas) + [-HALF]:
            yield lambda n=n, lam=lam: check_comparisons(n, lam), "comparisons", f"n={n}, lambda={lam}"


def _suite_derivative(cfg):
    for n in range(2, cfg.n_max_derivative + 1):
        yield lambda n=n: check_derivative_at_half(n, cfg.tol_derivative), "derivative", f"n={n}"


def _suite_bound_slopes(cfg):
    for n in range(2, cfg.n_max_derivative + 1):
        yield lambda n=n: check_bound_slopes(n), "bound_slopes", f"n={n}"


def _suite_interlacing(cfg):
    for lam in cfg.quasi_lambdas + cfg.orth_lambdas:
        for n in range(cfg.n_min, cfg.n_max + 1):
            label = f"n={n}, lambda={lam}"
            yield lambda n=n, lam=lam: check_zero_ordering(n, lam), "ordering", label
            yield (lambda n=n, lam=lam: check_interlacing(zeros(n, lam), zeros(n + 1, lam), True),
                   "interlacing_augmented", label)
            if -THREE_HALVES < lam < -HALF:
                yield (lambda n=n, lam=lam: check_interlacing(zeros(n, lam), zeros(n - 1, lam + 1)),
                       "interlacing_seed", label)


def _suite_order_reversal(cfg):
    pos = [l for l in cfg.orth_lambdas if l < 0] or list(cfg.orth_lambdas[:1]) or [-HALF / 5]
    lp = pos[0]
    for n in range(max(2, cfg.n_min), cfg.n_max + 1):
        for lam in cfg.quasi_lambdas:
            yield (lambda n=n, lam=lam, lp=lp: check_order_reversal(n, lam, lp), "order_reversal",
                   f"n={n}, lambda_neg={lam}, lambda_pos={lp}")


def _suite_coprimality(cfg):
    lams = cfg.quasi_lambdas + cfg.boundary_lambdas + cfg.orth_lambdas
    for n in range(cfg.n_min, cfg.n_max + 1):
        for lam in lams:
            yield lambda n=n, lam=lam: check_coprimality(n, lam), "coprimality", f"n={n}, lambda={lam}"


def _suite_quasi_orth(cfg):
    for lam in cfg.quasi_orth_lambdas:
        for n in range(3, cfg.n_max_quasi_orth + 1):
            yield (lambda n=n, lam=lam: check_quasi_orthogonality(n, lam), "quasi_orthogonality",
                   f"n={n}, lambda={lam}")


def _suite_identity35(cfg):
    rng = np.random.default_rng(cfg.seed)
    for n in range(cfg.n_min, cfg.n_max_identity + 1):
        for lam in cfg.quasi_lambdas + cfg.orth_lambdas:
            xs = rng.uniform(-1.5, 1.5, cfg.identity_points)
            yield (lambda n=n, lam=lam, xs=xs: check_identity_35(n, lam, xs, cfg.tol_identity35),
                   "identity35", f"n={n}, lambda={lam}")


def _suite_identity37(cfg):
    for n in range(cfg.n_min, cfg.n_max_identity + 1):
        for lam in cfg.quasi_lambdas:
            yield (lambda n=n, lam=lam: check_identity_37_at_zeros(n, lam, cfg.tol_identity37),
                   "identity37", f"n={n}, lambda={lam}")


def _suite_euler_rayleigh(cfg):
    for n in range(cfg.n_min, cfg.n_max + 1):
        for lam in cfg.quasi_lambdas:
            yield lambda n=n, lam=lam: check_euler_rayleigh(n, lam), "euler_rayleigh", f"n={n}, lambda={lam}"
    for n, lam in ((5, HALF), (8, Fraction(1))):
        yield lambda n=n, lam=lam: check_euler_rayleigh(n, lam), "euler_rayleigh", f"n={n}, lambda={lam}"


def _suite_erratum(cfg):
    yield check_erratum, "erratum", "n=3, lambda=-3/4"


CHECKS = {
    "bounds": _suite_bounds,
    "comparisons": _suite_comparisons,
    "derivative": _suite_derivative,
    "bound_slopes": _suite_bound_slopes,
    "interlacing": _suite_interlacing,
    "order_reversal": _suite_order_reversal,
    "coprimality": _suite_coprimality,
    "quasi_orthogonality": _suite_quasi_orth,
    "identity35": _suite_identity35,
    "identity37": _suite_identity37,
    "euler_rayleigh": _suite_euler_rayleigh,
    "erratum": _suite_erratum,
}


def run_suite(config: SuiteConfig | None = None) -> list:
    """Run the selected checks in a fixed order; results are deterministic given the config."""
    cfg = config or SuiteConfig()
    names: Iterable[str] = cfg.checks or tuple(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    results = []
    for name in names:
        for fn, check, label in CHECKS[name](cfg):
            results.extend(_safe(fn, check, label))
    return results


def summarize(results: Sequence[CheckResult], elapsed: float | None = None) -> dict:
    counts: dict = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    out = {"total": len(results), "counts": dict(sorted(counts.items())),
           "ok": all(r.ok for r in results)}
    if elapsed is not None:
        out["elapsed_s"] = round(elapsed, 3)
    return out


def timed_suite(config: SuiteConfig | None = None):
    t0 = time.perf_counter()
    res = run_suite(config)
    return res, time.perf_counter() - t0
