from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from gegenzeros.core import (
    Basis,
    Params,
    RationalPoly,
    coeffs_t,
    coeffs_x,
    eval_exact,
    eval_nontrivial,
    eval_recurrence,
    is_trivial,
    parse_rational,
    prefactor,
    trivial_set,
)
from gegenzeros.errors import DomainError, SingularHypergeometricParameter, TrivialParameter

X = sp.symbols("x")

lambdas = st.fractions(min_value=Fraction(-7, 2), max_value=Fraction(4), max_denominator=12)
degrees = st.integers(min_value=1, max_value=14)


def sympy_coeffs(n, lam):
    """Ascending x-coefficients from sympy's own Gegenbauer implementation."""
    poly = sp.Poly(sp.expand(sp.gegenbauer(n, sp.Rational(lam.numerator, lam.denominator), X)), X)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@pytest.mark.parametrize("text, expected", [
    ("-3/4", Fraction(-3, 4)),
    ("-0.75", Fraction(-3, 4)),
    ("−3/4", Fraction(-3, 4)),
    ("1.2", Fraction(6, 5)),
    (" 2 ", Fraction(2)),
    (3, Fraction(3)),
    (-1.0, Fraction(-1)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["abc", "1/0", "", 0.1])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_params_validation():
    with pytest.raises(DomainError):
        Params(0, 1)
    with pytest.raises(TypeError):
        Params(2.0, 1)
    assert Params(3, "-0.5").lam == Fraction(-1, 2)
    assert Params(5, -1).trivial and not Params(2, -1).trivial


@pytest.mark.parametrize("n, expected", [
    (1, [0]), (2, [0]), (3, [0, -1]), (4, [0, -1]), (7, [0, -1, -2, -3]),
])
def test_trivial_set(n, expected):
    assert trivial_set(n) == [Fraction(v) for v in expected]
    for lam in expected:
        assert is_trivial(n, lam)
        assert eval_exact(Params(n, lam), Fraction(3, 7)) == 0
    assert not is_trivial(n, Fraction(-1, 2))
    assert not is_trivial(n, -len(expected))


def test_hand_values():
    # C_2^(-3/4)(1) = 2 lam(lam+1) - lam = 3/8
    assert eval_exact(Params(2, Fraction(-3, 4)), 1) == Fraction(3, 8)
    assert eval_recurrence(Params(2, Fraction(-3, 4)), 1.0) == pytest.approx(0.375, abs=1e-15)
    assert eval_recurrence(Params(1, 1), 0.25) == 0.5
    assert eval_recurrence(Params(3, -1), 0.5) == 0.0


@settings(max_examples=80, deadline=None)
@given(degrees, lambdas)
def test_coeffs_x_match_sympy(n, lam):
    p = Params(n, lam)
    if p.trivial:
        with pytest.raises(TrivialParameter):
            coeffs_x(p)
        return
    assert coeffs_x(p).coeffs == sympy_coeffs(n, lam)


@settings(max_examples=80, deadline=None)
@given(degrees, lambdas, st.fractions(min_value=-2, max_value=2, max_denominator=9))
def test_exact_eval_matches_coefficients_and_parity(n, lam, x):
    p = Params(n, lam)
    value = eval_exact(p, x)
    assert eval_exact(p, -x) == (-1) ** n * value
    if not p.trivial:
        assert coeffs_x(p)(x) == value


@settings(max_examples=60, deadline=None)
@given(degrees, lambdas)
def test_t_basis_times_prefactor_is_x_basis(n, lam):
    p = Params(n, lam)
    c = lam + Fraction(1, 2)
    if c.denominator == 1 and -(n - 1) <= c <= 0:
        with pytest.raises(SingularHypergeometricParameter):
            coeffs_t(p)
        return
    t = coeffs_t(p)
    assert t.normalized and t.coeffs[0] == 1 and t.basis is Basis.T_BASIS
    pre = prefactor(p)
    assert pre == eval_exact(p, 1)
    if p.trivial:
        assert pre == 0
        return
    scaled = tuple(pre * c for c in t.to_x_basis().coeffs)
    assert scaled == coeffs_x(p).coeffs


def test_recurrence_against_mpmath_seeded():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 25))
        lam = Fraction(int(rng.integers(-140, 300)), 100)
        x = float(rng.uniform(-1.5, 1.5))
        p = Params(n, lam)
        got = eval_recurrence(p, x)
        exact = float(eval_exact(p, Fraction(x)))
        assert got == pytest.approx(exact, rel=1e-9, abs=1e-11 * (1 + abs(float(prefactor(p)))))
        if not p.trivial:
            ref = float(mpmath.gegenbauer(n, float(lam), x))
            assert got == pytest.approx(ref, rel=1e-8, abs=1e-10 * (1 + abs(float(prefactor(p)))))


def test_array_and_scalar_paths_agree():
    p = Params(9, Fraction(-6, 5))
    xs = np.linspace(-1.3, 1.3, 41)
    arr = eval_recurrence(p, xs)
    assert np.allclose(arr, [eval_recurrence(p, v) for v in xs], rtol=0, atol=0)
    v, d = eval_nontrivial(p, xs)
    for i, xi in enumerate(xs):
        vs, ds = eval_nontrivial(p, float(xi))
        assert vs == pytest.approx(v[i], rel=1e-13, abs=1e-15)
        assert ds == pytest.approx(d[i], rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("n, lam", [(8, -1), (6, -2), (7, 0), (5, -1)])
def test_nontrivial_eval_is_lambda_derivative(n, lam):
    """At lam* the float path returns dC/dlam; compare with a scaled neighbour and sympy."""
    p = Params(n, lam)
    eps = Fraction(1, 10**9)
    near = Params(n, Fraction(lam) + eps)
    lam_sym = sp.Symbol("lam")
    d_sym = sp.diff(sp.gegenbauer(n, lam_sym, X), lam_sym)
    for x in (-1.2, -0.3, 0.45, 1.0, 1.1):
        v, _ = eval_nontrivial(p, x)
        vn, _ = eval_nontrivial(near, x)
        assert vn / float(eps) == pytest.approx(v, rel=1e-6, abs=1e-12)
        ref = float(sp.limit(d_sym.subs(X, sp.Rational(str(x))), lam_sym, lam))
        assert v == pytest.approx(ref, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 7, 10])
def test_half_factorisation(n):
    """C_n^(-1/2) is a constant multiple of (1 - x^2) C_{n-2}^(3/2)."""
    a = sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator)
                               for c in coeffs_x(Params(n, Fraction(-1, 2))).coeffs])), X)
    if n == 2:
        b = sp.Poly(1 - X**2, X)
    else:
        inner = coeffs_x(Params(n - 2, Fraction(3, 2))).coeffs
        b = sp.Poly((1 - X**2) * sp.Poly(list(reversed(
            [sp.Rational(c.numerator, c.denominator) for c in inner])), X).as_expr(), X)
    q, r = sp.div(a, b)
    assert r.is_zero and q.degree() == 0


def test_rational_poly_rules():
    with pytest.raises(ValueError):
        RationalPoly(Basis.X_BASIS, (0, 0))
    with pytest.raises(ValueError):
        RationalPoly(Basis.X_BASIS, (1, 2), normalized=True)
    p = RationalPoly(Basis.X_BASIS, (1, 2, 0, 0))
    assert p.degree == 1 and p(Fraction(1, 2)) == 2
    assert p(np.array([0.0, 1.0])).tolist() == [1.0, 3.0]
