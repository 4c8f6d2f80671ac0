import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import roots_gegenbauer, roots_legendre

from gegenzeros.core import Params, coeffs_t, coeffs_x, eval_nontrivial
from gegenzeros.errors import DegenerateParameters, DomainError
from gegenzeros.zeros import largest_zero, zeros, zeros_orthogonal, zeros_quasi


def exact_real_roots(poly_coeffs, dps=60):
    """Real roots of an exact ascending coefficient list, decreasing (mpmath oracle)."""
    cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(poly_coeffs)]
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(cs, maxsteps=400, extraprec=4 * dps)
    real = sorted((float(mpmath.re(r)) for r in roots if abs(mpmath.im(r)) < 1e-20),
                  reverse=True)
    return np.array(real)


def oracle_zeros(n, lam):
    p = Params(n, lam)
    if p.trivial:
        return 1 - 2 * np.sort(exact_real_roots(coeffs_t(p).coeffs))
    return exact_real_roots(coeffs_x(p).coeffs)


quasi_lams = st.fractions(min_value=Fraction(-149, 100), max_value=Fraction(-51, 100),
                          max_denominator=100)
orth_lams = st.fractions(min_value=Fraction(-49, 100), max_value=Fraction(5), max_denominator=100)


def test_spot_values():
    z = zeros(3, Fraction(-3, 4))
    assert z[0] == pytest.approx(math.sqrt(6 / 5), abs=1e-14)
    assert z[1] == 0.0 and z[2] == -z[0]
    assert z.outside_count == 2
    assert zeros(2, Fraction(-3, 4)).zeros[0] == pytest.approx(math.sqrt(2), abs=1e-14)
    assert zeros(2, Fraction(-1, 2)).zeros == (1.0, -1.0)
    assert zeros(1, 5).zeros == (0.0,)
    assert zeros(8, -1)[0] == pytest.approx(1.0149258575823963, abs=1e-13)


@pytest.mark.parametrize("n", [2, 5, 9, 16, 30])
def test_legendre_and_scipy(n):
    assert np.allclose(zeros(n, Fraction(1, 2)).as_array(), np.sort(roots_legendre(n)[0])[::-1],
                       atol=1e-14)
    assert np.allclose(zeros(n, Fraction(7, 4)).as_array(),
                       np.sort(roots_gegenbauer(n, 1.75)[0])[::-1], atol=1e-13)


@pytest.mark.parametrize("n, lam", [
    (3, "-3/4"), (4, "-6/5"), (7, "-1.01"), (9, "-0.52"), (12, "-1.45"), (5, "-0.499"),
    (6, "0.3"), (10, "2"), (11, "-1.499"),
])
def test_against_exact_coefficient_roots(n, lam):
    lam = Fraction(lam)
    got = zeros(n, lam).as_array()
    ref = oracle_zeros(n, lam)
    assert len(ref) == n
    assert np.allclose(got, ref, atol=1e-12, rtol=0)


@pytest.mark.parametrize("n, lam", [(8, -1), (5, -1), (3, -1), (7, 0), (2, 0), (14, -1)])
def test_trivial_parameters_use_t_basis_roots(n, lam):
    got = zeros(n, lam).as_array()
    ref = oracle_zeros(n, lam)
    assert len(got) == n
    assert np.allclose(got, ref, atol=1e-12, rtol=0)


@pytest.mark.parametrize("n, lam", [(8, -1), (9, -1), (6, 0)])
def test_continuity_across_trivial_parameter(n, lam):
    eps = Fraction(1, 10**9)
    mid = zeros(n, lam).as_array()
    for side in (-eps, eps):
        assert np.allclose(zeros(n, Fraction(lam) + side).as_array(), mid, atol=1e-7)


@pytest.mark.parametrize("n", [2, 3, 6, 11])
def test_half_case(n):
    z = zeros(n, Fraction(-1, 2)).as_array()
    assert z[0] == 1.0 and z[-1] == -1.0
    inner = np.sort(roots_gegenbauer(n - 2, 1.5)[0])[::-1] if n > 2 else []
    assert np.allclose(z[1:-1], inner, atol=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 30), quasi_lams)
def test_quasi_invariants(n, lam):
    if n + 2 * lam <= 0:
        return
    z = zeros(n, lam)
    xs = z.as_array()
    assert len(xs) == n and z.outside_count == 2
    assert xs[0] > 1 and xs[-1] < -1 and np.all(np.abs(xs[1:-1]) < 1)
    assert np.all(np.diff(xs) < 0)
    assert np.array_equal(xs, -xs[::-1])
    assert largest_zero(n, lam) == pytest.approx(xs[0], abs=1e-14)
    vals, ders = eval_nontrivial(Params(n, lam), xs)
    assert np.all(np.abs(vals) <= 1e-10 * np.maximum(1, np.abs(ders)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), orth_lams)
def test_orthogonal_invariants(n, lam):
    z = zeros(n, lam)
    xs = z.as_array()
    assert len(xs) == n and z.outside_count == 0
    assert np.all(np.abs(xs) < 1)
    assert np.all(np.diff(xs) < 0) if n > 1 else True
    assert np.array_equal(xs, -xs[::-1])
    assert z.precision < 1e-10


def test_errors():
    with pytest.raises(DegenerateParameters):
        zeros(2, Fraction(-6, 5))
    with pytest.raises(DomainError):
        zeros(3, Fraction(-3, 2))
    with pytest.raises(DomainError):
        zeros(9, -3)
    with pytest.raises(DomainError):
        zeros_orthogonal(4, Fraction(-1, 2))
    with pytest.raises(DomainError):
        zeros_quasi(4, Fraction(-1, 4))
    with pytest.raises(DomainError):
        zeros_quasi(1, Fraction(-3, 4))


def test_near_boundary_outer_zero():
    # x_{1,n} - 1 is about 2(lam + 1/2)/(n - n^2): tiny but resolved.
    for n in (8, 40):
        lam = Fraction(-1, 2) - Fraction(1, 10**6)
        x1 = largest_zero(n, lam)
        assert 0 < x1 - 1 < 1e-6
        assert x1 - 1 == pytest.approx(2e-6 / (n * n - n), rel=1e-3)
