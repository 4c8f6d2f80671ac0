import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gegenzeros import bounds as B
from gegenzeros.core import Params, coeffs_t
from gegenzeros.errors import DegenerateParameters, DomainError
from gegenzeros.zeros import largest_zero

Q = Fraction(-3, 4)


def brute_power_sums(n, lam, m, dps=60):
    """S_j from the t-roots found numerically at high precision."""
    cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(coeffs_t(Params(n, lam)).coeffs)]
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(cs, maxsteps=400, extraprec=4 * dps)
        return [float(mpmath.re(sum(r ** -j for r in roots))) for j in range(1, m + 1)]


def test_newton_identities_small_case():
    # (1 - t/2)(1 - t/3) = 1 - 5/6 t + 1/6 t^2, reciprocal roots 1/2 and 1/3
    s = B.newton_power_sums([Fraction(1), Fraction(-5, 6), Fraction(1, 6)], 4)
    assert s == [Fraction(5, 6), Fraction(13, 36), Fraction(35, 216), Fraction(97, 1296)]


def test_newton_identities_roots_one_and_half():
    # 1 - 3t + 2t^2 has roots 1 and 1/2, reciprocals 1 and 2
    assert B.newton_power_sums([1, -3, 2], 3) == [3, 5, 9]


def test_two_routes_to_lower1():
    p = Params(4, Q)
    s = B.power_sums(p, 2)
    assert B.thm33_lower1_exact(p) == 1 - 2 * s[1] / s[2] == Fraction(28, 27)


def test_power_sums_known_values():
    s = B.power_sums(Params(3, Q), 3)
    assert list(s.values) == [-18, 444, -9192]
    assert s[1] == -18 and s.m_max == 3
    assert list(B.power_sums(Params(4, Q), 2).values) == [-40, 2160]


@pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
@pytest.mark.parametrize("lam", ["-1.3", "-3/4", "-0.51", "0.25", "1", "5/2"])
def test_power_sums_against_roots(n, lam):
    lam = Fraction(lam)
    if n + 2 * lam <= 0:
        return
    exact = B.power_sums(Params(n, lam), 6).values
    brute = brute_power_sums(n, lam, 6)
    for a, b in zip(exact, brute):
        assert float(a) == pytest.approx(b, rel=1e-8)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.fractions(Fraction(-149, 100), Fraction(-51, 100), max_denominator=100))
def test_closed_forms_from_power_sums(n, lam):
    p = Params(n, lam)
    if n + 2 * lam <= 0:
        return
    s = B.power_sums(p, 2)
    assert s[2] == B.s2_closed_form(p)
    assert B.thm33_lower1_exact(p) == 1 - 2 * s[1] / s[2]
    assert B.thm33_upper_exact(p) == 1 + 2 / abs(s[1])
    printed = B.thm33_printed_middle(p)
    assert printed == pytest.approx(1 + 4 / math.sqrt(float(s[2])), rel=1e-13)


def test_spot_values_n3():
    p = Params(3, Q)
    assert B.bound_upper_thm21(p) == pytest.approx(1.1547005, abs=1e-6)
    assert B.bound_lower_thm22(p) == pytest.approx(1.0846523, abs=1e-6)
    rep = B.bounds_thm33(p)
    assert rep["thm33_lower1"] == pytest.approx(40 / 37, abs=1e-15)
    assert rep["thm33_upper"] == pytest.approx(10 / 9, abs=1e-15)
    # 1 + 2/sqrt(444), computed independently
    assert rep["thm33_lower2"] == pytest.approx(1 + 2 / math.sqrt(444), abs=1e-15)
    assert rep["thm33_lower2"] == pytest.approx(1.0949158, abs=1e-6)


def test_report_labels_and_verdicts():
    rep = B.bound_report(Params(3, Q))
    assert set(rep.labels()) >= {"thm21_upper", "thm22_lower", "thm33_lower1", "thm33_lower2",
                                 "thm33_upper", "er_m_lower", "er_m_upper"}
    assert rep.verdict is B.Verdict.PASS
    assert rep.witness == pytest.approx(math.sqrt(1.2), abs=1e-14)
    assert all(rep["thm33_lower2"] >= b.value for b in rep.lowers())
    assert min(b.value for b in rep.uppers()) == rep["er_m_upper_ratio"]
    d = rep.to_dict()
    assert d["lambda"] == "-3/4" and len(d["bounds"]) == len(rep.bounds)


def test_equality_at_degree_two():
    rep = B.bound_report(Params(2, Q))
    assert rep.verdicts["thm21_upper"] is B.Verdict.EQUALITY
    assert rep.verdicts["thm22_lower"] is B.Verdict.EQUALITY
    assert rep.verdict is B.Verdict.EQUALITY


def test_extended_range_only_thm33():
    rep = B.bound_report(Params(10, 1))
    assert "thm21_upper" not in rep.labels() and "thm33_lower2" not in rep.labels()
    assert "extended range" in rep.bounds[0].note
    assert rep.verdict is B.Verdict.PASS


def test_collapse_at_half():
    rep = B.bound_report(Params(7, Fraction(-1, 2)))
    assert rep["thm33_upper"] == 1.0 and rep["thm33_lower1"] == 1.0
    assert rep["thm21_upper"] == pytest.approx(1.0, abs=1e-15)
    assert rep.verdict is B.Verdict.EQUALITY


@pytest.mark.parametrize("n, lam", [(5, Fraction(1, 2)), (8, Fraction(1)), (6, Fraction(-1, 4))])
def test_positive_chain_contains_t1_and_shrinks(n, lam):
    p = Params(n, lam)
    t1 = (1 - largest_zero(p)) / 2
    widths = []
    for m in range(1, 6):
        lo, hi = B.er_bounds_positive(p, m).extras["t_interval"]
        assert lo < t1 < hi
        widths.append(hi - lo)
    assert all(a > b for a, b in zip(widths, widths[1:]))


@pytest.mark.parametrize("n", [3, 6, 11, 25])
@pytest.mark.parametrize("lam", ["-1.3", "-1", "-0.8", "-0.55"])
def test_quasi_chain_orders(n, lam):
    p = Params(n, Fraction(lam))
    x1 = largest_zero(p)
    for m in (1, 2, 3):
        rep = B.er_bounds_quasi(p, m)
        assert rep["er_m_lower_ratio"] < x1 and rep["er_m_lower"] < x1
        assert rep["er_m_upper"] > x1 and rep["er_m_upper_ratio"] > x1
        assert rep["er_m_lower_ratio"] <= rep["er_m_lower"]


def test_quasi_chain_tightens_with_order():
    p = Params(9, Fraction(-6, 5))
    gaps = [B.er_bounds_quasi(p, m)["er_m_upper"] - B.er_bounds_quasi(p, m)["er_m_lower"]
            for m in range(1, 5)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_errors():
    with pytest.raises(DegenerateParameters):
        B.bound_report(Params(2, Fraction(-6, 5)))
    with pytest.raises(DomainError):
        B.bound_report(Params(1, Q))
    with pytest.raises(DomainError):
        B.bound_report(Params(4, Fraction(-3, 2)))
    with pytest.raises(DomainError):
        B.er_bounds_positive(Params(4, Q))
    with pytest.raises(DomainError):
        B.er_bounds_quasi(Params(4, Fraction(1)))
    with pytest.raises(ValueError):
        B.newton_power_sums([2, 1], 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.fractions(Fraction(-1499, 1000), Fraction(-501, 1000),
                                        max_denominator=1000))
def test_sandwich_property(n, lam):
    p = Params(n, lam)
    x1 = largest_zero(p)
    assert B.bound_lower_thm22(p) < x1 < B.bound_upper_thm21(p)
    rep = B.bounds_thm33(p)
    assert rep["thm33_lower1"] < rep["thm33_lower2"] <= x1 < rep["thm33_upper"]
    assert B.thm33_printed_middle(p) > rep["thm33_lower2"]


def test_judge_semantics():
    rep = B.BoundReport(Params(3, Q), [B.Bound("a", B.Side.LOWER, 1.0),
                                       B.Bound("b", B.Side.UPPER, 2.0)])
    rep.judge(1.5)
    assert rep.verdict is B.Verdict.PASS and rep.margins == {"a": 0.5, "b": 0.5}
    rep.judge(2.0 + 1e-13)
    assert rep.verdicts["b"] is B.Verdict.EQUALITY
    rep.judge(3.0)
    assert rep.verdict is B.Verdict.FAIL
    assert np.isclose(rep.margins["b"], -1.0)
