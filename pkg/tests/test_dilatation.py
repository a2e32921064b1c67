import math

import numpy as np
import pytest
import sympy as sp

from wicket.dilatation import (
    KAPPA_POLY,
    certified_largest_root,
    convergence_report,
    dilatation,
    family_polynomial,
    kappa,
    kappa_closed_form,
    kappa_factorization_holds,
    penner_bound,
    penner_check,
    reproduce_table,
    strands_to_family,
)
from wicket.linalg import IntPoly, largest_real_root

TABLE = [2.26844, 1.56362, 1.36516, 1.27074, 1.21532, 1.17882, 1.15293, 1.13361,
         1.11863, 1.10668, 1.09692, 1.08879, 1.08193, 1.07605, 1.07096, 1.06651]


def test_family_polynomial_n0():
    assert family_polynomial(0) == IntPoly.from_descending([1, -2, -2, 3, 0, 0, 3, -2, -2, 1])


def test_family_polynomial_n1():
    t = sp.symbols("t")
    expected = sp.Poly(t**15 - 2*t**13 - 2*t**12 + 3*t**10 + 3*t**5 - 2*t**3 - 2*t**2 + 1, t)
    assert family_polynomial(1).coeffs == tuple(int(c) for c in reversed(expected.all_coeffs()))


@pytest.mark.parametrize("n", range(0, 60, 3))
def test_family_polynomial_palindromic(n):
    p = family_polynomial(n)
    assert p.coeffs == tuple(reversed(p.coeffs))
    assert len(p.terms()) == 8


def test_family_polynomial_rejects_negative():
    with pytest.raises(ValueError):
        family_polynomial(-1)


@pytest.mark.parametrize("n", range(0, 8))
def test_root_against_numpy(n):
    p = family_polynomial(n)
    roots = np.roots(list(reversed(p.coeffs)))
    top = max(r.real for r in roots if abs(r.imag) < 1e-9)
    assert abs(certified_largest_root(p).value - top) < 1e-8
    # reciprocal root is a root too
    lam = sp.Rational(certified_largest_root(p).low)
    assert abs(float(sp.Poly(list(reversed(p.coeffs)), sp.Symbol("t")).eval(1 / lam))) < 1e-6


def test_root_against_sympy_high_precision():
    t = sp.symbols("t")
    for n in (0, 3, 9):
        p = family_polynomial(n)
        ref = max(sp.Poly(list(reversed(p.coeffs)), t).real_roots())
        r = certified_largest_root(p)
        assert sp.Rational(r.low) <= ref <= sp.Rational(r.high)


# kappa

def test_kappa_value_and_closed_form():
    k = kappa()
    assert abs(k.value - 2.89005) < 5e-6
    assert k.closed_form_in_bracket and k.factorization_holds
    assert abs(float(kappa_closed_form()) - 2.890053638263964) < 1e-15


def test_kappa_factorization_symbolically():
    t, r5 = sp.symbols("t"), sp.sqrt(5)
    prod = sp.expand((t**2 - (1 + r5) * t + 1) * (t**2 - (1 - r5) * t + 1))
    assert sp.Poly(prod, t).all_coeffs() == [1, -2, -2, -2, 1]
    assert kappa_factorization_holds()


def test_kappa_is_w6_dilatation():
    assert dilatation(6).polynomial == KAPPA_POLY
    assert dilatation(6).value == kappa().value


# dispatch

@pytest.mark.parametrize("strands, kind, n", [
    (6, "w6", None), (8, "4n+8", 0), (10, "4n+6", 1), (12, "4n+8", 1), (14, "4n+6", 2)])
def test_strand_dispatch(strands, kind, n):
    assert strands_to_family(strands) == (kind, n)


@pytest.mark.parametrize("strands", [4, 5, 7, 0, -8])
def test_bad_strands(strands):
    with pytest.raises(ValueError):
        dilatation(strands)


@pytest.mark.parametrize("strands, value", [(8, 2.26844), (10, 1.56362), (12, 1.56362),
                                            (14, 1.36516)])
def test_dilatation_values(strands, value):
    d = dilatation(strands)
    assert abs(d.value - value) < 1e-5
    assert d.value > 1 and d.normalized_entropy > 0


def test_normalized_entropy_factors():
    d10, d12 = dilatation(10), dilatation(12)
    assert d10.value == d12.value
    assert d10.normalized_entropy == pytest.approx(8 * math.log(d10.value))
    assert d12.normalized_entropy == pytest.approx(10 * math.log(d12.value))


def test_result_json_fields():
    d = dilatation(12).to_dict()
    assert set(d) == {"strands", "n", "polynomial", "lambda", "lambda_bracket",
                      "log_lambda", "normalized_entropy"}
    lo, hi = d["lambda_bracket"]
    assert lo <= d["lambda"] <= hi
    assert hi - lo <= 1e-12


# table

def test_table_rows():
    rows = reproduce_table(15)
    assert rows[0].label == "w6" and abs(rows[0].value - 2.89005) < 5e-6
    values = [r.value for r in rows[1:]]
    for got, want in zip(values, TABLE):
        assert abs(got - want) < 1e-5
    assert all(b < a for a, b in zip(values, values[1:]))
    assert rows[-1].strands_high == 68 and rows[-1].strands_low == 66


def test_table_needs_a_row():
    with pytest.raises(ValueError):
        reproduce_table(0)


# Penner

@pytest.mark.parametrize("strands", [6, 8, 10, 36, 64])
def test_penner(strands):
    assert penner_check(strands)


def test_penner_examples():
    assert penner_bound(6) == pytest.approx(math.log(2) / 12)
    assert penner_bound(36) == pytest.approx(math.log(2) / 132)
    assert abs(dilatation(36).log_lambda - 0.1254) < 1e-3
    with pytest.raises(ValueError):
        penner_bound(3)


# asymptotics

def test_convergence_to_200():
    rep = convergence_report(200)
    assert abs(rep.limit - 4.24510) < 1e-4
    assert rep.gap_strictly_decreasing
    assert rep.lambda_strictly_decreasing
    assert rep.entropy_above_limit
    n0 = rep.first_n_within_one_percent
    assert rep.points[n0].value - 1 < 0.01 <= rep.points[n0 - 1].value - 1


def test_large_n_gap():
    limit = 4 * math.log(kappa().value)
    assert abs(dilatation(4 * 1000 + 8).normalized_entropy - limit) < 0.02


def test_certifier_falls_back_to_sturm():
    # not palindromic: goes through Sturm
    p = IntPoly((-2, 0, 1))
    assert certified_largest_root(p).low == largest_real_root(p).low
