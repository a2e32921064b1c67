from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import invariant_factors

from wicket.dilatation import family_polynomial
from wicket.linalg import (
    IntPoly,
    NoRealRootError,
    SturmCounter,
    cauchy_bound,
    char_poly,
    count_real_roots,
    descartes_bound,
    is_primitive,
    largest_real_root,
    largest_root_reciprocal,
    poly_at_matrix,
    poly_to_string,
    root_multiplicity,
    smith_normal_form,
    squarefree_part,
)

T = sp.symbols("t")

int_matrices = st.integers(1, 6).flatmap(
    lambda d: st.lists(st.lists(st.integers(-6, 6), min_size=d, max_size=d), min_size=d, max_size=d))
rect_matrices = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-8, 8), min_size=rc[1], max_size=rc[1]),
                        min_size=rc[0], max_size=rc[0]))
polys = st.lists(st.integers(-5, 5), min_size=2, max_size=9).filter(lambda c: c[-1] != 0).map(
    lambda c: IntPoly(tuple(c)))


def sympy_poly(p: IntPoly):
    return sp.Poly(list(reversed(p.coeffs)), T)


# IntPoly

def test_trimming_and_degree():
    p = IntPoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert IntPoly(()).is_zero() and IntPoly((0,)).degree == -1


def test_from_terms_sums_collisions():
    assert IntPoly.from_terms([(2, 3), (-1, 3), (4, 0)]).coeffs == (4, 0, 0, 1)


def test_arithmetic():
    a, b = IntPoly((1, 1)), IntPoly((-1, 1))
    assert (a * b).coeffs == (-1, 0, 1)
    assert (a + b).coeffs == (0, 2)
    assert (a - a).is_zero()
    assert (a ** 3).coeffs == (1, 3, 3, 1)


def test_exact_evaluation():
    p = IntPoly((1, -2, -2, -2, 1))
    assert p(Fraction(1, 2)) == Fraction(1, 16) - Fraction(1, 4) - Fraction(1, 2) - 1 + 1
    assert p(2) == 16 - 16 - 8 - 4 + 1
    assert p.sign_at(3) == 1 and p.sign_at(2) == -1


@given(polys, st.fractions(min_value=-4, max_value=4, max_denominator=50))
def test_evaluation_matches_sympy(p, x):
    assert p(x) == sympy_poly(p).eval(sp.Rational(x.numerator, x.denominator))


def test_rendering():
    assert poly_to_string(IntPoly((1, -4, 3, 0, 3, -4, 1))) == "t^6 - 4t^5 + 3t^4 + 3t^2 - 4t + 1"
    assert str(IntPoly((-2, 1))) == "t - 2"
    assert str(IntPoly(())) == "0"


def test_palindromic_and_multiplicity():
    p = family_polynomial(3)
    assert p.is_palindromic() and p.reversed() == p
    assert root_multiplicity(p, 1) == 2
    assert descartes_bound(p) == 4


# characteristic polynomials

def test_charpoly_w6_matrix():
    m = [[2, 0, 0, 0, 0, 1], [2, 0, 0, 2, 1, 0], [1, 0, 1, 1, 1, 0],
         [0, 0, 2, 1, 2, 0], [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
    assert char_poly(m).coeffs == (1, -4, 3, 0, 3, -4, 1)


def test_charpoly_small_cases():
    assert char_poly(np.eye(2, dtype=int)) == IntPoly((1, -2, 1))
    assert char_poly([[0, 1], [1, 0]]) == IntPoly((-1, 0, 1))
    assert char_poly([[5]]) == IntPoly((-5, 1))


@settings(max_examples=80)
@given(int_matrices)
def test_charpoly_matches_sympy(rows):
    ref = sp.Matrix(rows).charpoly(T).all_coeffs()
    assert char_poly(rows).coeffs == tuple(int(c) for c in reversed(ref))


@settings(max_examples=40)
@given(int_matrices)
def test_cayley_hamilton(rows):
    assert not poly_at_matrix(char_poly(rows), rows).any()


def test_charpoly_big_entries():
    big = 10 ** 30
    m = [[big, 1], [1, big]]
    assert char_poly(m) == IntPoly((big * big - 1, -2 * big, 1))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        char_poly([[1, 2, 3], [4, 5, 6]])


# primitivity

def test_primitivity_examples():
    w6 = [[2, 0, 0, 0, 0, 1], [2, 0, 0, 2, 1, 0], [1, 0, 1, 1, 1, 0],
          [0, 0, 2, 1, 2, 0], [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
    assert tuple(is_primitive(w6)) == (True, 5)
    assert tuple(is_primitive(np.eye(3, dtype=int))) == (False, None)
    assert tuple(is_primitive([[0, 1], [1, 0]])) == (False, None)
    assert tuple(is_primitive([[1, 1], [1, 0]])) == (True, 2)
    with pytest.raises(ValueError):
        is_primitive([[1, -1], [1, 1]])


def test_wielandt_extremal_matrix():
    # the Wielandt matrix attains the bound (d-1)^2 + 1
    d = 5
    m = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        m[i][i + 1] = 1
    m[d - 1][0] = m[d - 1][1] = 1
    assert tuple(is_primitive(m)) == (True, (d - 1) ** 2 + 1)


@settings(max_examples=40)
@given(st.integers(2, 5).flatmap(
    lambda d: st.lists(st.lists(st.integers(0, 1), min_size=d, max_size=d), min_size=d, max_size=d)))
def test_primitivity_power_is_least(rows):
    prim = is_primitive(rows)
    m = sp.Matrix(rows)
    if prim.primitive:
        assert all(x > 0 for x in m ** prim.power)
        if prim.power > 1:
            assert not all(x > 0 for x in m ** (prim.power - 1))
    else:
        d = len(rows)
        assert not all(x > 0 for x in m ** ((d - 1) ** 2 + 1))


# Smith normal form

def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)
    z = smith_normal_form([[0, 0, 0]], 3)
    assert z.free_rank == 3 and z.torsion == ()
    assert smith_normal_form([], 2).free_rank == 2


def test_snf_abelianized_relation_matrix():
    # over (r, s, t) for genus 2
    snf = smith_normal_form([[2, 0, 0], [0, 6, 6], [-4, 4, 4]])
    assert snf.torsion == (2, 2) and snf.free_rank == 1


@settings(max_examples=80)
@given(rect_matrices)
def test_snf_matches_sympy(rows):
    ref = [abs(int(x)) for x in invariant_factors(sp.Matrix(rows)) if x != 0]
    snf = smith_normal_form(rows)
    assert list(snf.invariant_factors) == ref
    d = snf.invariant_factors
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


@settings(max_examples=40)
@given(int_matrices)
def test_snf_product_is_determinant(rows):
    det = int(sp.Matrix(rows).det())
    snf = smith_normal_form(rows)
    if det:
        prod = 1
        for x in snf.invariant_factors:
            prod *= x
        assert prod == abs(det)
    else:
        assert snf.rank < len(rows)


# roots

def test_kappa_root():
    r = largest_real_root(IntPoly((1, -2, -2, -2, 1)))
    assert abs(r.value - 2.89005) < 5e-6
    assert r.width <= 1e-12
    assert r.polynomial.sign_at(r.low) * r.polynomial.sign_at(r.high) <= 0


def test_exact_and_irrational_roots():
    r = largest_real_root(IntPoly((-2, 1)))
    assert r.low == r.high == 2
    r = largest_real_root(IntPoly((-2, 0, 1)))
    assert r.low < Fraction(14142135623731, 10 ** 13) and r.width <= 1e-12
    assert r.contains(2 ** 0.5)


def test_even_multiplicity_largest_root():
    # (t^2 - 9)^2 (t^2 + 1): the largest root 3 is double, so there is no sign change
    p = IntPoly((-9, 0, 1)) ** 2 * IntPoly((1, 0, 1))
    assert largest_real_root(p).value == 3.0


def test_root_errors():
    with pytest.raises(NoRealRootError):
        largest_real_root(IntPoly((1, 0, 1)))
    with pytest.raises(NoRealRootError):
        largest_real_root(IntPoly(()))
    with pytest.raises(NoRealRootError):
        largest_real_root(IntPoly((3,)))


@settings(max_examples=60, deadline=None)
@given(polys)
def test_largest_root_matches_sympy(p):
    roots = sympy_poly(p).real_roots()
    if not roots:
        with pytest.raises(NoRealRootError):
            largest_real_root(p, 1e-9)
        return
    r = largest_real_root(p, 1e-9)
    top = max(roots)
    assert sp.Rational(r.low.numerator, r.low.denominator) <= top
    assert top <= sp.Rational(r.high.numerator, r.high.denominator)
    assert r.width <= 1e-9


@settings(max_examples=60, deadline=None)
@given(polys)
def test_sturm_counts_match_sympy(p):
    distinct = set(sympy_poly(p).real_roots())
    assert count_real_roots(p) == len(distinct)
    assert SturmCounter(p).count(0, 2) == len([x for x in distinct if 0 < x <= 2])


def test_squarefree_part():
    p = IntPoly((-1, 1)) ** 3 * IntPoly((2, 1))
    assert squarefree_part(p) == IntPoly((-1, 1)) * IntPoly((2, 1))


@pytest.mark.parametrize("n", range(51))
def test_one_sturm_root_above_one(n):
    p = family_polynomial(n)
    assert SturmCounter(p).count(1, cauchy_bound(p)) == 1


@pytest.mark.parametrize("n", [0, 1, 4, 10])
def test_reciprocal_certificate_agrees_with_sturm(n):
    p = family_polynomial(n)
    a = largest_root_reciprocal(p)
    b = largest_real_root(p)
    assert a.width <= 1e-12 and b.width <= 1e-12
    assert max(a.low, b.low) <= min(a.high, b.high)


def test_reciprocal_certificate_preconditions():
    with pytest.raises(ValueError):
        largest_root_reciprocal(IntPoly((1, -2, -2, -2, 2)))
    with pytest.raises(ValueError):
        # palindromic, but six sign changes
        largest_root_reciprocal(IntPoly((1, -1, 1, -1, 1, -1, 1)))
