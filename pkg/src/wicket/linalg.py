"""
Exact integer linear algebra and certified real roots.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so
products never overflow. Polynomials are :class:`IntPoly` values with
ascending integer coefficients. Floating point is only ever used to seed
a search whose answer is then checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class NoRealRootError(ValueError):
    pass


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ``coeffs[k]`` is the coefficient of t^k."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> IntPoly:
        """Build from ``(coefficient, exponent)`` pairs; colliding exponents add up."""
        acc: dict[int, int] = {}
        for c, e in terms:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return cls(())
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return cls(tuple(out))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPoly:
        return cls(tuple(reversed([int(c) for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(coefficient, exponent)`` pairs, ascending exponent."""
        return [(c, e) for e, c in enumerate(self.coeffs) if c]

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, i in self.terms():
            for b, j in other.terms():
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def reversed(self) -> IntPoly:
        """t^deg * p(1/t)."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __call__(self, x):
        """Exact value at an int or Fraction, float value otherwise."""
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            num = homogeneous_value(self, x.numerator, x.denominator)
            return Fraction(num, x.denominator ** max(self.degree, 0))
        return self.evalf(x)

    def sign_at(self, x) -> int:
        x = Fraction(x)
        v = homogeneous_value(self, x.numerator, x.denominator)
        return (v > 0) - (v < 0)

    def evalf(self, x: float) -> float:
        return math.fsum(c * x ** e for c, e in self.terms())

    def __str__(self):
        return poly_to_string(self)


def homogeneous_value(p: IntPoly, a: int, b: int) -> int:
    """b^deg * p(a/b) as an exact integer; for b > 0 its sign is the sign of p(a/b)."""
    d = p.degree
    if d < 0:
        return 0
    terms = p.terms()
    if 8 * len(terms) < d:
        if b & (b - 1) == 0:  # power of two: scale by shifting
            k = b.bit_length() - 1
            return sum((c * a ** e) << (k * (d - e)) for c, e in terms)
        return sum(c * a ** e * b ** (d - e) for c, e in terms)
    acc = p.coeffs[d]
    bpow = 1
    for k in range(d - 1, -1, -1):
        bpow *= b
        acc = acc * a + p.coeffs[k] * bpow
    return acc


def poly_to_string(p: IntPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for c, e in reversed(p.terms()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def sign_variations(values: Iterable[int]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_bound(p: IntPoly) -> int:
    """Upper bound on positive roots (with multiplicity); exact parity."""
    return sign_variations(p.coeffs)


def root_multiplicity(p: IntPoly, x) -> int:
    if p.is_zero():
        raise ValueError("zero polynomial")
    m = 0
    q = p
    while q(x) == 0:
        m += 1
        q = q.derivative()
    return m


# --------------------------------------------------------------------------
# Integer matrices
# --------------------------------------------------------------------------

def int_matrix(rows) -> np.ndarray:
    """Copy ``rows`` into a square object array of Python ints."""
    a = np.array([[int(x) for x in row] for row in rows], dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def char_poly(m) -> IntPoly:
    """det(tI - M) by Berkowitz's division-free recurrence."""
    a = int_matrix(m)
    n = a.shape[0]
    poly = [1]  # descending coefficients of the leading principal minor's char poly
    for k in range(n):
        # A_{k+1} = [[A_k, c], [r, akk]]
        akk = a[k, k]
        toeplitz = [1, -akk]
        if k:
            sub = a[:k, :k]
            r = a[k, :k]
            v = a[:k, k]
            for _ in range(k):
                toeplitz.append(-int(r.dot(v)))
                v = sub.dot(v)
        nxt = []
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                s += toeplitz[i - j] * poly[j]
            nxt.append(s)
        poly = nxt
    return IntPoly.from_descending(poly)


def poly_at_matrix(p: IntPoly, m) -> np.ndarray:
    """p(M) by Horner's rule, exact."""
    a = int_matrix(m)
    n = a.shape[0]
    eye = np.array([[int(i == j) for j in range(n)] for i in range(n)], dtype=object)
    acc = np.zeros((n, n), dtype=object) + 0
    for c in reversed(p.coeffs):
        acc = acc.dot(a) + c * eye
    return acc


@dataclass(frozen=True)
class Primitivity:
    primitive: bool
    power: int | None  # least k with M^k > 0, or None

    def __iter__(self):
        return iter((self.primitive, self.power))


def is_primitive(m) -> Primitivity:
    """Least k <= (d-1)^2 + 1 with every entry of M^k positive (Wielandt bound)."""
    a = int_matrix(m)
    if any(x < 0 for x in a.flat):
        raise ValueError("primitivity is defined for nonnegative matrices")
    d = a.shape[0]
    pattern = (a > 0).astype(np.int64)
    power = pattern.copy()
    for k in range(1, (d - 1) ** 2 + 2):
        if power.all():
            return Primitivity(True, k)
        power = ((power @ pattern) > 0).astype(np.int64)
    return Primitivity(False, None)


@dataclass(frozen=True)
class SmithForm:
    """Nonzero diagonal of the Smith normal form plus the shape it came from."""

    invariant_factors: tuple[int, ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def free_rank(self) -> int:
        """Free rank of the cokernel Z^ncols / rowspace."""
        return self.ncols - self.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)


def smith_normal_form(rows, ncols: int | None = None) -> SmithForm:
    """Invariant factors d1 | d2 | ... of an integer matrix (rows x ncols)."""
    a = [[int(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    nrows = len(a)
    factors = []
    t = 0
    while t < min(nrows, ncols):
        # pivot: smallest nonzero magnitude in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the whole trailing block
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        factors.append(abs(a[t][t]))
        t += 1
    return SmithForm(tuple(factors), ncols)


# --------------------------------------------------------------------------
# Certified real roots
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RootBracket:
    """Exactly one real root of ``polynomial`` lies in (low, high], or low == high is the root."""

    polynomial: IntPoly
    low: Fraction
    high: Fraction
    value: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "value", float((self.low + self.high) / 2))

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def contains(self, x: float) -> bool:
        return float(self.low) <= x <= float(self.high)


def _primitive_part(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return [x // g for x in c] if g > 1 else c


def _neg_rem(a: list[int], b: list[int]) -> list[int]:
    """-rem(a, b) up to a positive factor, ascending integer coefficients."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    scale_sign = 1
    while len(a) - 1 >= db and any(a):
        la = a[-1]
        shift = len(a) - 1 - db
        # a <- lb*a - la*t^shift*b; multiplying by lb flips sign when lb < 0
        a = [lb * x for x in a]
        if lb < 0:
            scale_sign = -scale_sign
        for k, y in enumerate(b):
            a[k + shift] -= la * y
        while a and a[-1] == 0:
            a.pop()
    if scale_sign < 0:
        a = [-x for x in a]
    return _primitive_part([-x for x in a]) if a else []


def _divide_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient a / b over Q, rescaled to a primitive integer polynomial with positive lead."""
    rem = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(b) - 1] / b[-1]
        q[k] = c
        if c:
            for i, y in enumerate(b):
                rem[k + i] -= c * y
    if any(rem):
        raise ArithmeticError("division is not exact")
    den = 1
    for c in q:
        den = den * c.denominator // math.gcd(den, c.denominator)
    out = _primitive_part([int(c * den) for c in q])
    return out if out[-1] > 0 else [-x for x in out]


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.degree < 1:
        return p
    a, b = list(p.coeffs), list(p.derivative().coeffs)
    while True:
        r = _neg_rem(a, b)
        if not r:
            break
        a, b = b, r
    return IntPoly(tuple(_divide_exact(list(p.coeffs), b)))


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Sturm chain q, q', -rem(q, q'), ... of the squarefree part q of p.

    Each term is rescaled by a positive constant, which leaves sign
    variations unchanged. Using the squarefree part keeps the counts valid
    at points where p has a repeated root.
    """
    if p.degree < 1:
        raise ValueError("Sturm sequence needs a nonconstant polynomial")
    q = squarefree_part(p)
    seq = [list(q.coeffs), list(q.derivative().coeffs)]
    while len(seq[-1]) > 1:
        r = _neg_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(r)
    return [IntPoly(tuple(c)) for c in seq]


class SturmCounter:
    """Counts distinct real roots of a polynomial in half-open intervals (a, b]."""

    def __init__(self, p: IntPoly):
        self.poly = p
        self.seq = sturm_sequence(p)

    def variations(self, x) -> int:
        if x == math.inf:
            return sign_variations(q.lead for q in self.seq)
        if x == -math.inf:
            return sign_variations(q.lead * (-1) ** q.degree for q in self.seq)
        x = Fraction(x)
        return sign_variations(homogeneous_value(q, x.numerator, x.denominator) for q in self.seq)

    def count(self, a, b) -> int:
        """Distinct real roots in (a, b]."""
        return self.variations(a) - self.variations(b)


def cauchy_bound(p: IntPoly) -> Fraction:
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), abs(p.lead)) if p.degree > 0 else Fraction(1)


def _dyadic_bound(p: IntPoly) -> Fraction:
    b = cauchy_bound(p)
    k = 1
    while k < b:
        k *= 2
    return Fraction(k)


def largest_real_root(p: IntPoly, tol: float = 1e-12) -> RootBracket:
    """Certified bracket of width <= tol around the greatest real root.

    Sturm counts isolate the root inside (-B, B] with B a power of two above
    the Cauchy bound; refinement then bisects by sign change when the root
    has odd multiplicity and by Sturm counts otherwise.
    """
    if p.is_zero():
        raise NoRealRootError("the zero polynomial has no largest root")
    if p.degree < 1:
        raise NoRealRootError(f"constant polynomial {p} has no roots")
    tol = Fraction(tol)
    sturm = SturmCounter(p)
    hi = _dyadic_bound(p)
    lo = -hi
    if sturm.count(lo, hi) == 0:
        raise NoRealRootError(f"{p} has no real roots")
    # invariant: no root in (hi, B], at least one root in (lo, hi]
    v_hi = sturm.variations(hi)
    while sturm.variations(lo) - v_hi > 1:
        mid = (lo + hi) / 2
        v_mid = sturm.variations(mid)
        if v_mid - v_hi >= 1:
            lo = mid
        else:
            hi, v_hi = mid, v_mid
    return _refine(p, sturm, lo, hi, tol)


def _refine(p: IntPoly, sturm: SturmCounter | None, lo: Fraction, hi: Fraction,
            tol: Fraction, signs: tuple[int, int] | None = None) -> RootBracket:
    """Shrink (lo, hi], which holds exactly one root, to width <= tol."""
    s_lo, s_hi = signs if signs is not None else (p.sign_at(lo), p.sign_at(hi))
    if s_hi == 0:
        return RootBracket(p, hi, hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s_mid = p.sign_at(mid)
        if s_mid == 0:
            return RootBracket(p, mid, mid)
        if s_lo * s_hi < 0:
            if s_mid == s_hi:
                hi, s_hi = mid, s_mid
            else:
                lo, s_lo = mid, s_mid
        else:
            if sturm is None:
                raise ValueError("even-multiplicity root needs Sturm refinement")
            if sturm.count(mid, hi) >= 1:
                lo, s_lo = mid, s_mid
            else:
                hi, s_hi = mid, s_mid
    return RootBracket(p, lo, hi)


def count_real_roots(p: IntPoly, a=-math.inf, b=math.inf) -> int:
    return SturmCounter(p).count(a, b)


def largest_root_reciprocal(p: IntPoly, tol: float = 1e-12) -> RootBracket:
    """Largest real root of a palindromic polynomial, certified without Sturm.

    Descartes' rule bounds the positive roots by the sign variations V, and
    palindromy pairs each positive root r != 1 with 1/r. If t = 1 has
    multiplicity m and V - m == 2, at most one root exceeds 1, so a sign
    change anywhere on (1, B] isolates it and it is the largest real root.
    Only a handful of exact evaluations are needed, which keeps sparse
    polynomials of degree in the thousands cheap.
    """
    if not p.is_palindromic():
        raise ValueError("polynomial is not palindromic")
    v = descartes_bound(p)
    m = root_multiplicity(p, 1)
    if v - m != 2:
        raise ValueError(f"Descartes certificate needs V - m == 2, got V={v}, m={m}")
    tol = Fraction(tol)
    hi = _dyadic_bound(p)
    s_hi = p.sign_at(hi)
    # walk down towards 1 until the sign flips
    eps = Fraction(1, 2)
    while True:
        if eps < tol / 4:
            raise NoRealRootError(f"{p} has no root above 1")
        lo = 1 + eps
        s_lo = p.sign_at(lo)
        if s_lo == 0:
            return RootBracket(p, lo, lo)
        if s_lo != s_hi:
            break
        hi = lo
        eps /= 2
    seed = _safe_newton(p, float(lo), float(hi))
    lo, hi, signs = _dyadic_bracket(p, seed, lo, hi, s_lo, tol)
    return _refine(p, None, lo, hi, tol, signs)


def _dyadic_bracket(p: IntPoly, seed: float, lo: Fraction, hi: Fraction, s_lo: int,
                    tol: Fraction):
    """Sign-change bracket on the grid 2^-k Z (2^-k <= tol) around a float estimate.

    Dyadic endpoints keep the exact evaluations small. Falls back to the
    bracket passed in when the estimate cannot be confirmed.
    """
    k = 0
    while Fraction(1, 2 ** k) > tol:
        k += 1
    h = Fraction(1, 2 ** k)
    j = math.floor(Fraction(seed) / h)
    spread = 0
    while (2 * spread + 1) * h < hi - lo:
        a, b = max((j - spread) * h, lo), min((j + 1 + spread) * h, hi)
        sa, sb = p.sign_at(a), p.sign_at(b)
        if sa == 0:
            return a, a, (0, 0)
        if sa == s_lo and sb != s_lo:
            return a, b, (sa, sb)
        spread = 2 * spread + 1
    return lo, hi, (s_lo, -s_lo)


def _safe_newton(p: IntPoly, lo: float, hi: float, steps: int = 200) -> float:
    """Float root of p inside a sign-change bracket: Newton with bisection fallback.

    Evaluates p(x) / x^deg so that high degrees do not overflow.
    """
    d = p.degree
    terms = [(float(c), e - d) for c, e in p.terms()]

    def f(x):
        return math.fsum(c * x ** k for c, k in terms)

    def df(x):
        return math.fsum(c * k * x ** (k - 1) for c, k in terms if k)

    f_lo = f(lo)
    x = 0.5 * (lo + hi)
    for _ in range(steps):
        fx = f(x)
        if fx == 0:
            return x
        if (fx < 0) == (f_lo < 0):
            lo, f_lo = x, fx
        else:
            hi = x
        slope = df(x)
        nx = x - fx / slope if slope else lo - 1
        if not lo < nx < hi:
            nx = 0.5 * (lo + hi)
        if abs(nx - x) <= 4e-16 * x:
            return nx
        x = nx
    return x
