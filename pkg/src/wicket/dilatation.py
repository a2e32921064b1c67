"""
Dilatations of w_6, w_{4n+8} and w_{4n+6}.

The dilatation of w_{4n+8} is the largest root of

    t^(6n+9) - 2t^(5n+8) - 2t^(5n+7) + 3t^(4n+6) + 3t^(2n+3) - 2t^(n+2) - 2t^(n+1) + 1,

w_{4n+6} (n >= 1) has the same dilatation, and w_6 has dilatation kappa,
the largest root of t^4 - 2t^3 - 2t^2 - 2t + 1. Normalized entropy of a
braid on m strands is (m - 2) log(lambda).

Roots are certified exactly. For palindromic inputs with the right
Descartes count (every family polynomial) this needs only a few exact
evaluations; other polynomials go through Sturm sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .linalg import (
    IntPoly,
    RootBracket,
    descartes_bound,
    largest_real_root,
    largest_root_reciprocal,
    root_multiplicity,
)

DEFAULT_TOL = 1e-12
KAPPA_POLY = IntPoly((1, -2, -2, -2, 1))


def family_polynomial(n: int) -> IntPoly:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return IntPoly.from_terms([
        (1, 6 * n + 9), (-2, 5 * n + 8), (-2, 5 * n + 7), (3, 4 * n + 6),
        (3, 2 * n + 3), (-2, n + 2), (-2, n + 1), (1, 0),
    ])


def certified_largest_root(p: IntPoly, tol: float = DEFAULT_TOL) -> RootBracket:
    """Largest real root, using the cheap reciprocal certificate when it applies."""
    if p.is_palindromic() and p.degree > 0:
        m = root_multiplicity(p, 1)
        if descartes_bound(p) - m == 2:
            return largest_root_reciprocal(p, tol)
    return largest_real_root(p, tol)


# --------------------------------------------------------------------------
# kappa
# --------------------------------------------------------------------------

# a + b*sqrt(5) as (a, b) with rational a, b
def _q5_mul(x, y):
    return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _q5_poly_mul(p, q):
    out = [(Fraction(0), Fraction(0))] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            c = _q5_mul(a, b)
            out[i + j] = (out[i + j][0] + c[0], out[i + j][1] + c[1])
    return out


def kappa_factors():
    """t^2 - (1 + sqrt5) t + 1 and t^2 - (1 - sqrt5) t + 1, ascending, over Z[sqrt5]."""
    one, zero = Fraction(1), Fraction(0)
    f = [(one, zero), (-one, -one), (one, zero)]
    g = [(one, zero), (-one, one), (one, zero)]
    return f, g


def kappa_factorization_holds() -> bool:
    """Expand the two quadratic factors exactly and compare with the quartic."""
    prod = _q5_poly_mul(*kappa_factors())
    return all(b == 0 for _, b in prod) and tuple(int(a) for a, _ in prod) == KAPPA_POLY.coeffs


def kappa_closed_form(digits: int = 50) -> Decimal:
    """(1 + sqrt5)/2 + sqrt(2 + 2 sqrt5)/2 to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        r5 = Decimal(5).sqrt()
        value = (1 + r5) / 2 + (2 + 2 * r5).sqrt() / 2
    return +value


@dataclass(frozen=True)
class KappaCheck:
    bracket: RootBracket
    closed_form: Decimal
    closed_form_in_bracket: bool
    factorization_holds: bool

    @property
    def value(self) -> float:
        return self.bracket.value


def kappa(tol: float = DEFAULT_TOL) -> KappaCheck:
    bracket = largest_real_root(KAPPA_POLY, tol)
    cf = kappa_closed_form()
    lo = Decimal(bracket.low.numerator) / Decimal(bracket.low.denominator)
    hi = Decimal(bracket.high.numerator) / Decimal(bracket.high.denominator)
    return KappaCheck(bracket, cf, lo <= cf <= hi, kappa_factorization_holds())


# --------------------------------------------------------------------------
# Dilatations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DilatationResult:
    strands: int
    n: int | None
    polynomial: IntPoly
    bracket: RootBracket

    @property
    def value(self) -> float:
        return self.bracket.value

    @property
    def log_lambda(self) -> float:
        return math.log(self.bracket.value)

    @property
    def normalized_entropy(self) -> float:
        return (self.strands - 2) * self.log_lambda

    def to_dict(self) -> dict:
        return {
            "strands": self.strands,
            "n": self.n,
            "polynomial": list(self.polynomial.coeffs),
            "lambda": self.value,
            "lambda_bracket": [float(self.bracket.low), float(self.bracket.high)],
            "log_lambda": self.log_lambda,
            "normalized_entropy": self.normalized_entropy,
        }


def strands_to_family(strands: int) -> tuple[str, int | None]:
    """Which braid carries ``strands`` strands: ("w6", None), ("4n+8", n) or ("4n+6", n)."""
    if not isinstance(strands, int) or strands < 6 or strands % 2:
        raise ValueError(f"strand count must be an even integer >= 6, got {strands!r}")
    if strands == 6:
        return "w6", None
    if strands % 4 == 0:
        return "4n+8", (strands - 8) // 4
    return "4n+6", (strands - 6) // 4


def dilatation(strands: int, tol: float = DEFAULT_TOL) -> DilatationResult:
    kind, n = strands_to_family(strands)
    poly = KAPPA_POLY if kind == "w6" else family_polynomial(n)
    return DilatationResult(strands, n, poly, certified_largest_root(poly, tol))


def penner_bound(strands: int) -> float:
    """log 2 / (4m - 12): lower bound for log(dilatation) on the m-punctured sphere."""
    if strands <= 3:
        raise ValueError("bound needs more than 3 punctures")
    return math.log(2) / (4 * strands - 12)


def penner_check(strands: int, tol: float = DEFAULT_TOL) -> bool:
    return dilatation(strands, tol).log_lambda >= penner_bound(strands)


# --------------------------------------------------------------------------
# Table and asymptotics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    label: str
    n: int | None
    strands_high: int
    strands_low: int | None
    value: float
    normalized_entropy: float  # of the strands_high braid

    def csv_fields(self) -> list:
        return [
            "" if self.n is None else self.n,
            self.strands_high,
            "" if self.strands_low is None else self.strands_low,
            f"{self.value:.12f}",
            f"{self.normalized_entropy:.12f}",
        ]


TABLE_COLUMNS = ["n", "strands_high", "strands_low", "lambda", "normalized_entropy"]


def reproduce_table(n_max: int, tol: float = DEFAULT_TOL) -> list[TableRow]:
    """w_6 and w_8 rows followed by one row per n = 1..n_max.

    Each n-row carries w_{4n+8} and w_{4n+6}; the two dilatations are
    computed separately and must agree.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    w6 = dilatation(6, tol)
    w8 = dilatation(8, tol)
    rows = [
        TableRow("w6", None, 6, None, w6.value, w6.normalized_entropy),
        TableRow("w8", 0, 8, None, w8.value, w8.normalized_entropy),
    ]
    for n in range(1, n_max + 1):
        high = dilatation(4 * n + 8, tol)
        low = dilatation(4 * n + 6, tol)
        if (high.bracket.low, high.bracket.high) != (low.bracket.low, low.bracket.high):
            raise AssertionError(f"w_{4 * n + 8} and w_{4 * n + 6} disagree at n={n}")
        rows.append(TableRow(f"n={n}", n, 4 * n + 8, 4 * n + 6, high.value,
                             high.normalized_entropy))
    return rows


@dataclass(frozen=True)
class ConvergencePoint:
    n: int
    value: float
    normalized_entropy: float
    gap: float


@dataclass(frozen=True)
class ConvergenceReport:
    limit: float  # 4 log kappa
    points: tuple[ConvergencePoint, ...]
    gap_strictly_decreasing: bool
    lambda_strictly_decreasing: bool
    entropy_above_limit: bool
    first_n_within_one_percent: int | None  # least n with lambda - 1 < 0.01

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "gap_strictly_decreasing": self.gap_strictly_decreasing,
            "lambda_strictly_decreasing": self.lambda_strictly_decreasing,
            "entropy_above_limit": self.entropy_above_limit,
            "first_n_within_one_percent": self.first_n_within_one_percent,
            "points": [vars(p) for p in self.points],
        }


CONVERGENCE_COLUMNS = ["n", "lambda", "normalized_entropy", "gap"]


def convergence_report(n_max: int, tol: float = DEFAULT_TOL) -> ConvergenceReport:
    """(4n+6) log lambda(w_{4n+8}) against its limit 4 log kappa, for n = 0..n_max.

    Monotonicity is observed and reported, not assumed.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    limit = 4 * math.log(kappa(tol).value)
    points = []
    for n in range(n_max + 1):
        d = dilatation(4 * n + 8, tol)
        e = d.normalized_entropy
        points.append(ConvergencePoint(n, d.value, e, abs(e - limit)))
    pairs = list(zip(points, points[1:]))
    below = next((p.n for p in points if p.value - 1 < 0.01), None)
    return ConvergenceReport(
        limit=limit,
        points=tuple(points),
        gap_strictly_decreasing=all(b.gap < a.gap for a, b in pairs),
        lambda_strictly_decreasing=all(b.value < a.value for a, b in pairs),
        entropy_above_limit=all(p.normalized_entropy > limit for p in points),
        first_n_within_one_percent=below,
    )
