"""
Braid words on m strands and the named braids of the wicket/Hilden setting.

A braid is stored literally as the word the user (or a constructor) wrote
down: a tuple of signed generator indices, ``k`` for sigma_k and ``-k`` for
its inverse. Nothing is reduced implicitly; call :func:`free_reduce` when a
shorter spelling is wanted.

Conventions
-----------
* Strands and generators are 1-based.
* Products read left to right as words, and the underlying permutation
  composes right to left, so ``permutation(a * b) == permutation(a) @ permutation(b)``
  where ``(p @ q)(x) = p(q(x))``.
* sigma_k has sign +1. With this choice a full twist ``full_twist_power(m, 1)``
  has exponent sum ``+m(m-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed braid words and out-of-range constructor indices."""


# --------------------------------------------------------------------------
# Permutations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..size``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> Permutation:
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __matmul__(self, other: Permutation) -> Permutation:
        """Right-to-left composition: ``(self @ other)(x) == self(other(x))``."""
        if self.size != other.size:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[x] - 1] for x in range(self.size)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixed points included, each starting at its least element."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __str__(self):
        return self.cycle_string()


# --------------------------------------------------------------------------
# Braid words
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """An unreduced word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidError(f"letter {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return BraidWord(self.strands, inverse(self).letters * (-k))
        return BraidWord(self.strands, self.letters * k)

    def to_tokens(self) -> str:
        """Canonical rendering, re-readable by :func:`parse_word`."""
        return " ".join(str(x) for x in self.letters)

    def pretty(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)

    def __str__(self):
        return self.to_tokens()


def word(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"-2 -1 3"``.

    Token ``k > 0`` is sigma_k and ``k < 0`` is sigma_|k|^-1. Commas are
    accepted as separators too. No reduction is applied.
    """
    letters = []
    for tok in text.replace(",", " ").split():
        try:
            k = int(tok)
        except ValueError:
            raise BraidError(f"token {tok!r} is not an integer") from None
        if k == 0:
            raise BraidError(f"token {tok!r}: generator index 0 does not exist")
        if abs(k) >= strands:
            raise BraidError(
                f"token {tok!r}: index {abs(k)} exceeds strands-1 = {strands - 1}")
        letters.append(k)
    return BraidWord(strands, tuple(letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Stack ``a`` on ``b``: the letters of ``a`` followed by those of ``b``."""
    if a.strands != b.strands:
        raise BraidError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def product(words: Sequence[BraidWord], strands: int | None = None) -> BraidWord:
    if not words:
        if strands is None:
            raise BraidError("empty product needs an explicit strand count")
        return identity(strands)
    out = words[0]
    for w in words[1:]:
        out = compose(out, w)
    return out


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-x for x in reversed(a.letters)))


def free_reduce(a: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in a.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(a.strands, tuple(stack))


def permutation(a: BraidWord) -> Permutation:
    """Image in the symmetric group, letters composed right to left."""
    images = list(range(1, a.strands + 1))
    # right-multiply by each transposition in reading order
    for x in a.letters:
        i = abs(x)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def closure_components(a: BraidWord) -> int:
    """Components of the braided link: closed braid plus its axis."""
    return len(permutation(a).cycles()) + 1


def pairing_preserved(a: BraidWord) -> bool:
    """Whether the endpoint pairs {2i-1, 2i} are permuted among themselves.

    Necessary, not sufficient, for membership in the wicket group.
    """
    if a.strands % 2:
        raise BraidError(f"pairing needs an even strand count, got {a.strands}")
    p = permutation(a)
    for i in range(1, a.strands // 2 + 1):
        img = {p(2 * i - 1), p(2 * i)}
        lo = min(img)
        if lo % 2 == 0 or img != {lo, lo + 1}:
            return False
    return True


def underline(a: BraidWord) -> BraidWord:
    """Drop the last strand of a braid that never uses sigma_{m-1}.

    The result is the disk braid on ``m-1`` strands with the same letters.
    """
    if any(abs(x) == a.strands - 1 for x in a.letters):
        raise BraidError("word uses the last generator; cannot drop the last strand")
    return BraidWord(a.strands - 1, a.letters)


# --------------------------------------------------------------------------
# Twists
# --------------------------------------------------------------------------

def half_twist(m: int) -> BraidWord:
    """(s1 ... s_{m-1})(s1 ... s_{m-2}) ... (s1 s2) s1."""
    if m < 2:
        raise BraidError(f"half twist needs m >= 2, got {m}")
    letters = []
    for top in range(m - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(m, tuple(letters))


def full_twist_power(m: int, power: int = 1) -> BraidWord:
    """Delta_m^(2*power) spelled as (s1 ... s_{m-1})^(m*power)."""
    if m < 2:
        raise BraidError(f"full twist needs m >= 2, got {m}")
    if power < 0:
        raise BraidError(f"power must be >= 0, got {power}")
    return BraidWord(m, tuple(range(1, m)) * (m * power))


def sphere_relator(m: int) -> BraidWord:
    """s1 s2 ... s_{m-2} s_{m-1}^2 s_{m-2} ... s1, trivial in the sphere braid group."""
    if m < 2:
        raise BraidError(f"sphere relator needs m >= 2, got {m}")
    up = list(range(1, m))
    return BraidWord(m, tuple(up + [m - 1] + up[-2::-1]))


# --------------------------------------------------------------------------
# Wicket group generators
# --------------------------------------------------------------------------

def _check_even(strands: int) -> int:
    if strands < 2 or strands % 2:
        raise BraidError(f"wicket braids need an even strand count >= 2, got {strands}")
    return strands // 2


def wicket_generator(kind: str, i: int, strands: int) -> BraidWord:
    """r_i, s_i (1 <= i <= n-1) or t_j (1 <= j <= n) on ``strands = 2n``.

    r_i = s_{2i} s_{2i+1} s_{2i-1}^-1 s_{2i}^-1,
    s_i = s_{2i}^-1 s_{2i+1}^-1 s_{2i-1}^-1 s_{2i}^-1,
    t_j = s_{2j-1}^-1   (s_k meaning the Artin generator here).
    """
    n = _check_even(strands)
    if kind == "r":
        if not 1 <= i <= n - 1:
            raise BraidError(f"r_{i} needs 1 <= i <= {n - 1}")
        letters = (2 * i, 2 * i + 1, -(2 * i - 1), -2 * i)
    elif kind == "s":
        if not 1 <= i <= n - 1:
            raise BraidError(f"s_{i} needs 1 <= i <= {n - 1}")
        letters = (-2 * i, -(2 * i + 1), -(2 * i - 1), -2 * i)
    elif kind == "t":
        if not 1 <= i <= n:
            raise BraidError(f"t_{i} needs 1 <= j <= {n}")
        letters = (-(2 * i - 1),)
    else:
        raise BraidError(f"unknown wicket generator kind {kind!r}")
    return BraidWord(strands, letters)


def wicket_word(spec: Sequence[tuple[str, int, int]], strands: int) -> BraidWord:
    """Expand a word in wicket generators, given as ``(kind, index, exponent)`` triples."""
    out = identity(strands)
    for kind, idx, e in spec:
        out = out * (wicket_generator(kind, idx, strands) ** e)
    return out


def theta_word(strands: int) -> list[tuple[str, int, int]]:
    """t1 s1 s2 ... s_{n-1} r_{n-1}^-1 ... r1^-1 t1 as wicket-generator triples."""
    n = _check_even(strands)
    spec = [("t", 1, 1)]
    spec += [("s", i, 1) for i in range(1, n)]
    spec += [("r", i, -1) for i in range(n - 1, 0, -1)]
    spec += [("t", 1, 1)]
    return spec


def hilden_spec(kind: str, i: int, j: int | None, strands: int) -> list[tuple[str, int, int]]:
    """The Hilden-group generators as words in r, s, t.

    eta_i = s_i t_i t_{i+1}; rho_ij and omega_ij follow the case formulas
    (i < j versus i > j). Where a formula's middle run is empty, for
    example omega_{i,i+1} = s_i^2 t_i^2, the literal instantiation is used.
    """
    n = _check_even(strands)
    if kind in ("eta", "η"):
        if not 1 <= i <= n - 1:
            raise BraidError(f"eta_{i} needs 1 <= i <= {n - 1}")
        return [("s", i, 1), ("t", i, 1), ("t", i + 1, 1)]
    if kind in ("theta", "ϑ"):
        return theta_word(strands)
    if j is None:
        raise BraidError(f"{kind} needs a second index")
    if not (1 <= i <= n and 1 <= j <= n):
        raise BraidError(f"{kind}_{i},{j}: indices must lie in 1..{n}")
    if kind in ("rho", "ρ"):
        if i == j:
            raise BraidError("rho_ij needs j != i")
        if i < j:
            up = [("s", k, 1) for k in range(i, j)]            # s_i .. s_{j-1}
            down = [("s", k, 1) for k in range(j - 2, i - 1, -1)]  # s_{j-2} .. s_i
            return up + [("r", j - 1, 1)] + down + [("t", i, 2)]
        down = [("s", k, 1) for k in range(i - 1, j - 1, -1)]  # s_{i-1} .. s_j
        up = [("s", k, 1) for k in range(j + 1, i)]            # s_{j+1} .. s_{i-1}
        return down + [("r", j, -1)] + up + [("t", i, 2)]
    if kind in ("omega", "ω"):
        if j in (i - 1, i):
            raise BraidError("omega_ij needs j not in {i-1, i}")
        if i < j:
            up = [("s", k, 1) for k in range(i, j - 1)]            # s_i .. s_{j-2}
            down = [("s", k, 1) for k in range(j - 2, i - 1, -1)]  # s_{j-2} .. s_i
            return up + [("s", j - 1, 2)] + down + [("t", i, 2)]
        down = [("s", k, 1) for k in range(i - 1, j + 1, -1)]  # s_{i-1} .. s_{j+2}
        up = [("s", k, 1) for k in range(j + 2, i)]            # s_{j+2} .. s_{i-1}
        return down + [("s", j + 1, 2)] + up + [("t", i, 2)]
    raise BraidError(f"unknown Hilden generator kind {kind!r}")


def hilden_generator(kind: str, i: int, j: int | None, strands: int) -> BraidWord:
    return wicket_word(hilden_spec(kind, i, j, strands), strands)


# --------------------------------------------------------------------------
# The dilatation families
# --------------------------------------------------------------------------

W6 = (-2, -1, 3, 2, 4, 3, 3, 4, 3)
W6_ALT = (-2, -1, 3, 2, 4, 3, 4, 3, 4)


def _x_letters(n: int) -> tuple[list[int], list[int]]:
    head = [5, -2, -1] + list(range(3, 4 * n + 6)) + list(range(2, 4 * n + 5))
    tail = [4 * n + 6, 4 * n + 5, 4 * n + 5, 4 * n + 6]
    return head, tail


def _y_letters(n: int) -> tuple[list[int], list[int]]:
    head = list(range(1, 4 * n + 6)) * 4
    m = 4 * n
    tail = [m + 6, m + 5, m + 4, m + 3, m + 3, m + 4, m + 5, m + 6]
    return head, tail


def family_word(kind: str, n: int = 0) -> BraidWord:
    """The braids w6, x/y/w_{4n+8} and x/y/w_{4n+6}.

    ``x4n6``, ``y4n6`` and ``w4n6`` drop the last two strands of their
    4n+8 counterparts. In x and y those strands only take part in the
    trailing conjugated twist, which becomes trivial once they are
    removed, so the 4n+6 word is the head of the 4n+8 word.
    """
    if kind == "w6":
        return BraidWord(6, W6)
    if kind in ("x4n8", "y4n8", "w4n8"):
        if n < 0:
            raise BraidError(f"{kind} needs n >= 0, got {n}")
        xh, xt = _x_letters(n)
        yh, yt = _y_letters(n)
        x = BraidWord(4 * n + 8, xh + xt)
        y = BraidWord(4 * n + 8, yh + yt)
        return {"x4n8": x, "y4n8": y, "w4n8": x * y ** n}[kind]
    if kind in ("x4n6", "y4n6", "w4n6"):
        if n < 1:
            raise BraidError(f"{kind} needs n >= 1, got {n}")
        xh, _ = _x_letters(n)
        yh, _ = _y_letters(n)
        x = BraidWord(4 * n + 6, xh)
        y = BraidWord(4 * n + 6, yh)
        return {"x4n6": x, "y4n6": y, "w4n6": x * y ** n}[kind]
    raise BraidError(f"unknown family {kind!r}")


def w_braid(strands: int) -> BraidWord:
    """w_{2k} by strand count: 6, 4n+8 (n >= 0) or 4n+6 (n >= 1)."""
    if strands == 6:
        return family_word("w6")
    if strands >= 8 and strands % 4 == 0:
        return family_word("w4n8", (strands - 8) // 4)
    if strands >= 10 and strands % 4 == 2:
        return family_word("w4n6", (strands - 6) // 4)
    raise BraidError(f"no w-braid on {strands} strands")
