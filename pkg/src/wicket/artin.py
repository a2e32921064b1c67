"""
Exact equality of disk braids through the Artin action on a free group.

The Artin representation B_m -> Aut(F_m) is faithful, so two braid words
are equal in B_m exactly when they induce the same automorphism. This
decides nothing about the sphere braid group, where extra relations hold.

Free words are tuples of nonzero ints (``k`` is x_k, ``-k`` its inverse)
and are kept freely reduced at all times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidError, BraidWord, compose, exponent_sum, inverse, permutation

MAX_BRAID_LENGTH = 10_000
MAX_IMAGE_LENGTH = 5_000_000


class ResourceLimitError(RuntimeError):
    """The Artin images grew beyond the configured caps."""


def reduce_free(letters) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _concat(*parts: tuple[int, ...]) -> tuple[int, ...]:
    # each part is reduced, so cancellation only happens at the seams
    out = list(parts[0])
    for p in parts[1:]:
        k = 0
        while k < len(p) and out and out[-1] == -p[k]:
            out.pop()
            k += 1
        out.extend(p[k:])
    return tuple(out)


def _inv(w: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(w))


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_free(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} outside free group of rank {self.rank}")

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.rank, _concat(self.letters, other.letters))

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, _inv(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


@dataclass(frozen=True)
class FreeAutomorphism:
    """An endomorphism of F_rank given by the images of x_1..x_rank."""

    rank: int
    images: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, rank: int) -> FreeAutomorphism:
        return cls(rank, tuple((k,) for k in range(1, rank + 1)))

    def image(self, k: int) -> FreeWord:
        return FreeWord(self.rank, self.images[k - 1])

    def apply(self, w: FreeWord) -> FreeWord:
        out: tuple[int, ...] = ()
        for x in w.letters:
            img = self.images[abs(x) - 1]
            out = _concat(out, img if x > 0 else _inv(img))
        return FreeWord(self.rank, out)

    def __matmul__(self, other: FreeAutomorphism) -> FreeAutomorphism:
        """Composition ``(self @ other)(w) == self(other(w))``."""
        return FreeAutomorphism(
            self.rank,
            tuple(self.apply(FreeWord(self.rank, img)).letters for img in other.images))

    def is_identity(self) -> bool:
        return all(img == (k,) for k, img in enumerate(self.images, start=1))

    def total_length(self) -> int:
        return sum(len(img) for img in self.images)


def _right_multiply(images: list[tuple[int, ...]], letter: int) -> None:
    """Replace psi by psi o phi_letter in place.

    phi_{s_i}:    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
    phi_{s_i^-1}: x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    """
    i = abs(letter) - 1
    a, b = images[i], images[i + 1]
    if letter > 0:
        images[i] = _concat(a, b, _inv(a))
        images[i + 1] = a
    else:
        images[i] = b
        images[i + 1] = _concat(_inv(b), a, b)


def artin_automorphism(a: BraidWord, max_image_length: int = MAX_IMAGE_LENGTH) -> FreeAutomorphism:
    """The automorphism phi_a = phi_{a_1} o phi_{a_2} o ... of F_m."""
    if len(a) > MAX_BRAID_LENGTH:
        raise ResourceLimitError(
            f"braid has {len(a)} letters; the cap is {MAX_BRAID_LENGTH}")
    images = [(k,) for k in range(1, a.strands + 1)]
    for x in a.letters:
        _right_multiply(images, x)
        if len(images[abs(x) - 1]) > max_image_length:
            raise ResourceLimitError(
                f"Artin image length exceeded {max_image_length}")
    return FreeAutomorphism(a.strands, tuple(images))


def braids_equal(a: BraidWord, b: BraidWord, max_image_length: int = MAX_IMAGE_LENGTH) -> bool:
    """Equality in the disk braid group B_m.

    Compares a * b^-1 with the identity, which keeps images short when the
    two words are close. Cheap invariants are checked first.
    """
    if a.strands != b.strands:
        raise BraidError(f"strand counts differ: {a.strands} vs {b.strands}")
    if exponent_sum(a) != exponent_sum(b) or permutation(a) != permutation(b):
        return False
    return artin_automorphism(compose(a, inverse(b)), max_image_length).is_identity()


def is_trivial(a: BraidWord, max_image_length: int = MAX_IMAGE_LENGTH) -> bool:
    if exponent_sum(a) != 0 or not permutation(a).is_identity():
        return False
    return artin_automorphism(a, max_image_length).is_identity()


def forget_generators(phi: FreeAutomorphism, killed: set[int]) -> FreeAutomorphism:
    """Induced map on F / <<x_k : k in killed>>, with surviving generators renumbered.

    For a braid whose permutation fixes the killed strands this is the
    Artin automorphism of the braid with those strands removed.
    """
    keep = [k for k in range(1, phi.rank + 1) if k not in killed]
    renumber = {k: idx for idx, k in enumerate(keep, start=1)}
    images = []
    for k in keep:
        img = [renumber[abs(x)] * (1 if x > 0 else -1)
               for x in phi.images[k - 1] if abs(x) not in killed]
        images.append(reduce_free(img))
    return FreeAutomorphism(len(keep), tuple(images))
