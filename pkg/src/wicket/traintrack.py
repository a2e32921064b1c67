"""
Incidence matrices of the train tracks for w_6 and the w_{4n+8} family.

Convention: column j is the image of edge j, so ``M[i, j]`` counts how many
times f(e_j) runs over e_i. The transpose has the same characteristic
polynomial but can have a different primitivity exponent, so the column
convention matters.

Family edge order is q1, q2, q3 followed by p1..p6 on level 1, then level
2, up to level n+1. The q edges are the bottom edges and level n+1 holds
the top edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .dilatation import family_polynomial
from .linalg import char_poly, int_matrix, is_primitive

W6_MATRIX = (
    (2, 0, 0, 0, 0, 1),
    (2, 0, 0, 2, 1, 0),
    (1, 0, 1, 1, 1, 0),
    (0, 0, 2, 1, 2, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
)

# Images of the six top edges p_1^(n+1)..p_6^(n+1); only the bottom two
# layers are hit. Column c of TOP_Q / TOP_P1 counts how often the image of
# the top edge p_{c+1} crosses q_1..q_3 / p_1^(1)..p_6^(1).
#
# Found by exhaustive search over small nonnegative blocks: pushing each q
# edge onto its level-1 image turns TOP_P1 + Q_PUSH @ TOP_Q into W6_MATRIX,
# and the search had exactly one solution with that property. The
# characteristic polynomial check in validate_family is what certifies it.
TOP_Q = (
    (0, 0, 0, 0, 0, 1),
    (0, 0, 0, 2, 1, 0),
    (0, 0, 1, 1, 1, 0),
)
TOP_P1 = (
    (2, 0, 0, 0, 0, 0),
    (2, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 1, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
)

# q_k -> p^(1) edges
Q_IMAGES = ((1,), (2,), (3, 4))
Q_PUSH = tuple(tuple(int(i in img) for img in Q_IMAGES) for i in range(1, 7))


@dataclass(frozen=True, order=True)
class EdgeLabel:
    kind: str  # "q" or "p"
    index: int
    level: int = 0  # p edges only, 1..n+1

    def __post_init__(self):
        if self.kind == "q" and not (1 <= self.index <= 3 and self.level == 0):
            raise ValueError(f"bad q edge {self.index}")
        if self.kind == "p" and not (1 <= self.index <= 6 and self.level >= 1):
            raise ValueError(f"bad p edge {self.index}^({self.level})")
        if self.kind not in ("q", "p"):
            raise ValueError(f"edge kind must be q or p, got {self.kind!r}")

    def __str__(self):
        return f"q{self.index}" if self.kind == "q" else f"p{self.index}^({self.level})"


def edge_labels(n: int) -> list[EdgeLabel]:
    _check_n(n)
    out = [EdgeLabel("q", k) for k in (1, 2, 3)]
    out += [EdgeLabel("p", i, j) for j in range(1, n + 2) for i in range(1, 7)]
    return out


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


def _p(i: int, j: int) -> int:
    """Row/column position of p_i^(j)."""
    return 3 + 6 * (j - 1) + (i - 1)


def w6_incidence_matrix() -> np.ndarray:
    """The 6x6 matrix of w_6 on edges p1..p6."""
    return int_matrix(W6_MATRIX)


@dataclass(frozen=True)
class TransitionMap:
    n: int
    edges: tuple[EdgeLabel, ...]
    images: tuple[dict[EdgeLabel, int], ...]  # images[j] = crossings of f(edges[j])

    def matrix(self) -> np.ndarray:
        pos = {e: k for k, e in enumerate(self.edges)}
        d = len(self.edges)
        m = np.zeros((d, d), dtype=object)
        m[:] = 0
        for j, img in enumerate(self.images):
            for e, c in img.items():
                m[pos[e], j] = c
        return m

    def image_of(self, edge: EdgeLabel) -> dict[EdgeLabel, int]:
        return self.images[self.edges.index(edge)]


def transition_map(n: int) -> TransitionMap:
    edges = edge_labels(n)
    images: list[dict[EdgeLabel, int]] = []
    for e in edges:
        if e.kind == "q":
            images.append({EdgeLabel("p", i, 1): 1 for i in Q_IMAGES[e.index - 1]})
        elif e.level <= n:
            images.append({EdgeLabel("p", e.index, e.level + 1): 1})
        else:
            col = e.index - 1
            img = {EdgeLabel("q", k + 1): TOP_Q[k][col] for k in range(3) if TOP_Q[k][col]}
            img.update({EdgeLabel("p", k + 1, 1): TOP_P1[k][col]
                        for k in range(6) if TOP_P1[k][col]})
            images.append(img)
    return TransitionMap(n, tuple(edges), tuple(images))


def family_incidence_matrix(n: int) -> np.ndarray:
    """(6n+9)x(6n+9) incidence matrix of the train track for w_{4n+8}."""
    _check_n(n)
    d = 6 * n + 9
    m = np.zeros((d, d), dtype=object)
    m[:] = 0
    for k, targets in enumerate(Q_IMAGES):
        for i in targets:
            m[_p(i, 1), k] = 1
    for j in range(1, n + 1):
        for i in range(1, 7):
            m[_p(i, j + 1), _p(i, j)] = 1
    for c in range(6):
        col = _p(c + 1, n + 1)
        for k in range(3):
            m[k, col] += TOP_Q[k][c]
        for k in range(6):
            m[_p(k + 1, 1), col] += TOP_P1[k][c]
    return m


@dataclass(frozen=True)
class ProngData:
    puncture_prongs: tuple[int, ...]
    interior_prongs: tuple[int, ...]

    def euler_poincare_sum(self) -> int:
        return sum(2 - p for p in self.puncture_prongs + self.interior_prongs)

    def to_dict(self) -> dict:
        return {
            "punctures": len(self.puncture_prongs),
            "puncture_prongs": list(self.puncture_prongs),
            "interior_prongs": list(self.interior_prongs),
            "euler_poincare_sum": self.euler_poincare_sum(),
        }


SPHERE_EULER_SUM = 4


def _fill_interior(punctures: tuple[int, ...]) -> ProngData:
    deficit = sum(2 - p for p in punctures) - SPHERE_EULER_SUM
    if deficit < 0:
        raise ValueError("puncture data leaves a negative Euler-Poincare deficit")
    return ProngData(punctures, (3,) * deficit)


def prong_data(n: int) -> ProngData:
    """Singularity data of the invariant foliation of w_{4n+8}.

    The interior singularities are taken to be 3-pronged; their number is
    whatever makes the Euler-Poincare sum equal to 4.
    """
    _check_n(n)
    return _fill_interior((1,) * (4 * n + 6) + (n + 2, n + 1))


def w6_prong_data() -> ProngData:
    return _fill_interior((1,) * 6)


@dataclass(frozen=True)
class FamilyCheck:
    n: int
    dimension: int
    charpoly_matches: bool
    primitive: bool
    primitivity_power: int | None

    @property
    def passed(self) -> bool:
        return self.charpoly_matches and self.primitive


def check_family_matrix(n: int, matrix=None) -> FamilyCheck:
    m = family_incidence_matrix(n) if matrix is None else int_matrix(matrix)
    prim = is_primitive(m)
    return FamilyCheck(
        n=n,
        dimension=m.shape[0],
        charpoly_matches=char_poly(m) == family_polynomial(n),
        primitive=prim.primitive,
        primitivity_power=prim.power,
    )


def validate_family(n_max: int) -> list[FamilyCheck]:
    _check_n(n_max)
    return [check_family_matrix(n) for n in range(n_max + 1)]


def matrix_to_json(m) -> str:
    return json.dumps([[int(x) for x in row] for row in m])


def matrix_to_text(m, labels=None) -> str:
    rows = [[str(int(x)) for x in row] for row in m]
    width = max((len(x) for row in rows for x in row), default=1)
    if labels is None:
        return "\n".join(" ".join(x.rjust(width) for x in row) for row in rows)
    names = [str(e) for e in labels]
    lw = max(len(s) for s in names)
    width = max(width, lw)
    head = " " * lw + " " + " ".join(s.rjust(width) for s in names)
    body = [name.ljust(lw) + " " + " ".join(x.rjust(width) for x in row)
            for name, row in zip(names, rows)]
    return "\n".join([head, *body])

