"""
The finite presentation of the hyperelliptic handlebody group H(H_g).

Generators r_1..r_g, s_1..s_g and t_1..t_{g+1}. Under the Birman-Hilden
correspondence they are the wicket braids r_i, s_i, t_j on 2g+2 strands,
which is what lets relations be tested with the Artin oracle.

Words in the generators are tuples of ``(name, exponent)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .artin import MAX_IMAGE_LENGTH, ResourceLimitError, braids_equal, is_trivial
from .braid import (
    BraidWord,
    exponent_sum,
    full_twist_power,
    identity,
    inverse,
    permutation,
    sphere_relator,
    wicket_generator,
)
from .linalg import smith_normal_form

Letter = tuple[str, int]
GroupWord = tuple[Letter, ...]

FAMILIES = ("1", "2", "3", "4", "5", "6", "7", "8", "9", "10")


def word_inverse(w: Sequence[Letter]) -> GroupWord:
    return tuple((g, -e) for g, e in reversed(w))


def word_reduce(w: Iterable[Letter]) -> GroupWord:
    out: list[Letter] = []
    for g, e in w:
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if e:
            out.append((g, e))
    return tuple(out)


def word_to_string(w: Sequence[Letter]) -> str:
    if not w:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w)


@dataclass(frozen=True)
class Relation:
    """lhs = rhs, tagged with the family it belongs to."""

    family: str
    lhs: GroupWord
    rhs: GroupWord = ()

    @property
    def relator(self) -> GroupWord:
        return word_reduce(self.lhs + word_inverse(self.rhs))

    def __str__(self):
        return f"{word_to_string(self.lhs)} = {word_to_string(self.rhs)}"


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    genus: int | None = None

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        known = set(self.generators)
        for rel in self.relations:
            for g, _ in rel.lhs + rel.rhs:
                if g not in known:
                    raise ValueError(f"relation {rel} uses undeclared generator {g!r}")

    @property
    def relators(self) -> tuple[GroupWord, ...]:
        return tuple(rel.relator for rel in self.relations)

    def family(self, name: str) -> list[Relation]:
        return [rel for rel in self.relations if rel.family == name]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[g, e] for g, e in r] for r in self.relators],
            "families": [rel.family for rel in self.relations],
        }

    def to_text(self) -> str:
        lines = ["generators: " + ", ".join(self.generators)]
        seen: list[str] = []
        for rel in self.relations:
            if rel.family not in seen:
                seen.append(rel.family)
        for fam in seen:
            lines.append(f"({fam})")
            lines.extend(f"  {rel}" for rel in self.family(fam))
        return "\n".join(lines)


def free_presentation(generators: Sequence[str], relators: Sequence[Sequence[Letter]] = ()) -> Presentation:
    """<generators | relators> with every relator set equal to 1."""
    return Presentation(tuple(generators), tuple(Relation("", tuple(r)) for r in relators))


# --------------------------------------------------------------------------
# H(H_g)
# --------------------------------------------------------------------------

def _r(i):
    return ("r" + str(i), 1)


def _s(i):
    return ("s" + str(i), 1)


def _t(j):
    return ("t" + str(j), 1)


def theta(g: int) -> GroupWord:
    """t1 s1 s2 ... s_g r_g^-1 ... r1^-1 t1."""
    return ((_t(1),) + tuple(_s(i) for i in range(1, g + 1))
            + tuple(("r" + str(i), -1) for i in range(g, 0, -1)) + (_t(1),))


def handlebody_presentation(g: int) -> Presentation:
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"genus must be an integer >= 2, got {g!r}")
    R = range(1, g + 1)
    T = range(1, g + 2)
    rels: list[Relation] = []

    def add(fam, lhs, rhs=()):
        rels.append(Relation(fam, tuple(lhs), tuple(rhs)))

    for x, fam in ((_r, "1"), (_s, "2")):
        for i in R:
            for j in R:
                if j > i + 1:
                    add(fam, [x(i), x(j)], [x(j), x(i)])
        for i in range(1, g):
            add(fam, [x(i), x(i + 1), x(i)], [x(i + 1), x(i), x(i + 1)])
    for i in R:
        for j in R:
            if abs(i - j) > 1:
                add("3", [_r(i), _s(j)], [_s(j), _r(i)])
    for i in range(1, g):
        add("4", [_r(i), _s(i + 1), _s(i)], [_s(i + 1), _s(i), _r(i + 1)])
        add("4", [_r(i), _r(i + 1), _s(i)], [_s(i + 1), _r(i), _r(i + 1)])
        add("4", [_s(i), _s(i + 1), _r(i)], [_r(i + 1), _s(i), _s(i + 1)])
    for i in R:
        add("5", [_r(i), _s(i), _t(i), _r(i)], [_t(i), _s(i)])
    for i in T:
        for j in T:
            if i < j:
                add("6", [_t(i), _t(j)], [_t(j), _t(i)])
    for x, fam in ((_r, "7"), (_s, "8")):
        for i in R:
            for j in T:
                if j not in (i, i + 1):
                    add(fam, [x(i), _t(j)], [_t(j), x(i)])
        for i in R:
            if fam == "7":
                add(fam, [_t(i + 1), x(i)], [x(i), _t(i)])
            else:
                add(fam, [_t(i), x(i)], [x(i), _t(i + 1)])
                add(fam, [_t(i + 1), x(i)], [x(i), _t(i)])
    cycle = tuple(_s(i) for i in range(g, 0, -1)) + (("t1", 2),)
    add("9", cycle * (g + 1))
    th = theta(g)
    add("10", th + th)
    gens = [f"r{i}" for i in R] + [f"s{i}" for i in R] + [f"t{j}" for j in T]
    for name in gens:
        add("10", th + ((name, 1),), ((name, 1),) + th)
    return Presentation(tuple(gens), tuple(rels), genus=g)


# --------------------------------------------------------------------------
# Abelianization
# --------------------------------------------------------------------------

def abelianized(relator: Sequence[Letter], generators: Sequence[str]) -> list[int]:
    """Exponent-sum vector of a relator over the generator basis."""
    pos = {g: k for k, g in enumerate(generators)}
    row = [0] * len(generators)
    for g, e in relator:
        row[pos[g]] += e
    return row


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [abelianized(r, p.generators) for r in p.relators]


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "group": str(self)}


def abelianization(p: Presentation) -> AbelianGroup:
    snf = smith_normal_form(relation_matrix(p), len(p.generators))
    return AbelianGroup(snf.free_rank, snf.torsion)


# --------------------------------------------------------------------------
# Checking relations on braids
# --------------------------------------------------------------------------

def generator_braid(name: str, g: int) -> BraidWord:
    return wicket_generator(name[0], int(name[1:]), 2 * g + 2)


def braid_of(word: Sequence[Letter], g: int) -> BraidWord:
    out = identity(2 * g + 2)
    for name, e in word:
        out = out * generator_braid(name, g) ** e
    return out


HOLDS = "holds"                      # trivial already in the disk braid group
HOLDS_MOD_TWIST = "holds-mod-twist"  # equals a full twist, which dies in the Hilden group
HOLDS_MOD_SPHERE = "holds-mod-sphere"  # lies in the normal closure of the sphere relator
UNDECIDED = "undecided-in-disk-group"
FAIL = "fail"
PARTIAL = "resource-limit"


@dataclass(frozen=True)
class RelationCheck:
    family: str
    relation: str
    strands: int
    permutation_trivial: bool
    exponent_sum: int
    exponent_sum_ok: bool  # divisible by 2(m-1), necessary in the sphere braid group
    in_disk_group: bool | None  # None when the oracle hit its resource cap
    status: str
    convention: str | None = None  # crossing-sign convention that reconciles (9)
    note: str = ""

    def to_dict(self) -> dict:
        return dict(vars(self))


@dataclass(frozen=True)
class RelationReport:
    genus: int
    checks: tuple[RelationCheck, ...]
    theta_is_inverse_sphere_relator: bool | None
    partial: bool = field(default=False)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def all_hold(self) -> bool:
        return all(c.status in (HOLDS, HOLDS_MOD_TWIST, HOLDS_MOD_SPHERE) for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "partial": self.partial,
            "theta_is_inverse_sphere_relator": self.theta_is_inverse_sphere_relator,
            "counts": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
        }


def _safe(fn, *args):
    try:
        return fn(*args)
    except ResourceLimitError:
        return None


def verify_relations(g: int, max_image_length: int = MAX_IMAGE_LENGTH) -> RelationReport:
    """Test every relation of handlebody_presentation(g) on braids in B_{2g+2}.

    Families (1)-(8) must hold in the disk braid group. Families (9) and
    (10) only hold after passing to the Hilden group, so for them the
    report records the necessary invariants and a certificate: the
    relator of (9) is compared with both full twists, and theta is
    compared with the inverse of the sphere relator.
    """
    pres = handlebody_presentation(g)
    m = 2 * g + 2
    ident = identity(m)
    twist = full_twist_power(m, 1)
    th = braid_of(theta(g), g)
    theta_cert = _safe(braids_equal, th, inverse(sphere_relator(m)), max_image_length)
    checks = []
    for rel in pres.relations:
        lhs = braid_of(rel.lhs, g)
        rhs = braid_of(rel.rhs, g)
        rel_braid = lhs * inverse(rhs)
        perm_ok = permutation(rel_braid).is_identity()
        es = exponent_sum(rel_braid)
        es_ok = es % (2 * (m - 1)) == 0
        disk = _safe(is_trivial, rel_braid, max_image_length)
        convention = None
        note = ""
        if disk:
            status = HOLDS
        elif rel.family in ("9", "10") and perm_ok and es_ok:
            status = UNDECIDED
            if rel.family == "9":
                plus = _safe(braids_equal, rel_braid, twist, max_image_length)
                minus = _safe(braids_equal, rel_braid, inverse(twist), max_image_length)
                if plus:
                    status, convention, note = HOLDS_MOD_TWIST, "sigma positive", "equals Delta^2"
                elif minus:
                    status, convention, note = (HOLDS_MOD_TWIST, "sigma negative",
                                                "equals Delta^-2; Delta^2 after mirroring")
            elif theta_cert:
                status, note = HOLDS_MOD_SPHERE, "theta is the inverse sphere relator"
            if status == UNDECIDED and disk is None:
                status = PARTIAL
        elif disk is None:
            status = PARTIAL
        else:
            status = FAIL
        checks.append(RelationCheck(rel.family, str(rel), m, perm_ok, es, es_ok, disk,
                                    status, convention, note))
    partial = theta_cert is None or any(c.status == PARTIAL for c in checks)
    return RelationReport(g, tuple(checks), theta_cert, partial)
