"""
Command-line interface.

Payloads go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 domain error, 2 usage error, 3 resource cap hit.

Braid words are whitespace-separated signed generator indices. Put ``--``
before a word that starts with a negative token so it is not read as a
flag::

    wicket braid perm --strands 6 -- "-2 -1 3 2 4 3 3 4 3"
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import braid as bw
from .artin import MAX_IMAGE_LENGTH, ResourceLimitError, braids_equal
from .dilatation import (
    CONVERGENCE_COLUMNS,
    DEFAULT_TOL,
    TABLE_COLUMNS,
    convergence_report,
    dilatation,
    penner_bound,
    reproduce_table,
)
from .linalg import NoRealRootError, char_poly, is_primitive
from .presentation import abelianization, handlebody_presentation, verify_relations
from .traintrack import (
    edge_labels,
    family_incidence_matrix,
    matrix_to_text,
    prong_data,
    validate_family,
    w6_incidence_matrix,
    w6_prong_data,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class DomainError(Exception):
    pass


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _kv_csv(d: dict) -> str:
    return _csv(["key", "value"], [[k, json.dumps(v) if isinstance(v, (list, dict)) else v]
                                   for k, v in d.items()])


def _emit(fmt: str, data: dict, text: str, csv_text: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt == "csv":
        return csv_text if csv_text is not None else _kv_csv(data)
    return text


def _truncate(x: float, places: int = 5) -> str:
    # printed tables conventionally drop, rather than round, later digits
    s = f"{x:.{places + 6}f}"
    return s[: s.index(".") + places + 1]


# --------------------------------------------------------------------------
# subcommand handlers; each returns the payload string
# --------------------------------------------------------------------------

def cmd_dilatation(a) -> str:
    res = dilatation(a.strands, a.tol)
    d = res.to_dict()
    d["penner_bound"] = penner_bound(a.strands)
    d["penner_ok"] = res.log_lambda >= d["penner_bound"]
    text = (f"strands: {res.strands}\n"
            f"polynomial: {res.polynomial}\n"
            f"lambda: {res.value:.12f}  bracket [{float(res.bracket.low):.15f}, "
            f"{float(res.bracket.high):.15f}]\n"
            f"log lambda: {res.log_lambda:.12f}\n"
            f"normalized entropy: {res.normalized_entropy:.12f}")
    return _emit(a.format, d, text)


def cmd_table(a) -> str:
    rows = reproduce_table(a.max_n, a.tol)
    data = {"columns": TABLE_COLUMNS, "rows": [dict(zip(TABLE_COLUMNS, r.csv_fields())) for r in rows]}
    for r in data["rows"]:
        r["lambda"] = float(r["lambda"])
        r["normalized_entropy"] = float(r["normalized_entropy"])
    lines = [f"{'braid':<22} {'lambda':>9}"]
    for r in rows:
        if r.strands_low is None:
            name = f"w{r.strands_high}"
        else:
            name = f"w{r.strands_high} = w{r.strands_low}"
        lines.append(f"{name:<22} {_truncate(r.value):>9}")
    return _emit(a.format, data, "\n".join(lines),
                 _csv(TABLE_COLUMNS, [r.csv_fields() for r in rows]))


def cmd_convergence(a) -> str:
    rep = convergence_report(a.max_n, a.tol)
    rows = [[p.n, f"{p.value:.12f}", f"{p.normalized_entropy:.12f}", f"{p.gap:.3e}"]
            for p in rep.points]
    last = rep.points[-1]
    text = "\n".join([
        f"limit 4 log kappa: {rep.limit:.10f}",
        f"gap at n={last.n}: {last.gap:.3e}",
        f"gap strictly decreasing: {rep.gap_strictly_decreasing}",
        f"lambda strictly decreasing: {rep.lambda_strictly_decreasing}",
        f"entropy above limit: {rep.entropy_above_limit}",
        f"first n with lambda - 1 < 0.01: {rep.first_n_within_one_percent}",
    ])
    return _emit(a.format, rep.to_dict(), text, _csv(CONVERGENCE_COLUMNS, rows))


def _matrix(a):
    if a.n is None:
        return w6_incidence_matrix(), None
    return family_incidence_matrix(a.n), edge_labels(a.n)


def cmd_matrix(a) -> str:
    m, labels = _matrix(a)
    rows = [[int(x) for x in row] for row in m]
    data = {"n": a.n, "dimension": len(rows),
            "edges": [str(e) for e in labels] if labels else [f"p{i}" for i in range(1, 7)],
            "matrix": rows}
    names = labels or [f"p{i}" for i in range(1, 7)]
    return _emit(a.format, data, matrix_to_text(m, names),
                 _csv([str(e) for e in names], rows))


def cmd_charpoly(a) -> str:
    m, _ = _matrix(a)
    p = char_poly(m)
    prim = is_primitive(m)
    data = {"n": a.n, "polynomial": list(p.coeffs), "text": str(p),
            "primitive": prim.primitive, "primitivity_power": prim.power}
    text = f"{p}\nprimitive: {prim.primitive} (power {prim.power})"
    return _emit(a.format, data, text)


def cmd_validate(a) -> str:
    checks = validate_family(a.max_n)
    cols = ["n", "dimension", "charpoly_matches", "primitive", "primitivity_power"]
    rows = [[getattr(c, k) for k in cols] for c in checks]
    data = {"all_passed": all(c.passed for c in checks), "checks": [dict(zip(cols, r)) for r in rows]}
    text = "\n".join(f"n={c.n:<3} dim={c.dimension:<4} charpoly {'ok' if c.charpoly_matches else 'MISMATCH'}"
                     f"  primitive {'yes' if c.primitive else 'NO'} (power {c.primitivity_power})"
                     for c in checks)
    out = _emit(a.format, data, text, _csv(cols, rows))
    if not data["all_passed"]:
        raise DomainError(out)
    return out


def cmd_prongs(a) -> str:
    pd = w6_prong_data() if a.n is None else prong_data(a.n)
    d = pd.to_dict()
    d["interior_3_prongs"] = sum(1 for p in pd.interior_prongs if p == 3)
    text = (f"punctures: {d['punctures']} with prongs {d['puncture_prongs']}\n"
            f"interior singularities: {len(pd.interior_prongs)} x 3-prong\n"
            f"Euler-Poincare sum: {d['euler_poincare_sum']}")
    return _emit(a.format, d, text)


def _word(text: str, strands: int) -> bw.BraidWord:
    return bw.parse_word(text, strands)


def cmd_braid(a) -> str:
    op = a.braid_op
    if op == "family":
        w = bw.family_word(a.kind, a.n)
        d = {"kind": a.kind, "n": a.n, "strands": w.strands, "word": w.to_tokens(),
             "length": len(w)}
        return _emit(a.format, d, w.to_tokens())
    w = _word(a.word, a.strands)
    if op == "perm":
        p = bw.permutation(w)
        d = {"images": list(p.images), "cycles": p.cycle_string()}
        text = p.cycle_string()
    elif op == "expsum":
        d = {"exponent_sum": bw.exponent_sum(w)}
        text = str(d["exponent_sum"])
    elif op == "pairing":
        d = {"pairing_preserved": bw.pairing_preserved(w)}
        text = str(d["pairing_preserved"]).lower()
    elif op == "closure":
        d = {"components": bw.closure_components(w)}
        text = str(d["components"])
    else:  # equal
        other = _word(a.other, a.strands)
        d = {"equal": braids_equal(w, other)}
        text = str(d["equal"]).lower()
    return _emit(a.format, d, text)


def cmd_presentation(a) -> str:
    p = handlebody_presentation(a.genus)
    return _emit(a.format, p.to_dict(), p.to_text())


def cmd_abelianization(a) -> str:
    ab = abelianization(handlebody_presentation(a.genus))
    return _emit(a.format, ab.to_dict(), str(ab))


def cmd_relations(a) -> str:
    rep = verify_relations(a.genus, a.max_image_length)
    lines = [f"{c.status:<24} ({c.family}) {c.relation}" + (f"  [{c.note}]" if c.note else "")
             for c in rep.checks]
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(rep.counts().items())))
    cols = ["family", "relation", "status", "permutation_trivial", "exponent_sum",
            "in_disk_group", "convention"]
    rows = [[getattr(c, k) for k in cols] for c in rep.checks]
    out = _emit(a.format, rep.to_dict(), "\n".join(lines), _csv(cols, rows))
    if rep.partial:
        raise ResourceLimitError(out)
    return out


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--tol", type=float, default=DEFAULT_TOL,
                     help="width of the certified root bracket")

    parser = argparse.ArgumentParser(
        prog="wicket",
        description="Dilatations, train-track matrices and presentations for wicket braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dilatation", parents=[common, tol], help="certified dilatation of w_m")
    p.add_argument("--strands", type=int, required=True)
    p.set_defaults(func=cmd_dilatation)

    p = sub.add_parser("table", parents=[common, tol], help="table of dilatations")
    p.add_argument("--max-n", type=int, default=15)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("convergence", parents=[common, tol],
                       help="normalized entropy against 4 log kappa")
    p.add_argument("--max-n", type=int, default=200)
    p.set_defaults(func=cmd_convergence)

    for name, func, hlp in (("matrix", cmd_matrix, "incidence matrix"),
                            ("charpoly", cmd_charpoly, "characteristic polynomial"),
                            ("prongs", cmd_prongs, "singularity data")):
        p = sub.add_parser(name, parents=[common], help=f"{hlp} (w6 unless --n is given)")
        p.add_argument("--n", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("validate", parents=[common], help="check the family matrices")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("braid", help="braid word invariants")
    bsub = p.add_subparsers(dest="braid_op", required=True)
    for op in ("perm", "expsum", "pairing", "closure"):
        q = bsub.add_parser(op, parents=[common])
        q.add_argument("--strands", type=int, required=True)
        q.add_argument("word")
    q = bsub.add_parser("equal", parents=[common])
    q.add_argument("--strands", type=int, required=True)
    q.add_argument("word")
    q.add_argument("other")
    q = bsub.add_parser("family", parents=[common])
    q.add_argument("kind", choices=("w6", "x4n8", "y4n8", "w4n8", "x4n6", "y4n6", "w4n6"))
    q.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_braid)

    for name, func in (("presentation", cmd_presentation),
                       ("abelianization", cmd_abelianization),
                       ("relations", cmd_relations)):
        p = sub.add_parser(name, parents=[common], help=f"{name} of H(H_g)")
        p.add_argument("--genus", type=int, required=True)
        p.set_defaults(func=func)
    p.add_argument("--max-image-length", type=int, default=MAX_IMAGE_LENGTH,
                   help="cap on the free-group image length in the braid oracle")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out = args.func(args)
    except ResourceLimitError as exc:
        text = str(exc)
        if "\n" in text or text.startswith("{"):
            print(text, file=stdout)
            print("error: resource cap reached; report is partial", file=stderr)
        else:
            print(f"error: {text}", file=stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(str(exc), file=stdout)
        print("error: validation failed", file=stderr)
        return EXIT_DOMAIN
    except (ValueError, NoRealRootError) as exc:  # BraidError is a ValueError
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    print(out, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
