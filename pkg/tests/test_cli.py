import csv
import io
import json
import subprocess
import sys

import pytest

from wicket.cli import EXIT_DOMAIN, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, run

TABLE = [2.89005, 2.26844, 1.56362, 1.36516, 1.27074, 1.21532, 1.17882, 1.15293, 1.13361,
         1.11863, 1.10668, 1.09692, 1.08879, 1.08193, 1.07605, 1.07096, 1.06651]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_dilatation_json():
    code, out, _ = call("dilatation", "--strands", "10", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["strands"] == 10 and d["n"] == 1
    assert abs(d["lambda"] - 1.56362) < 1e-5
    assert d["penner_ok"] is True


def test_dilatation_text_and_csv():
    code, out, _ = call("dilatation", "--strands", "6")
    assert code == 0 and out.startswith("strands: 6")
    code, out, _ = call("dilatation", "--strands", "6", "--format", "csv")
    rows = dict(csv.reader(io.StringIO(out)))
    # coefficient lists are ascending in degree
    assert json.loads(rows["polynomial"]) == [1, -2, -2, -2, 1]
    assert json.loads(rows["lambda_bracket"])[0] < 2.8900536382640


def test_table_csv_matches_printed_values():
    code, out, _ = call("table", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows][1:3] == ["0", "1"]
    for row, want in zip(rows, TABLE):
        assert abs(float(row["lambda"]) - want) < 1e-5


def test_table_text_truncates():
    _, out, _ = call("table", "--max-n", "2")
    lines = out.splitlines()
    assert lines[1].split() == ["w6", "2.89005"]
    assert lines[3].split()[-1] == "1.56362"
    assert "w12 = w10" in lines[3]


def test_abelianization_genus_three():
    code, out, _ = call("abelianization", "--genus", "3")
    assert code == 0 and out.strip() == "Z + Z/2 + Z/2"


def test_presentation_json():
    _, out, _ = call("presentation", "--genus", "2", "--format", "json")
    assert len(json.loads(out)["relators"]) == 29


def test_braid_equal():
    code, out, _ = call("braid", "equal", "--strands", "3", "1 2 1", "2 1 2")
    assert (code, out.strip()) == (0, "true")
    _, out, _ = call("braid", "equal", "--strands", "3", "1 2", "2 1")
    assert out.strip() == "false"


def test_braid_invariants():
    w6 = "-2 -1 3 2 4 3 3 4 3"
    assert call("braid", "perm", "--strands", "6", "--", w6)[1].strip() == "(1 3 2 4)(5)(6)"
    assert call("braid", "expsum", "--strands", "6", "--", w6)[1].strip() == "5"
    assert call("braid", "pairing", "--strands", "6", "--", w6)[1].strip() == "true"
    assert call("braid", "closure", "--strands", "2", "1")[1].strip() == "2"


def test_family_output_round_trips():
    _, out, _ = call("braid", "family", "w4n8", "--n", "1", "--format", "json")
    d = json.loads(out)
    code, perm, _ = call("braid", "perm", "--strands", str(d["strands"]), "--", d["word"])
    assert code == 0 and perm.strip().endswith("(11)(12)")
    code, eq, _ = call("braid", "equal", "--strands", "12", "--", d["word"], d["word"])
    assert eq.strip() == "true"


def test_matrix_and_charpoly():
    _, out, _ = call("matrix", "--format", "json")
    assert json.loads(out)["matrix"][2] == [1, 0, 1, 1, 1, 0]
    _, out, _ = call("charpoly", "--n", "0")
    assert out.splitlines()[0] == "t^9 - 2t^8 - 2t^7 + 3t^6 + 3t^3 - 2t^2 - 2t + 1"
    assert "power 7" in out


def test_prongs_and_validate():
    _, out, _ = call("prongs", "--n", "2", "--format", "json")
    d = json.loads(out)
    assert d["euler_poincare_sum"] == 4 and d["interior_3_prongs"] == 7
    code, out, _ = call("validate", "--max-n", "3", "--format", "json")
    assert code == 0 and json.loads(out)["all_passed"]


def test_convergence_text():
    code, out, _ = call("convergence", "--max-n", "120")
    assert code == 0
    assert "first n with lambda - 1 < 0.01: 106" in out


# exit codes

@pytest.mark.parametrize("argv", [
    ("dilatation", "--strands", "7"),
    ("dilatation", "--strands", "4"),
    ("braid", "perm", "--strands", "3", "1 5"),
    ("abelianization", "--genus", "1"),
    ("matrix", "--n", "-1"),
])
def test_domain_errors(argv):
    code, out, err = call(*argv)
    assert code == EXIT_DOMAIN and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    (), ("nonsense",), ("dilatation",), ("dilatation", "--strands", "x"),
    ("table", "--format", "xml"),
])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == EXIT_USAGE


def test_help_is_success(capsys):
    assert call("--help")[0] == EXIT_OK


def test_resource_cap_exit_code():
    code, out, err = call("relations", "--genus", "2", "--max-image-length", "3")
    assert code == EXIT_RESOURCE
    assert "resource-limit" in out and "partial" in err


def test_relations_success():
    code, out, _ = call("relations", "--genus", "2", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["theta_is_inverse_sphere_relator"] and not d["partial"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wicket", "abelianization", "--genus", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "Z + Z/2 + Z/2"
