import json

from lgmodel import cli
from lgmodel.mirror import NotBijective
from lgmodel.statespace import InvariantViolation


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_listing(capsys):
    code, out, _ = run(capsys, "group", "cubics")
    assert code == 0 and "3 elements fix a coordinate" in out
    code, out, _ = run(capsys, "group", "cubics-mirror")
    assert code == 0 and "405 elements fix a coordinate, 141 contribute" in out
    rows = [line.split() for line in out.splitlines()[3:]]
    assert len(rows) == 141
    mult = {}
    for r in rows:
        mult[r[-1]] = mult.get(r[-1], 0) + 1
    # 5 Jacobi + 4 singles; 4 types of 6; 12 types of 9
    assert mult == {"1": 9, "6": 24, "9": 108}


def test_group_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.lg"
    bad.write_text("vars x y\nweights 1\npoly W = x^3 + y^3\n")
    assert run(capsys, "group", str(bad))[0] == 2
    assert run(capsys, "group", str(tmp_path / "missing.lg"))[0] == 2
    assert run(capsys, "group")[0] == 2


def test_statespace_formats(capsys):
    code, out, _ = run(capsys, "statespace", "quintic-mirror", "--format", "json")
    assert code == 0
    assert json.loads(out)["hodge"][1][1] == 101
    code, out, _ = run(capsys, "statespace", "cubics")
    assert code == 0 and "73" in out
    code, out, _ = run(capsys, "statespace", "cubics", "--format", "latex")
    assert code == 0 and r"\begin{tabular}" in out
    assert run(capsys, "statespace", "cubics", "--format", "xml")[0] == 2


def test_statespace_invariant_violation(capsys, monkeypatch):
    def broken(*a, **k):
        raise InvariantViolation("placement")
    monkeypatch.setattr(cli, "assemble", broken)
    assert run(capsys, "statespace", "cubics")[0] == 3


def test_mirror_cubics(capsys):
    code, out, _ = run(capsys, "mirror", "cubics-mirror", "cubics", "--check", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["maps"][0]["pairs"]) == 73 and data["maps"][0]["rank"] == 73
    status = [d["status"] for d in data["table_diff"]]
    assert status.count("match") == 65 and status.count("documented-typo") == 8


def test_mirror_quintic(capsys):
    code, out, _ = run(capsys, "mirror", "quintic-mirror", "quintic", "--json")
    assert code == 0
    data = json.loads(out)
    assert sum(len(m["pairs"]) for m in data["maps"]) == 204
    assert len(data["untwisted"]) == 4


def test_mirror_errors(capsys, monkeypatch):
    assert run(capsys, "mirror", "cubics", "quintic")[0] == 2
    code, _, err = run(capsys, "mirror", "cubics", "cubics-mirror", "--check")
    assert code == 2 and "source" in err

    def fail(*a, **k):
        raise NotBijective("rank 72", ["dt|x>"])
    monkeypatch.setattr(cli, "build_mirror_map", fail)
    code, _, err = run(capsys, "mirror", "cubics-mirror", "cubics")
    assert code == 4 and "dt|x>" in err


def test_regression_suite_subset(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "3", "--only", "7")
    assert code == 0
    assert "[PASS] 3." in out and "[PASS] 7." in out
    assert "discrepancy: printed Jacobi row" in out


def test_regression_suite_detects_corrupted_model(capsys, tmp_path):
    from lgmodel.modelfile import builtin_text
    bad = tmp_path / "cubics.lg"
    bad.write_text(builtin_text("cubics").replace("group J", "group SL"))
    code, out, _ = run(capsys, "paper-suite", "--only", "1", "--model", f"cubics={bad}")
    assert code == 1 and "[FAIL] 1." in out
    assert run(capsys, "paper-suite", "--model", "nosuch=x")[0] == 2
