import json

from bminors.cli import main
from conftest import golden_vector_minor


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_minor_all_golden(capsys):
    code, out, _ = run(
        capsys, "minor", "--rank", "3", "--length", "8", "--k", "5", "--method", "all"
    )
    assert code == 0
    assert out.strip().endswith("MATCH")
    assert golden_vector_minor().text() in out


def test_minor_trivial(capsys):
    code, out, _ = run(
        capsys, "minor", "--rank", "2", "--length", "1", "--k", "1", "--method", "rep"
    )
    assert code == 0
    assert out.strip() == "1"


def test_minor_spin_all(capsys):
    code, out, _ = run(
        capsys, "minor", "--rank", "2", "--length", "4", "--k", "2", "--method", "all"
    )
    assert code == 0
    assert "MATCH" in out
    assert out.count("+") == 2  # three-term polynomial


def test_minor_json_roundtrip(capsys):
    code, out, _ = run(
        capsys,
        "minor",
        "--rank",
        "3",
        "--length",
        "8",
        "--k",
        "5",
        "--method",
        "rep",
        "--format",
        "json",
    )
    assert code == 0
    from bminors.laurent import LaurentPoly

    assert LaurentPoly.from_json_dict(json.loads(out)) == golden_vector_minor()


def test_usage_errors(capsys):
    code, _, err = run(capsys, "minor", "--rank", "3", "--k", "1")
    assert code == 2 and "length" in err
    code, _, err = run(capsys, "minor", "--rank", "3", "--length", "20", "--k", "1")
    assert code == 2
    code, _, err = run(
        capsys, "minor", "--rank", "3", "--word", "1,2,2", "--k", "1"
    )
    assert code == 2 and "prefix" in err
    code, _, _ = run(capsys, "minor", "--rank", "3")
    assert code == 2


def test_word_flag_accepts_family(capsys):
    code, out, _ = run(
        capsys, "minor", "--rank", "3", "--word", "1,2,3,1,2,3,1,2", "--k", "5",
        "--method", "closed",
    )
    assert code == 0
    assert golden_vector_minor().text() in out


def test_sweep_row_counts(capsys):
    code, out, _ = run(capsys, "sweep", "--rank", "3", "--length", "8", "--k", "5")
    assert code == 0
    assert "paths=15" in out and "MATCH" in out


def test_sweep_small_rank(capsys):
    code, out, _ = run(capsys, "sweep", "--rank", "2")
    assert code == 0
    assert "MISMATCH" not in out
    assert all(line.endswith("MATCH") for line in out.strip().splitlines())


def test_sweep_json_rows(capsys):
    code, out, _ = run(
        capsys, "sweep", "--rank", "3", "--length", "8", "--k", "5",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {
            "r": 3, "n": 8, "k": 5, "d": 2,
            "paths": 15, "systems": 15, "terms": 14, "verdict": "MATCH",
        }
    ]


def test_paths_dot_output(tmp_path, capsys):
    out_file = tmp_path / "graph.dot"
    code, _, _ = run(
        capsys,
        "paths",
        "--rank", "3", "--length", "8", "--k", "5",
        "--format", "dot", "--out", str(out_file),
    )
    assert code == 0
    dot = out_file.read_text()
    assert dot.count("->") == 27
    # determinism across runs
    code, _, _ = run(
        capsys,
        "paths",
        "--rank", "3", "--length", "8", "--k", "5",
        "--format", "dot", "--out", str(out_file) + ".again",
    )
    assert (tmp_path / "graph.dot.again").read_text() == dot


def test_bmatrix_text_and_json(capsys):
    code, out, _ = run(capsys, "bmatrix", "--rank", "2", "--length", "4")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0].split() == ["1", "2"]
    code, out, _ = run(
        capsys, "bmatrix", "--rank", "2", "--length", "4", "--format", "json"
    )
    data = json.loads(out)
    idx1 = data["rows"].index(1)
    idx2 = data["rows"].index(2)
    principal = [
        [data["entries"][idx1][0], data["entries"][idx1][1]],
        [data["entries"][idx2][0], data["entries"][idx2][1]],
    ]
    assert principal == [[0, -1], [2, 0]]


def test_mutate_command(capsys):
    code, out, _ = run(capsys, "mutate", "--rank", "2", "--length", "3", "--k", "1")
    assert code == 0
    assert "x'_1 =" in out
    code, _, err = run(capsys, "mutate", "--rank", "2", "--length", "3", "--k", "3")
    assert code == 2 and "exchangeable" in err


def test_factor_check(capsys):
    code, out, _ = run(
        capsys, "factor", "--rank", "2", "--length", "4", "--check", "--seed", "5",
        "--trials", "5",
    )
    assert code == 0
    assert out.strip() == "phi/psi inverse: OK; operator identity: OK"


def test_factor_point_mapping(tmp_path, capsys):
    import random

    from bminors.factorize import phi, psi, random_point, TorusPoint
    from bminors.rootdata import make_minor_spec

    spec = make_minor_spec(2, 4, 1)
    point = random_point(spec, random.Random(1))
    src = tmp_path / "point.json"
    src.write_text(json.dumps(point.json_dict()))
    code, out, _ = run(
        capsys,
        "factor", "--rank", "2", "--length", "4",
        "--point", str(src), "--map", "phi",
    )
    assert code == 0
    assert TorusPoint.from_json_dict(json.loads(out)) == phi(point, spec)
    code, out, _ = run(
        capsys,
        "factor", "--rank", "2", "--length", "4",
        "--point", str(src), "--map", "psi",
    )
    assert TorusPoint.from_json_dict(json.loads(out)) == psi(point, spec)


def test_deterministic_output(capsys):
    args = ["minor", "--rank", "3", "--length", "8", "--k", "5", "--method", "all"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
