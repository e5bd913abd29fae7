"""Tests for the command line front end, run in-process."""

import json

import pytest
from typer.testing import CliRunner

from fuzzysoft.cli import app, main
from fuzzysoft.database.sets.db_sets import F_A, G_A, SETS
from tests.golden import assert_documents_close, read_golden

runner = CliRunner()


@pytest.fixture(scope="module")
def fixtures_dir(tmp_path_factory):
    """Every worked-example set and mapping written by the ``fixtures`` verb."""
    outdir = tmp_path_factory.mktemp("fixtures")
    assert main(["fixtures", str(outdir)]) == 0
    return outdir


def write_collection(directory, named_sets):
    directory.mkdir()
    for name, F in named_sets.items():
        (directory / f"{name}.json").write_text(json.dumps(F.to_document()), encoding="utf-8")
    return directory


def test_fixtures_verb(fixtures_dir):
    written = sorted(path.stem for path in fixtures_dir.glob("*.json"))
    assert written == sorted([*SETS, "map_4_22", "map_4_23"])


def test_dist(fixtures_dir, capsys):
    assert main(["dist", str(fixtures_dir / "F_A.json"), str(fixtures_dir / "G_A.json")]) == 0
    assert capsys.readouterr().out == "0.2000\n"


def test_dist_from_soft_point(fixtures_dir, capsys):
    status = main(["dist", str(fixtures_dir / "F_A.json"), str(fixtures_dir / "G_A.json"), "--point", "e1"])
    assert status == 0
    assert capsys.readouterr().out == "0.2000\n"


def test_diam(fixtures_dir, capsys):
    assert main(["diam", str(fixtures_dir / "F_A.json")]) == 0
    assert capsys.readouterr().out == "0.1000\n"


@pytest.mark.parametrize("name", ["P_A", "N_A"])
def test_classify(fixtures_dir, capsys, name):
    assert main(["classify", str(fixtures_dir / f"{name}.json")]) == 0
    assert_documents_close(json.loads(capsys.readouterr().out), read_golden(f"classify_{name}.json"))


def test_arith_to_file(fixtures_dir, tmp_path):
    out = tmp_path / "div.json"
    status = main(["arith", str(fixtures_dir / "F_A.json"), str(fixtures_dir / "G_A.json"),
                   "--op", "div", "--out", str(out)])
    assert status == 0
    assert_documents_close(json.loads(out.read_text(encoding="utf-8")), read_golden("arith_div_F_A_G_A.json"))


def test_map(fixtures_dir):
    result = runner.invoke(app, ["map", "--spec", str(fixtures_dir / "map_4_22.json"),
                                 "--image", str(fixtures_dir / "H_A.json"),
                                 "--preimage", str(fixtures_dir / "H_B_prime.json")])
    assert result.exit_code == 0, result.output
    assert_documents_close(json.loads(result.stdout), read_golden("map_4_22_H_A.json"))


def test_map_checks(fixtures_dir, tmp_path):
    collection = write_collection(tmp_path / "sources", {"H_A": SETS["H_A"], "Q_A": SETS["Q_A"]})
    result = runner.invoke(app, ["map", "--spec", str(fixtures_dir / "map_4_23.json"),
                                 "--check-number", str(fixtures_dir / "H_A.json"),
                                 "--isometry", str(collection), "--continuity", str(collection),
                                 "--uniform", str(collection), "--eps", "0.1"])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["mapping"]["is_number_mapping"] is False
    assert document["number_preserving"]["verdict"] is False
    assert document["isometry"]["collection_size"] == 2
    assert set(document["continuity"]) >= {"check", "verdict"}
    assert document["uniform_continuity"]["check"] == "uniform_continuity"


def test_sphere(fixtures_dir, tmp_path):
    collection = write_collection(tmp_path / "space", {"F_A": F_A, "G_A": G_A, "L_A": SETS["L_A"]})
    result = runner.invoke(app, ["sphere", str(fixtures_dir / "F_A.json"), str(collection), "-r", "0.25"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == {"center": "F_A", "radius": 0.25, "closed": False,
                                         "members": ["F_A", "G_A", "L_A"]}


def test_axioms(tmp_path):
    collection = write_collection(tmp_path / "space", {"F_A": F_A, "G_A": G_A, "L_A": SETS["L_A"]})
    result = runner.invoke(app, ["axioms", str(collection)])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["structure"] == "metric"
    assert document["triangle"] == {"passed": True}
    assert document["size"] == 3


def test_seq(tmp_path):
    # natural order: member2 comes before member10
    prefix = write_collection(tmp_path / "prefix", {f"member{n}": (F_A if n % 2 else G_A) for n in range(1, 11)})
    result = runner.invoke(app, ["seq", "--prefix", str(prefix), "--eps", "0.1"])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["cauchy"]["verdict"] is False
    assert document["cauchy"]["witness"]["distance"] == pytest.approx(0.2)
    assert document["bounded"]["bound"] == pytest.approx(0.2)


def test_propcheck_subset(tmp_path):
    out = tmp_path / "report.json"
    status = main(["propcheck", "--seed", "7", "--budget", "50", "--only", "T3.5", "--only", "T4.36",
                   "--out", str(out)])
    assert status == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert [entry["id"] for entry in report["propositions"]] == ["T3.5", "T4.36"]
    assert report["matched"] is True
    assert report["seed"] == 7


def test_propcheck_is_deterministic():
    args = ["propcheck", "--seed", "7", "--budget", "100", "--only", "P3.19", "--only", "T4.19"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_propcheck_unknown_claim():
    result = runner.invoke(app, ["propcheck", "--only", "X9.9"])
    assert result.exit_code == 2


def test_domain_error_exits_with_one(fixtures_dir, capsys):
    assert main(["dist", str(fixtures_dir / "F_A.json"), str(fixtures_dir / "K_A.json")]) == 1
    assert "error:" in capsys.readouterr().err


def test_undefined_cells_are_reported(tmp_path, capsys):
    zeros = tmp_path / "zeros.json"
    zeros.write_text(json.dumps({"universe": ["h1"], "parameters": ["e1"], "memberships": [[0.0]]}),
                     encoding="utf-8")
    assert main(["arith", str(zeros), str(zeros), "--op", "mul"]) == 0
    assert json.loads(capsys.readouterr().out)["defined"] == [[False]]


def test_malformed_document_exits_with_one(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"universe": ["h1"], "parameters": ["e1"], "memberships": [[1.5]]}', encoding="utf-8")
    assert main(["classify", str(bad)]) == 1


@pytest.mark.parametrize("argv", [
    ["arith", "missing.json", "G.json", "--op", "add"],
    ["frobnicate"],
    ["dist"],
])
def test_usage_errors_exit_with_two(argv):
    assert main(argv) == 2


def test_bad_operation(fixtures_dir):
    result = runner.invoke(app, ["arith", str(fixtures_dir / "F_A.json"), str(fixtures_dir / "G_A.json"),
                                 "--op", "pow"])
    assert result.exit_code == 2


def test_sphere_radius_out_of_range(fixtures_dir, tmp_path):
    collection = write_collection(tmp_path / "space", {"F_A": F_A})
    result = runner.invoke(app, ["sphere", str(fixtures_dir / "F_A.json"), str(collection), "-r", "1.5"])
    assert result.exit_code == 2


def test_propcheck_single_unseeded_claim(capsys):
    assert main(["propcheck", "--only", "T3.3", "--budget", "50"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["propositions"][0]["outcome"] == "VERIFIED"


def test_malformed_collection_member_exits_with_one(tmp_path, capsys):
    collection = write_collection(tmp_path / "space", {"F_A": F_A, "G_A": G_A})
    (collection / "broken.json").write_text('{"universe": ["h1"', encoding="utf-8")
    assert main(["axioms", str(collection)]) == 1
    assert "broken.json: not a JSON document" in capsys.readouterr().err
