import json

import pytest

from liesupp.cli import main
from liesupp.formats import algebra_to_doc
from liesupp.liealg import counterexample_double, heisenberg


def write_doc(tmp_path, doc, name="alg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_validate_round_trip(tmp_path, capsys):
    out = str(tmp_path / "h.json")
    code, _, _ = run(capsys, ["catalog", "heisenberg", "-p", "2", "--out", out])
    assert code == 0
    code, _, err = run(capsys, ["validate", out])
    assert code == 0 and "ok" in err
    doc = json.loads(open(out).read())
    assert doc == algebra_to_doc(heisenberg(2))


def test_classify_report(tmp_path, capsys):
    path = write_doc(tmp_path, algebra_to_doc(heisenberg(2)))
    code, out, _ = run(capsys, ["classify", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["predicates"]["c_supplemented"] is True
    assert doc["predicates"]["completely_factorisable"] is False
    assert doc["lattice"]["subalgebras"] == 12
    assert doc["witnesses"]["phi"]["dim"] == 1
    assert "algebra_hash" in doc


def test_classify_report_deterministic_modulo_timing(tmp_path, capsys):
    path = write_doc(tmp_path, algebra_to_doc(counterexample_double(2)))
    docs = []
    for _ in range(2):
        code, out, _ = run(capsys, ["classify", path])
        assert code == 0
        d = json.loads(out)
        d.pop("timing")
        docs.append(d)
    assert docs[0] == docs[1]


def test_check_property_exit_codes(tmp_path, capsys):
    good = write_doc(tmp_path, algebra_to_doc(heisenberg(2)), "good.json")
    bad = write_doc(tmp_path, algebra_to_doc(counterexample_double(2)), "bad.json")
    code, out, _ = run(capsys, ["check", good, "--property", "c-supplemented"])
    assert code == 0 and json.loads(out)["holds"] is True
    code, out, _ = run(capsys, ["check", bad, "--property", "c-supplemented"])
    assert code == 1
    doc = json.loads(out)
    assert doc["holds"] is False
    assert doc["witnesses"]["c_supplemented_failing"]["rows"] == [[0, 0, 1, 0, 0, 1]]


def test_check_subspace_level(tmp_path, capsys):
    bad = write_doc(tmp_path, algebra_to_doc(counterexample_double(2)))
    code, out, _ = run(
        capsys,
        ["check", bad, "--property", "c-supplemented", "--subspace", "0 0 1 0 0 1"],
    )
    assert code == 1 and json.loads(out)["holds"] is False
    code, out, _ = run(
        capsys,
        ["check", bad, "--property", "c-supplemented", "--subspace", "0 0 1 0 0 0"],
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["holds"] is True and "supplement" in doc
    code, out, _ = run(
        capsys, ["check", bad, "--property", "ideal", "--subspace", "0 0 1 0 0 0"]
    )
    assert code == 0
    code, out, _ = run(
        capsys, ["check", bad, "--property", "core", "--subspace", "0 0 1 0 0 1"]
    )
    assert code == 0 and json.loads(out)["core"]["dim"] == 0


def test_invalid_inputs_exit_2(tmp_path, capsys):
    # non-Jacobi table: [x,y] = y, [y,z] = z leaves a residual of z on (x,y,z)
    doc = {
        "field": {"prime": 2},
        "dim": 3,
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"1": 1}},
            {"i": 1, "j": 2, "coeffs": {"2": 1}},
        ],
    }
    path = write_doc(tmp_path, doc)
    code, _, err = run(capsys, ["validate", path])
    assert code == 2 and "(0, 1, 2)" in err
    code, _, err = run(capsys, ["validate", str(tmp_path / "missing.json")])
    assert code == 2
    bad_field = write_doc(
        tmp_path, {"field": {"prime": 4}, "dim": 1, "brackets": {}}, "f4.json"
    )
    code, _, err = run(capsys, ["validate", bad_field])
    assert code == 2
    good = write_doc(tmp_path, algebra_to_doc(heisenberg(2)), "h.json")
    code, _, err = run(capsys, ["check", good, "--property", "frobby"])
    assert code == 2 and "unknown property" in err


def test_cap_exceeded_exit_3(tmp_path, capsys):
    code, _, err = run(
        capsys, ["census", "-p", "3", "-n", "3", "--table-cap", "100"]
    )
    assert code == 3 and "cap exceeded" in err


def test_census_counts(capsys):
    code, out, _ = run(capsys, ["census", "-p", "2", "-n", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["per_dim"]["3"] == {"candidates": 512, "algebras": 120}


def test_verify_confirmed_and_refuted(capsys):
    code, out, _ = run(capsys, ["verify", "tsupp", "-p", "2", "-n", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["confirmed"] is True and doc["examined"] == 125
    code, out, _ = run(capsys, ["verify", "csupp_dsum", "-p", "2", "-n", "3"])
    assert code == 1
    doc = json.loads(out)
    assert doc["confirmed"] is False and len(doc["counterexamples"]) == 3


def test_verify_no_dedup(capsys):
    code, out, _ = run(
        capsys, ["verify", "csupp_dsum", "-p", "2", "-n", "2", "--no-dedup"]
    )
    doc = json.loads(out)
    assert doc["universe"]["dedup_by_isomorphism"] is False


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
