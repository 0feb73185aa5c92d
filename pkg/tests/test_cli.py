import json
import os

import pytest

from bredon.cli import main
from bredon.documents import dump_document, load_document, parse_document
from bredon.errors import InputError
from corpus import corpus_names, corpus_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out) if out.strip() else None, err


def strip_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


@pytest.mark.parametrize("name,expected", [
    ("racg_cycle_5", 2), ("ngon_4", 2), ("point", 0), ("dinf", 1), ("finite_A3", 0),
    ("gp_pentagon", 2), ("gp_complete_3", 0), ("gp_edgeless_2", 1), ("dev_s3_chain", 0),
])
def test_cd_headlines(capsys, name, expected):
    code, rep, _ = run_json(capsys, "cd", "-i", corpus_path(name))
    assert code == 0 and rep["headline"] == expected and rep["schema_version"] == 1


@pytest.mark.parametrize("name,expected", [("dinf", 1), ("finite_H3", 0), ("racg_cycle_6", 2)])
def test_vcd(capsys, name, expected):
    code, rep, _ = run_json(capsys, "vcd", "-i", corpus_path(name))
    assert code == 0 and rep["headline"] == expected and rep["agree"]
    assert rep["link_formula"]["dimension"] == rep["building_formula"]["dimension"]


def test_vcd_rejects_other_modes(capsys):
    code, rep, err = run_json(capsys, "vcd", "-i", corpus_path("dev_s3_chain"))
    assert code == 2 and rep["error"]["type"] == "InputError"
    assert json.loads(err)["exit_code"] == 2


@pytest.mark.parametrize("theorem", ["decomposition", "bredon", "lemma34", "acyclic"])
def test_verify_s3_chain(capsys, theorem):
    code, rep, _ = run_json(capsys, "verify", "-i", corpus_path("dev_s3_chain"), "--theorem", theorem)
    assert code == 0 and rep["passed"]


def test_verify_acyclic_failure_has_witness(capsys):
    code, rep, _ = run_json(capsys, "verify", "-i", corpus_path("dev_index_two"), "--theorem", "acyclic")
    assert code == 4 and not rep["passed"]
    assert {"J": "1", "check": "reduced_cohomology_vanishes"} in rep["witnesses"]


def test_verify_with_workers(capsys):
    code, rep, _ = run_json(capsys, "--jobs", "2", "verify", "-i", corpus_path("dev_s4_branch"),
                            "--theorem", "decomposition")
    assert code == 0 and len(rep["results"]) == 4


def test_develop(capsys):
    code, rep, _ = run_json(capsys, "develop", "-i", corpus_path("dev_s3_chain"), "--dump")
    assert (rep["vertices"], rep["edges"]) == (4, 3)
    assert len(rep["faces"]["1"]) == 3
    code, rep, _ = run_json(capsys, "develop", "-i", corpus_path("dev_full_group"))
    assert rep["vertices"] == 1
    code, rep, _ = run_json(capsys, "develop", "-i", corpus_path("dev_antichain"))
    assert rep["components"] > 1 and rep["edges"] == 0


def test_validation_error_exit_code(tmp_path, capsys):
    doc = {"mode": "finite_development", "degree": 3, "group": {"generators": [[1, 0, 2], [1, 2, 0]]},
           "elements": ["U", "T"], "relations": [["U", "T"]],
           "locals": {"U": {"generators": [[1, 0, 2], [1, 2, 0]]}, "T": {"generators": [[1, 0, 2], [1, 2, 0]]}}}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, rep, _ = run_json(capsys, "cd", "-i", str(p))
    assert code == 2 and rep["error"]["type"] == "NotStrict"


def test_size_cap(capsys):
    code, rep, _ = run_json(capsys, "--size-cap", "3", "develop", "-i", corpus_path("dev_s4_branch"))
    assert code == 2 and rep["error"]["type"] == "SizeCapExceeded"
    assert "BREDON_SIZE_CAP" not in os.environ


def test_malformed_input(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "cd", "-i", str(p))
    assert code == 2 and json.loads(err)["type"] == "InputError"
    with pytest.raises(InputError):
        parse_document({"mode": "coxeter", "generators": ["a"]})
    with pytest.raises(InputError):
        parse_document({"mode": "nope"})


def test_text_output_contains_every_number(capsys):
    code, text, _ = run(capsys, "cd", "-i", corpus_path("ngon_5"))
    code, rep, _ = run_json(capsys, "cd", "-i", corpus_path("ngon_5"))
    assert f"dimension: {rep['headline']}" in text
    for row in rep["table"]:
        for n in row["nonzero"]:
            assert f"H^{n}" in text


@pytest.mark.parametrize("name", corpus_names())
def test_round_trip_is_idempotent(name):
    once = dump_document(load_document(corpus_path(name)))
    twice = dump_document(parse_document(json.loads(once)))
    assert once == twice
    with open(corpus_path(name), encoding="utf-8") as fh:
        assert fh.read() == once


@pytest.mark.parametrize("name", ["racg_cycle_7", "dev_s4_branch", "ngon_6"])
def test_deterministic(capsys, name):
    cmd = "verify" if name.startswith("dev") else "cd"
    extra = ["--theorem", "bredon"] if cmd == "verify" else []
    a = run_json(capsys, cmd, "-i", corpus_path(name), *extra)[1]
    b = run_json(capsys, cmd, "-i", corpus_path(name), *extra)[1]
    assert strip_timing(a) == strip_timing(b)
