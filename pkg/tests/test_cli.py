"""CLI contract: exit codes and byte-identical reports against golden files.

Set ``STID_REGEN_GOLDEN=1`` to rewrite the golden files after an intended
change of output.
"""

import os
from pathlib import Path

import pytest

from stid.cli import main
from stid.verifier import certificate_from_text
from stid.words import parse_identity

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("verify_comm_n1", ["verify", "--n", "1", "comm.id"], 0),
    ("verify_comm_n2", ["verify", "--n", "2", "comm.id"], 1),
    ("verify_squares_n2", ["verify", "--n", "2", "squares2.id"], 0),
    ("fuzz_comm_n2", ["fuzz", "--n", "2", "--kind", "trop", "--trials", "100", "--seed", "3", "comm.id"], 1),
    ("fuzz_zero_trials", ["fuzz", "--n", "2", "--trials", "0", "comm.id"], 0),
    ("fuzz_lemma_n1", ["fuzz", "--n", "1", "--lemma", "nu-pair", "--pair-mode", "hat", "--trials", "200", "comm.id"], 0),
    ("walks_loops", ["walks", "loops1.json", "aab"], 0),
    ("walks_list_max", ["walks", "pair2.json", "ab", "--list-max"], 0),
    ("walks_check_double", ["walks", "double2.json", "abba", "baab"], 1),
    ("hull_ab_n1", ["hull", "ab", "--n", "1"], 0),
    ("hull_ab_n2", ["hull", "ab", "--n", "2"], 0),
    ("compose_uncertified", ["compose", "comm.id", "comm.id"], 0),
    ("search_n1", ["search", "--n", "1", "--max-len", "3", "--trials", "50"], 0),
]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(autouse=True)
def in_data_dir(monkeypatch):
    monkeypatch.chdir(DATA)


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden_output(name, argv, code, capsys):
    got_code, out, _ = run(argv, capsys)
    assert got_code == code
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("STID_REGEN_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()
    # identical config, identical bytes
    assert run(argv, capsys)[1] == out


def test_malformed_identity_exit_3(capsys):
    code, out, err = run(["verify", "--n", "2", "malformed.id"], capsys)
    assert code == 3 and out == ""
    assert "line 2 column 5" in err


def test_missing_file_and_bad_n(capsys):
    assert run(["verify", "--n", "2", "nope.id"], capsys)[0] == 5
    assert run(["verify", "--n", "0", "comm.id"], capsys)[0] == 5
    assert run(["verify", "comm.id"], capsys)[0] == 5


def test_limit_exceeded_exit_4(capsys, monkeypatch):
    monkeypatch.setenv("STID_MAX_SET", "3")
    code, _, err = run(["verify", "--n", "2", "squares2.id"], capsys)
    assert code == 4 and "max_set=3" in err
    code, _, _ = run(["hull", "abab", "--n", "2", "--max-set", "1"], capsys)
    assert code == 4


def test_trivial_pair_exit_2(tmp_path, capsys):
    f = tmp_path / "t.id"
    f.write_text("u: abab\nv: ab.ab\n")
    code, out, _ = run(["verify", "--n", "2", str(f)], capsys)
    assert code == 2 and "verdict: TRIVIAL_PAIR" in out


def test_certified_compose_pipeline(tmp_path, capsys):
    c1 = tmp_path / "c1.json"
    assert run(["verify", "--n", "1", "comm.id", "--out", str(c1)], capsys)[0] == 0
    assert certificate_from_text(c1.read_text()).verdict == "HOLDS"
    out_id = tmp_path / "lift.id"
    code, report, _ = run(
        ["compose", "comm.id", "comm.id", "--cert-outer", str(c1), "--cert-inner", str(c1),
         "--require-cert", "--out", str(out_id)],
        capsys,
    )
    assert code == 0 and "certified: true" in report
    text = out_id.read_text()
    assert "composition theorem" in text and "sha256" in text
    lifted = parse_identity(text)
    assert (str(lifted.u), str(lifted.v)) == ("abba", "baab")
    code, report, _ = run(["fuzz", "--n", "1", "--kind", "st", "--trials", "2000", str(out_id)], capsys)
    assert code == 0 and "result: PASS" in report


def test_compose_requires_certificates(tmp_path, capsys):
    code, out, err = run(["compose", "comm.id", "comm.id", "--require-cert"], capsys)
    assert code == 5 and out == "" and "no certificate" in err
    c2 = tmp_path / "c2.json"
    run(["verify", "--n", "2", "comm.id", "--out", str(c2)], capsys)
    code, _, err = run(
        ["compose", "comm.id", "comm.id", "--cert-outer", str(c2), "--cert-inner", str(c2), "--require-cert"],
        capsys,
    )
    assert code == 5 and "REFUTED" in err
    code, out, err = run(["compose", "comm.id", "comm.id", "--cert-outer", str(c2), "--cert-inner", str(c2)], capsys)
    assert code == 0 and "warning" in err and "UNCERTIFIED" in out


def test_compose_trivial(tmp_path, capsys):
    f = tmp_path / "aa.id"
    f.write_text("u: a\nv: a\n")
    code, _, err = run(["compose", "comm.id", str(f)], capsys)
    assert code == 5 and "trivial" in err


def test_hull_prune_flag_keeps_vertex_lines(capsys):
    def vertex_lines(flag):
        _, out, _ = run(["hull", "abbab", "--n", "2", flag, "--prune-above", "2"], capsys)
        return [ln for ln in out.splitlines() if ln.endswith("# vertex") or ln.startswith("entry")]

    assert vertex_lines("--prune") == vertex_lines("--no-prune")


def test_certificate_file_is_stable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["verify", "--n", "2", "comm.id", "--out", str(a)], capsys)
    run(["verify", "--n", "2", "comm.id", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()
    assert certificate_from_text(a.read_text()).validate()
