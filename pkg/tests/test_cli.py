import io
import json
import subprocess
import sys

import pytest

from dihedral_monoid.cli import parse_word, run
from dihedral_monoid import InvalidWord, normal_form


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_nf_golden():
    assert call("--n", "4", "--k", "3", "nf", "2 3 4 1") == (0, "1 2 3 4\ni=1 j=1 b=\n", "")


def test_eq_golden():
    assert call("--n", "4", "--k", "3", "eq", "1 2 3 4", "4 3 2 1") == (0, "equal\n", "")
    assert call("--n", "4", "--k", "3", "eq", "1 2", "2 1")[1] == "not-equal\n"


def test_bad_k_golden():
    code, out, err = call("--n", "4", "--k", "2", "nf", "1")
    assert code == 2 and out == ""
    assert "k^2 ≡ 1 mod n" in err and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("--n", "4", "--k", "3", "nf", "1 5"),
        ("--n", "4", "--k", "3", "nf", "1 x"),
        ("--n", "4", "--k", "3", "frobnicate"),
        ("--n", "4", "--k", "3", "nf", "1", "--bogus"),
        ("--n", "3", "--k", "2", "relations"),
        ("--k", "3", "relations"),
        ("--n", "4", "--k", "3", "verify", "--suite", "nope"),
        ("--n", "4", "--k", "3", "count", "--max-len", "-1"),
    ],
)
def test_invalid_input_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert err.startswith("error: ")


def test_word_tokens(p43):
    assert parse_word(p43, "a1 a2 3") == (1, 2, 3)
    assert parse_word(p43, "") == ()
    with pytest.raises(InvalidWord):
        parse_word(p43, "b2")


def test_nf_round_trip(p43):
    w = (3, 1, 1, 2, 3, 4, 1, 4, 3, 2)
    code, out, _ = call("--n", "4", "--k", "3", "nf", " ".join(map(str, w)))
    assert code == 0
    assert parse_word(p43, out.splitlines()[0]) == normal_form(p43, w)


def test_relations_sorted():
    code, out, _ = call("--n", "4", "--k", "3", "relations")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8
    assert lines[0] == "1 2 3 4" and lines[-1] == "4 3 2 1"


def test_orbit_and_cap():
    code, out, _ = call("--n", "4", "--k", "3", "orbit", "1 2 3 4 1")
    assert code == 0 and "1 1 2 3 4" in out.splitlines()
    code, out, err = call("--n", "4", "--k", "3", "orbit", "1 2 3 4 1", "--cap", "2")
    assert code == 2 and "cap" in err


def test_count_matches_growth():
    _, count, _ = call("--n", "4", "--k", "3", "count", "--max-len", "6")
    _, growth, _ = call("--n", "4", "--k", "3", "growth", "--max-len", "6")
    assert count.splitlines() == growth.splitlines()[:8]
    assert count.splitlines()[0] == "length,count"
    assert count.splitlines()[5] == "4,249"
    assert growth.splitlines()[-2].startswith("num: ") and growth.splitlines()[-1].startswith("den: 1 ")


def test_dfa_export_deterministic():
    a = call("--n", "4", "--k", "3", "dfa", "--which", "irreducible", "--format", "json")[1]
    b = call("--n", "4", "--k", "3", "dfa", "--which", "irreducible", "--format", "json")[1]
    assert a == b and json.loads(a)["which"] == "irreducible"
    code, dot, _ = call("--n", "4", "--k", "3", "dfa", "--which", "theorem", "--format", "dot")
    assert code == 0 and dot.startswith("digraph")


def test_verify_exit_codes():
    code, out, _ = call("--n", "4", "--k", "3", "verify", "--suite", "centrality")
    assert code == 0 and out.startswith("PASS centrality")
    code, out, _ = call("--n", "4", "--k", "3", "verify", "--suite", "dfa-equivalence")
    assert code == 1 and "FAIL" in out and "failure:" in out
    code, out, _ = call("--n", "4", "--k", "3", "verify", "--suite", "soundness", "--samples", "20", "--json")
    assert code == 0 and json.loads(out)["bounds"]["sample_count"] == 20


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dihedral_monoid.cli", "--n", "4", "--k", "3", "nf", "2 3 4 1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1 2 3 4\ni=1 j=1 b=\n"
