import json

import pytest

from bhr.cli import (
    EXIT_NOT_ADMISSIBLE,
    EXIT_OK,
    EXIT_OUT_OF_RANGE,
    EXIT_SEARCH_FAILED,
    EXIT_USAGE,
    main,
)

DEMO9 = "[6, 4, 3, 0, 7, 1, 5, 2, 8]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_ok(capsys):
    code, out, _ = run(
        capsys, "verify", "--path", DEMO9, "--multiset", "1 2^2 3^4 4"
    )
    assert code == EXIT_OK


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(
        capsys, "verify", "--path", DEMO9, "--multiset", "1^8"
    )
    assert code == 5


def test_admissible(capsys):
    code, out, _ = run(capsys, "admissible", "1 2^2 3^4 4")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "admissible", "5^3")
    assert code == EXIT_NOT_ADMISSIBLE


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == EXIT_USAGE
    assert run(capsys, "admissible", "not a multiset")[0] == EXIT_USAGE
    assert run(capsys, "grow", "--path", "[0,1]", "--at", "zz")[0] == (
        EXIT_USAGE
    )
    assert run(capsys)[0] == EXIT_USAGE


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == EXIT_OK


def test_grow_worked_example_json(capsys):
    code, out, _ = run(
        capsys, "grow", "--path", DEMO9, "--at", "3,2", "--json"
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["path"] == [9, 7, 6, 3, 0, 10, 1, 4, 8, 5, 2, 11]
    assert data["multiset"] == "1 2^2 3^7 4"


def test_grow_schedule(capsys):
    demo15 = "[0, 3, 6, 2, 1, 13, 10, 11, 14, 12, 9, 8, 5, 4, 7]"
    code, out, _ = run(
        capsys, "grow", "--path", demo15, "--schedule", "2*4 3*3", "--json"
    )
    assert code == EXIT_OK
    assert json.loads(out)["multiset"] == "1^4 2^9 3^17 4"


def test_solve_json_roundtrips_through_verify(capsys):
    code, out, _ = run(capsys, "solve", "1 2^2 3^3", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["status"] == "solved"
    cert = data["certificate"]
    code, _, _ = run(
        capsys,
        "verify",
        "--path",
        json.dumps(cert["path"]),
        "--multiset",
        cert["multiset"],
    )
    assert code == EXIT_OK


def test_solve_exit_codes(capsys):
    assert run(capsys, "solve", "5^3")[0] == EXIT_NOT_ADMISSIBLE
    assert run(capsys, "solve", "1^2 3^9 6")[0] == EXIT_OUT_OF_RANGE
    assert run(capsys, "solve", "1^2 3^9 6", "--fallback")[0] == EXIT_OK


def test_search_prints_seed_to_stderr(capsys):
    code, out, err = run(capsys, "search", "1^2 2 3^3", "--seed", "3")
    assert code == EXIT_OK
    assert "seed" in err


def test_oracle(capsys):
    assert run(capsys, "oracle", "1^2 2 3^3")[0] == EXIT_OK
    assert run(capsys, "oracle", "2^5")[0] == EXIT_SEARCH_FAILED
    assert run(capsys, "oracle", "1^20")[0] == EXIT_USAGE
    assert run(capsys, "oracle", "1^20", "--cap", "21")[0] == EXIT_OK


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--x", "8", "--b", "13", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["multiset"] == "1^6 8^13"
    assert run(capsys, "family", "--x", "8", "--b", "40")[0] == EXIT_USAGE


def test_seeds_check(capsys):
    code, out, _ = run(capsys, "seeds", "check")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "seeds", "dump", "--table", "demo", "--json")
    assert code == EXIT_OK
    assert len(json.loads(out)) == 2


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "2^3 3", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["bound"] == 9


def test_sweep(capsys):
    code, out, _ = run(
        capsys, "sweep", "--vmax", "6", "--definitive", "--json"
    )
    assert code == EXIT_OK
    rows = json.loads(out)["report"]
    assert [r["v"] for r in rows] == [2, 3, 4, 5, 6]


def test_x2x_and_splice(capsys):
    g1path = "[6, 5, 1, 4, 0, 3, 2]"
    code, out, _ = run(
        capsys, "x2x", "--path", g1path, "--x", "3", "--i", "2", "--json"
    )
    assert code == EXIT_OK
    assert json.loads(out)["multiset"] == "1^2 3^9 6^4"
    demo15 = "[0, 3, 6, 2, 1, 13, 10, 11, 14, 12, 9, 8, 5, 4, 7]"
    code, out, _ = run(
        capsys,
        "splice",
        "--path",
        demo15,
        "--kpath",
        "[0, 2, 1, 3]",
        "--json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["multiset"] == "1^5 2^3 3^8 4"
