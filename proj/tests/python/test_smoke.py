import pathlib

import pytest

import lincat

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "dill"


def test_type():
    assert lincat.type_of("delta{X}") == ("!X", "!!X")


def test_normalize_counter():
    r = lincat.normalize("delta{X} ; eps{!X}")
    assert r["rules"] == [2]
    assert r["normal_form"] == "id{!X}"
    assert not r["fuel_exhausted"]


def test_equal():
    assert lincat.equal("delta{X} ; eps{!X}", "delta{X} ; !eps{X}")[0] == "Equal"
    assert lincat.equal("sig{!X,!X}", "id{!X * !X}")[0] == "Distinct"


def test_session_defs_and_measure():
    s = lincat.Session()
    s.load_defs("let d = delta{X} ; dup{!X} ; (id{!!X} * !drop{X})\n")
    assert s.names == ["d"]
    assert s.classify("d") == "strict composite algebraic"
    assert s.measure("d", [3]) == [str(2 ** 10)]
    with pytest.raises(lincat.SessionError):
        s.load_defs("let d = eps{X}\n")


def test_errors():
    with pytest.raises(lincat.ParseError):
        lincat.type_of("delta{X")
    with pytest.raises(lincat.TypeError):
        lincat.type_of("delta{X} ; delta{X}")


def test_theta():
    assert lincat.theta("!(X * !!X)", 1, 3) == str(2 * (1 + 4 * 3))


def test_simulate_sample():
    r = lincat.simulate((DATA / "lifting.dill").read_text())
    assert r["schema"] == "sharp-beta/lifting"
    assert r["equality"] == "Equal"
