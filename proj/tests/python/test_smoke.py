from fractions import Fraction

import pytest

import leibniz


def test_catalog_and_build():
    keys = leibniz.catalog_keys()
    assert "R5" in keys and "RL3" in keys
    a = leibniz.build("R2", 5, alpha="1/2")
    assert a.name == "R2(5,alpha=1/2)"
    assert a.dim == 6
    assert a.basis[-1] == "x"
    assert a.nilradical == [1, 2, 3, 4, 5]
    assert (2, 1, 3, Fraction(1)) in a.brackets
    assert (2, 6, 2, Fraction(3, 2)) in a.brackets


def test_structure_checks():
    nf = leibniz.from_name("NF(4)")
    assert leibniz.is_leibniz(nf)
    assert leibniz.lower_central_dims(nf) == [4, 3, 2, 1, 0]
    assert leibniz.derived_dims(nf) == [4, 3, 0]
    assert leibniz.is_nilpotent(nf)
    assert not leibniz.is_nilpotent(leibniz.from_name("RNF(4)"))


def test_defects_from_json():
    text = '{"dim": 3, "brackets": [' \
           '{"i": 1, "j": 1, "k": 2, "c": "1"}, {"i": 2, "j": 1, "k": 3, "c": "1"},' \
           '{"i": 1, "j": 2, "k": 3, "c": "1"}]}'
    a = leibniz.from_json(text)
    assert leibniz.leibniz_defects(a) == [(1, 1, 1)]


def test_json_round_trip():
    a = leibniz.from_name("R5(6,a4=1)")
    b = leibniz.from_json(a.to_json())
    assert b.brackets == a.brackets
    assert b.name == a.name


def test_cohomology():
    r3 = leibniz.from_name("R3(5)")
    assert leibniz.derivation_dim(r3) == 3
    dims = leibniz.cohomology_dims(r3)
    assert dims == {"der": 3, "zl2": 34, "bl2": 33, "hl2": 1}
    assert leibniz.representative_is_cocycle(r3, "R3", 5, "xi")


def test_invariants():
    assert leibniz.c11(leibniz.from_name("RNF(4)")) == Fraction(10, 3)
    assert leibniz.c11(leibniz.from_name("NF(4)")) is None
    assert leibniz.cij(leibniz.from_name("RNF(4)"), 1, 1) == Fraction(10, 3)
    assert leibniz.orbit_dim(leibniz.from_name("RNF(3)")) == 14


def test_degeneration():
    rep = leibniz.degeneration_report(leibniz.from_name("R1(5)"), leibniz.from_name("R3(5)"))
    assert rep["verdict"] == "ruled_out"
    assert "c11" in rep["reasons"]
    fixtures = leibniz.builtin_fixtures(5)
    assert len(fixtures) == 6
    assert all(v == "verified" for _, v in fixtures)


def test_errors():
    with pytest.raises(leibniz.LeibnizError, match="BadParams"):
        leibniz.build("R2", 5)
    with pytest.raises(leibniz.LeibnizError, match="ParseError"):
        leibniz.from_name("R2(5")


def test_cli():
    code, out, _ = leibniz.cli(["invariant", "c11", "RNF(4)"])
    assert code == 0 and out == "10/3\n"
    code, _, err = leibniz.cli(["nope"])
    assert code == 2
