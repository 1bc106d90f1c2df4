import json

import pytest

import singcat


def test_check(fixtures):
    r = singcat.check(fixtures / "A.alg")
    assert r.exit_code == 0
    assert r.report["result"]["dim"] == 7
    assert r.report["tool"] == "singcat"


def test_resolve_simple_and_injective(fixtures):
    s2 = singcat.resolve(fixtures / "A.alg", simple="2")
    assert s2.report["result"]["proj_dim"]["verdict"] == "Finite(1)"
    i2 = singcat.resolve(fixtures / "A.alg", injective="2")
    assert i2.report["result"]["proj_dim"]["kind"] == "InfiniteCertified"


def test_resolve_needs_one_selector(fixtures):
    with pytest.raises(ValueError):
        singcat.resolve(fixtures / "A.alg")
    with pytest.raises(ValueError):
        singcat.resolve(fixtures / "A.alg", simple="1", injective="1")


def test_gorenstein(fixtures):
    assert singcat.gorenstein(fixtures / "A.alg").report["result"]["verdict"] == "NotGorenstein"
    assert singcat.gorenstein(fixtures / "Adoubleprime.alg").report["result"]["verdict"] == "Gorenstein(1)"
    assert singcat.gorenstein(fixtures / "dualnum.alg", field=101).report["characteristic"] == 101


def test_schur(fixtures):
    r = singcat.schur(fixtures / "A.alg", ["1"], corner_ref=fixtures / "dualnum.alg")
    assert r.exit_code == 0
    assert r.report["result"]["report"]["status"] == "established"
    assert "K-mod-like" in r.text


def test_triangular_and_verify(fixtures, tmp_path):
    r = singcat.triangular("upper", fixtures / "K.alg", fixtures / "dualnum.alg", fixtures / "Aprime_M.bim",
                           reference=fixtures / "Aprime.alg")
    assert r.report["result"]["gorenstein"]["verdict"] == "NotGorenstein"
    saved = tmp_path / "report.json"
    saved.write_text(json.dumps(r.report))
    v = singcat.verify(saved)
    assert v.exit_code == 0
    assert v.report["result"]["certificates"] >= 1


def test_bad_input(fixtures, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text('[quiver]\nvertices = ["1"]\narrows = [["a", "1", "1"]]\n[relations]\nrelations = ["a*q"]\n')
    r = singcat.check(bad)
    assert r.exit_code == 2
    assert "error" in r.report
    with pytest.raises(ValueError):
        singcat.triangular("sideways", fixtures / "K.alg", fixtures / "K.alg", fixtures / "zero.bim")
