import os
import subprocess

import pytest

import tgw


def test_bundled_names():
    assert tgw.structure_names() == ["B2", "Z3", "B2xB2"]
    assert "T2" in tgw.module_names("B2")


def test_check_flags_absorption():
    assert tgw.check("B2")["passed"] is True
    z3 = tgw.check("Z3")
    assert z3["passed"] is False
    assert any(v["law"] == "zero-absorption" for v in z3["violations"])


def test_ideals_and_spectrum():
    assert len(tgw.ideals("B2xB2")) == 4
    assert len(tgw.spectrum("B2xB2")["points"]) == 2


def test_boolean_homology():
    assert tgw.ext1("B2")["ext1"]["structure_tag"] == "trivial"
    assert tgw.tor1("B2")["tor1"]["structure_tag"] == "trivial"
    adj = tgw.adjunction("B2")
    assert adj["lhs"] == adj["rhs"] == 2


def test_embed():
    g = tgw.embed("B2xB2")
    assert g["eigenvalues"] == pytest.approx([0.5, 0.0], abs=1e-12)
    assert "0.250000" in tgw.embed("B2xB2", k=1, format="dot")


def test_errors_map_to_exceptions():
    with pytest.raises(tgw.AxiomError):
        tgw.spectrum("Z3")
    with pytest.raises(tgw.TgwError):
        tgw.embed("B2", k=0)


def test_run_matches_binary():
    code, out, _ = tgw.run(["report", "--lenient"])
    assert code == 0
    binary = os.environ.get("TGW_BINARY")
    if binary:
        proc = subprocess.run([binary, "report", "--lenient"], capture_output=True, text=True)
        assert proc.stdout == out
