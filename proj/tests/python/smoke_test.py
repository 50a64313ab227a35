#!/usr/bin/env python3
"""Smoke tests for the covergrid python module."""
import sys
from fractions import Fraction

import covergrid as cg


def frac(s):
    return Fraction(s)


def test_generators():
    g = cg.make_halfrect(3, 5)
    assert g.kind == "halfrect"
    assert g.size == 9
    assert g.vertex() == (0, 0)

    c = cg.make_conical(4, 7)
    assert c.size == 10
    assert cg.make_conical(4, 7).points() == c.points()

    g3 = cg.make_generic3(2, 5)
    assert g3.size == 10
    ok, witness = cg.check_generic3(g3)
    assert ok and witness == []

    full = cg.make_fullgrid([0, 1, 2], [0, 1, 2])
    ok2, witness2 = cg.check_generic2(full)
    assert not ok2 and len(witness2) == 3


def test_json_round_trip():
    g = cg.make_generic2(4, 1)
    j = g.to_json()
    back = cg.grid_from_json(j)
    assert back.to_json() == j
    assert back.hash() == g.hash()


def test_cov_and_verify():
    g = cg.make_fullgrid(["0", "1"], ["0", "1"])
    r = cg.cov(g, k=1, missing="vertex")
    assert r["value"] == 2
    report = cg.verify_cover(g, r["cover"], k=1, missing="vertex")
    assert report["ok"]

    lp = cg.cov_lp(g, k=1, missing="vertex")
    assert frac(lp["lp_value"]) == Fraction(3, 2)
    wr = cg.check_weighting(g, lp["weighting"], k=1)
    assert wr["ok"] and frac(wr["objective"]) == Fraction(3, 2)

    s = cg.make_simplex(4)
    assert cg.cov(s, k=2, missing="vertex")["value"] == 6


def test_constructions():
    g = cg.make_halfrect(3, 5)
    rep = cg.construct(g, "halfrect", k=1, point=(1, 1))
    assert rep["verified"]
    assert rep["actual_size"] == 3

    g2 = cg.make_generic2(5, 1)
    rep2 = cg.construct(g2, "generic2", k=1)
    assert rep2["verified"]
    assert rep2["actual_size"] == 7


def test_certificates():
    g = cg.make_generic2(5, 1)
    cert = cg.certify(g, k=2)
    assert cert["feasibility"]["ok"]
    assert frac(cert["feasibility"]["objective"]) == Fraction(3 * 5 * 2, 2) - 4

    g3 = cg.make_generic3(3, 5)
    lit = cg.certify(g3, k=3, literal=True)
    assert not lit["feasibility"]["ok"]

    assert cg.lemma_opt_bound([1, 2, 3], 1) == "3"
    assert cg.lemma_bound([1, 2, 3], 1, 2, 2) == "7/3"
    assert cg.halfgrid_profile(3, 3) == [1, 2, 3]
    assert abs(cg.conical_closed_form(10, 1) - 5.1325897654550) < 1e-9

    bounds = cg.bound_report(cg.make_conical(3, 3), 1, with_ilp=True)
    methods = {b["method"] for b in bounds}
    assert "lemma_opt_bound" in methods and "cov" in methods


def test_errors():
    try:
        cg.make_halfrect(1, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print(f"{len(tests)} python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
