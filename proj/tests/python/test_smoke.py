import json
from fractions import Fraction

import pytest

import lplab


def test_grid_census():
    for k in range(2, 8):
        assert lplab.census(lplab.grid(k), "inf")["distinct_count"] == k - 1


def test_rows_census():
    pts = lplab.row_construction(5)
    assert len({x for x, _ in pts}) == 25
    assert lplab.census(pts, "inf", threads=2)["distinct_count"] == 8


def test_histogram_keys_are_exact():
    report = lplab.census([(0, 0), (Fraction(1, 3), 1)], "p:3")
    assert report["histogram"] == [["28/27", 1]]


def test_rotation():
    pts = lplab.random_points(40, 3, box=(-5, 5, -5, 5), denom=4)
    a = lplab.census(pts, "p:1")["histogram"]
    b = lplab.census(lplab.l1_to_linf(pts), "inf")["histogram"]
    assert a == b


def test_bisector():
    b = lplab.bisector((0, 0), (3, 1), 3, inflections=True)
    assert b["kind"] == "curve"
    assert b["regions_intersected"] == 5
    assert b["monotone"]
    assert len(b["inflections"]) == 3
    assert lplab.bisector((0, 0), (2, 2), 3)["kind"] == "line"


def test_errors_carry_kind():
    with pytest.raises(lplab.LplabError) as info:
        lplab.bisector((0, 0), (0, 0), 3)
    assert info.value.kind == "DegenerateInput"
    with pytest.raises(lplab.LplabError):
        lplab.census(lplab.grid(3), "p:0")


def test_circle_graph():
    pts = [(0, 0), (5, 0), (0, 5), (-3, -4), (6, 1), (6, 6), (1, 1), (11, 1)]
    r = lplab.circle_graph(pts, 2)
    assert r["circles"] == 2 and r["e"] == 6
    assert 1 <= r["cr"] <= r["upper_bound"]
    with pytest.raises(lplab.LplabError) as info:
        lplab.circle_graph(lplab.grid(4), 3)
    assert info.value.kind == "DegeneratePosition"


def test_structure():
    r = lplab.structure(lplab.grid(6))
    assert r["surviving_fraction"] == "1"
    assert len(r["parts"]) == 1


def test_gap_fit_and_energy():
    g = lplab.gap_fit([Fraction(1, 2) + 3 * i for i in range(10)], 1)
    assert g["dimension"] == 1 and g["sizes"] == [10]
    assert lplab.gap_fit([0, 1, 10, 11, 20, 21], 1, 8) is None
    e = lplab.energy([0, 1, 3, 7])
    assert e["energy"] == 2 * 16 - 4


def test_svg_and_cli(tmp_path):
    svg = lplab.render_svg(lplab.grid(3), cover=True)
    assert svg.count("<circle") == 9 and svg.count("<line") == 3
    assert svg == lplab.render_svg(lplab.grid(3), cover=True)
    out = tmp_path / "g.json"
    assert lplab.run_cli("generate", "--kind", "grid", "--k", 3, "--out", out)[0] == 0
    code, text, _ = lplab.run_cli("census", "--metric", "inf", "--in", out)
    assert code == 0 and json.loads(text)["report"]["distinct_count"] == 2
    assert lplab.run_cli("census", "--metric", "p:0", "--in", out)[0] == 2
