from pathlib import Path
import re
import xml.etree.ElementTree as ET

import pytest

from desargues.dsl import execute, parse
from desargues.errors import NotPlottableError
from desargues.line_algebra import ConstructionTrace, Frame, point_add, point_mul
from desargues.svg import render_svg

HERE = Path(__file__).resolve().parent
SCRIPTS = HERE.parent / "scripts"
NS = "{http://www.w3.org/2000/svg}"


def fig4_traces():
    result = execute(parse((SCRIPTS / "fig4.geo").read_text()))
    return [t for _, t in result.traces]


def test_fig4_matches_golden():
    assert render_svg(fig4_traces()) == (HERE / "golden" / "fig4.svg").read_text(encoding="utf-8")


def test_fig4_contents():
    svg = render_svg(fig4_traces())
    root = ET.fromstring(svg)
    titles = [t.text for t in root.iter(f"{NS}title")]
    assert titles[0] == "ℓ" and "ℓ^B_ℓ" in titles
    texts = [t.text for t in root.iter(f"{NS}text")]
    assert "D" in texts and any(t.startswith("E") for t in texts)
    lines = list(root.iter(f"{NS}line"))
    assert lines[0].get("stroke-dasharray") is None
    assert all(l.get("stroke-dasharray") for l in lines[1:])
    assert len([c for c in root.iter(f"{NS}circle") if c.get("class") == "result"]) == 1


def test_fit_keeps_points_inside_margin():
    svg = render_svg(fig4_traces())
    root = ET.fromstring(svg)
    for c in root.iter(f"{NS}circle"):
        x, y = float(c.get("cx")), float(c.get("cy"))
        assert 64 - 1e-9 <= x <= 576 + 1e-9 and 64 - 1e-9 <= y <= 576 + 1e-9


def test_deterministic():
    assert render_svg(fig4_traces()) == render_svg(fig4_traces())


def test_empty_canvas():
    svg = render_svg([])
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "0 0 640 640"
    assert not list(root.iter(f"{NS}circle"))
    assert render_svg(ConstructionTrace("add", None, {}, None)) == svg


def test_gf3_grid(gf):
    m = gf(3)
    f = Frame.through(m.point(0, 0), m.point(1, 0))
    _, trace = point_mul(f, m.point(2, 0), m.point(2, 0))
    svg = render_svg(trace)
    assert svg == (HERE / "golden" / "gf3_mul.svg").read_text(encoding="utf-8")
    root = ET.fromstring(svg)
    grid = root.find(f"{NS}g[@id='grid']")
    assert len(list(grid)) == 9
    for g in root.iter(f"{NS}g"):
        if g.get("class") == "line-points":
            assert len(g.findall(f"{NS}rect")) == 3  # every line of AG(2, 3) has 3 points


def test_quaternion_not_plottable(H):
    f = Frame.through(H.point(0, 0), H.point(1, 0))
    _, trace = point_add(f, H.point(2, 0), H.point(3, 0))
    with pytest.raises(NotPlottableError):
        render_svg(trace)


def test_numbers_are_fixed_precision():
    svg = render_svg(fig4_traces())
    assert not re.search(r"\d\.\d{3,}", svg)
