import xml.etree.ElementTree as ET

import pytest

from activeset import InvalidInput, deactivate_gen, parse_path
from activeset.render import RenderOptions, render

from conftest import FIG2_DOMAIN, FIG2_IMAGE


def test_ascii_grid_with_highlight():
    out = render(parse_path("1,1 1,1"), RenderOptions("ascii", highlight=1))
    rows = out.splitlines()
    grid = rows[:3]
    assert len(grid) == 3
    assert sum(r.count("o") for r in grid) == 3
    # x = 1 column: vertex (1,1) plus highlight marks at y = 0, 2
    assert [r.split()[2] for r in grid] == ["|", "o", "|"]


def test_svg_figure2_labels():
    path = parse_path(FIG2_DOMAIN)
    _, trace = deactivate_gen(path, 6)
    svg = render(path, RenderOptions("svg", highlight=6, show_trace=True), trace)
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    labels = {t.text: t.get("data-point") for t in root.iter(ns + "text")}
    assert labels == {"P": "6,5", "A": "5,0", "B": "9,7", "Q": "11,10"}
    highlight = [e for e in root.iter(ns + "line") if e.get("class") == "highlight"]
    assert highlight[0].get("stroke") == "red"


def test_svg_image_labels_and_inactive_colour():
    path = parse_path(FIG2_DOMAIN)
    image, trace = deactivate_gen(path, 6)
    assert image == parse_path(FIG2_IMAGE)
    svg = render(image, RenderOptions("svg", highlight=6, show_trace=True), trace)
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    labels = {t.text: t.get("data-point") for t in root.iter(ns + "text")}
    assert labels == {"A": "5,0", "B": "9,3", "B'": "6,3", "Q": "11,10"}
    line = [e for e in root.iter(ns + "line") if e.get("class") == "highlight"][0]
    assert line.get("stroke") == "blue"


@pytest.mark.parametrize("fmt", ["ascii", "svg"])
def test_deterministic(fmt):
    path = parse_path(FIG2_DOMAIN)
    _, trace = deactivate_gen(path, 6)
    opts = RenderOptions(fmt, 6, True)
    assert render(path, opts, trace) == render(path, opts, trace)


def test_highlight_out_of_range():
    with pytest.raises(InvalidInput):
        render(parse_path("1,1 1,1"), RenderOptions("ascii", highlight=2))
    with pytest.raises(InvalidInput):
        render(parse_path("1,1 1,1"), RenderOptions("png"))
