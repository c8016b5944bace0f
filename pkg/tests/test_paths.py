import pytest
from hypothesis import given, strategies as st

from activeset import (
    InvalidStep,
    LatticePath,
    PathClass,
    Point,
    SlopeClass,
    UnbalancedPath,
    diag_level,
    format_path,
    parse_path,
    path_class_membership,
    rotate180,
    slope_class,
)
from activeset.enumeration import enumerate_paths
from activeset.paths import is_subdiagonal, is_superdiagonal

from conftest import FIG1_DOMAIN, FIG2_DOMAIN, FIG4_DOMAIN

ALL = {PathClass.GENERAL, PathClass.SUBDIAGONAL, PathClass.DELANNOY, PathClass.SUBDELANNOY}


def test_parse_simple():
    p = parse_path("1,1 1,1")
    assert p.n == 2
    assert p.steps == ((1, 1), (1, 1))


def test_parse_figure1_vertices(fig1):
    assert fig1.n == 12
    assert fig1.vertices == (
        (0, 0), (2, 0), (4, 1), (7, 3), (9, 4), (10, 6),
        (10, 7), (11, 8), (12, 10), (12, 11), (12, 12),
    )


@pytest.mark.parametrize("text", ["0,0 1,1", "1,1 a,1", "1;1", "-1,0 1,1", "1, 1"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(InvalidStep):
        parse_path(text)


def test_parse_rejects_unbalanced():
    with pytest.raises(UnbalancedPath):
        parse_path("2,0 0,1")


def test_format():
    assert format_path(parse_path("1,1 1,1")) == "1,1 1,1"
    fig2 = LatticePath.from_vertices(
        [(0, 0), (3, 0), (5, 0), (6, 5), (9, 7), (10, 7), (11, 10), (12, 11), (12, 12)]
    )
    assert format_path(fig2) == FIG2_DOMAIN


@pytest.mark.parametrize("cls", list(PathClass))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip_text_and_json(n, cls):
    for p in enumerate_paths(n, cls):
        assert parse_path(format_path(p)) == p
        assert LatticePath.from_json(p.to_json()) == p


def test_json_form():
    p = parse_path("2,0 0,2")
    assert p.to_json() == {"steps": [[2, 0], [0, 2]]}
    assert "n" not in p.to_json()


def test_equality_is_by_steps():
    assert parse_path("1,0 0,1") == LatticePath(((1, 0), (0, 1)))
    assert parse_path("1,0 0,1") != parse_path("0,1 1,0")
    assert len({parse_path("1,1"), parse_path("1,1")}) == 1


def test_diag_level():
    assert diag_level(Point(4, 1)) == -3
    assert diag_level((5, 5)) == 0
    assert diag_level((5, 7)) == 2


@pytest.mark.parametrize(
    "a, p, want",
    [
        ((2, 0), (4, 1), SlopeClass.LESS_THAN_ONE),
        ((5, 0), (6, 5), SlopeClass.GEQ_ONE),
        ((3, 3), (3, 3), SlopeClass.GEQ_ONE),
        ((0, 0), (0, 4), SlopeClass.GEQ_ONE),
        ((0, 0), (3, 0), SlopeClass.LESS_THAN_ONE),
        ((1, 1), (3, 3), SlopeClass.GEQ_ONE),
    ],
)
def test_slope_class(a, p, want):
    assert slope_class(a, p) is want


def test_rotate180_examples(fig1):
    assert rotate180(parse_path("2,2")) == parse_path("2,2")
    r = rotate180(parse_path("1,0 1,2"))
    assert r == parse_path("1,2 1,0")
    assert r.vertices == ((0, 0), (1, 2), (2, 2))
    assert rotate180(rotate180(fig1)) == fig1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rotate180_swaps_sub_and_super(n):
    subs = set(enumerate_paths(n, PathClass.SUBDIAGONAL))
    supers = {p for p in enumerate_paths(n, PathClass.GENERAL) if is_superdiagonal(p)}
    assert {rotate180(p) for p in subs} == supers
    for p in enumerate_paths(n, PathClass.GENERAL):
        assert rotate180(rotate180(p)) == p
        assert set(rotate180(p).vertices) == {(n - x, n - y) for x, y in p.vertices}


def test_membership(fig1, fig4):
    assert path_class_membership(fig1) == {PathClass.GENERAL, PathClass.SUBDIAGONAL}
    assert path_class_membership(parse_path("1,1 1,1")) == ALL
    assert path_class_membership(fig4) == {PathClass.GENERAL}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vertices_monotone_and_terminal(n):
    for p in enumerate_paths(n, PathClass.GENERAL):
        vs = p.vertices
        assert vs[0] == (0, 0) and vs[-1] == (n, n)
        assert all(a.x <= b.x and a.y <= b.y and a != b for a, b in zip(vs, vs[1:]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_segment_subdiagonality_follows_from_endpoints(n):
    # every point of a segment between two lattice points below y = x is below
    for p in enumerate_paths(n, PathClass.SUBDIAGONAL):
        assert is_subdiagonal(p)
        for a, b in zip(p.vertices, p.vertices[1:]):
            dx, dy = b.x - a.x, b.y - a.y
            for t in range(0, 11):
                # x, y scaled by 10 to stay in integers
                assert 10 * a.y + t * dy <= 10 * a.x + t * dx


steps = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda s: s != (0, 0))


@given(st.lists(steps, min_size=1, max_size=6))
def test_slope_class_matches_level_drop(seq):
    xs = sum(s[0] for s in seq)
    ys = sum(s[1] for s in seq)
    seq = seq + ([(0, xs - ys)] if xs > ys else [(ys - xs, 0)] if ys > xs else [])
    p = LatticePath(tuple(seq))
    for a, b in zip(p.vertices, p.vertices[1:]):
        lt = slope_class(a, b) is SlopeClass.LESS_THAN_ONE
        assert lt == (diag_level(b) < diag_level(a))
    assert parse_path(format_path(p)) == p
    assert rotate180(rotate180(p)) == p
