"""Deactivation of active lines and its inverse.

``deactivate_sub`` / ``activate_sub`` act on subdiagonal paths;
``deactivate_gen`` / ``activate_gen`` extend them to every path through a
five-way case split, two of whose branches are computed by conjugating with
the 180 degree rotation.  ``encode`` / ``decode`` chain the single-line maps
into the correspondence

    path  <->  (active set, Delannoy path of the same class).

Every map works on the vertex list: delete or insert the vertex on ``x = k``
and shift a contiguous block of later vertices vertically.  Each call also
returns a :class:`DeactivationTrace` naming the vertices involved; a trace is
always expressed in terms of the *domain* path (the one where ``k`` is
active), so deactivating and then re-activating yields equal traces.

Notation used in comments: ``lv(X)`` is the diagonal level ``y - x`` of X,
``L_X`` is the slope-1 line through X.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

from .active import DEFAULT_READING, LineSet, active_set, active_vertex
from .errors import (
    InternalAssertion,
    InvalidInput,
    LineNotActive,
    LineNotInactive,
    LineOutOfRange,
    NotSubdiagonal,
)
from .paths import (
    LatticePath,
    PathClass,
    Point,
    SlopeClass,
    diag_level,
    is_delannoy,
    is_subdiagonal,
    rotate180,
    slope_class,
)


class Case(enum.IntEnum):
    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    CASE4 = 4
    CASE5 = 5


@dataclass(frozen=True)
class FTildeCase:
    case: Case
    subcase: Optional[SlopeClass] = None

    def __post_init__(self) -> None:
        if self.case is Case.CASE5 and self.subcase is not None:
            raise InvalidInput("case 5 has no slope subcase")

    def __str__(self) -> str:
        if self.subcase is None:
            return f"case{int(self.case)}"
        return f"case{int(self.case)}/{self.subcase.value}"

    def to_json(self) -> dict:
        return {
            "case": int(self.case),
            "subcase": None if self.subcase is None else self.subcase.value,
        }


@dataclass(frozen=True)
class DeactivationTrace:
    """Vertices involved in one application, in domain-path coordinates.

    ``lowered_range`` is a half-open index interval into the domain path's
    vertex list; those vertices move by ``h`` (down under deactivation, up
    under activation; for rotated cases the direction is reversed in the
    unrotated frame, see ``rotated``).
    """

    k: int
    case: FTildeCase
    P: Point
    A: Point
    B: Point
    B_prime: Optional[Point]
    Q: Optional[Point]
    h: int
    lowered_range: tuple[int, int]
    rotated: bool = False

    def to_json(self) -> dict:
        pt = lambda v: None if v is None else [v[0], v[1]]  # noqa: E731
        return {
            "k": self.k,
            "case": self.case.to_json(),
            "P": pt(self.P),
            "A": pt(self.A),
            "B": pt(self.B),
            "B_prime": pt(self.B_prime),
            "Q": pt(self.Q),
            "h": self.h,
            "lowered_range": list(self.lowered_range),
            "rotated": self.rotated,
        }


# ---------------------------------------------------------------------------
# vertex-list helpers


def _shift(verts: list[Point], lo: int, hi: int, dy: int) -> list[Point]:
    return [
        Point(v.x, v.y + dy) if lo <= i < hi else v for i, v in enumerate(verts)
    ]


def _rebuild(verts: list[Point], what: str) -> LatticePath:
    try:
        return LatticePath.from_vertices(verts)
    except InvalidInput as exc:
        raise InternalAssertion(f"{what} produced an invalid vertex list: {exc}") from exc


def _check_line(path: LatticePath, k: int) -> None:
    if not 1 <= k <= path.n - 1:
        raise LineOutOfRange(f"line x={k} is not interior for n={path.n}")


def _rot_point(v: Point, n: int) -> Point:
    return Point(n - v.x, n - v.y)


def _rotate_trace(t: DeactivationTrace, n: int, nverts: int) -> DeactivationTrace:
    """Map a trace computed on the rotated path back to the original frame.

    Rotation reverses traversal, so the rotated predecessor of P is the
    original successor and vice versa.
    """
    lo, hi = t.lowered_range
    rp = lambda v: None if v is None else _rot_point(v, n)  # noqa: E731
    return DeactivationTrace(
        k=n - t.k,
        case=t.case,
        P=rp(t.P),
        A=rp(t.B),
        B=rp(t.A),
        B_prime=rp(t.B_prime),
        Q=rp(t.Q),
        h=t.h,
        lowered_range=(nverts - hi, nverts - lo),
        rotated=not t.rotated,
    )


def _first_after(levels: list[int], start: int, pred) -> int:
    """Index of the first vertex at index >= start whose level satisfies pred."""
    j = start
    while not pred(levels[j]):
        j += 1
    return j


# ---------------------------------------------------------------------------
# forward (deactivation) branches on the unrotated frame


def _deactivate_lt1(
    path: LatticePath, k: int, i: int, case: Case
) -> tuple[LatticePath, DeactivationTrace]:
    # slope AP < 1: P is strictly below y = x and starts a balanced
    # subdiagonal run; Q is the first vertex to rise strictly above L_P
    verts = list(path.vertices)
    levels = [diag_level(v) for v in verts]
    P, A, B = verts[i], verts[i - 1], verts[i + 1]
    lp = levels[i]
    j = _first_after(levels, i + 1, lambda lv: lv > lp)
    block = levels[i + 1 : j]
    if not block or max(block) != lp:
        raise InternalAssertion(
            f"no return to L_P between P={tuple(P)} and Q={tuple(verts[j])} "
            f"on path {path}, line {k}"
        )
    h = B.y - P.y
    out = _shift(verts, i + 1, j, -h)
    del out[i]
    trace = DeactivationTrace(
        k, FTildeCase(case, SlopeClass.LESS_THAN_ONE), P, A, B,
        Point(k, B.y - h), verts[j], h, (i + 1, j),
    )
    return _rebuild(out, "deactivation"), trace


def _deactivate_geq1(
    path: LatticePath, k: int, i: int
) -> tuple[LatticePath, DeactivationTrace]:
    # slope AP >= 1 (A, P, B weakly below y = x): Q is the first vertex after
    # P back on or above L_P; the block in between drops to L_A's height
    verts = list(path.vertices)
    levels = [diag_level(v) for v in verts]
    P, A, B = verts[i], verts[i - 1], verts[i + 1]
    lp, la = levels[i], levels[i - 1]
    j = _first_after(levels, i + 1, lambda lv: lv >= lp)
    h = lp - la
    out = _shift(verts, i + 1, j, -h)
    del out[i]
    b_prime = Point(k, B.y - h if j > i + 1 else B.y)
    trace = DeactivationTrace(
        k, FTildeCase(Case.CASE1, SlopeClass.GEQ_ONE), P, A, B,
        b_prime, verts[j], h, (i + 1, j),
    )
    return _rebuild(out, "deactivation"), trace


def _deactivate_case5(
    path: LatticePath, k: int, i: int
) -> tuple[LatticePath, DeactivationTrace]:
    verts = list(path.vertices)
    P, A, B = verts[i], verts[i - 1], verts[i + 1]
    out = verts[:i] + verts[i + 1 :]
    trace = DeactivationTrace(
        k, FTildeCase(Case.CASE5), P, A, B, Point(k, B.y), None, 0, (i + 1, i + 1)
    )
    return _rebuild(out, "deactivation"), trace


def _domain_case(la: int, lp: int, lb: int) -> Case:
    if la <= 0 and lp <= 0 and lb <= 0:
        return Case.CASE1
    if la >= 0 and lp >= 0 and lb >= 0:
        return Case.CASE2
    if la > 0 and lp < 0:
        return Case.CASE3
    if lp > 0 and lb < 0:
        return Case.CASE4
    if lp == 0 and la * lb < 0:
        return Case.CASE5
    raise InternalAssertion(f"levels A={la} P={lp} B={lb} fit none of the five cases")


def _require_active(path: LatticePath, k: int):
    _check_line(path, k)
    found = active_vertex(path, k, DEFAULT_READING)
    if found is None:
        raise LineNotActive(f"line x={k} is not active for {path}")
    return found


def _require_inactive(path: LatticePath, k: int) -> None:
    _check_line(path, k)
    if active_vertex(path, k, DEFAULT_READING) is not None:
        raise LineNotInactive(f"line x={k} is already active for {path}")


def _deactivate_unrotated(
    path: LatticePath, k: int, i: int, case: Case
) -> tuple[LatticePath, DeactivationTrace]:
    verts = path.vertices
    if case is Case.CASE1:
        if slope_class(verts[i - 1], verts[i]) is SlopeClass.LESS_THAN_ONE:
            return _deactivate_lt1(path, k, i, Case.CASE1)
        return _deactivate_geq1(path, k, i)
    if case is Case.CASE3:
        return _deactivate_lt1(path, k, i, Case.CASE3)
    if case is Case.CASE5:
        return _deactivate_case5(path, k, i)
    raise InternalAssertion(f"{case!r} has no unrotated branch")


def deactivate_gen(path: LatticePath, k: int) -> tuple[LatticePath, DeactivationTrace]:
    """Make line ``k`` inactive without touching any other line's status."""
    finding = _require_active(path, k)
    i = finding.index
    verts = path.vertices
    la, lp, lb = (diag_level(verts[t]) for t in (i - 1, i, i + 1))
    case = _domain_case(la, lp, lb)
    if case in (Case.CASE1, Case.CASE3, Case.CASE5):
        return _deactivate_unrotated(path, k, i, case)

    n = path.n
    rot = rotate180(path)
    ri = len(verts) - 1 - i
    target = Case.CASE1 if case is Case.CASE2 else Case.CASE3
    rv = rot.vertices
    rcase = _domain_case(*(diag_level(rv[t]) for t in (ri - 1, ri, ri + 1)))
    if rcase is not target and not (target is Case.CASE1 and la == lp == lb == 0):
        raise InternalAssertion(
            f"rotated {case.name} landed in {rcase.name}, expected {target.name}"
        )
    image, t = _deactivate_unrotated(rot, n - k, ri, target)
    t = _rotate_trace(t, n, len(verts))
    t = replace(t, case=FTildeCase(case, t.case.subcase))
    return rotate180(image), t


def deactivate_sub(path: LatticePath, k: int) -> tuple[LatticePath, DeactivationTrace]:
    if not is_subdiagonal(path):
        raise NotSubdiagonal(f"{path} rises above y=x")
    finding = _require_active(path, k)
    image, trace = _deactivate_unrotated(path, k, finding.index, Case.CASE1)
    if not is_subdiagonal(image):
        raise InternalAssertion(f"deactivating line {k} of {path} left the subdiagonal class")
    return image, trace


# ---------------------------------------------------------------------------
# image side: case table and inverse branches


def _image_neighbours(path: LatticePath, k: int) -> tuple[int, int]:
    """Indices of the last vertex before and first vertex after (k, k).

    Vertices of a path are strictly increasing in (x, y) order, so this is a
    single scan.
    """
    verts = path.vertices
    b = 0
    while verts[b] < (k, k):
        b += 1
    if verts[b] == (k, k):
        raise LineNotInactive(f"({k},{k}) is a vertex of {path}")
    return b - 1, b


def _image_case(la: int, lb: int, ya: int, yb: int, k: int) -> Case:
    if la <= 0 and lb <= 0:
        return Case.CASE1
    if la >= 0 and lb >= 0:
        return Case.CASE2
    if la < 0 < lb:
        return Case.CASE5
    # A strictly above y = x, B strictly below
    if ya < k and yb < k:
        return Case.CASE3
    if ya > k and yb > k:
        return Case.CASE4
    return Case.CASE5


def classify_image_case(path: LatticePath, k: int) -> FTildeCase:
    """Which deactivation case would have produced this (path, inactive k)."""
    _require_inactive(path, k)
    ia, ib = _image_neighbours(path, k)
    verts = path.vertices
    A, B = verts[ia], verts[ib]
    case = _image_case(diag_level(A), diag_level(B), A.y, B.y, k)
    if case is Case.CASE5:
        return FTildeCase(case)
    if case in (Case.CASE2, Case.CASE4):
        rot = rotate180(path)
        rk = path.n - k
        ra, rb = _image_neighbours(rot, rk)
        rv = rot.vertices
        sub = slope_class(rv[ra], Point(rk, rv[rb].y))
        return FTildeCase(case, sub)
    return FTildeCase(case, slope_class(A, Point(k, B.y)))


def _activate_lt1(
    path: LatticePath, k: int, ia: int, ib: int, case: Case
) -> tuple[LatticePath, DeactivationTrace]:
    verts = list(path.vertices)
    levels = [diag_level(v) for v in verts]
    A, B = verts[ia], verts[ib]
    bp = Point(k, B.y)
    lbp = diag_level(bp)
    j = _first_after(levels, ib, lambda lv: lv > lbp)
    # the raised block must peak exactly on L_P, which pins down h
    h = lbp - max(levels[ib:j])
    out = _shift(verts, ib, j, h)
    out.insert(ib, bp)
    trace = DeactivationTrace(
        k, FTildeCase(case, SlopeClass.LESS_THAN_ONE), bp, A, out[ib + 1],
        bp, verts[j], h, (ib + 1, j + 1),
    )
    return _rebuild(out, "activation"), trace


def _activate_geq1(
    path: LatticePath, k: int, ia: int, ib: int
) -> tuple[LatticePath, DeactivationTrace]:
    verts = list(path.vertices)
    levels = [diag_level(v) for v in verts]
    A, B = verts[ia], verts[ib]
    la = levels[ia]
    j = _first_after(levels, ib, lambda lv: lv >= la)
    h = min(levels[j], 0) - la
    P = Point(k, k + la + h)
    out = _shift(verts, ib, j, h)
    out.insert(ib, P)
    trace = DeactivationTrace(
        k, FTildeCase(Case.CASE1, SlopeClass.GEQ_ONE), P, A, out[ib + 1],
        Point(k, B.y), verts[j], h, (ib + 1, j + 1),
    )
    return _rebuild(out, "activation"), trace


def _activate_case5(
    path: LatticePath, k: int, ia: int, ib: int
) -> tuple[LatticePath, DeactivationTrace]:
    verts = list(path.vertices)
    P = Point(k, k)
    out = verts[:ib] + [P] + verts[ib:]
    trace = DeactivationTrace(
        k, FTildeCase(Case.CASE5), P, verts[ia], verts[ib], Point(k, verts[ib].y),
        None, 0, (ib + 1, ib + 1),
    )
    return _rebuild(out, "activation"), trace


def _activate_unrotated(
    path: LatticePath, k: int, case: Case
) -> tuple[LatticePath, DeactivationTrace]:
    ia, ib = _image_neighbours(path, k)
    verts = path.vertices
    if case is Case.CASE5:
        return _activate_case5(path, k, ia, ib)
    if case is Case.CASE3:
        return _activate_lt1(path, k, ia, ib, Case.CASE3)
    if case is Case.CASE1:
        if slope_class(verts[ia], Point(k, verts[ib].y)) is SlopeClass.LESS_THAN_ONE:
            return _activate_lt1(path, k, ia, ib, Case.CASE1)
        return _activate_geq1(path, k, ia, ib)
    raise InternalAssertion(f"{case!r} has no unrotated inverse")


def activate_gen(path: LatticePath, k: int) -> tuple[LatticePath, DeactivationTrace]:
    """Inverse of :func:`deactivate_gen`: make the inactive line ``k`` active."""
    _require_inactive(path, k)
    case = classify_image_case(path, k).case
    if case in (Case.CASE1, Case.CASE3, Case.CASE5):
        return _activate_unrotated(path, k, case)

    n = path.n
    rot = rotate180(path)
    target = Case.CASE1 if case is Case.CASE2 else Case.CASE3
    rcase = classify_image_case(rot, n - k).case
    if rcase is not target:
        raise InternalAssertion(
            f"rotated image of {case.name} classified as {rcase.name}, expected {target.name}"
        )
    image, t = _activate_unrotated(rot, n - k, target)
    t = _rotate_trace(t, n, len(image.vertices))
    t = replace(t, case=FTildeCase(case, t.case.subcase))
    return rotate180(image), t


def activate_as(path: LatticePath, k: int, case: Case) -> LatticePath:
    """Invert assuming the image came from ``case`` (1 or 2 only).

    Used to confirm that the two inverse branches agree on the one image
    configuration the case table assigns to both, A and B on ``y = x``.
    """
    _require_inactive(path, k)
    if case is Case.CASE1:
        return _activate_unrotated(path, k, Case.CASE1)[0]
    if case is Case.CASE2:
        rot = rotate180(path)
        return rotate180(_activate_unrotated(rot, path.n - k, Case.CASE1)[0])
    raise InvalidInput("only cases 1 and 2 overlap")


def activate_sub(path: LatticePath, k: int) -> tuple[LatticePath, DeactivationTrace]:
    if not is_subdiagonal(path):
        raise NotSubdiagonal(f"{path} rises above y=x")
    _require_inactive(path, k)
    image, trace = _activate_unrotated(path, k, Case.CASE1)
    if not is_subdiagonal(image):
        raise InternalAssertion(f"activating line {k} of {path} left the subdiagonal class")
    if active_vertex(image, k, DEFAULT_READING) is None:
        raise InternalAssertion(f"activating line {k} of {path} did not make it active")
    return image, trace


# ---------------------------------------------------------------------------
# whole-path correspondence


def maps_for(cls: PathClass):
    """(deactivate, activate, subdiagonal?) for a path class."""
    if cls is PathClass.SUBDIAGONAL or cls is PathClass.SUBDELANNOY:
        return deactivate_sub, activate_sub, True
    if cls is PathClass.GENERAL or cls is PathClass.DELANNOY:
        return deactivate_gen, activate_gen, False
    raise InvalidInput(f"unsupported class {cls!r}")


def encode(
    path: LatticePath, cls: PathClass = PathClass.GENERAL, descending: bool = False
) -> tuple[LineSet, LatticePath]:
    """Record the active set, then activate every inactive line."""
    _, activate, sub = maps_for(cls)
    if sub and not is_subdiagonal(path):
        raise NotSubdiagonal(f"{path} rises above y=x")
    s = active_set(path, DEFAULT_READING)
    todo = s.complement()
    if descending:
        todo.reverse()
    cur = path
    for k in todo:
        cur, _ = activate(cur, k)
    if not is_delannoy(cur) or (sub and not is_subdiagonal(cur)):
        raise InternalAssertion(f"encoding {path} ended at non-Delannoy {cur}")
    return s, cur


def decode(
    s: LineSet,
    delannoy: LatticePath,
    cls: PathClass = PathClass.GENERAL,
    descending: bool = True,
) -> LatticePath:
    """Deactivate every line outside ``s`` of a Delannoy path."""
    deactivate, _, sub = maps_for(cls)
    if not is_delannoy(delannoy):
        raise InvalidInput(f"{delannoy} is not a Delannoy path")
    if sub and not is_subdiagonal(delannoy):
        raise InvalidInput(f"{delannoy} is not subdiagonal")
    if s.n != delannoy.n:
        raise InvalidInput(f"line set is for n={s.n}, path has n={delannoy.n}")
    todo = s.complement()
    if descending:
        todo.reverse()
    cur = delannoy
    for k in todo:
        cur, _ = deactivate(cur, k)
    return cur
