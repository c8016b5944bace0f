"""Lattice paths from (0,0) to (n,n) with arbitrary nonnegative steps.

A path is stored as its step sequence; vertices are derived.  All geometry
is exact integer arithmetic.  The *diagonal level* of a point ``(x, y)`` is
``y - x``: two points lie on a common slope-1 line iff their levels agree,
and a point is below ``y = x`` iff its level is negative.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInput, InvalidStep, UnbalancedPath


class Step(NamedTuple):
    dx: int
    dy: int


class Point(NamedTuple):
    x: int
    y: int


class PathClass(enum.Enum):
    GENERAL = "general"
    SUBDIAGONAL = "subdiagonal"
    DELANNOY = "delannoy"
    SUBDELANNOY = "subdelannoy"

    @property
    def subdiagonal(self) -> bool:
        return self in (PathClass.SUBDIAGONAL, PathClass.SUBDELANNOY)

    @property
    def delannoy(self) -> bool:
        return self in (PathClass.DELANNOY, PathClass.SUBDELANNOY)

    @property
    def delannoy_variant(self) -> PathClass:
        """The unit-step class whose size is the uniform per-subset count."""
        return PathClass.SUBDELANNOY if self.subdiagonal else PathClass.DELANNOY

    @property
    def general_variant(self) -> PathClass:
        return PathClass.SUBDIAGONAL if self.subdiagonal else PathClass.GENERAL


class SlopeClass(enum.Enum):
    LESS_THAN_ONE = "lt1"
    GEQ_ONE = "geq1"


UNIT_STEPS = frozenset({Step(1, 0), Step(0, 1), Step(1, 1)})

_TOKEN = re.compile(r"^(\d+),(\d+)$")


@dataclass(frozen=True)
class LatticePath:
    """Immutable step sequence ending on the diagonal.

    Two paths are equal iff their step lists are equal.
    """

    steps: tuple[Step, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        steps = tuple(Step(int(dx), int(dy)) for dx, dy in self.steps)
        if not steps:
            raise InvalidInput("a path needs at least one step")
        for s in steps:
            if s.dx < 0 or s.dy < 0 or (s.dx == 0 and s.dy == 0):
                raise InvalidStep(f"illegal step {s.dx},{s.dy}")
        sx = sum(s.dx for s in steps)
        sy = sum(s.dy for s in steps)
        if sx != sy:
            raise UnbalancedPath(f"path ends at ({sx},{sy}), off the diagonal")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "n", sx)

    @classmethod
    def from_vertices(cls, vertices: Sequence[tuple[int, int]]) -> LatticePath:
        if not vertices or tuple(vertices[0]) != (0, 0):
            raise InvalidInput("vertex list must start at the origin")
        steps = [
            (b[0] - a[0], b[1] - a[1]) for a, b in zip(vertices, vertices[1:])
        ]
        return cls(tuple(steps))

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        x = y = 0
        out = [Point(0, 0)]
        for dx, dy in self.steps:
            x += dx
            y += dy
            out.append(Point(x, y))
        return tuple(out)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_path(self)

    def to_json(self) -> dict:
        return {"steps": [[s.dx, s.dy] for s in self.steps]}

    @classmethod
    def from_json(cls, obj: dict) -> LatticePath:
        try:
            return cls(tuple(tuple(s) for s in obj["steps"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"malformed path JSON: {obj!r}") from exc


def parse_path(text: str) -> LatticePath:
    """Parse whitespace-separated ``dx,dy`` tokens, e.g. ``"2,0 0,2"``."""
    steps = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise InvalidStep(f"malformed step token {tok!r}")
        steps.append((int(m.group(1)), int(m.group(2))))
    return LatticePath(tuple(steps))


def format_path(path: LatticePath) -> str:
    return " ".join(f"{s.dx},{s.dy}" for s in path.steps)


def diag_level(v: tuple[int, int]) -> int:
    return v[1] - v[0]


def slope_class(a: tuple[int, int], p: tuple[int, int]) -> SlopeClass:
    # slope < 1 iff dy < dx; a == p and vertical segments count as >= 1
    if p[1] - a[1] < p[0] - a[0]:
        return SlopeClass.LESS_THAN_ONE
    return SlopeClass.GEQ_ONE


def rotate180(path: LatticePath) -> LatticePath:
    """Point reflection through (n/2, n/2): v -> (n,n) - v, order reversed."""
    return LatticePath(tuple(reversed(path.steps)))


def is_delannoy(path: LatticePath) -> bool:
    return all(s in UNIT_STEPS for s in path.steps)


def is_subdiagonal(path: LatticePath) -> bool:
    # checking vertices suffices: a segment is below y=x iff its endpoints are
    return all(v.y <= v.x for v in path.vertices)


def is_superdiagonal(path: LatticePath) -> bool:
    return all(v.y >= v.x for v in path.vertices)


def path_class_membership(path: LatticePath) -> frozenset[PathClass]:
    tags = {PathClass.GENERAL}
    d = is_delannoy(path)
    s = is_subdiagonal(path)
    if d:
        tags.add(PathClass.DELANNOY)
    if s:
        tags.add(PathClass.SUBDIAGONAL)
    if d and s:
        tags.add(PathClass.SUBDELANNOY)
    return frozenset(tags)


def in_class(path: LatticePath, cls: PathClass) -> bool:
    return cls in path_class_membership(path)


def parse_class(name: str) -> PathClass:
    try:
        return PathClass(name.strip().lower())
    except ValueError:
        choices = "|".join(c.value for c in PathClass)
        raise InvalidInput(f"unknown path class {name!r} (expected {choices})") from None


def paths_from_text(lines: Iterable[str]) -> Iterable[LatticePath]:
    for line in lines:
        if line.strip():
            yield parse_path(line)
