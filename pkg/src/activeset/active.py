"""Classification of the interior vertical lines ``x = k`` of a path.

A vertex V on ``x = k`` is *active* when

* it lies on ``y = x``; or
* it lies strictly below ``y = x`` and the maximal run of vertices after V
  that stay weakly below the slope-1 line through V is nonempty and ends
  back on that line; or
* it lies strictly above ``y = x`` and the mirror statement holds for the
  run of vertices *before* V that stay weakly above its slope-1 line.

"Ends back on that line" has two readings.  The *existential* reading
(the default) only asks that the run returns to the line at least once; the
*maximal* reading asks that the run's last vertex is on the line.  They
agree on Delannoy paths but not in general, and only the existential one
makes the active set uniformly distributed, so the maximal reading is kept
purely as a diagnostic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import InternalAssertion, LineOutOfRange
from .paths import LatticePath, Point, diag_level, is_delannoy

Reading = Literal["maximal", "existential"]
READINGS: tuple[Reading, ...] = ("existential", "maximal")
DEFAULT_READING: Reading = "existential"


class Condition(enum.Enum):
    ON_DIAGONAL = "on_diagonal"
    BELOW_BALANCED = "below_balanced"
    ABOVE_BALANCED = "above_balanced"


@dataclass(frozen=True)
class ActiveFinding:
    k: int
    vertex: Point
    condition: Condition
    index: int  # position of the vertex in path.vertices

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertex": [self.vertex.x, self.vertex.y],
            "condition": self.condition.value,
        }


@dataclass(frozen=True)
class LineSet:
    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        bad = [k for k in self.members if not 1 <= k <= self.n - 1]
        if bad:
            raise LineOutOfRange(f"lines {sorted(bad)} outside [1, {self.n - 1}]")

    @classmethod
    def full(cls, n: int) -> LineSet:
        return cls(n, frozenset(range(1, n)))

    @classmethod
    def parse(cls, n: int, text: str) -> LineSet:
        text = text.strip()
        if not text:
            return cls(n, frozenset())
        try:
            members = {int(t) for t in text.replace(",", " ").split()}
        except ValueError:
            raise LineOutOfRange(f"malformed line set {text!r}") from None
        return cls(n, frozenset(members))

    def complement(self) -> list[int]:
        """Lines of [n-1] not in the set, ascending."""
        return [k for k in range(1, self.n) if k not in self.members]

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __contains__(self, k: object) -> bool:
        return k in self.members

    def __len__(self) -> int:
        return len(self.members)


def _below_active(levels: list[int], i: int, reading: Reading) -> bool:
    lv = levels[i]
    j = i + 1
    # the terminal vertex has level 0 > lv, so the scan always stops
    while levels[j] <= lv:
        j += 1
    if reading == "maximal":
        return j - 1 != i and levels[j - 1] == lv
    return any(levels[t] == lv for t in range(i + 1, j))


def _above_active(levels: list[int], i: int, reading: Reading) -> bool:
    lv = levels[i]
    j = i - 1
    while levels[j] >= lv:
        j -= 1
    if reading == "maximal":
        return j + 1 != i and levels[j + 1] == lv
    return any(levels[t] == lv for t in range(j + 1, i))


def _check_line(path: LatticePath, k: int) -> None:
    if not 1 <= k <= path.n - 1:
        raise LineOutOfRange(f"line x={k} is not interior for n={path.n}")


def active_vertex(
    path: LatticePath, k: int, reading: Reading = DEFAULT_READING
) -> ActiveFinding | None:
    """Return the active vertex on ``x = k``, or None if the line is inactive."""
    _check_line(path, k)
    verts = path.vertices
    levels = [diag_level(v) for v in verts]
    found = []
    for i, v in enumerate(verts):
        if v.x != k:
            continue
        lv = levels[i]
        if lv == 0:
            found.append(ActiveFinding(k, v, Condition.ON_DIAGONAL, i))
        elif lv < 0 and _below_active(levels, i, reading):
            found.append(ActiveFinding(k, v, Condition.BELOW_BALANCED, i))
        elif lv > 0 and _above_active(levels, i, reading):
            found.append(ActiveFinding(k, v, Condition.ABOVE_BALANCED, i))
    if len(found) > 1:
        raise InternalAssertion(
            f"line x={k} of path {path} has {len(found)} active vertices: "
            + ", ".join(str(tuple(f.vertex)) for f in found)
        )
    return found[0] if found else None


def findings(path: LatticePath, reading: Reading = DEFAULT_READING) -> list[ActiveFinding]:
    out = []
    for k in range(1, path.n):
        f = active_vertex(path, k, reading)
        if f is not None:
            out.append(f)
    return out


def active_set(path: LatticePath, reading: Reading = DEFAULT_READING) -> LineSet:
    return LineSet(path.n, frozenset(f.k for f in findings(path, reading)))


def is_active(path: LatticePath, k: int, reading: Reading = DEFAULT_READING) -> bool:
    return active_vertex(path, k, reading) is not None


@dataclass(frozen=True)
class Prop1Verdict:
    consistent: bool
    active_set: LineSet
    delannoy: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.consistent


def check_prop1(path: LatticePath, reading: Reading = DEFAULT_READING) -> Prop1Verdict:
    """Full active set must coincide exactly with the Delannoy property."""
    s = active_set(path, reading)
    full = len(s) == path.n - 1
    d = is_delannoy(path)
    if full == d:
        return Prop1Verdict(True, s, d)
    detail = (
        "Delannoy path with inactive lines " + str(s.complement())
        if d
        else "non-Delannoy path with every interior line active"
    )
    return Prop1Verdict(False, s, d, detail)


def one_sided(path: LatticePath, k: int) -> bool:
    """True when every vertex on ``x = k`` lies strictly on one side of y = x."""
    levels = {diag_level(v) for v in path.vertices if v.x == k}
    return all(lv < 0 for lv in levels) or all(lv > 0 for lv in levels)


def histogram_key(members: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(members))
