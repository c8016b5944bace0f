"""Exhaustive generation and exact counting of the four path classes."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .active import DEFAULT_READING, Reading, active_set
from .errors import BudgetExceeded, InvalidInput
from .paths import LatticePath, PathClass, Step

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "ACTIVESET_BUDGET"


def budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"{BUDGET_ENV}={raw!r} is not an integer") from None


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"order must be a positive integer, got {n!r}")


def _candidate_steps(x: int, y: int, n: int, cls: PathClass) -> Iterator[Step]:
    """Legal next steps from (x, y), in lexicographic order."""
    if cls.delannoy:
        options = ((0, 1), (1, 0), (1, 1))
        for dx, dy in options:
            if x + dx <= n and y + dy <= n:
                yield Step(dx, dy)
        return
    for dx in range(0, n - x + 1):
        for dy in range(0, n - y + 1):
            if dx or dy:
                yield Step(dx, dy)


def first_steps(n: int, cls: PathClass) -> list[Step]:
    """Shard keys: every first step that starts at least one path."""
    _check_order(n)
    return [
        s for s in _candidate_steps(0, 0, n, cls)
        if not (cls.subdiagonal and s.dy > s.dx)
    ]


def enumerate_paths(
    n: int, cls: PathClass, first: Step | None = None, limit: int | None = None
) -> Iterator[LatticePath]:
    """Yield every path of the class exactly once, in lexicographic step order.

    ``first`` restricts the stream to paths starting with that step (one
    shard).  The class size is checked against the enumeration budget up
    front unless ``limit`` already keeps the stream under it.
    """
    _check_order(n)
    cap = budget()
    if (limit is None or limit > cap) and count_paths(n, cls) > cap:
        raise BudgetExceeded(
            f"{cls.value} n={n} has {count_paths(n, cls)} paths, budget is {cap}"
        )
    sub = cls.subdiagonal
    stack: list[Step] = []
    emitted = 0

    def walk(x: int, y: int) -> Iterator[LatticePath]:
        if x == n and y == n:
            yield LatticePath(tuple(stack))
            return
        for s in _candidate_steps(x, y, n, cls):
            nx, ny = x + s.dx, y + s.dy
            if sub and ny > nx:
                continue
            stack.append(s)
            yield from walk(nx, ny)
            stack.pop()

    if first is None:
        gen = walk(0, 0)
    else:
        first = Step(*first)
        if sub and first.dy > first.dx:
            return
        stack.append(first)
        gen = walk(first.dx, first.dy)
    for p in gen:
        if limit is not None and emitted >= limit:
            return
        emitted += 1
        yield p


@lru_cache(maxsize=None)
def _count_table(n: int, cls: PathClass) -> tuple[tuple[int, ...], ...]:
    sub = cls.subdiagonal
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for a in range(n + 1):
        for b in range(n + 1):
            if (a, b) == (0, 0) or (sub and b > a):
                continue
            if cls.delannoy:
                total = 0
                if a:
                    total += table[a - 1][b]
                if b:
                    total += table[a][b - 1]
                if a and b:
                    total += table[a - 1][b - 1]
            else:
                total = sum(
                    table[a - i][b - j]
                    for i in range(a + 1)
                    for j in range(b + 1)
                    if i or j
                )
            table[a][b] = total
    return tuple(tuple(row) for row in table)


def count_paths(n: int, cls: PathClass) -> int:
    """Exact class size by dynamic programming over lattice points.

    In the subdiagonal classes, states above the diagonal are never reached;
    the general recursion sums over every step landing on (a, b).
    """
    _check_order(n)
    return _count_table(n, cls)[n][n]


@dataclass
class CountTable:
    cls: PathClass
    values: dict[int, int] = field(default_factory=dict)

    @classmethod
    def build(cls, path_class: PathClass, orders) -> CountTable:
        return cls(path_class, {n: count_paths(n, path_class) for n in orders})


def all_subsets(n: int) -> list[tuple[int, ...]]:
    lines = range(1, n)
    return [c for r in range(n) for c in combinations(lines, r)]


@dataclass
class Histogram:
    n: int
    cls: PathClass
    counts: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: Histogram) -> Histogram:
        if (self.n, self.cls) != (other.n, other.cls):
            raise InvalidInput("cannot merge histograms of different classes")
        out = dict(self.counts)
        for key, c in other.counts.items():
            out[key] = out.get(key, 0) + c
        return Histogram(self.n, self.cls, out)

    def is_uniform(self) -> bool:
        return len(set(self.counts.values())) == 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "class": self.cls.value,
            "counts": [
                {"set": list(k), "count": self.counts[k]}
                for k in sorted(self.counts, key=lambda s: (len(s), s))
            ],
        }


def empty_histogram(n: int, cls: PathClass) -> Histogram:
    return Histogram(n, cls, {s: 0 for s in all_subsets(n)})


def histogram_active_sets(
    n: int,
    cls: PathClass,
    reading: Reading = DEFAULT_READING,
    first: Step | None = None,
) -> Histogram:
    hist = empty_histogram(n, cls)
    for p in enumerate_paths(n, cls, first=first):
        key = tuple(sorted(active_set(p, reading).members))
        hist.counts[key] += 1
    return hist
