"""Exhaustive certification harness.

Each check is a pure function of one path.  A run enumerates the class,
sharded by first step, and folds the per-path results into a
:class:`CertificationReport`.  Shards are merged in first-step order, so the
report does not depend on how many workers ran it.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .active import (
    DEFAULT_READING,
    READINGS,
    active_set,
    check_prop1,
)
from .bijection import (
    Case,
    activate_as,
    classify_image_case,
    decode,
    encode,
    maps_for,
)
from .enumeration import (
    all_subsets,
    count_paths,
    enumerate_paths,
    first_steps,
)
from .errors import ActiveSetError, InvalidInput
from .paths import LatticePath, PathClass, Point, Step, diag_level, format_path, parse_path

CHECKS = ("counting", "uniformity", "prop1", "bijection", "commutativity", "case_table")
MAX_WITNESSES = 10
ENUMERATION_CROSSCHECK_MAX_N = 4


@dataclass
class CheckResult:
    name: str
    failures: int = 0
    witnesses: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    def fail(self, path: LatticePath | None, line: int | None, detail: str) -> None:
        self.failures += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(
                {
                    "path": None if path is None else format_path(path),
                    "line": line,
                    "detail": detail,
                }
            )

    def to_json(self) -> dict:
        stats = dict(self.stats)
        stats["failures"] = self.failures
        return {
            "name": self.name,
            "status": self.status,
            "witnesses": self.witnesses,
            "stats": stats,
        }


@dataclass
class CertificationReport:
    n: int
    cls: PathClass
    checks: list[CheckResult]
    wall_time_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, include_time: bool = True) -> dict:
        out = {
            "n": self.n,
            "class": self.cls.value,
            "checks": [c.to_json() for c in self.checks],
        }
        if include_time:
            out["wall_time_ms"] = self.wall_time_ms
        return out

    def dumps(self, include_time: bool = True) -> str:
        return json.dumps(self.to_json(include_time), indent=2) + "\n"


# ---------------------------------------------------------------------------
# per-path checks; each returns a list of (line, detail) failures


def _safe(fn, *args):
    try:
        return fn(*args), None
    except ActiveSetError as exc:
        return None, f"{type(exc).__name__}: {exc}"


def check_bijection_path(
    path: LatticePath, cls: PathClass, images: list | None = None
) -> list[tuple[int | None, str]]:
    """Round trips and activity delta for every line of one path.

    Appends ``(image text, k)`` for each deactivation to ``images`` so the
    caller can test global injectivity.
    """
    deactivate, activate, _ = maps_for(cls)
    out: list[tuple[int | None, str]] = []
    s = active_set(path).members
    for k in range(1, path.n):
        forward, back = (deactivate, activate) if k in s else (activate, deactivate)
        res, err = _safe(forward, path, k)
        if err:
            out.append((k, f"{forward.__name__}: {err}"))
            continue
        image, trace = res
        want = s - {k} if k in s else s | {k}
        got = active_set(image).members
        if got != want:
            out.append((k, f"active set of image is {sorted(got)}, expected {sorted(want)}"))
        if k in s and images is not None:
            images.append((format_path(image), k))
        res, err = _safe(back, image, k)
        if err:
            out.append((k, f"{back.__name__} on image {image}: {err}"))
            continue
        if res[0] != path:
            out.append((k, f"round trip returned {res[0]} via image {image}"))
        elif res[1] != trace:
            out.append((k, "traces of the two directions differ"))
    return out


def check_commutativity_path(path: LatticePath, cls: PathClass) -> list[tuple[int | None, str]]:
    deactivate, activate, _ = maps_for(cls)
    out: list[tuple[int | None, str]] = []
    s = active_set(path)
    act = s.sorted()
    inact = s.complement()
    for lines, fn in ((act, deactivate), (inact, activate)):
        for a_i, k in enumerate(lines):
            for l in lines[a_i + 1 :]:
                x = fn(fn(path, k)[0], l)[0]
                y = fn(fn(path, l)[0], k)[0]
                if x != y:
                    out.append((k, f"{fn.__name__} at {k},{l} gives {x} but at {l},{k} gives {y}"))
    ls_up, d_up = encode(path, cls, descending=False)
    ls_dn, d_dn = encode(path, cls, descending=True)
    if (ls_up, d_up) != (ls_dn, d_dn):
        out.append((None, f"encode order-dependent: {d_up} vs {d_dn}"))
    back_dn = decode(ls_up, d_up, cls, descending=True)
    back_up = decode(ls_up, d_up, cls, descending=False)
    if back_dn != path or back_up != path:
        out.append((None, f"decode(encode) returned {back_dn} / {back_up}"))
    return out


def check_prop1_path(path: LatticePath, cls: PathClass) -> list[tuple[int | None, str]]:
    v = check_prop1(path)
    return [] if v.consistent else [(None, v.detail)]


def _table_rows(A: Point, B: Point, k: int) -> set[int]:
    """Every row of the image case table whose description fits (A, B).

    Written straight from the table rows, independently of the dispatch
    used by ``classify_image_case``.
    """
    la, lb = diag_level(A), diag_level(B)
    rows = set()
    if la <= 0 and lb <= 0:
        rows.add(1)
    if la >= 0 and lb >= 0:
        rows.add(2)
    if la > 0 and B.y < k:
        rows.add(3)
    if A.y > k and lb < 0:
        rows.add(4)
    if la * lb < 0 and (A.y - k) * (B.y - k) <= 0:
        rows.add(5)
    return rows


def check_case_table_path(path: LatticePath, cls: PathClass) -> list[tuple[int | None, str]]:
    deactivate, _, _ = maps_for(cls)
    out: list[tuple[int | None, str]] = []
    s = active_set(path).members
    verts = path.vertices
    for k in range(1, path.n):
        if k in s:
            image, trace = deactivate(path, k)
            got = classify_image_case(image, k)
            if got != trace.case:
                out.append((k, f"applied {trace.case}, image classified as {got}"))
            continue
        b = next(i for i, v in enumerate(verts) if v > (k, k))
        A, B = verts[b - 1], verts[b]
        rows = _table_rows(A, B, k)
        if rows == {1, 2}:
            if diag_level(A) != 0 or diag_level(B) != 0:
                out.append((k, f"rows 1 and 2 both match off the diagonal: A={A} B={B}"))
            elif activate_as(path, k, Case.CASE1) != activate_as(path, k, Case.CASE2):
                out.append((k, "overlapping rows 1/2 invert differently"))
        elif len(rows) != 1:
            out.append((k, f"A={tuple(A)} B={tuple(B)} matches table rows {sorted(rows)}"))
        else:
            got = int(classify_image_case(path, k).case)
            if {got} != rows:
                out.append((k, f"table row {rows} but classified as case {got}"))
    return out


PATH_CHECKS = {
    "bijection": check_bijection_path,
    "commutativity": check_commutativity_path,
    "prop1": check_prop1_path,
    "case_table": check_case_table_path,
}


def replay(check: str, path_text: str, cls: PathClass, line: int | None = None) -> list[str]:
    """Re-run one check on a single witness path; returns failure details."""
    path = parse_path(path_text)
    fn = PATH_CHECKS[check]
    try:
        fails = fn(path, cls)
    except ActiveSetError as exc:
        return [f"{type(exc).__name__}: {exc}"]
    return [d for k, d in fails if line is None or k == line]


# ---------------------------------------------------------------------------
# sharded run


def _run_shard(n: int, cls: PathClass, first: Step, checks: tuple[str, ...], readings: tuple[str, ...]):
    results = {name: CheckResult(name) for name in checks if name in PATH_CHECKS}
    hists = {r: {} for r in readings}
    images: list = []
    paths = 0
    pairs = {"active": 0, "inactive": 0}
    for path in enumerate_paths(n, cls, first=first):
        paths += 1
        for r in readings:
            key = tuple(active_set(path, r).sorted())
            hists[r][key] = hists[r].get(key, 0) + 1
        for name, res in results.items():
            if name == "bijection":
                k_active = len(active_set(path))
                pairs["active"] += k_active
                pairs["inactive"] += n - 1 - k_active
                fails = _collect(check_bijection_path, path, cls, images)
            else:
                fails = _collect(PATH_CHECKS[name], path, cls)
            for k, detail in fails:
                res.fail(path, k, detail)
    return paths, results, hists, images, pairs


def _collect(fn, path, cls, *extra):
    try:
        return fn(path, cls, *extra)
    except ActiveSetError as exc:
        return [(None, f"{type(exc).__name__}: {exc}")]


def _merge_check(into: CheckResult, part: CheckResult) -> None:
    into.failures += part.failures
    room = MAX_WITNESSES - len(into.witnesses)
    into.witnesses.extend(part.witnesses[:room])


def certify(
    n: int,
    cls: PathClass,
    checks: Iterable[str] = CHECKS,
    jobs: int = 1,
    readings: Sequence[str] | None = None,
) -> CertificationReport:
    """Run the requested checks exhaustively over the class at order ``n``.

    ``readings`` lists the activity readings whose histograms go into the
    uniformity check; the default reading is always first.  Passing
    ``readings=READINGS`` archives the diagnostic reading alongside.
    """
    t0 = time.perf_counter()
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"order must be a positive integer, got {n!r}")
    if cls not in (PathClass.GENERAL, PathClass.SUBDIAGONAL):
        raise InvalidInput(f"certification runs on general or subdiagonal classes, not {cls.value}")
    requested = set(checks)
    unknown = requested - set(CHECKS)
    if unknown:
        raise InvalidInput(f"unknown checks {sorted(unknown)}")
    checks = tuple(c for c in CHECKS if c in requested)
    readings = tuple(dict.fromkeys([DEFAULT_READING, *(readings or ())]))
    for r in readings:
        if r not in READINGS:
            raise InvalidInput(f"unknown reading {r!r}")

    enumerating = any(c != "counting" for c in checks) or n <= ENUMERATION_CROSSCHECK_MAX_N
    shard_out = []
    if enumerating:
        shards = first_steps(n, cls)
        args = [(n, cls, s, checks, readings) for s in shards]
        if jobs > 1 and len(shards) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                shard_out = list(pool.map(_run_shard, *zip(*args)))
        else:
            shard_out = [_run_shard(*a) for a in args]

    paths = sum(s[0] for s in shard_out)
    hists = {r: {key: 0 for key in all_subsets(n)} for r in readings}
    images: list = []
    pairs = {"active": 0, "inactive": 0}
    merged = {name: CheckResult(name) for name in checks}
    for _, results, h, imgs, pr in shard_out:
        for r, counts in h.items():
            for key, c in counts.items():
                hists[r][key] += c
        images.extend(imgs)
        for key in pairs:
            pairs[key] += pr[key]
        for name, res in results.items():
            _merge_check(merged[name], res)

    uniform_count = count_paths(n, cls.delannoy_variant)
    class_count = count_paths(n, cls)
    for name in checks:
        res = merged[name]
        if enumerating:
            res.stats["paths_examined"] = paths
            if paths != class_count:
                res.fail(None, None, f"enumerated {paths} paths, DP says {class_count}")
        if name == "counting":
            _counting(res, n, cls, paths if enumerating else None)
        elif name == "uniformity":
            _uniformity(res, n, cls, hists, uniform_count)
        elif name == "bijection":
            res.stats["active_pairs"] = pairs["active"]
            res.stats["inactive_pairs"] = pairs["inactive"]
            distinct = len(set(images))
            res.stats["distinct_images"] = distinct
            if distinct != len(images):
                res.fail(None, None, f"{len(images) - distinct} deactivation images collide")
            if pairs["active"] != pairs["inactive"]:
                res.fail(None, None, "active and inactive (path, line) pairs differ in number")

    report = CertificationReport(n, cls, [merged[c] for c in checks])
    report.wall_time_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _counting(res: CheckResult, n: int, cls: PathClass, enumerated: int | None) -> None:
    general = count_paths(n, cls.general_variant)
    unit = count_paths(n, cls.delannoy_variant)
    res.stats.update(
        {
            "count": str(general),
            "delannoy_count": str(unit),
            "factor": str(2 ** (n - 1)),
            "enumerated": enumerated is not None,
        }
    )
    if general != 2 ** (n - 1) * unit:
        res.fail(None, None, f"{general} != 2^{n - 1} * {unit}")
    if enumerated is not None:
        unit_enum = sum(1 for _ in enumerate_paths(n, cls.delannoy_variant))
        if unit_enum != unit:
            res.fail(None, None, f"enumerated {unit_enum} unit-step paths, DP says {unit}")


def _uniformity(res: CheckResult, n: int, cls: PathClass, hists: dict, target: int) -> None:
    res.stats["per_subset"] = target
    res.stats["subsets"] = 2 ** (n - 1)
    res.stats["histograms"] = {}
    for r, counts in hists.items():
        entries = [
            {"set": list(key), "count": counts[key]}
            for key in sorted(counts, key=lambda s: (len(s), s))
        ]
        uniform = all(c == target for c in counts.values())
        res.stats["histograms"][r] = {"uniform": uniform, "counts": entries}
        if r != DEFAULT_READING:
            continue
        for key, c in counts.items():
            if c != target:
                res.fail(None, None, f"subset {list(key)} is the active set of {c} paths, expected {target}")


def parse_checks(text: str | None) -> tuple[str, ...]:
    if not text:
        return CHECKS
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [c for c in names if c not in CHECKS]
    if bad:
        raise InvalidInput(f"unknown checks {bad} (choose from {','.join(CHECKS)})")
    return names
