"""Static diagrams of a path, in ASCII or SVG.

Conventions follow the usual pictures of these maps: the diagonal ``y = x``
in green, the highlighted line ``x = k`` red when active and blue when not,
and P, A, B, B', Q labelled when a trace is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional
from xml.sax.saxutils import escape

from .active import is_active
from .bijection import DeactivationTrace
from .errors import InvalidInput
from .paths import LatticePath, Point

SCALE = 40
MARGIN = 30


@dataclass(frozen=True)
class RenderOptions:
    format: str = "ascii"
    highlight: Optional[int] = None
    show_trace: bool = False


def trace_labels(path: LatticePath, trace: DeactivationTrace) -> dict[str, Point]:
    """Pick the labels that make sense on ``path``.

    On the domain path (P is a vertex) that is P, A, B, Q.  On the image
    path it is A, the image's B, B' and Q.
    """
    verts = path.vertices
    if trace.P in verts:
        labels = {"P": trace.P, "A": trace.A, "B": trace.B}
    else:
        k = trace.k
        b = next(i for i, v in enumerate(verts) if v > (k, k))
        labels = {"A": verts[b - 1], "B": verts[b], "B'": Point(k, verts[b].y)}
    if trace.Q is not None:
        labels["Q"] = trace.Q
    return labels


def _check(path: LatticePath, options: RenderOptions) -> None:
    if options.format not in ("ascii", "svg"):
        raise InvalidInput(f"unknown render format {options.format!r}")
    k = options.highlight
    if k is not None and not 1 <= k <= path.n - 1:
        raise InvalidInput(f"highlight x={k} outside [1, {path.n - 1}]")


def render(
    path: LatticePath,
    options: RenderOptions = RenderOptions(),
    trace: Optional[DeactivationTrace] = None,
) -> str:
    _check(path, options)
    labels = trace_labels(path, trace) if (trace and options.show_trace) else {}
    if options.format == "svg":
        return render_svg(path, options.highlight, labels)
    return render_ascii(path, options.highlight, labels)


def render_ascii(
    path: LatticePath, highlight: Optional[int] = None, labels: dict | None = None
) -> str:
    """One character per lattice point, top row is ``y = n``.

    ``o`` path vertex, ``/`` diagonal point, ``|`` highlighted column,
    ``.`` anything else; labelled vertices show their label's first letter
    (B' is ``b``).
    """
    n = path.n
    verts = set(path.vertices)
    marks = {}
    for name, v in (labels or {}).items():
        marks[tuple(v)] = "b" if name == "B'" else name[0]
    width = len(str(n))
    rows = []
    for y in range(n, -1, -1):
        cells = []
        for x in range(n + 1):
            if (x, y) in marks:
                c = marks[(x, y)]
            elif (x, y) in verts:
                c = "o"
            elif x == highlight:
                c = "|"
            elif x == y:
                c = "/"
            else:
                c = "."
            cells.append(c)
        rows.append(f"{y:>{width}} " + " ".join(cells))
    rows.append(" " * (width + 1) + " ".join(str(x % 10) for x in range(n + 1)))
    for name, v in (labels or {}).items():
        rows.append(f"{name} = ({v[0]},{v[1]})")
    return "\n".join(rows) + "\n"


def render_svg(
    path: LatticePath, highlight: Optional[int] = None, labels: dict | None = None
) -> str:
    n = path.n
    size = n * SCALE + 2 * MARGIN

    def px(v) -> tuple[int, int]:
        return MARGIN + v[0] * SCALE, MARGIN + (n - v[1]) * SCALE

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    out.append('<g class="grid" fill="#999">')
    for x in range(n + 1):
        for y in range(n + 1):
            cx, cy = px((x, y))
            out.append(f'<circle cx="{cx}" cy="{cy}" r="1.5"/>')
    out.append("</g>")
    x0, y0 = px((0, 0))
    x1, y1 = px((n, n))
    out.append(
        f'<line class="diagonal" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
        'stroke="green" stroke-dasharray="4 3"/>'
    )
    if highlight is not None:
        color = "red" if is_active(path, highlight) else "blue"
        hx, hy0 = px((highlight, 0))
        _, hy1 = px((highlight, n))
        out.append(
            f'<line class="highlight" x1="{hx}" y1="{hy0}" x2="{hx}" y2="{hy1}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    pts = " ".join("{},{}".format(*px(v)) for v in path.vertices)
    out.append(f'<polyline class="path" points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    out.append('<g class="vertices" fill="black">')
    for v in path.vertices:
        cx, cy = px(v)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3.5"/>')
    out.append("</g>")
    if labels:
        out.append('<g class="labels" font-family="serif" font-size="14" font-style="italic">')
        for name, v in labels.items():
            cx, cy = px(v)
            out.append(
                f'<text x="{cx + 5}" y="{cy - 5}" data-point="{v[0]},{v[1]}">{escape(name)}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
