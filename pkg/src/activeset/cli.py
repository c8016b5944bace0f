"""Command-line entry point.

Results go to stdout as JSON (``enumerate`` streams text, ``render`` emits
the document).  Exit status: 0 success, 1 certification failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import certification as cert
from .active import READINGS, LineSet, active_set, findings
from .bijection import activate_gen, deactivate_gen, decode, encode
from .enumeration import count_paths, enumerate_paths
from .errors import ActiveSetError, BudgetExceeded, InvalidInput
from .paths import PathClass, format_path, parse_class, parse_path
from .render import RenderOptions, render, render_ascii, trace_labels

CLASS_CHOICES = [c.value for c in PathClass]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj) + "\n")


def cmd_count(args) -> int:
    cls = parse_class(args.cls)
    _emit({"n": args.n, "class": cls.value, "count": str(count_paths(args.n, cls))})
    return 0


def cmd_enumerate(args) -> int:
    cls = parse_class(args.cls)
    out = sys.stdout
    for p in enumerate_paths(args.n, cls, limit=args.limit):
        out.write(format_path(p) + "\n")
    return 0


def cmd_active(args) -> int:
    path = parse_path(args.path)
    fs = findings(path, args.reading)
    _emit(
        {
            "n": path.n,
            "active_set": sorted(f.k for f in fs),
            "findings": [f.to_json() for f in fs],
        }
    )
    return 0


def _cmd_map(args, fn) -> int:
    path = parse_path(args.path)
    image, trace = fn(path, args.k)
    _emit({"n": path.n, "k": args.k, "path": format_path(image), "trace": trace.to_json()})
    if args.trace:
        for title, p in (("before", path), ("after", image)):
            sys.stderr.write(f"{title}:\n")
            sys.stderr.write(render_ascii(p, args.k, trace_labels(p, trace)))
    return 0


def cmd_deactivate(args) -> int:
    return _cmd_map(args, deactivate_gen)


def cmd_activate(args) -> int:
    return _cmd_map(args, activate_gen)


def cmd_encode(args) -> int:
    cls = parse_class(args.cls).general_variant
    s, d = encode(parse_path(args.path), cls)
    _emit({"set": s.sorted(), "delannoy": format_path(d)})
    return 0


def cmd_decode(args) -> int:
    cls = parse_class(args.cls).general_variant
    d = parse_path(args.delannoy)
    s = LineSet.parse(d.n, args.set)
    _emit({"path": format_path(decode(s, d, cls))})
    return 0


def cmd_certify(args) -> int:
    cls = parse_class(args.cls)
    readings = READINGS if args.all_readings else None
    report = cert.certify(args.n, cls, cert.parse_checks(args.checks), args.jobs, readings)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.dumps())
    _emit(report.to_json())
    for c in report.checks:
        sys.stderr.write(f"{c.name}: {c.status}\n")
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    path = parse_path(args.path)
    trace = None
    if args.trace:
        if args.k is None:
            raise InvalidInput("--trace needs --k")
        fn = deactivate_gen if args.k in active_set(path) else activate_gen
        _, trace = fn(path, args.k)
    opts = RenderOptions(args.format, args.k, args.trace)
    sys.stdout.write(render(path, opts, trace))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="activeset", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_class(sp, required=True):
        sp.add_argument("--class", dest="cls", choices=CLASS_CHOICES, required=required,
                        default=None if required else "general")

    sp = sub.add_parser("count", help="exact class size")
    with_class(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="stream every path of a class")
    with_class(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("active", help="active set and active vertices")
    sp.add_argument("--path", required=True)
    sp.add_argument("--reading", choices=READINGS, default=READINGS[0])
    sp.set_defaults(func=cmd_active)

    for name, func in (("deactivate", cmd_deactivate), ("activate", cmd_activate)):
        sp = sub.add_parser(name, help=f"{name} one interior line")
        sp.add_argument("--path", required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--trace", action="store_true", help="draw before/after on stderr")
        sp.set_defaults(func=func)

    sp = sub.add_parser("encode", help="path -> (active set, Delannoy path)")
    with_class(sp, required=False)
    sp.add_argument("--path", required=True)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="(active set, Delannoy path) -> path")
    with_class(sp, required=False)
    sp.add_argument("--set", required=True, help='comma separated lines, e.g. "1,3" or ""')
    sp.add_argument("--delannoy", required=True)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("certify", help="exhaustive verification report")
    with_class(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--checks", help=",".join(cert.CHECKS))
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--all-readings", action="store_true",
                    help="also archive the uniformity histogram of the diagnostic reading")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("render", help="draw a path as ASCII or SVG")
    sp.add_argument("--path", required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"BudgetExceeded: {exc}\n")
        return 2
    except ActiveSetError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())
