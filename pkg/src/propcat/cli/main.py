"""The ``propcat`` command line.

Exit codes: 0 on success, 1 on a law failure or a type error, 2 on a usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from propcat.cli.backends import BACKENDS, TermResolveError, get_backend
from propcat.cli.checker import TermTypeError, elaborate, evaluate, typecheck
from propcat.cli.render import render
from propcat.cli.suites import suites_for
from propcat.cli.terms import TermSyntaxError, _Parser, format_term, parse_term
from propcat.instances.zmod import Z_WINDOW, hom, hom_size
from propcat.propification import content

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def write_atomic(path: Path, text: str):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load_term(args):
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    try:
        backend = get_backend(args.instance, getattr(args, "signature", None))
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return parse_term(text), backend


def _type_report(err: TermTypeError, backend) -> str:
    show = lambda l: "[" + ", ".join(backend.show(x) for x in l) + "]"
    return (f"type error: {err}\n  expected: {show(err.expected)}\n"
            f"  found:    {show(err.found)}\n  adaptable: {str(err.adaptable).lower()}")


def cmd_laws(args, out) -> int:
    try:
        suites = suites_for(args.instance)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reports = [suite(args.seed, args.trials) for suite in suites.values()]
    if args.json:
        json.dump([r.to_dict() for r in reports], out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for r in reports:
            out.write(f"{r}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_eval(args, out) -> int:
    term, backend = _load_term(args)
    try:
        arrow = evaluate(term, backend)
    except TermTypeError as err:
        out.write(_type_report(err, backend) + "\n")
        if err.adaptable:
            out.write("hint: `propcat adapt` inserts the bureaucracy adapter\n")
        return EXIT_FAIL
    show = lambda l: "[" + ", ".join(backend.show(x) for x in l) + "]"
    out.write(f"{show(arrow.dom)} -> {show(arrow.cod)}\n{arrow.payload!r}\n")
    return EXIT_OK


def cmd_adapt(args, out) -> int:
    term, backend = _load_term(args)
    try:
        adapted = elaborate(term, backend)
    except TermTypeError as err:
        out.write(_type_report(err, backend) + "\n")
        return EXIT_FAIL
    out.write(format_term(adapted) + "\n")
    return EXIT_OK


def cmd_render(args, out) -> int:
    term, backend = _load_term(args)
    try:
        adapted = elaborate(term, backend)
        typecheck(adapted, backend)
    except TermTypeError as err:
        out.write(_type_report(err, backend) + "\n")
        return EXIT_FAIL
    text = render(adapted, backend, args.format, args.show_content)
    if args.output == "-":
        out.write(text)
    else:
        write_atomic(Path(args.output), text)
    return EXIT_OK


def _hom_obj(text: str, backend):
    """An object, or an object list standing for its content."""
    p = _Parser(text)
    raw = p.obj()
    if p.tok.kind != "eof":
        p.error("expected a single object or object list")
    if isinstance(raw, tuple) and backend.name != "free":
        return content(backend.objlist(raw), backend.base)
    return backend.to_obj(raw)


def cmd_hom(args, out) -> int:
    try:
        backend = get_backend(args.instance)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    n, m = _hom_obj(args.dom, backend), _hom_obj(args.cod, backend)
    if args.instance == "zmod":
        size = hom_size(n, m)
        arrows = list(hom(n, m))
        if size == float("inf"):
            out.write(f"hom({n}, {m}) in zmod: infinite (maps Z -> Z, 1 |-> k); "
                      f"showing |k| <= {Z_WINDOW}\n")
        else:
            out.write(f"hom({n}, {m}) in zmod: {size} arrow{'s' if size != 1 else ''}\n")
        for f in arrows:
            out.write(f"  {f!r}\n")
    elif args.instance == "qubits":
        out.write(f"hom({n}, {m}) in qubits: all {2 ** m}x{2 ** n} matrices over "
                  f"Q(i); infinite\n")
    else:
        out.write(f"hom({list(n)}, {list(m)}) in free: diagrams over the signature; "
                  f"not enumerated\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="propcat",
                                     description="Propification toolkit: law suites and diagram terms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("laws", help="run every applicable law suite")
    p.add_argument("instance", choices=BACKENDS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--json", action="store_true", help="emit reports as JSON")
    p.set_defaults(func=cmd_laws)

    def term_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.add_argument("--instance", choices=BACKENDS, default="zmod")
        p.add_argument("--signature", help="signature file for the free instance")
        p.set_defaults(func=func)
        return p

    term_command("eval", cmd_eval, "typecheck and evaluate a term")
    term_command("adapt", cmd_adapt, "print the term with bureaucracy adapters inserted")
    p = term_command("render", cmd_render, "draw a term as DOT or SVG")
    p.add_argument("-o", "--output", required=True, help="output path, or - for stdout")
    p.add_argument("--format", choices=("dot", "svg"), default="svg")
    p.add_argument("--show-content", action="store_true",
                   help="annotate boxes with their content types")

    p = sub.add_parser("hom", help="describe or enumerate a hom-set")
    p.add_argument("instance", choices=BACKENDS)
    p.add_argument("dom")
    p.add_argument("cod")
    p.set_defaults(func=cmd_hom)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except TermSyntaxError as exc:
        sys.stderr.write(f"propcat: syntax error: {exc}\n")
        return EXIT_USAGE
    except UsageError as exc:
        sys.stderr.write(f"propcat: {exc}\n")
        return EXIT_USAGE
    except TermResolveError as exc:
        sys.stderr.write(f"propcat: {exc}\n")
        return EXIT_FAIL


def run():
    sys.exit(main())

