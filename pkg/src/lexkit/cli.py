"""``lexkit`` command line interface.

Exit status is uniform across commands: 0 on success, 1 when the input is
readable but violates a domain rule (invalid resource, bad tag, value not
expressible in the target dialect, failed import lines), 2 when a file cannot
be read or parsed.  Data goes to standard output, diagnostics to standard
error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from lexkit import resources
from lexkit.convert import ImportFailed, convert, import_multext
from lexkit.dialects import CANONICAL, DIALECTS, NotExpressible, read_resource, write_resource
from lexkit.errors import DataError, LexkitError
from lexkit.features import FeatureStructure
from lexkit.lmf import LexicalResource, lookup_form, resource_stats, validate_resource
from lexkit.msd import MsdError, decode, encode, load_tagset
from lexkit.registry import Registry, load

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_FAILURE = 2


class _Fail(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _Fail(EXIT_FAILURE, f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: Optional[str], data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise _Fail(EXIT_FAILURE, f"cannot write {path}: {exc.strerror or exc}") from None


def _registry(args) -> Registry:
    path = args.registry or str(resources.registry_path())
    try:
        return load(_read(path))
    except LexkitError as exc:
        raise _Fail(EXIT_FAILURE, f"{path}: {exc}") from None


def _tagset(path: Optional[str], registry: Registry, language: str = resources.DEFAULT_LANGUAGE):
    path = path or str(resources.tagset_path(language))
    try:
        return load_tagset(_read(path), registry)
    except LexkitError as exc:
        raise _Fail(EXIT_FAILURE, f"{path}: {exc}") from None


def _resource(path: str, dialect: str, registry: Registry, strict: bool = True) -> LexicalResource:
    try:
        return read_resource(_read(path), dialect, registry, strict=strict)
    except LexkitError as exc:
        raise _Fail(EXIT_FAILURE, f"{path}: {exc}") from None


def _pairs(items: Sequence[str]) -> FeatureStructure:
    pairs = []
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise _Fail(EXIT_FAILURE, f"expected name=value, got {item!r}")
        pairs.append((name.strip(), value.strip()))
    try:
        return FeatureStructure(pairs)
    except LexkitError as exc:
        raise _Fail(EXIT_FAILURE, str(exc)) from None


def _render(fs: FeatureStructure) -> str:
    return "|".join(f"{name}={value}" for name, value in fs)


# -- commands ------------------------------------------------------------


def cmd_validate(args) -> int:
    registry = _registry(args)
    res = _resource(args.path, args.dialect, registry, strict=False)
    violations = validate_resource(res, registry)
    for violation in violations:
        print(violation)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_convert(args) -> int:
    registry = _registry(args)
    try:
        data = convert(_read(args.input), args.source, args.target, registry)
    except NotExpressible as exc:
        raise _Fail(EXIT_VIOLATION, str(exc)) from None
    except LexkitError as exc:
        raise _Fail(EXIT_FAILURE, f"{args.input}: {exc}") from None
    _write(args.output, data)
    return EXIT_OK


def cmd_tag(args) -> int:
    registry = _registry(args)
    spec = _tagset(args.tagset, registry)
    try:
        if args.action == "decode":
            if len(args.values) != 1:
                raise _Fail(EXIT_FAILURE, "decode takes exactly one tag")
            for name, value in decode(args.values[0], spec):
                print(f"{name}={value}")
        else:
            print(encode(_pairs(args.values), spec))
    except MsdError as exc:
        raise _Fail(EXIT_VIOLATION, f"{type(exc).__name__}: {exc}") from None
    return EXIT_OK


def cmd_lookup(args) -> int:
    registry = _registry(args)
    res = _resource(args.lexicon, args.dialect, registry)
    flt = _pairs(args.filter) if args.filter else None
    for hit in lookup_form(res, args.surface, flt):
        print(f"{hit.entry_id}\t{hit.form_type}\t{_render(hit.feats)}")
    return EXIT_OK


def cmd_import(args) -> int:
    registry = _registry(args)
    spec = _tagset(args.tagset, registry, args.lang)
    source = _read(args.path)
    status = EXIT_OK
    try:
        res = import_multext(source, spec, registry, args.lang)
        errors = []
    except ImportFailed as exc:
        res, errors = exc.resource, exc.errors
        status = EXIT_VIOLATION
    for error in errors:
        print(f"{args.path}:{error}", file=sys.stderr)
    stats = resource_stats(res)
    print(f"entries={stats.entries} forms={stats.forms['wordForm']} errors={len(errors)}", file=sys.stderr)
    if errors and not args.keep_going:
        print("no output written (use --keep-going to keep the good lines)", file=sys.stderr)
        return status
    _write(args.output, write_resource(res, CANONICAL, registry))
    return status


def cmd_stats(args) -> int:
    registry = _registry(args)
    res = _resource(args.path, args.dialect, registry)
    for line in resource_stats(res).lines():
        print(line)
    return EXIT_OK


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexkit", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        p = commands.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--registry", metavar="PATH", help="registry file (default: bundled demo)")
        return p

    p = command("validate", cmd_validate, "report structural and data-category violations")
    p.add_argument("path")
    p.add_argument("--dialect", choices=DIALECTS, default=CANONICAL)

    p = command("convert", cmd_convert, "convert a lexicon between dialects")
    p.add_argument("input")
    p.add_argument("--from", dest="source", choices=DIALECTS, required=True)
    p.add_argument("--to", dest="target", choices=DIALECTS, required=True)
    p.add_argument("-o", "--output", metavar="PATH", help="output file (default: stdout)")

    p = command("tag", cmd_tag, "decode or encode a positional tag")
    p.add_argument("action", choices=("decode", "encode"))
    p.add_argument("values", nargs="+", metavar="VALUE", help="a tag, or name=value pairs")
    p.add_argument("--tagset", metavar="PATH", help="tagset file (default: bundled German demo)")

    p = command("lookup", cmd_lookup, "find entries by written form")
    p.add_argument("surface")
    p.add_argument("lexicon")
    p.add_argument("--dialect", choices=DIALECTS, default=CANONICAL)
    p.add_argument("--filter", action="append", default=[], metavar="NAME=VALUE",
                   help="keep hits carrying this feature (repeatable)")

    p = command("import", cmd_import, "import a Multext full-form lexicon as canonical LMF")
    p.add_argument("path")
    p.add_argument("--tagset", metavar="PATH", help="tagset file (default: bundled one for --lang)")
    p.add_argument("--lang", default=resources.DEFAULT_LANGUAGE)
    p.add_argument("-o", "--output", metavar="PATH", help="output file (default: stdout)")
    p.add_argument("--keep-going", action="store_true", help="write the good lines even if some fail")

    p = command("stats", cmd_stats, "count lexica, entries, forms, senses and relations")
    p.add_argument("path")
    p.add_argument("--dialect", choices=DIALECTS, default=CANONICAL)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_FAILURE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="lexkit: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"lexkit {args.command}: {exc.message}", file=sys.stderr)
        return exc.status
    except DataError as exc:
        print(f"lexkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except LexkitError as exc:
        print(f"lexkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
