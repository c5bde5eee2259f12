"""Reader for the TAB-separated record files (registry, tagset, dialect maps)."""

from __future__ import annotations

import unicodedata
from typing import IO, Iterator, List, Tuple, Union

from lexkit.errors import ParseError

Source = Union[bytes, str, IO[bytes], IO[str]]


def read_text(source: Source) -> str:
    """Decode a byte stream, text stream, bytes or str into NFC text."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(source[: exc.start].count(b"\n") + 1, "invalid UTF-8") from None
    if source.startswith("﻿"):
        source = source[1:]
    return unicodedata.normalize("NFC", source)


def iter_records(source: Source) -> Iterator[Tuple[int, List[str]]]:
    """Yield ``(line_number, fields)`` for every non-blank, non-comment line."""
    for lineno, line in enumerate(read_text(source).splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, [field.strip() for field in line.split("\t")]


def expect_fields(lineno: int, fields: List[str], count: int, shape: str) -> None:
    if len(fields) != count or not all(fields):
        raise ParseError(lineno, f"expected {shape}, got {len(fields)} field(s)")
