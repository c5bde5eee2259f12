"""Readers and writers for the supported lexicon dialects.

``canonical-lmf``
    this package's normative LMF XML (see :mod:`lexkit.dialects.canonical`)
``morphalou``
    Morphalou-style XML, vocabulary taken from ``morphalou.map``
``tei``
    a constrained TEI dictionary subset, vocabulary from ``tei.map``
"""

from __future__ import annotations

from typing import Optional

from lexkit.dialects import canonical, morphalou, tei
from lexkit.dialects.mapping import DialectMapping, load_mapping
from lexkit.dialects.tei import ConstraintError, ConstraintViolation, tei_constraints_check
from lexkit.dialects.xmlio import (InvalidContent, NotExpressible, UnknownElement, UnmappableValue,
                                   XmlError, parse)
from lexkit.lmf import LexicalResource, check_structure, raise_for
from lexkit.records import Source
from lexkit.registry import Registry
from lexkit.resources import mapping_path

CANONICAL = "canonical-lmf"
MORPHALOU = "morphalou"
TEI = "tei"
DIALECTS = (CANONICAL, MORPHALOU, TEI)

__all__ = [
    "CANONICAL", "MORPHALOU", "TEI", "DIALECTS",
    "read_resource", "write_resource", "dialect_mapping", "tei_constraints_check",
    "ConstraintError", "ConstraintViolation", "DialectMapping", "InvalidContent",
    "NotExpressible", "UnknownDialect", "UnknownElement", "UnmappableValue", "XmlError",
]


class UnknownDialect(ValueError):
    pass


def _check_dialect(dialect: str) -> None:
    if dialect not in DIALECTS:
        raise UnknownDialect(f"unknown dialect {dialect!r}; expected one of {', '.join(DIALECTS)}")


def dialect_mapping(dialect: str, registry: Registry) -> Optional[DialectMapping]:
    """Bundled (or ``LEXKIT_DATA``) mapping for a dialect, checked against ``registry``."""
    _check_dialect(dialect)
    if dialect == CANONICAL:
        return None
    return load_mapping(mapping_path(dialect).read_bytes(), registry)


def read_resource(source: Source, dialect: str, registry: Registry, *,
                  mapping: Optional[DialectMapping] = None, strict: bool = True) -> LexicalResource:
    """Parse a lexicon document.

    With ``strict`` (the default) the first structural violation (an entry
    without forms, two lemma forms, ...) is raised as the matching
    :class:`~lexkit.lmf.StructuralViolation` subclass.  ``strict=False`` hands
    such resources back so :func:`~lexkit.lmf.validate_resource` can report
    them.
    """
    _check_dialect(dialect)
    root = parse(source)
    if dialect == CANONICAL:
        res = canonical.read(root)
    else:
        mapping = mapping or dialect_mapping(dialect, registry)
        module = morphalou if dialect == MORPHALOU else tei
        res = module.read(root, mapping, registry)
    if strict:
        for violation in check_structure(res):
            raise_for(violation)
    return res


def write_resource(res: LexicalResource, dialect: str, registry: Registry, *,
                   mapping: Optional[DialectMapping] = None) -> bytes:
    """Serialize deterministically: UTF-8, two-space indentation, model order."""
    _check_dialect(dialect)
    if dialect == CANONICAL:
        return canonical.write(res)
    mapping = mapping or dialect_mapping(dialect, registry)
    module = morphalou if dialect == MORPHALOU else tei
    return module.write(res, mapping, registry)
