"""Element-name mappings for the XML dialects.

A mapping file binds element names to model roles, so that a dialect's
vocabulary is data rather than code::

    scheme  morphalou
    elem    lexicalEntry         component       entry
    elem    lemmatizedForm       form            lemma
    elem    orthography          representation  writtenForm
    elem    grammaticalGender    feature         gender
    elem    feminineVariantOf    relation        feminineVariantOf

The ``scheme`` names the registry code scheme used to turn element text into
canonical values and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from lexkit.dialects.xmlio import NotExpressible, UnmappableValue
from lexkit.errors import ParseError
from lexkit.lmf import FORM_TYPES
from lexkit.records import Source, expect_fields, iter_records
from lexkit.registry import Registry, UnknownCode, UnknownValue

COMPONENTS = ("resource", "globalInformation", "lexicon", "entry", "formGroup", "sense")
ROLES = ("component", "form", "representation", "feature", "relation")


class MappingError(ParseError):
    pass


@dataclass(frozen=True)
class ElementRule:
    element: str
    role: str
    arg: str


@dataclass(frozen=True)
class DialectMapping:
    scheme: Optional[str]
    rules: Dict[str, ElementRule]
    _by_role: Dict[Tuple[str, str], str]

    def rule(self, element: str) -> Optional[ElementRule]:
        return self.rules.get(element)

    def element_for(self, role: str, arg: str) -> Optional[str]:
        return self._by_role.get((role, arg))

    def feature_elements(self) -> Tuple[str, ...]:
        return tuple(r.element for r in self.rules.values() if r.role in ("feature", "representation"))


def load_mapping(source: Source, registry: Optional[Registry] = None) -> DialectMapping:
    """Parse a mapping file; with a registry, attribute references are checked."""
    scheme = None
    rules: Dict[str, ElementRule] = {}
    by_role: Dict[Tuple[str, str], str] = {}
    for lineno, fields in iter_records(source):
        if fields[0] == "scheme":
            expect_fields(lineno, fields, 2, "scheme <id>")
            scheme = fields[1]
            continue
        if fields[0] != "elem":
            raise MappingError(lineno, f"unknown record type {fields[0]!r}")
        expect_fields(lineno, fields, 4, "elem <name> <role> <arg>")
        _, element, role, arg = fields
        if role not in ROLES:
            raise MappingError(lineno, f"unknown role {role!r}")
        if role == "component" and arg not in COMPONENTS:
            raise MappingError(lineno, f"unknown component kind {arg!r}")
        if role == "form" and arg not in FORM_TYPES:
            raise MappingError(lineno, f"unknown form type {arg!r}")
        if role in ("feature", "representation", "relation") and registry is not None:
            if not registry.is_attribute(arg):
                raise MappingError(lineno, f"{arg!r} is not a registered attribute")
        if element in rules:
            raise MappingError(lineno, f"element {element!r} mapped twice")
        key = (role, arg)
        if key in by_role or (role == "feature" and ("representation", arg) in by_role) \
                or (role == "representation" and ("feature", arg) in by_role):
            raise MappingError(lineno, f"{role} {arg!r} mapped to two elements")
        rules[element] = ElementRule(element, role, arg)
        by_role[key] = element
    return DialectMapping(scheme, rules, by_role)


def value_from_text(mapping: DialectMapping, registry: Registry, rule: ElementRule, text: str) -> str:
    """Canonical value for the text of a feature element."""
    if not text:
        raise UnmappableValue(rule.element, text)
    if mapping.scheme and registry.has_codes(mapping.scheme, rule.arg):
        try:
            return registry.map_code(mapping.scheme, rule.arg, text)
        except UnknownCode:
            raise UnmappableValue(rule.element, text) from None
    return text


def text_from_value(mapping: DialectMapping, registry: Registry, dialect: str,
                    attribute: str, value: str) -> str:
    """Element text for a canonical value; open attributes pass through."""
    if mapping.scheme and registry.has_codes(mapping.scheme, attribute):
        try:
            return registry.reverse_map(mapping.scheme, attribute, value)
        except UnknownValue:
            raise NotExpressible(dialect, f"{attribute}={value} has no {mapping.scheme} code") from None
    return value
