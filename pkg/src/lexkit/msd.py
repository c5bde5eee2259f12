"""Positional morphosyntactic descriptors (Multext-style MSD tags).

A tag such as ``Ncmsg`` is read position by position: the first character is
the category letter, each following character is the code of one attribute
slot declared for that category, and ``-`` leaves a slot unspecified.  The
mapping from letters to canonical data categories comes from a tagset file::

    language  de
    category  N  noun
    slot      N  1  type
    code      N  1  c  common

Canonical tags never end in ``-``; shorter tags are legal and simply leave the
trailing slots unspecified.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from lexkit.errors import DataError, FormatError, ParseError
from lexkit.features import FeatureStructure
from lexkit.records import Source, expect_fields, iter_records, read_text
from lexkit.registry import Registry, UnknownAttribute

CATEGORY_FEATURE = "cat"
DASH = "-"


# -- errors --------------------------------------------------------------


class TagsetError(FormatError):
    pass


class UnknownDataCategory(TagsetError):
    def __init__(self, ident: str):
        self.ident = ident
        super().__init__(f"tagset refers to unregistered data category {ident!r}")


class DuplicateCode(TagsetError):
    def __init__(self, category: str, position: int, char: str):
        self.category, self.position, self.char = category, position, char
        super().__init__(f"code {char!r} used twice (or for two values) in {category} position {position}")


class ReservedDash(TagsetError):
    def __init__(self, category: str, position: int):
        self.category, self.position = category, position
        super().__init__(f"'-' is reserved and cannot be a code ({category} position {position})")


class DomainMismatch(TagsetError):
    def __init__(self, attribute: str, value: str, language: str):
        self.attribute, self.value, self.language = attribute, value, language
        super().__init__(f"value {value!r} is outside the {language!r} domain of {attribute!r}")


class MsdError(DataError):
    pass


class UnknownCategory(MsdError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"unknown category {letter!r}")


class UnknownCode(MsdError):
    def __init__(self, position: int, char: str):
        self.position, self.char = position, char
        super().__init__(f"unknown code {char!r} at position {position}")


class TagTooLong(MsdError):
    def __init__(self, tag: str, slots: int):
        self.tag, self.slots = tag, slots
        super().__init__(f"tag {tag!r} is longer than its category allows (1 + {slots} slots)")


class MissingCategory(MsdError):
    def __init__(self):
        super().__init__(f"feature structure has no {CATEGORY_FEATURE!r} feature")


class UnknownFeature(MsdError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"feature {name!r} has no slot in this category")


class ValueNotInSlot(MsdError):
    def __init__(self, position: int, value: str):
        self.position, self.value = position, value
        super().__init__(f"value {value!r} has no code at position {position}")


class FieldCount(ParseError):
    def __init__(self, actual: int, line: int = 0):
        self.actual = actual
        super().__init__(line, f"expected 3 fields (form lemma tag), got {actual}")


# -- tagset --------------------------------------------------------------


@dataclass(frozen=True)
class Slot:
    position: int
    attribute: str
    codes: Dict[str, str]  # code char -> value id
    values: Dict[str, str] = field(repr=False)  # value id -> code char


@dataclass(frozen=True)
class Category:
    letter: str
    value: str
    slots: Tuple[Slot, ...]

    def slot_for(self, attribute: str) -> Optional[Slot]:
        for slot in self.slots:
            if slot.attribute == attribute:
                return slot
        return None


@dataclass(frozen=True)
class TagsetSpec:
    language: str
    categories: Dict[str, Category]

    def category(self, letter: str) -> Category:
        try:
            return self.categories[letter]
        except KeyError:
            raise UnknownCategory(letter) from None

    def category_for_value(self, value: str) -> Category:
        for cat in self.categories.values():
            if cat.value == value:
                return cat
        raise UnknownCategory(value)


def load_tagset(source: Source, registry: Registry) -> TagsetSpec:
    """Parse a tagset file and check it against ``registry``."""
    language = None
    cat_values: Dict[str, str] = {}
    slot_attrs: Dict[Tuple[str, int], str] = {}
    slot_codes: Dict[Tuple[str, int], List[Tuple[int, str, str]]] = {}

    for lineno, fields in iter_records(source):
        record = fields[0]
        if record == "language":
            expect_fields(lineno, fields, 2, "language <code>")
            language = fields[1]
        elif record == "category":
            expect_fields(lineno, fields, 3, "category <letter> <value-id>")
            letter = fields[1]
            if len(letter) != 1 or letter == DASH:
                raise ParseError(lineno, f"category letter must be one character other than '-': {letter!r}")
            if letter in cat_values:
                raise ParseError(lineno, f"category {letter!r} declared twice")
            cat_values[letter] = fields[2]
        elif record in ("slot", "code"):
            if record == "slot":
                expect_fields(lineno, fields, 4, "slot <letter> <position> <attribute-id>")
            else:
                expect_fields(lineno, fields, 5, "code <letter> <position> <char> <value-id>")
            try:
                position = int(fields[2])
            except ValueError:
                raise ParseError(lineno, f"position must be an integer: {fields[2]!r}") from None
            key = (fields[1], position)
            if record == "slot":
                if key in slot_attrs:
                    raise ParseError(lineno, f"slot {fields[1]} {position} declared twice")
                slot_attrs[key] = fields[3]
            else:
                if len(fields[3]) != 1:
                    raise ParseError(lineno, f"code must be a single character: {fields[3]!r}")
                slot_codes.setdefault(key, []).append((lineno, fields[3], fields[4]))
        else:
            raise ParseError(lineno, f"unknown record type {record!r}")

    if language is None and (cat_values or slot_attrs):
        raise ParseError(0, "tagset declares no language")
    language = language or "und"

    for key, entries in slot_codes.items():
        if key not in slot_attrs:
            raise ParseError(entries[0][0], f"code for undeclared slot {key[0]} {key[1]}")

    def check_value(attribute: str, value: str) -> None:
        cat = registry.category(value)
        if cat is None or cat.kind != "value":
            raise UnknownDataCategory(value)
        if not registry.validate_pair(attribute, value, language):
            raise DomainMismatch(attribute, value, language)

    if not registry.is_attribute(CATEGORY_FEATURE) and cat_values:
        raise UnknownDataCategory(CATEGORY_FEATURE)

    categories: Dict[str, Category] = {}
    for letter, cat_value in cat_values.items():
        check_value(CATEGORY_FEATURE, cat_value)
        positions = sorted(p for (l, p) in slot_attrs if l == letter)
        if positions != list(range(1, len(positions) + 1)):
            raise TagsetError(f"slots of {letter!r} are not contiguous from 1: {positions}")
        slots = []
        for position in positions:
            attribute = slot_attrs[(letter, position)]
            if not registry.is_attribute(attribute):
                raise UnknownDataCategory(attribute)
            codes: Dict[str, str] = {}
            values: Dict[str, str] = {}
            for _, char, value in slot_codes.get((letter, position), ()):
                if char == DASH:
                    raise ReservedDash(letter, position)
                if char in codes or value in values:
                    raise DuplicateCode(letter, position, char)
                check_value(attribute, value)
                codes[char] = value
                values[value] = char
            slots.append(Slot(position, attribute, codes, values))
        attrs = [s.attribute for s in slots]
        if len(set(attrs)) != len(attrs) or CATEGORY_FEATURE in attrs:
            raise TagsetError(f"category {letter!r} repeats an attribute across slots")
        categories[letter] = Category(letter, cat_value, tuple(slots))

    for (letter, _position) in slot_attrs:
        if letter not in categories:
            raise TagsetError(f"slot declared for undeclared category {letter!r}")

    values = [c.value for c in categories.values()]
    if len(set(values)) != len(values):
        raise TagsetError("two category letters share one category value")
    return TagsetSpec(language, categories)


# -- codec ---------------------------------------------------------------


def decode(tag: str, spec: TagsetSpec) -> FeatureStructure:
    """Decode a positional tag into a feature structure.

    With the German demo tagset ``Nc-sg`` gives
    ``{cat=noun, type=common, number=singular, case=genitive}``.
    """
    if not tag:
        raise MsdError("empty tag")
    category = spec.category(tag[0])
    if len(tag) - 1 > len(category.slots):
        raise TagTooLong(tag, len(category.slots))
    pairs = [(CATEGORY_FEATURE, category.value)]
    for slot, char in zip(category.slots, tag[1:]):
        if char == DASH:
            continue
        try:
            pairs.append((slot.attribute, slot.codes[char]))
        except KeyError:
            raise UnknownCode(slot.position, char) from None
    return FeatureStructure(pairs)


def encode(fs: FeatureStructure, spec: TagsetSpec) -> str:
    """Encode a feature structure as a canonical tag (no trailing ``-``)."""
    value = fs.get(CATEGORY_FEATURE)
    if value is None:
        raise MissingCategory()
    category = spec.category_for_value(value)
    for name, _ in fs:
        if name != CATEGORY_FEATURE and category.slot_for(name) is None:
            raise UnknownFeature(name)
    chars = []
    for slot in category.slots:
        slot_value = fs.get(slot.attribute)
        if slot_value is None:
            chars.append(DASH)
        elif slot_value in slot.values:
            chars.append(slot.values[slot_value])
        else:
            raise ValueNotInSlot(slot.position, slot_value)
    return category.letter + "".join(chars).rstrip(DASH)


def enumerate_tags(spec: TagsetSpec, letter: str) -> List[str]:
    """Every canonical tag of one category, in deterministic order."""
    category = spec.category(letter)
    options = [[DASH] + list(slot.codes) for slot in category.slots]
    seen = {}
    for combo in itertools.product(*options):
        seen.setdefault(letter + "".join(combo).rstrip(DASH), None)
    return list(seen)


def check_decoded(fs: FeatureStructure, registry: Registry, language: str) -> List[Tuple[str, str]]:
    """Pairs of ``fs`` that fail the registry's domain check."""
    bad = []
    for name, value in fs:
        try:
            ok = registry.validate_pair(name, value, language)
        except UnknownAttribute:
            ok = False
        if not ok:
            bad.append((name, value))
    return bad


# -- lexicon lines -------------------------------------------------------


class LexiconLine(NamedTuple):
    form: str
    lemma: str
    tag: str

    def render(self) -> str:
        return "\t".join(self)


_SEPARATOR = re.compile(r"[ \t]+")


def parse_line(text: str, line: int = 0) -> LexiconLine:
    """Split ``form lemma tag`` on runs of tabs or spaces.

    >>> parse_line("Hundes Hund Ncmmsg")
    LexiconLine(form='Hundes', lemma='Hund', tag='Ncmmsg')
    """
    text = text.strip(" \t\r\n")
    fields = _SEPARATOR.split(text) if text else []
    if len(fields) != 3:
        raise FieldCount(len(fields), line)
    return LexiconLine(*fields)


def iter_lexicon(source: Source) -> Iterable[Tuple[int, str]]:
    """Yield ``(line_number, text)`` for the content lines of a lexicon file."""
    for lineno, text in enumerate(read_text(source).splitlines(), start=1):
        stripped = text.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, text
