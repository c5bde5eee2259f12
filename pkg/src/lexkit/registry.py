"""Data category registry.

A registry snapshot holds three kinds of records:

``datcat``
    a data category: an *attribute* (``gender``) or a *value* (``feminine``),
    with a human readable definition.
``domain``
    the conceptual domain of an attribute, i.e. the values it may take,
    either universally (``*``) or for one language.  A language-scoped domain
    replaces the universal one for that language.
``code``
    how one encoding scheme writes a value of an attribute (``f`` and
    ``fém.`` for ``feminine``).  Codes are a bijection per scheme and
    attribute.

File syntax, one TAB-separated record per line::

    datcat  <id>  <attribute|value>  <definition...>  [profile=<token>]
    domain  <attribute-id>  <lang|*>  <value-id>[,<value-id>...]
    code    <scheme-id>  <attribute-id>  <code>  <value-id>

Everything is cross-checked once the whole file has been read, so record
order does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, Optional, Tuple

from lexkit.errors import DataError, FormatError, ParseError
from lexkit.features import InvalidFeature, check_name
from lexkit.records import Source, expect_fields, iter_records

KINDS = ("attribute", "value")
ANY_LANGUAGE = "*"


class RegistryError(FormatError):
    pass


class DanglingReference(RegistryError):
    def __init__(self, ident: str, detail: str = ""):
        self.ident = ident
        super().__init__(f"reference to unregistered or ill-kinded category {ident!r}{detail}")


class DuplicateId(RegistryError):
    def __init__(self, ident: str):
        self.ident = ident
        super().__init__(f"duplicate data category id {ident!r}")


class NonBijectiveScheme(RegistryError):
    def __init__(self, scheme: str, attribute: str, detail: str = ""):
        self.scheme = scheme
        self.attribute = attribute
        super().__init__(f"codes of scheme {scheme!r} for {attribute!r} are not one-to-one{detail}")


class UnknownAttribute(DataError):
    def __init__(self, ident: str):
        self.ident = ident
        super().__init__(f"unknown attribute category {ident!r}")


class UnknownCode(DataError):
    def __init__(self, scheme: str, attribute: str, code: str):
        self.scheme, self.attribute, self.code = scheme, attribute, code
        super().__init__(f"no value for code {code!r} of {attribute!r} in scheme {scheme!r}")


class UnknownValue(DataError):
    def __init__(self, scheme: str, attribute: str, value: str):
        self.scheme, self.attribute, self.value = scheme, attribute, value
        super().__init__(f"no code for value {value!r} of {attribute!r} in scheme {scheme!r}")


@dataclass(frozen=True)
class DataCategory:
    id: str
    kind: str
    definition: str = ""
    profile: Optional[str] = None


@dataclass(frozen=True)
class ConceptualDomain:
    attribute: str
    values: FrozenSet[str]
    language: Optional[str] = None


@dataclass(frozen=True)
class CodeMapping:
    scheme: str
    attribute: str
    code: str
    value: str


@dataclass(frozen=True)
class Registry:
    """Immutable, fully cross-checked registry snapshot.

    Build one with :func:`load` (or :meth:`Registry.build`); both verify every
    invariant before returning.
    """

    categories: Dict[str, DataCategory] = field(default_factory=dict)
    domains: Dict[Tuple[str, Optional[str]], ConceptualDomain] = field(default_factory=dict)
    codes: Dict[Tuple[str, str], Dict[str, str]] = field(default_factory=dict)
    _reverse: Dict[Tuple[str, str], Dict[str, str]] = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def build(cls, categories=(), domains=(), mappings=()) -> "Registry":
        cats: Dict[str, DataCategory] = {}
        for cat in categories:
            if cat.id in cats:
                raise DuplicateId(cat.id)
            if cat.kind not in KINDS:
                raise RegistryError(f"category {cat.id!r} has unknown kind {cat.kind!r}")
            cats[cat.id] = cat

        def need(ident: str, kind: str, where: str) -> None:
            found = cats.get(ident)
            if found is None or found.kind != kind:
                raise DanglingReference(ident, f" (expected {kind} in {where})")

        doms: Dict[Tuple[str, Optional[str]], ConceptualDomain] = {}
        for dom in domains:
            need(dom.attribute, "attribute", "domain")
            if not dom.values:
                raise RegistryError(f"empty domain for {dom.attribute!r}")
            for value in sorted(dom.values):
                need(value, "value", f"domain of {dom.attribute}")
            key = (dom.attribute, dom.language)
            if key in doms:
                raise DuplicateId(f"domain {dom.attribute}@{dom.language or ANY_LANGUAGE}")
            doms[key] = dom

        codes: Dict[Tuple[str, str], Dict[str, str]] = {}
        reverse: Dict[Tuple[str, str], Dict[str, str]] = {}
        for m in mappings:
            need(m.attribute, "attribute", f"scheme {m.scheme}")
            need(m.value, "value", f"scheme {m.scheme}")
            key = (m.scheme, m.attribute)
            forward = codes.setdefault(key, {})
            backward = reverse.setdefault(key, {})
            if m.code in forward and forward[m.code] != m.value:
                raise NonBijectiveScheme(m.scheme, m.attribute, f": code {m.code!r} maps to two values")
            if m.value in backward and backward[m.value] != m.code:
                raise NonBijectiveScheme(m.scheme, m.attribute, f": value {m.value!r} has two codes")
            forward[m.code] = m.value
            backward[m.value] = m.code
        return cls(cats, doms, codes, reverse)

    # -- queries -------------------------------------------------------

    def category(self, ident: str) -> Optional[DataCategory]:
        return self.categories.get(ident)

    def is_attribute(self, ident: str) -> bool:
        cat = self.categories.get(ident)
        return cat is not None and cat.kind == "attribute"

    def domain_of(self, attribute: str, language: Optional[str] = None) -> Optional[FrozenSet[str]]:
        """Values permitted for ``attribute``; ``None`` if the attribute is open."""
        if not self.is_attribute(attribute):
            raise UnknownAttribute(attribute)
        dom = None
        if language is not None:
            dom = self.domains.get((attribute, language))
        if dom is None:
            dom = self.domains.get((attribute, None))
        return None if dom is None else dom.values

    def validate_pair(self, attribute: str, value: str, language: Optional[str] = None) -> bool:
        """Is ``value`` in the conceptual domain of ``attribute`` for ``language``?

        Attributes registered without any domain (``writtenForm``,
        ``definition``) are open and accept any value.
        """
        values = self.domain_of(attribute, language)
        return values is None or value in values

    def schemes(self) -> Tuple[str, ...]:
        return tuple(sorted({scheme for scheme, _ in self.codes}))

    def has_codes(self, scheme: str, attribute: str) -> bool:
        return (scheme, attribute) in self.codes

    def map_code(self, scheme: str, attribute: str, code: str) -> str:
        try:
            return self.codes[(scheme, attribute)][code]
        except KeyError:
            raise UnknownCode(scheme, attribute, code) from None

    def reverse_map(self, scheme: str, attribute: str, value: str) -> str:
        try:
            return self._reverse[(scheme, attribute)][value]
        except KeyError:
            raise UnknownValue(scheme, attribute, value) from None

    def iter_codes(self) -> Iterator[CodeMapping]:
        for (scheme, attribute), table in sorted(self.codes.items()):
            for code, value in table.items():
                yield CodeMapping(scheme, attribute, code, value)


def load(source: Source) -> Registry:
    """Parse and validate a registry file."""
    categories = []
    domains = []
    mappings = []
    for lineno, fields in iter_records(source):
        record = fields[0]
        try:
            if record == "datcat":
                if len(fields) < 3 or not fields[1] or not fields[2]:
                    raise ParseError(lineno, "expected datcat <id> <kind> <definition>")
                rest = fields[3:]
                profile = None
                if rest and rest[-1].startswith("profile="):
                    profile = rest.pop()[len("profile="):] or None
                if fields[2] not in KINDS:
                    raise ParseError(lineno, f"unknown kind {fields[2]!r}")
                categories.append(DataCategory(check_name(fields[1]), fields[2], " ".join(rest), profile))
            elif record == "domain":
                expect_fields(lineno, fields, 4, "domain <attribute> <lang|*> <values>")
                values = frozenset(check_name(v.strip()) for v in fields[3].split(",") if v.strip())
                lang = None if fields[2] == ANY_LANGUAGE else fields[2]
                domains.append(ConceptualDomain(check_name(fields[1]), values, lang))
            elif record == "code":
                expect_fields(lineno, fields, 5, "code <scheme> <attribute> <code> <value>")
                mappings.append(CodeMapping(fields[1], fields[2], fields[3], fields[4]))
            else:
                raise ParseError(lineno, f"unknown record type {record!r}")
        except InvalidFeature as exc:
            raise ParseError(lineno, str(exc)) from None
    return Registry.build(categories, domains, mappings)
