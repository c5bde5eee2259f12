"""LMF core package object model.

The hierarchy is::

    LexicalResource
      GlobalInformation
      Lexicon+            (language code)
        LexicalEntry*     (id)
          Form+           (lemma | wordForm | stem)
            FormRepresentation+   (writtenForm, ...)
          Sense*          (recursive)
          EntryRelation*  (typed pointer to another entry)

Every component carries a flat :class:`~lexkit.features.FeatureStructure`.
The classes are plain frozen dataclasses and do not police their own
structure; :func:`check_structure` and :func:`validate_resource` do that, and
the dialect readers refuse structurally broken input.
"""

from __future__ import annotations

import logging
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from lexkit.errors import FormatError
from lexkit.features import EMPTY, FeatureConflict, FeatureStructure
from lexkit.registry import Registry, UnknownAttribute

log = logging.getLogger(__name__)

FORM_TYPES = ("lemma", "wordForm", "stem")
WRITTEN_FORM = "writtenForm"


@dataclass(frozen=True)
class FormRepresentation:
    feats: FeatureStructure = EMPTY

    @property
    def written_form(self) -> Optional[str]:
        return self.feats.get(WRITTEN_FORM)


@dataclass(frozen=True)
class Form:
    form_type: str
    representations: Tuple[FormRepresentation, ...] = ()
    feats: FeatureStructure = EMPTY


@dataclass(frozen=True)
class Sense:
    id: Optional[str] = None
    feats: FeatureStructure = EMPTY
    subsenses: Tuple["Sense", ...] = ()


@dataclass(frozen=True)
class EntryRelation:
    relation_type: str
    target: str
    label: Optional[str] = None


@dataclass(frozen=True)
class LexicalEntry:
    id: str
    forms: Tuple[Form, ...] = ()
    feats: FeatureStructure = EMPTY
    senses: Tuple[Sense, ...] = ()
    relations: Tuple[EntryRelation, ...] = ()

    @property
    def lemma(self) -> Optional[Form]:
        return next((f for f in self.forms if f.form_type == "lemma"), None)


@dataclass(frozen=True)
class Lexicon:
    language: str
    entries: Tuple[LexicalEntry, ...] = ()
    feats: FeatureStructure = EMPTY


@dataclass(frozen=True)
class GlobalInformation:
    feats: FeatureStructure = EMPTY


@dataclass(frozen=True)
class LexicalResource:
    lexica: Tuple[Lexicon, ...]
    global_info: GlobalInformation = field(default_factory=GlobalInformation)

    def entries(self) -> Iterator[Tuple[Lexicon, LexicalEntry]]:
        for lexicon in self.lexica:
            for entry in lexicon.entries:
                yield lexicon, entry


def written_form(text: str) -> FormRepresentation:
    return FormRepresentation(FeatureStructure([(WRITTEN_FORM, text)]))


def empty_resource(language: str = "und") -> LexicalResource:
    return LexicalResource((Lexicon(language),))


# -- validation ----------------------------------------------------------

STRUCTURAL = (
    "NoLexicon",
    "MissingForm",
    "MissingRepresentation",
    "MissingWrittenForm",
    "MultipleLemmas",
    "IllegalFormType",
    "DuplicateEntryId",
)


@dataclass(frozen=True)
class Violation:
    code: str
    location: str
    message: str
    severity: str = "error"

    @property
    def structural(self) -> bool:
        return self.code in STRUCTURAL

    def __str__(self) -> str:
        return f"{self.severity} {self.code} {self.location} {self.message}"


class StructuralViolation(FormatError):
    code = "StructuralViolation"

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"{violation.code} at {violation.location}: {violation.message}")


class MissingForm(StructuralViolation):
    code = "MissingForm"


class MissingRepresentation(StructuralViolation):
    code = "MissingRepresentation"


class MissingWrittenForm(StructuralViolation):
    code = "MissingWrittenForm"


class MultipleLemmas(StructuralViolation):
    code = "MultipleLemmas"


class DuplicateEntryId(StructuralViolation):
    code = "DuplicateEntryId"


_EXCEPTIONS = {cls.code: cls for cls in (MissingForm, MissingRepresentation, MissingWrittenForm,
                                         MultipleLemmas, DuplicateEntryId)}


def raise_for(violation: Violation) -> None:
    raise _EXCEPTIONS.get(violation.code, StructuralViolation)(violation)


def check_structure(res: LexicalResource) -> List[Violation]:
    """Structural violations only (cardinalities, form types, id clashes)."""
    out: List[Violation] = []
    if not res.lexica:
        out.append(Violation("NoLexicon", "resource", "a lexical resource needs at least one lexicon"))
    for li, lexicon in enumerate(res.lexica):
        seen = set()
        for entry in lexicon.entries:
            where = f"lexicon[{li}]/{entry.id}"
            if entry.id in seen:
                out.append(Violation("DuplicateEntryId", where, f"entry id {entry.id!r} used twice"))
            seen.add(entry.id)
            if not entry.forms:
                out.append(Violation("MissingForm", where, "entry has no form"))
            lemmas = sum(1 for f in entry.forms if f.form_type == "lemma")
            if lemmas > 1:
                out.append(Violation("MultipleLemmas", where, f"entry has {lemmas} lemma forms"))
            for fi, form in enumerate(entry.forms):
                fwhere = f"{where}/form[{fi}]"
                if form.form_type not in FORM_TYPES:
                    out.append(Violation("IllegalFormType", fwhere, f"form type {form.form_type!r}"))
                if not form.representations:
                    out.append(Violation("MissingRepresentation", fwhere, "form has no representation"))
                for ri, rep in enumerate(form.representations):
                    if not rep.written_form:
                        out.append(Violation("MissingWrittenForm", f"{fwhere}/rep[{ri}]",
                                             "representation has no writtenForm"))
    return out


def _check_feats(feats: FeatureStructure, registry: Registry, language: Optional[str],
                 where: str, out: List[Violation]) -> None:
    for name, value in feats:
        try:
            ok = registry.validate_pair(name, value, language)
        except UnknownAttribute:
            out.append(Violation("UnknownAttribute", where, f"attribute {name!r} is not registered"))
            continue
        if not ok:
            out.append(Violation("InvalidValue", where,
                                 f"{name}={value} is outside the domain for language {language!r}"))


def _walk_senses(senses, prefix: str) -> Iterator[Tuple[str, Sense]]:
    for si, sense in enumerate(senses):
        where = f"{prefix}/sense[{si}]"
        yield where, sense
        yield from _walk_senses(sense.subsenses, where)


def validate_resource(res: LexicalResource, registry: Registry) -> List[Violation]:
    """Every structural, cross-reference and domain violation in ``res``.

    An empty list means the resource is valid.  Global information is free
    metadata and is not checked against the registry.
    """
    out = check_structure(res)
    ids = {entry.id for _, entry in res.entries()}
    for li, lexicon in enumerate(res.lexica):
        lang = lexicon.language
        _check_feats(lexicon.feats, registry, lang, f"lexicon[{li}]", out)
        for entry in lexicon.entries:
            where = f"lexicon[{li}]/{entry.id}"
            _check_feats(entry.feats, registry, lang, where, out)
            for fi, form in enumerate(entry.forms):
                _check_feats(form.feats, registry, lang, f"{where}/form[{fi}]", out)
                for ri, rep in enumerate(form.representations):
                    _check_feats(rep.feats, registry, lang, f"{where}/form[{fi}]/rep[{ri}]", out)
            for swhere, sense in _walk_senses(entry.senses, where):
                _check_feats(sense.feats, registry, lang, swhere, out)
            for ri, rel in enumerate(entry.relations):
                rwhere = f"{where}/relation[{ri}]"
                if not registry.is_attribute(rel.relation_type):
                    out.append(Violation("UnknownRelationType", rwhere,
                                         f"relation type {rel.relation_type!r} is not a registered attribute"))
                if rel.target not in ids:
                    out.append(Violation("DanglingRelationTarget", rwhere,
                                         f"target {rel.target!r} is not an entry of this resource"))
    return out


# -- lookup --------------------------------------------------------------


class Hit(NamedTuple):
    entry_id: str
    form_type: str
    feats: FeatureStructure


def lookup_form(res: LexicalResource, surface: str,
                filter: Optional[FeatureStructure] = None) -> List[Hit]:
    """Find the forms whose written representation is exactly ``surface``.

    The reported features merge entry, form and representation levels.  A
    hit is kept only if ``filter`` (when given) subsumes those features.
    """
    surface = unicodedata.normalize("NFC", surface)
    hits = []
    for _, entry in res.entries():
        for form in entry.forms:
            for rep in form.representations:
                if rep.written_form != surface:
                    continue
                try:
                    combined = entry.feats.merge(form.feats).merge(rep.feats)
                except FeatureConflict as exc:
                    log.warning("skipping %s/%s: %s", entry.id, form.form_type, exc)
                    continue
                if filter is None or filter.subsumes(combined):
                    hits.append(Hit(entry.id, form.form_type, combined))
    return hits


# -- statistics ----------------------------------------------------------


@dataclass(frozen=True)
class StatsSummary:
    lexica: int = 0
    entries: int = 0
    forms: Dict[str, int] = field(default_factory=lambda: {t: 0 for t in FORM_TYPES})
    representations: int = 0
    senses: int = 0
    relations: int = 0

    def lines(self) -> List[str]:
        out = [f"lexica={self.lexica}", f"entries={self.entries}"]
        out += [f"forms.{t}={n}" for t, n in self.forms.items()]
        out += [f"representations={self.representations}", f"senses={self.senses}",
                f"relations={self.relations}"]
        return out


def _count_senses(senses) -> int:
    return sum(1 + _count_senses(s.subsenses) for s in senses)


def resource_stats(res: LexicalResource) -> StatsSummary:
    forms = Counter({t: 0 for t in FORM_TYPES})
    entries = reps = senses = relations = 0
    for _, entry in res.entries():
        entries += 1
        for form in entry.forms:
            forms[form.form_type] += 1
            reps += len(form.representations)
        senses += _count_senses(entry.senses)
        relations += len(entry.relations)
    return StatsSummary(len(res.lexica), entries, dict(forms), reps, senses, relations)
