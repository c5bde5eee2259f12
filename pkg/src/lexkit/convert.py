"""Dialect conversion and Multext full-form lexicon import."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from lexkit.dialects import read_resource, write_resource
from lexkit.errors import DataError, LexkitError
from lexkit.features import FeatureStructure, check_value
from lexkit.lmf import Form, LexicalEntry, LexicalResource, Lexicon, written_form
from lexkit.msd import (CATEGORY_FEATURE, LexiconLine, TagsetSpec, check_decoded, decode, iter_lexicon,
                        parse_line)
from lexkit.records import Source
from lexkit.registry import Registry

PART_OF_SPEECH = "partOfSpeech"


def convert(source: Source, source_dialect: str, target_dialect: str, registry: Registry) -> bytes:
    """Read in one dialect, write in another."""
    return write_resource(read_resource(source, source_dialect, registry), target_dialect, registry)


@dataclass(frozen=True)
class LineError:
    line: int
    error: LexkitError

    def __str__(self) -> str:
        return f"line {self.line}: {self.error}"


class ImportFailed(DataError):
    """Some lines could not be imported.

    ``resource`` holds everything built from the lines that did parse.
    """

    def __init__(self, errors: List[LineError], resource: LexicalResource):
        self.errors = errors
        self.resource = resource
        super().__init__(f"{len(errors)} line(s) failed: " + "; ".join(map(str, errors[:5]))
                         + (" ..." if len(errors) > 5 else ""))


def _group_entry(lemma: str, category: str, members: List[Tuple[LexiconLine, FeatureStructure]],
                 ident: str) -> LexicalEntry:
    # features identical across every member move up to the lemma form
    decoded = [fs.without(CATEGORY_FEATURE) for _, fs in members]
    shared = [(name, value) for name, value in decoded[0]
              if all(other.get(name) == value for other in decoded[1:])]
    shared_fs = FeatureStructure(shared)
    shared_names = shared_fs.names()
    forms = [Form("lemma", (written_form(lemma),), shared_fs)]
    for (line, _), fs in zip(members, decoded):
        forms.append(Form("wordForm", (written_form(line.form),), fs.without(*shared_names)))
    return LexicalEntry(ident, tuple(forms), FeatureStructure([(PART_OF_SPEECH, category)]))


def import_multext(source: Source, spec: TagsetSpec, registry: Registry, language: str) -> LexicalResource:
    """Build a one-lexicon resource from ``form lemma tag`` lines.

    Lines are grouped into entries by (lemma, category).  Each entry gets a
    lemma form holding the features shared by all its lines, and one word
    form per line holding the rest; the category becomes the entry's
    ``partOfSpeech``.  Entry ids are ``<lemma>_<n>``, ``n`` counting
    categories per lemma in order of first appearance.

    Bad lines are collected; if any, :class:`ImportFailed` is raised carrying
    the resource built from the good ones.
    """
    groups: Dict[Tuple[str, str], List[Tuple[LexiconLine, FeatureStructure]]] = {}
    errors: List[LineError] = []
    for lineno, text in iter_lexicon(source):
        try:
            line = parse_line(text, lineno)
            check_value(line.form)
            check_value(line.lemma)
            fs = decode(line.tag, spec)
            bad = check_decoded(fs, registry, language)
            if bad:
                raise DataError("outside the registry domain: " + ", ".join(f"{n}={v}" for n, v in bad))
        except LexkitError as exc:
            errors.append(LineError(lineno, exc))
            continue
        groups.setdefault((line.lemma, fs[CATEGORY_FEATURE]), []).append((line, fs))

    per_lemma: Dict[str, int] = {}
    entries = []
    for (lemma, category), members in groups.items():
        per_lemma[lemma] = per_lemma.get(lemma, 0) + 1
        entries.append(_group_entry(lemma, category, members, f"{lemma}_{per_lemma[lemma]}"))
    res = LexicalResource((Lexicon(language, tuple(entries)),))
    if errors:
        raise ImportFailed(errors, res)
    return res

