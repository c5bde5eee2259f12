"""Canonical LMF XML: one element per core-package component.

::

    <LexicalResource>
      <GlobalInformation>
        <feat att="creator" val="..."/>
      </GlobalInformation>
      <Lexicon language="fr">
        <LexicalEntry id="championne_1">
          <feat att="partOfSpeech" val="commonNoun"/>
          <Form type="lemma">
            <feat att="gender" val="feminine"/>
            <FormRepresentation>
              <feat att="writtenForm" val="championne"/>
            </FormRepresentation>
          </Form>
          <Sense id="s1">
            <feat att="definition" val="..."/>
            <Sense>...</Sense>
          </Sense>
          <Relation type="feminineVariantOf" target="champion_1" label="champion"/>
        </LexicalEntry>
      </Lexicon>
    </LexicalResource>

Values are canonical registry ids written verbatim.  Child elements are
written in the order shown; the reader accepts any order.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import List

from lexkit.dialects.xmlio import (InvalidContent, UnknownElement, check_attributes, children,
                                   serialize, sub)
from lexkit.features import DuplicateAttribute, FeatureStructure, InvalidFeature
from lexkit.lmf import (EntryRelation, Form, FormRepresentation, GlobalInformation,
                        LexicalEntry, LexicalResource, Lexicon, Sense)


# -- reading -------------------------------------------------------------


def _required(el: ET.Element, name: str) -> str:
    value = el.get(name)
    if not value:
        raise InvalidContent(f"<{el.tag}> needs a non-empty {name!r} attribute")
    return value


def _feats(pairs: List, where: str) -> FeatureStructure:
    try:
        return FeatureStructure(pairs)
    except (InvalidFeature, DuplicateAttribute) as exc:
        raise InvalidContent(f"{where}: {exc}") from None


def _feat(el: ET.Element):
    check_attributes(el, ("att", "val"))
    if len(el) or (el.text and el.text.strip()):
        raise InvalidContent("<feat> must be empty")
    return (_required(el, "att"), _required(el, "val"))


def _read_children(el: ET.Element, allowed):
    """Split children into feats and the other allowed elements, in order."""
    pairs = []
    parts = {tag: [] for tag in allowed}
    for child in children(el):
        if child.tag == "feat":
            pairs.append(_feat(child))
        elif child.tag in parts:
            parts[child.tag].append(child)
        else:
            raise UnknownElement(child.tag, el.tag)
    return _feats(pairs, el.tag), parts


def _read_sense(el: ET.Element) -> Sense:
    check_attributes(el, ("id",))
    feats, parts = _read_children(el, ("Sense",))
    return Sense(el.get("id"), feats, tuple(_read_sense(s) for s in parts["Sense"]))


def _read_form(el: ET.Element) -> Form:
    check_attributes(el, ("type",))
    form_type = _required(el, "type")
    feats, parts = _read_children(el, ("FormRepresentation",))
    reps = []
    for rep in parts["FormRepresentation"]:
        check_attributes(rep, ())
        rep_feats, _ = _read_children(rep, ())
        reps.append(FormRepresentation(rep_feats))
    return Form(form_type, tuple(reps), feats)


def _read_entry(el: ET.Element) -> LexicalEntry:
    check_attributes(el, ("id",))
    feats, parts = _read_children(el, ("Form", "Sense", "Relation"))
    relations = []
    for rel in parts["Relation"]:
        check_attributes(rel, ("type", "target", "label"))
        if len(rel) or (rel.text and rel.text.strip()):
            raise InvalidContent("<Relation> must be empty")
        relations.append(EntryRelation(_required(rel, "type"), _required(rel, "target"), rel.get("label")))
    return LexicalEntry(
        _required(el, "id"),
        tuple(_read_form(f) for f in parts["Form"]),
        feats,
        tuple(_read_sense(s) for s in parts["Sense"]),
        tuple(relations),
    )


def read(root: ET.Element) -> LexicalResource:
    if root.tag != "LexicalResource":
        raise UnknownElement(root.tag, "document root")
    check_attributes(root, ())
    lexica = []
    global_info = GlobalInformation()
    seen_global = False
    for child in children(root):
        if child.tag == "GlobalInformation":
            if seen_global:
                raise InvalidContent("more than one <GlobalInformation>")
            seen_global = True
            check_attributes(child, ())
            feats, _ = _read_children(child, ())
            global_info = GlobalInformation(feats)
        elif child.tag == "Lexicon":
            check_attributes(child, ("language",))
            feats, parts = _read_children(child, ("LexicalEntry",))
            entries = tuple(_read_entry(e) for e in parts["LexicalEntry"])
            lexica.append(Lexicon(_required(child, "language"), entries, feats))
        else:
            raise UnknownElement(child.tag, "LexicalResource")
    return LexicalResource(tuple(lexica), global_info)


# -- writing -------------------------------------------------------------


def _write_feats(parent: ET.Element, feats: FeatureStructure) -> None:
    for name, value in feats:
        sub(parent, "feat", {"att": name, "val": value})


def _write_sense(parent: ET.Element, sense: Sense) -> None:
    el = sub(parent, "Sense", {"id": sense.id} if sense.id is not None else None)
    _write_feats(el, sense.feats)
    for subsense in sense.subsenses:
        _write_sense(el, subsense)


def write(res: LexicalResource) -> bytes:
    root = ET.Element("LexicalResource")
    info = sub(root, "GlobalInformation")
    _write_feats(info, res.global_info.feats)
    for lexicon in res.lexica:
        lex_el = sub(root, "Lexicon", {"language": lexicon.language})
        _write_feats(lex_el, lexicon.feats)
        for entry in lexicon.entries:
            entry_el = sub(lex_el, "LexicalEntry", {"id": entry.id})
            _write_feats(entry_el, entry.feats)
            for form in entry.forms:
                form_el = sub(entry_el, "Form", {"type": form.form_type})
                _write_feats(form_el, form.feats)
                for rep in form.representations:
                    _write_feats(sub(form_el, "FormRepresentation"), rep.feats)
            for sense in entry.senses:
                _write_sense(entry_el, sense)
            for rel in entry.relations:
                attrib = {"type": rel.relation_type, "target": rel.target}
                if rel.label is not None:
                    attrib["label"] = rel.label
                sub(entry_el, "Relation", attrib)
    return serialize(root)
