"""Morphalou-style XML, driven entirely by a :class:`DialectMapping`.

The bundled mapping reads entries shaped like::

    <lexicalEntry xml:id="championne_1">
      <feminineVariantOf target="#champion_1">champion</feminineVariantOf>
      <formSet>
        <lemmatizedForm>
          <orthography>championne</orthography>
          <grammaticalCategory>commonNoun</grammaticalCategory>
          <grammaticalGender>feminine</grammaticalGender>
        </lemmatizedForm>
        <inflectedForm>
          <orthography>championnes</orthography>
          <grammaticalNumber>plural</grammaticalNumber>
        </inflectedForm>
      </formSet>
    </lexicalEntry>

Standalone files wrap entries in ``<lexicalResource>`` holding an optional
``<globalInformation>`` and one or more ``<lexicon xml:lang="..">``.  A bare
``<lexicon>`` or ``<lexicalEntry>`` root is accepted too and read as a
one-lexicon resource (language ``und`` unless the lexicon says otherwise).
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import List, Tuple

from lexkit.dialects.mapping import DialectMapping, text_from_value, value_from_text
from lexkit.dialects.xmlio import (XML_ID, XML_LANG, InvalidContent, NotExpressible,
                                   UnknownElement, check_attributes, children, serialize, sub,
                                   text_of)
from lexkit.features import DuplicateAttribute, FeatureStructure, InvalidFeature
from lexkit.lmf import (EntryRelation, Form, FormRepresentation, GlobalInformation,
                        LexicalEntry, LexicalResource, Lexicon, Sense)
from lexkit.registry import Registry

DIALECT = "morphalou"
UNDETERMINED = "und"


class _Reader:
    def __init__(self, mapping: DialectMapping, registry: Registry):
        self.mapping = mapping
        self.registry = registry

    def role(self, el: ET.Element) -> Tuple[str, str]:
        if el.tag.startswith("{"):
            raise UnknownElement(el.tag)
        rule = self.mapping.rule(el.tag)
        if rule is None:
            raise UnknownElement(el.tag)
        return rule.role, rule.arg

    def feature(self, el: ET.Element, attribute: str) -> Tuple[str, str]:
        check_attributes(el, ())
        rule = self.mapping.rule(el.tag)
        return attribute, value_from_text(self.mapping, self.registry, rule, text_of(el))

    def feats(self, pairs: List, where: str) -> FeatureStructure:
        try:
            return FeatureStructure(pairs)
        except (InvalidFeature, DuplicateAttribute) as exc:
            raise InvalidContent(f"<{where}>: {exc}") from None

    def split(self, el: ET.Element, allowed: Tuple[str, ...]):
        """Collect feature pairs and the children whose role is in ``allowed``."""
        pairs = []
        parts = []
        for child in children(el):
            role, arg = self.role(child)
            if role == "feature":
                pairs.append(self.feature(child, arg))
            elif role in allowed or f"{role}:{arg}" in allowed:
                parts.append((role, arg, child))
            else:
                raise UnknownElement(child.tag, el.tag)
        return self.feats(pairs, el.tag), parts

    def form(self, el: ET.Element, form_type: str) -> Form:
        check_attributes(el, ())
        pairs = []
        reps = []
        for child in children(el):
            role, arg = self.role(child)
            if role == "feature":
                pairs.append(self.feature(child, arg))
            elif role == "representation":
                reps.append(FormRepresentation(self.feats([self.feature(child, arg)], child.tag)))
            else:
                raise UnknownElement(child.tag, el.tag)
        return Form(form_type, tuple(reps), self.feats(pairs, el.tag))

    def sense(self, el: ET.Element) -> Sense:
        check_attributes(el, (XML_ID,))
        feats, parts = self.split(el, ("component:sense",))
        return Sense(el.get(XML_ID), feats, tuple(self.sense(c) for _, _, c in parts))

    def entry(self, el: ET.Element) -> LexicalEntry:
        check_attributes(el, (XML_ID,))
        ident = el.get(XML_ID)
        if not ident:
            raise InvalidContent(f"<{el.tag}> needs an xml:id")
        feats, parts = self.split(el, ("relation", "form", "component:formGroup", "component:sense"))
        forms, senses, relations = [], [], []
        for role, arg, child in parts:
            if role == "relation":
                check_attributes(child, ("target",))
                target = (child.get("target") or "").lstrip("#")
                if not target:
                    raise InvalidContent(f"<{child.tag}> needs a target")
                relations.append(EntryRelation(arg, target, text_of(child) or None))
            elif role == "form":
                forms.append(self.form(child, arg))
            elif arg == "formGroup":
                check_attributes(child, ())
                for grandchild in children(child):
                    grole, garg = self.role(grandchild)
                    if grole != "form":
                        raise UnknownElement(grandchild.tag, child.tag)
                    forms.append(self.form(grandchild, garg))
            else:
                senses.append(self.sense(child))
        return LexicalEntry(ident, tuple(forms), feats, tuple(senses), tuple(relations))

    def lexicon(self, el: ET.Element) -> Lexicon:
        check_attributes(el, (XML_LANG,))
        feats, parts = self.split(el, ("component:entry",))
        entries = tuple(self.entry(c) for _, _, c in parts)
        return Lexicon(el.get(XML_LANG) or UNDETERMINED, entries, feats)

    def resource(self, root: ET.Element) -> LexicalResource:
        role, arg = self.role(root)
        if (role, arg) == ("component", "entry"):
            return LexicalResource((Lexicon(UNDETERMINED, (self.entry(root),)),))
        if (role, arg) == ("component", "lexicon"):
            return LexicalResource((self.lexicon(root),))
        if (role, arg) != ("component", "resource"):
            raise UnknownElement(root.tag, "document root")
        check_attributes(root, ())
        global_info = GlobalInformation()
        lexica = []
        for child in children(root):
            crole, carg = self.role(child)
            if (crole, carg) == ("component", "globalInformation"):
                check_attributes(child, ())
                feats, _ = self.split(child, ())
                global_info = GlobalInformation(feats)
            elif (crole, carg) == ("component", "lexicon"):
                lexica.append(self.lexicon(child))
            else:
                raise UnknownElement(child.tag, root.tag)
        return LexicalResource(tuple(lexica), global_info)


def read(root: ET.Element, mapping: DialectMapping, registry: Registry) -> LexicalResource:
    return _Reader(mapping, registry).resource(root)


class _Writer:
    def __init__(self, mapping: DialectMapping, registry: Registry):
        self.mapping = mapping
        self.registry = registry

    def element(self, role: str, arg: str) -> str:
        name = self.mapping.element_for(role, arg)
        if name is None:
            raise NotExpressible(DIALECT, f"no element for {role} {arg!r}")
        return name

    def feats(self, parent: ET.Element, feats: FeatureStructure, role: str = "feature") -> None:
        for name, value in feats:
            text = text_from_value(self.mapping, self.registry, DIALECT, name, value)
            sub(parent, self.element(role, name), text=text)

    def sense(self, parent: ET.Element, sense: Sense) -> None:
        el = sub(parent, self.element("component", "sense"),
                 {XML_ID: sense.id} if sense.id is not None else None)
        self.feats(el, sense.feats)
        for subsense in sense.subsenses:
            self.sense(el, subsense)

    def entry(self, parent: ET.Element, entry: LexicalEntry) -> None:
        el = sub(parent, self.element("component", "entry"), {XML_ID: entry.id})
        self.feats(el, entry.feats)
        for rel in entry.relations:
            if rel.label == "":
                raise NotExpressible(DIALECT, "empty relation label")
            sub(el, self.element("relation", rel.relation_type), {"target": "#" + rel.target}, rel.label)
        group = el
        if entry.forms and self.mapping.element_for("component", "formGroup"):
            group = sub(el, self.element("component", "formGroup"))
        for form in entry.forms:
            form_el = sub(group, self.element("form", form.form_type))
            for rep in form.representations:
                if len(rep.feats) != 1:
                    raise NotExpressible(DIALECT, f"representation {rep.feats} must hold exactly one feature")
                self.feats(form_el, rep.feats, role="representation")
            self.feats(form_el, form.feats)
        for sense in entry.senses:
            self.sense(el, sense)

    def resource(self, res: LexicalResource) -> bytes:
        root = ET.Element(self.element("component", "resource"))
        if res.global_info.feats:
            self.feats(sub(root, self.element("component", "globalInformation")), res.global_info.feats)
        for lexicon in res.lexica:
            lex_el = sub(root, self.element("component", "lexicon"), {XML_LANG: lexicon.language})
            self.feats(lex_el, lexicon.feats)
            for entry in lexicon.entries:
                self.entry(lex_el, entry)
        return serialize(root)


def write(res: LexicalResource, mapping: DialectMapping, registry: Registry) -> bytes:
    return _Writer(mapping, registry).resource(res)
