"""A constrained TEI dictionary subset for full-form lexica.

Documents look like::

    <TEI xmlns="http://www.tei-c.org/ns/1.0">
      <text>
        <body>
          <div type="lexicon" xml:lang="fr">
            <entry xml:id="championne_1">
              <form type="lemma">
                <orth>championne</orth>
                <gramGrp>
                  <pos>commonNoun</pos>
                  <gen>feminine</gen>
                </gramGrp>
              </form>
              <form type="inflected">
                <orth>championnes</orth>
                <num>plural</num>
              </form>
              <xr type="feminineVariantOf">
                <ref target="#champion_1">champion</ref>
              </xr>
              <sense xml:id="s1">
                <def>...</def>
              </sense>
            </entry>
          </div>
        </body>
      </text>
    </TEI>

``form/@type`` is one of ``lemma``, ``inflected`` (LMF wordForm) or ``stem``.
Forms may nest one level to group inflected forms; the reader flattens them
into sibling forms.  Grammatical elements (``pos``, ``gen``, ``num``, ...) come
from the dialect mapping and live inside a form, either directly or wrapped
in a ``gramGrp``; the writer wraps them for lemma forms only.

The reader also accepts a bare ``<entry>`` root, with or without the TEI
namespace.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from lexkit.dialects.mapping import DialectMapping, text_from_value, value_from_text
from lexkit.dialects.xmlio import (XML_ID, XML_LANG, InvalidContent, NotExpressible,
                                   UnknownElement, check_attributes, children, serialize, sub,
                                   text_of)
from lexkit.errors import FormatError
from lexkit.features import DuplicateAttribute, FeatureStructure, InvalidFeature
from lexkit.lmf import (EntryRelation, Form, FormRepresentation, LexicalEntry, LexicalResource,
                        Lexicon, Sense)
from lexkit.registry import Registry

DIALECT = "tei"
TEI_NS = "http://www.tei-c.org/ns/1.0"
UNDETERMINED = "und"
MAX_FORM_DEPTH = 2

TEI_TO_LMF = {"lemma": "lemma", "inflected": "wordForm", "stem": "stem"}
LMF_TO_TEI = {v: k for k, v in TEI_TO_LMF.items()}


def _local(el: ET.Element) -> str:
    tag = el.tag
    if tag.startswith("{"):
        ns, _, name = tag[1:].partition("}")
        if ns != TEI_NS:
            raise UnknownElement(tag)
        return name
    return tag


# -- constraints ---------------------------------------------------------


@dataclass(frozen=True)
class ConstraintViolation:
    kind: str
    value: Union[int, str]

    def __str__(self) -> str:
        return f"{self.kind}({self.value})"


class ConstraintError(FormatError):
    def __init__(self, violations: List[ConstraintViolation]):
        self.violations = violations
        super().__init__("TEI constraint violation: " + ", ".join(map(str, violations)))


def _default_grammar() -> Tuple[str, ...]:
    from lexkit.dialects.mapping import load_mapping
    from lexkit.resources import mapping_path

    return load_mapping(mapping_path(DIALECT).read_bytes()).feature_elements()


def tei_constraints_check(doc: ET.Element, mapping: Optional[DialectMapping] = None) -> List[ConstraintViolation]:
    """Check the restrictions this TEI subset places on ``<entry>`` content.

    Reports forms nested deeper than two levels, ``form/@type`` values other
    than lemma/inflected/stem, ``gramGrp`` elements that are not children of a
    form, and grammatical elements the mapping does not know.
    """
    grammar = set(mapping.feature_elements() if mapping else _default_grammar())
    out: List[ConstraintViolation] = []

    def visit(el: ET.Element, parent: Optional[str], depth: int) -> None:
        name = _local(el)
        if name == "form":
            depth += 1
            if depth > MAX_FORM_DEPTH:
                out.append(ConstraintViolation("RecursionDepth", depth))
            form_type = el.get("type")
            if form_type is not None and form_type not in TEI_TO_LMF:
                out.append(ConstraintViolation("IllegalTypeValue", form_type))
            for child in el:
                cname = _local(child)
                if cname not in ("form", "gramGrp") and cname not in grammar:
                    out.append(ConstraintViolation("UnknownGrammaticalElement", cname))
        elif name == "gramGrp":
            if parent != "form":
                out.append(ConstraintViolation("GramGrpOutsideForm", parent or "document"))
            for child in el:
                cname = _local(child)
                if cname not in grammar:
                    out.append(ConstraintViolation("UnknownGrammaticalElement", cname))
        for child in el:
            if isinstance(child.tag, str):
                visit(child, name, depth)

    visit(doc, None, 0)
    return out


# -- reading -------------------------------------------------------------


class _Reader:
    def __init__(self, mapping: DialectMapping, registry: Registry):
        self.mapping = mapping
        self.registry = registry
        self.generated: Dict[str, int] = {}

    def grammatical(self, el: ET.Element) -> Tuple[str, str, str]:
        """(role, attribute, value) of a mapped grammatical element."""
        rule = self.mapping.rule(_local(el))
        if rule is None or rule.role not in ("feature", "representation"):
            raise UnknownElement(_local(el))
        check_attributes(el, ())
        return rule.role, rule.arg, value_from_text(self.mapping, self.registry, rule, text_of(el))

    def feats(self, pairs, where: str) -> FeatureStructure:
        try:
            return FeatureStructure(pairs)
        except (InvalidFeature, DuplicateAttribute) as exc:
            raise InvalidContent(f"<{where}>: {exc}") from None

    def forms(self, el: ET.Element) -> List[Form]:
        """One form element, plus any nested forms flattened after it."""
        check_attributes(el, ("type",))
        pairs, reps, nested = [], [], []
        for child in children(el):
            name = _local(child)
            if name == "form":
                nested.extend(self.forms(child))
            elif name == "gramGrp":
                check_attributes(child, ())
                for gram in children(child):
                    role, attr, value = self.grammatical(gram)
                    if role != "feature":
                        raise UnknownElement(_local(gram), "gramGrp")
                    pairs.append((attr, value))
            else:
                role, attr, value = self.grammatical(child)
                if role == "representation":
                    reps.append(FormRepresentation(self.feats([(attr, value)], name)))
                else:
                    pairs.append((attr, value))
        tei_type = el.get("type")
        if tei_type is None:
            if reps or pairs:
                raise InvalidContent("<form> with content needs a type attribute")
            return nested
        return [Form(TEI_TO_LMF[tei_type], tuple(reps), self.feats(pairs, "form"))] + nested

    def sense(self, el: ET.Element) -> Sense:
        check_attributes(el, (XML_ID,))
        pairs, subsenses = [], []
        for child in children(el):
            if _local(child) == "sense":
                subsenses.append(self.sense(child))
            else:
                role, attr, value = self.grammatical(child)
                if role != "feature":
                    raise UnknownElement(_local(child), "sense")
                pairs.append((attr, value))
        return Sense(el.get(XML_ID), self.feats(pairs, "sense"), tuple(subsenses))

    def relation(self, el: ET.Element) -> EntryRelation:
        check_attributes(el, ("type",))
        refs = list(children(el))
        if not el.get("type") or len(refs) != 1 or _local(refs[0]) != "ref":
            raise InvalidContent("<xr> needs a type and exactly one <ref>")
        ref = refs[0]
        check_attributes(ref, ("target",))
        target = (ref.get("target") or "").lstrip("#")
        if not target:
            raise InvalidContent("<ref> needs a target")
        return EntryRelation(el.get("type"), target, text_of(ref) or None)

    def entry(self, el: ET.Element) -> LexicalEntry:
        violations = tei_constraints_check(el, self.mapping)
        if violations:
            raise ConstraintError(violations)
        check_attributes(el, (XML_ID,))
        forms, senses, relations = [], [], []
        for child in children(el):
            name = _local(child)
            if name == "form":
                forms.extend(self.forms(child))
            elif name == "sense":
                senses.append(self.sense(child))
            elif name == "xr":
                relations.append(self.relation(child))
            else:
                raise UnknownElement(name, "entry")
        ident = el.get(XML_ID) or self.generate_id(forms)
        return LexicalEntry(ident, tuple(forms), FeatureStructure(), tuple(senses), tuple(relations))

    def generate_id(self, forms: List[Form]) -> str:
        lemma = next((f for f in forms if f.form_type == "lemma"), forms[0] if forms else None)
        base = "entry"
        if lemma is not None and lemma.representations:
            base = (lemma.representations[0].written_form or base).replace(" ", "_")
        self.generated[base] = self.generated.get(base, 0) + 1
        return f"{base}_{self.generated[base]}"

    def lexicon(self, el: ET.Element, language: Optional[str]) -> Lexicon:
        entries = []
        for child in children(el):
            if _local(child) != "entry":
                raise UnknownElement(_local(child), _local(el))
            entries.append(self.entry(child))
        return Lexicon(language or UNDETERMINED, tuple(entries))

    def resource(self, root: ET.Element) -> LexicalResource:
        name = _local(root)
        if name == "entry":
            return LexicalResource((Lexicon(UNDETERMINED, (self.entry(root),)),))
        if name != "TEI":
            raise UnknownElement(name, "document root")
        check_attributes(root, ())
        lexica = []
        for child in children(root):
            cname = _local(child)
            if cname == "teiHeader":
                continue
            if cname != "text":
                raise UnknownElement(cname, "TEI")
            check_attributes(child, ())
            for body in children(child):
                if _local(body) != "body":
                    raise UnknownElement(_local(body), "text")
                check_attributes(body, ())
                divs = list(children(body))
                for div in divs:
                    if _local(div) != "div":
                        raise UnknownElement(_local(div), "body")
                    check_attributes(div, ("type", XML_LANG))
                    if div.get("type") != "lexicon":
                        raise InvalidContent('<div> must have type="lexicon"')
                    lexica.append(self.lexicon(div, div.get(XML_LANG)))
        return LexicalResource(tuple(lexica))


def read(root: ET.Element, mapping: DialectMapping, registry: Registry) -> LexicalResource:
    return _Reader(mapping, registry).resource(root)


# -- writing -------------------------------------------------------------


class _Writer:
    def __init__(self, mapping: DialectMapping, registry: Registry):
        self.mapping = mapping
        self.registry = registry

    def grammatical(self, parent: ET.Element, feats: FeatureStructure, role: str = "feature") -> None:
        for name, value in feats:
            element = self.mapping.element_for(role, name)
            if element is None:
                raise NotExpressible(DIALECT, f"no TEI element for {name!r}")
            sub(parent, element, text=text_from_value(self.mapping, self.registry, DIALECT, name, value))

    def sense(self, parent: ET.Element, sense: Sense) -> None:
        el = sub(parent, "sense", {XML_ID: sense.id} if sense.id is not None else None)
        self.grammatical(el, sense.feats)
        for subsense in sense.subsenses:
            self.sense(el, subsense)

    def entry(self, parent: ET.Element, entry: LexicalEntry) -> None:
        if entry.feats:
            raise NotExpressible(DIALECT, f"entry-level features {entry.feats} of {entry.id!r}")
        el = sub(parent, "entry", {XML_ID: entry.id})
        for form in entry.forms:
            form_el = sub(el, "form", {"type": LMF_TO_TEI[form.form_type]})
            for rep in form.representations:
                if len(rep.feats) != 1:
                    raise NotExpressible(DIALECT, f"representation {rep.feats} must hold exactly one feature")
                self.grammatical(form_el, rep.feats, role="representation")
            if form.feats:
                target = sub(form_el, "gramGrp") if form.form_type == "lemma" else form_el
                self.grammatical(target, form.feats)
        for rel in entry.relations:
            if rel.label == "":
                raise NotExpressible(DIALECT, "empty relation label")
            xr = sub(el, "xr", {"type": rel.relation_type})
            sub(xr, "ref", {"target": "#" + rel.target}, rel.label)
        for sense in entry.senses:
            self.sense(el, sense)

    def resource(self, res: LexicalResource) -> bytes:
        if res.global_info.feats:
            raise NotExpressible(DIALECT, "global information features")
        root = ET.Element("TEI", {"xmlns": TEI_NS})
        body = sub(sub(root, "text"), "body")
        for lexicon in res.lexica:
            if lexicon.feats:
                raise NotExpressible(DIALECT, "lexicon-level features")
            div = sub(body, "div", {"type": "lexicon", XML_LANG: lexicon.language})
            for entry in lexicon.entries:
                self.entry(div, entry)
        return serialize(root)


def write(res: LexicalResource, mapping: DialectMapping, registry: Registry) -> bytes:
    return _Writer(mapping, registry).resource(res)
