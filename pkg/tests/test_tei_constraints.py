import xml.etree.ElementTree as ET

from conftest import data_path
from lexkit.dialects import tei_constraints_check
from lexkit.dialects.tei import ConstraintViolation


def check(text):
    return [str(v) for v in tei_constraints_check(ET.fromstring(text))]


def test_repaired_entry_is_clean():
    assert tei_constraints_check(ET.fromstring(data_path("tei_entry_repaired.xml").read_bytes())) == []


def test_golden_document_is_clean():
    assert tei_constraints_check(ET.fromstring(data_path("championne_golden.tei.xml").read_bytes())) == []


def test_three_levels_of_forms():
    doc = ('<entry><form type="lemma"><form type="inflected"><form type="inflected"><orth>x</orth>'
           "</form></form></form></entry>")
    assert tei_constraints_check(ET.fromstring(doc)) == [ConstraintViolation("RecursionDepth", 3)]


def test_two_levels_are_allowed():
    assert check('<entry><form type="lemma"><form type="inflected"><orth>x</orth></form></form></entry>') == []


def test_illegal_type_value():
    assert check('<entry><form type="variant"><orth>x</orth></form></entry>') == ["IllegalTypeValue(variant)"]


def test_gramgrp_outside_form():
    assert check("<entry><gramGrp><pos>noun</pos></gramGrp></entry>") == ["GramGrpOutsideForm(entry)"]


def test_unknown_grammatical_element():
    assert check('<entry><form type="lemma"><orth>x</orth><gramGrp><colour>red</colour></gramGrp>'
                 "</form></entry>") == ["UnknownGrammaticalElement(colour)"]
    assert check('<entry><form type="lemma"><etym>x</etym></form></entry>') == [
        "UnknownGrammaticalElement(etym)"]


def test_namespaced_entry():
    ns = "http://www.tei-c.org/ns/1.0"
    doc = f'<entry xmlns="{ns}"><form type="variant"><orth>x</orth></form></entry>'
    assert check(doc) == ["IllegalTypeValue(variant)"]


def test_violations_accumulate():
    doc = ('<entry><gramGrp/><form type="odd"><form type="lemma"><form type="stem"><orth>x</orth>'
           "</form></form></form></entry>")
    assert check(doc) == ["GramGrpOutsideForm(entry)", "IllegalTypeValue(odd)", "RecursionDepth(3)"]
