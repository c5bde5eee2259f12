import random

import pytest

from generators import ResourceGenerator
from lexkit.features import EMPTY, FeatureStructure, fs
from lexkit.lmf import (EntryRelation, Form, FormRepresentation, LexicalEntry, LexicalResource,
                        Lexicon, Sense, check_structure, empty_resource, lookup_form, resource_stats,
                        validate_resource, written_form)


def entry(ident, *forms, **kw):
    return LexicalEntry(ident, tuple(forms), **kw)


def lemma(text, **feats):
    return Form("lemma", (written_form(text),), fs(**feats))


def word(text, **feats):
    return Form("wordForm", (written_form(text),), fs(**feats))


def codes(violations):
    return [v.code for v in violations]


def test_championne_validates_with_one_dangling_target(championne, registry):
    report = validate_resource(championne, registry)
    assert codes(report) == ["DanglingRelationTarget"]
    assert "champion_1" in report[0].message
    assert str(report[0]).startswith("error DanglingRelationTarget lexicon[0]/championne_1/relation[0] ")


def test_championne_with_target_present_is_valid(championne, registry):
    lexicon = championne.lexica[0]
    champion = entry("champion_1", lemma("champion", gender="masculine"))
    fixed = LexicalResource((Lexicon(lexicon.language, lexicon.entries + (champion,)),))
    assert validate_resource(fixed, registry) == []


def test_entry_without_forms(registry):
    res = LexicalResource((Lexicon("fr", (entry("x_1"),)),))
    assert codes(validate_resource(res, registry)) == ["MissingForm"]


def test_empty_lexicon_is_valid(registry):
    assert validate_resource(empty_resource("fr"), registry) == []
    assert codes(validate_resource(LexicalResource(()), registry)) == ["NoLexicon"]


def test_structural_cardinalities(registry):
    bad = LexicalResource((Lexicon("fr", (
        entry("a", lemma("a"), lemma("b")),
        entry("a", Form("wordForm", ())),
        entry("c", Form("wordForm", (FormRepresentation(fs(script="Latn")),))),
        entry("d", Form("paradigm", (written_form("d"),))),
    )),))
    assert sorted(codes(check_structure(bad))) == sorted(
        ["MultipleLemmas", "DuplicateEntryId", "MissingRepresentation", "MissingWrittenForm",
         "IllegalFormType"])


def test_domain_violations_use_lexicon_language(registry):
    res = LexicalResource((Lexicon("de", (
        entry("x", word("x", case="ablative", colour="red"),
              senses=(Sense("s1", fs(), (Sense(None, fs(gender="plural")),)),),
              relations=(EntryRelation("seeAlso", "x"),)),
    )),))
    report = validate_resource(res, registry)
    assert codes(report) == ["InvalidValue", "UnknownAttribute", "InvalidValue", "UnknownRelationType"]
    assert report[2].location == "lexicon[0]/x/sense[0]/sense[0]"
    # the same value is fine where the universal domain applies
    latin = LexicalResource((Lexicon("la", (entry("x", word("x", case="ablative")),)),))
    assert validate_resource(latin, registry) == []


def test_relations_may_cross_lexica(registry):
    res = LexicalResource((Lexicon("fr", (entry("a", lemma("a"), relations=(EntryRelation("feminineVariantOf", "b"),)),)),
                           Lexicon("de", (entry("b", lemma("b")),))))
    assert validate_resource(res, registry) == []


def test_lookup_examples(championne):
    hits = lookup_form(championne, "championnes")
    assert len(hits) == 1
    assert hits[0].entry_id == "championne_1" and hits[0].form_type == "wordForm"
    assert hits[0].feats.get("number") == "plural"

    both = lookup_form(championne, "championne")
    assert [(h.entry_id, h.form_type) for h in both] == [("championne_1", "lemma"), ("championne_1", "wordForm")]
    assert both[0].feats.get("gender") == "feminine"
    assert lookup_form(championne, "zzz") == []


def test_lookup_filter(championne):
    assert lookup_form(championne, "championne", fs(number="plural")) == []
    single = lookup_form(championne, "championne", fs(number="singular"))
    assert [h.form_type for h in single] == ["wordForm"]
    assert len(lookup_form(championne, "championne", EMPTY)) == 2


def test_lookup_normalises_surface():
    res = LexicalResource((Lexicon("fr", (entry("e", lemma("été")),)),))
    assert len(lookup_form(res, "été")) == 1
    assert lookup_form(res, "Été") == []


def test_lookup_skips_conflicting_levels(caplog):
    res = LexicalResource((Lexicon("fr", (
        LexicalEntry("e", (word("x", number="plural"),), fs(number="singular")),
        entry("f", word("x")),
    )),))
    hits = lookup_form(res, "x")
    assert [h.entry_id for h in hits] == ["f"]
    assert "skipping e" in caplog.text


def test_lookup_completeness_random():
    # mapped resources keep entry features empty, so no level can conflict
    for seed in range(30):
        res = ResourceGenerator(seed, mapped=True).resource()
        for _, e in res.entries():
            for form in e.forms:
                for rep in form.representations:
                    hits = lookup_form(res, rep.written_form)
                    assert any(h.entry_id == e.id and h.form_type == form.form_type for h in hits)


def test_stats_examples(championne):
    stats = resource_stats(championne)
    assert (stats.lexica, stats.entries, stats.senses, stats.relations) == (1, 1, 0, 1)
    assert stats.forms == {"lemma": 1, "wordForm": 2, "stem": 0}
    assert stats.representations == 3

    empty = resource_stats(empty_resource())
    assert empty.lexica == 1
    assert (empty.entries, empty.representations, empty.senses, empty.relations) == (0, 0, 0, 0)
    assert set(empty.forms.values()) == {0}


@pytest.mark.parametrize("n", [0, 1, 17, 250])
def test_stats_synthetic(n):
    res = LexicalResource((Lexicon("de", tuple(entry(f"w{i}", word(f"w{i}")) for i in range(n))),))
    stats = resource_stats(res)
    assert stats.entries == n and sum(stats.forms.values()) == n


def random_tree(rng, depth):
    return Sense(None, FeatureStructure(),
                 tuple(random_tree(rng, depth - 1) for _ in range(rng.randint(0, 3) if depth > 1 else 0)))


def brute_count(senses):
    count, stack = 0, list(senses)
    while stack:
        sense = stack.pop()
        count += 1
        stack.extend(sense.subsenses)
    return count


def test_sense_count_matches_traversal():
    rng = random.Random(5)
    for _ in range(100):
        senses = tuple(random_tree(rng, rng.randint(1, 5)) for _ in range(rng.randint(0, 3)))
        res = LexicalResource((Lexicon("fr", (entry("e", lemma("e"), senses=senses),)),))
        assert resource_stats(res).senses == brute_count(senses)


def test_stats_lines(championne):
    assert resource_stats(championne).lines() == [
        "lexica=1", "entries=1", "forms.lemma=1", "forms.wordForm=2", "forms.stem=0",
        "representations=3", "senses=0", "relations=1"]
