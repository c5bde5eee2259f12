import pytest

from conftest import data_path
from generators import ResourceGenerator, random_multext_lines
from lexkit.convert import ImportFailed, convert, import_multext
from lexkit.dialects import CANONICAL, DIALECTS, MORPHALOU, TEI, read_resource, write_resource
from lexkit.features import FeatureStructure, fs
from lexkit.lmf import resource_stats, validate_resource
from lexkit.msd import FieldCount, UnknownCode, decode, parse_line


def reexpand(res, lines, spec):
    """Check every line against its entry: cat + lemma feats + word form feats == decoded tag."""
    entries = {}
    for _, entry in res.entries():
        key = (entry.lemma.representations[0].written_form, entry.feats.get("partOfSpeech"))
        assert key not in entries, f"two entries for {key}"
        entries[key] = (entry, iter(f for f in entry.forms if f.form_type == "wordForm"))
    for text in lines:
        line = parse_line(text)
        expected = decode(line.tag, spec)
        entry, word_forms = entries[(line.lemma, expected.get("cat"))]
        form = next(word_forms)
        assert form.representations[0].written_form == line.form
        rebuilt = (FeatureStructure([("cat", entry.feats.get("partOfSpeech"))])
                   .merge(entry.lemma.feats).merge(form.feats))
        assert rebuilt == expected, text
    for entry, rest in entries.values():
        assert next(rest, None) is None, f"{entry.id} has unmatched word forms"


def test_single_line(tagset_de, registry):
    res = import_multext("Hundes Hund Ncmsg\n", tagset_de, registry, "de")
    (entry,) = res.lexica[0].entries
    assert entry.id == "Hund_1"
    assert entry.feats == fs(partOfSpeech="noun")
    lemma, word = entry.forms
    assert lemma.form_type == "lemma" and lemma.representations[0].written_form == "Hund"
    assert lemma.feats == fs(type="common", gender="masculine", number="singular", case="genitive")
    assert word.form_type == "wordForm" and word.representations[0].written_form == "Hundes"
    assert word.feats == fs()
    assert validate_resource(res, registry) == []


def test_championne_lines(tagset_fr, registry, championne):
    res = import_multext(data_path("championne.fr.txt").read_bytes(), tagset_fr, registry, "fr")
    (entry,) = res.lexica[0].entries
    assert entry.id == "championne_1"
    assert entry.lemma.feats == fs(type="common", gender="feminine")
    assert [f.feats for f in entry.forms[1:]] == [fs(number="singular"), fs(number="plural")]
    # same forms and number placement as the Morphalou entry
    morph = championne.lexica[0].entries[0]
    assert [f.representations for f in entry.forms] == [f.representations for f in morph.forms]
    assert [f.feats for f in entry.forms[1:]] == [f.feats for f in morph.forms[1:]]
    assert entry.lemma.feats.get("gender") == morph.lemma.feats.get("gender")


def test_empty_stream(tagset_de, registry):
    res = import_multext(b"", tagset_de, registry, "de")
    assert len(res.lexica) == 1 and res.lexica[0].entries == ()
    assert res.lexica[0].language == "de"


def test_homographs_split_by_category(tagset_de, registry):
    lines = ["laut laut A", "laut laut S", "lauter laut Ac", "laute laut N"]
    res = import_multext("\n".join(lines), tagset_de, registry, "de")
    assert [(e.id, e.feats.get("partOfSpeech")) for _, e in res.entries()] == [
        ("laut_1", "adjective"), ("laut_2", "adposition"), ("laut_3", "noun")]
    reexpand(res, lines, tagset_de)


def test_errors_are_collected(tagset_de, registry):
    text = "Hund Hund Ncmsn\nHundes Hund\nHunde Hund Nzz\nHunden Hund Ncmpd\n"
    with pytest.raises(ImportFailed) as info:
        import_multext(text, tagset_de, registry, "de")
    errors = info.value.errors
    assert [e.line for e in errors] == [2, 3]
    assert isinstance(errors[0].error, FieldCount)
    assert isinstance(errors[1].error, UnknownCode)
    partial = info.value.resource
    assert resource_stats(partial).forms["wordForm"] == 2


def test_values_outside_the_language_domain(tagset_de, registry):
    # the German spec is fine, but declaring the lines French rejects neuter
    with pytest.raises(ImportFailed):
        import_multext("Kind Kind Ncns\n", tagset_de, registry, "fr")


@pytest.mark.parametrize("seed", range(10))
def test_import_is_lossless(tagset_de, registry, seed):
    lines = random_multext_lines(seed, tagset_de, 200)
    res = import_multext("\n".join(lines), tagset_de, registry, "de")
    assert resource_stats(res).forms["wordForm"] == len(lines)
    reexpand(res, lines, tagset_de)
    assert validate_resource(res, registry) == []


def test_imported_resource_round_trips(tagset_de, registry):
    res = import_multext("\n".join(random_multext_lines(3, tagset_de, 100)), tagset_de, registry, "de")
    for dialect in DIALECTS:
        if dialect == TEI:
            continue  # partOfSpeech sits on the entry, which the TEI subset cannot carry
        assert read_resource(write_resource(res, dialect, registry), dialect, registry) == res


def test_championne_conversion(registry):
    out = convert(data_path("championne.morphalou.xml").read_bytes(), MORPHALOU, TEI, registry)
    assert out == data_path("championne_golden.tei.xml").read_bytes()


def test_tei_morphalou_tei(registry):
    golden = data_path("championne_golden.tei.xml").read_bytes()
    there = convert(golden, TEI, MORPHALOU, registry)
    back = convert(there, MORPHALOU, TEI, registry)
    assert back == golden
    assert read_resource(back, TEI, registry) == read_resource(golden, TEI, registry)


@pytest.mark.parametrize("dialect", DIALECTS)
@pytest.mark.parametrize("seed", range(10))
def test_conversion_is_canonicalising(registry, dialect, seed):
    res = ResourceGenerator(seed, mapped=dialect != CANONICAL).resource()
    source = write_resource(res, dialect, registry)
    once = convert(source, dialect, CANONICAL, registry)
    again = convert(convert(once, CANONICAL, dialect, registry), dialect, CANONICAL, registry)
    assert once == again
    assert convert(once, CANONICAL, CANONICAL, registry) == once


def test_messy_canonical_input_is_normalised(registry):
    messy = (b'<LexicalResource><Lexicon language="fr"><LexicalEntry id="e">'
             b'<Form type="lemma"><FormRepresentation><feat val="e" att="writtenForm"/></FormRepresentation>'
             b'<feat val="feminine" att="gender"/></Form></LexicalEntry></Lexicon><GlobalInformation/>'
             b"</LexicalResource>")
    once = convert(messy, CANONICAL, CANONICAL, registry)
    assert once != messy
    assert b'    <LexicalEntry id="e">\n      <Form type="lemma">\n        <feat att="gender" val="feminine" />' in once
    assert convert(once, CANONICAL, CANONICAL, registry) == once
