"""Seeded generators of small random resources and Multext files."""

from __future__ import annotations

import random
from typing import List, Optional

from lexkit.features import FeatureStructure
from lexkit.lmf import (EntryRelation, Form, FormRepresentation, GlobalInformation, LexicalEntry,
                        LexicalResource, Lexicon, Sense)
from lexkit.msd import enumerate_tags

WORD_CHARS = "abcdefghijklmnopqrstuvwxyzäöüßéèçœ"
ODD_CHARS = WORD_CHARS + "ABC &<>\"'#;=.-_ĳ€"
NAMES = ["gender", "number", "case", "type", "note", "x.y", "é-name", "source"]

# feature values a dialect mapping can express (attribute -> canonical values)
MAPPED = {
    "partOfSpeech": ["noun", "commonNoun", "verb", "adjective"],
    "type": ["common", "proper"],
    "gender": ["masculine", "feminine", "neuter"],
    "number": ["singular", "plural"],
    "case": ["nominative", "genitive", "dative", "accusative"],
    "tense": ["present", "past"],
}


def _word(rng: random.Random, chars: str = WORD_CHARS, lo: int = 1, hi: int = 8) -> str:
    text = "".join(rng.choice(chars) for _ in range(rng.randint(lo, hi))).strip()
    return text or "w"


class ResourceGenerator:
    """Random structurally valid resources.

    ``mapped=True`` restricts features to what the bundled Morphalou and TEI
    mappings can carry and keeps entry-, lexicon- and global-level features
    empty (the TEI subset has no place for them).
    """

    def __init__(self, seed: int, mapped: bool = False, max_entries: int = 5, max_sense_depth: int = 4):
        self.rng = random.Random(seed)
        self.mapped = mapped
        self.max_entries = max_entries
        self.max_sense_depth = max_sense_depth

    def feats(self, lo: int = 0, hi: int = 3) -> FeatureStructure:
        rng = self.rng
        if self.mapped:
            names = rng.sample(sorted(MAPPED), rng.randint(lo, hi))
            return FeatureStructure([(n, rng.choice(MAPPED[n])) for n in names])
        names = rng.sample(NAMES, rng.randint(lo, hi))
        return FeatureStructure([(n, _word(rng, ODD_CHARS)) for n in names])

    def container_feats(self) -> FeatureStructure:
        return FeatureStructure() if self.mapped else self.feats()

    def sense(self, depth: int, index: List[int]) -> Sense:
        rng = self.rng
        index[0] += 1
        ident = f"s{index[0]}" if rng.random() < 0.7 else None
        if self.mapped:
            feats = FeatureStructure([("definition", _word(rng, ODD_CHARS, 1, 20))] if rng.random() < 0.7 else [])
        else:
            feats = self.feats()
        children = ()
        if depth < self.max_sense_depth:
            children = tuple(self.sense(depth + 1, index) for _ in range(rng.choice([0, 0, 1, 2])))
        return Sense(ident, feats, children)

    def form(self, form_type: str) -> Form:
        rng = self.rng
        reps = []
        for _ in range(rng.randint(1, 2)):
            pairs = [("writtenForm", _word(rng, ODD_CHARS if not self.mapped else WORD_CHARS + " '"))]
            if not self.mapped and rng.random() < 0.3:
                pairs.append(("script", "Latn"))
            reps.append(FormRepresentation(FeatureStructure(pairs)))
        return Form(form_type, tuple(reps), self.feats())

    def entry(self, ident: str, all_ids: List[str]) -> LexicalEntry:
        rng = self.rng
        forms = []
        if rng.random() < 0.8:
            forms.append(self.form("lemma"))
        for _ in range(rng.randint(0 if forms else 1, 3)):
            forms.append(self.form(rng.choice(["wordForm", "wordForm", "stem"])))
        rng.shuffle(forms)
        index = [0]
        senses = tuple(self.sense(1, index) for _ in range(rng.randint(0, 2)))
        relations = []
        for _ in range(rng.randint(0, 2)):
            rel_type = rng.choice(["feminineVariantOf", "masculineVariantOf"])
            label: Optional[str] = _word(rng) if rng.random() < 0.5 else None
            relations.append(EntryRelation(rel_type, rng.choice(all_ids), label))
        return LexicalEntry(ident, tuple(forms), self.container_feats(), senses, tuple(relations))

    def resource(self) -> LexicalResource:
        rng = self.rng
        lexica = []
        ids = [f"e{i}" for i in range(self.max_entries * 3)]
        counter = 0
        for _ in range(rng.randint(1, 2)):
            n = rng.randint(0, self.max_entries)
            entries = tuple(self.entry(ids[counter + i], ids) for i in range(n))
            counter += n
            lexica.append(Lexicon(rng.choice(["fr", "de", "en"]), entries, self.container_feats()))
        info = GlobalInformation(FeatureStructure() if self.mapped else
                                 FeatureStructure([("creator", _word(rng, ODD_CHARS))]))
        return LexicalResource(tuple(lexica), info)


def random_multext_lines(seed: int, spec, n_lines: int, lemmas: int = 40) -> List[str]:
    """``form lemma tag`` lines drawing tags from every category of ``spec``."""
    rng = random.Random(seed)
    tags = [t for letter in sorted(spec.categories) for t in enumerate_tags(spec, letter)]
    lemma_pool = [_word(rng, WORD_CHARS, 2, 7) for _ in range(lemmas)]
    lines = []
    for _ in range(n_lines):
        lemma = rng.choice(lemma_pool)
        form = lemma + rng.choice(["", "s", "es", "en", "e", "n"])
        lines.append(f"{form}\t{lemma}\t{rng.choice(tags)}")
    return lines
