#!/usr/bin/env python3
"""Builds core/data/synonyms_wordnet.tsv from WordNet 3.0.

Headwords are the most frequent single-word lemmas (SemCor counts) in their
dominant part of speech; synonyms are the other single-word lemmas of the
first two synsets. Nouns also get plural entries and verbs get -s / -ing
entries so that inflected hypothesis words can be substituted.

usage: build_synonyms_wordnet.py <wordnet-3.0 dir> [target-entries]
"""

import os
import sys

import build_lexicon
import morph

POS_FILES = {"n": "noun", "v": "verb", "a": "adj"}
SKIP = set(build_lexicon.AUX) | set(build_lexicon.DET) | set(
    build_lexicon.PRONOUN) | set(build_lexicon.ADP) | set(
        build_lexicon.NUM) | set(build_lexicon.OTHER)


def read_index(wordnet_dir, pos):
    synsets = {}
    with open(os.path.join(wordnet_dir, "index." + POS_FILES[pos])) as f:
        for line in f:
            if line.startswith(" "):
                continue
            parts = line.split()
            lemma = parts[0]
            synset_cnt = int(parts[2])
            synsets[lemma] = parts[-synset_cnt:]
    return synsets


def read_data(wordnet_dir, pos):
    words = {}
    with open(os.path.join(wordnet_dir, "data." + POS_FILES[pos])) as f:
        for line in f:
            if line.startswith(" "):
                continue
            parts = line.split()
            offset = parts[0]
            w_cnt = int(parts[3], 16)
            lemmas = [parts[4 + 2 * i].split("(")[0].lower() for i in range(w_cnt)]
            words[offset] = lemmas
    return words


def usable(word):
    return word.isalpha() and word.islower() and len(word) >= 2


def main():
    wordnet_dir = sys.argv[1]
    target = int(sys.argv[2]) if len(sys.argv) > 2 else 2000
    irr = morph.Irregulars(wordnet_dir)
    counts = build_lexicon.read_counts(wordnet_dir)
    index = {p: read_index(wordnet_dir, p) for p in POS_FILES}
    data = {p: read_data(wordnet_dir, p) for p in POS_FILES}

    entries = {}

    def add(head, syns):
        syns = [s for s in dict.fromkeys(syns) if s != head]
        if syns and head not in entries and head not in SKIP:
            entries[head] = syns

    ranked = sorted((w for w in counts if usable(w)),
                    key=lambda w: (-sum(counts[w].values()), w))
    for lemma in ranked:
        if len(entries) >= target:
            break
        if lemma in SKIP:
            continue
        pos = max((p for p in counts[lemma] if p in POS_FILES),
                  key=lambda p: (counts[lemma][p], p), default=None)
        if pos is None or lemma not in index[pos]:
            continue
        syns = []
        for offset in index[pos][lemma][:2]:
            syns.extend(w for w in data[pos].get(offset, []) if usable(w))
        syns = [s for s in dict.fromkeys(syns) if s != lemma]
        if not syns:
            continue
        add(lemma, syns)
        if pos == "n":
            add(morph.plural(lemma, irr), [morph.plural(s, irr) for s in syns])
        elif pos == "v":
            add(morph.third_singular(lemma), [morph.third_singular(s) for s in syns])
            add(morph.gerund(lemma, irr), [morph.gerund(s, irr) for s in syns])

    for head in sorted(entries):
        print(f"{head}\t{','.join(entries[head])}")


if __name__ == "__main__":
    main()
