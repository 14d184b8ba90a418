"""English inflection helpers shared by the data builders.

Regular rules plus the irregular tables that ship with WordNet
(noun.exc / verb.exc). Good enough for caption-style vocabulary.
"""

import os
import re
from collections import defaultdict

VOWELS = set("aeiou")
# Verbs whose final consonant doubles even though they have two syllables.
DOUBLING = {"admit", "begin", "commit", "compel", "control", "equip", "forget",
            "occur", "omit", "patrol", "permit", "prefer", "refer", "regret",
            "submit", "transfer", "upset", "travel", "model", "label", "cancel",
            "signal", "kidnap", "worship", "program"}
NO_DOUBLING = {"visit", "open", "listen", "happen", "enter", "offer", "order",
               "answer", "gather", "wander", "shiver", "color", "water", "cover",
               "deliver", "consider", "remember", "wonder", "whisper", "suffer",
               "bother", "lower", "flower", "shower", "tower", "power", "paper",
               "hammer", "row", "snow", "show", "sew", "mow", "fix", "box", "mix",
               "relax", "wax", "tax", "fax", "play", "pray", "stay", "obey",
               "edit", "limit", "exhibit", "inherit", "profit", "benefit",
               "target", "budget", "market", "rocket", "pocket", "ticket",
               "develop", "gallop", "gossip", "focus", "bias"}


MAN_REGULAR = {"human", "german", "shaman", "caiman", "talisman", "ottoman",
               "roman", "cayman"}


class Irregulars:
    def __init__(self, wordnet_dir):
        self.noun_plural = {}
        self.verb_forms = defaultdict(set)
        with open(os.path.join(wordnet_dir, "noun.exc")) as f:
            for line in f:
                parts = line.split()
                if len(parts) >= 2 and parts[0].isalpha() and parts[1].isalpha():
                    # keep the first listed plural per singular
                    self.noun_plural.setdefault(parts[1], parts[0])
        with open(os.path.join(wordnet_dir, "verb.exc")) as f:
            for line in f:
                parts = line.split()
                if len(parts) >= 2 and parts[0].isalpha() and parts[1].isalpha():
                    self.verb_forms[parts[1]].add(parts[0])


def _is_cvc(word):
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return (a not in VOWELS and b in VOWELS and c not in VOWELS
            and c not in "wxy")


def _syllables(word):
    return len(re.findall(r"[aeiouy]+", word))


def _doubles(word):
    if word in NO_DOUBLING:
        return False
    if word in DOUBLING:
        return True
    return _is_cvc(word) and _syllables(word) == 1


def plural(noun, irr=None):
    if irr is not None and noun in irr.noun_plural:
        return irr.noun_plural[noun]
    if noun.endswith("man") and noun not in MAN_REGULAR:
        return noun[:-3] + "men"
    if re.search(r"(s|x|z|ch|sh)$", noun):
        return noun + "es"
    if re.search(r"[^aeiou]y$", noun):
        return noun[:-1] + "ies"
    return noun + "s"


IRREGULAR_3SG = {"be": "is", "have": "has"}


def third_singular(verb):
    if verb in IRREGULAR_3SG:
        return IRREGULAR_3SG[verb]
    if verb in ("go", "do"):
        return verb + "es"
    if re.search(r"(s|x|z|ch|sh)$", verb):
        return verb + "es"
    if re.search(r"[^aeiou]y$", verb):
        return verb[:-1] + "ies"
    return verb + "s"


def gerund(verb, irr=None):
    if irr is not None:
        for form in irr.verb_forms.get(verb, ()):
            if form.endswith("ing"):
                return form
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if re.search(r"(ee|ye|oe)$", verb):
        return verb + "ing"
    if re.search(r"[^aeiou]e$", verb) or verb.endswith("ue"):
        return verb[:-1] + "ing"
    if _doubles(verb):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def past_forms(verb, irr=None):
    if irr is not None:
        forms = [f for f in irr.verb_forms.get(verb, ())
                 if not f.endswith("ing") and not f.endswith("s")]
        if forms:
            return sorted(forms)
    if verb.endswith("e"):
        return [verb + "d"]
    if re.search(r"[^aeiou]y$", verb):
        return [verb[:-1] + "ied"]
    if _doubles(verb):
        return [verb + verb[-1] + "ed"]
    return [verb + "ed"]
