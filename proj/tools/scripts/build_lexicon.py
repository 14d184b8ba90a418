#!/usr/bin/env python3
"""Builds core/data/lexicon.tsv: word -> most frequent tag.

Open-class entries come from WordNet 3.0 SemCor sense counts (cntlist.rev);
each surface form keeps the tag of the highest-count analysis. Closed-class
words and a caption-domain supplement are listed here by hand.

usage: build_lexicon.py <wordnet-3.0 dir> [target-size] > lexicon.tsv
"""

import os
import sys
from collections import defaultdict

import morph

DET = """a an the this that these those his her their its my your our some any
each every no another both all several many few either neither much more most
whose""".split()
PRONOUN = """he she they it i you we him them us me someone somebody something
everyone everybody everything nobody nothing anyone anybody anything himself
herself themselves itself myself yourself ourselves who whom one others""".split()
ADP = """in on at with by for from to of into onto over under near behind beside
besides between through across along around outside inside above below down up
off out against toward towards during without after before about like as atop
underneath beneath beyond upon within throughout past via amid among amongst
alongside except than""".split()
NUM = """one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty
sixty seventy eighty ninety hundred thousand million dozen""".split()
OTHER = """and or but nor so yet not n't there here very too also while because
although though if when where why how what which whether then now just only
even still really almost quite rather together away back again already soon
always never often sometimes outside upstairs downstairs nearby ahead apart
yes no please well alone""".split()
AUX = """be am is are was were been being have has had having do does did doing
will would shall should can could may might must isn't aren't wasn't weren't
don't doesn't didn't can't couldn't won't wouldn't shouldn't hasn't haven't
hadn't""".split()

# Plural nouns without a regular -s ending (or listed as lemmas in WordNet).
PLURAL_NOUNS = """people men women children police clothes pants jeans glasses
shorts scissors sunglasses goggles cattle feet teeth mice geese oxen
spectators kids folks""".split()

# -ing words that are nouns far more often than gerunds in captions.
ING_NOUNS = """clothing wedding ceiling morning evening ring king string thing
railing awning sibling pudding frosting icing sling spring wing ping
nothing something anything everything""".split()

# Caption-domain vocabulary that SemCor under-represents.
CAPTION_NOUNS = """skateboard skateboarder snowboard snowboarder surfboard surfer
bicycle bike biker cyclist helmet frisbee soccer football baseball basketball
volleyball tennis hockey golf skier ski sled jacket shirt t-shirt hoodie sweater
dress skirt hat cap scarf backpack sidewalk crosswalk street road beach ocean
wave sand park playground fountain bench guitar drum violin piano microphone
stage concert crowd audience festival parade costume mask umbrella dog puppy
cat kitten horse pony cow sheep goat bird duck chicken camera phone cellphone
laptop computer restaurant cafe kitchen chef cook waiter waitress bartender
customer vendor market stand booth fruit vegetable sandwich pizza burger cake
cupcake coffee tea beer wine bottle cup bowl plate table chair couch sofa bed
blanket pillow window door wall fence building skyscraper bridge river lake
pool mountain hill field grass tree forest trail path rock cliff snow ice rain
sun sky cloud boat kayak canoe ship dock pier car truck bus train taxi
motorcycle scooter wheelchair stroller cart wagon toy ball kite balloon doll
puzzle book newspaper magazine sign poster flag banner shop store mall
toddler baby infant teen teenager boy girl man woman lady gentleman guy
child kid adult person family couple team player athlete runner swimmer
dancer singer musician artist painter worker construction builder firefighter
policeman officer soldier doctor nurse student teacher tourist crowd group
friend mother father brother sister grandmother grandfather wife husband
uniform apron glove boot shoe sneaker sandal necklace tattoo beard hair
sunglasses jersey vest coat suit tie bikini swimsuit outfit gear""".split()
CAPTION_VERBS = """skateboard snowboard surf bike ski sled swim dive jump climb
hike run jog walk sprint race ride drive sit stand lie lay kneel squat lean
smile laugh cry talk chat yell shout sing dance play throw catch kick hit swing
eat drink cook bake grill serve pour wash clean paint draw write read watch
look stare hold carry push pull lift wear pose wait sleep rest relax perform
practice juggle fish paddle row sail wave hug kiss point chase fetch bark
""".split()
CAPTION_ADJS = """young old little small big large tall short red blue green
yellow black white brown orange pink purple gray grey dark bright colorful
happy sad busy crowded empty wet dry snowy sunny cold hot warm asian african
elderly older younger blond blonde bald shirtless""".split()


def read_counts(wordnet_dir):
    counts = defaultdict(lambda: defaultdict(int))
    with open(os.path.join(wordnet_dir, "cntlist.rev")) as f:
        for line in f:
            key, _, cnt = line.split()
            lemma, rest = key.split("%", 1)
            ss_type = rest[0]
            pos = {"1": "n", "2": "v", "3": "a", "4": "r", "5": "a"}[ss_type]
            counts[lemma][pos] += int(cnt)
    return counts


def main():
    wordnet_dir = sys.argv[1]
    target = int(sys.argv[2]) if len(sys.argv) > 2 else 5000
    irr = morph.Irregulars(wordnet_dir)
    counts = read_counts(wordnet_dir)

    for w in CAPTION_NOUNS:
        counts[w]["n"] = max(counts[w]["n"], 20)
    for w in CAPTION_VERBS:
        counts[w]["v"] = max(counts[w]["v"], 20)
    for w in CAPTION_ADJS:
        counts[w]["a"] = max(counts[w]["a"], 20)

    closed = {}
    for tag, words in (("OTHER", OTHER), ("ADP", ADP), ("PRONOUN", PRONOUN),
                       ("NUM", NUM), ("DET", DET)):
        for w in words:
            closed[w] = tag
    closed.update({w: "NOUN_PLURAL" for w in PLURAL_NOUNS})
    for w in ING_NOUNS:
        closed.setdefault(w, "NOUN")

    # surface form -> (score, tag)
    best = {}

    def offer(form, tag, score):
        if not form.replace("-", "").isalpha() or form in AUX:
            return
        cur = best.get(form)
        if cur is None or score > cur[0]:
            best[form] = (score, tag)

    supplement = set(CAPTION_NOUNS) | set(CAPTION_VERBS) | set(CAPTION_ADJS)
    ranked = sorted(
        (w for w in counts if w.replace("-", "").isalpha() and w.islower()),
        key=lambda w: (w not in supplement, -sum(counts[w].values()), w))
    for lemma in ranked:
        if len(best) >= target and lemma not in supplement:
            break
        for pos, cnt in counts[lemma].items():
            if cnt <= 0:
                continue
            if pos == "n":
                offer(lemma, "NOUN", cnt)
                offer(morph.plural(lemma, irr), "NOUN_PLURAL", cnt)
            elif pos == "v":
                offer(lemma, "VERB_BASE", cnt)
                offer(morph.third_singular(lemma), "VERB_3SG", cnt)
                offer(morph.gerund(lemma, irr), "VERB_GERUND", cnt)
                for p in morph.past_forms(lemma, irr):
                    offer(p, "VERB_PAST", cnt)
            elif pos == "a":
                offer(lemma, "ADJ", cnt)
            elif pos == "r":
                offer(lemma, "OTHER", cnt)

    table = {w: tag for w, (_, tag) in best.items()}
    table.update(closed)
    for w in AUX:
        table.pop(w, None)
    for w in sorted(table):
        print(f"{w}\t{table[w]}")


if __name__ == "__main__":
    main()
