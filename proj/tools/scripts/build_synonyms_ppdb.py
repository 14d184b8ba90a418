#!/usr/bin/env python3
"""Builds core/data/synonyms_ppdb.tsv from hand-curated paraphrase groups.

The groups mimic the lexical paraphrase pairs of PPDB (loose, usage-based
equivalences rather than strict synsets) for caption-style vocabulary. Every
member of a group lists the other members; nouns are expanded to plurals and
verbs to -s / -ing / past forms.

usage: build_synonyms_ppdb.py <wordnet-3.0 dir>
"""

import sys

import morph

NOUN_GROUPS = """
man guy gentleman fellow male
woman lady female gal
boy lad youngster kid
girl lass youngster
child kid youngster
toddler tot baby
baby infant newborn
person individual someone human
people persons individuals folks
friend buddy pal companion
dog puppy pup canine hound
cat kitten kitty feline
horse pony stallion mare
car automobile vehicle auto
truck lorry pickup
bike bicycle cycle
motorcycle motorbike bike
bus coach shuttle
boat vessel ship
picture photo photograph image
shirt top tee blouse
jacket coat parka
hat cap beanie
shoe sneaker boot
pants trousers slacks
street road avenue roadway
sidewalk pavement walkway footpath
path trail track
house home residence dwelling
building structure edifice
store shop boutique
restaurant diner eatery cafe
kitchen galley cookhouse
room chamber hall
field meadow pasture
park playground garden
hill slope hillside
mountain peak summit
ocean sea surf
lake pond lagoon
river stream creek brook
beach shore seashore coast
forest woods woodland
rock stone boulder
grass lawn turf
sky heavens air
sun sunshine sunlight
crowd audience spectators throng
group team band crew
game match contest
race competition contest
stage platform podium
table desk counter
chair seat stool
couch sofa settee
bed cot bunk
bag purse backpack satchel
phone cellphone mobile
camera camcorder webcam
food meal dish
drink beverage refreshment
ball sphere globe
toy plaything trinket
gift present offering
road highway street
city town metropolis
village hamlet town
market bazaar marketplace
worker laborer employee
teacher instructor educator tutor
student pupil learner
doctor physician medic
officer policeman cop
soldier trooper serviceman
musician performer player
singer vocalist crooner
dancer ballerina performer
athlete sportsman player
runner jogger sprinter
cyclist biker rider
chef cook
waiter server attendant
vendor seller merchant peddler
customer shopper client patron
tourist traveler visitor sightseer
mother mom mum mama
father dad papa
wife spouse partner
husband spouse partner
couple pair duo
line queue row
hole pit ditch
fire flame blaze
water liquid fluid
snow powder frost
rain drizzle shower
wave breaker swell
costume outfit getup
dress gown frock
uniform outfit attire
sign placard poster
flag banner pennant
music song tune melody
instrument device tool
guitar axe acoustic
drum percussion tom
street lane alley
corner bend curve
wall barrier partition
fence railing barricade
door doorway entrance
window pane casement
floor ground deck
top peak summit
area region zone
job task chore
work labor toil
trip journey voyage
picnic outing feast
party celebration festivity
wedding marriage ceremony
parade procession march
festival fair carnival
concert show performance
photo snapshot shot
smile grin beam
""".strip().splitlines()

VERB_GROUPS = """
run jog sprint dash
walk stroll stride amble
sit perch rest
stand rise loiter
jump leap hop bound
climb scale ascend
ride drive pedal
swim paddle bathe
talk chat speak converse
shout yell scream holler
laugh giggle chuckle
smile grin beam
cry weep sob
look gaze peer stare
watch observe view
hold grip clutch grasp
carry haul tote lug
throw toss hurl pitch
catch grab snag
push shove press
pull drag tug
eat dine munch consume
drink sip gulp
cook prepare bake
clean wash scrub wipe
fix repair mend
build construct assemble
play frolic romp
sing chant croon
dance twirl sway
wait linger remain
sleep nap doze slumber
relax rest lounge unwind
work labor toil
make create produce
buy purchase acquire
sell vend peddle
give hand pass
take grab seize
read study peruse
write scribble jot
paint decorate color
draw sketch doodle
hit strike smack whack
kick boot punt
lift raise hoist
wear sport don
pose model posture
hug embrace cuddle
kiss smooch peck
help assist aid
fight brawl scuffle
race compete contend
travel journey tour
visit tour explore
search hunt seek
find locate discover
show display exhibit
perform act entertain
practice rehearse train
teach instruct educate
learn study master
cheer applaud clap
celebrate party rejoice
fall tumble trip
slide glide slip
skate glide coast
surf ride board
fish angle trawl
shop browse buy
sit squat crouch
lie recline sprawl
lean slouch tilt
kneel crouch squat
point gesture indicate
wave signal beckon
chase pursue follow
fetch retrieve get
bark yap yelp
cross traverse span
enter penetrate invade
leave depart exit
arrive come reach
meet greet welcome
speak talk address
listen hear attend
walk hike trek
move shift relocate
stop halt pause
start begin commence
finish complete end
try attempt strive
use utilize employ
hang dangle suspend
fly soar glide
swing sway rock
spin twirl rotate
roll tumble wheel
splash spatter spray
pour spill decant
serve wait cater
""".strip().splitlines()

ADJ_GROUPS = """
big large huge giant
small little tiny petite
happy glad cheerful joyful
sad unhappy gloomy
old elderly aged
young youthful juvenile
fast quick speedy rapid
slow sluggish leisurely
tall high lofty
busy crowded packed
empty vacant deserted
wet damp soaked
dry arid parched
cold chilly freezing
hot warm scorching
pretty beautiful lovely attractive
ugly unattractive homely
angry mad furious
tired weary exhausted
quiet silent calm
loud noisy boisterous
clean spotless tidy
dirty muddy filthy
bright vivid brilliant
dark dim shadowy
funny amusing comical
strange odd weird
new fresh modern
""".strip().splitlines()


def main():
    irr = morph.Irregulars(sys.argv[1])
    entries = {}

    def add_group(words):
        for head in words:
            syns = [w for w in words if w != head]
            cur = entries.setdefault(head, [])
            cur.extend(s for s in syns if s not in cur and s != head)

    for line in NOUN_GROUPS:
        words = line.split()
        add_group(words)
        add_group([morph.plural(w, irr) for w in words])
    for line in VERB_GROUPS:
        words = line.split()
        add_group(words)
        add_group([morph.third_singular(w) for w in words])
        add_group([morph.gerund(w, irr) for w in words])
        add_group([morph.past_forms(w, irr)[0] for w in words])
    for line in ADJ_GROUPS:
        add_group(line.split())

    for head in sorted(entries):
        if entries[head]:
            print(f"{head}\t{','.join(entries[head])}")


if __name__ == "__main__":
    main()
