"""Word lists backing the rule-based tagger and the coreference heuristic.

Closed-class words (determiners, pronouns, adpositions/conjunctions,
auxiliaries) receive the coarse tag OTHER with their subcategory recorded
in fine_pos. Open-class membership is decided by the lemma lexicons below
plus affix stripping; anything alphabetic that matches nothing defaults
to NOUN, the most common open class.
"""

from __future__ import annotations

DETERMINERS = frozenset("""
a an the this that these those some any each every either neither no
another such both all most many much few several
""".split())

PRONOUNS = frozenset("""
i me my mine myself
you your yours yourself yourselves
he him his himself
she her hers herself
it its itself
we us our ours ourselves
they them their theirs themselves
who whom whose which what whoever whatever
someone anyone everyone nobody somebody anybody everybody
something anything everything nothing
""".split())

# Third-person anaphors: the subset of PRONOUNS the coreference heuristic
# attaches to the most recent noun. First/second person have no textual
# antecedent, so they never extend a chain.
ANAPHORIC_PRONOUNS = frozenset("""
he him his himself she her hers herself it its itself
they them their theirs themselves
""".split())

ADPOSITIONS_CONJUNCTIONS = frozenset("""
in on at by for with from to of as into onto over under between among
through during before after above below up down out off about against
across along around behind beside beyond inside outside near past since
toward towards upon within without
and or but nor so yet if because although though while when where
until unless whether than that whereas
""".split())

AUXILIARIES = frozenset("""
be am is are was were been being
do does did done doing
have has had having
will would can could may might must shall should
not there
""".split())

# Open-class lemma lexicons. Inflected forms reduce to these via the
# affix rules in backend.py; a reduced form counts as that class only
# when the base appears here.
VERB_LEMMAS = frozenset("""
run walk eat drink sleep sit stand jump play bark chase hunt climb swim
fly fall rise move push pull open close start stop begin end go come
see look watch hear listen say tell speak talk ask answer call shout
make take give get find keep leave lead meet pay think know believe
feel want need like love hate help work rest live die grow throw catch
write read sing dance cook clean wash build break cut carry bring send
sell buy win lose hold turn follow happen cause seem appear stay wait
remember forget learn teach try use show visit travel arrive reach
laugh cry smile rain snow shine cover gather
""".split())

ADJ_LEMMAS = frozenset("""
big small large little long short tall high low wide narrow deep
good bad new old young fast slow quick happy sad angry calm gentle
fierce wild tame hot cold warm cool bright dark heavy light hard soft
loud quiet hungry thirsty tired clever clear muddy fresh dry wet clean
dirty empty full strong weak early late red blue green yellow black
white brown gray grey nice fine great
""".split())

ADV_LEMMAS = frozenset("""
quickly slowly quietly loudly gently badly well very too quite rather
almost always never often sometimes usually soon later early late here
there away back again still already now then once twice yesterday
today tomorrow everywhere nearby outside inside upstairs downstairs
together apart forward backward home therefore however moreover
meanwhile instead
""".split())

# Irregular inflections the affix rules cannot reach. Values are lemmas.
IRREGULAR_VERB_PAST = {
    "ate": "eat", "bought": "buy", "broke": "break", "brought": "bring",
    "built": "build", "came": "come", "caught": "catch", "cut": "cut",
    "drank": "drink", "drove": "drive", "fell": "fall", "felt": "feel",
    "flew": "fly", "forgot": "forget", "found": "find", "gave": "give",
    "got": "get", "grew": "grow", "heard": "hear", "held": "hold",
    "kept": "keep", "knew": "know", "led": "lead", "left": "leave",
    "lost": "lose", "made": "make", "met": "meet", "paid": "pay",
    "ran": "run", "rose": "rise", "said": "say", "sang": "sing",
    "sat": "sit", "saw": "see", "sent": "send", "slept": "sleep",
    "sold": "sell", "spoke": "speak", "stood": "stand", "swam": "swim",
    "taught": "teach", "thought": "think", "threw": "throw",
    "told": "tell", "took": "take", "went": "go", "won": "win",
    "wore": "wear", "wrote": "write",
}

IRREGULAR_NOUN_PLURAL = {
    "children": "child", "feet": "foot", "geese": "goose",
    "knives": "knife", "leaves": "leaf", "lives": "life",
    "men": "man", "mice": "mouse", "people": "person",
    "teeth": "tooth", "wolves": "wolf", "women": "woman",
}
