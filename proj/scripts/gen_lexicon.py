#!/usr/bin/env python3
# Copyright 2026 The Parley Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/lexicon.tsv and data/dictionary.txt.

The dictionary is the top of the wordfreq English frequency list, merged
with every lexicon word and every word used by the shipped system text
(content pack, QA table, advice rules, scripts, persona greetings).

Requires `pip install wordfreq` only when regenerating.
"""

import pathlib
import re
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

DICTIONARY_SIZE = 3000

PRONOUNS = """I me my mine myself you your yours yourself yourselves he him his
himself she her hers herself it its itself we us our ours ourselves they them
their theirs themselves everything something anything nothing everyone someone
anyone nobody everybody somebody anybody""".split()

DETERMINERS = """a an the this that these those some any no every each all many
much few several both either neither another other such""".split()

WH_WORDS = "what when where why who whom whose which how".split()

PREPOSITIONS = """in on at to for with about from of by into onto over under
after during without through between among around than since until as near
behind across against along up down out off upon within""".split()

CONJUNCTIONS = "and but or so because if while although though nor yet unless".split()

NEGATIONS = ["not", "n't", "never"]

INTERJECTIONS = """oh ha hi hello hey wow ah yes no yeah yep nope ok okay pardon
well bye goodbye hmm please thanks sorry alas oops""".split()

DEGREE_ADVERBS = "very so extremely really quite too rather".split()

TEMPORAL = ["this week", "today", "now", "tomorrow", "these days", "tonight",
            "this year"]

ADVERBS = """again always often sometimes usually also then just still already
even only here there back outside inside maybe perhaps everyday yesterday soon
later together away ever once twice almost enough home abroad fast hard late
early far forward quickly slowly carefully certainly probably finally actually
especially recently sometime somewhere anywhere everywhere nowhere instead
otherwise quietly lately""".split()

# Subjective states used by the past-probe strategy.
AFFECT = """happy sad busy tired angry glad excited bored worried upset lonely
nervous unhappy afraid scared sick ill free fine""".split()

# Compliments addressed to the system.
COMPLIMENT = """clever smart nice kind funny beautiful pretty cute intelligent
good great wonderful lovely friendly handsome cool""".split()

ADJECTIVES = sorted(set(AFFECT + COMPLIMENT + """important final next last
first second third new old young big small little long short high low large
great bad best better worse worst easy difficult hard right wrong true false
real sure ready favorite favourite english-speaking main major minor oral dear
poor rich strong weak slim sexy interesting boring terrible horrible awful
crazy half whole normal special different same possible impossible useful
foreign international national local public private simple clear open close
full empty hot cold warm cool fresh late early safe dangerous healthy modern
popular famous correct suitable practical stylish sweet quiet loud serious
proud polite honest lazy curious extracurricular spare greatest common careful
beautiful wise silly stupid fantastic excellent perfect okay successful
favorable personal professional academic fluent""".split()))

MODALS = ["can", "could", "will", "would", "shall", "should", "may", "might",
          "must", "'ll"]

# surface, tense
COPULAS = [("am", "present"), ("is", "present"), ("are", "present"),
           ("was", "past"), ("were", "past"), ("be", "base"),
           ("been", "participle"), ("being", "gerund"), ("'m", "present"),
           ("'re", "present")]

IRREGULAR = {
    # base: (past, participle)
    "have": ("had", "had"), "do": ("did", "done"), "go": ("went", "gone"),
    "come": ("came", "come"), "get": ("got", "got"), "make": ("made", "made"),
    "take": ("took", "taken"), "see": ("saw", "seen"), "know": ("knew", "known"),
    "give": ("gave", "given"), "think": ("thought", "thought"),
    "tell": ("told", "told"), "say": ("said", "said"), "find": ("found", "found"),
    "run": ("ran", "run"), "sing": ("sang", "sung"), "write": ("wrote", "written"),
    "read": ("read", "read"), "eat": ("ate", "eaten"), "drink": ("drank", "drunk"),
    "speak": ("spoke", "spoken"), "buy": ("bought", "bought"),
    "bring": ("brought", "brought"), "teach": ("taught", "taught"),
    "feel": ("felt", "felt"), "leave": ("left", "left"), "meet": ("met", "met"),
    "pay": ("paid", "paid"), "put": ("put", "put"), "sit": ("sat", "sat"),
    "stand": ("stood", "stood"), "understand": ("understood", "understood"),
    "win": ("won", "won"), "lose": ("lost", "lost"), "hear": ("heard", "heard"),
    "hold": ("held", "held"), "keep": ("kept", "kept"), "sleep": ("slept", "slept"),
    "send": ("sent", "sent"), "spend": ("spent", "spent"), "build": ("built", "built"),
    "sell": ("sold", "sold"), "fly": ("flew", "flown"), "drive": ("drove", "driven"),
    "ride": ("rode", "ridden"), "swim": ("swam", "swum"), "begin": ("began", "begun"),
    "break": ("broke", "broken"), "choose": ("chose", "chosen"),
    "forget": ("forgot", "forgotten"), "fall": ("fell", "fallen"),
    "grow": ("grew", "grown"), "throw": ("threw", "thrown"), "wear": ("wore", "worn"),
    "become": ("became", "become"), "cut": ("cut", "cut"), "let": ("let", "let"),
    "set": ("set", "set"), "hit": ("hit", "hit"), "hurt": ("hurt", "hurt"),
    "cost": ("cost", "cost"), "shut": ("shut", "shut"), "show": ("showed", "shown"),
    "mean": ("meant", "meant"), "draw": ("drew", "drawn"), "wake": ("woke", "woken"),
    "catch": ("caught", "caught"), "fight": ("fought", "fought"),
    "lead": ("led", "led"), "lend": ("lent", "lent"), "light": ("lit", "lit"),
    "ring": ("rang", "rung"), "rise": ("rose", "risen"), "shake": ("shook", "shaken"),
    "steal": ("stole", "stolen"), "stick": ("stuck", "stuck"),
    "strike": ("struck", "struck"), "swing": ("swung", "swung"),
    "tear": ("tore", "torn"), "hide": ("hid", "hidden"), "bite": ("bit", "bitten"),
    "blow": ("blew", "blown"), "feed": ("fed", "fed"), "forgive": ("forgave", "forgiven"),
    "freeze": ("froze", "frozen"), "hang": ("hung", "hung"), "lay": ("laid", "laid"),
    "deal": ("dealt", "dealt"), "dig": ("dug", "dug"),
    "shoot": ("shot", "shot"), "sink": ("sank", "sunk"), "slide": ("slid", "slid"),
    "spin": ("spun", "spun"), "spread": ("spread", "spread"), "bet": ("bet", "bet"),
    "bend": ("bent", "bent"), "bleed": ("bled", "bled"),
    "breed": ("bred", "bred"), "flee": ("fled", "fled"),
    "quit": ("quit", "quit"), "seek": ("sought", "sought"), "sweep": ("swept", "swept"),
    "weep": ("wept", "wept"), "overcome": ("overcame", "overcome"),
    "undergo": ("underwent", "undergone"), "withdraw": ("withdrew", "withdrawn"),
    "arise": ("arose", "arisen"), "awake": ("awoke", "awoken"),
    "forbid": ("forbade", "forbidden"), "mistake": ("mistook", "mistaken"),
    "upset": ("upset", "upset"), "beat": ("beat", "beaten"),
}

REGULAR = """like love hate want need enjoy prefer try hope plan decide start
stop finish wish learn remember agree refuse promise expect intend mind regret
watch play work study help answer cry fail pass live look walk talk ask call
move open close listen use visit travel change join laugh smile dance cook
clean wash wait stay turn return arrive receive graduate complete attend face
believe waste involve apply explain describe improve practice practise chat
share care check count dream enter fill follow happen hurry imagine kill
kiss marry miss order own paint pick plant pray prepare print pull push rain
relax repeat rest save shout smell snow sound stare suppose surprise taste
thank touch train trust type worry yell reach seem appear offer suggest
prove compare consider develop discover discuss enable express finish
invite judge mark measure mention notice obtain offer organize perform
produce protect provide record reduce reflect reject relate release remain
rely remove replace report represent require respect respond serve settle
solve support treat vote wonder admire admit advise allow announce argue
avoid borrow bother burn collect complain connect continue copy correct
cover crash create decorate deliver depend deserve destroy disappear dress
drop earn employ encourage end enjoy escape exercise exist fix fold force
guess handle hunt identify ignore include increase inform interest introduce
invent jump kick knock land last laugh lift link load lock manage match
matter memorize mix name nod note obey object park pause permit phone place
point post pour practise present pretend prevent promise punish
question race reach realize recognize recommend refer register rely remind
rent repair reply rescue retire rob rush sail score search shop sign sin
ski slip smoke sort spell spill stamp store stuff succeed suffer supply
survive suspect switch talk telephone test tick tie tip trade translate
trap tour trouble unite unlock vanish wander warn welcome whisper wink
wish wrap yawn zoom""".split()

# Doubled final consonant in -ed/-ing (stop -> stopped).
DOUBLING = """stop plan chat drop shop admit permit prefer regret ship skip slip
rob rub hug beg jog nod pat plug trap grab fit knit occur refer commit
control""".split()

CATENATIVE = """like love hate want need enjoy prefer try hope plan decide begin
start stop finish keep wish learn forget remember agree refuse promise expect
intend mind""".split()

# Nouns from the shipped dialogs plus a few frequent ones.
NOUNS = """course examination exam semester major university college degree
bachelor history library activity activities game games computer internet tv
song story stories joke jokes news song information student students teacher
teachers foreigner type teaching subject subjects score strengths strength
time eyes eye way brain knowledge life house babies baby girls girl boy boys
mom mother father dad friends friend mommy answer thing things spare job
application interview company position work salary team plan plans future
career experience skill skills day days week year morning afternoon evening
night weekend name dialog dialogue book books music sport sports
film films movie movies phone family city country school class classes
lesson homework money food water tea coffee people man woman child children
hobby hobbies field fields goal goals reason reasons question questions
topic world example shoulder heart marriage carriage seat bicycle grapes
fox vine hopes""".split()

PROPER_NOUNS = """English Chinese GRE China Beijing America
American British French German Japanese Spanish Russian Monday Tuesday
Wednesday Thursday Friday Saturday Sunday January February April
June July August September October November December Olympic Olympics""".split()

# Title-case-only words stay out of the lowercase dictionary.
LOWERCASE_BANNED = {"i", "english", "chinese", "gre", "china", "beijing",
                    "america", "american", "british", "french", "german",
                    "japanese", "spanish", "russian", "monday", "tuesday",
                    "wednesday", "thursday", "friday", "saturday", "sunday",
                    "january", "february", "april", "june", "july", "august",
                    "september", "october", "november", "december"}

# Never admitted to the dictionary: the misspellings the checker must catch.
MISSPELLINGS = {"favorate", "liberary"}


def third_person(base):
    if re.search(r"(s|sh|ch|x|z|o)$", base):
        return base + "es"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ies"
    return base + "s"


def regular_past(base):
    if base in DOUBLING:
        return base + base[-1] + "ed"
    if base.endswith("e"):
        return base + "d"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ied"
    return base + "ed"


def gerund(base):
    if base.endswith("ie"):
        return base[:-2] + "ying"
    if base.endswith("e") and not re.search(r"(ee|ye|oe)$", base) and base != "be":
        return base[:-1] + "ing"
    if base in DOUBLING or base in {"run", "swim", "sit", "win", "begin", "get",
                                    "put", "cut", "let", "set", "hit", "shut",
                                    "forget", "dig", "spin", "bet", "quit"}:
        return base + base[-1] + "ing"
    return base + "ing"


def build_lexicon():
    entries = {}

    def add(word, cat):
        entries.setdefault(word, [])
        if cat not in entries[word]:
            entries[word].append(cat)

    for w in PRONOUNS:
        add(w, "pronoun")
    for w in DETERMINERS:
        add(w, "determiner")
    for w in WH_WORDS:
        add(w, "wh-word")
    for w in PREPOSITIONS:
        add(w, "preposition")
    for w in CONJUNCTIONS:
        add(w, "conjunction")
    for w in NEGATIONS:
        add(w, "negation")
    for w in INTERJECTIONS:
        add(w, "interjection")
    for w, tense in COPULAS:
        add(w, "copula:" + tense)
    for w in MODALS:
        add(w, "modal")
    for w in ["do", "does", "did", "have", "has", "had", "'ve", "'d"]:
        add(w, "auxiliary")
    for phrase in TEMPORAL:
        add(phrase, "temporal-adverbial")
    for w in DEGREE_ADVERBS:
        add(w, "adverb:degree")
    for w in ADVERBS:
        add(w, "adverb")

    verbs = {}
    for base, (past, part) in IRREGULAR.items():
        verbs[base] = (past, part)
    for base in REGULAR:
        if base not in verbs:
            p = regular_past(base)
            verbs[base] = (p, p)
    links = {}
    for base in sorted(verbs):
        past, part = verbs[base]
        forms = [(base, "verb"),
                 (past, "verb-past:" + base),
                 (part, "verb-participle:" + base),
                 ("has" if base == "have" else
                  "does" if base == "do" else
                  "goes" if base == "go" else third_person(base),
                  "verb-3sg:" + base),
                 (gerund(base), "verb-gerund:" + base)]
        for word, cat in forms:
            if word != base:
                owner = links.setdefault(word, base)
                assert owner == base, f"{word} links to {owner} and {base}"
            add(word, cat)
        if base in CATENATIVE:
            add(base, "catenative")

    for w in ADJECTIVES:
        add(w, "adjective")
    for w in AFFECT:
        add(w, "affect")
    for w in COMPLIMENT:
        add(w, "compliment")
    for w in NOUNS:
        add(w, "noun")
    for w in PROPER_NOUNS:
        add(w, "proper-noun")
    return entries


def words_in(text):
    return re.findall(r"[A-Za-z]+(?:-[A-Za-z]+)*", text)


def system_text_words():
    words = set()
    for name in ["content.txt", "qa.tsv", "advice.tsv", "aphorisms.tsv",
                 "personas.tsv", "phrases.tsv"]:
        path = DATA / name
        if path.exists():
            words.update(words_in(path.read_text(encoding="utf-8")))
    for path in (DATA / "scripts").glob("*.txt"):
        words.update(words_in(path.read_text(encoding="utf-8")))
    return words


def main():
    import wordfreq  # noqa: only needed for regeneration

    entries = build_lexicon()
    with open(DATA / "lexicon.tsv", "w", encoding="utf-8") as out:
        out.write("# word<TAB>category[,category...]\n")
        for word in sorted(entries, key=lambda w: (w.lower(), w)):
            out.write(f"{word}\t{','.join(entries[word])}\n")

    proper = {w for w in PROPER_NOUNS}
    proper_lower = {w.lower() for w in PROPER_NOUNS}
    dictionary = set()
    for w in wordfreq.top_n_list("en", DICTIONARY_SIZE * 2):
        if not re.fullmatch(r"[a-z]+", w) or len(dictionary) >= DICTIONARY_SIZE:
            continue
        if w in LOWERCASE_BANNED or w in proper_lower:
            continue
        dictionary.add(w)
    for w in entries:
        if " " in w:
            dictionary.update(w.split())
        else:
            dictionary.add(w)
    for w in system_text_words():
        if w in proper or w.lower() in proper_lower:
            continue
        if w[0].isupper() and w.lower() not in dictionary and w.lower() != "i":
            # Names (Johnny, Daisy, Baby Talk) stay proper nouns.
            continue
        dictionary.add(w.lower())
    dictionary -= MISSPELLINGS
    dictionary -= LOWERCASE_BANNED
    dictionary |= proper
    with open(DATA / "dictionary.txt", "w", encoding="utf-8") as out:
        for w in sorted(dictionary, key=lambda w: (w.lower(), w)):
            out.write(w + "\n")
    print(f"lexicon: {len(entries)} entries, dictionary: {len(dictionary)} words",
          file=sys.stderr)


if __name__ == "__main__":
    main()
