#!/usr/bin/env python3
"""Builds the shipped lexicon data directory.

Converts a WordNet 3.x database directory (the index.* / data.* files) into
the flat TSV files read by pertcheck, and writes the curated tables
(contractions, gender pairs, verb agreement, stopwords, gazetteers) that do
not come from WordNet.

Usage:
  build_lexicon.py --wordnet-dict DIR --out data/lexicon \
      [--male-names m.json --female-names f.json --surnames s.json]

The output of this script is committed as data; rerunning it regenerates
the files byte-identically for a given WordNet release.
"""

import argparse
import json
import re
from pathlib import Path

WORD_RE = re.compile(r"^[a-z][a-z-]*[a-z]$")
MAX_WORD_LEN = 24
MAX_SENSES_SYNONYMS = 3
MAX_SENSES_HYPERNYMS = 4
MAX_SYNONYMS_PER_WORD = 12

POS_FILES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}

# Curated co-hyponym overlay: guarantees useful sibling sets for the
# misinformation templates regardless of how deep WordNet's own tree is.
PROFESSIONS = """musician architect engineer doctor lawyer teacher scientist
artist writer composer painter singer dancer actor chef pilot farmer soldier
nurse journalist photographer designer athlete cricketer footballer banker
programmer director producer professor librarian astronomer biologist
historian economist surgeon dentist carpenter plumber electrician tailor
barber butcher baker driver sailor hunter poet novelist sculptor violinist
pianist drummer guitarist conductor manager clerk accountant merchant
trader broker judge magistrate senator governor mayor minister ambassador
general captain colonel admiral detective inspector guard architect
""".split()

GENDER_PAIRS = [
    ("girl", "boy"), ("girls", "boys"), ("he", "she"), ("man", "woman"),
    ("men", "women"), ("mother", "father"), ("mothers", "fathers"),
    ("sister", "brother"), ("sisters", "brothers"), ("king", "queen"),
    ("kings", "queens"), ("actor", "actress"), ("waiter", "waitress"),
    ("lady", "gentleman"), ("ladies", "gentlemen"), ("aunt", "uncle"),
    ("aunts", "uncles"), ("son", "daughter"), ("sons", "daughters"),
    ("grandfather", "grandmother"), ("grandson", "granddaughter"),
    ("husband", "wife"), ("husbands", "wives"), ("boyfriend", "girlfriend"),
    ("prince", "princess"), ("hero", "heroine"), ("nephew", "niece"),
    ("lord", "lady"), ("sir", "madam"), ("mr", "mrs"), ("dad", "mom"),
    ("daddy", "mommy"), ("papa", "mama"), ("widower", "widow"),
    ("groom", "bride"), ("host", "hostess"),
    ("duke", "duchess"), ("emperor", "empress"), ("god", "goddess"),
    ("monk", "nun"), ("wizard", "witch"), ("steward", "stewardess"),
    ("male", "female"), ("males", "females"), ("himself", "herself"),
]

CONTRACTIONS = [
    ("are not", "aren't"), ("cannot", "can't"), ("could not", "couldn't"),
    ("did not", "didn't"), ("does not", "doesn't"), ("do not", "don't"),
    ("had not", "hadn't"), ("has not", "hasn't"), ("have not", "haven't"),
    ("is not", "isn't"), ("must not", "mustn't"), ("should not", "shouldn't"),
    ("was not", "wasn't"), ("were not", "weren't"), ("will not", "won't"),
    ("would not", "wouldn't"),
    ("i am", "i'm"), ("i have", "i've"), ("i will", "i'll"), ("i would", "i'd"),
    ("you are", "you're"), ("you have", "you've"), ("you will", "you'll"),
    ("he is", "he's"), ("he will", "he'll"), ("she is", "she's"),
    ("she will", "she'll"), ("it is", "it's"), ("it will", "it'll"),
    ("we are", "we're"), ("we have", "we've"), ("we will", "we'll"),
    ("we would", "we'd"), ("they are", "they're"), ("they have", "they've"),
    ("they will", "they'll"), ("that is", "that's"), ("there is", "there's"),
    ("there are", "there're"), ("what is", "what's"), ("who is", "who's"),
    ("where is", "where's"), ("let us", "let's"),
]

# Directed pairs: replacing either side with the other breaks number
# agreement with the original subject.
AGREEMENT_PAIRS = [
    ("is", "are"), ("was", "were"), ("has", "have"), ("does", "do"),
    ("doesn't", "don't"), ("isn't", "aren't"), ("wasn't", "weren't"),
    ("hasn't", "haven't"), ("goes", "go"), ("says", "say"), ("wants", "want"),
    ("knows", "know"), ("likes", "like"), ("needs", "need"), ("plays", "play"),
    ("runs", "run"), ("comes", "come"), ("makes", "make"), ("gets", "get"),
    ("takes", "take"), ("sees", "see"), ("thinks", "think"), ("looks", "look"),
    ("gives", "give"), ("finds", "find"), ("tells", "tell"), ("asks", "ask"),
    ("works", "work"), ("seems", "seem"), ("feels", "feel"), ("tries", "try"),
    ("leaves", "leave"), ("calls", "call"), ("lives", "live"), ("loves", "love"),
    ("keeps", "keep"), ("helps", "help"), ("talks", "talk"), ("turns", "turn"),
    ("starts", "start"), ("shows", "show"), ("hears", "hear"), ("moves", "move"),
    ("believes", "believe"), ("brings", "bring"), ("happens", "happen"),
    ("writes", "write"), ("sits", "sit"), ("stands", "stand"), ("loses", "lose"),
    ("pays", "pay"), ("meets", "meet"), ("includes", "include"),
    ("continues", "continue"), ("changes", "change"), ("leads", "lead"),
    ("understands", "understand"), ("watches", "watch"), ("follows", "follow"),
    ("stops", "stop"), ("creates", "create"), ("speaks", "speak"),
    ("reads", "read"), ("spends", "spend"), ("grows", "grow"), ("opens", "open"),
    ("walks", "walk"), ("wins", "win"), ("offers", "offer"),
    ("remembers", "remember"), ("considers", "consider"), ("appears", "appear"),
    ("buys", "buy"), ("waits", "wait"), ("serves", "serve"), ("dies", "die"),
    ("sends", "send"), ("expects", "expect"), ("builds", "build"),
    ("stays", "stay"), ("falls", "fall"), ("cuts", "cut"), ("reaches", "reach"),
    ("kills", "kill"), ("raises", "raise"), ("passes", "pass"), ("sells", "sell"),
    ("decides", "decide"), ("returns", "return"), ("explains", "explain"),
    ("hopes", "hope"), ("develops", "develop"), ("carries", "carry"),
    ("breaks", "break"), ("receives", "receive"), ("agrees", "agree"),
    ("supports", "support"), ("hits", "hit"), ("produces", "produce"),
    ("eats", "eat"), ("covers", "cover"), ("catches", "catch"), ("draws", "draw"),
    ("chooses", "choose"), ("enjoys", "enjoy"), ("sings", "sing"),
    ("rains", "rain"), ("bakes", "bake"), ("rides", "ride"), ("sleeps", "sleep"),
    ("teaches", "teach"), ("costs", "cost"), ("drives", "drive"),
]

STOPWORDS = """i me my myself we our ours ourselves you you're you've you'll
you'd your yours yourself yourselves he him his himself she she's her hers
herself it it's its itself they them their theirs themselves what which who
whom this that that'll these those am is are was were be been being have has
had having do does did doing a an the and but if or because as until while of
at by for with about against between into through during before after above
below to from up down in out on off over under again further then once here
there when where why how all any both each few more most other some such no
nor not only own same so than too very s t can will just don don't should
should've now d ll m o re ve y ain aren aren't couldn couldn't didn didn't
doesn doesn't hadn hadn't hasn hasn't haven haven't isn isn't ma mightn
mightn't mustn mustn't needn needn't shan shan't shouldn shouldn't wasn
wasn't weren weren't won won't wouldn wouldn't""".split()

PLACES = """Afghanistan Albania Algeria Argentina Armenia Australia Austria
Azerbaijan Bahrain Bangladesh Belarus Belgium Bolivia Brazil Bulgaria Cambodia
Cameroon Canada Chile China Colombia Croatia Cuba Cyprus Denmark Ecuador Egypt
Estonia Ethiopia Finland France Georgia Germany Ghana Greece Guatemala Haiti
Honduras Hungary Iceland India Indonesia Iran Iraq Ireland Israel Italy
Jamaica Japan Jordan Kazakhstan Kenya Kuwait Laos Latvia Lebanon Libya
Lithuania Luxembourg Madagascar Malaysia Mali Malta Mexico Monaco Mongolia
Morocco Mozambique Myanmar Nepal Netherlands Nicaragua Nigeria Norway Oman
Pakistan Panama Paraguay Peru Philippines Poland Portugal Qatar Romania
Russia Rwanda Senegal Serbia Singapore Slovakia Slovenia Somalia Spain
Sudan Sweden Switzerland Syria Taiwan Tanzania Thailand Tunisia Turkey
Uganda Ukraine Uruguay Uzbekistan Venezuela Vietnam Yemen Zambia Zimbabwe
Amsterdam Athens Atlanta Baghdad Bangalore Bangkok Barcelona Beijing Berlin
Boston Brussels Budapest Cairo Calcutta Chennai Chicago Copenhagen Dallas
Delhi Denver Detroit Dubai Dublin Edinburgh Florence Frankfurt Geneva
Glasgow Hamburg Hanoi Havana Helsinki Houston Istanbul Jakarta Jerusalem
Johannesburg Karachi Kathmandu Kiev Kolkata Lagos Lahore Lisbon Liverpool
London Madrid Manchester Manila Marseille Melbourne Miami Milan Montreal
Moscow Mumbai Munich Nairobi Naples Osaka Oslo Ottawa Paris Philadelphia
Phoenix Prague Pune Rome Seattle Seoul Shanghai Singapore Stockholm Sydney
Taipei Tehran Tokyo Toronto Vancouver Venice Vienna Warsaw Washington
Wellington Zurich America Europe Asia Africa England Scotland Wales
California Texas Florida Chennai Hyderabad""".split()

# Names used in well-known example sentences plus a few international ones
# that the census-style lists miss.
EXTRA_PERSONS = {
    "Beethoven": "m", "Mozart": "m", "Einstein": "m", "Newton": "m",
    "Tesla": "u", "Darwin": "m", "Shakespeare": "m", "Rowling": "u",
    "Cameron": "u", "Raj": "m", "Ananya": "f", "Priya": "f", "Arjun": "m",
    "Aron": "m", "Ralston": "u", "Andy": "m",
    "Gandhi": "u", "Lincoln": "m", "Churchill": "m", "Picasso": "m",
}


def parse_data_file(path):
    """Returns {offset: (ss_type, [words], [(ptr, target_offset, target_pos, src, tgt)])}."""
    synsets = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(" "):
                continue
            fields = line.split(" ")
            offset = fields[0]
            ss_type = fields[2]
            w_cnt = int(fields[3], 16)
            words = []
            idx = 4
            for _ in range(w_cnt):
                word = fields[idx]
                # strip adjective syntax markers like (a) / (ip)
                word = re.sub(r"\(.*\)$", "", word)
                words.append(word.lower())
                idx += 2
            p_cnt = int(fields[idx])
            idx += 1
            ptrs = []
            for _ in range(p_cnt):
                sym = fields[idx]
                tgt_off = fields[idx + 1]
                tgt_pos = fields[idx + 2]
                st = fields[idx + 3]
                src = int(st[:2], 16)
                tgt = int(st[2:], 16)
                ptrs.append((sym, tgt_off, tgt_pos, src, tgt))
                idx += 4
            synsets[offset] = (ss_type, words, ptrs)
    return synsets


def parse_index_file(path):
    """Returns {lemma: [synset offsets in sense order]}."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(" "):
                continue
            fields = line.split()
            lemma = fields[0]
            p_cnt = int(fields[3])
            offsets = fields[6 + p_cnt:]
            out[lemma] = offsets
    return out


def keep(word):
    return len(word) <= MAX_WORD_LEN and WORD_RE.match(word) is not None


def first_kept(words):
    for w in words:
        if keep(w):
            return w
    return None


def build_wordnet_tables(dict_dir):
    synonyms = {}   # (word, pos) -> set
    hypernyms = {}  # (word, pos) -> set of labels
    antonyms = {}   # (word, pos) -> set

    for pos, suffix in POS_FILES.items():
        data = parse_data_file(Path(dict_dir) / f"data.{suffix}")
        index = parse_index_file(Path(dict_dir) / f"index.{suffix}")

        for lemma, offsets in index.items():
            if not keep(lemma):
                continue
            for rank, off in enumerate(offsets):
                if off not in data:
                    continue
                ss_type, words, ptrs = data[off]

                if rank < MAX_SENSES_SYNONYMS:
                    for w in words:
                        if w != lemma and keep(w):
                            synonyms.setdefault((lemma, pos), set()).add(w)

                if rank < MAX_SENSES_HYPERNYMS:
                    for sym, tgt_off, tgt_pos, _, _ in ptrs:
                        if sym in ("@", "@i") and tgt_off in data:
                            label = first_kept(data[tgt_off][1])
                            if label and label != lemma:
                                hypernyms.setdefault((lemma, pos), set()).add(label)
                        # satellite adjectives hang off their cluster head;
                        # the head doubles as the hypernym label and the
                        # head's members count as synonyms
                        if pos == "a" and sym == "&" and ss_type == "s" and tgt_off in data:
                            head_words = data[tgt_off][1]
                            label = first_kept(head_words)
                            if label and label != lemma:
                                hypernyms.setdefault((lemma, pos), set()).add(label)
                            if rank < MAX_SENSES_SYNONYMS:
                                for w in head_words:
                                    if w != lemma and keep(w):
                                        synonyms.setdefault((lemma, pos), set()).add(w)

                for sym, tgt_off, tgt_pos, src, tgt in ptrs:
                    if sym == "!" and tgt_off in data and src > 0:
                        src_word = words[src - 1]
                        if src_word != lemma or not keep(src_word):
                            continue
                        tgt_words = data[tgt_off][1]
                        if 0 < tgt <= len(tgt_words) and keep(tgt_words[tgt - 1]):
                            antonyms.setdefault((lemma, pos), set()).add(tgt_words[tgt - 1])

    for p in PROFESSIONS:
        hypernyms.setdefault((p, "n"), set()).add("professional")

    # symmetrize synonymy (satellite->head pairs arrive one-sided)
    for (word, pos), syns in list(synonyms.items()):
        for s in syns:
            synonyms.setdefault((s, pos), set()).add(word)

    return synonyms, hypernyms, antonyms


def write_tsv(path, header, rows):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header)
        for row in rows:
            fh.write("\t".join(row) + "\n")
    print(f"  {path}: {len(rows)} rows")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wordnet-dict", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--male-names")
    ap.add_argument("--female-names")
    ap.add_argument("--surnames")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    synonyms, hypernyms, antonyms = build_wordnet_tables(args.wordnet_dict)

    gen = "# generated by scripts/build_lexicon.py -- do not edit by hand\n"

    rows = []
    for (word, pos), syns in sorted(synonyms.items()):
        for s in sorted(syns)[:MAX_SYNONYMS_PER_WORD]:
            rows.append((word, pos, s))
    write_tsv(out / "synsets.tsv", gen + "# word\tpos\tsynonym\n", rows)

    rows = []
    for (word, pos), parents in sorted(hypernyms.items()):
        for p in sorted(parents):
            rows.append((word, pos, p))
    write_tsv(out / "hypernyms.tsv", gen + "# word\tpos\thypernym\n", rows)

    rows = []
    for (word, pos), ants in sorted(antonyms.items()):
        for a in sorted(ants):
            rows.append((word, pos, a))
    write_tsv(out / "antonyms.tsv", gen + "# word\tpos\tantonym\n", rows)

    rows = []
    for a, b in GENDER_PAIRS:
        rows.append((a, b))
        rows.append((b, a))
    rows = sorted(set(rows))
    write_tsv(out / "gender.tsv", gen + "# word\tcounterpart (involution)\n", rows)

    write_tsv(out / "contractions.tsv", gen + "# expansion\tcontraction\n",
              sorted(CONTRACTIONS))

    rows = sorted(set(AGREEMENT_PAIRS) | {(b, a) for a, b in AGREEMENT_PAIRS})
    write_tsv(out / "verb_agreement.tsv", gen + "# form\tdisagreeing form\n", rows)

    with open(out / "stopwords.txt", "w", encoding="utf-8") as fh:
        fh.write(gen)
        for w in sorted(set(STOPWORDS)):
            fh.write(w + "\n")
    print(f"  {out/'stopwords.txt'}: {len(set(STOPWORDS))} words")

    persons = {}
    def add_names(path, gender):
        if not path:
            return
        for name in json.load(open(path, encoding="utf-8")):
            name = name.strip()
            if re.match(r"^[A-Za-z][a-z'-]+$", name):
                persons.setdefault(name.capitalize(), gender)
    add_names(args.male_names, "m")
    add_names(args.female_names, "f")
    if args.surnames:
        for name in json.load(open(args.surnames, encoding="utf-8")):
            persons.setdefault(name.strip().capitalize(), "u")
    for name, g in EXTRA_PERSONS.items():
        persons.setdefault(name, g)
    write_tsv(out / "gazetteer_person.txt", gen + "# name\tgender (m/f/u)\n",
              sorted(persons.items()))

    with open(out / "gazetteer_place.txt", "w", encoding="utf-8") as fh:
        fh.write(gen)
        for p in sorted(set(PLACES)):
            fh.write(p + "\n")
    print(f"  {out/'gazetteer_place.txt'}: {len(set(PLACES))} names")


if __name__ == "__main__":
    main()
