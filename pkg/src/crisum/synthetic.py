"""Seeded synthetic crisis corpora with planted gold facts.

Each class carries a handful of facts; every fact has a canonical sentence
(what the gold summary states) plus surface variants that share bigram
skeletons, so the word graph can fuse them, while differing in enough
content words to survive near-duplicate removal. Chatter tweets supply the
noise floor a random baseline wastes its budget on.
"""

from __future__ import annotations

import random

from .ingest import AnnotatedTweet, DepEdge, Token
from .tokenrules import AUX_LEMMAS

DAY_2015_04_25 = 1429920000  # 2015-04-25T00:00:00Z

_LEMMA_OVERRIDES = {
    "closed": "close", "collapsed": "collapse", "damaged": "damage",
    "cancelled": "cancel", "blocked": "block", "killed": "kill",
    "injured": "injure", "stranded": "strand", "trapped": "trap",
    "sent": "send", "landed": "land", "reopened": "reopen",
    "restored": "restore", "declared": "declare", "struck": "strike",
    "reported": "report", "rescued": "rescue", "toppled": "topple",
    "wounded": "wound", "suspended": "suspend", "deployed": "deploy",
    "cracked": "crack", "buildings": "building", "flights": "flight",
    "tents": "tent", "supplies": "supply", "people": "person",
    "tourists": "tourist", "families": "family", "doctors": "doctor",
    "teams": "team", "roads": "road", "lines": "line", "prayers": "prayer",
    "thoughts": "thought", "victims": "victim", "temples": "temple",
    "distributed": "distribute", "located": "locate", "equipped": "equip",
    "opened": "open", "imposed": "impose", "diverted": "divert",
    "dispatched": "dispatch", "launched": "launch", "evacuated": "evacuate",
    "buried": "bury", "arrived": "arrive", "cheered": "cheer",
    "feared": "fear", "lost": "lose", "updated": "update",
    "unloaded": "unload", "treated": "treat",
}


def _token(word: str, pos: str) -> Token:
    lower = word.lower()
    return Token(word, _LEMMA_OVERRIDES.get(lower, lower), pos)


def _parse_tagged(tagged: str) -> tuple[Token, ...]:
    tokens = []
    for item in tagged.split():
        word, _, pos = item.rpartition("/")
        tokens.append(_token(word, pos))
    return tuple(tokens)


def _auto_deps(tokens) -> tuple[DepEdge, ...]:
    """Attach each main verb to its nearest preceding and following noun."""
    edges = []
    for v, tok in enumerate(tokens):
        if not tok.pos.startswith("VB"):
            continue
        before = [i for i in range(v) if tokens[i].pos.startswith("NN")]
        after = [i for i in range(v + 1, len(tokens)) if tokens[i].pos.startswith("NN")]
        if before:
            edges.append(DepEdge(v, before[-1], "nsubj"))
        if after:
            edges.append(DepEdge(v, after[0], "dobj"))
    return tuple(edges)


# fact -> list of tagged variants; variant 0 is the canonical gold sentence.
# Variants of one fact share bigram skeletons (so the word graph can fuse
# them) while differing in enough content words to survive near-duplicate
# removal, mirroring how distinct eyewitness phrasings of one sub-event look.
FACTS: dict[str, list[list[str]]] = {
    "infrastructure": [
        [
            "tribhuvan/NNP international/JJ airport/NN closed/VBD after/IN 7.9/CD earthquake/NN in/IN kathmandu/NNP",
            "airport/NN closed/VBD after/IN the/DT quake/NN officials/NNS confirm/VBP",
            "tribhuvan/NNP airport/NN closed/VBD all/DT flights/NNS diverted/VBN to/TO delhi/NNP",
            "breaking/UH tribhuvan/NNP international/JJ airport/NN closed/VBD runway/NN shut/VBN",
            "airport/NN closed/VBD after/IN 7.9/CD earthquake/NN pilots/NNS circling/VBG",
        ],
        [
            "historic/JJ dharahara/NNP tower/NN toppled/VBD in/IN central/JJ kathmandu/NNP",
            "dharahara/NNP tower/NN toppled/VBD dozens/NNS feared/VBN inside/RB",
            "the/DT old/JJ tower/NN toppled/VBD near/IN durbar/NNP square/NNP",
            "landmark/NN dharahara/NNP tower/NN toppled/VBD in/IN central/JJ district/NN",
            "tower/NN toppled/VBD in/IN kathmandu/NNP bystanders/NNS filming/VBG",
        ],
        [
            "phone/NN lines/NNS damaged/VBN across/IN gorkha/NNP district/NN",
            "power/NN and/CC phone/NN lines/NNS damaged/VBN residents/NNS report/VBP",
            "lines/NNS damaged/VBN in/IN gorkha/NNP repair/NN crews/NNS dispatched/VBN",
            "telecom/NN operators/NNS say/VBP phone/NN lines/NNS damaged/VBN badly/RB",
            "phone/NN lines/NNS damaged/VBN villagers/NNS unreachable/JJ",
        ],
        [
            "main/JJ road/NN to/TO pokhara/NNP blocked/VBN by/IN landslide/NN",
            "road/NN blocked/VBN by/IN landslide/NN near/IN pokhara/NNP valley/NN",
            "highway/NN road/NN blocked/VBN rescue/NN convoy/NN stuck/VBN",
            "main/JJ road/NN to/TO pokhara/NNP blocked/VBN drivers/NNS stranded/VBN",
            "road/NN blocked/VBN by/IN boulders/NNS bulldozers/NNS working/VBG",
        ],
        [
            "ancient/JJ temples/NNS collapsed/VBD in/IN bhaktapur/NNP square/NN",
            "temples/NNS collapsed/VBD in/IN bhaktapur/NNP heritage/NN lost/VBN",
            "several/JJ temples/NNS collapsed/VBD after/IN strong/JJ aftershock/NN",
            "ancient/JJ temples/NNS collapsed/VBD monks/NNS evacuated/VBN",
            "temples/NNS collapsed/VBD in/IN bhaktapur/NNP courtyards/NNS buried/VBN",
        ],
        [
            "water/NN supply/NN restored/VBN to/TO lalitpur/NNP hospital/NN",
            "hospital/NN water/NN supply/NN restored/VBN after/IN two/CD days/NNS",
            "water/NN restored/VBN in/IN lalitpur/NNP tankers/NNS arrived/VBD",
            "water/NN supply/NN restored/VBN engineers/NNS cheered/VBD",
            "supply/NN restored/VBN to/TO lalitpur/NNP hospital/NN wards/NNS reopen/VBP",
        ],
    ],
    "missing": [
        [
            "48/CD tourists/NNS stranded/VBN on/IN everest/NNP base/NN camp/NN",
            "tourists/NNS stranded/VBN at/IN base/NN camp/NN await/VBP airlift/NN",
            "dozens/NNS of/IN tourists/NNS stranded/VBN after/IN avalanche/NN",
            "48/CD tourists/NNS stranded/VBN guides/NNS radioing/VBG for/IN help/NN",
        ],
        [
            "12/CD climbers/NNS trapped/VBN by/IN avalanche/NN near/IN everest/NNP",
            "climbers/NNS trapped/VBN on/IN the/DT mountain/NN rescue/NN underway/RB",
            "avalanche/NN trapped/VBD climbers/NNS helicopters/NNS searching/VBG",
            "12/CD climbers/NNS trapped/VBN sherpas/NNS digging/VBG",
        ],
        [
            "families/NNS stuck/VBN under/IN rubble/NN in/IN sindhupalchok/NNP",
            "rescuers/NNS dig/VBP for/IN families/NNS stuck/VBN under/IN rubble/NN",
            "families/NNS stuck/VBN volunteers/NNS clearing/VBG debris/NN",
            "families/NNS stuck/VBN under/IN rubble/NN neighbors/NNS helping/VBG",
        ],
        [
            "embassy/NN database/NN tracking/VBG missing/JJ persons/NNS opened/VBD",
            "database/NN tracking/VBG the/DT missing/JJ launched/VBN online/RB",
            "red/NNP cross/NNP database/NN tracking/VBG missing/JJ relatives/NNS",
            "embassy/NN database/NN tracking/VBG missing/JJ trekkers/NNS updated/VBN",
        ],
        [
            "rescue/NN teams/NNS located/VBD survivors/NNS in/IN collapsed/JJ school/NN",
            "teams/NNS located/VBD five/CD survivors/NNS overnight/RB",
            "sniffer/NN dogs/NNS located/VBD survivors/NNS under/IN debris/NN",
            "rescue/NN teams/NNS located/VBD survivors/NNS cheering/VBG crowds/NNS",
        ],
    ],
    "shelter": [
        [
            "army/NN deployed/VBD 4/CD ton/NN relief/NN material/NN to/TO nepal/NNP",
            "india/NNP sent/VBD 4/CD ton/NN relief/NN material/NN team/NN of/IN doctors/NNS",
            "relief/NN material/NN deployed/VBN by/IN army/NN aircraft/NN",
            "army/NN deployed/VBD 4/CD ton/NN relief/NN material/NN trucks/NNS rolling/VBG",
        ],
        [
            "emergency/NN declared/VBN in/IN kathmandu/NNP valley/NN",
            "government/NN declared/VBD state/NN of/IN emergency/NN",
            "emergency/NN declared/VBN curfew/NN imposed/VBN overnight/RB",
            "emergency/NN declared/VBN in/IN kathmandu/NNP schools/NNS suspended/VBN",
        ],
        [
            "5000/CD tents/NNS distributed/VBN at/IN tundikhel/NNP ground/NN",
            "tents/NNS distributed/VBN to/TO displaced/JJ families/NNS",
            "volunteers/NNS distributed/VBD tents/NNS and/CC blankets/NNS",
            "5000/CD tents/NNS distributed/VBN queues/NNS forming/VBG",
        ],
        [
            "field/NN hospital/NN equipped/VBN with/IN water/NN purifiers/NNS",
            "mobile/JJ field/NN hospital/NN equipped/VBN near/IN airport/NN",
            "hospital/NN equipped/VBN with/IN supplies/NNS by/IN un/NNP team/NN",
            "field/NN hospital/NN equipped/VBN surgeons/NNS arriving/VBG",
        ],
        [
            "transport/NN aircraft/NN deployed/VBN with/IN medical/JJ supplies/NNS",
            "c-130/NNP aircraft/NN deployed/VBN carrying/VBG 55/CD doctors/NNS",
            "two/CD aircraft/NN deployed/VBN with/IN food/NN supplies/NNS",
            "transport/NN aircraft/NN deployed/VBN crates/NNS unloaded/VBN",
        ],
    ],
}

# chatter templates are parametric so distinct instantiations survive
# near-duplicate removal and form a genuine noise floor
_CHATTER_TEMPLATES = [
    "praying/VBG for/IN everyone/NN in/IN {place}/NNP",
    "my/PRP$ thoughts/NNS are/VBP with/IN {group}/NNS in/IN {place}/NNP",
    "hope/VBP all/DT {group}/NNS are/VBP safe/JJ tonight/NN",
    "sending/VBG {emotion}/NN to/TO {place}/NNP",
    "stay/VB strong/JJ {place}/NNP we/PRP stand/VBP with/IN you/PRP",
    "cannot/MD believe/VB the/DT {thing}/NN from/IN {place}/NNP",
    "watching/VBG {thing}/NN about/IN {place}/NNP in/IN disbelief/NN",
    "donate/VB to/TO {org}/NNP to/TO help/VB {group}/NNS",
    "terrible/JJ {thing}/NN coming/VBG out/IN of/IN {place}/NNP",
    "{group}/NNS of/IN {place}/NNP you/PRP are/VBP in/IN our/PRP$ {emotion}/NN",
]

_CHATTER_SLOTS = {
    "place": [
        "nepal", "kathmandu", "pokhara", "lalitpur", "bhaktapur", "gorkha",
        "tibet", "india", "delhi", "lamjung", "dharan", "biratnagar",
        "birgunj", "hetauda", "janakpur", "nepalgunj", "dhangadhi", "butwal",
    ],
    "group": [
        "families", "friends", "students", "neighbors", "villagers",
        "climbers", "trekkers", "pilgrims", "children", "workers",
    ],
    "emotion": ["love", "prayers", "strength", "support", "solidarity", "hearts"],
    "thing": ["footage", "news", "photos", "videos", "reports", "images"],
    "org": ["redcross", "unicef", "oxfam", "crisisfund", "reliefworks"],
}


def _chatter(rng: random.Random) -> str:
    template = _CHATTER_TEMPLATES[rng.randrange(len(_CHATTER_TEMPLATES))]
    fills = {k: v[rng.randrange(len(v))] for k, v in _CHATTER_SLOTS.items()}
    return template.format(**fills)

_PREFIXES = [[], ["RT/RT", "@cnnbrk/USR"], ["breaking/UH"], ["update/NN"], ["RT/RT", "@bbcworld/USR"]]
_SUFFIXES = [[], ["#nepal/HT"], ["#nepalquake/HT"], ["#earthquake/HT"], ["http://t.co/x1/URL"], ["via/IN", "@reuters/USR"]]


def gold_text(class_label: str) -> str:
    """The planted facts of a class as plain text (canonical variants)."""
    sentences = []
    for variants in FACTS[class_label]:
        tokens = _parse_tagged(variants[0])
        sentences.append(" ".join(t.surface for t in tokens))
    return " ".join(sentences)


def gold_pairs(class_label: str) -> set[tuple[str, str]]:
    """(noun, event) pairs derivable from the canonical fact sentences."""
    pairs = set()
    for variants in FACTS[class_label]:
        tokens = _parse_tagged(variants[0])
        for edge in _auto_deps(tokens):
            noun, verb = tokens[edge.dependent], tokens[edge.head]
            pairs.add((noun.lemma, verb.lemma))
    return pairs


def make_window_tweets(
    seed: int,
    n_tweets: int,
    class_label: str = "infrastructure",
    fact_share: float = 0.6,
    day_start: int = DAY_2015_04_25,
    annotate_events: bool = True,
) -> list[AnnotatedTweet]:
    """Deterministic tweets for one class on one day."""
    rng = random.Random(f"{seed}:{class_label}")
    facts = FACTS[class_label]
    out = []
    for i in range(n_tweets):
        if rng.random() < fact_share:
            variants = facts[rng.randrange(len(facts))]
            tagged = variants[rng.randrange(len(variants))]
        else:
            tagged = _chatter(rng)
        body = tagged.split()
        prefix = _PREFIXES[rng.randrange(len(_PREFIXES))]
        suffix = _SUFFIXES[rng.randrange(len(_SUFFIXES))]
        tokens = _parse_tagged(" ".join(prefix + body + suffix))
        deps = _auto_deps(tokens)
        events = None
        if annotate_events and rng.random() < 0.5:
            events = tuple(
                j for j, t in enumerate(tokens)
                if t.pos.startswith("VB") and t.pos != "VBG" and t.lemma not in AUX_LEMMAS
            )
        out.append(
            AnnotatedTweet(
                id=f"s{seed:03d}-{i:06d}",
                timestamp=day_start + rng.randrange(86400),
                class_label=class_label,
                confidence=round(rng.uniform(0.80, 0.99), 2),
                text=" ".join(t.surface for t in tokens),
                tokens=tokens,
                deps=deps,
                event_tokens=events,
            )
        )
    return out


def make_corpus(seed: int, n_per_class: int, day_start: int = DAY_2015_04_25):
    """Tweets across all three classes, shuffled deterministically."""
    rng = random.Random(seed)
    tweets = []
    for label in sorted(FACTS):
        tweets.extend(make_window_tweets(seed, n_per_class, label, day_start=day_start))
    rng.shuffle(tweets)
    return tweets


def write_jsonl(tweets, path) -> None:
    from .ingest import serialize_tweet

    with open(path, "w", encoding="utf-8") as fh:
        for tweet in tweets:
            fh.write(serialize_tweet(tweet) + "\n")
