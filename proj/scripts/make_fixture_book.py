#!/usr/bin/env python3
"""Generates the deterministic multi-chapter fixture book used by the tests.

The output is committed at tests/data/fixture_book.txt; rerunning this script
reproduces it byte-for-byte. Nine chapters, roman-numeral headings, roughly
55k words with a distinct topic vocabulary per chapter so the scoring
strategies have structure to find.
"""

import random

OUT = "tests/data/fixture_book.txt"
SEED = 20260810

ROMANS = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"]

CHAPTER_TITLES = [
    "The Harbor Below the Cliffs",
    "A Ledger of Small Debts",
    "The Cartographer's Apprentice",
    "Winters at the Observatory",
    "The Auction of the Blue House",
    "Letters from the Interior",
    "The Engine and the Orchard",
    "A Court of Patient Rivals",
    "The Long Road to the Delta",
]

TOPICS = [
    ["harbor", "tide", "gulls", "nets", "pier", "salt", "boats", "lantern",
     "fishermen", "anchor", "rope", "storm"],
    ["ledger", "coins", "debt", "merchant", "ink", "accounts", "interest",
     "signature", "vault", "clerk", "receipt", "bargain"],
    ["map", "compass", "parchment", "survey", "mountains", "border", "scale",
     "expedition", "rivers", "landmark", "sketch", "distance"],
    ["telescope", "stars", "frost", "dome", "comet", "measurements", "night",
     "records", "eclipse", "lens", "silence", "calculations"],
    ["auction", "house", "paint", "garden", "furniture", "bidders", "gavel",
     "estate", "portrait", "staircase", "cellar", "deed"],
    ["letters", "stamps", "courier", "envelope", "villages", "rumors",
     "handwriting", "paper", "roads", "reply", "seal", "news"],
    ["engine", "steam", "orchard", "apples", "pistons", "harvest", "grease",
     "branches", "workshop", "cider", "valves", "ladders"],
    ["court", "rivals", "petition", "marble", "whispers", "verdict",
     "advocate", "witness", "bench", "archive", "oath", "patience"],
    ["road", "delta", "dust", "caravan", "reeds", "ferry", "mud", "bridges",
     "travelers", "current", "camp", "horizon"],
]

NOUNS = [
    "morning", "evening", "window", "table", "voice", "door", "shadow",
    "light", "wind", "water", "stone", "tree", "letter", "hand", "face",
    "street", "room", "fire", "sound", "moment", "figure", "journey",
    "answer", "question", "dream", "memory", "winter", "summer", "smoke",
    "field", "village", "story", "silence", "corner", "mirror", "garden",
    "candle", "paper", "coat", "pocket", "horse", "wagon", "bell", "tower",
    "bread", "supper", "neighbor", "stranger", "promise", "secret",
]

VERBS = [
    "walked", "turned", "listened", "waited", "watched", "remembered",
    "carried", "opened", "closed", "followed", "crossed", "gathered",
    "counted", "whispered", "climbed", "returned", "wondered", "noticed",
    "answered", "promised", "searched", "rested", "traveled", "repaired",
    "measured", "studied", "recorded", "argued", "smiled", "hurried",
]

ADJECTIVES = [
    "quiet", "narrow", "heavy", "pale", "distant", "steady", "broken",
    "gentle", "crooked", "bright", "faded", "patient", "restless", "plain",
    "careful", "sudden", "ancient", "familiar", "cold", "warm", "empty",
    "crowded", "slow", "stubborn", "honest", "weary", "small", "grand",
]

ADVERBS = [
    "slowly", "quietly", "carefully", "suddenly", "finally", "almost",
    "barely", "gladly", "often", "rarely", "twice", "again", "together",
    "alone", "patiently", "early",
]

NAMES = [
    "Marek", "Odile", "Tobias", "Ines", "Calder", "Ruth", "Bastian",
    "Petra", "Elio", "Sanna",
]


def sentence(rng, topic, name_chance=0.18):
    """One sentence, 6..19 words, capitalized, terminal punctuation."""
    parts = []
    subject = rng.choice(NAMES) if rng.random() < name_chance else \
        "the " + rng.choice(ADJECTIVES) + " " + rng.choice(NOUNS)
    parts.append(subject)
    parts.append(rng.choice(VERBS))
    if rng.random() < 0.6:
        parts.append(rng.choice(ADVERBS))
    shape = rng.random()
    if shape < 0.45:
        parts += ["toward the", rng.choice(topic), "near the",
                  rng.choice(NOUNS)]
    elif shape < 0.75:
        parts += ["past the", rng.choice(topic), "and the",
                  rng.choice(topic), "beyond the", rng.choice(NOUNS)]
    else:
        parts += ["beneath the", rng.choice(ADJECTIVES), rng.choice(topic)]
    if rng.random() < 0.5:
        parts += ["while the", rng.choice(NOUNS), rng.choice(VERBS),
                  rng.choice(ADVERBS)]
    text = " ".join(parts)
    text = text[0].upper() + text[1:]
    mark = rng.random()
    if mark < 0.08:
        return text + "?"
    if mark < 0.13:
        return text + "!"
    return text + "."


def wrap(text, width=78):
    lines, line = [], ""
    for word in text.split(" "):
        if line and len(line) + 1 + len(word) > width:
            lines.append(line)
            line = word
        else:
            line = word if not line else line + " " + word
    if line:
        lines.append(line)
    return "\n".join(lines)


def main():
    rng = random.Random(SEED)
    chunks = []
    total_words = 0
    for ci in range(9):
        heading = "CHAPTER %s. %s." % (ROMANS[ci], CHAPTER_TITLES[ci])
        chunks.append(heading)
        paragraphs = rng.randint(46, 51)
        for _ in range(paragraphs):
            n = rng.randint(7, 12)
            para = " ".join(sentence(rng, TOPICS[ci]) for _ in range(n))
            total_words += len(para.split())
            chunks.append(wrap(para))
        chunks.append("")
    body = "\n\n".join(chunks).rstrip() + "\n"
    with open(OUT, "w") as f:
        f.write(body)
    print("wrote %s: %d words, %d bytes" %
          (OUT, total_words, len(body.encode())))


if __name__ == "__main__":
    main()
