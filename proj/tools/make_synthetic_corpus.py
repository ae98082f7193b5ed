#!/usr/bin/env python3
"""Regenerates the bundled synthetic corpus under data/.

The corpus is Sorani-like text with a deterministic layout: the last 10% of
each file (the test portion under the 90/10 line split) contains abbreviation
contexts such as "د. ئەحمەد" that a model trained on the dev portion cannot
know about, so segmenting with the forced abbreviation list removes false
positives that are present without it. Gold sentence files for the test
portion are written alongside.

Run from the repository root:  python3 tools/make_synthetic_corpus.py
"""

import math
import random
import xml.sax.saxutils as sax
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
RNG = random.Random(7)

NOUNS = [
    "کتێب", "قوتابی", "مامۆستا", "وانە", "خوێندن", "زانست", "ساڵ",
    "شار", "گوند", "منداڵ", "ژیان", "کار", "ماڵ", "باخچە", "ڕووبار",
]
ADJS = ["گەورە", "بچووک", "باش", "نوێ", "کۆن", "جوان"]
PRONOUNS = ["ئەو", "ئێمە", "ئەوان"]
# sentence-final verbs; also used mid-sentence so their period-final
# occurrences do not look like abbreviations to the trainer
VERBS = ["هات", "ڕۆیشت", "بینی", "وت", "کرد", "بوو", "دەخوێنێت", "دەزانێت"]
NAMES = ["ئەحمەد", "ئاسۆ", "هێمن", "دارا", "ژیار"]
HEADWORD = "بەش"  # follows ordinal numerals in headings
ORDINALS = ["١", "٢", "٣", "٤", "٥", "٦", "٧", "٨", "٩"]


def plain_sentence():
    parts = [RNG.choice(PRONOUNS), RNG.choice(NOUNS)]
    if RNG.random() < 0.5:
        parts.append(RNG.choice(ADJS))
    if RNG.random() < 0.6:
        # mid-sentence verb occurrence, no period attached
        parts.append(RNG.choice(VERBS))
        parts.append(RNG.choice(NOUNS))
    parts.append(RNG.choice(VERBS) + ".")
    return " ".join(parts)


def question():
    return " ".join([RNG.choice(PRONOUNS), RNG.choice(NOUNS), RNG.choice(VERBS), "؟"])


def heading():
    return " ".join([RNG.choice(NOUNS) + "ی", RNG.choice(ADJS)])


def numeral_heading(i):
    return f"{ORDINALS[i % len(ORDINALS)]}. {HEADWORD}ی {RNG.choice(ADJS)}"


def dev_lines(n):
    lines = []
    for i in range(n):
        r = RNG.random()
        if r < 0.55:
            k = 1 if RNG.random() < 0.7 else 2
            lines.append(" ".join(plain_sentence() for _ in range(k)))
        elif r < 0.70:
            lines.append(question())
        elif r < 0.82:
            lines.append(heading())
        else:
            lines.append(numeral_heading(i))
    return lines


def abbrev_sentence():
    abbrev = RNG.choice(["د.", "پ.", "م."])
    return " ".join([abbrev, RNG.choice(NAMES), RNG.choice(VERBS),
                     RNG.choice(NOUNS), RNG.choice(VERBS) + "."])


def test_line_groups(n):
    """Returns a list of sentence lists; each list is one line."""
    groups = []
    for i in range(n):
        r = i % 4
        if r in (0, 2):
            groups.append([abbrev_sentence()])
        elif r == 1:
            groups.append([plain_sentence(), plain_sentence()])
        else:
            groups.append([heading()])
    return groups


def write_file(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def gold_xml(doc_id, sentences):
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append(f'<doc id="{sax.escape(doc_id, {chr(39): "&apos;", chr(34): "&quot;"})}">')
    for s in sentences:
        out.append(f"  <s>{sax.escape(s, {chr(39): '&apos;', chr(34): '&quot;'})}</s>")
    out.append("</doc>")
    return "\n".join(out) + "\n"


def main():
    corpus_dir = ROOT / "data" / "corpus"
    gold_dir = ROOT / "data" / "gold"

    for rel in ["zanist/pola7.txt", "wane/pola8.txt"]:
        total = 80
        dev_n = math.ceil(0.9 * total - 1e-9)
        groups = [[line] for line in dev_lines(dev_n)]
        groups += test_line_groups(total - dev_n)
        lines = [" ".join(g) for g in groups]
        write_file(corpus_dir / rel, "\n".join(lines) + "\n")

        test_sentences = [s for g in groups[dev_n:] for s in g]
        gold_name = rel.replace("/", "__") + "#test.xml"
        write_file(gold_dir / gold_name, gold_xml(rel + "#test", test_sentences))

    print("wrote", corpus_dir, "and", gold_dir)


if __name__ == "__main__":
    main()
