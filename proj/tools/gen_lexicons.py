#!/usr/bin/env python3
"""Build data/lexicon/{words,emoji}.tsv from the vaderSentiment distribution.

usage: gen_lexicons.py VADER_LEXICON EMOJI_UTF8_LEXICON OUT_DIR
"""
import sys
from pathlib import Path

EMOJI_OVERRIDES = {
    "\U0001F60E": 1.9,  # smiling face with sunglasses
}
NEUTRAL_PREFIXES = ("\U0001F4AA",)  # flexed biceps and skin-tone variants


def main():
    vader, emoji, out = map(Path, sys.argv[1:4])
    words = {}
    for line in vader.read_text(encoding="utf-8").splitlines():
        fields = line.split("\t")
        if len(fields) < 2:
            continue
        key, valence = fields[0], float(fields[1])
        if any(c.isspace() for c in key) or not key.isascii() or key.startswith("#"):
            continue
        folded = key.lower()
        # keep the lower-case spelling when emoticons differ only by case
        if folded in words and key != folded:
            continue
        words[folded] = valence

    out.mkdir(parents=True, exist_ok=True)
    with open(out / "words.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write("# word valences, derived from vaderSentiment 3.3.2 (MIT)\n")
        for key in sorted(words):
            f.write(f"{key}\t{words[key]}\n")

    with open(out / "emoji.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write("# emoji valences: summed word valences of each emoji's CLDR name\n")
        for line in emoji.read_text(encoding="utf-8").splitlines():
            fields = line.split("\t")
            if len(fields) != 2 or fields[0].isascii() or fields[0].startswith("#"):
                continue
            key, name = fields
            name = name.split(":")[0]
            total = sum(words.get(w.strip(".,!?()'\""), 0.0) for w in name.lower().split())
            total = max(-4.0, min(4.0, total))
            if key in EMOJI_OVERRIDES:
                total = EMOJI_OVERRIDES[key]
            if key.startswith(NEUTRAL_PREFIXES):
                total = 0.0
            f.write(f"{key}\t{round(total, 4)}\n")


if __name__ == "__main__":
    main()
