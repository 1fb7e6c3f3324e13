#!/usr/bin/env python3
"""Regenerate src/kex/data/stopwords.txt.

Base list: scikit-learn's frozen English stop list, minus entries that
are content-bearing in keyword contexts (nouns/adjectives like "system"
or "thin" that legitimately occur inside keyphrases), plus the
apostrophe contraction forms the tokenizer keeps as single tokens.
Any stopword file with one lowercase token per line can be swapped in
via --stopwords / KEX_STOPWORDS.
"""

import sys
from pathlib import Path

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

CONTENT_WORDS = {
    "amount", "bill", "bottom", "cry", "detail", "empty", "fill", "fire",
    "front", "full", "interest", "mill", "part", "serious", "side",
    "sincere", "system", "thick", "thin", "top",
}

CONTRACTIONS = """
can't don't doesn't didn't won't wouldn't shouldn't couldn't isn't
aren't wasn't weren't hasn't haven't hadn't it's that's there's what's
let's i'm we're they're you're i've we've you've they've i'll we'll
you'll they'll he's she's who's shan't mustn't needn't ain't
"""


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "kex" / "data" / "stopwords.txt"
    )
    words = (set(ENGLISH_STOP_WORDS) - CONTENT_WORDS) | set(CONTRACTIONS.split())
    lines = [
        "# English stopword list: scikit-learn's frozen list minus",
        "# content-bearing entries, plus apostrophe contractions.",
        "# One lowercase token per line; '#' lines are ignored.",
    ] + sorted(words)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} stopwords to {out}")


if __name__ == "__main__":
    main()
