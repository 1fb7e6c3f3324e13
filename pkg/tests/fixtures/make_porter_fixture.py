#!/usr/bin/env python3
"""Regenerate porter_vectors.tsv.

Runs the canonical public-domain reference implementation
(porter_reference.py, Vivake Gupta's port of the author's ANSI C
version) over the package lexicon vocabulary plus the classic
suffix-stripping exercise words, and freezes word -> stem pairs.
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent))
from porter_reference import PorterStemmer  # noqa: E402

EXERCISE_WORDS = """
caresses ponies ties caress cats feed agreed plastered bled motoring
sing conflated troubled sized hopping tanned falling hissing fizzed
failing filing happy sky relational conditional rational valenci
hesitanci digitizer conformabli radicalli differentli vileli
analogousli vietnamization predication operator feudalism decisiveness
hopefulness callousness formaliti sensitiviti sensibiliti triplicate
formative formalize electriciti electrical hopeful goodness revival
allowance inference airliner gyroscopic adjustable defensible irritant
replacement adjustment dependent adoption homologou communism activate
angulariti homologous effective bowdlerize probate rate cease control
roll controll generalization generalizations oscillators oscillator
"""


def main():
    here = Path(__file__).parent
    lexicon = here.parent.parent / "src" / "kex" / "data" / "lexicon.tsv"
    words = {
        line.split("\t")[0]
        for line in lexicon.read_text(encoding="utf-8").splitlines()
        if line and "\t" in line
    }
    words.update(EXERCISE_WORDS.split())
    words = sorted(w for w in words if w.isalpha())
    stemmer = PorterStemmer()
    lines = [f"{w}\t{stemmer.stem(w, 0, len(w) - 1)}" for w in words]
    out = here / "porter_vectors.tsv"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} vectors to {out}")


if __name__ == "__main__":
    main()
