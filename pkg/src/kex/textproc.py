"""Preprocessing pipeline: sentence splitting, tokenization, stemming,
coarse POS tagging, and candidate noun-phrase extraction.

All operations are pure functions of their inputs, so documents can be
processed in parallel. The tagger is a self-contained lexicon-plus-rules
tagger over the coarse tagset {NOUN, ADJ, OTHER}; pre-tagged input can
be supplied instead (see :meth:`TextPipeline.process_pretagged`).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from importlib import resources

from . import porter

NOUN = "NOUN"
ADJ = "ADJ"
OTHER = "OTHER"

_TAGS = frozenset((NOUN, ADJ, OTHER))

# maximal runs of alphanumerics, keeping internal hyphens/apostrophes
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)
# sentence terminator: .!? run followed by whitespace or end of text
_BOUNDARY_RE = re.compile(r"[.!?]+(?=\s|$)")

_NOUN_SUFFIXES = ("ness", "tion", "ity", "ment", "er", "ism")
_ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "al", "ic")


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    pos: str
    position: int
    sentence_index: int


@dataclass(frozen=True)
class CandidatePhrase:
    """A noun phrase matching (ADJ)*(NOUN)+, keyed by its joined stems."""

    stems: tuple[str, ...]
    surface: str
    occurrences: tuple[tuple[int, int], ...]  # (start, end) spans, end exclusive

    @property
    def key(self) -> str:
        return " ".join(self.stems)

    @property
    def first_position(self) -> int:
        return self.occurrences[0][0]


@dataclass(frozen=True)
class ProcessedDocument:
    id: str
    tokens: tuple[Token, ...]
    candidates: tuple[CandidatePhrase, ...]
    filtered_gold: frozenset[str]
    gold: tuple[str, ...]
    # (position, stem) of non-stopword tokens; feeds graphs and priors
    content: tuple[tuple[int, str], ...]
    term_counts: dict[str, int]

    @property
    def num_tokens(self) -> int:
        return len(self.tokens)

    def candidate(self, key: str) -> CandidatePhrase | None:
        for cand in self.candidates:
            if cand.key == key:
                return cand
        return None


def tokenize(text: str) -> list[tuple[int, str]]:
    """Split text into (sentence_index, surface) pairs.

    Sentences end at ``.!?`` runs followed by whitespace or end of text,
    except that a period after a single-letter token (an initial such as
    "J.") is not a boundary. Tokens are maximal alphanumeric runs with
    internal hyphens and apostrophes kept.
    """
    if not text:
        return []
    boundaries = []
    for match in _BOUNDARY_RE.finditer(text):
        start = match.start()
        if match.group() == ".":
            # abbreviation guard: single letter + period
            if (
                start >= 1
                and text[start - 1].isalpha()
                and (start < 2 or not text[start - 2].isalnum())
            ):
                continue
        boundaries.append(match.end())
    out = []
    sentence_index = 0
    prev = 0
    for end in boundaries + [len(text)]:
        segment = text[prev:end]
        prev = end
        surfaces = _TOKEN_RE.findall(segment)
        if not surfaces:
            continue
        out.extend((sentence_index, s) for s in surfaces)
        sentence_index += 1
    return out


def porter_stem(word: str) -> str:
    """Porter-stem a lowercase word (see :mod:`kex.porter`)."""
    return porter.stem(word)


def stem_token(surface: str) -> str:
    """Lowercase and stem a surface token; non-alphabetic tokens are
    lowercased unchanged."""
    low = surface.lower()
    if low.isalpha():
        return porter.stem(low)
    return low


def stem_phrase(phrase: str) -> str:
    """Stemmed, lowercased, whitespace-normalized form of a phrase."""
    return " ".join(stem_token(s) for _, s in tokenize(phrase))


def _suffix_tag(word: str) -> str | None:
    # also try with a trailing plural 's' stripped ("directions" -> -tion)
    forms = (word, word[:-1]) if word.endswith("s") else (word,)
    for form in forms:
        for suffix in _NOUN_SUFFIXES:
            if form.endswith(suffix) and len(form) > len(suffix) + 1:
                return NOUN
        for suffix in _ADJ_SUFFIXES:
            if form.endswith(suffix) and len(form) > len(suffix) + 1:
                return ADJ
    return None


def load_lexicon(path=None) -> dict[str, str]:
    """Read a word<TAB>tag lexicon; tags must be NOUN/ADJ/OTHER."""
    if path is None:
        text = resources.files("kex").joinpath("data/lexicon.tsv").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    lexicon = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, tag = line.split("\t")
        except ValueError:
            raise ValueError(f"lexicon line {lineno}: expected 'word<TAB>tag'")
        if tag not in _TAGS:
            raise ValueError(f"lexicon line {lineno}: unknown tag {tag!r}")
        lexicon[word.lower()] = tag
    return lexicon


def load_stopwords(path=None) -> frozenset[str]:
    """Read a one-token-per-line stopword file; '#' lines are comments."""
    if path is None:
        text = resources.files("kex").joinpath("data/stopwords.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def pos_tag(surfaces: list[str], lexicon: dict[str, str] | None = None) -> list[str]:
    """Tag the tokens of one sentence.

    Lookup order: lexicon, suffix rules, then default NOUN for unknown
    capitalized sentence-interior tokens and tokens containing a digit,
    OTHER otherwise.
    """
    if lexicon is None:
        lexicon = _default_lexicon()
    tags = []
    for i, surface in enumerate(surfaces):
        low = surface.lower()
        tag = lexicon.get(low)
        if tag is None:
            tag = _suffix_tag(low)
        if tag is None:
            interior_cap = i > 0 and surface[:1].isupper()
            has_digit = any(ch.isdigit() for ch in surface)
            tag = NOUN if (interior_cap or has_digit) else OTHER
        tags.append(tag)
    return tags


def extract_candidates(
    tokens: list[Token] | tuple[Token, ...],
    stopwords: frozenset[str],
) -> list[CandidatePhrase]:
    """Maximal (ADJ)*(NOUN)+ spans per sentence, never containing a
    stopword (stopword tokens split spans), merged by stem key."""
    by_key: dict[str, dict] = {}
    sentence: list[Token] = []

    def flush(sent):
        if not sent:
            return
        # stopwords are treated as span breakers like OTHER tags
        letters = []
        for tok in sent:
            if tok.surface.lower() in stopwords:
                letters.append("O")
            elif tok.pos == ADJ:
                letters.append("A")
            elif tok.pos == NOUN:
                letters.append("N")
            else:
                letters.append("O")
        for match in re.finditer(r"A*N+", "".join(letters)):
            span = sent[match.start():match.end()]
            stems = tuple(tok.stem for tok in span)
            key = " ".join(stems)
            entry = by_key.get(key)
            if entry is None:
                by_key[key] = {
                    "stems": stems,
                    "surface": " ".join(tok.surface for tok in span),
                    "occurrences": [(span[0].position, span[-1].position + 1)],
                }
            else:
                entry["occurrences"].append(
                    (span[0].position, span[-1].position + 1)
                )

    current = -1
    for tok in tokens:
        if tok.sentence_index != current:
            flush(sentence)
            sentence = []
            current = tok.sentence_index
        sentence.append(tok)
    flush(sentence)

    candidates = [
        CandidatePhrase(
            stems=e["stems"],
            surface=e["surface"],
            occurrences=tuple(e["occurrences"]),
        )
        for e in by_key.values()
    ]
    candidates.sort(key=lambda c: (c.first_position, c.key))
    return candidates


_LEXICON_CACHE: dict[str, str] | None = None


def _default_lexicon() -> dict[str, str]:
    global _LEXICON_CACHE
    if _LEXICON_CACHE is None:
        _LEXICON_CACHE = load_lexicon()
    return _LEXICON_CACHE


_STOPWORDS_CACHE: frozenset[str] | None = None


def _default_stopwords() -> frozenset[str]:
    global _STOPWORDS_CACHE
    if _STOPWORDS_CACHE is None:
        _STOPWORDS_CACHE = load_stopwords()
    return _STOPWORDS_CACHE


def _coarse_tag(pos: str) -> str:
    """Map a Penn-style or coarse tag onto {NOUN, ADJ, OTHER}."""
    if pos in _TAGS:
        return pos
    if pos.startswith("NN"):
        return NOUN
    if pos.startswith("JJ"):
        return ADJ
    return OTHER


class TextPipeline:
    """Tokenizer + stemmer + tagger + stopword filter, bundled.

    Instances are immutable after construction and safe to share across
    worker processes.
    """

    def __init__(self, stopwords=None, lexicon=None):
        if stopwords is None:
            self.stopwords = _default_stopwords()
        elif isinstance(stopwords, (str, bytes)) or hasattr(stopwords, "__fspath__"):
            self.stopwords = load_stopwords(stopwords)
        else:
            self.stopwords = frozenset(w.lower() for w in stopwords)
        if lexicon is None:
            self.lexicon = _default_lexicon()
        elif isinstance(lexicon, dict):
            self.lexicon = lexicon
        else:
            self.lexicon = load_lexicon(lexicon)

    def _assemble(self, doc_id, tokens, gold):
        candidates = tuple(extract_candidates(tokens, self.stopwords))
        keys = {c.key for c in candidates}
        filtered = frozenset(
            k for k in (stem_phrase(g) for g in gold) if k and k in keys
        )
        content = tuple(
            (t.position, t.stem)
            for t in tokens
            if t.surface.lower() not in self.stopwords
        )
        counts = Counter(stem for _, stem in content)
        return ProcessedDocument(
            id=doc_id,
            tokens=tuple(tokens),
            candidates=candidates,
            filtered_gold=filtered,
            gold=tuple(gold),
            content=content,
            term_counts=dict(counts),
        )

    def process(self, doc_id: str, text: str, gold=()) -> ProcessedDocument:
        """Run the full pipeline over raw text."""
        pairs = tokenize(text)
        tokens = []
        position = 0
        idx = 0
        while idx < len(pairs):
            sent = pairs[idx][0]
            surfaces = []
            while idx < len(pairs) and pairs[idx][0] == sent:
                surfaces.append(pairs[idx][1])
                idx += 1
            tags = pos_tag(surfaces, self.lexicon)
            for surface, tag in zip(surfaces, tags):
                tokens.append(
                    Token(
                        surface=surface,
                        stem=stem_token(surface),
                        pos=tag,
                        position=position,
                        sentence_index=sent,
                    )
                )
                position += 1
        return self._assemble(doc_id, tokens, gold)

    def process_pretagged(self, doc_id: str, token_records, gold=()) -> ProcessedDocument:
        """Build a document from externally tagged tokens.

        ``token_records`` is a sequence of {"surface": ..., "pos": ...}
        mappings (NN*/JJ* map to NOUN/ADJ); an optional "sentence" field
        assigns sentence indices, otherwise everything is one sentence.
        """
        tokens = []
        for position, rec in enumerate(token_records):
            surface = rec["surface"]
            tokens.append(
                Token(
                    surface=surface,
                    stem=stem_token(surface),
                    pos=_coarse_tag(rec["pos"]),
                    position=position,
                    sentence_index=int(rec.get("sentence", 0)),
                )
            )
        return self._assemble(doc_id, tokens, gold)
