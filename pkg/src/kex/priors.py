"""Corpus-level priors: term/document frequencies, tf-idf, lexical
specificity, and a topic model for the topical extractor.

Statistics are computed once per dataset over the stems of non-stopword
tokens and are immutable afterwards, so they can be shared freely across
worker processes. They serialize to a small versioned binary format
(magic ``KEXP``) and to JSON for inspection.
"""

from __future__ import annotations

import json
import logging
import math
import random
import struct
from dataclasses import dataclass

log = logging.getLogger(__name__)

MAGIC = b"KEXP"
FORMAT_VERSION = 1

_LN10 = math.log(10.0)
# stop summing tail terms once they are ~e^-45 below the peak
_TAIL_LOG_CUTOFF = 45.0


@dataclass(frozen=True)
class TermStats:
    """Document frequencies and corpus-wide term totals.

    ``doc_count`` is the number of documents, ``df`` maps a stem to the
    number of documents containing it, ``corpus_tf`` maps a stem to its
    total occurrence count, and ``total_tokens`` is the token count over
    all documents (stopwords included -- document length is measured on
    the full token sequence).
    """

    doc_count: int
    df: dict[str, int]
    corpus_tf: dict[str, int]
    total_tokens: int


def fit_term_stats(docs) -> TermStats:
    """Aggregate document/term frequencies over processed documents."""
    docs = list(docs)
    if not docs:
        raise ValueError("cannot fit term statistics on an empty corpus")
    df: dict[str, int] = {}
    corpus_tf: dict[str, int] = {}
    total_tokens = 0
    for doc in docs:
        total_tokens += doc.num_tokens
        for stem, count in doc.term_counts.items():
            df[stem] = df.get(stem, 0) + 1
            corpus_tf[stem] = corpus_tf.get(stem, 0) + count
    return TermStats(
        doc_count=len(docs),
        df=df,
        corpus_tf=corpus_tf,
        total_tokens=total_tokens,
    )


def tfidf_score(stem: str, doc, stats: TermStats) -> float:
    """tf(w|d) * log2(|D| / df(w)); 0 for words absent from doc or corpus."""
    tf = doc.term_counts.get(stem, 0)
    if tf == 0:
        return 0.0
    df = stats.df.get(stem, 0)
    if df == 0:
        return 0.0
    return tf * math.log2(stats.doc_count / df)


def _log_binomial(n: int, k: int) -> float:
    return (
        math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    )


def hypergeom_tail_neglog10(f: int, big_f: int, m: int, big_m: int) -> float:
    """-log10 P(X >= f) for X ~ Hypergeometric(big_m, big_f, m).

    Evaluated in log space (log-gamma binomials, log-sum-exp) so that
    corpus-scale populations do not overflow. The sum runs over the true
    support l = f..min(big_f, m); the result is clamped at 0 when the
    tail probability reaches 1 within rounding.
    """
    if f < 1:
        raise ValueError(f"observed count must be >= 1, got {f}")
    if big_f > big_m or m > big_m:
        raise ValueError(
            f"inconsistent priors: F={big_f}, m={m} must not exceed M={big_m}"
        )
    if f > big_f or f > m:
        raise ValueError(
            f"inconsistent priors: f={f} exceeds F={big_f} or m={m}"
        )
    log_denom = _log_binomial(big_m, m)
    upper = min(big_f, m)
    # the support also requires m - l <= M - F; below that the term is 0
    lower = max(f, m - (big_m - big_f))
    log_terms = []
    peak = -math.inf
    prev = math.inf
    for l in range(lower, upper + 1):
        t = (
            _log_binomial(big_f, l)
            + _log_binomial(big_m - big_f, m - l)
            - log_denom
        )
        log_terms.append(t)
        if t > peak:
            peak = t
        elif t < prev and peak - t > _TAIL_LOG_CUTOFF:
            break  # past the mode and negligibly small
        prev = t
    log_p = peak + math.log(sum(math.exp(t - peak) for t in log_terms))
    score = -log_p / _LN10
    return score if score > 0.0 else 0.0


def specificity_score(stem: str, doc, stats: TermStats) -> float:
    """Lexical specificity of a word in a document against the corpus.

    The word must occur in the document, and the fitted statistics must
    cover the document (they do whenever it is part of the fitted
    corpus); otherwise the priors are inconsistent and this raises.
    """
    f = doc.term_counts.get(stem, 0)
    if f == 0:
        raise ValueError(f"{stem!r} does not occur in document {doc.id!r}")
    big_f = stats.corpus_tf.get(stem, 0)
    return hypergeom_tail_neglog10(f, big_f, doc.num_tokens, stats.total_tokens)


def doc_word_scores(doc, stats: TermStats, kind: str) -> dict[str, float]:
    """Score every content stem of a document with tf-idf or specificity.

    For specificity, a document not covered by the fitted statistics
    (an external reference corpus) is scored against the augmented
    totals (M + m_d, F(w) + f), i.e. the reference plus the document
    itself; in-corpus documents are always scored directly.
    """
    if kind == "tfidf":
        return {stem: tfidf_score(stem, doc, stats) for stem in doc.term_counts}
    if kind != "specificity":
        raise ValueError(f"unknown scoring kind {kind!r}")
    m = doc.num_tokens
    covered = m <= stats.total_tokens and all(
        count <= stats.corpus_tf.get(stem, 0)
        for stem, count in doc.term_counts.items()
    )
    scores = {}
    for stem, count in doc.term_counts.items():
        if covered:
            big_f = stats.corpus_tf[stem]
            big_m = stats.total_tokens
            m_eff = m
        else:
            big_f = stats.corpus_tf.get(stem, 0) + count
            big_m = stats.total_tokens + m
            m_eff = m
        scores[stem] = hypergeom_tail_neglog10(count, big_f, m_eff, big_m)
    return scores


# ---------------------------------------------------------------------
# Topic model (collapsed Gibbs sampling)
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class TopicModel:
    """P(topic|word) and P(topic|doc) tables from Gibbs assignments."""

    num_topics: int
    word_topic: dict[str, tuple[float, ...]]
    doc_topic: dict[str, tuple[float, ...]]
    alpha: float
    beta: float
    iterations: int
    seed: int

    def topic_vector(self, stem: str):
        return self.word_topic.get(stem)


def fit_lda(
    docs,
    num_topics: int = 50,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 1000,
    seed: int = 42,
) -> TopicModel:
    """Collapsed Gibbs sampling over the stems of non-stopword tokens.

    Deterministic for a fixed seed (single-threaded by design). Default
    hyperparameters: K=50, alpha=50/K, beta=0.01, 1000 sweeps.
    """
    docs = list(docs)
    if not docs:
        raise ValueError("cannot fit a topic model on an empty corpus")
    if num_topics < 2:
        raise ValueError("num_topics must be >= 2")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if alpha is None:
        alpha = 50.0 / num_topics

    vocab = sorted({stem for d in docs for stem in d.term_counts})
    if len(vocab) < num_topics:
        log.warning(
            "vocabulary (%d) smaller than topic count (%d)", len(vocab), num_topics
        )
    word_index = {w: i for i, w in enumerate(vocab)}
    # expand counts into a deterministic token stream per document
    doc_words = [
        [word_index[s] for s in sorted(d.term_counts) for _ in range(d.term_counts[s])]
        for d in docs
    ]

    k = num_topics
    v = len(vocab)
    rng = random.Random(seed)
    n_dk = [[0] * k for _ in docs]
    n_kw = [[0] * v for _ in range(k)]
    n_k = [0] * k
    assignments = []
    for d, words in enumerate(doc_words):
        z_d = []
        row = n_dk[d]
        for w in words:
            topic = rng.randrange(k)
            z_d.append(topic)
            row[topic] += 1
            n_kw[topic][w] += 1
            n_k[topic] += 1
        assignments.append(z_d)

    beta_v = beta * v
    weights = [0.0] * k
    for _ in range(iterations):
        for d, words in enumerate(doc_words):
            row = n_dk[d]
            z_d = assignments[d]
            for i, w in enumerate(words):
                old = z_d[i]
                row[old] -= 1
                n_kw[old][w] -= 1
                n_k[old] -= 1
                total = 0.0
                for t in range(k):
                    p = (row[t] + alpha) * (n_kw[t][w] + beta) / (n_k[t] + beta_v)
                    total += p
                    weights[t] = total
                u = rng.random() * total
                new = 0
                while weights[new] < u:
                    new += 1
                z_d[i] = new
                row[new] += 1
                n_kw[new][w] += 1
                n_k[new] += 1

    word_topic = {}
    for w, stem in enumerate(vocab):
        counts = [n_kw[t][w] for t in range(k)]
        total = sum(counts)
        word_topic[stem] = tuple(c / total for c in counts)
    doc_topic = {}
    for d, doc in enumerate(docs):
        counts = n_dk[d]
        total = sum(counts)
        if total == 0:
            doc_topic[doc.id] = tuple(1.0 / k for _ in range(k))
        else:
            doc_topic[doc.id] = tuple(c / total for c in counts)
    return TopicModel(
        num_topics=k,
        word_topic=word_topic,
        doc_topic=doc_topic,
        alpha=alpha,
        beta=beta,
        iterations=iterations,
        seed=seed,
    )


# ---------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------


def _pack_count_map(mapping: dict[str, int]) -> bytes:
    parts = [struct.pack("<Q", len(mapping))]
    for key in sorted(mapping):
        raw = key.encode("utf-8")
        parts.append(struct.pack("<I", len(raw)))
        parts.append(raw)
        parts.append(struct.pack("<Q", mapping[key]))
    return b"".join(parts)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, fmt: str):
        size = struct.calcsize(fmt)
        values = struct.unpack_from(fmt, self.data, self.pos)
        self.pos += size
        return values if len(values) > 1 else values[0]

    def take_bytes(self, n: int) -> bytes:
        out = self.data[self.pos:self.pos + n]
        self.pos += n
        return out


def _unpack_count_map(reader: _Reader) -> dict[str, int]:
    count = reader.take("<Q")
    out = {}
    for _ in range(count):
        klen = reader.take("<I")
        key = reader.take_bytes(klen).decode("utf-8")
        out[key] = reader.take("<Q")
    return out


def save_priors(path, stats: TermStats, topics: TopicModel | None = None) -> None:
    """Write priors to the versioned binary format (deterministic)."""
    flags = 1 if topics is not None else 0
    parts = [MAGIC, struct.pack("<HH", FORMAT_VERSION, flags)]
    parts.append(struct.pack("<QQ", stats.doc_count, stats.total_tokens))
    parts.append(_pack_count_map(stats.df))
    parts.append(_pack_count_map(stats.corpus_tf))
    if topics is not None:
        parts.append(
            struct.pack(
                "<IddIQ",
                topics.num_topics,
                topics.alpha,
                topics.beta,
                topics.iterations,
                topics.seed,
            )
        )
        for table in (topics.word_topic, topics.doc_topic):
            parts.append(struct.pack("<Q", len(table)))
            for key in sorted(table):
                raw = key.encode("utf-8")
                parts.append(struct.pack("<I", len(raw)))
                parts.append(raw)
                parts.append(struct.pack(f"<{topics.num_topics}d", *table[key]))
    with open(path, "wb") as fh:
        fh.write(b"".join(parts))


def load_priors(path) -> tuple[TermStats, TopicModel | None]:
    """Read priors written by :func:`save_priors`."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] != MAGIC:
        raise ValueError(f"{path}: not a priors file (bad magic)")
    reader = _Reader(data[4:])
    version, flags = reader.take("<HH")
    if version != FORMAT_VERSION:
        raise ValueError(f"{path}: unsupported priors version {version}")
    doc_count, total_tokens = reader.take("<QQ")
    df = _unpack_count_map(reader)
    corpus_tf = _unpack_count_map(reader)
    stats = TermStats(
        doc_count=doc_count,
        df=df,
        corpus_tf=corpus_tf,
        total_tokens=total_tokens,
    )
    topics = None
    if flags & 1:
        k, alpha, beta, iterations, seed = reader.take("<IddIQ")
        tables = []
        for _ in range(2):
            count = reader.take("<Q")
            table = {}
            for _ in range(count):
                klen = reader.take("<I")
                key = reader.take_bytes(klen).decode("utf-8")
                table[key] = reader.take(f"<{k}d")
                if k == 1:
                    table[key] = (table[key],)
            tables.append(table)
        topics = TopicModel(
            num_topics=k,
            word_topic=tables[0],
            doc_topic=tables[1],
            alpha=alpha,
            beta=beta,
            iterations=iterations,
            seed=seed,
        )
    return stats, topics


def priors_to_json(stats: TermStats, topics: TopicModel | None = None) -> str:
    """JSON rendering of the priors, for inspection."""
    payload = {
        "doc_count": stats.doc_count,
        "total_tokens": stats.total_tokens,
        "df": dict(sorted(stats.df.items())),
        "corpus_tf": dict(sorted(stats.corpus_tf.items())),
    }
    if topics is not None:
        payload["topic_model"] = {
            "num_topics": topics.num_topics,
            "alpha": topics.alpha,
            "beta": topics.beta,
            "iterations": topics.iterations,
            "seed": topics.seed,
            "word_topic": {w: list(v) for w, v in sorted(topics.word_topic.items())},
            "doc_topic": {d: list(v) for d, v in sorted(topics.doc_topic.items())},
        }
    return json.dumps(payload, indent=2, sort_keys=False)
