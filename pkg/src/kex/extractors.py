"""The eleven extraction methods behind a uniform interface.

Each method scores individual words (or, for the positional and
clustering baselines, ranks phrases directly), aggregates word scores
over candidate phrases by arithmetic mean, and returns the top-n
candidates. :class:`KeywordExtractor` wraps the whole pipeline as a
scikit-learn style estimator: ``fit`` on a corpus of texts, then
``transform``/``predict`` per document.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from . import graphrank
from .priors import TermStats, TopicModel, doc_word_scores, fit_lda, fit_term_stats
from .textproc import CandidatePhrase, ProcessedDocument, TextPipeline


class Method(str, enum.Enum):
    """Closed enumeration of extraction methods (CLI/report names)."""

    FIRSTN = "firstn"
    TF = "tf"
    TFIDF = "tfidf"
    LEXSPEC = "lexspec"
    TEXTRANK = "textrank"
    SINGLERANK = "singlerank"
    POSITIONRANK = "positionrank"
    TOPICRANK = "topicrank"
    SINGLETPR = "singletpr"
    TFIDFRANK = "tfidfrank"
    LEXRANK = "lexrank"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "Method":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {name!r} (expected one of: {valid})")

    @property
    def needs_term_stats(self) -> bool:
        return self in (Method.TFIDF, Method.LEXSPEC,
                        Method.TFIDFRANK, Method.LEXRANK)

    @property
    def needs_topic_model(self) -> bool:
        return self is Method.SINGLETPR


ALL_METHODS = tuple(Method)


@dataclass(frozen=True)
class ExtractionParams:
    """Tunables shared by the graph methods (spec'd defaults)."""

    window: int = 10            # co-occurrence window for weighted graphs
    textrank_window: int = 2    # window for the binary-weight baseline
    teleport: float = 0.15      # lambda in the random-surfer mixture
    tol: float = 1e-6
    max_iter: int = 100
    cluster_threshold: float = 0.25
    graph_all_words: bool = False


DEFAULT_PARAMS = ExtractionParams()


@dataclass(frozen=True)
class ScoredPhrase:
    phrase: str                 # stem key
    surface: str
    score: float
    rank: int
    first_position: int
    stems: tuple[str, ...] = ()


def _graph_scores(doc, params: ExtractionParams, weighting: str, window: int,
                  prior_builder=None) -> dict[str, float]:
    graph = graphrank.build_graph(
        doc, window=window, weighting=weighting,
        all_words=params.graph_all_words,
    )
    if len(graph) == 0:
        return {}
    prior = prior_builder(graph) if prior_builder is not None else None
    result = graphrank.pagerank(
        graph, prior, teleport=params.teleport,
        tol=params.tol, max_iter=params.max_iter,
    )
    return result.as_dict()


def score_words(
    method: Method,
    doc: ProcessedDocument,
    stats: TermStats | None = None,
    topics: TopicModel | None = None,
    params: ExtractionParams = DEFAULT_PARAMS,
) -> dict[str, float]:
    """Per-stem importance scores for one document under one method.

    FIRSTN and TOPICRANK rank phrases directly and have no word scores.
    """
    method = Method(method)
    if method is Method.TF:
        return {stem: float(c) for stem, c in doc.term_counts.items()}
    if method in (Method.TFIDF, Method.LEXSPEC):
        if stats is None:
            raise ValueError(f"method {method} requires fitted term statistics")
        kind = "tfidf" if method is Method.TFIDF else "specificity"
        return doc_word_scores(doc, stats, kind)
    if method is Method.TEXTRANK:
        return _graph_scores(doc, params, "binary", params.textrank_window)
    if method is Method.SINGLERANK:
        return _graph_scores(doc, params, "count", params.window)
    if method is Method.POSITIONRANK:
        return _graph_scores(
            doc, params, "count", params.window,
            prior_builder=lambda g: graphrank.position_prior(doc, g),
        )
    if method in (Method.TFIDFRANK, Method.LEXRANK):
        if stats is None:
            raise ValueError(f"method {method} requires fitted term statistics")
        kind = "tfidf" if method is Method.TFIDFRANK else "specificity"
        return _graph_scores(
            doc, params, "count", params.window,
            prior_builder=lambda g: graphrank.stat_prior(doc, g, stats, kind),
        )
    if method is Method.SINGLETPR:
        if topics is None:
            raise ValueError("method singletpr requires a fitted topic model")
        return _graph_scores(
            doc, params, "count", params.window,
            prior_builder=lambda g: graphrank.topical_prior(doc, g, topics),
        )
    raise ValueError(f"method {method} does not produce word scores")


def aggregate_phrases(
    word_scores: dict[str, float],
    candidates,
) -> list[tuple[CandidatePhrase, float]]:
    """Mean of the word scores over each candidate's stem sequence;
    stems missing from the score map contribute zero."""
    out = []
    for cand in candidates:
        total = sum(word_scores.get(stem, 0.0) for stem in cand.stems)
        out.append((cand, total / len(cand.stems)))
    return out


def top_n(scored, n: int) -> list[ScoredPhrase]:
    """Rank scored candidates: score desc, then earlier first occurrence,
    then shorter stem key, then lexicographic."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ordered = sorted(
        scored,
        key=lambda item: (
            -item[1],
            item[0].first_position,
            len(item[0].key),
            item[0].key,
        ),
    )
    return [
        ScoredPhrase(
            phrase=cand.key,
            surface=cand.surface,
            score=float(score),
            rank=rank,
            first_position=cand.first_position,
            stems=cand.stems,
        )
        for rank, (cand, score) in enumerate(ordered[:n], start=1)
    ]


def extract_firstn(doc: ProcessedDocument, n: int) -> list[ScoredPhrase]:
    """The first n candidates in document order, scored 1/rank."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ordered = sorted(doc.candidates, key=lambda c: (c.first_position, c.key))
    return [
        ScoredPhrase(
            phrase=cand.key,
            surface=cand.surface,
            score=1.0 / rank,
            rank=rank,
            first_position=cand.first_position,
            stems=cand.stems,
        )
        for rank, cand in enumerate(ordered[:n], start=1)
    ]


def extract_topicrank(
    doc: ProcessedDocument,
    n: int,
    params: ExtractionParams = DEFAULT_PARAMS,
) -> list[ScoredPhrase]:
    """Cluster candidates, rank clusters, emit each top cluster's
    earliest-occurring member with the cluster score."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not doc.candidates:
        return []
    clusters = graphrank.cluster_topics(
        doc.candidates, threshold=params.cluster_threshold
    )
    scores = graphrank.topic_graph_rank(
        clusters, doc, teleport=params.teleport,
        tol=params.tol, max_iter=params.max_iter,
    )
    by_key = {c.key: c for c in doc.candidates}
    ranked = sorted(
        zip(clusters, scores),
        key=lambda cs: (
            -cs[1],
            by_key[cs[0].representative].first_position,
            cs[0].representative,
        ),
    )
    out = []
    for rank, (cluster, score) in enumerate(ranked[:n], start=1):
        rep = by_key[cluster.representative]
        out.append(
            ScoredPhrase(
                phrase=rep.key,
                surface=rep.surface,
                score=float(score),
                rank=rank,
                first_position=rep.first_position,
                stems=rep.stems,
            )
        )
    return out


def extract(
    method: Method,
    doc: ProcessedDocument,
    n: int = 10,
    stats: TermStats | None = None,
    topics: TopicModel | None = None,
    params: ExtractionParams = DEFAULT_PARAMS,
) -> list[ScoredPhrase]:
    """Top-n keyphrases for one document under one method."""
    method = Method(method)
    if method is Method.FIRSTN:
        return extract_firstn(doc, n)
    if method is Method.TOPICRANK:
        return extract_topicrank(doc, n, params)
    word_scores = score_words(method, doc, stats=stats, topics=topics, params=params)
    scored = aggregate_phrases(word_scores, doc.candidates)
    return top_n(scored, n) if scored else []


# ---------------------------------------------------------------------
# Estimator API
# ---------------------------------------------------------------------


def _check_texts(X):
    """Validate an iterable of document texts (str) or (id, text[, gold])
    tuples; returns a list of (id, text, gold) triples."""
    if X is None:
        raise TypeError("X must be an iterable of documents, not None")
    if isinstance(X, (str, bytes)):
        raise TypeError("X must be an iterable of documents, not a single string")
    triples = []
    for i, item in enumerate(X):
        if isinstance(item, str):
            triples.append((str(i), item, ()))
        elif isinstance(item, tuple) and len(item) in (2, 3):
            doc_id, text = item[0], item[1]
            gold = item[2] if len(item) == 3 else ()
            triples.append((str(doc_id), text, tuple(gold)))
        elif hasattr(item, "id") and hasattr(item, "text"):
            triples.append((item.id, item.text, tuple(getattr(item, "gold", ()))))
        else:
            raise TypeError(
                f"document {i} must be a string, an (id, text[, gold]) tuple, "
                f"or expose .id/.text attributes; got {type(item).__name__}"
            )
    return triples


class KeywordExtractor(BaseEstimator):
    """Keyword extraction as a scikit-learn style estimator.

    ``fit(X)`` processes a corpus (iterable of str, of (id, text)
    tuples, or of objects with .id/.text) and fits whatever priors the
    chosen method needs; ``transform(X)``/``predict(X)`` extract ranked
    keyphrases per document. Prior-free methods still require ``fit``,
    which then only configures the text pipeline.

    Parameters mirror the CLI defaults: ``method`` is any
    :class:`Method` name; ``n`` the number of phrases; the graph
    parameters are the spec'd defaults (window 10, TextRank window 2,
    teleport 0.15); LDA parameters apply to "singletpr" only.
    """

    def __init__(
        self,
        method: str = "tfidfrank",
        n: int = 10,
        window: int = 10,
        textrank_window: int = 2,
        teleport: float = 0.15,
        tol: float = 1e-6,
        max_iter: int = 100,
        cluster_threshold: float = 0.25,
        graph_all_words: bool = False,
        num_topics: int = 50,
        lda_alpha: float | None = None,
        lda_beta: float = 0.01,
        lda_iterations: int = 1000,
        seed: int = 42,
        stopwords=None,
        lexicon=None,
    ):
        self.method = method
        self.n = n
        self.window = window
        self.textrank_window = textrank_window
        self.teleport = teleport
        self.tol = tol
        self.max_iter = max_iter
        self.cluster_threshold = cluster_threshold
        self.graph_all_words = graph_all_words
        self.num_topics = num_topics
        self.lda_alpha = lda_alpha
        self.lda_beta = lda_beta
        self.lda_iterations = lda_iterations
        self.seed = seed
        self.stopwords = stopwords
        self.lexicon = lexicon

    def _params(self) -> ExtractionParams:
        return ExtractionParams(
            window=self.window,
            textrank_window=self.textrank_window,
            teleport=self.teleport,
            tol=self.tol,
            max_iter=self.max_iter,
            cluster_threshold=self.cluster_threshold,
            graph_all_words=self.graph_all_words,
        )

    def fit(self, X, y=None):
        method = Method.parse(self.method)
        self.pipeline_ = TextPipeline(stopwords=self.stopwords, lexicon=self.lexicon)
        triples = _check_texts(X)
        docs = [self.pipeline_.process(i, t, g) for i, t, g in triples]
        self.documents_ = docs
        self.term_stats_ = None
        self.topic_model_ = None
        if method.needs_term_stats or method is Method.TF:
            # TF needs no corpus stats, but fitting them is cheap and
            # keeps the fitted surface uniform
            self.term_stats_ = fit_term_stats(docs) if docs else None
        if method.needs_term_stats and self.term_stats_ is None:
            raise ValueError(f"method {method} requires a non-empty corpus")
        if method.needs_topic_model:
            self.topic_model_ = fit_lda(
                docs,
                num_topics=self.num_topics,
                alpha=self.lda_alpha,
                beta=self.lda_beta,
                iterations=self.lda_iterations,
                seed=self.seed,
            )
        return self

    def _check_fitted(self):
        if not hasattr(self, "pipeline_"):
            raise NotFittedError(
                "this KeywordExtractor is not fitted yet; call fit first"
            )

    def extract_document(self, doc: ProcessedDocument) -> list[ScoredPhrase]:
        """Extract from an already-processed document."""
        self._check_fitted()
        return extract(
            Method.parse(self.method),
            doc,
            n=self.n,
            stats=self.term_stats_,
            topics=self.topic_model_,
            params=self._params(),
        )

    def extract_text(self, text: str, doc_id: str = "doc") -> list[ScoredPhrase]:
        """Process raw text with the fitted pipeline and extract."""
        self._check_fitted()
        return self.extract_document(self.pipeline_.process(doc_id, text))

    def transform(self, X) -> list[list[ScoredPhrase]]:
        """Ranked keyphrases per input document."""
        self._check_fitted()
        return [
            self.extract_document(self.pipeline_.process(i, t, g))
            for i, t, g in _check_texts(X)
        ]

    def predict(self, X) -> list[list[str]]:
        """Surface forms of the top-n keyphrases per input document."""
        return [[p.surface for p in phrases] for phrases in self.transform(X)]

    def fit_transform(self, X, y=None):
        self.fit(X)
        return [self.extract_document(d) for d in self.documents_]
