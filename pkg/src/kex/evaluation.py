"""Evaluation metrics and statistical comparison machinery.

Per-document metrics (P@k against a capped denominator, reciprocal
rank), pairwise prediction agreement, paired Wilcoxon signed-rank tests
(with the unpaired rank-sum variant available), dominance-based Pareto
ranking of methods, and a wall-clock timing harness.

Documents whose filtered gold set is empty carry no signal for P@k/MRR
and are excluded from dataset means; the exclusion count is logged.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field

from . import extractors
from .extractors import ExtractionParams, Method
from .priors import fit_lda, fit_term_stats

log = logging.getLogger(__name__)


def precision_at_k(predicted, gold, k: int) -> float:
    """|gold ∩ top-k| / min(|gold|, k), matching on stem keys."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gold = set(gold)
    if not gold:
        raise ValueError("gold set must be non-empty")
    top = {_key(p) for p in list(predicted)[:k]}
    return len(gold & top) / min(len(gold), k)


def mrr(predicted, gold) -> float:
    """1/rank of the first correct prediction; 0 when none is correct."""
    gold = set(gold)
    if not gold:
        raise ValueError("gold set must be non-empty")
    for rank, p in enumerate(predicted, start=1):
        if _key(p) in gold:
            return 1.0 / rank
    return 0.0


def _key(prediction) -> str:
    return prediction.phrase if hasattr(prediction, "phrase") else prediction


def agreement(preds_a: dict, preds_b: dict) -> float:
    """Mean per-document overlap of two methods' top-5 prediction sets.

    Arguments map document ids to stem-key sets; documents where either
    set is empty are skipped.
    """
    shared = set(preds_a) & set(preds_b)
    if not shared:
        raise ValueError("no overlapping documents")
    values = []
    for doc_id in shared:
        a, b = set(preds_a[doc_id]), set(preds_b[doc_id])
        if not a or not b:
            continue
        values.append(len(a & b) / min(len(a), len(b)))
    if not values:
        raise ValueError("no documents with non-empty predictions")
    return sum(values) / len(values)


# ---------------------------------------------------------------------
# Statistical tests
# ---------------------------------------------------------------------


def _normal_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _rank_with_ties(values) -> tuple[list[float], float]:
    """Average ranks (1-based) and the Σ(t^3 - t) tie term."""
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0.0] * len(values)
    tie_term = 0.0
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j + 2) / 2.0  # average of 1-based ranks i+1..j+1
        for idx in order[i:j + 1]:
            ranks[idx] = avg
        t = j - i + 1
        if t > 1:
            tie_term += t ** 3 - t
        i = j + 1
    return ranks, tie_term


def wilcoxon_paired(xs, ys) -> float:
    """Two-sided paired Wilcoxon signed-rank test (normal approximation
    with tie correction and continuity correction; zero differences are
    dropped). All-zero differences give p = 1.0 by convention."""
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise ValueError("paired samples must have equal length")
    diffs = [x - y for x, y in zip(xs, ys) if x != y]
    n = len(diffs)
    if n == 0:
        return 1.0
    ranks, tie_term = _rank_with_ties([abs(d) for d in diffs])
    w_plus = sum(r for r, d in zip(ranks, diffs) if d > 0)
    w_minus = n * (n + 1) / 2.0 - w_plus
    t_stat = min(w_plus, w_minus)
    mean = n * (n + 1) / 4.0
    var = n * (n + 1) * (2 * n + 1) / 24.0 - tie_term / 48.0
    if var <= 0:
        return 1.0
    d = t_stat - mean
    # continuity correction: shift the statistic half a rank toward the mean
    if d > 0.5:
        d -= 0.5
    elif d < -0.5:
        d += 0.5
    else:
        d = 0.0
    z = d / math.sqrt(var)
    return min(1.0, 2.0 * _normal_sf(abs(z)))


def wilcoxon_ranksum(xs, ys) -> float:
    """Two-sided unpaired Wilcoxon rank-sum (Mann-Whitney) test with
    tie-corrected normal approximation and continuity correction."""
    xs, ys = list(xs), list(ys)
    nx, ny = len(xs), len(ys)
    if nx == 0 or ny == 0:
        raise ValueError("both samples must be non-empty")
    ranks, tie_term = _rank_with_ties(xs + ys)
    rank_sum_x = sum(ranks[:nx])
    u = rank_sum_x - nx * (nx + 1) / 2.0
    mean = nx * ny / 2.0
    n = nx + ny
    var = nx * ny / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if var <= 0:
        return 1.0
    d = u - mean
    if d > 0.5:
        d -= 0.5
    elif d < -0.5:
        d += 0.5
    else:
        d = 0.0
    z = d / math.sqrt(var)
    return min(1.0, 2.0 * _normal_sf(abs(z)))


@dataclass(frozen=True)
class SignificanceMatrix:
    """Symmetric per-metric p-value tables over a method list."""

    methods: tuple[str, ...]
    pvalues: dict[str, dict[tuple[str, str], float]]  # metric -> pair -> p
    alpha: float = 0.05

    def p(self, metric: str, a: str, b: str) -> float:
        if a == b:
            raise ValueError("p-value undefined on the diagonal")
        table = self.pvalues[metric]
        return table.get((a, b), table.get((b, a)))


def significance_matrix(
    per_doc: dict[str, dict[str, list[float]]],
    metrics,
    alpha: float = 0.05,
    test=wilcoxon_paired,
) -> SignificanceMatrix:
    """Pairwise tests over per-document metric vectors.

    ``per_doc[method][metric]`` is the vector of per-document values,
    aligned across methods.
    """
    methods = tuple(per_doc)
    pvalues: dict[str, dict[tuple[str, str], float]] = {m: {} for m in metrics}
    for metric in metrics:
        for i, a in enumerate(methods):
            for b in methods[i + 1:]:
                pvalues[metric][(a, b)] = test(
                    per_doc[a][metric], per_doc[b][metric]
                )
    return SignificanceMatrix(methods=methods, pvalues=pvalues, alpha=alpha)


def _dominates(a, b, means, sig, alpha, metrics) -> bool:
    """True when a is never significantly worse than b and is
    significantly better on at least one metric."""
    better_somewhere = False
    for metric in metrics:
        diff = means[a][metric] - means[b][metric]
        significant = sig.p(metric, a, b) < alpha
        if diff < 0 and significant:
            return False
        if diff > 0 and significant:
            better_somewhere = True
    return better_somewhere


def pareto_rank(
    means: dict[str, dict[str, float]],
    sig: SignificanceMatrix,
    alpha: float | None = None,
) -> list[list[str]]:
    """Iteratively peel non-dominated fronts off the method set."""
    if alpha is None:
        alpha = sig.alpha
    metrics = sorted(next(iter(means.values())))
    for method, values in means.items():
        if sorted(values) != metrics:
            raise ValueError(f"method {method!r} is missing metrics")
    remaining = list(means)
    fronts = []
    while remaining:
        front = [
            m for m in remaining
            if not any(
                _dominates(o, m, means, sig, alpha, metrics)
                for o in remaining if o != m
            )
        ]
        if not front:  # cannot happen: dominance is acyclic
            front = list(remaining)
        fronts.append(front)
        remaining = [m for m in remaining if m not in front]
    return fronts


# ---------------------------------------------------------------------
# Report assembly and timing
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class DocScore:
    doc_id: str
    method: str
    p5: float
    p10: float
    mrr: float


@dataclass
class EvalReport:
    dataset: str
    rows: list[DocScore] = field(default_factory=list)
    aggregates: dict[str, dict[str, float]] = field(default_factory=dict)
    scored_documents: int = 0
    skipped_documents: int = 0
    timing: list["TimingRow"] = field(default_factory=list)


@dataclass(frozen=True)
class TimingRow:
    prior: str       # tf / tf-idf / lda / -
    method: str
    time_prior: float
    time_total: float
    time_per_doc: float


METRIC_NAMES = ("p@5", "p@10", "mrr")


def score_predictions(docs, predictions, method: str) -> list[DocScore]:
    """Per-document metric rows; documents with empty filtered gold are
    dropped (they cannot be scored)."""
    rows = []
    for doc, preds in zip(docs, predictions):
        if not doc.filtered_gold:
            continue
        keys = [p.phrase for p in preds]
        rows.append(
            DocScore(
                doc_id=doc.id,
                method=method,
                p5=precision_at_k(keys, doc.filtered_gold, 5),
                p10=precision_at_k(keys, doc.filtered_gold, 10),
                mrr=mrr(keys, doc.filtered_gold),
            )
        )
    return rows


def evaluate_methods(
    dataset_name: str,
    docs,
    methods,
    stats=None,
    topics=None,
    n: int = 10,
    params: ExtractionParams = extractors.DEFAULT_PARAMS,
    predictions: dict | None = None,
) -> EvalReport:
    """Run every method over the processed documents and aggregate.

    ``predictions`` can supply precomputed per-method prediction lists
    (aligned with ``docs``), e.g. from a parallel runner; otherwise
    extraction runs in-process.
    """
    report = EvalReport(dataset=dataset_name)
    scorable = [d for d in docs if d.filtered_gold]
    report.scored_documents = len(scorable)
    report.skipped_documents = len(docs) - len(scorable)
    if report.skipped_documents:
        log.info(
            "%s: %d of %d documents have no candidate-matching gold and "
            "are excluded from metric means",
            dataset_name, report.skipped_documents, len(docs),
        )
    for method in methods:
        method = Method(method)
        if predictions is not None and method in predictions:
            preds = predictions[method]
        else:
            preds = [
                extractors.extract(
                    method, doc, n=n, stats=stats, topics=topics, params=params
                )
                for doc in docs
            ]
        rows = score_predictions(docs, preds, method.value)
        report.rows.extend(rows)
        if rows:
            report.aggregates[method.value] = {
                "p@5": sum(r.p5 for r in rows) / len(rows),
                "p@10": sum(r.p10 for r in rows) / len(rows),
                "mrr": sum(r.mrr for r in rows) / len(rows),
            }
        else:
            report.aggregates[method.value] = {m: 0.0 for m in METRIC_NAMES}
    return report


_PRIOR_GROUP = {
    Method.TF: "tf",
    Method.LEXSPEC: "tf",
    Method.LEXRANK: "tf",
    Method.TFIDF: "tf-idf",
    Method.TFIDFRANK: "tf-idf",
    Method.SINGLETPR: "lda",
}


def time_methods(
    docs,
    methods,
    trials: int = 1,
    n: int = 10,
    params: ExtractionParams = extractors.DEFAULT_PARAMS,
    lda_kwargs: dict | None = None,
) -> list[TimingRow]:
    """Mean wall-clock seconds per method over ``trials`` runs,
    split into prior fitting and extraction."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    methods = [Method(m) for m in methods]
    rows = []
    stats = None
    topics = None
    # TF shares the term-frequency prior row even though extraction
    # itself only reads per-document counts
    need_stats = any(_PRIOR_GROUP.get(m) in ("tf", "tf-idf") for m in methods)
    need_topics = any(m.needs_topic_model for m in methods)
    stats_seconds = 0.0
    lda_seconds = 0.0
    if need_stats:
        start = time.perf_counter()
        for _ in range(trials):
            stats = fit_term_stats(docs)
        stats_seconds = (time.perf_counter() - start) / trials
    if need_topics:
        start = time.perf_counter()
        topics = fit_lda(docs, **(lda_kwargs or {}))
        lda_seconds = time.perf_counter() - start  # single trial: it is slow
    for method in methods:
        group = _PRIOR_GROUP.get(method, "-")
        prior_seconds = {
            "tf": stats_seconds, "tf-idf": stats_seconds, "lda": lda_seconds,
        }.get(group, 0.0)
        start = time.perf_counter()
        for _ in range(trials):
            for doc in docs:
                extractors.extract(
                    method, doc, n=n, stats=stats, topics=topics, params=params
                )
        extract_seconds = (time.perf_counter() - start) / trials
        total = prior_seconds + extract_seconds
        rows.append(
            TimingRow(
                prior=group,
                method=method.value,
                time_prior=prior_seconds,
                time_total=total,
                time_per_doc=total / len(docs) if docs else 0.0,
            )
        )
    return rows
