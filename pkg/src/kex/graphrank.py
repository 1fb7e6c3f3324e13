"""Word co-occurrence graphs and biased PageRank.

A document's graph has one node per unique non-stopword stem (all stems
with ``all_words=True``) and an undirected edge for every token pair
closer than the window length. PageRank mixes the row-normalized
transition with a teleport prior: p <- (1-lambda) * W^T p + lambda * p_b,
with the mass of dangling nodes redistributed through the prior.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .priors import TermStats, TopicModel, doc_word_scores


@dataclass(frozen=True)
class WordGraph:
    nodes: tuple[str, ...]
    index: dict[str, int]
    edges: dict[tuple[int, int], float]  # (i, j) with i < j; weight > 0
    window: int
    weighting: str

    def __len__(self) -> int:
        return len(self.nodes)

    def edge_weight(self, a: str, b: str) -> float:
        i, j = self.index[a], self.index[b]
        if i == j:
            return 0.0
        return self.edges.get((min(i, j), max(i, j)), 0.0)


@dataclass(frozen=True)
class PriorDistribution:
    probabilities: np.ndarray
    kind: str


@dataclass(frozen=True)
class PageRankResult:
    nodes: tuple[str, ...]
    scores: np.ndarray
    iterations_used: int
    converged: bool

    def as_dict(self) -> dict[str, float]:
        return {n: float(s) for n, s in zip(self.nodes, self.scores)}


@dataclass(frozen=True)
class TopicCluster:
    members: tuple[str, ...]  # candidate keys
    representative: str


def build_graph(doc, window: int = 10, weighting: str = "count",
                all_words: bool = False) -> WordGraph:
    """Co-occurrence graph over the document's stems.

    Token positions are counted over the full token sequence; two
    eligible tokens at positions p, q with distinct stems and |p-q| <
    window contribute an edge (weight incremented for "count", set to 1
    for "binary").
    """
    if window < 2:
        raise ValueError("window must be >= 2")
    if weighting not in ("count", "binary"):
        raise ValueError(f"unknown weighting {weighting!r}")
    if all_words:
        occurrences = [(t.position, t.stem) for t in doc.tokens]
    else:
        occurrences = list(doc.content)
    index: dict[str, int] = {}
    for _, stem in occurrences:
        if stem not in index:
            index[stem] = len(index)
    edges: dict[tuple[int, int], float] = {}
    for a in range(len(occurrences)):
        pos_a, stem_a = occurrences[a]
        for b in range(a + 1, len(occurrences)):
            pos_b, stem_b = occurrences[b]
            if pos_b - pos_a >= window:
                break
            if stem_a == stem_b:
                continue
            i, j = index[stem_a], index[stem_b]
            key = (i, j) if i < j else (j, i)
            if weighting == "count":
                edges[key] = edges.get(key, 0.0) + 1.0
            else:
                edges[key] = 1.0
    nodes = tuple(sorted(index, key=index.__getitem__))
    return WordGraph(
        nodes=nodes, index=dict(index), edges=edges,
        window=window, weighting=weighting,
    )


def uniform_prior(graph: WordGraph) -> PriorDistribution:
    n = len(graph.nodes)
    if n == 0:
        raise ValueError("empty graph")
    return PriorDistribution(np.full(n, 1.0 / n), kind="uniform")


def position_prior(doc, graph: WordGraph) -> PriorDistribution:
    """Teleport mass proportional to the sum of inverse 1-based token
    positions of each node's occurrences."""
    mass = np.zeros(len(graph.nodes))
    for position, stem in doc.content:
        i = graph.index.get(stem)
        if i is not None:
            mass[i] += 1.0 / (position + 1)
    total = mass.sum()
    if total <= 0:
        return PriorDistribution(
            np.full(len(graph.nodes), 1.0 / len(graph.nodes)), kind="position"
        )
    return PriorDistribution(mass / total, kind="position")


def stat_prior(doc, graph: WordGraph, stats: TermStats, kind: str) -> PriorDistribution:
    """Teleport mass proportional to per-word tf-idf or specificity."""
    if kind not in ("tfidf", "specificity"):
        raise ValueError(f"unknown prior kind {kind!r}")
    scores = doc_word_scores(doc, stats, kind)
    mass = np.array(
        [max(scores.get(stem, 0.0), 0.0) for stem in graph.nodes]
    )
    total = mass.sum()
    if total <= 0:
        return PriorDistribution(
            np.full(len(graph.nodes), 1.0 / len(graph.nodes)), kind=kind
        )
    return PriorDistribution(mass / total, kind=kind)


def topical_prior(doc, graph: WordGraph, topics: TopicModel) -> PriorDistribution:
    """Teleport mass proportional to the cosine between each word's
    topic distribution and the document's; unseen words get zero."""
    doc_vec = topics.doc_topic.get(doc.id)
    if doc_vec is None:
        raise KeyError(f"document {doc.id!r} absent from the topic model")
    doc_arr = np.asarray(doc_vec)
    doc_norm = float(np.linalg.norm(doc_arr))
    mass = np.zeros(len(graph.nodes))
    if doc_norm > 0:
        for i, stem in enumerate(graph.nodes):
            vec = topics.topic_vector(stem)
            if vec is None:
                continue
            arr = np.asarray(vec)
            norm = float(np.linalg.norm(arr))
            if norm > 0:
                mass[i] = float(arr @ doc_arr) / (norm * doc_norm)
    total = mass.sum()
    if total <= 0:
        return PriorDistribution(
            np.full(len(graph.nodes), 1.0 / len(graph.nodes)), kind="topical"
        )
    return PriorDistribution(mass / total, kind="topical")


def pagerank(
    graph: WordGraph,
    prior: PriorDistribution | None = None,
    teleport: float = 0.15,
    tol: float = 1e-6,
    max_iter: int = 100,
) -> PageRankResult:
    """Power iteration of the teleporting random walk on the graph.

    Stops when the L1 change drops below ``tol``, or after ``max_iter``
    sweeps (``converged`` reports which).
    """
    n = len(graph.nodes)
    if n == 0:
        raise ValueError("empty graph")
    if not 0.0 <= teleport <= 1.0:
        raise ValueError("teleport weight must be in [0, 1]")
    if prior is None:
        prior = uniform_prior(graph)
    p_b = np.asarray(prior.probabilities, dtype=float)
    if p_b.shape != (n,):
        raise ValueError(
            f"prior has {p_b.shape[0] if p_b.ndim == 1 else 'bad'} entries, "
            f"graph has {n} nodes"
        )

    weights = np.zeros((n, n))
    for (i, j), w in graph.edges.items():
        weights[i, j] = w
        weights[j, i] = w
    degree = weights.sum(axis=1)
    linked = degree > 0
    transition = np.zeros((n, n))
    if linked.any():
        transition[linked] = weights[linked] / degree[linked, None]

    p = p_b.copy()
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        dangling = p[~linked].sum()
        new_p = (1.0 - teleport) * (transition.T @ p + dangling * p_b) + teleport * p_b
        change = float(np.abs(new_p - p).sum())
        p = new_p
        if change < tol:
            converged = True
            break
    return PageRankResult(
        nodes=graph.nodes, scores=p, iterations_used=iterations,
        converged=converged,
    )


# ---------------------------------------------------------------------
# Candidate clustering (topic-level graph)
# ---------------------------------------------------------------------


def _jaccard(a: frozenset, b: frozenset) -> float:
    if not a or not b:
        return 0.0
    inter = len(a & b)
    if inter == 0:
        return 0.0
    return inter / len(a | b)


def cluster_topics(candidates, threshold: float = 0.25) -> list[TopicCluster]:
    """Average-linkage agglomerative clustering of candidates by the
    Jaccard similarity of their stem sets.

    Merging continues while the best average similarity is >= threshold;
    ties break on candidate key order. Each cluster's representative is
    its earliest-occurring member.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    candidates = list(candidates)
    if not candidates:
        return []
    info = {
        c.key: (frozenset(c.stems), c.first_position) for c in candidates
    }
    # clusters as sorted tuples of keys, ordered by smallest member key
    clusters = [(c.key,) for c in sorted(candidates, key=lambda c: c.key)]

    def avg_sim(ca, cb):
        total = 0.0
        for ka in ca:
            sa = info[ka][0]
            for kb in cb:
                total += _jaccard(sa, info[kb][0])
        return total / (len(ca) * len(cb))

    while len(clusters) > 1:
        best = None
        best_pair = None
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                s = avg_sim(clusters[i], clusters[j])
                if best is None or s > best:
                    best = s
                    best_pair = (i, j)
        if best is None or best < threshold:
            break
        i, j = best_pair
        merged = tuple(sorted(clusters[i] + clusters[j]))
        clusters = [c for idx, c in enumerate(clusters) if idx not in (i, j)]
        clusters.append(merged)
        clusters.sort()

    out = []
    for members in clusters:
        rep = min(members, key=lambda k: (info[k][1], k))
        out.append(TopicCluster(members=members, representative=rep))
    out.sort(key=lambda c: (info[c.representative][1], c.representative))
    return out


def topic_graph_rank(
    clusters,
    doc,
    teleport: float = 0.15,
    tol: float = 1e-6,
    max_iter: int = 100,
) -> list[float]:
    """PageRank scores over the complete cluster graph, where the edge
    between two clusters sums 1/|p - q| over their occurrence start
    positions."""
    if not clusters:
        raise ValueError("need at least one cluster")
    starts = {c.key: [occ[0] for occ in c.occurrences] for c in doc.candidates}
    positions = [
        [p for key in cluster.members for p in starts.get(key, ())]
        for cluster in clusters
    ]
    n = len(clusters)
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            weight = 0.0
            for p in positions[i]:
                for q in positions[j]:
                    if p != q:
                        weight += 1.0 / abs(p - q)
            if weight > 0:
                edges[(i, j)] = weight
    graph = WordGraph(
        nodes=tuple(str(i) for i in range(n)),
        index={str(i): i for i in range(n)},
        edges=edges,
        window=0,
        weighting="count",
    )
    result = pagerank(graph, None, teleport=teleport, tol=tol, max_iter=max_iter)
    return [float(s) for s in result.scores]
