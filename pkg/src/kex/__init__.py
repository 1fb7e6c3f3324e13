"""kex: unsupervised keyword extraction and a benchmark harness.

Statistical (frequency, tf-idf, lexical specificity) and graph-based
(biased PageRank family, candidate clustering) extractors behind one
interface, plus dataset loading, evaluation metrics, and statistical
comparison tooling. See :class:`kex.KeywordExtractor` for the
estimator-style entry point and ``kex --help`` for the CLI.
"""

from .corpus import Dataset, DatasetStats, RawDocument, dataset_stats, filter_gold, load_dataset, process_dataset
from .extractors import (
    ALL_METHODS,
    ExtractionParams,
    KeywordExtractor,
    Method,
    ScoredPhrase,
    aggregate_phrases,
    extract,
    extract_firstn,
    extract_topicrank,
    score_words,
    top_n,
)
from .graphrank import (
    PageRankResult,
    PriorDistribution,
    TopicCluster,
    WordGraph,
    build_graph,
    cluster_topics,
    pagerank,
    position_prior,
    stat_prior,
    topic_graph_rank,
    topical_prior,
    uniform_prior,
)
from .priors import (
    TermStats,
    TopicModel,
    fit_lda,
    fit_term_stats,
    load_priors,
    save_priors,
    specificity_score,
    tfidf_score,
)
from .evaluation import (
    EvalReport,
    SignificanceMatrix,
    agreement,
    mrr,
    pareto_rank,
    precision_at_k,
    significance_matrix,
    time_methods,
    wilcoxon_paired,
    wilcoxon_ranksum,
)
from .textproc import (
    CandidatePhrase,
    ProcessedDocument,
    TextPipeline,
    Token,
    extract_candidates,
    porter_stem,
    pos_tag,
    tokenize,
)

__version__ = "0.1.0"
