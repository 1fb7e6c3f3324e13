"""Batch command-line interface.

Subcommands: ``fit`` (compute and save priors), ``extract`` (keywords
for ad-hoc documents), ``bench`` (metric tables over benchmark
datasets), ``analyze`` (agreement / significance / dominance ranking
from bench outputs).

Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to
stderr, data to stdout. A JSON config file can supply any defaults;
explicit flags win, and ``KEX_STOPWORDS`` overrides the stopword path
when no flag is given.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus, evaluation, extractors, priors
from .extractors import ExtractionParams, Method
from .textproc import TextPipeline

log = logging.getLogger("kex")


class UsageError(Exception):
    exit_code = 1


class DataError(Exception):
    exit_code = 2


@dataclass
class RunConfig:
    """Every knob of a run, with its documented default."""

    datasets: list = field(default_factory=list)
    methods: list = field(default_factory=lambda: ["all"])
    top_n: int = 10
    window: int = 10
    textrank_window: int = 2
    teleport: float = 0.15
    tol: float = 1e-6
    max_iter: int = 100
    cluster_threshold: float = 0.25
    graph_all_words: bool = False
    num_topics: int = 50
    lda_alpha: float | None = None
    lda_beta: float = 0.01
    lda_iterations: int = 1000
    seed: int = 42
    stopwords: str | None = None
    lexicon: str | None = None
    output_dir: str = "."
    jobs: int = 0  # 0 = all available cores

    def params(self) -> ExtractionParams:
        return ExtractionParams(
            window=self.window,
            textrank_window=self.textrank_window,
            teleport=self.teleport,
            tol=self.tol,
            max_iter=self.max_iter,
            cluster_threshold=self.cluster_threshold,
            graph_all_words=self.graph_all_words,
        )


_CONFIG_FIELDS = {f.name for f in dataclasses.fields(RunConfig)}


def load_config(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise DataError(f"config file {path}: invalid JSON ({exc})")
    if not isinstance(data, dict):
        raise DataError(f"config file {path}: expected a JSON object")
    unknown = set(data) - _CONFIG_FIELDS
    if unknown:
        raise UsageError(
            f"config file {path}: unknown keys {sorted(unknown)}"
        )
    return data


def resolve_config(args) -> RunConfig:
    """defaults < config file < environment < explicit flags."""
    values = {}
    if getattr(args, "config", None):
        values.update(load_config(args.config))
    env_stopwords = os.environ.get("KEX_STOPWORDS")
    if env_stopwords:
        values["stopwords"] = env_stopwords
    for name in _CONFIG_FIELDS:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    cfg = RunConfig(**values)
    if cfg.jobs <= 0:
        cfg.jobs = os.cpu_count() or 1
    return cfg


def parse_methods(spec: list | str) -> list[Method]:
    if isinstance(spec, str):
        spec = [spec]
    names = [
        name.strip()
        for entry in spec
        for name in str(entry).split(",")
        if name.strip()
    ]
    if not names:
        raise UsageError("no methods given")
    if any(n.lower() == "all" for n in names):
        return list(extractors.ALL_METHODS)
    try:
        return [Method.parse(n) for n in names]
    except ValueError as exc:
        raise UsageError(str(exc))


# ---------------------------------------------------------------------
# Parallel extraction
# ---------------------------------------------------------------------

_WORKER = {}


def _init_worker(stats, topics, params, top_n):
    _WORKER.update(stats=stats, topics=topics, params=params, top_n=top_n)


def _extract_one(task):
    method_value, doc = task
    return extractors.extract(
        Method(method_value),
        doc,
        n=_WORKER["top_n"],
        stats=_WORKER["stats"],
        topics=_WORKER["topics"],
        params=_WORKER["params"],
    )


def run_extraction(method, docs, stats, topics, params, top_n, jobs):
    """Extract over docs, preserving order; forks when jobs > 1."""
    if jobs <= 1 or len(docs) < 4:
        return [
            extractors.extract(
                method, d, n=top_n, stats=stats, topics=topics, params=params
            )
            for d in docs
        ]
    tasks = [(method.value, d) for d in docs]
    with ProcessPoolExecutor(
        max_workers=jobs,
        initializer=_init_worker,
        initargs=(stats, topics, params, top_n),
    ) as pool:
        chunk = max(1, len(tasks) // (jobs * 4))
        return list(pool.map(_extract_one, tasks, chunksize=chunk))


# ---------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------


def _write_csv(path, header, rows, seed):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(f"# seed={seed}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _read_csv(path):
    with open(path, encoding="utf-8") as fh:
        lines = [l for l in fh if not l.startswith("#")]
    return list(csv.DictReader(lines))


def render_table(title, col_names, rows, out=sys.stdout):
    """Aligned console table; rows are (label, values, best_index)."""
    label_width = max([len(r[0]) for r in rows] + [len(title)])
    widths = [
        max(len(name), 7) for name in col_names
    ]
    print(title, file=out)
    header = " ".join(
        [" " * label_width]
        + [name.rjust(w) for name, w in zip(col_names, widths)]
    )
    print(header, file=out)
    for label, values, best in rows:
        cells = []
        for i, (v, w) in enumerate(zip(values, widths)):
            text = f"{v:.1f}"
            if i == best:
                text += "*"
            cells.append(text.rjust(w))
        print(" ".join([label.ljust(label_width)] + cells), file=out)


# ---------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------


def _load_datasets(cfg) -> list[corpus.Dataset]:
    if not cfg.datasets:
        raise UsageError("no dataset given (use --dataset)")
    loaded = []
    for path in cfg.datasets:
        try:
            loaded.append(corpus.load_dataset(path))
        except (FileNotFoundError, ValueError, OSError) as exc:
            raise DataError(str(exc))
    return loaded


def _pipeline(cfg) -> TextPipeline:
    try:
        return TextPipeline(stopwords=cfg.stopwords, lexicon=cfg.lexicon)
    except (FileNotFoundError, ValueError, OSError) as exc:
        raise DataError(str(exc))


def cmd_fit(args) -> int:
    cfg = resolve_config(args)
    datasets = _load_datasets(cfg)
    pipeline = _pipeline(cfg)
    docs = []
    for ds in datasets:
        docs.extend(corpus.process_dataset(ds, pipeline))
    stats = priors.fit_term_stats(docs)
    topics = None
    if args.lda:
        topics = priors.fit_lda(
            docs,
            num_topics=cfg.num_topics,
            alpha=cfg.lda_alpha,
            beta=cfg.lda_beta,
            iterations=cfg.lda_iterations,
            seed=cfg.seed,
        )
    if args.out:
        priors.save_priors(args.out, stats, topics)
    if args.json_out:
        Path(args.json_out).write_text(
            priors.priors_to_json(stats, topics), encoding="utf-8"
        )
    print(
        f"documents={stats.doc_count} tokens={stats.total_tokens} "
        f"vocab={len(stats.corpus_tf)}"
    )
    return 0


def _load_priors_arg(path):
    if path is None:
        return None, None
    try:
        return priors.load_priors(path)
    except (FileNotFoundError, ValueError, OSError) as exc:
        raise DataError(str(exc))


def _read_extract_inputs(paths, pipeline):
    """Ad-hoc extraction inputs: raw text files, .jsonl documents
    (optionally pre-tagged), or stdin ('-')."""
    docs = []
    if not paths:
        paths = ["-"]
    for path in paths:
        if path == "-":
            docs.append(pipeline.process("stdin", sys.stdin.read()))
            continue
        p = Path(path)
        if not p.exists():
            raise DataError(f"input not found: {path}")
        if p.suffix == ".jsonl":
            with open(p, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                    except json.JSONDecodeError as exc:
                        raise DataError(f"{path}:{lineno}: invalid JSON ({exc})")
                    doc_id = str(rec.get("id", f"{p.stem}:{lineno}"))
                    gold = tuple(rec.get("keywords", ()))
                    if "tokens" in rec:
                        docs.append(
                            pipeline.process_pretagged(doc_id, rec["tokens"], gold)
                        )
                    else:
                        docs.append(pipeline.process(doc_id, rec["text"], gold))
        else:
            docs.append(pipeline.process(p.stem, p.read_text(encoding="utf-8")))
    return docs


def cmd_extract(args) -> int:
    cfg = resolve_config(args)
    try:
        method = Method.parse(args.method)
    except ValueError as exc:
        raise UsageError(str(exc))
    stats, topics = _load_priors_arg(args.priors)
    if method.needs_term_stats and stats is None:
        raise UsageError(f"method {method} requires priors (--priors)")
    if method.needs_topic_model and topics is None:
        raise UsageError(f"method {method} requires LDA priors (fit with --lda)")
    pipeline = _pipeline(cfg)
    docs = _read_extract_inputs(args.inputs, pipeline)
    results = run_extraction(
        method, docs, stats, topics, cfg.params(), cfg.top_n, cfg.jobs
    )
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for doc, phrases in zip(docs, results):
            record = {
                "doc_id": doc.id,
                "method": method.value,
                "phrases": [
                    {
                        "surface": p.surface,
                        "stems": list(p.stems),
                        "score": p.score,
                        "rank": p.rank,
                    }
                    for p in phrases
                ],
            }
            out.write(json.dumps(record) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_bench(args) -> int:
    cfg = resolve_config(args)
    methods = parse_methods(cfg.methods)
    datasets = _load_datasets(cfg)
    pipeline = _pipeline(cfg)
    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    report_rows = []
    perdoc_rows = []
    prediction_rows = []
    timing_rows = []
    for ds in datasets:
        docs = corpus.process_dataset(ds, pipeline)
        total_gold = sum(len(d.gold) for d in docs)
        kept_gold = sum(len(d.filtered_gold) for d in docs)
        if total_gold:
            log.info(
                "%s: gold filtering kept %d/%d phrases (%.1f%% discarded)",
                ds.name, kept_gold, total_gold,
                100.0 * (1 - kept_gold / total_gold),
            )
        stats = None
        topics = None
        if any(m.needs_term_stats for m in methods):
            stats = priors.fit_term_stats(docs)
        if any(m.needs_topic_model for m in methods):
            topics = priors.fit_lda(
                docs,
                num_topics=cfg.num_topics,
                alpha=cfg.lda_alpha,
                beta=cfg.lda_beta,
                iterations=cfg.lda_iterations,
                seed=cfg.seed,
            )

        predictions = {
            m: run_extraction(
                m, docs, stats, topics, cfg.params(), cfg.top_n, cfg.jobs
            )
            for m in methods
        }
        report = evaluation.evaluate_methods(
            ds.name, docs, methods, stats=stats, topics=topics,
            n=cfg.top_n, params=cfg.params(), predictions=predictions,
        )
        for method in methods:
            for metric in evaluation.METRIC_NAMES:
                report_rows.append(
                    (ds.name, method.value, metric,
                     100.0 * report.aggregates[method.value][metric])
                )
        for row in report.rows:
            for metric, value in (("p@5", row.p5), ("p@10", row.p10), ("mrr", row.mrr)):
                perdoc_rows.append((ds.name, row.method, row.doc_id, metric, value))
        for method in methods:
            for doc, phrases in zip(docs, predictions[method]):
                for p in phrases:
                    prediction_rows.append(
                        (ds.name, method.value, doc.id, p.rank, p.phrase)
                    )
        if args.time:
            timing_rows.extend(
                evaluation.time_methods(
                    docs, methods, trials=args.time, n=cfg.top_n,
                    params=cfg.params(),
                    lda_kwargs={
                        "num_topics": cfg.num_topics,
                        "alpha": cfg.lda_alpha,
                        "beta": cfg.lda_beta,
                        "iterations": cfg.lda_iterations,
                        "seed": cfg.seed,
                    },
                )
            )

        # console table: one row per metric, best method starred
        names = [m.value for m in methods]
        rows = []
        for metric in evaluation.METRIC_NAMES:
            values = [
                100.0 * report.aggregates[m.value][metric] for m in methods
            ]
            best = max(range(len(values)), key=values.__getitem__)
            rows.append((metric, values, best))
        render_table(
            f"{ds.name} ({report.scored_documents} scored docs, "
            f"{report.skipped_documents} skipped)",
            names, rows,
        )

    _write_csv(out_dir / "report.csv",
               ("dataset", "method", "metric", "value"), report_rows, cfg.seed)
    _write_csv(out_dir / "per_document.csv",
               ("dataset", "method", "doc_id", "metric", "value"),
               perdoc_rows, cfg.seed)
    _write_csv(out_dir / "predictions.csv",
               ("dataset", "method", "doc_id", "rank", "phrase"),
               prediction_rows, cfg.seed)
    if timing_rows:
        _write_csv(
            out_dir / "timing.csv",
            ("prior", "method", "time_prior", "time_total", "time_per_doc"),
            [
                (r.prior, r.method, f"{r.time_prior:.4f}",
                 f"{r.time_total:.4f}", f"{r.time_per_doc:.6f}")
                for r in timing_rows
            ],
            cfg.seed,
        )
    return 0


def cmd_analyze(args) -> int:
    cfg = resolve_config(args)
    per_doc_paths = []
    prediction_paths = list(args.predictions or [])
    for path in args.inputs:
        p = Path(path)
        if p.is_dir():
            per_doc_paths.append(p / "per_document.csv")
            if (p / "predictions.csv").exists():
                prediction_paths.append(p / "predictions.csv")
        else:
            per_doc_paths.append(p)
    if not per_doc_paths:
        raise UsageError("no per-document CSV inputs given")

    # per_doc[method][metric] -> vector aligned over (dataset, doc_id)
    rows = []
    for path in per_doc_paths:
        try:
            rows.extend(_read_csv(path))
        except OSError as exc:
            raise DataError(str(exc))
    if not rows:
        raise DataError("per-document CSV input is empty")
    methods = sorted({r["method"] for r in rows})
    metrics = args.metrics.split(",") if args.metrics else sorted(
        {r["metric"] for r in rows}
    )
    values: dict = {}
    for r in rows:
        key = (r["dataset"], r["doc_id"], r["metric"])
        values.setdefault(key, {})[r["method"]] = float(r["value"])
    per_doc = {m: {metric: [] for metric in metrics} for m in methods}
    for (dataset, doc_id, metric), by_method in sorted(values.items()):
        if metric not in metrics:
            continue
        if len(by_method) != len(methods):
            continue  # only documents scored by every method are comparable
        for m in methods:
            per_doc[m][metric].append(by_method[m])
    n_points = {m: len(per_doc[m][metrics[0]]) for m in methods}
    if min(n_points.values()) == 0:
        raise DataError("no documents shared by all methods")

    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    sig = evaluation.significance_matrix(per_doc, metrics, alpha=args.alpha)
    wilcoxon_rows = []
    for metric in metrics:
        for (a, b), p in sorted(sig.pvalues[metric].items()):
            wilcoxon_rows.append((metric, a, b, f"{p:.6g}"))
    _write_csv(out_dir / "wilcoxon.csv",
               ("metric", "method_a", "method_b", "p_value"),
               wilcoxon_rows, cfg.seed)

    means = {
        m: {metric: sum(v) / len(v) for metric, v in per_doc[m].items()}
        for m in methods
    }
    fronts = evaluation.pareto_rank(means, sig, alpha=args.alpha)
    pareto_rows = [
        (i + 1, m) for i, front in enumerate(fronts) for m in sorted(front)
    ]
    _write_csv(out_dir / "pareto.csv", ("front", "method"), pareto_rows, cfg.seed)
    print("dominance ranking (front: methods):")
    for i, front in enumerate(fronts, 1):
        print(f"  {i}: {', '.join(sorted(front))}")

    # agreement over top-5 sets needs the predictions dump
    if prediction_paths:
        pred_rows = []
        for path in prediction_paths:
            pred_rows.extend(_read_csv(path))
        top5: dict = {m: {} for m in methods}
        for r in pred_rows:
            if r["method"] not in top5 or int(r["rank"]) > 5:
                continue
            doc_key = (r["dataset"], r["doc_id"])
            top5[r["method"]].setdefault(doc_key, set()).add(r["phrase"])
        matrix_rows = []
        for a in methods:
            row = []
            for b in methods:
                if a == b:
                    row.append(1.0)
                elif not top5[a] or not top5[b]:
                    row.append(float("nan"))
                else:
                    row.append(evaluation.agreement(top5[a], top5[b]))
            matrix_rows.append((a, *[f"{v:.4f}" for v in row]))
        _write_csv(out_dir / "agreement.csv",
                   ("method", *methods), matrix_rows, cfg.seed)
        print("agreement matrix written to", out_dir / "agreement.csv")
    else:
        log.warning("no predictions.csv given; agreement matrix skipped")

    print("wilcoxon and pareto tables written to", out_dir)
    return 0


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # exit code 1 for usage errors (argparse defaults to 2)
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(p):
    p.add_argument("--config", help="JSON config file with RunConfig fields")
    p.add_argument("--stopwords", help="stopword file (one token per line)")
    p.add_argument("--lexicon", help="tagger lexicon TSV (word<TAB>tag)")
    p.add_argument("--seed", type=int, help="RNG seed echoed into reports")
    p.add_argument("--jobs", type=int, help="worker processes (default: cores)")
    p.add_argument("-v", "--verbose", action="store_true")


def _add_graph_options(p):
    p.add_argument("--top", dest="top_n", type=int, help="phrases per document")
    p.add_argument("--window", type=int, help="co-occurrence window (weighted graphs)")
    p.add_argument("--textrank-window", dest="textrank_window", type=int)
    p.add_argument("--teleport", type=float, help="teleport weight lambda")
    p.add_argument("--tol", type=float)
    p.add_argument("--max-iter", dest="max_iter", type=int)
    p.add_argument("--cluster-threshold", dest="cluster_threshold", type=float)
    p.add_argument("--graph-all-words", dest="graph_all_words",
                   action="store_const", const=True,
                   help="include stopword stems as graph nodes")


def _add_lda_options(p):
    p.add_argument("--num-topics", dest="num_topics", type=int)
    p.add_argument("--lda-alpha", dest="lda_alpha", type=float)
    p.add_argument("--lda-beta", dest="lda_beta", type=float)
    p.add_argument("--lda-iterations", dest="lda_iterations", type=int)


def build_parser() -> _Parser:
    parser = _Parser(prog="kex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit", parser_class=_Parser,
                           help="fit corpus priors and save them")
    p_fit.add_argument("--dataset", dest="datasets", action="append",
                       help="dataset directory or .jsonl (repeatable)")
    p_fit.add_argument("--lda", action="store_true", help="also fit the topic model")
    p_fit.add_argument("--out", help="output priors file (binary)")
    p_fit.add_argument("--json-out", help="also export priors as JSON")
    _add_lda_options(p_fit)
    _add_common(p_fit)
    p_fit.set_defaults(func=cmd_fit)

    p_ext = sub.add_parser("extract", parser_class=_Parser,
                           help="extract keywords from documents")
    p_ext.add_argument("--method", required=True)
    p_ext.add_argument("--priors", help="priors file from 'fit'")
    p_ext.add_argument("--out", help="output JSONL (default: stdout)")
    p_ext.add_argument("inputs", nargs="*",
                       help="text files, .jsonl files, or '-' for stdin")
    _add_graph_options(p_ext)
    _add_common(p_ext)
    p_ext.set_defaults(func=cmd_extract)

    p_bench = sub.add_parser("bench", parser_class=_Parser,
                             help="evaluate methods over benchmark datasets")
    p_bench.add_argument("--dataset", dest="datasets", action="append")
    p_bench.add_argument("--methods", help="'all' or comma-separated names")
    p_bench.add_argument("--time", type=int, metavar="N",
                         help="also time methods over N trials")
    p_bench.add_argument("--out", dest="output_dir", help="report directory")
    _add_graph_options(p_bench)
    _add_lda_options(p_bench)
    _add_common(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_an = sub.add_parser("analyze", parser_class=_Parser,
                          help="agreement, significance, dominance ranking")
    p_an.add_argument("inputs", nargs="+",
                      help="bench output dirs or per-document CSVs")
    p_an.add_argument("--predictions", action="append",
                      help="predictions CSV for the agreement matrix")
    p_an.add_argument("--metrics", help="comma-separated metric subset")
    p_an.add_argument("--alpha", type=float, default=0.05)
    p_an.add_argument("--out", dest="output_dir", help="output directory")
    _add_common(p_an)
    p_an.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kex: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"kex: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
