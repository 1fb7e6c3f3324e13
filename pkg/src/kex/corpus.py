"""Benchmark dataset loading, gold filtering, and per-dataset statistics.

Two on-disk layouts are supported: a directory with ``docsutf8/<id>.txt``
texts and matching ``keys/<id>.key`` gold files (one phrase per line),
or a single ``.jsonl`` file with ``id``/``text``/``keywords`` fields per
line. Documents are ordered lexicographically by id so every downstream
report is reproducible.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

from .textproc import ProcessedDocument, TextPipeline, stem_phrase

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str
    gold: tuple[str, ...]


@dataclass(frozen=True)
class Dataset:
    name: str
    documents: tuple[RawDocument, ...]

    def __len__(self) -> int:
        return len(self.documents)


@dataclass(frozen=True)
class DatasetStats:
    size: int
    avg_tokens: float
    std_tokens: float
    avg_unique_tokens: float
    std_unique_tokens: float
    avg_phrases: float
    std_phrases: float
    avg_gold: float
    std_gold: float
    avg_multiword_gold: float
    std_multiword_gold: float
    diversity: float


def _read_text(path: Path) -> str:
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        log.warning("%s is not valid UTF-8; decoding with replacement", path)
        return data.decode("utf-8", errors="replace")


def _load_directory(root: Path, name: str) -> Dataset:
    docs_dir = root / "docsutf8"
    keys_dir = root / "keys"
    if not docs_dir.is_dir():
        raise FileNotFoundError(f"{root}: expected a docsutf8/ directory")
    documents = []
    seen = set()
    for text_path in sorted(docs_dir.glob("*.txt")):
        doc_id = text_path.stem
        if doc_id in seen:
            raise ValueError(f"duplicate document id {doc_id!r} in {root}")
        seen.add(doc_id)
        text = _read_text(text_path)
        key_path = keys_dir / f"{doc_id}.key"
        if key_path.is_file():
            gold = tuple(
                line.strip()
                for line in _read_text(key_path).splitlines()
                if line.strip()
            )
        else:
            log.warning("no key file for document %s; empty gold set", doc_id)
            gold = ()
        documents.append(RawDocument(id=doc_id, text=text, gold=gold))
    if not documents:
        raise FileNotFoundError(f"{root}: no documents found under docsutf8/")
    return Dataset(name=name, documents=tuple(documents))


def _load_jsonl(path: Path, name: str) -> Dataset:
    documents = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid JSON ({exc})")
            doc_id = str(record["id"])
            if doc_id in seen:
                raise ValueError(f"duplicate document id {doc_id!r} in {path}")
            seen.add(doc_id)
            documents.append(
                RawDocument(
                    id=doc_id,
                    text=record["text"],
                    gold=tuple(record.get("keywords", ())),
                )
            )
    if not documents:
        raise ValueError(f"{path}: no documents")
    documents.sort(key=lambda d: d.id)
    return Dataset(name=name, documents=tuple(documents))


def load_dataset(path, name: str | None = None) -> Dataset:
    """Load a benchmark dataset from a directory or a .jsonl file."""
    path = Path(path)
    if name is None:
        name = path.stem if path.suffix else path.name
    if path.is_file() and path.suffix == ".jsonl":
        return _load_jsonl(path, name)
    if path.is_dir():
        return _load_directory(path, name)
    raise FileNotFoundError(f"{path}: not a dataset directory or .jsonl file")


def filter_gold(doc: ProcessedDocument) -> frozenset[str]:
    """Gold keyphrases whose stemmed form matches a candidate key.

    Duplicate and case-variant gold phrases collapse onto one stem key.
    """
    keys = {c.key for c in doc.candidates}
    return frozenset(
        s for s in (stem_phrase(g) for g in doc.gold) if s and s in keys
    )


def process_dataset(dataset: Dataset, pipeline: TextPipeline | None = None):
    """Run the preprocessing pipeline over every document, in order."""
    if pipeline is None:
        pipeline = TextPipeline()
    return [pipeline.process(d.id, d.text, d.gold) for d in dataset.documents]


def _mean_std(values) -> tuple[float, float]:
    n = len(values)
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / n  # population variance
    return mean, math.sqrt(var)


def dataset_stats(dataset: Dataset, processed) -> DatasetStats:
    """Table-style per-dataset statistics over the processed documents."""
    if len(dataset.documents) == 0:
        raise ValueError("empty dataset")
    if len(processed) != len(dataset.documents):
        raise ValueError("processed documents not aligned with dataset")
    tokens = [len(d.tokens) for d in processed]
    unique = [len({t.surface.lower() for t in d.tokens}) for d in processed]
    phrases = [len(d.candidates) for d in processed]
    gold = [len(d.filtered_gold) for d in processed]
    multi = [sum(1 for k in d.filtered_gold if " " in k) for d in processed]

    avg_tokens, std_tokens = _mean_std(tokens)
    avg_unique, std_unique = _mean_std(unique)
    avg_phrases, std_phrases = _mean_std(phrases)
    avg_gold, std_gold = _mean_std(gold)
    avg_multi, std_multi = _mean_std(multi)
    diversity = avg_unique / avg_tokens if avg_tokens else 0.0
    return DatasetStats(
        size=len(dataset.documents),
        avg_tokens=avg_tokens,
        std_tokens=std_tokens,
        avg_unique_tokens=avg_unique,
        std_unique_tokens=std_unique,
        avg_phrases=avg_phrases,
        std_phrases=std_phrases,
        avg_gold=avg_gold,
        std_gold=std_gold,
        avg_multiword_gold=avg_multi,
        std_multiword_gold=std_multi,
        diversity=diversity,
    )
