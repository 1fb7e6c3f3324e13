import os
import random
from pathlib import Path

import pytest

import kex

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def pipeline():
    return kex.TextPipeline()


@pytest.fixture(scope="session")
def bench3():
    return kex.load_dataset(FIXTURES / "bench3")


@pytest.fixture(scope="session")
def bench3_docs(bench3, pipeline):
    return kex.process_dataset(bench3, pipeline)


@pytest.fixture(scope="session")
def bench3_stats(bench3_docs):
    return kex.fit_term_stats(bench3_docs)


# word pools for synthetic documents (drawn from the bundled lexicon so
# tagging behaves predictably)
_NOUNS = (
    "network algorithm model system graph kernel matrix cluster language"
    " corpus feature vector node edge query index document sentence term"
    " topic entropy gradient signal layer module protocol schema buffer"
).split()
_ADJS = (
    "neural deep sparse linear dynamic robust optimal semantic statistical"
    " recursive"
).split()
_FILLERS = (
    "computes improves the a and requires uses with for infers combines"
    " of to yields"
).split()


def make_synthetic_text(rng: random.Random) -> str:
    sentences = []
    for _ in range(rng.randint(3, 8)):
        words = []
        for _ in range(rng.randint(4, 11)):
            roll = rng.random()
            if roll < 0.45:
                words.append(rng.choice(_NOUNS))
            elif roll < 0.65:
                words.append(rng.choice(_ADJS))
            else:
                words.append(rng.choice(_FILLERS))
        sentences.append(" ".join(words).capitalize() + ".")
    return " ".join(sentences)


@pytest.fixture(scope="session")
def synthetic_docs(pipeline):
    rng = random.Random(20240617)
    return [
        pipeline.process(f"syn{i:02d}", make_synthetic_text(rng))
        for i in range(50)
    ]


def dataset_dir(name: str) -> Path | None:
    """Locate an externally fetched benchmark dataset, if present."""
    roots = [Path(__file__).parent.parent / "data"]
    env = os.environ.get("KEX_DATASETS")
    if env:
        roots.insert(0, Path(env))
    for root in roots:
        candidate = root / name
        if candidate.is_dir():
            return candidate
    return None
