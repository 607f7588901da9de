from functools import lru_cache

import pytest

from pikernels.chartab import compute_table
from pikernels.groups import CORPUS_NAMES, named_group
from pikernels.verify import bundled_corpus
from pikernels.perm import load_group

SOLVABLE = [n for n in CORPUS_NAMES if n != "a5"]


@lru_cache(maxsize=None)
def corpus_group(name):
    return load_group(bundled_corpus() / f"{name}.json")


@lru_cache(maxsize=None)
def corpus_table(name):
    return compute_table(corpus_group(name))


@lru_cache(maxsize=None)
def group(spec):
    return named_group(spec)


@pytest.fixture
def s3():
    return group("s3")


def class_with(classes, order, size=None):
    """Index of the first class with the given element order (and size)."""
    for i, c in enumerate(classes):
        if c.order == order and (size is None or c.size == size):
            return i
    raise LookupError((order, size))
