import numpy as np
import pytest

from perfquant import VectorStore
from perfquant.data import default_kb, default_store


@pytest.fixture(scope="session")
def mini_store():
    return default_store()


@pytest.fixture(scope="session")
def bundled_kb():
    return default_kb()


@pytest.fixture
def make_store():
    """Build a tiny vector store from {word: components} mappings."""

    def build(entries: dict, dimension: int | None = None) -> VectorStore:
        arrays = {w: np.asarray(v, dtype=np.float64) for w, v in entries.items()}
        dim = dimension or len(next(iter(arrays.values())))
        return VectorStore(dimension=dim, entries=arrays)

    return build
