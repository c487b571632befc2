"""Word-vector storage and sentence-vector arithmetic for semantic matching."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, VectorFormatError
from .text import NUMBER_RE

# expectation placeholders and numeric literals share one embedding
NUMBER_WORD = "number"


@dataclass(frozen=True)
class VectorStore:
    dimension: int
    entries: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        if self.dimension <= 0:
            raise ValueError("vector dimension must be positive")

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, word: str) -> np.ndarray | None:
        return self.entries.get(word)


def load_vectors(path: str | os.PathLike) -> VectorStore:
    """Read a word2vec text file: header "vocab_size dimension", then one
    word plus `dimension` floats per line."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise VectorFormatError(f"{path}: header must be 'vocab_size dimension'")
        try:
            vocab_size, dimension = int(header[0]), int(header[1])
        except ValueError as exc:
            raise VectorFormatError(f"{path}: non-integer header fields") from exc
        if vocab_size < 0 or dimension <= 0:
            raise VectorFormatError(f"{path}: bad header values {vocab_size} {dimension}")

        entries: dict[str, np.ndarray] = {}
        for lineno, line in enumerate(fh, start=2):
            fields = line.split()
            if not fields:
                continue
            word, values = fields[0], fields[1:]
            if len(values) != dimension:
                raise DimensionMismatch(
                    f"{path}: line {lineno}: expected {dimension} components, got {len(values)}"
                )
            if word in entries:
                raise VectorFormatError(f"{path}: line {lineno}: duplicate word {word!r}")
            try:
                entries[word] = np.array([float(x) for x in values], dtype=np.float64)
            except ValueError as exc:
                raise VectorFormatError(f"{path}: line {lineno}: non-numeric component") from exc

    if len(entries) != vocab_size:
        raise VectorFormatError(
            f"{path}: header promises {vocab_size} entries, file has {len(entries)}"
        )
    return VectorStore(dimension=dimension, entries=entries)


def sentence_vector(store: VectorStore, tokens: list[str]) -> np.ndarray:
    """Mean of the in-vocabulary token vectors.

    Placeholders and numeric literals map to the vector of the literal word
    "number" when present; unknown tokens are skipped; if nothing is known
    the zero vector comes back (a neutral semantic signal).
    """
    if not tokens:
        raise ValueError("sentence_vector needs at least one token")
    vectors = []
    for token in tokens:
        key = NUMBER_WORD if token == "<N>" or NUMBER_RE.match(token) else token
        vec = store.entries.get(key)
        if vec is not None:
            vectors.append(vec)
    if not vectors:
        return np.zeros(store.dimension, dtype=np.float64)
    return np.mean(vectors, axis=0)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity in [-1, 1]; zero-norm inputs score 0."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise DimensionMismatch(f"cosine of shapes {u.shape} and {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))
