"""Bundled default lexicons, patterns, word vectors, and corpora."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

PATTERNS_FILE = "patterns.tsv"
NEGATIONS_FILE = "negation_words.txt"
COMPLEMENTS_FILE = "complement_words.txt"
CONNECTIVES_FILE = "connective_words.txt"
PREFIX_VERBS_FILE = "verb_words.txt"
DIRECTIONS_FILE = "direction_words.tsv"
VECTORS_FILE = "mini_vectors.txt"
MINI_CORPUS_FILE = "mini_corpus.csv"
HOLDOUT_FILE = "holdout.csv"


def path(name: str) -> Path:
    """Filesystem path of a bundled data file."""
    p = Path(str(resources.files(__package__) / name))
    if not p.exists():
        raise FileNotFoundError(f"bundled data file missing: {name}")
    return p


def default_negations() -> list[str]:
    from ..patterns import load_wordlist

    return load_wordlist(path(NEGATIONS_FILE))


def default_complements() -> tuple[str, ...]:
    from ..patterns import load_wordlist

    return tuple(load_wordlist(path(COMPLEMENTS_FILE)))


def default_connectives() -> tuple[str, ...]:
    from ..patterns import load_wordlist

    return tuple(load_wordlist(path(CONNECTIVES_FILE)))


def default_prefix_verbs() -> tuple[str, ...]:
    from ..patterns import load_wordlist

    return tuple(load_wordlist(path(PREFIX_VERBS_FILE)))


def default_kb():
    from ..patterns import load_patterns

    return load_patterns(path(PATTERNS_FILE), negations=default_negations())


def default_store():
    from ..embeddings import load_vectors

    return load_vectors(path(VECTORS_FILE))


def default_directions() -> dict:
    from ..pipeline import load_direction_words

    return load_direction_words(path(DIRECTIONS_FILE))
