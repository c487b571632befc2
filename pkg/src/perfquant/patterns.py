"""Pattern knowledge base: pattern-label pairs, lexicons, extraction heuristic."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import NoExtractableSpan, PatternParseError, UnknownLabelCode
from .satisfaction import ClassLabel
from .text import TokenizedRequirement

PLACEHOLDER = "<N>"

LABEL_CODES = frozenset("GSE")

# seed lexicon of complement words that introduce an expectation point;
# negators are included so strict forms like "no more than" extract as
# whole patterns with the negation inside
DEFAULT_COMPLEMENTS = (
    "in", "under", "at", "least", "most", "more", "less", "than", "within",
    "every", "no", "up", "to", "be", "capable", "of", "supporting",
    "not", "never", "exceed", "exceeds", "exceeding", "beyond", "above",
    "below", "over", "once", "exactly", "away", "from", "hard", "limit",
    "maximum", "minimum", "handling", "handle",
)

# modal/verb anchors for requirements without a numeric expectation
EXTRACT_VERBS = frozenset({"shall", "should", "must", "be"})

_STOPWORDS = frozenset(
    """a an the of to in on at for by with and or is are was were it its this
    that these those as from per any each via be been being will would there
    their his her they them he she we you i do does did done has have had
    who whose which when where while what's what so such if then than""".split()
)


@dataclass(frozen=True)
class Pattern:
    """Normalized token sequence, at most one expectation placeholder, a label."""

    tokens: tuple[str, ...]
    label: ClassLabel
    source_id: str | None = None

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("pattern must have at least one token")
        if sum(1 for t in self.tokens if t == PLACEHOLDER) > 1:
            raise ValueError(f"pattern has multiple {PLACEHOLDER} placeholders")
        for t in self.tokens:
            if t == PLACEHOLDER:
                continue
            if not t or t != t.lower() or any(ch.isspace() for ch in t):
                raise ValueError(f"bad pattern token {t!r}")

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    @property
    def has_placeholder(self) -> bool:
        return PLACEHOLDER in self.tokens

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class PatternKB:
    """Immutable pattern list plus the negation lexicon."""

    patterns: tuple[Pattern, ...]
    negations: frozenset[str] = field(default_factory=frozenset)

    @classmethod
    def build(cls, patterns, negations=()) -> "PatternKB":
        """Deduplicate (tokens, label) pairs keeping the first occurrence."""
        seen = set()
        unique = []
        for p in patterns:
            key = (p.tokens, p.label)
            if key in seen:
                continue
            seen.add(key)
            unique.append(p)
        return cls(tuple(unique), frozenset(w.lower() for w in negations))

    def __len__(self) -> int:
        return len(self.patterns)


def load_wordlist(path: str | os.PathLike) -> list[str]:
    """One lowercase entry per line; '#' comments and blank lines skipped."""
    words = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.strip()
            if not entry or entry.startswith("#"):
                continue
            words.append(entry.lower())
    return words


def _parse_pattern_line(line: str, where: str) -> Pattern:
    fields = line.split("\t")
    if len(fields) != 3:
        raise PatternParseError(
            f"{where}: expected 'pattern<TAB>L<TAB>R', got {len(fields)} field(s)"
        )
    text, left, right = (f.strip() for f in fields)
    if left.upper() not in LABEL_CODES or right.upper() not in LABEL_CODES:
        raise UnknownLabelCode(f"{where}: label codes must be G, S or E, got {left!r}/{right!r}")
    tokens = tuple(t if t == PLACEHOLDER else t.lower() for t in text.split())
    if not tokens:
        raise PatternParseError(f"{where}: empty pattern text")
    try:
        return Pattern(tokens, ClassLabel.from_codes(left, right))
    except ValueError as exc:
        raise PatternParseError(f"{where}: {exc}") from exc


def load_patterns(
    path: str | os.PathLike, negations: list[str] | None = None
) -> PatternKB:
    """Load a pattern TSV; negations default to the bundled lexicon."""
    patterns = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            entry = line.rstrip("\n")
            if not entry.strip() or entry.lstrip().startswith("#"):
                continue
            patterns.append(_parse_pattern_line(entry, f"{path}:{lineno}"))
    if negations is None:
        from .data import default_negations

        negations = default_negations()
    return PatternKB.build(patterns, negations)


def save_patterns(kb: PatternKB, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for p in kb.patterns:
            left, right = p.label.codes
            fh.write(f"{p.text}\t{left}\t{right}\n")


def extract_pattern(
    req: TokenizedRequirement,
    label: ClassLabel,
    complements: tuple[str, ...] = DEFAULT_COMPLEMENTS,
    source_id: str | None = None,
) -> Pattern:
    """Heuristic pattern extraction from a labeled requirement.

    For the earliest numeric token preceded by a contiguous run of
    complement words, the run plus the number (as the placeholder) becomes
    the pattern.  Without a reachable number, the span from the last
    modal/verb anchor to the last non-stopword is used instead.
    """
    comp = set(complements)
    tokens = req.tokens

    for tok in tokens:
        if not tok.is_number:
            continue
        start = tok.position
        while start - 1 >= 0 and tokens[start - 1].normalized in comp:
            start -= 1
        if start < tok.position:
            words = [t.normalized for t in tokens[start : tok.position]]
            return Pattern(tuple(words + [PLACEHOLDER]), label, source_id)

    anchors = [t.position for t in tokens if t.normalized in EXTRACT_VERBS]
    if not anchors:
        raise NoExtractableSpan(f"no anchor found in {req.raw!r}")
    start = anchors[-1]
    content = [
        t.position
        for t in tokens
        if t.normalized not in _STOPWORDS and not t.is_number and t.normalized
    ]
    end = content[-1] if content else -1
    if end <= start:
        raise NoExtractableSpan(f"no span after anchor in {req.raw!r}")
    words = [
        t.normalized for t in tokens[start : end + 1] if not t.is_number
    ]
    return Pattern(tuple(words), label, source_id)
