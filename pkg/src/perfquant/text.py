"""Tokenization and splitting of requirements with two expectation points."""

from __future__ import annotations

import re
import string
from dataclasses import dataclass

from .errors import EmptyInput

NUMBER_RE = re.compile(r"^\d{1,3}(?:,\d{3})+(?:\.\d+)?$|^\d+(?:\.\d+)?$")

# connectives that may join two expectation clauses, and the modal verbs
# that delimit the shared subject prefix; both lists can be overridden from
# plain-text lexicon files (one entry per line, '#' comments)
DEFAULT_CONNECTIVES = ("and", "or", "while", ";", ",")
DEFAULT_PREFIX_VERBS = ("shall", "should", "must", "will", "can")


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    is_number: bool
    numeric_value: float | None
    position: int


@dataclass(frozen=True)
class TokenizedRequirement:
    raw: str
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def normalized(self) -> list[str]:
        return [t.normalized for t in self.tokens]

    @property
    def numeric_positions(self) -> list[int]:
        return [t.position for t in self.tokens if t.is_number]


def _parse_number(text: str) -> float | None:
    if NUMBER_RE.match(text):
        return float(text.replace(",", ""))
    return None


def tokenize(text: str) -> TokenizedRequirement:
    """Split on whitespace, strip surrounding punctuation, recognize numbers.

    Thousands separators and decimals are parsed ("1,000" -> 1000.0).  A
    token consisting only of punctuation (a lone ";" or ",") keeps its
    surface as the normalized form so connectives stay matchable.
    """
    if not text.strip():
        raise EmptyInput("requirement text is empty")
    tokens = []
    for position, chunk in enumerate(text.split()):
        stripped = chunk.strip(string.punctuation)
        normalized = stripped.lower() if stripped else chunk.lower()
        value = _parse_number(stripped) if stripped else None
        tokens.append(
            Token(
                surface=chunk,
                normalized=normalized,
                is_number=value is not None,
                numeric_value=value,
                position=position,
            )
        )
    return TokenizedRequirement(raw=text, tokens=tuple(tokens))


def detokenize(req: TokenizedRequirement) -> str:
    return " ".join(req.normalized)


def _subject_prefix(
    tokens: tuple[Token, ...], limit: int, verbs: tuple[str, ...]
) -> list[Token]:
    """Shared subject prefix copied onto the second split part.

    Extends through the first modal verb plus the token after it (the
    governed main verb), or the first three tokens when no modal is found;
    always cut before any numeric token so no expectation leaks across.
    """
    end = None
    for tok in tokens[:limit]:
        if tok.normalized in verbs:
            end = tok.position + 2
            break
    if end is None:
        end = 3
    end = min(end, limit)
    prefix = []
    for tok in tokens[:end]:
        if tok.is_number:
            break
        prefix.append(tok)
    return prefix


def split_expectations(
    req: TokenizedRequirement,
    connectives: tuple[str, ...] = DEFAULT_CONNECTIVES,
    prefix_verbs: tuple[str, ...] = DEFAULT_PREFIX_VERBS,
) -> list[TokenizedRequirement]:
    """Split a requirement holding two expectation points into one each.

    Looks for a coordinating connective strictly between two numeric
    tokens (either a standalone connective token, or trailing ','/';'
    punctuation on a word) and splits there, copying the subject prefix of
    the first clause onto the second.  Requirements with fewer than two
    numeric tokens come back unchanged as a singleton list.
    """
    nums = req.numeric_positions
    if len(nums) < 2:
        return [req]

    for a, b in zip(nums, nums[1:]):
        for c in range(a + 1, b):
            tok = req.tokens[c]
            standalone = tok.normalized in connectives
            attached = not standalone and tok.surface[-1] in ",;"
            if not (standalone or attached):
                continue
            first_end = c if standalone else c + 1
            prefix = _subject_prefix(req.tokens, first_end, prefix_verbs)
            part1 = [t.surface for t in req.tokens[:first_end]]
            part2 = [t.surface for t in prefix] + [
                t.surface for t in req.tokens[c + 1 :]
            ]
            return [tokenize(" ".join(part1)), tokenize(" ".join(part2))]

    return [req]
