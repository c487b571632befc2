"""Dataset I/O, weighted multi-class metrics, and the resampling protocol."""

from __future__ import annotations

import csv
import math
import os
import random
import statistics
from dataclasses import dataclass

from .embeddings import VectorStore
from .errors import (
    DatasetParseError,
    DatasetTooSmall,
    DuplicateId,
    EmptyInput,
    LengthMismatch,
    NoExtractableSpan,
)
from .matching import MatcherConfig, select
from .patterns import Pattern, PatternKB, extract_pattern
from .satisfaction import ClassLabel, MetricDirection
from .text import tokenize

DATASET_COLUMNS = ("id", "text", "left", "right", "v_beta", "direction")


@dataclass(frozen=True)
class LabeledRequirement:
    id: str
    text: str
    gold: ClassLabel
    gold_v_beta: float | None = None
    direction: MetricDirection | None = None


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int
    undefined: bool = False


@dataclass(frozen=True)
class MetricsReport:
    wp: float
    wr: float
    wf1: float
    per_class: dict[ClassLabel, ClassMetrics]
    n_eval: int
    n_nomatch: int


@dataclass
class BootstrapResult:
    reports: list[MetricsReport]
    mean: tuple[float, float, float] = (0.0, 0.0, 0.0)
    sd: tuple[float, float, float] = (0.0, 0.0, 0.0)
    train_size: int = 0

    def __post_init__(self) -> None:
        series = [(r.wp, r.wr, r.wf1) for r in self.reports]
        self.mean = tuple(statistics.mean(col) for col in zip(*series))
        if len(series) > 1:
            self.sd = tuple(statistics.stdev(col) for col in zip(*series))
        else:
            self.sd = (0.0, 0.0, 0.0)


def load_dataset(path: str | os.PathLike) -> list[LabeledRequirement]:
    """CSV with header id,text,left,right,v_beta,direction; v_beta and
    direction may be empty."""
    rows: list[LabeledRequirement] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = tuple(reader.fieldnames or ())
        if header != DATASET_COLUMNS:
            raise DatasetParseError(
                f"{path}: header must be {','.join(DATASET_COLUMNS)}, got {','.join(header)}"
            )
        for number, row in enumerate(reader, start=2):
            where = f"{path}: row {number}"
            rid = (row["id"] or "").strip()
            text = (row["text"] or "").strip()
            if not rid or not text:
                raise DatasetParseError(f"{where}: empty id or text")
            if rid in seen_ids:
                raise DuplicateId(f"{where}: duplicate id {rid!r}")
            seen_ids.add(rid)
            left, right = (row["left"] or "").strip(), (row["right"] or "").strip()
            try:
                gold = ClassLabel.from_codes(left, right)
            except ValueError as exc:
                raise DatasetParseError(
                    f"{where}: bad label codes {left!r}/{right!r}"
                ) from exc
            raw_beta = (row["v_beta"] or "").strip()
            try:
                v_beta = float(raw_beta) if raw_beta else None
            except ValueError as exc:
                raise DatasetParseError(f"{where}: bad v_beta {raw_beta!r}") from exc
            raw_dir = (row["direction"] or "").strip()
            try:
                direction = MetricDirection.from_code(raw_dir) if raw_dir else None
            except ValueError as exc:
                raise DatasetParseError(f"{where}: bad direction {raw_dir!r}") from exc
            rows.append(LabeledRequirement(rid, text, gold, v_beta, direction))
    return rows


def weighted_metrics(
    golds: list[ClassLabel], preds: list[ClassLabel | None]
) -> MetricsReport:
    """Per-class precision/recall/F1 weighted by gold-class proportion.

    A None prediction (no pattern matched) counts against its gold class
    and is tallied separately; zero-division cases score 0 and carry the
    per-class `undefined` flag.
    """
    if len(golds) != len(preds):
        raise LengthMismatch(f"{len(golds)} golds vs {len(preds)} predictions")
    if not golds:
        raise EmptyInput("no labels to score")

    n = len(golds)
    classes = sorted({g for g in golds}, key=lambda c: c.codes)
    per_class: dict[ClassLabel, ClassMetrics] = {}
    wp = wr = wf1 = 0.0
    for cls in classes:
        tp = sum(1 for g, p in zip(golds, preds) if g == cls and p == cls)
        fp = sum(1 for g, p in zip(golds, preds) if g != cls and p == cls)
        support = sum(1 for g in golds if g == cls)
        undefined = (tp + fp) == 0
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / support
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class[cls] = ClassMetrics(precision, recall, f1, support, undefined)
        weight = support / n
        wp += weight * precision
        wr += weight * recall
        wf1 += weight * f1

    n_nomatch = sum(1 for p in preds if p is None)
    return MetricsReport(wp, wr, wf1, per_class, n, n_nomatch)


def build_kb(
    rows: list[LabeledRequirement],
    base_patterns: tuple[Pattern, ...] = (),
    negations: list[str] | None = None,
    complements: tuple[str, ...] | None = None,
) -> PatternKB:
    """Extract one pattern per labeled row; rows the heuristic cannot
    handle are skipped."""
    if negations is None:
        from .data import default_negations

        negations = default_negations()
    if complements is None:
        from .data import default_complements

        complements = default_complements()
    extracted: list[Pattern] = list(base_patterns)
    for row in rows:
        try:
            extracted.append(
                extract_pattern(tokenize(row.text), row.gold, complements, row.id)
            )
        except (NoExtractableSpan, EmptyInput):
            continue
    return PatternKB.build(extracted, negations)


def predict_label(
    kb: PatternKB,
    store: VectorStore,
    text: str,
    cfg: MatcherConfig | None = None,
) -> tuple[ClassLabel | None, float | None]:
    """Single-label prediction for a dataset row (rows are pre-split)."""
    match = select(kb, store, tokenize(text), cfg)
    if match is None:
        return None, None
    return match.label, match.v_beta


def evaluate_split(
    train: list[LabeledRequirement],
    test: list[LabeledRequirement],
    store: VectorStore,
    base_patterns: tuple[Pattern, ...] = (),
    cfg: MatcherConfig | None = None,
) -> MetricsReport:
    kb = build_kb(train, base_patterns)
    golds = [row.gold for row in test]
    preds = [predict_label(kb, store, row.text, cfg)[0] for row in test]
    return weighted_metrics(golds, preds)


def run_seed(seed: int, run_index: int) -> int:
    return seed * 1_000_003 + run_index


def sample_split(
    n: int, train_size: int, seed: int, run_index: int
) -> tuple[list[int], list[int]]:
    """Seeded sample without replacement; train and test partition [0, n)."""
    rng = random.Random(run_seed(seed, run_index))
    train_idx = sorted(rng.sample(range(n), train_size))
    chosen = set(train_idx)
    test_idx = [i for i in range(n) if i not in chosen]
    return train_idx, test_idx


def bootstrap_eval(
    dataset: list[LabeledRequirement],
    runs: int,
    train_fraction: float,
    seed: int,
    store: VectorStore,
    base_patterns: tuple[Pattern, ...] = (),
    cfg: MatcherConfig | None = None,
    train_size: int | None = None,
) -> BootstrapResult:
    """Repeated extract-on-a-sample / test-on-the-rest evaluation.

    Each run draws floor(train_fraction * n) rows (or exactly train_size
    when given) without replacement under a per-run derived seed, builds a
    pattern base from them, and scores classification on the remainder.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    n = len(dataset)
    k = train_size if train_size is not None else math.floor(train_fraction * n)
    if k < 1 or k >= n:
        raise DatasetTooSmall(f"train size {k} of {n} leaves an empty partition")

    reports = []
    for run_index in range(runs):
        train_idx, test_idx = sample_split(n, k, seed, run_index)
        train = [dataset[i] for i in train_idx]
        test = [dataset[i] for i in test_idx]
        reports.append(evaluate_split(train, test, store, base_patterns, cfg))
    return BootstrapResult(reports=reports, train_size=k)


def cross_eval(
    train_dataset: list[LabeledRequirement],
    test_dataset: list[LabeledRequirement],
    store: VectorStore,
    base_patterns: tuple[Pattern, ...] = (),
    cfg: MatcherConfig | None = None,
) -> MetricsReport:
    """Extract from one whole dataset, test on all of another."""
    if not train_dataset or not test_dataset:
        raise DatasetTooSmall("cross-dataset evaluation needs non-empty datasets")
    return evaluate_split(train_dataset, test_dataset, store, base_patterns, cfg)


def report_lines(result: BootstrapResult) -> list[str]:
    """TSV rows (run, wP, wR, wF1, n_nomatch) plus the mean±sd summary."""
    lines = ["run\twP\twR\twF1\tn_nomatch"]
    for i, report in enumerate(result.reports, start=1):
        lines.append(
            f"{i}\t{report.wp:.4f}\t{report.wr:.4f}\t{report.wf1:.4f}\t{report.n_nomatch}"
        )
    mean, sd = result.mean, result.sd
    lines.append(
        "mean±sd\t"
        + "\t".join(f"{m:.4f}±{s:.4f}" for m, s in zip(mean, sd))
        + "\t-"
    )
    return lines


def report_json(result: BootstrapResult) -> dict:
    return {
        "runs": [
            {
                "run": i + 1,
                "wP": r.wp,
                "wR": r.wr,
                "wF1": r.wf1,
                "n_nomatch": r.n_nomatch,
            }
            for i, r in enumerate(result.reports)
        ],
        "mean": dict(zip(("wP", "wR", "wF1"), result.mean)),
        "sd": dict(zip(("wP", "wR", "wF1"), result.sd)),
        "train_size": result.train_size,
    }
