"""Accuracy bookkeeping: exact overall accuracy, leave-one-out folds,
confusion counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .ecf import CategoryLabel, EcfParams, classify, train
from .errors import EmptyInput, LengthMismatch, TooFewExamples
from .features import FeatureVector

FoldRow = tuple[str, CategoryLabel, CategoryLabel]  # (swing_id, truth, predicted)


def overall_accuracy(
    predicted: Sequence[CategoryLabel], truth: Sequence[CategoryLabel]
) -> float:
    """Exact percent of correct classifications: 100 * correct / total.

    No rounding happens here; use display_percent for the reported integer.
    """
    if len(predicted) != len(truth):
        raise LengthMismatch(f"{len(predicted)} predictions vs {len(truth)} truths")
    if not truth:
        raise EmptyInput("accuracy over zero examples is undefined")
    correct = sum(1 for p, t in zip(predicted, truth) if p is t)
    return 100.0 * correct / len(truth)


def display_percent(oa_percent: float) -> int:
    """Integer percent as reported: rounded half away from zero."""
    return int(math.floor(oa_percent + 0.5))


def confusion_matrix(per_fold: Sequence[FoldRow]) -> dict[tuple[CategoryLabel, CategoryLabel], int]:
    """Sparse (truth, predicted) counts; the diagonal sums to the correct count."""
    counts: dict[tuple[CategoryLabel, CategoryLabel], int] = {}
    for _, t, p in per_fold:
        counts[(t, p)] = counts.get((t, p), 0) + 1
    return counts


@dataclass(frozen=True)
class EvalResult:
    oa_percent: float
    correct: int
    total: int
    per_fold: tuple[FoldRow, ...]
    confusion: dict[tuple[CategoryLabel, CategoryLabel], int]

    @property
    def display(self) -> int:
        return display_percent(self.oa_percent)


def loocv(
    data: Sequence[tuple[str, FeatureVector, CategoryLabel]],
    params: EcfParams,
) -> EvalResult:
    """Leave-one-out cross-validation.

    Fold i trains on every other example, preserving the original
    presentation order, and classifies the held-out one. Folds are
    independent; the serial loop here is deterministic and cheap at
    corpus scale.
    """
    n = len(data)
    if n < 2:
        raise TooFewExamples(f"leave-one-out needs >= 2 examples, got {n}")
    per_fold: list[FoldRow] = []
    for i, (swing_id, fv, truth) in enumerate(data):
        rest = [(f, lab) for j, (_, f, lab) in enumerate(data) if j != i]
        model = train(rest, params)
        predicted, _, _ = classify(model, fv.values)
        per_fold.append((swing_id, truth, predicted))
    truths = [t for _, t, _ in per_fold]
    preds = [p for _, _, p in per_fold]
    oa = overall_accuracy(preds, truths)
    correct = sum(1 for _, t, p in per_fold if t is p)
    return EvalResult(oa, correct, n, tuple(per_fold), confusion_matrix(per_fold))
