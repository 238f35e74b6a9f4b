"""Turning per-rule classifications into coaching output: a weighted overall
score, colour-coded cues sorted worst first, and session aggregates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ecf import CategoryLabel, EcfModel, classify
from .errors import (
    AllWeightsZero,
    EmptyOutcomes,
    EmptySession,
    MissingModel,
    SwingsightError,
)
from .features import RULE_IDS, build_feature_vector, find_roi
from .motion import SwingSample


class Colour(enum.Enum):
    RED = "red"
    AMBER = "amber"
    GREEN = "green"


CATEGORY_COLOUR: dict[CategoryLabel, Colour] = {
    CategoryLabel.BAD: Colour.RED,
    CategoryLabel.AVERAGE: Colour.AMBER,
    CategoryLabel.VERY_GOOD: Colour.GREEN,
}

DEFAULT_TOP_K = 3


@dataclass(frozen=True)
class WeightsProfile:
    """Coach-tunable emphasis per rule, keyed to a skill level and scenario."""

    profile_id: str
    skill_level: str
    scenario: str
    weights: dict[str, float]

    def __post_init__(self) -> None:
        if not self.profile_id:
            raise ValueError("profile_id must be non-empty")
        for rule_id, w in self.weights.items():
            if rule_id not in RULE_IDS:
                raise ValueError(f"unknown rule_id {rule_id!r} in weights")
            if not (0.0 <= w <= 1.0):
                raise ValueError(f"weight for {rule_id} outside [0, 1]: {w!r}")
        if not any(w > 0 for w in self.weights.values()):
            raise ValueError("at least one weight must be positive")

    @classmethod
    def from_text(cls, text: str) -> "WeightsProfile":
        """key = value lines; profile_id, skill_level and scenario first,
        then one line per weighted rule."""
        meta: dict[str, str] = {}
        weights: dict[str, float] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad profile line: {line!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            if key in ("profile_id", "skill_level", "scenario"):
                meta[key] = val
            else:
                weights[key] = float(val)
        for need in ("profile_id", "skill_level", "scenario"):
            if need not in meta:
                raise ValueError(f"profile file missing {need}")
        return cls(meta["profile_id"], meta["skill_level"], meta["scenario"], weights)

    def to_text(self) -> str:
        lines = [
            f"profile_id = {self.profile_id}",
            f"skill_level = {self.skill_level}",
            f"scenario = {self.scenario}",
        ]
        lines.extend(f"{rule} = {w!r}" for rule, w in self.weights.items())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RuleOutcome:
    """One rule's verdict on one swing."""

    rule_id: str
    category: CategoryLabel
    score: float       # category score: bad 0, average 0.5, very good 1
    activation: float  # covering-node activation, 0 on nearest-node fallback
    cue_text: str
    colour: Colour


@dataclass(frozen=True)
class SwingAssessment:
    swing_id: str
    profile_id: str
    outcomes: tuple[RuleOutcome, ...]
    # Rules that were weighted but could not be judged: (rule_id, error name).
    not_assessed: tuple[tuple[str, str], ...]
    z: float | None  # weighted overall, None when nothing was assessable
    cue_list: tuple[RuleOutcome, ...]


@dataclass(frozen=True)
class RuleStats:
    counts: dict[CategoryLabel, int]
    mean_score: float
    assessed: int


@dataclass(frozen=True)
class SessionReport:
    session_id: str
    swings_assessed: int
    per_rule: dict[str, RuleStats]
    z_series: tuple[float | None, ...]
    worst_rule: str


class CueCatalogue:
    """(rule_id, category) -> coaching phrase, loaded from a small CSV."""

    def __init__(self, phrases: Mapping[tuple[str, CategoryLabel], str] | None = None):
        self._phrases = dict(phrases or {})

    def phrase(self, rule_id: str, category: CategoryLabel) -> str:
        return self._phrases.get(
            (rule_id, category), f"{rule_id}: {category.value.replace('_', ' ')}"
        )

    @classmethod
    def from_csv(cls, text: str) -> "CueCatalogue":
        phrases: dict[tuple[str, CategoryLabel], str] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("rule_id,"):
                continue
            rule_id, cat, phrase = line.split(",", 2)
            phrases[(rule_id, CategoryLabel(cat))] = phrase
        return cls(phrases)

    def to_csv(self) -> str:
        lines = ["rule_id,category,phrase"]
        for (rule_id, cat), phrase in self._phrases.items():
            lines.append(f"{rule_id},{cat.value},{phrase}")
        return "\n".join(lines) + "\n"


def default_cue_catalogue() -> CueCatalogue:
    bad, avg, good = CategoryLabel.BAD, CategoryLabel.AVERAGE, CategoryLabel.VERY_GOOD
    phrases: dict[tuple[str, CategoryLabel], str] = {
        ("stance_sqs", bad): "Step into a square stance before the ball arrives",
        ("stance_sqs", avg): "Square your stance up a little earlier",
        ("stance_sqs", good): "Square stance looks solid",
        ("stance_sos", bad): "Open your stance toward semi-open",
        ("stance_sos", avg): "Settle into the semi-open stance sooner",
        ("stance_sos", good): "Semi-open stance looks solid",
        ("low_to_high", bad): "Brush the ball: swing low to high",
        ("low_to_high", avg): "More low-to-high lift through contact",
        ("low_to_high", good): "Great brushing action",
    }
    for variant in ("leading_hip", "body_centre", "rear_hip"):
        rule = f"swing_width:{variant}"
        phrases[(rule, bad)] = "Your swing is too wide: keep the hand closer"
        phrases[(rule, avg)] = "Tighten the swing width a touch"
        phrases[(rule, good)] = "Swing width is in the comfortable range"
    return CueCatalogue(phrases)


def weighted_overall(scores: Mapping[str, float], profile: WeightsProfile) -> float:
    """Z = sum(w_i * x_i) / sum(w_i) over the rules scored AND positively
    weighted. Zero-weight rules can never move the result."""
    num = 0.0
    den = 0.0
    for rule_id, x in scores.items():
        w = profile.weights.get(rule_id, 0.0)
        if w > 0.0:
            num += w * x
            den += w
    if den == 0.0:
        raise AllWeightsZero("no scored rule carries positive weight")
    return num / den


def cue_list(
    outcomes: Sequence[RuleOutcome], top_k: int = DEFAULT_TOP_K
) -> tuple[RuleOutcome, ...]:
    """Worst first: ascending score, rule_id breaking ties; at most top_k."""
    if not outcomes:
        raise EmptyOutcomes("no outcomes to rank")
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    ranked = sorted(outcomes, key=lambda o: (o.score, o.rule_id))
    return tuple(ranked[:top_k])


def assess_swing(
    sample: SwingSample,
    models: Mapping[str, EcfModel],
    profile: WeightsProfile,
    top_k: int = DEFAULT_TOP_K,
    cues: CueCatalogue | None = None,
) -> SwingAssessment:
    """Judge one swing under a weights profile.

    The ROI is located once and shared by every rule. Zero-weight rules are
    skipped outright. A rule whose feature or model lookup fails is reported
    as not assessed and excluded from Z rather than sinking the swing.
    """
    cues = cues or default_cue_catalogue()
    weighted = [
        (rule_id, w) for rule_id, w in profile.weights.items() if w > 0.0
    ]
    weighted.sort()  # stable rule order in outputs
    for rule_id, _ in weighted:
        if rule_id not in models:
            raise MissingModel(f"no trained model for weighted rule {rule_id!r}")

    roi = None
    roi_error: SwingsightError | None = None
    try:
        roi = find_roi(sample)
    except SwingsightError as e:
        roi_error = e

    outcomes: list[RuleOutcome] = []
    not_assessed: list[tuple[str, str]] = []
    for rule_id, _ in weighted:
        if roi is None:
            not_assessed.append((rule_id, roi_error.name))
            continue
        model = models[rule_id]
        try:
            fv = build_feature_vector(sample, rule_id, roi, model.bounds)
            label, activation, _ = classify(model, fv.values)
        except SwingsightError as e:
            not_assessed.append((rule_id, e.name))
            continue
        outcomes.append(
            RuleOutcome(
                rule_id=rule_id,
                category=label,
                score=label.score,
                activation=activation,
                cue_text=cues.phrase(rule_id, label),
                colour=CATEGORY_COLOUR[label],
            )
        )

    z: float | None = None
    if outcomes:
        z = weighted_overall({o.rule_id: o.score for o in outcomes}, profile)
    listed = cue_list(outcomes, top_k) if outcomes else ()
    return SwingAssessment(
        swing_id=sample.swing_id,
        profile_id=profile.profile_id,
        outcomes=tuple(outcomes),
        not_assessed=tuple(not_assessed),
        z=z,
        cue_list=listed,
    )


def session_report(
    session_id: str, assessments: Sequence[SwingAssessment]
) -> SessionReport:
    """Aggregate a session: per-rule category counts and mean score, the Z
    series in assessment order, and the rule with the worst mean."""
    if not assessments:
        raise EmptySession("no assessments in session")
    per_rule: dict[str, RuleStats] = {}
    sums: dict[str, float] = {}
    counts: dict[str, dict[CategoryLabel, int]] = {}
    seen: dict[str, int] = {}
    for a in assessments:
        for o in a.outcomes:
            c = counts.setdefault(o.rule_id, {lab: 0 for lab in CategoryLabel})
            c[o.category] += 1
            sums[o.rule_id] = sums.get(o.rule_id, 0.0) + o.score
            seen[o.rule_id] = seen.get(o.rule_id, 0) + 1
    if not seen:
        raise EmptySession("no rule was assessable in this session")
    for rule_id in seen:
        per_rule[rule_id] = RuleStats(
            counts=counts[rule_id],
            mean_score=sums[rule_id] / seen[rule_id],
            assessed=seen[rule_id],
        )
    worst = min(per_rule, key=lambda r: (per_rule[r].mean_score, r))
    return SessionReport(
        session_id=session_id,
        swings_assessed=len(assessments),
        per_rule=per_rule,
        z_series=tuple(a.z for a in assessments),
        worst_rule=worst,
    )


# ------------------------------------------------------------ serialization

def outcome_to_dict(o: RuleOutcome) -> dict:
    return {
        "rule_id": o.rule_id,
        "category": o.category.value,
        "score": o.score,
        "activation": o.activation,
        "cue_text": o.cue_text,
        "colour": o.colour.value,
    }


def outcome_from_dict(d: dict) -> RuleOutcome:
    return RuleOutcome(
        rule_id=d["rule_id"],
        category=CategoryLabel(d["category"]),
        score=d["score"],
        activation=d["activation"],
        cue_text=d["cue_text"],
        colour=Colour(d["colour"]),
    )


def assessment_to_dict(a: SwingAssessment) -> dict:
    return {
        "swing_id": a.swing_id,
        "profile_id": a.profile_id,
        "outcomes": [outcome_to_dict(o) for o in a.outcomes],
        "not_assessed": [list(pair) for pair in a.not_assessed],
        "z": a.z,
        "cue_list": [outcome_to_dict(o) for o in a.cue_list],
    }


def assessment_from_dict(d: dict) -> SwingAssessment:
    return SwingAssessment(
        swing_id=d["swing_id"],
        profile_id=d["profile_id"],
        outcomes=tuple(outcome_from_dict(o) for o in d["outcomes"]),
        not_assessed=tuple((r, e) for r, e in d["not_assessed"]),
        z=d["z"],
        cue_list=tuple(outcome_from_dict(o) for o in d["cue_list"]),
    )


def report_to_dict(r: SessionReport) -> dict:
    return {
        "session_id": r.session_id,
        "swings_assessed": r.swings_assessed,
        "per_rule": {
            rule_id: {
                "counts": {lab.value: n for lab, n in st.counts.items()},
                "mean_score": st.mean_score,
                "assessed": st.assessed,
            }
            for rule_id, st in r.per_rule.items()
        },
        "z_series": list(r.z_series),
        "worst_rule": r.worst_rule,
    }
