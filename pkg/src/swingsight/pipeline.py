"""Batch plumbing shared by the CLI and the HTTP facade: ingest, feature
dumps, per-rule training and leave-one-out runs, batch assessment."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import ecf, evaluation, features, motion, orchestration
from .errors import SwingsightError, UnknownRule
from .store import SessionStore, now_iso


@dataclass(frozen=True)
class IngestResult:
    swing_id: str
    frames: int
    gap_runs: int
    repaired_runs: int
    required_violations: int


def ingest_file(
    store: SessionStore, path: str | Path, max_gap: int = motion.DEFAULT_MAX_GAP
) -> IngestResult:
    """Parse, validate and repair one swing file, then store both versions."""
    cfg = store.skeleton()
    raw = motion.parse_swing_file(Path(path).read_text(), cfg)
    report = motion.validate(raw, cfg, max_gap)
    repaired = motion.gap_fill(raw, max_gap)
    after = motion.validate(repaired, cfg, max_gap)
    store.put_swing(raw, repaired)
    return IngestResult(
        swing_id=raw.swing_id,
        frames=len(raw),
        gap_runs=len(report.gap_runs),
        repaired_runs=len(report.gap_runs) - len(after.gap_runs),
        required_violations=len(report.required_violations),
    )


FEATURE_CSV_HEADER = (
    "swing_id,swing_type,stance_deg,low_to_high_deg,"
    "width_leading,width_centre,width_rear,roi_start,roi_min,roi_end"
)


def feature_row(sample: motion.SwingSample) -> str:
    """One CSV row of raw features; cells stay empty where extraction fails."""
    cells = [sample.swing_id, sample.swing_type.value]
    try:
        roi = features.find_roi(sample)
    except SwingsightError:
        return ",".join(cells + [""] * 8)
    measures = []
    for fn in (
        lambda: features.stance_angle(sample, roi),
        lambda: features.low_to_high_angle(sample, roi),
        lambda: features.swing_width(sample, roi, features.SwingWidthVariant.HAND_LEADING_HIP),
        lambda: features.swing_width(sample, roi, features.SwingWidthVariant.HAND_BODY_CENTRE),
        lambda: features.swing_width(sample, roi, features.SwingWidthVariant.HAND_REAR_HIP),
    ):
        try:
            measures.append(repr(fn()))
        except SwingsightError:
            measures.append("")
    cells.extend(measures)
    cells.extend(str(v) for v in (roi.start_frame, roi.min_frame, roi.end_frame))
    return ",".join(cells)


def feature_table(store: SessionStore) -> str:
    lines = [FEATURE_CSV_HEADER]
    for swing_id in store.list_swings():
        lines.append(feature_row(store.get_swing(swing_id)))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RuleDataset:
    """Per-rule training material extracted from the store."""

    rule_id: str
    bounds: features.NormalizerBounds
    # (swing_id, vector, label) for every swing whose features extracted
    data: tuple[tuple[str, features.FeatureVector, ecf.CategoryLabel], ...]
    # (swing_id, error name) for labelled swings that could not be measured
    failures: tuple[tuple[str, str], ...]


def build_rule_dataset(store: SessionStore, rule_id: str) -> RuleDataset:
    """Measure every labelled swing for one rule.

    Normalization bounds are fitted on all successfully measured swings;
    swings whose features cannot be extracted are carried as failures so
    accuracy reports can count them against the rule.
    """
    if rule_id not in features.RULE_IDS:
        raise UnknownRule(f"unknown rule {rule_id!r}")
    raws: list[tuple[str, tuple[float, float], ecf.CategoryLabel]] = []
    failures: list[tuple[str, str]] = []
    for swing_id, label in store.labelled_swings(rule_id):
        sample = store.get_swing(swing_id)
        try:
            roi = features.find_roi(sample)
            value = features.raw_rule_feature(sample, rule_id, roi)
        except SwingsightError as e:
            failures.append((swing_id, e.name))
            continue
        raws.append((swing_id, (value, sample.swing_type.code), label))
    if not raws:
        return RuleDataset(rule_id, (), (), tuple(failures))
    bounds = features.fit_normalizer(
        [[r[1][0] for r in raws], [r[1][1] for r in raws]]
    )
    schema = (features.RULE_FEATURE_NAMES[rule_id], "swing_type")
    data = tuple(
        (
            swing_id,
            features.FeatureVector(
                rule_id, features.apply_normalizer(bounds, raw), schema
            ),
            label,
        )
        for swing_id, raw, label in raws
    )
    return RuleDataset(rule_id, bounds, data, tuple(failures))


def train_rule(
    store: SessionStore, rule_id: str, params: ecf.EcfParams | None = None
) -> tuple[ecf.EcfModel, RuleDataset]:
    """Fit and persist one rule's model from the stored labels."""
    params = params or ecf.default_params_for_rule(rule_id)
    ds = build_rule_dataset(store, rule_id)
    model = ecf.train([(fv, lab) for _, fv, lab in ds.data], params, ds.bounds)
    store.put_model(model)
    return model, ds


@dataclass(frozen=True)
class RuleEval:
    rule_id: str
    result: evaluation.EvalResult | None  # None when nothing was measurable
    failures: tuple[tuple[str, str], ...]
    epochs: int

    @property
    def correct(self) -> int:
        return self.result.correct if self.result else 0

    @property
    def total(self) -> int:
        """Labelled swings for the rule: measured plus failed."""
        measured = self.result.total if self.result else 0
        return measured + len(self.failures)

    @property
    def oa_percent(self) -> float:
        """Accuracy over every labelled swing; extraction failures count
        as misclassifications, as they deny the rule a verdict."""
        if self.total == 0:
            return 0.0
        return 100.0 * self.correct / self.total


def loocv_rule(
    store: SessionStore, rule_id: str, params: ecf.EcfParams | None = None
) -> RuleEval:
    params = params or ecf.default_params_for_rule(rule_id)
    ds = build_rule_dataset(store, rule_id)
    result = evaluation.loocv(list(ds.data), params) if len(ds.data) >= 2 else None
    return RuleEval(rule_id, result, ds.failures, params.epochs)


# Table rows for accuracy summaries: rule family and variant per rule id.
RULE_TABLE_ROWS: tuple[tuple[str, str, str], ...] = (
    ("stance", "square", features.RULE_STANCE_SQS),
    ("stance", "semi_open", features.RULE_STANCE_SOS),
    ("low_to_high", "", features.RULE_LOW_TO_HIGH),
    ("swing_width", "leading_hip", "swing_width:leading_hip"),
    ("swing_width", "body_centre", "swing_width:body_centre"),
    ("swing_width", "rear_hip", "swing_width:rear_hip"),
)


def loocv_summary_csv(evals: list[RuleEval]) -> str:
    """Accuracy summary shaped like the published table: one row per rule
    variant with the rounded OA, the raw counts, and the epochs used."""
    by_rule = {e.rule_id: e for e in evals}
    lines = ["coaching_rule,variant,oa_percent,oa_percent_exact,correct,total,epochs"]
    for family, variant, rule_id in RULE_TABLE_ROWS:
        e = by_rule.get(rule_id)
        if e is None:
            continue
        lines.append(
            f"{family},{variant},{evaluation.display_percent(e.oa_percent)},"
            f"{e.oa_percent!r},{e.correct},{e.total},{e.epochs}"
        )
    return "\n".join(lines) + "\n"


def assess_batch(
    store: SessionStore,
    profile_id: str,
    top_k: int = orchestration.DEFAULT_TOP_K,
    session_id: str | None = None,
    swing_ids: list[str] | None = None,
) -> tuple[str, list[orchestration.SwingAssessment]]:
    """Assess swings under a profile and persist the session document.

    Swings are assessed in ascending id order (the store's listing order),
    which fixes the Z series ordering.
    """
    profile = store.get_profile(profile_id)
    ids = swing_ids if swing_ids is not None else store.list_swings()
    models = {
        rule_id: store.get_model(rule_id)
        for rule_id, w in profile.weights.items()
        if w > 0.0 and store.has_model(rule_id)
    }
    cues = store.cue_catalogue()
    assessments = []
    for swing_id in ids:
        sample = store.get_swing(swing_id)
        assessments.append(
            orchestration.assess_swing(sample, models, profile, top_k, cues)
        )
    session_id = session_id or f"session-{now_iso().replace(':', '')}"
    store.put_session(
        session_id,
        {
            "session_id": session_id,
            "profile_id": profile_id,
            "top_k": top_k,
            "created": now_iso(),
            "assessments": [
                orchestration.assessment_to_dict(a) for a in assessments
            ],
        },
    )
    return session_id, assessments


def session_report(store: SessionStore, session_id: str) -> orchestration.SessionReport:
    doc = store.get_session(session_id)
    assessments = [
        orchestration.assessment_from_dict(d) for d in doc["assessments"]
    ]
    return orchestration.session_report(session_id, assessments)
