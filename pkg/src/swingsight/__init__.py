"""Tennis swing diagnostics from 3D marker trajectories.

Pipeline: parse or synthesize marker data, repair short occlusions, measure
coaching-rule features around the contact zone, classify each feature with an
evolving hypersphere model, then orchestrate the verdicts into weighted
scores and worst-first verbal cues.
"""

from .ecf import (
    CategoryLabel,
    EcfModel,
    EcfParams,
    RuleNode,
    classify,
    classify_vote,
    default_params_for_rule,
    extract_rules,
    learn_one,
    load_model,
    save_model,
    train,
)
from .errors import SwingsightError
from .evaluation import (
    EvalResult,
    confusion_matrix,
    display_percent,
    loocv,
    overall_accuracy,
)
from .features import (
    FeatureVector,
    NormalizerBounds,
    RoiWindow,
    RULE_IDS,
    SwingWidthVariant,
    apply_normalizer,
    build_feature_vector,
    find_roi,
    fit_normalizer,
    low_to_high_angle,
    stance_angle,
    swing_width,
)
from .motion import (
    DEFAULT_MARKERS,
    OcclusionSpan,
    SkeletonConfig,
    SwingSample,
    SwingType,
    SynthParams,
    ValidationReport,
    gap_fill,
    parse_swing_file,
    serialize_swing,
    synthesize_swing,
    validate,
)
from .orchestration import (
    Colour,
    CueCatalogue,
    RuleOutcome,
    SessionReport,
    SwingAssessment,
    WeightsProfile,
    assess_swing,
    cue_list,
    default_cue_catalogue,
    session_report,
    weighted_overall,
)
from .store import LabelSet, SessionStore

__version__ = "0.1.0"
