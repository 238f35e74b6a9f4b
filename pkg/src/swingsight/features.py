"""Coaching-rule features measured around the contact zone.

All three features are read off a region of interest (ROI) centred on the
wrist-height minimum that precedes peak transverse hand speed; "transverse"
always means the XY ground plane.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    ArityMismatch,
    DegenerateFeet,
    EmptyDimension,
    InsufficientFrames,
    NoLocalMinimum,
    NonFiniteInput,
    RequiredMarkerMissing,
    UnknownRule,
    ZeroHipWidth,
    ZeroTransverseDisplacement,
)
from .motion import RISE_WINDOW_FRAMES, SwingSample, SwingType

# Wrist-height smoothing ahead of minimum detection: centred moving average.
SMOOTH_WINDOW = 3

WRIST = "PSHD"
LEAD_HIP = "PSGT"   # playing-side great trochanter
REAR_HIP = "SSGT"   # support-side great trochanter
TIP_A = "PSTOE"
TIP_B = "SSTOE"


class SwingWidthVariant(enum.Enum):
    """Reference point the wrist distance is measured against."""

    HAND_LEADING_HIP = "leading_hip"
    HAND_BODY_CENTRE = "body_centre"
    HAND_REAR_HIP = "rear_hip"


RULE_STANCE_SQS = "stance_sqs"
RULE_STANCE_SOS = "stance_sos"
RULE_LOW_TO_HIGH = "low_to_high"
RULE_WIDTH_PREFIX = "swing_width:"

RULE_IDS: tuple[str, ...] = (
    RULE_STANCE_SQS,
    RULE_STANCE_SOS,
    RULE_LOW_TO_HIGH,
    RULE_WIDTH_PREFIX + SwingWidthVariant.HAND_LEADING_HIP.value,
    RULE_WIDTH_PREFIX + SwingWidthVariant.HAND_BODY_CENTRE.value,
    RULE_WIDTH_PREFIX + SwingWidthVariant.HAND_REAR_HIP.value,
)

# Raw feature name per rule; doubles as the first schema entry.
RULE_FEATURE_NAMES: dict[str, str] = {
    RULE_STANCE_SQS: "stance_deg",
    RULE_STANCE_SOS: "stance_deg",
    RULE_LOW_TO_HIGH: "low_to_high_deg",
    RULE_WIDTH_PREFIX + "leading_hip": "width_leading_hip",
    RULE_WIDTH_PREFIX + "body_centre": "width_body_centre",
    RULE_WIDTH_PREFIX + "rear_hip": "width_rear_hip",
}


@dataclass(frozen=True)
class RoiWindow:
    """Frame window around the wrist-height minimum."""

    start_frame: int
    min_frame: int
    end_frame: int

    def __post_init__(self) -> None:
        if not (0 <= self.start_frame <= self.min_frame <= self.end_frame):
            raise ValueError("ROI must satisfy 0 <= start <= min <= end")


@dataclass(frozen=True)
class FeatureVector:
    """Classifier input: [normalized feature, swing-type code]."""

    rule_id: str
    values: tuple[float, ...]
    schema: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.schema):
            raise ValueError("schema length must match values length")
        for v in self.values:
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"normalized value {v!r} outside [0, 1]")


# Per-dimension (min, max) pairs used for linear scaling to [0, 1].
NormalizerBounds = tuple[tuple[float, float], ...]


def _wrist_series(sample: SwingSample) -> np.ndarray:
    track = sample.track(WRIST)
    if np.isnan(track).any():
        raise RequiredMarkerMissing(f"{WRIST} must be present at every frame")
    return track


def _smooth(z: np.ndarray) -> np.ndarray:
    """Centred moving average, window truncated at the ends."""
    n = len(z)
    half = SMOOTH_WINDOW // 2
    out = np.empty(n)
    for i in range(n):
        lo = max(0, i - half)
        hi = min(n, i + half + 1)
        out[i] = z[lo:hi].mean()
    return out


def _transverse_speed(track: np.ndarray) -> np.ndarray:
    """Per-frame XY speed, central differences with one-sided ends."""
    xy = track[:, :2]
    n = len(xy)
    v = np.empty(n)
    v[0] = np.hypot(*(xy[1] - xy[0]))
    v[-1] = np.hypot(*(xy[-1] - xy[-2]))
    for i in range(1, n - 1):
        step = (xy[i + 1] - xy[i - 1]) / 2.0
        v[i] = np.hypot(step[0], step[1])
    return v


def find_roi(sample: SwingSample, k: int = RISE_WINDOW_FRAMES) -> RoiWindow:
    """Locate the contact-zone window.

    min_frame is the last local minimum of the smoothed wrist height that
    falls strictly before the frame of peak transverse wrist speed; the
    window extends k frames to each side, clamped to the swing.
    """
    n = len(sample)
    if n < 2 * k + 1:
        raise InsufficientFrames(f"need at least {2 * k + 1} frames, got {n}")
    track = _wrist_series(sample)
    z = _smooth(track[:, 2])
    speed = _transverse_speed(track)
    peak = int(np.argmax(speed))  # first index on ties
    minimum = None
    for i in range(1, n - 1):
        if i >= peak:
            break
        # Strict drop on the left, non-strict on the right: a plateau counts
        # once, at its first frame.
        if z[i - 1] > z[i] <= z[i + 1]:
            minimum = i
    if minimum is None:
        raise NoLocalMinimum(
            "no wrist-height local minimum before peak transverse speed"
        )
    return RoiWindow(max(0, minimum - k), minimum, min(n - 1, minimum + k))


def stance_angle(sample: SwingSample, roi: RoiWindow) -> float:
    """Mean acute angle, in degrees, between the shoe-tip line and the
    target line (+Y), over the ROI frames. Range [0, 90]."""
    if roi.end_frame >= len(sample):
        raise ValueError("ROI exceeds swing length")
    angles = []
    for i in range(roi.start_frame, roi.end_frame + 1):
        a = sample.frames[i][TIP_A]
        b = sample.frames[i][TIP_B]
        if a is None or b is None:
            raise RequiredMarkerMissing(f"shoe tips must be present at frame {i}")
        wx, wy = a[0] - b[0], a[1] - b[1]
        norm = math.hypot(wx, wy)
        if norm == 0.0:
            raise DegenerateFeet(f"shoe tips coincide in the ground plane at frame {i}")
        angles.append(math.degrees(math.atan2(abs(wx), abs(wy))))
    return float(sum(angles) / len(angles))


def low_to_high_angle(sample: SwingSample, roi: RoiWindow) -> float:
    """Elevation, in degrees, of the wrist rise out of the minimum.

    atan of (height gained between min_frame and end_frame) over (transverse
    path length walked between those frames). Range (-90, 90).
    """
    lo, hi = roi.min_frame, roi.end_frame
    if hi >= len(sample):
        raise ValueError("ROI exceeds swing length")
    pts = []
    for i in range(lo, hi + 1):
        p = sample.frames[i][WRIST]
        if p is None:
            raise RequiredMarkerMissing(f"{WRIST} must be present at frame {i}")
        pts.append(p)
    path = 0.0
    for a, b in zip(pts, pts[1:]):
        path += math.hypot(b[0] - a[0], b[1] - a[1])
    if path == 0.0:
        raise ZeroTransverseDisplacement(
            "wrist does not move in the ground plane over the rise window"
        )
    rise = pts[-1][2] - pts[0][2]
    return math.degrees(math.atan(rise / path))


def _nearest_co_present(sample: SwingSample, at: int) -> int | None:
    """Frame nearest to `at` where both hip markers are present; ties go
    to the earlier frame."""
    best: int | None = None
    for i in range(len(sample)):
        if sample.present(LEAD_HIP, i) and sample.present(REAR_HIP, i):
            if best is None or abs(i - at) < abs(best - at):
                best = i
    return best


def _hip_geometry(sample: SwingSample, at: int) -> tuple[float, tuple[float, float] | None, tuple[float, float] | None]:
    """Transverse hip width at `at`, with the pelvis offset carried from the
    nearest fully observed frame when one trochanter is hidden.

    Returns (width, lead_xy, rear_xy); a hidden trochanter comes back as the
    reconstructed position, or None when either hip was never co-present.
    """
    lead = sample.frames[at][LEAD_HIP]
    rear = sample.frames[at][REAR_HIP]
    if lead is not None and rear is not None:
        width = math.hypot(lead[0] - rear[0], lead[1] - rear[1])
        return width, (lead[0], lead[1]), (rear[0], rear[1])
    anchor = _nearest_co_present(sample, at)
    if anchor is None:
        return 0.0, None, None
    la = sample.frames[anchor][LEAD_HIP]
    ra = sample.frames[anchor][REAR_HIP]
    off = (la[0] - ra[0], la[1] - ra[1])
    width = math.hypot(off[0], off[1])
    if lead is not None:
        lxy = (lead[0], lead[1])
        rxy = (lead[0] - off[0], lead[1] - off[1])
    elif rear is not None:
        rxy = (rear[0], rear[1])
        lxy = (rear[0] + off[0], rear[1] + off[1])
    else:
        return width, None, None
    return width, lxy, rxy


def swing_width(
    sample: SwingSample, roi: RoiWindow, variant: SwingWidthVariant
) -> float:
    """Transverse wrist distance at the minimum frame, as a fraction of hip
    width, measured against the variant's reference point.

    HAND_LEADING_HIP demands the playing-side trochanter itself; the body
    centre and rear hip variants survive its occlusion by carrying the
    pelvis offset from the nearest frame where both trochanters were seen.
    """
    at = roi.min_frame
    wrist = sample.frames[at][WRIST]
    if wrist is None:
        raise RequiredMarkerMissing(f"{WRIST} must be present at frame {at}")
    lead_raw = sample.frames[at][LEAD_HIP]
    rear_raw = sample.frames[at][REAR_HIP]
    width, lead, rear = _hip_geometry(sample, at)
    if variant is SwingWidthVariant.HAND_LEADING_HIP:
        if lead_raw is None:
            raise RequiredMarkerMissing(f"{LEAD_HIP} must be present at frame {at}")
        ref = (lead_raw[0], lead_raw[1])
    elif variant is SwingWidthVariant.HAND_REAR_HIP:
        if rear_raw is None:
            raise RequiredMarkerMissing(f"{REAR_HIP} must be present at frame {at}")
        ref = (rear_raw[0], rear_raw[1])
    else:
        if lead is None or rear is None:
            raise RequiredMarkerMissing(
                "body centre needs at least one trochanter at the minimum frame "
                "and one fully observed pelvis frame"
            )
        ref = (0.5 * (lead[0] + rear[0]), 0.5 * (lead[1] + rear[1]))
    if width == 0.0:
        raise ZeroHipWidth("hip markers coincide in the ground plane")
    return math.hypot(wrist[0] - ref[0], wrist[1] - ref[1]) / width


def fit_normalizer(columns: Sequence[Sequence[float]]) -> NormalizerBounds:
    """Per-dimension (min, max) over a corpus; columns[d] lists dimension d."""
    bounds: list[tuple[float, float]] = []
    for d, col in enumerate(columns):
        if len(col) == 0:
            raise EmptyDimension(f"dimension {d} has no values")
        for v in col:
            if not math.isfinite(v):
                raise NonFiniteInput(f"dimension {d} contains {v!r}")
        bounds.append((min(col), max(col)))
    return tuple(bounds)


def apply_normalizer(bounds: NormalizerBounds, raw: Sequence[float]) -> tuple[float, ...]:
    """Linear scale to [0, 1], clamped; a collapsed dimension maps to 0.5."""
    if len(raw) != len(bounds):
        raise ArityMismatch(f"expected {len(bounds)} values, got {len(raw)}")
    out = []
    for v, (lo, hi) in zip(raw, bounds):
        if hi == lo:
            out.append(0.5)
        else:
            out.append(min(1.0, max(0.0, (v - lo) / (hi - lo))))
    return tuple(out)


def raw_rule_feature(sample: SwingSample, rule_id: str, roi: RoiWindow) -> float:
    """The unnormalized feature value a rule is judged on."""
    if rule_id in (RULE_STANCE_SQS, RULE_STANCE_SOS):
        return stance_angle(sample, roi)
    if rule_id == RULE_LOW_TO_HIGH:
        return low_to_high_angle(sample, roi)
    if rule_id.startswith(RULE_WIDTH_PREFIX):
        code = rule_id[len(RULE_WIDTH_PREFIX):]
        try:
            variant = SwingWidthVariant(code)
        except ValueError:
            raise UnknownRule(f"unknown swing width variant {code!r}") from None
        return swing_width(sample, roi, variant)
    raise UnknownRule(f"unknown rule_id {rule_id!r}")


def build_feature_vector(
    sample: SwingSample,
    rule_id: str,
    roi: RoiWindow,
    bounds: NormalizerBounds,
) -> FeatureVector:
    """Assemble the classifier input for one rule on one swing."""
    if rule_id not in RULE_IDS:
        raise UnknownRule(f"unknown rule_id {rule_id!r}")
    raw = (raw_rule_feature(sample, rule_id, roi), sample.swing_type.code)
    values = apply_normalizer(bounds, raw)
    schema = (RULE_FEATURE_NAMES[rule_id], "swing_type")
    return FeatureVector(rule_id, values, schema)
