"""Shared fixtures: hand-built swing scaffolding and labelled synthetic
corpora sized like a recorded session (43 swings: 22 backhands, 21
forehands)."""

from __future__ import annotations

import numpy as np
import pytest

from swingsight.ecf import CategoryLabel
from swingsight.motion import (
    DEFAULT_MARKERS,
    OcclusionSpan,
    SkeletonConfig,
    SwingSample,
    SwingType,
    SynthParams,
    synthesize_swing,
)

CORPUS_SIZE = 43
BACKHANDS = 22

# Prescribed-parameter bands per category. Bands are separated by wide gaps
# so a correctly measured swing is unambiguous.
STANCE_BANDS = {
    "square": (2.0, 8.0),
    "semi_open": (40.0, 50.0),
    "open": (82.0, 88.0),
}
# (stance_sqs label, stance_sos label) per stance family: a square stance is
# ideal for the square-stance rule and merely acceptable for the other.
STANCE_LABELS = {
    "square": (CategoryLabel.VERY_GOOD, CategoryLabel.AVERAGE),
    "semi_open": (CategoryLabel.AVERAGE, CategoryLabel.VERY_GOOD),
    "open": (CategoryLabel.BAD, CategoryLabel.AVERAGE),
}
L2H_BANDS = {
    CategoryLabel.BAD: (4.0, 8.0),
    CategoryLabel.AVERAGE: (20.0, 26.0),
    CategoryLabel.VERY_GOOD: (38.0, 45.0),
}
WIDTH_BANDS = {
    CategoryLabel.VERY_GOOD: (0.9, 1.2),
    CategoryLabel.AVERAGE: (1.5, 1.8),
    CategoryLabel.BAD: (2.1, 2.4),
}

DURATION = 75
MIN_FRAME = DURATION // 2  # the generator parks the wrist minimum mid-swing
# PSGT occlusion window that swallows the whole region of interest and is too
# long for gap repair.
ROI_SPAN = (MIN_FRAME - 7, MIN_FRAME + 8)

WIDTH_RULES = (
    "swing_width:leading_hip",
    "swing_width:body_centre",
    "swing_width:rear_hip",
)


def make_corpus(
    seed: int,
    n: int = CORPUS_SIZE,
    occluded: int = 0,
    noise_sigma: float = 1.0,
) -> list[tuple[SwingSample, dict[str, CategoryLabel], SynthParams]]:
    """n labelled swings; `occluded` of them lose PSGT across the ROI."""
    rng = np.random.default_rng(seed)
    hidden = set(rng.choice(n, size=occluded, replace=False)) if occluded else set()
    rows = []
    for i in range(n):
        stance_kind = rng.choice(list(STANCE_BANDS))
        l2h_label = rng.choice(list(L2H_BANDS))
        width_label = rng.choice(list(WIDTH_BANDS))
        schedule = ()
        if i in hidden:
            schedule = (OcclusionSpan("PSGT", *ROI_SPAN),)
        params = SynthParams(
            swing_type=SwingType.BACKHAND if i < BACKHANDS else SwingType.FOREHAND,
            stance_angle_deg=float(rng.uniform(*STANCE_BANDS[stance_kind])),
            low_to_high_deg=float(rng.uniform(*L2H_BANDS[l2h_label])),
            width_ratio=float(rng.uniform(*WIDTH_BANDS[width_label])),
            hip_width_mm=float(rng.uniform(320.0, 360.0)),
            noise_sigma_mm=noise_sigma,
            occlusion_schedule=schedule,
            duration_frames=DURATION,
            seed=seed * 1000 + i,
        )
        sqs, sos = STANCE_LABELS[stance_kind]
        labels = {
            "stance_sqs": sqs,
            "stance_sos": sos,
            "low_to_high": l2h_label,
        }
        for rule in WIDTH_RULES:
            labels[rule] = width_label
        rows.append((synthesize_swing(params), labels, params))
    return rows


_BASE_POSITIONS = {
    "HEAD": (0.0, 0.0, 1680.0),
    "C7": (0.0, 0.0, 1480.0),
    "STRN": (0.0, 40.0, 1320.0),
    "PSHO": (230.0, 0.0, 1400.0),
    "SSHO": (-230.0, 0.0, 1400.0),
    "PSEL": (280.0, 20.0, 1150.0),
    "SSEL": (-300.0, 40.0, 1150.0),
    "PSFA": (300.0, 30.0, 1000.0),
    "SSHD": (-310.0, 80.0, 930.0),
    "PSKN": (190.0, 10.0, 480.0),
    "SSKN": (-190.0, -10.0, 480.0),
    "PSAN": (230.0, -140.0, 90.0),
    "SSAN": (-230.0, -140.0, 90.0),
    "PSHL": (210.0, -240.0, 33.0),
    "SSHL": (-210.0, -240.0, 33.0),
    "RACB": (520.0, 60.0, 900.0),
    "RACT": (520.0, 380.0, 1000.0),
}


def hand_swing(
    wrist: list[tuple[float, float, float]],
    feet: tuple[tuple[float, float], tuple[float, float]] = ((210.0, 0.0), (-210.0, 0.0)),
    hips: tuple[tuple[float, float], tuple[float, float]] = ((170.0, 0.0), (-170.0, 0.0)),
    swing_id: str = "hand-1",
    swing_type: SwingType = SwingType.FOREHAND,
    rate: float = 50.0,
    missing: set[tuple[str, int]] = frozenset(),
) -> SwingSample:
    """Minimal constructed swing: wrist follows the given track, the feet
    and hips sit at the given ground-plane spots, everything else parks."""
    frames = []
    for i, hd in enumerate(wrist):
        frame: dict[str, tuple[float, float, float] | None] = dict(_BASE_POSITIONS)
        frame["PSHD"] = hd
        frame["PSTOE"] = (feet[0][0], feet[0][1], 28.0)
        frame["SSTOE"] = (feet[1][0], feet[1][1], 28.0)
        frame["PSGT"] = (hips[0][0], hips[0][1], 940.0)
        frame["SSGT"] = (hips[1][0], hips[1][1], 940.0)
        for name in DEFAULT_MARKERS:
            if (name, i) in missing:
                frame[name] = None
        frames.append({name: frame[name] for name in DEFAULT_MARKERS})
    return SwingSample(swing_id, swing_type, rate, DEFAULT_MARKERS, tuple(frames))


def dip_track(
    n: int = 40,
    min_frame: int = 20,
    speed: float = 20.0,
    rise: float = 12.0,
    accel_from: int | None = None,
) -> list[tuple[float, float, float]]:
    """Wrist track with one V-shaped height minimum and late peak speed."""
    accel_from = accel_from if accel_from is not None else n - 8
    pts = []
    for t in range(n):
        y = speed * (t - min_frame)
        if t > accel_from:
            q = t - accel_from
            y += 4.0 * q * q
        z = 800.0 + rise * abs(t - min_frame)
        pts.append((500.0, y, z))
    return pts


@pytest.fixture
def skeleton() -> SkeletonConfig:
    return SkeletonConfig()
