"""Marker trajectory data: swing samples, file I/O, validation, gap repair,
and a parametric swing generator.

Coordinates are millimetres in a lab frame: +Y points along the target line,
+Z is up, +X completes a right-handed frame (the playing side for the
generated swings). Missing markers are represented as None per frame.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptyBody,
    InfeasibleParams,
    MalformedHeader,
    NonFiniteCoordinate,
    RowArityMismatch,
    UnknownMarkerColumn,
)

Point3 = tuple[float, float, float]

# Default marker vocabulary. PS/SS prefixes mean playing side / support side.
# The canonical lab set is configuration: deployments may load their own list,
# but the five starred markers must always be present by name.
DEFAULT_MARKERS: tuple[str, ...] = (
    "HEAD", "C7", "STRN",
    "PSHO", "SSHO", "PSEL", "SSEL", "PSFA",
    "PSHD", "SSHD",
    "PSGT", "SSGT",
    "PSKN", "SSKN", "PSAN", "SSAN", "PSHL", "SSHL",
    "PSTOE", "SSTOE",
    "RACB", "RACT",
)

REQUIRED_MARKERS: frozenset[str] = frozenset(
    {"PSHD", "PSGT", "SSGT", "PSTOE", "SSTOE"}
)

# Interior gaps up to this many frames are repaired by linear interpolation.
DEFAULT_MAX_GAP = 5

_AXES = ("x", "y", "z")

_HEADER_RE = re.compile(
    r"^#swing id=(?P<id>\S+) type=(?P<type>forehand|backhand) rate=(?P<rate>\S+)$"
)


class SwingType(enum.Enum):
    FOREHAND = "forehand"
    BACKHAND = "backhand"

    @property
    def code(self) -> float:
        """Numeric code used as a classifier input dimension."""
        return 0.0 if self is SwingType.FOREHAND else 1.0


@dataclass(frozen=True)
class SkeletonConfig:
    """Ordered marker vocabulary plus the subset features cannot do without."""

    marker_names: tuple[str, ...] = DEFAULT_MARKERS
    required: frozenset[str] = REQUIRED_MARKERS

    def __post_init__(self) -> None:
        if len(self.marker_names) != len(set(self.marker_names)):
            raise ValueError("duplicate marker names")
        if not self.required <= set(self.marker_names):
            missing = sorted(self.required - set(self.marker_names))
            raise ValueError(f"required markers absent from vocabulary: {missing}")

    @classmethod
    def from_text(cls, text: str) -> "SkeletonConfig":
        """Parse a config file: one marker per line, required names end with *."""
        names: list[str] = []
        required: set[str] = set()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.endswith("*"):
                name = line[:-1].strip()
                required.add(name)
            else:
                name = line
            names.append(name)
        return cls(tuple(names), frozenset(required))

    def to_text(self) -> str:
        lines = [
            name + ("*" if name in self.required else "")
            for name in self.marker_names
        ]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SwingSample:
    """One recorded swing: per-frame marker positions, possibly with holes.

    frames[i][name] is a Point3 in millimetres or None when the marker was
    not seen at frame i. marker_names fixes the column order for
    serialization; every frame keys exactly that set.
    """

    swing_id: str
    swing_type: SwingType
    frame_rate_hz: float
    marker_names: tuple[str, ...]
    frames: tuple[dict[str, Point3 | None], ...]

    def __post_init__(self) -> None:
        if not self.swing_id or any(c.isspace() for c in self.swing_id):
            raise ValueError("swing_id must be a non-empty token without whitespace")
        if not (self.frame_rate_hz > 0):
            raise ValueError("frame_rate_hz must be positive")
        if not self.frames:
            raise ValueError("frames must be non-empty")
        expected = set(self.marker_names)
        for i, frame in enumerate(self.frames):
            if set(frame) != expected:
                raise ValueError(f"frame {i} does not key exactly marker_names")
            for name, p in frame.items():
                if p is None:
                    continue
                if len(p) != 3 or not all(math.isfinite(v) for v in p):
                    raise ValueError(f"frame {i} marker {name}: non-finite coordinate")

    def __len__(self) -> int:
        return len(self.frames)

    def present(self, name: str, i: int) -> bool:
        return self.frames[i][name] is not None

    def track(self, name: str) -> np.ndarray:
        """(n_frames, 3) float array for one marker, NaN where missing."""
        out = np.full((len(self.frames), 3), np.nan)
        for i, frame in enumerate(self.frames):
            p = frame[name]
            if p is not None:
                out[i] = p
        return out


@dataclass(frozen=True)
class GapRun:
    """Consecutive missing frames for one marker."""

    marker: str
    start_frame: int
    length: int  # >= 1

    def __post_init__(self) -> None:
        if self.length < 1 or self.start_frame < 0:
            raise ValueError("gap runs have start >= 0 and length >= 1")


@dataclass(frozen=True)
class ValidationReport:
    """Total description of holes in a sample. Produced, never raised."""

    swing_id: str
    gap_runs: tuple[GapRun, ...]
    # Required-marker runs longer than max_gap: repair will not close these.
    required_violations: tuple[GapRun, ...]
    range_warnings: tuple[str, ...]

    @property
    def clean(self) -> bool:
        return not self.gap_runs and not self.range_warnings


def _gap_runs_for(sample: SwingSample, name: str) -> list[GapRun]:
    runs: list[GapRun] = []
    start: int | None = None
    for i in range(len(sample.frames)):
        if sample.frames[i][name] is None:
            if start is None:
                start = i
        elif start is not None:
            runs.append(GapRun(name, start, i - start))
            start = None
    if start is not None:
        runs.append(GapRun(name, start, len(sample.frames) - start))
    return runs


# Coordinates beyond this magnitude are flagged as implausible for a lab volume.
_RANGE_LIMIT_MM = 50_000.0


def validate(
    sample: SwingSample,
    cfg: SkeletonConfig,
    max_gap: int = DEFAULT_MAX_GAP,
) -> ValidationReport:
    """Report every gap run and range anomaly; never raises on bad data."""
    runs: list[GapRun] = []
    for name in sample.marker_names:
        runs.extend(_gap_runs_for(sample, name))
    runs.sort(key=lambda r: (r.start_frame, r.marker))
    violations = tuple(
        r for r in runs if r.marker in cfg.required and r.length > max_gap
    )
    warnings: list[str] = []
    for name in sample.marker_names:
        track = sample.track(name)
        present = ~np.isnan(track[:, 0])
        extreme = np.max(np.abs(np.nan_to_num(track)), axis=1) > _RANGE_LIMIT_MM
        for i in np.nonzero(present & extreme)[0]:
            warnings.append(f"{name}@{int(i)}: coordinate beyond {_RANGE_LIMIT_MM:g} mm")
    return ValidationReport(sample.swing_id, tuple(runs), violations, tuple(warnings))


def gap_fill(sample: SwingSample, max_gap: int = DEFAULT_MAX_GAP) -> SwingSample:
    """Linearly interpolate interior gap runs of length <= max_gap.

    Leading and trailing runs have no anchor on one side and are left alone,
    as are runs longer than max_gap. Present samples are copied bit for bit,
    so the operation is idempotent.
    """
    if max_gap < 1:
        raise ValueError("max_gap must be >= 1")
    frames = [dict(frame) for frame in sample.frames]
    for name in sample.marker_names:
        for run in _gap_runs_for(sample, name):
            a = run.start_frame - 1
            b = run.start_frame + run.length
            if a < 0 or b >= len(frames) or run.length > max_gap:
                continue
            pa = sample.frames[a][name]
            pb = sample.frames[b][name]
            assert pa is not None and pb is not None
            for i in range(run.start_frame, b):
                t = (i - a) / (b - a)
                frames[i][name] = (
                    pa[0] + t * (pb[0] - pa[0]),
                    pa[1] + t * (pb[1] - pa[1]),
                    pa[2] + t * (pb[2] - pa[2]),
                )
    return SwingSample(
        sample.swing_id,
        sample.swing_type,
        sample.frame_rate_hz,
        sample.marker_names,
        tuple(frames),
    )


# ------------------------------------------------------------------ file I/O

def _fmt(v: float) -> str:
    return repr(float(v))


def serialize_swing(sample: SwingSample) -> str:
    """Canonical text form; parse(serialize(s)) reproduces s exactly."""
    lines = [
        f"#swing id={sample.swing_id} type={sample.swing_type.value} "
        f"rate={_fmt(sample.frame_rate_hz)}"
    ]
    cols = ["frame"]
    for name in sample.marker_names:
        cols.extend(f"{name}_{ax}" for ax in _AXES)
    lines.append(",".join(cols))
    for i, frame in enumerate(sample.frames):
        cells = [str(i)]
        for name in sample.marker_names:
            p = frame[name]
            if p is None:
                cells.extend(("", "", ""))
            else:
                cells.extend(_fmt(v) for v in p)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _parse_cell(cell: str, where: str) -> float:
    try:
        v = float(cell)
    except ValueError:
        raise NonFiniteCoordinate(f"{where}: {cell!r} is not a number") from None
    if not math.isfinite(v):
        raise NonFiniteCoordinate(f"{where}: {cell!r} is not finite")
    return v


def parse_swing_file(text: str, cfg: SkeletonConfig) -> SwingSample:
    """Parse the canonical swing format against a skeleton config.

    The frame-index cell is validated as an integer but rows are numbered by
    position, so serialization always renumbers from zero.
    """
    if hasattr(text, "read"):  # accept open file objects too
        text = text.read()
    lines = text.splitlines()
    if not lines:
        raise MalformedHeader("empty input")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise MalformedHeader(f"bad header line: {lines[0]!r}")
    rate = _parse_cell(m.group("rate"), "header rate")
    if rate <= 0:
        raise MalformedHeader(f"rate must be positive, got {rate!r}")
    if len(lines) < 2:
        raise MalformedHeader("missing column header line")
    cols = lines[1].split(",")
    if not cols or cols[0] != "frame":
        raise MalformedHeader("column header must start with 'frame'")
    expected = [f"{name}_{ax}" for name in cfg.marker_names for ax in _AXES]
    got = cols[1:]
    for i, (want, have) in enumerate(zip(expected, got)):
        if want != have:
            raise UnknownMarkerColumn(f"column {i + 1}: expected {want!r}, got {have!r}")
    if len(got) != len(expected):
        raise UnknownMarkerColumn(
            f"expected {len(expected)} marker columns, got {len(got)}"
        )

    arity = 1 + 3 * len(cfg.marker_names)
    frames: list[dict[str, Point3 | None]] = []
    for lineno, line in enumerate(lines[2:], start=3):
        if line == "":
            continue  # stray trailing newline
        cells = line.split(",")
        if len(cells) != arity:
            raise RowArityMismatch(
                f"line {lineno}: expected {arity} cells, got {len(cells)}"
            )
        try:
            int(cells[0])
        except ValueError:
            raise NonFiniteCoordinate(
                f"line {lineno}: frame index {cells[0]!r} is not an integer"
            ) from None
        frame: dict[str, Point3 | None] = {}
        for j, name in enumerate(cfg.marker_names):
            triple = cells[1 + 3 * j : 4 + 3 * j]
            if all(c == "" for c in triple):
                frame[name] = None
            elif any(c == "" for c in triple):
                raise NonFiniteCoordinate(
                    f"line {lineno}: partial coordinate triple for {name}"
                )
            else:
                frame[name] = (
                    _parse_cell(triple[0], f"line {lineno} {name}_x"),
                    _parse_cell(triple[1], f"line {lineno} {name}_y"),
                    _parse_cell(triple[2], f"line {lineno} {name}_z"),
                )
        frames.append(frame)
    if not frames:
        raise EmptyBody("no data rows")
    return SwingSample(
        m.group("id"),
        SwingType(m.group("type")),
        rate,
        cfg.marker_names,
        tuple(frames),
    )


# ----------------------------------------------------------------- generator

@dataclass(frozen=True)
class OcclusionSpan:
    """Half-open frame range [start, end) during which a marker is dropped."""

    marker: str
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end <= self.start:
            raise ValueError("occlusion span must satisfy 0 <= start < end")


@dataclass(frozen=True)
class SynthParams:
    """Ground-truth knobs for one generated swing.

    The noise-free output embeds the three coaching features analytically:
    shoe-tip line at stance_angle_deg to the target line, a unique interior
    wrist-height minimum whose rise over the k-frame window measures
    low_to_high_deg, and a wrist-to-body-centre transverse distance of
    width_ratio * hip_width_mm at the minimum frame.
    """

    swing_type: SwingType = SwingType.FOREHAND
    stance_angle_deg: float = 10.0
    low_to_high_deg: float = 25.0
    width_ratio: float = 1.4
    hip_width_mm: float = 340.0
    noise_sigma_mm: float = 0.0
    occlusion_schedule: tuple[OcclusionSpan, ...] = ()
    duration_frames: int = 75
    seed: int = 0
    frame_rate_hz: float = 50.0

    def __post_init__(self) -> None:
        if self.hip_width_mm <= 0:
            raise ValueError("hip_width_mm must be positive")
        if self.noise_sigma_mm < 0:
            raise ValueError("noise_sigma_mm must be >= 0")
        if self.width_ratio < 0:
            raise ValueError("width_ratio must be >= 0")
        for span in self.occlusion_schedule:
            if span.end > self.duration_frames:
                raise ValueError("occlusion span exceeds duration")
            if span.marker not in DEFAULT_MARKERS:
                raise ValueError(f"occlusion names unknown marker {span.marker!r}")


# Rise window shared with the feature extractor: the low-to-high angle is
# measured over this many frames after the wrist-height minimum.
RISE_WINDOW_FRAMES = 5

# Transverse wrist speed through the contact zone, mm per frame. 40 mm at
# 50 Hz is 2 m/s, a plausible pre-impact hand speed.
_WRIST_SPEED = 40.0
_FOLLOW_ACCEL = 6.0          # mm/frame^2 after the rise window
_WRIST_Z_MIN = 750.0         # lowest wrist height, mm
_FOOT_SPAN = 420.0           # shoe tip separation, mm
_FOLLOW_LIFT_EXTRA = 4.0     # extra climb rate past the rise window, mm/frame


def synthesize_swing(p: SynthParams) -> SwingSample:
    """Deterministic parametric swing; same params give identical bytes.

    The wrist descends into a V-shaped height minimum at mid-swing, then
    rises at exactly the prescribed low-to-high slope for the k-frame window
    while travelling along +Y at constant speed; transverse acceleration
    afterwards puts the peak hand speed late in the swing, so the minimum is
    the last one before it. Occlusion is applied after noise.
    """
    n = p.duration_frames
    k = RISE_WINDOW_FRAMES
    m = n // 2
    if m - k < 1 or m + k > n - 2:
        raise InfeasibleParams(
            f"duration {n} cannot embed a minimum with a {k}-frame rise window"
        )
    if not 0.0 <= p.stance_angle_deg <= 90.0:
        raise InfeasibleParams("stance_angle_deg must lie in [0, 90]")
    if not 0.0 < p.low_to_high_deg < 90.0:
        raise InfeasibleParams(
            "low_to_high_deg must lie in (0, 90): the wrist must climb out of "
            "the minimum for it to be unique"
        )

    theta = math.radians(p.stance_angle_deg)
    alpha = math.radians(p.low_to_high_deg)
    rise_per_frame = math.tan(alpha) * _WRIST_SPEED
    h = p.hip_width_mm
    w_x = p.width_ratio * h  # wrist lateral offset from the body centre

    def wrist(t: int) -> Point3:
        if t <= m + k:
            y = _WRIST_SPEED * (t - m)
        else:
            q = t - m - k
            y = _WRIST_SPEED * (t - m) + _FOLLOW_ACCEL * q * q
        if t <= m:
            z = _WRIST_Z_MIN + rise_per_frame * (m - t)
        elif t <= m + k:
            z = _WRIST_Z_MIN + rise_per_frame * (t - m)
        else:
            z = (
                _WRIST_Z_MIN
                + rise_per_frame * k
                + (rise_per_frame + _FOLLOW_LIFT_EXTRA) * (t - m - k)
            )
        return (w_x, y, z)

    ux, uy = math.sin(theta), math.cos(theta)
    pstoe = (0.5 * _FOOT_SPAN * ux, 0.5 * _FOOT_SPAN * uy, 28.0)
    sstoe = (-0.5 * _FOOT_SPAN * ux, -0.5 * _FOOT_SPAN * uy, 28.0)
    psgt = (0.5 * h, 0.0, 940.0)
    ssgt = (-0.5 * h, 0.0, 940.0)

    static: dict[str, Point3] = {
        "HEAD": (0.0, 0.0, 1680.0),
        "C7": (0.0, 0.0, 1480.0),
        "STRN": (0.0, 40.0, 1320.0),
        "PSHO": (230.0, 0.0, 1400.0),
        "SSHO": (-230.0, 0.0, 1400.0),
        "SSEL": (-300.0, 40.0, 1150.0),
        "SSHD": (-310.0, 80.0, 930.0),
        "PSGT": psgt,
        "SSGT": ssgt,
        "PSKN": (0.5 * h + 20.0, 10.0, 480.0),
        "SSKN": (-0.5 * h - 20.0, -10.0, 480.0),
        "PSAN": (pstoe[0] + 20.0, pstoe[1] - 140.0, 90.0),
        "SSAN": (sstoe[0] - 20.0, sstoe[1] - 140.0, 90.0),
        "PSHL": (pstoe[0], pstoe[1] - 240.0, 33.0),
        "SSHL": (sstoe[0], sstoe[1] - 240.0, 33.0),
        "PSTOE": pstoe,
        "SSTOE": sstoe,
    }
    sho = static["PSHO"]

    frames: list[dict[str, Point3 | None]] = []
    for t in range(n):
        hd = wrist(t)
        frame: dict[str, Point3 | None] = dict(static)
        frame["PSHD"] = hd
        frame["PSEL"] = (
            0.5 * (sho[0] + hd[0]),
            0.5 * (sho[1] + hd[1]),
            0.5 * (sho[2] + hd[2]) + 40.0,
        )
        frame["PSFA"] = (
            sho[0] + 0.75 * (hd[0] - sho[0]),
            sho[1] + 0.75 * (hd[1] - sho[1]),
            sho[2] + 0.75 * (hd[2] - sho[2]) + 20.0,
        )
        frame["RACB"] = (hd[0], hd[1] + 60.0, hd[2] + 20.0)
        frame["RACT"] = (hd[0], hd[1] + 380.0, hd[2] + 120.0)
        frames.append({name: frame[name] for name in DEFAULT_MARKERS})

    if p.noise_sigma_mm > 0:
        rng = np.random.default_rng(p.seed)
        for frame in frames:
            for name in DEFAULT_MARKERS:
                q = frame[name]
                e = rng.normal(0.0, p.noise_sigma_mm, 3)
                frame[name] = (q[0] + e[0], q[1] + e[1], q[2] + e[2])

    for span in p.occlusion_schedule:
        for t in range(span.start, span.end):
            frames[t][span.marker] = None

    return SwingSample(
        swing_id=f"synth-{p.seed:08d}",
        swing_type=p.swing_type,
        frame_rate_hz=p.frame_rate_hz,
        marker_names=DEFAULT_MARKERS,
        frames=tuple(frames),
    )
