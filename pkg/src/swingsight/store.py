"""File-backed session store.

Everything the service knows lives in plain files under one root directory;
restarting a process changes nothing observable. Writes go through a
temp-file-and-rename so readers only ever see complete documents, and a
process-wide lock keeps this a single-writer store.
"""

from __future__ import annotations

import datetime as _dt
import json
import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path

from .ecf import CategoryLabel, EcfModel, load_model, save_model
from .errors import StoreConflict, UnknownId
from .features import RULE_IDS
from .motion import (
    SkeletonConfig,
    SwingSample,
    parse_swing_file,
    serialize_swing,
)
from .orchestration import (
    CueCatalogue,
    WeightsProfile,
    default_cue_catalogue,
)

_WRITE_LOCK = threading.Lock()


def _atomic_write(path: Path, text: str) -> None:
    """All-or-nothing file replacement; a failed write leaves no trace."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _safe_name(identifier: str) -> str:
    # rule ids carry ':' which some filesystems reject in names
    return identifier.replace(":", "-").replace("/", "_")


@dataclass(frozen=True)
class LabelSet:
    """Expert categories for one swing: rule_id -> label, with provenance."""

    swing_id: str
    annotator: str
    timestamp: str  # ISO 8601
    labels: dict[str, CategoryLabel]

    def __post_init__(self) -> None:
        for rule_id in self.labels:
            if rule_id not in RULE_IDS:
                raise StoreConflict(f"label for unknown rule {rule_id!r}")


class SessionStore:
    """Swings, labels, models, profiles and assessments under one root."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        for sub in ("swings", "raw", "labels", "models", "profiles", "assessments"):
            (self.root / sub).mkdir(parents=True, exist_ok=True)
        if not self.skeleton_path.exists():
            with _WRITE_LOCK:
                if not self.skeleton_path.exists():
                    _atomic_write(self.skeleton_path, SkeletonConfig().to_text())
        if not self.cues_path.exists():
            with _WRITE_LOCK:
                if not self.cues_path.exists():
                    _atomic_write(self.cues_path, default_cue_catalogue().to_csv())

    @property
    def skeleton_path(self) -> Path:
        return self.root / "skeleton.cfg"

    @property
    def cues_path(self) -> Path:
        return self.root / "cues.csv"

    def skeleton(self) -> SkeletonConfig:
        return SkeletonConfig.from_text(self.skeleton_path.read_text())

    def cue_catalogue(self) -> CueCatalogue:
        return CueCatalogue.from_csv(self.cues_path.read_text())

    # ------------------------------------------------------------- swings

    def list_swings(self) -> list[str]:
        return sorted(p.stem for p in (self.root / "swings").glob("*.swing"))

    def has_swing(self, swing_id: str) -> bool:
        return (self.root / "swings" / f"{_safe_name(swing_id)}.swing").exists()

    def put_swing(self, raw: SwingSample, repaired: SwingSample) -> None:
        """Store both the as-recorded sample and its gap-filled twin."""
        if raw.swing_id != repaired.swing_id:
            raise StoreConflict("raw and repaired samples must share an id")
        name = _safe_name(raw.swing_id)
        with _WRITE_LOCK:
            _atomic_write(self.root / "raw" / f"{name}.swing", serialize_swing(raw))
            _atomic_write(
                self.root / "swings" / f"{name}.swing", serialize_swing(repaired)
            )

    def _read_swing(self, sub: str, swing_id: str) -> SwingSample:
        path = self.root / sub / f"{_safe_name(swing_id)}.swing"
        if not path.exists():
            raise UnknownId(f"no swing {swing_id!r}")
        return parse_swing_file(path.read_text(), self.skeleton())

    def get_swing(self, swing_id: str) -> SwingSample:
        """The repaired (gap-filled) sample used for analysis."""
        return self._read_swing("swings", swing_id)

    def get_raw_swing(self, swing_id: str) -> SwingSample:
        path = self.root / "raw" / f"{_safe_name(swing_id)}.swing"
        if not path.exists():  # pre-repair copy is optional for hand-made stores
            return self.get_swing(swing_id)
        return self._read_swing("raw", swing_id)

    # ------------------------------------------------------------- labels

    def put_labels(self, labels: LabelSet) -> None:
        if not self.has_swing(labels.swing_id):
            raise UnknownId(f"no swing {labels.swing_id!r}")
        doc = {
            "swing_id": labels.swing_id,
            "annotator": labels.annotator,
            "timestamp": labels.timestamp,
            "labels": {rule: lab.value for rule, lab in labels.labels.items()},
        }
        path = self.root / "labels" / f"{_safe_name(labels.swing_id)}.json"
        with _WRITE_LOCK:
            _atomic_write(path, json.dumps(doc, indent=1) + "\n")

    def get_labels(self, swing_id: str) -> LabelSet | None:
        if not self.has_swing(swing_id):
            raise UnknownId(f"no swing {swing_id!r}")
        path = self.root / "labels" / f"{_safe_name(swing_id)}.json"
        if not path.exists():
            return None
        doc = json.loads(path.read_text())
        return LabelSet(
            swing_id=doc["swing_id"],
            annotator=doc.get("annotator", ""),
            timestamp=doc.get("timestamp", ""),
            labels={r: CategoryLabel(v) for r, v in doc["labels"].items()},
        )

    def labelled_swings(self, rule_id: str) -> list[tuple[str, CategoryLabel]]:
        """(swing_id, label) for every swing labelled under rule_id,
        ascending by swing id so training order is reproducible."""
        out = []
        for swing_id in self.list_swings():
            ls = self.get_labels(swing_id)
            if ls is not None and rule_id in ls.labels:
                out.append((swing_id, ls.labels[rule_id]))
        return out

    # ------------------------------------------------------------- models

    def put_model(self, model: EcfModel) -> None:
        path = self.root / "models" / f"{_safe_name(model.rule_id)}.ecf"
        with _WRITE_LOCK:
            _atomic_write(path, save_model(model))

    def get_model(self, rule_id: str) -> EcfModel:
        path = self.root / "models" / f"{_safe_name(rule_id)}.ecf"
        if not path.exists():
            raise UnknownId(f"no model for rule {rule_id!r}")
        return load_model(path.read_text())

    def has_model(self, rule_id: str) -> bool:
        return (self.root / "models" / f"{_safe_name(rule_id)}.ecf").exists()

    # ----------------------------------------------------------- profiles

    def list_profiles(self) -> list[str]:
        return sorted(p.stem for p in (self.root / "profiles").glob("*.profile"))

    def put_profile(self, profile: WeightsProfile) -> None:
        path = self.root / "profiles" / f"{_safe_name(profile.profile_id)}.profile"
        with _WRITE_LOCK:
            _atomic_write(path, profile.to_text())

    def get_profile(self, profile_id: str) -> WeightsProfile:
        path = self.root / "profiles" / f"{_safe_name(profile_id)}.profile"
        if not path.exists():
            raise UnknownId(f"no profile {profile_id!r}")
        return WeightsProfile.from_text(path.read_text())

    # --------------------------------------------------------- assessments

    def list_sessions(self) -> list[str]:
        return sorted(p.stem for p in (self.root / "assessments").glob("*.json"))

    def put_session(self, session_id: str, doc: dict) -> None:
        path = self.root / "assessments" / f"{_safe_name(session_id)}.json"
        with _WRITE_LOCK:
            _atomic_write(path, json.dumps(doc, indent=1) + "\n")

    def get_session(self, session_id: str) -> dict:
        path = self.root / "assessments" / f"{_safe_name(session_id)}.json"
        if not path.exists():
            raise UnknownId(f"no session {session_id!r}")
        return json.loads(path.read_text())


def now_iso() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
