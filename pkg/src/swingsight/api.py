"""JSON HTTP facade over a session store.

One process owns the store directory; mutations are serialized behind the
store's writer lock and land atomically, so readers never observe a partial
document and a restart changes no observable state.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import ecf, evaluation, orchestration, pipeline
from .errors import (
    AllWeightsZero,
    EmptyData,
    EmptyModel,
    MissingModel,
    StoreConflict,
    SwingsightError,
    TooFewExamples,
    UnknownId,
    UnknownRule,
)
from .features import RULE_IDS, find_roi
from .store import LabelSet, SessionStore, now_iso


def _error_body(exc: SwingsightError) -> dict:
    return {"error": exc.name, "message": str(exc)}


def _http(status: int, exc: SwingsightError) -> HTTPException:
    return HTTPException(status_code=status, detail=_error_body(exc))


def create_app(store: SessionStore, console_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="swingsight", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/swings")
    def list_swings() -> list[dict]:
        out = []
        for swing_id in store.list_swings():
            s = store.get_swing(swing_id)
            out.append(
                {
                    "id": s.swing_id,
                    "type": s.swing_type.value,
                    "frames": len(s),
                    "rate": s.frame_rate_hz,
                }
            )
        return out

    @app.get("/swings/{swing_id}/frames")
    def swing_frames(swing_id: str) -> dict:
        try:
            repaired = store.get_swing(swing_id)
            raw = store.get_raw_swing(swing_id)
        except UnknownId as e:
            raise _http(404, e)

        def frames_of(sample):
            return [
                [list(frame[name]) if frame[name] is not None else None
                 for name in sample.marker_names]
                for frame in sample.frames
            ]

        try:
            roi = find_roi(repaired)
            roi_doc = {
                "start": roi.start_frame,
                "min": roi.min_frame,
                "end": roi.end_frame,
            }
        except SwingsightError:
            roi_doc = None
        return {
            "swing_id": repaired.swing_id,
            "type": repaired.swing_type.value,
            "rate": repaired.frame_rate_hz,
            "markers": list(repaired.marker_names),
            "raw": frames_of(raw),
            "repaired": frames_of(repaired),
            "roi": roi_doc,
        }

    @app.get("/swings/{swing_id}/labels")
    def get_labels(swing_id: str) -> dict:
        try:
            ls = store.get_labels(swing_id)
        except UnknownId as e:
            raise _http(404, e)
        if ls is None:
            return {"swing_id": swing_id, "annotator": "", "timestamp": "", "labels": {}}
        return {
            "swing_id": ls.swing_id,
            "annotator": ls.annotator,
            "timestamp": ls.timestamp,
            "labels": {rule: lab.value for rule, lab in ls.labels.items()},
        }

    @app.put("/swings/{swing_id}/labels")
    def put_labels(swing_id: str, body: dict = Body(...)) -> dict:
        if not isinstance(body.get("labels"), dict):
            raise HTTPException(400, {"error": "MalformedBody",
                                      "message": "body must carry a labels object"})
        try:
            labels = {
                rule: ecf.CategoryLabel(value)
                for rule, value in body["labels"].items()
            }
        except ValueError as e:
            raise HTTPException(400, {"error": "MalformedBody", "message": str(e)})
        try:
            ls = LabelSet(
                swing_id=swing_id,
                annotator=str(body.get("annotator", "")),
                timestamp=str(body.get("timestamp", "")) or now_iso(),
                labels=labels,
            )
            store.put_labels(ls)
        except StoreConflict as e:
            raise _http(409, e)
        except UnknownId as e:
            raise _http(404, e)
        return get_labels(swing_id)

    @app.get("/profiles")
    def list_profiles() -> list[str]:
        return store.list_profiles()

    @app.get("/profiles/{profile_id}")
    def get_profile(profile_id: str) -> dict:
        try:
            p = store.get_profile(profile_id)
        except UnknownId as e:
            raise _http(404, e)
        return {
            "profile_id": p.profile_id,
            "skill_level": p.skill_level,
            "scenario": p.scenario,
            "weights": p.weights,
        }

    @app.put("/profiles/{profile_id}")
    def put_profile(profile_id: str, body: dict = Body(...)) -> dict:
        try:
            profile = orchestration.WeightsProfile(
                profile_id=profile_id,
                skill_level=str(body.get("skill_level", "")),
                scenario=str(body.get("scenario", "")),
                weights={str(k): float(v) for k, v in body.get("weights", {}).items()},
            )
        except (ValueError, TypeError) as e:
            raise HTTPException(400, {"error": "MalformedBody", "message": str(e)})
        store.put_profile(profile)
        return get_profile(profile_id)

    @app.post("/assess")
    def assess(body: dict = Body(...)) -> dict:
        swing_id = body.get("swing_id")
        profile_id = body.get("profile_id")
        if not isinstance(swing_id, str) or not isinstance(profile_id, str):
            raise HTTPException(400, {"error": "MalformedBody",
                                      "message": "swing_id and profile_id are required"})
        top_k = body.get("top_k", orchestration.DEFAULT_TOP_K)
        if not isinstance(top_k, int) or top_k < 1:
            raise HTTPException(400, {"error": "MalformedBody",
                                      "message": "top_k must be a positive integer"})
        try:
            sample = store.get_swing(swing_id)
            profile = store.get_profile(profile_id)
        except UnknownId as e:
            raise _http(404, e)
        models = {
            rule_id: store.get_model(rule_id)
            for rule_id, w in profile.weights.items()
            if w > 0.0 and store.has_model(rule_id)
        }
        try:
            assessment = orchestration.assess_swing(
                sample, models, profile, top_k, store.cue_catalogue()
            )
        except (MissingModel, EmptyModel, AllWeightsZero) as e:
            raise _http(422, e)
        return orchestration.assessment_to_dict(assessment)

    @app.post("/train")
    def train(body: dict = Body(...)) -> dict:
        rule_id = body.get("rule_id")
        if not isinstance(rule_id, str) or rule_id not in RULE_IDS:
            raise HTTPException(400, {"error": "UnknownRule",
                                      "message": f"rule_id must be one of {sorted(RULE_IDS)}"})
        params_doc = body.get("params") or {}
        try:
            defaults = ecf.default_params_for_rule(rule_id)
            params = ecf.EcfParams(
                r_max=float(params_doc.get("r_max", defaults.r_max)),
                r_min=float(params_doc.get("r_min", defaults.r_min)),
                epochs=int(params_doc.get("epochs", defaults.epochs)),
                m_of_n=int(params_doc.get("m_of_n", defaults.m_of_n)),
                membership_functions=int(
                    params_doc.get("membership_functions", defaults.membership_functions)
                ),
            )
        except (ValueError, TypeError) as e:
            raise HTTPException(400, {"error": "MalformedBody", "message": str(e)})
        try:
            model, ds = pipeline.train_rule(store, rule_id, params)
        except EmptyData as e:
            raise _http(422, e)
        return {
            "rule_id": rule_id,
            "nodes": len(model.nodes),
            "trained_on": len(ds.data),
            "failures": [list(f) for f in ds.failures],
            "epochs": params.epochs,
        }

    @app.get("/loocv/{rule_id:path}")
    def loocv(rule_id: str) -> dict:
        if rule_id not in RULE_IDS:
            raise HTTPException(404, {"error": "UnknownRule",
                                      "message": f"no rule {rule_id!r}"})
        try:
            ev = pipeline.loocv_rule(store, rule_id)
        except TooFewExamples as e:
            raise _http(422, e)
        if ev.result is None:
            raise HTTPException(422, {"error": "TooFewExamples",
                                      "message": "fewer than two measurable labelled swings"})
        return {
            "rule_id": rule_id,
            "oa_percent": ev.oa_percent,
            "oa_display": evaluation.display_percent(ev.oa_percent),
            "correct": ev.correct,
            "total": ev.total,
            "epochs": ev.epochs,
            "failures": [list(f) for f in ev.failures],
            "per_fold": [
                {"swing_id": sid, "truth": t.value, "predicted": p.value}
                for sid, t, p in ev.result.per_fold
            ],
        }

    @app.get("/sessions/{session_id}/report")
    def report(session_id: str) -> dict:
        try:
            rep = pipeline.session_report(store, session_id)
        except UnknownId as e:
            raise _http(404, e)
        return orchestration.report_to_dict(rep)

    if console_dir is not None and Path(console_dir).is_dir():
        app.mount("/console", StaticFiles(directory=console_dir, html=True),
                  name="console")

    return app
