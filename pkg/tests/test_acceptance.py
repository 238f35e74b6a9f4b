"""Release acceptance checks.

One test per shipping requirement; each prints a single
``ACCEPTANCE <name>: PASS|FAIL (seconds)`` line on the real stdout so the
suite doubles as a release checklist. A failed assertion or a blown time
budget both count as FAIL.
"""

from __future__ import annotations

import contextlib
import io
import math
import re
import time

import numpy as np
import pytest
from fastapi.testclient import TestClient

from swingsight import pipeline
from swingsight.api import create_app
from swingsight.cli import main
from swingsight.ecf import (
    CategoryLabel,
    EcfModel,
    EcfParams,
    classify,
    default_params_for_rule,
    learn_one,
    load_model,
    save_model,
    train,
    unit_bounds,
)
from swingsight.evaluation import display_percent, loocv, overall_accuracy
from swingsight.features import (
    RULE_IDS,
    FeatureVector,
    SwingWidthVariant,
    build_feature_vector,
    find_roi,
    fit_normalizer,
    low_to_high_angle,
    raw_rule_feature,
    stance_angle,
    swing_width,
)
from swingsight.motion import (
    OcclusionSpan,
    SkeletonConfig,
    SwingType,
    SynthParams,
    gap_fill,
    parse_swing_file,
    serialize_swing,
    synthesize_swing,
)
from swingsight.orchestration import (
    CATEGORY_COLOUR,
    Colour,
    RuleOutcome,
    WeightsProfile,
    assess_swing,
    cue_list,
    weighted_overall,
)
from swingsight.store import LabelSet, SessionStore, now_iso

from conftest import make_corpus

BAD = CategoryLabel.BAD
AVG = CategoryLabel.AVERAGE
VG = CategoryLabel.VERY_GOOD
LABELS = (BAD, AVG, VG)

SCHEMA = ("stance_deg", "swing_type")

WIDTH_LEADING = "swing_width:leading_hip"
WIDTH_CENTRE = "swing_width:body_centre"
WIDTH_REAR = "swing_width:rear_hip"


_CAPMAN = None


@pytest.fixture(autouse=True)
def _expose_capture_manager(request):
    global _CAPMAN
    _CAPMAN = request.config.pluginmanager.getplugin("capturemanager")
    yield


def _verdict_line(text: str) -> None:
    """Print on the real terminal even while pytest captures output."""
    if _CAPMAN is not None:
        with _CAPMAN.global_and_fixture_disabled():
            print(text, flush=True)
    else:
        print(text, flush=True)


@contextlib.contextmanager
def criterion(name: str, budget_s: float):
    """Time a block and print one PASS/FAIL line for it."""
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        dt = time.perf_counter() - start
        _verdict_line(f"ACCEPTANCE {name}: FAIL ({dt:.1f}s)")
        raise
    dt = time.perf_counter() - start
    verdict = "PASS" if dt <= budget_s else "FAIL"
    _verdict_line(f"ACCEPTANCE {name}: {verdict} ({dt:.1f}s)")
    assert dt <= budget_s, f"{name} took {dt:.1f}s, budget {budget_s:.0f}s"


def fv(*values: float) -> FeatureVector:
    return FeatureVector("stance_sqs", tuple(float(v) for v in values), SCHEMA)


def test_accuracy_arithmetic_is_exact():
    with criterion("accuracy-exactness", budget_s=1.0):
        truth = [VG] * 43
        oa = overall_accuracy([VG] * 39 + [BAD] * 4, truth)
        assert oa == 100.0 * 39 / 43
        assert display_percent(oa) == 91

        oa = overall_accuracy([VG] * 35 + [BAD] * 8, truth)
        assert oa == 100.0 * 35 / 43
        assert display_percent(oa) == 81

        assert overall_accuracy(truth, truth) == 100.0
        assert overall_accuracy([BAD] * 43, truth) == 0.0
        # half rounds away from zero, never to even
        assert display_percent(90.5) == 91
        assert display_percent(90.4999) == 90
        assert display_percent(100.0) == 100


def brute_force_loocv(data, params):
    """Independent fold loop: slice out example i, train on the rest in
    order, classify the held-out vector."""
    per_fold = []
    for i, (swing_id, vec, truth) in enumerate(data):
        rest = [(f, lab) for _, f, lab in data[:i] + data[i + 1 :]]
        model = train(rest, params)
        predicted, _, _ = classify(model, vec.values)
        per_fold.append((swing_id, truth, predicted))
    correct = sum(1 for _, t, p in per_fold if t is p)
    return tuple(per_fold), correct


def test_loocv_agrees_with_independent_fold_loop():
    with criterion("loocv-oracle", budget_s=30.0):
        params = EcfParams()
        for c in range(20):
            rng = np.random.default_rng(9000 + c)
            data = [
                (f"s{i:02d}", fv(*rng.random(2)), LABELS[int(rng.integers(3))])
                for i in range(43)
            ]
            got = loocv(data, params)
            per_fold, correct = brute_force_loocv(data, params)
            assert got.per_fold == per_fold
            assert got.correct == correct
            assert got.total == 43
            assert got.oa_percent == 100.0 * correct / 43


def scan_nodes(model: EcfModel, x: tuple[float, ...]):
    """Reference recall: full node scan with the documented tie-breaks."""
    covered = []
    for node in model.nodes:
        d = math.dist(x, node.centre)
        if d <= node.radius:
            covered.append((-(1.0 - d / node.radius), d, node.node_id))
    if covered:
        _, d, node_id = min(covered)
        node = model.nodes[node_id]
        return node.label, 1.0 - d / node.radius, node_id
    d, node_id = min((math.dist(x, n.centre), n.node_id) for n in model.nodes)
    return model.nodes[node_id].label, 0.0, node_id


def test_classifier_properties():
    with criterion("classifier-properties", budget_s=60.0):
        # Training is bit-identical across repeated runs on the same data.
        for s in range(100):
            rng = np.random.default_rng(4000 + s)
            data = [
                (fv(*rng.random(2)), LABELS[int(rng.integers(3))])
                for _ in range(40)
            ]
            first = train(data, EcfParams())
            second = train(data, EcfParams())
            assert first == second
            assert save_model(first) == save_model(second)

        # Every radius stays inside [r_min, r_max] through a long random walk.
        params = EcfParams()
        model = EcfModel((), params, unit_bounds(2), "stance_sqs", SCHEMA)
        rng = np.random.default_rng(4242)
        xs = rng.random((10_000, 2))
        ys = rng.integers(0, 3, size=10_000)
        for x, y in zip(xs, ys):
            model = learn_one(model, (float(x[0]), float(x[1])), LABELS[int(y)])
            for node in model.nodes:
                assert params.r_min <= node.radius <= params.r_max

        # Resubstitution is perfect on conflict-free, well-separated data.
        rng = np.random.default_rng(77)
        blobs = []
        for label, cx in ((BAD, 0.15), (AVG, 0.5), (VG, 0.85)):
            for _ in range(20):
                blobs.append(
                    (fv(cx + rng.uniform(-0.04, 0.04), rng.uniform(0.45, 0.55)), label)
                )
        data = [blobs[i] for i in rng.permutation(len(blobs))]
        model = train(data, EcfParams())
        for vec, label in data:
            got, _, _ = classify(model, vec.values)
            assert got is label

        # Recall equals a brute-force scan over the node population.
        for s in range(20):
            rng = np.random.default_rng(6000 + s)
            data = [
                (fv(*rng.random(2)), LABELS[int(rng.integers(3))])
                for _ in range(40)
            ]
            model = train(data, EcfParams())
            for q in rng.random((500, 2)):
                x = (float(q[0]), float(q[1]))
                assert classify(model, x) == scan_nodes(model, x)


def test_features_recover_generator_ground_truth():
    with criterion("feature-analytics", budget_s=60.0):
        # Noise-free swings give the planted values back exactly.
        for theta in (0.0, 15.0, 30.0, 45.0, 60.0, 75.0, 90.0):
            for alpha in (5.0, 20.0, 40.0, 60.0, 80.0):
                for ratio in (0.6, 1.0, 1.6, 2.2):
                    s = synthesize_swing(
                        SynthParams(
                            stance_angle_deg=theta,
                            low_to_high_deg=alpha,
                            width_ratio=ratio,
                            seed=1,
                        )
                    )
                    roi = find_roi(s)
                    assert (roi.start_frame, roi.min_frame, roi.end_frame) == (32, 37, 42)
                    assert abs(stance_angle(s, roi) - theta) <= 1e-6
                    assert abs(low_to_high_angle(s, roi) - alpha) <= 1e-6
                    lead = swing_width(s, roi, SwingWidthVariant.HAND_LEADING_HIP)
                    centre = swing_width(s, roi, SwingWidthVariant.HAND_BODY_CENTRE)
                    rear = swing_width(s, roi, SwingWidthVariant.HAND_REAR_HIP)
                    assert abs(lead - abs(ratio - 0.5)) <= 1e-6
                    assert abs(centre - ratio) <= 1e-6
                    assert abs(rear - (ratio + 0.5)) <= 1e-6

        # With 2 mm marker noise the angles hold to 3 degrees and the
        # body-centre width ratio to 0.05, over 100 seeded generations.
        rng = np.random.default_rng(47)
        for trial in range(100):
            theta = float(rng.uniform(5.0, 85.0))
            alpha = float(rng.uniform(20.0, 45.0))
            ratio = float(rng.uniform(0.8, 1.8))
            hip = float(rng.uniform(330.0, 380.0))
            s = synthesize_swing(
                SynthParams(
                    stance_angle_deg=theta,
                    low_to_high_deg=alpha,
                    width_ratio=ratio,
                    hip_width_mm=hip,
                    noise_sigma_mm=2.0,
                    seed=47_000 + trial,
                )
            )
            roi = find_roi(s)
            assert roi.min_frame == 37
            assert abs(stance_angle(s, roi) - theta) <= 3.0
            assert abs(low_to_high_angle(s, roi) - alpha) <= 3.0
            centre = swing_width(s, roi, SwingWidthVariant.HAND_BODY_CENTRE)
            assert abs(centre - ratio) <= 0.05


def test_substitute_references_beat_occlusion(tmp_path):
    with criterion("occlusion-ordering", budget_s=300.0):
        occluded = 15
        assert occluded / 43 >= 0.30
        orderings_held = 0
        for c in range(10):
            corpus = make_corpus(2600 + c, n=43, occluded=occluded)
            store = SessionStore(tmp_path / f"occ-{c}")
            for sample, labels, _ in corpus:
                store.put_swing(sample, gap_fill(sample, 5))
                store.put_labels(LabelSet(sample.swing_id, "coach", now_iso(), labels))
            oa = {}
            for rule_id in (WIDTH_LEADING, WIDTH_CENTRE, WIDTH_REAR):
                ev = pipeline.loocv_rule(store, rule_id)
                assert ev.total == 43
                # the hidden trochanter must deny exactly the leading-hip
                # variant its reference point
                expected_failures = occluded if rule_id == WIDTH_LEADING else 0
                assert len(ev.failures) == expected_failures
                oa[rule_id] = ev.oa_percent
            if oa[WIDTH_CENTRE] >= oa[WIDTH_LEADING] and oa[WIDTH_REAR] >= oa[WIDTH_LEADING]:
                orderings_held += 1
        assert orderings_held >= 9


def stance_scenario_models() -> tuple[dict[str, EcfModel], object]:
    """Both stance scenarios trained from one labelled band corpus."""
    bands = {
        "square": (3.0, 5.0, 7.0),
        "semi_open": (42.0, 45.0, 48.0),
        "open": (83.0, 85.0, 87.0),
    }
    band_labels = {
        "stance_sqs": {"square": VG, "semi_open": AVG, "open": BAD},
        "stance_sos": {"square": AVG, "semi_open": VG, "open": AVG},
    }
    swings = []
    seed = 900
    for band, angles in bands.items():
        for angle in angles:
            seed += 1
            swing_type = SwingType.FOREHAND if seed % 2 else SwingType.BACKHAND
            s = synthesize_swing(
                SynthParams(swing_type=swing_type, stance_angle_deg=angle, seed=seed)
            )
            swings.append((band, s, find_roi(s)))
    raw = [raw_rule_feature(s, "stance_sqs", roi) for _, s, roi in swings]
    bounds = fit_normalizer([raw, [s.swing_type.code for _, s, _ in swings]])
    models = {}
    for rule_id, by_band in band_labels.items():
        data = [
            (build_feature_vector(s, rule_id, roi, bounds), by_band[band])
            for band, s, roi in swings
        ]
        models[rule_id] = train(data, default_params_for_rule(rule_id), bounds=bounds)
    return models, bounds


def test_orchestration_invariants():
    with criterion("orchestration-invariants", budget_s=10.0):
        rules = sorted(RULE_IDS)
        rng = np.random.default_rng(99)
        for _ in range(200):
            k = int(rng.integers(1, len(rules) + 1))
            chosen = sorted(rng.choice(rules, size=k, replace=False))
            scores = {r: float(LABELS[int(rng.integers(3))].score) for r in chosen}
            weights = {r: float(rng.uniform(0.05, 1.0)) for r in chosen}
            profile = WeightsProfile("acc", "club", "rally", weights)
            z = weighted_overall(scores, profile)
            assert 0.0 <= z <= 1.0

            # scaling every weight by the same factor cannot move Z
            halved = WeightsProfile(
                "acc", "club", "rally", {r: w / 2.0 for r, w in weights.items()}
            )
            assert math.isclose(z, weighted_overall(scores, halved), rel_tol=1e-12)

            # raising any one score can only raise Z
            for r in chosen:
                if scores[r] < 1.0:
                    upgraded = dict(scores)
                    upgraded[r] = 1.0
                    assert weighted_overall(upgraded, profile) >= z

            # a zero-weighted rule can never move Z
            spare = next((r for r in rules if r not in chosen), None)
            if spare is not None:
                scores2 = dict(scores)
                scores2[spare] = 0.0
                weights2 = dict(weights)
                weights2[spare] = 0.0
                profile2 = WeightsProfile("acc", "club", "rally", weights2)
                assert weighted_overall(scores2, profile2) == z

        # cue order is deterministic: ascending score, rule id on ties
        def outcome(rule_id: str, cat: CategoryLabel) -> RuleOutcome:
            return RuleOutcome(
                rule_id, cat, cat.score, 0.5, f"cue {rule_id}", CATEGORY_COLOUR[cat]
            )

        outcomes = [
            outcome("low_to_high", VG),
            outcome("stance_sqs", BAD),
            outcome("swing_width:rear_hip", AVG),
            outcome("swing_width:body_centre", AVG),
            outcome("stance_sos", BAD),
        ]
        ranked = cue_list(outcomes, top_k=5)
        assert [o.rule_id for o in ranked] == [
            "stance_sos",
            "stance_sqs",
            "swing_width:body_centre",
            "swing_width:rear_hip",
            "low_to_high",
        ]
        assert cue_list(list(reversed(outcomes)), top_k=5) == ranked
        assert cue_list(outcomes, top_k=1) == (ranked[0],)

        # a square stance reads very good under the square scenario and
        # average under semi-open; a fully open stance reads bad under
        # square and average under semi-open
        models, _ = stance_scenario_models()
        profile = WeightsProfile(
            "stances", "club", "rally", {"stance_sqs": 1.0, "stance_sos": 1.0}
        )
        square = assess_swing(
            synthesize_swing(SynthParams(stance_angle_deg=5.0, seed=951)),
            models,
            profile,
        )
        verdicts = {o.rule_id: o.category for o in square.outcomes}
        assert verdicts == {"stance_sqs": VG, "stance_sos": AVG}
        assert square.z == 0.75
        assert square.cue_list[0].rule_id == "stance_sos"
        assert square.cue_list[0].colour is Colour.AMBER

        open_stance = assess_swing(
            synthesize_swing(SynthParams(stance_angle_deg=85.0, seed=952)),
            models,
            profile,
        )
        verdicts = {o.rule_id: o.category for o in open_stance.outcomes}
        assert verdicts == {"stance_sqs": BAD, "stance_sos": AVG}
        assert open_stance.z == 0.25
        worst = open_stance.cue_list[0]
        assert worst.rule_id == "stance_sqs"
        assert worst.colour is Colour.RED
        assert worst.cue_text == "Step into a square stance before the ball arrives"


def test_round_trips(tmp_path):
    with criterion("round-trips", budget_s=30.0):
        # swing file: serialize -> parse -> serialize is byte-stable and
        # reproduces the sample exactly, holes included
        cfg = SkeletonConfig()
        rng = np.random.default_rng(321)
        for t in range(25):
            schedule = (OcclusionSpan("PSGT", 30, 45),) if t % 5 == 0 else ()
            s = synthesize_swing(
                SynthParams(
                    swing_type=SwingType.BACKHAND if t % 2 else SwingType.FOREHAND,
                    stance_angle_deg=float(rng.uniform(0.0, 90.0)),
                    low_to_high_deg=float(rng.uniform(5.0, 80.0)),
                    width_ratio=float(rng.uniform(0.6, 2.4)),
                    hip_width_mm=float(rng.uniform(320.0, 360.0)),
                    noise_sigma_mm=float(rng.uniform(0.0, 3.0)),
                    occlusion_schedule=schedule,
                    seed=500 + t,
                )
            )
            text = serialize_swing(s)
            back = parse_swing_file(text, cfg)
            assert back == s
            assert serialize_swing(back) == text

        # model file: save -> load -> save is byte-stable and the loaded
        # model predicts identically on 1,000 vectors
        rng = np.random.default_rng(654)
        data = [
            (fv(*rng.random(2)), LABELS[int(rng.integers(3))]) for _ in range(60)
        ]
        model = train(data, EcfParams())
        text = save_model(model)
        loaded = load_model(text)
        assert loaded == model
        assert save_model(loaded) == text
        for q in rng.random((1000, 2)):
            x = (float(q[0]), float(q[1]))
            assert classify(loaded, x) == classify(model, x)

        # labels: PUT then GET through the service returns what was sent
        store = SessionStore(tmp_path / "api-store")
        s = synthesize_swing(SynthParams(seed=9))
        store.put_swing(s, gap_fill(s, 5))
        client = TestClient(create_app(store))
        sent = {
            "annotator": "coach",
            "labels": {
                "stance_sqs": "very_good",
                "low_to_high": "bad",
                "swing_width:rear_hip": "average",
            },
        }
        r = client.put(f"/swings/{s.swing_id}/labels", json=sent)
        assert r.status_code == 200
        got = client.get(f"/swings/{s.swing_id}/labels").json()
        assert got["swing_id"] == s.swing_id
        assert got["annotator"] == "coach"
        assert got["labels"] == sent["labels"]


def run_cli(*argv: str) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        rc = main(list(argv))
    assert rc == 0, buf.getvalue()
    return buf.getvalue()


def test_cli_end_to_end(tmp_path):
    with criterion("cli-end-to-end", budget_s=120.0):
        root = str(tmp_path / "store")
        inputs = tmp_path / "inputs"
        inputs.mkdir()
        corpus = make_corpus(777, n=43)
        files = []
        for sample, _, _ in corpus:
            path = inputs / f"{sample.swing_id}.swing"
            path.write_text(serialize_swing(sample))
            files.append(str(path))

        out = run_cli("ingest", "--store", root, *files)
        assert out.count("ingested ") == 43

        store = SessionStore(root)
        for sample, labels, _ in corpus:
            store.put_labels(LabelSet(sample.swing_id, "coach", now_iso(), labels))

        for rule_id in sorted(RULE_IDS):
            out = run_cli("train", "--store", root, "--rule", rule_id)
            assert out.startswith(f"trained {rule_id}:")

        summary = tmp_path / "summary.csv"
        run_cli("loocv", "--store", root, "--out", str(summary))
        rows = [line.split(",") for line in summary.read_text().splitlines()]
        assert rows[0] == (
            "coaching_rule,variant,oa_percent,oa_percent_exact,correct,total,epochs"
        ).split(",")
        body = rows[1:]
        assert [(r[0], r[1]) for r in body] == [
            ("stance", "square"),
            ("stance", "semi_open"),
            ("low_to_high", ""),
            ("swing_width", "leading_hip"),
            ("swing_width", "body_centre"),
            ("swing_width", "rear_hip"),
        ]
        for r in body:
            shown, exact, correct, total = int(r[2]), float(r[3]), int(r[4]), int(r[5])
            assert total == 43
            assert exact == 100.0 * correct / 43
            assert shown == display_percent(exact)
        assert [int(r[6]) for r in body] == [4, 4, 2, 2, 2, 2]

        store.put_profile(
            WeightsProfile("club", "club", "rally", {r: 1.0 for r in RULE_IDS})
        )
        out = run_cli(
            "assess",
            "--store",
            root,
            "--profile",
            "club",
            "--top-k",
            "3",
            "--session",
            "sess-acc",
        )
        z_lines = [line for line in out.splitlines() if "  Z=" in line]
        assert len(z_lines) == 43
        ranks = [
            int(m.group(1))
            for m in re.finditer(r"^  (\d+)\. \[(red|amber|green)\] ", out, re.M)
        ]
        assert ranks and max(ranks) <= 3
        assert "session sess-acc: 43 swings assessed" in out

        out = run_cli("report", "--store", root, "--session", "sess-acc")
        assert "session sess-acc: 43 swings" in out
        assert "mean Z = " in out
        assert "worst rule: " in out
