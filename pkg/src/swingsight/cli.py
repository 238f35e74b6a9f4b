"""Command line front end.

Exit codes: 0 on success, 1 on data or model errors (the originating error
name is printed to stderr), 2 on usage errors (argparse's default).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import ecf, evaluation, pipeline
from .errors import SwingsightError
from .features import RULE_IDS
from .store import SessionStore

ENV_STORE = "SWINGSIGHT_STORE"


def _store_from(args: argparse.Namespace) -> SessionStore:
    root = args.store or os.environ.get(ENV_STORE)
    if not root:
        raise SwingsightError(
            f"no store directory: pass --store or set {ENV_STORE}"
        )
    return SessionStore(root)


def _params_from_file(path: str | None, rule_id: str) -> ecf.EcfParams:
    defaults = ecf.default_params_for_rule(rule_id)
    if path is None:
        return defaults
    doc = json.loads(Path(path).read_text())
    # a per-rule section overrides the flat defaults in the same file
    section = dict(doc)
    section.update(doc.get(rule_id, {}) if isinstance(doc.get(rule_id), dict) else {})
    return ecf.EcfParams(
        r_max=float(section.get("r_max", defaults.r_max)),
        r_min=float(section.get("r_min", defaults.r_min)),
        epochs=int(section.get("epochs", defaults.epochs)),
        m_of_n=int(section.get("m_of_n", defaults.m_of_n)),
        membership_functions=int(
            section.get("membership_functions", defaults.membership_functions)
        ),
    )


def _cmd_ingest(args: argparse.Namespace) -> int:
    store = _store_from(args)
    for path in args.files:
        res = pipeline.ingest_file(store, path, args.max_gap)
        note = ""
        if res.required_violations:
            note = f" ({res.required_violations} required-marker runs left open)"
        print(
            f"ingested {res.swing_id}: {res.frames} frames, "
            f"{res.repaired_runs}/{res.gap_runs} gap runs repaired{note}"
        )
    return 0


def _cmd_features(args: argparse.Namespace) -> int:
    store = _store_from(args)
    table = pipeline.feature_table(store)
    if args.out:
        Path(args.out).write_text(table)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(table)
    return 0


def _cmd_train(args: argparse.Namespace) -> int:
    store = _store_from(args)
    params = _params_from_file(args.params, args.rule)
    model, ds = pipeline.train_rule(store, args.rule, params)
    print(
        f"trained {args.rule}: {len(model.nodes)} nodes from {len(ds.data)} swings "
        f"({params.epochs} epochs)"
    )
    for swing_id, err in ds.failures:
        print(f"  skipped {swing_id}: {err}", file=sys.stderr)
    return 0


def _cmd_loocv(args: argparse.Namespace) -> int:
    store = _store_from(args)
    rules = [args.rule] if args.rule else list(RULE_IDS)
    evals = []
    for rule_id in rules:
        params = _params_from_file(args.params, rule_id)
        evals.append(pipeline.loocv_rule(store, rule_id, params))
    csv = pipeline.loocv_summary_csv(evals)
    if args.out:
        Path(args.out).write_text(csv)
        print(f"wrote {args.out}")
    sys.stdout.write(csv)
    for e in evals:
        if e.failures:
            names = ", ".join(f"{sid} ({err})" for sid, err in e.failures)
            print(f"# {e.rule_id}: not measurable: {names}", file=sys.stderr)
    return 0


def _cmd_assess(args: argparse.Namespace) -> int:
    store = _store_from(args)
    session_id, assessments = pipeline.assess_batch(
        store, args.profile, args.top_k, args.session, args.swing or None
    )
    for a in assessments:
        z = "n/a" if a.z is None else f"{a.z:.3f}"
        print(f"{a.swing_id}  Z={z}")
        for rank, cue in enumerate(a.cue_list, start=1):
            print(f"  {rank}. [{cue.colour.value}] {cue.cue_text}")
        for rule_id, err in a.not_assessed:
            print(f"  -- {rule_id}: not assessed ({err})")
    print(f"session {session_id}: {len(assessments)} swings assessed")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    store = _store_from(args)
    rep = pipeline.session_report(store, args.session)
    print(f"session {rep.session_id}: {rep.swings_assessed} swings")
    zs = [z for z in rep.z_series if z is not None]
    if zs:
        print(f"mean Z = {sum(zs) / len(zs):.3f} over {len(zs)} scored swings")
    for rule_id, st in sorted(rep.per_rule.items()):
        counts = ", ".join(
            f"{lab.value}={st.counts[lab]}" for lab in ecf.CategoryLabel
        )
        print(f"  {rule_id}: mean={st.mean_score:.3f} ({counts})")
    print(f"worst rule: {rep.worst_rule}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    store = _store_from(args)
    host, _, port = args.bind.rpartition(":")
    # Source checkout layout: <root>/src/swingsight/cli.py -> <root>/frontend.
    console = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    app = create_app(store, console if console.is_dir() else None)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swingsight",
        description="Tennis swing diagnostics over a file-backed session store.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_store(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--store",
            help=f"store directory (default: ${ENV_STORE})",
        )

    p = sub.add_parser("ingest", help="parse, repair and store swing files")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--max-gap", type=int, default=5,
                   help="longest interior gap to interpolate (frames)")
    add_store(p)
    p.set_defaults(fn=_cmd_ingest)

    p = sub.add_parser("features", help="dump the raw feature table as CSV")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    add_store(p)
    p.set_defaults(fn=_cmd_features)

    p = sub.add_parser("train", help="fit one rule's classifier from stored labels")
    p.add_argument("--rule", required=True, choices=sorted(RULE_IDS))
    p.add_argument("--params", help="JSON file with learning params")
    add_store(p)
    p.set_defaults(fn=_cmd_train)

    p = sub.add_parser("loocv", help="leave-one-out accuracy summary")
    p.add_argument("--rule", choices=sorted(RULE_IDS),
                   help="evaluate one rule (default: all)")
    p.add_argument("--params", help="JSON file with learning params")
    p.add_argument("--out", help="also write the summary CSV here")
    add_store(p)
    p.set_defaults(fn=_cmd_loocv)

    p = sub.add_parser("assess", help="assess stored swings under a profile")
    p.add_argument("--profile", required=True)
    p.add_argument("--top-k", type=int, default=3)
    p.add_argument("--session", help="session id for the stored results")
    p.add_argument("--swing", action="append",
                   help="assess only this swing (repeatable)")
    add_store(p)
    p.set_defaults(fn=_cmd_assess)

    p = sub.add_parser("report", help="summarize a stored assessment session")
    p.add_argument("--session", required=True)
    add_store(p)
    p.set_defaults(fn=_cmd_report)

    p = sub.add_parser("serve", help="serve the JSON API over HTTP")
    p.add_argument("--bind", default="127.0.0.1:8080", metavar="HOST:PORT")
    add_store(p)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SwingsightError as e:
        print(f"error: {e.name}: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: FileNotFound: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
