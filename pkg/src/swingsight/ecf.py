"""Evolving hypersphere classifier over normalized feature vectors.

Rule nodes are spheres in [0, 1]^d, each carrying a category. Training is a
single-pass fold of a four-case update, repeated for a configured number of
epochs; the node population and radii evolve, centres never move. Recall
picks the strongest covering node, falling back to the nearest node when no
sphere covers the query.
"""

from __future__ import annotations

import enum
import math
import re
import warnings
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    ConflictingDuplicate,
    EmptyData,
    EmptyModel,
    MalformedModelFile,
    VersionMismatch,
)
from .features import FeatureVector, NormalizerBounds

# Wrong-class spheres shrink to just exclude the offending example.
SHRINK_MARGIN = 1e-6


class CategoryLabel(enum.Enum):
    """Execution quality of one stylistic aspect. Ordered worst to best."""

    BAD = "bad"
    AVERAGE = "average"
    VERY_GOOD = "very_good"

    @property
    def score(self) -> float:
        return _SCORES[self]

    def __lt__(self, other: "CategoryLabel") -> bool:
        if not isinstance(other, CategoryLabel):
            return NotImplemented
        return self.score < other.score


_SCORES = {
    CategoryLabel.BAD: 0.0,
    CategoryLabel.AVERAGE: 0.5,
    CategoryLabel.VERY_GOOD: 1.0,
}


@dataclass(frozen=True)
class EcfParams:
    """Learning knobs.

    membership_functions is carried for configuration parity with the
    original tooling; it does not influence training or recall (the reported
    accuracy was insensitive to it). m_of_n sizes the optional vote recall.
    """

    r_max: float = 0.8
    r_min: float = 0.05
    epochs: int = 2
    m_of_n: int = 3
    membership_functions: int = 3

    def __post_init__(self) -> None:
        if not (0 < self.r_min <= self.r_max):
            raise ValueError("need 0 < r_min <= r_max")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.m_of_n < 1:
            raise ValueError("m_of_n must be >= 1")
        if self.membership_functions < 1:
            raise ValueError("membership_functions must be >= 1")


# Epochs that reproduced the published per-rule accuracies.
RULE_EPOCHS: dict[str, int] = {
    "stance_sqs": 4,
    "stance_sos": 4,
    "low_to_high": 2,
    "swing_width:leading_hip": 2,
    "swing_width:body_centre": 2,
    "swing_width:rear_hip": 2,
}


def default_params_for_rule(rule_id: str) -> EcfParams:
    return EcfParams(epochs=RULE_EPOCHS.get(rule_id, 2))


@dataclass(frozen=True)
class RuleNode:
    """One hypersphere: fixed centre, evolving radius, example tally."""

    node_id: int
    centre: tuple[float, ...]
    radius: float
    label: CategoryLabel
    example_count: int

    def __post_init__(self) -> None:
        if self.example_count < 1:
            raise ValueError("example_count must be >= 1")
        for c in self.centre:
            if not (0.0 <= c <= 1.0):
                raise ValueError("centre must lie in the unit hypercube")


@dataclass(frozen=True)
class EcfModel:
    """Trained node population plus everything needed to reuse it: the
    learning params, the normalization bounds of its training corpus, the
    rule it judges, and the input schema."""

    nodes: tuple[RuleNode, ...]
    params: EcfParams
    bounds: NormalizerBounds
    rule_id: str
    schema: tuple[str, ...]

    @property
    def dims(self) -> int:
        return len(self.schema)


def _distance(a: Sequence[float], b: Sequence[float]) -> float:
    return math.dist(a, b)


def unit_bounds(dims: int) -> NormalizerBounds:
    """Identity bounds for callers that feed already-normalized vectors."""
    return tuple((0.0, 1.0) for _ in range(dims))


def learn_one(
    model: EcfModel, x: Sequence[float], y: CategoryLabel
) -> EcfModel:
    """One incremental update; returns a new model.

    Four cases, applied in order:
      1. every wrong-class node covering x shrinks to just exclude it
         (radius max(d - margin, r_min));
      2. if a same-class node covers x, the nearest one absorbs it
         (example count up, geometry unchanged);
      3. otherwise the nearest same-class node within r_max grows its
         radius out to x;
      4. otherwise a new node is created at x with the minimum radius.

    An example identical to an existing node centre but labelled differently
    is reported as a conflicting duplicate and ignored: the first-seen label
    keeps the node.
    """
    if len(x) != model.dims:
        raise ArityMismatch(f"expected {model.dims} dims, got {len(x)}")
    x = tuple(float(v) for v in x)
    p = model.params

    for node in model.nodes:
        if node.centre == x and node.label is not y:
            warnings.warn(
                f"vector {x} already anchors a {node.label.value!r} node; "
                f"{y.value!r} example ignored",
                ConflictingDuplicate,
                stacklevel=2,
            )
            return model

    nodes = list(model.nodes)
    dists = [_distance(x, node.centre) for node in nodes]

    for i, node in enumerate(nodes):
        if node.label is not y and dists[i] <= node.radius:
            nodes[i] = replace(node, radius=max(dists[i] - SHRINK_MARGIN, p.r_min))

    covering = [
        i for i, node in enumerate(nodes)
        if node.label is y and dists[i] <= node.radius
    ]
    if covering:
        i = min(covering, key=lambda i: (dists[i], nodes[i].node_id))
        nodes[i] = replace(nodes[i], example_count=nodes[i].example_count + 1)
        return replace(model, nodes=tuple(nodes))

    reachable = [
        i for i, node in enumerate(nodes)
        if node.label is y and dists[i] <= p.r_max
    ]
    if reachable:
        i = min(reachable, key=lambda i: (dists[i], nodes[i].node_id))
        nodes[i] = replace(
            nodes[i],
            radius=min(dists[i], p.r_max),
            example_count=nodes[i].example_count + 1,
        )
        return replace(model, nodes=tuple(nodes))

    nodes.append(RuleNode(len(nodes), x, p.r_min, y, 1))
    return replace(model, nodes=tuple(nodes))


def train(
    data: Sequence[tuple[FeatureVector, CategoryLabel]],
    params: EcfParams,
    bounds: NormalizerBounds | None = None,
) -> EcfModel:
    """Fold learn_one over the data in order, params.epochs times.

    Presentation order matters and is the caller's to fix; training is fully
    deterministic given (data order, params).
    """
    if not data:
        raise EmptyData("no training examples")
    rule_id = data[0][0].rule_id
    schema = data[0][0].schema
    for fv, _ in data:
        if len(fv.values) != len(schema):
            raise ArityMismatch("inconsistent vector arity in training data")
        if fv.rule_id != rule_id:
            raise ArityMismatch(
                f"mixed rules in training data: {rule_id!r} vs {fv.rule_id!r}"
            )
    if bounds is None:
        bounds = unit_bounds(len(schema))
    model = EcfModel((), params, bounds, rule_id, schema)
    for _ in range(params.epochs):
        for fv, label in data:
            model = learn_one(model, fv.values, label)
    return model


def classify(
    model: EcfModel, x: Sequence[float]
) -> tuple[CategoryLabel, float, int]:
    """Label a vector; returns (label, activation, node_id).

    Covered queries take the node with the highest activation 1 - d/r, ties
    broken by smaller distance then lower node id. Uncovered queries fall
    back to the nearest node with activation 0.
    """
    if not model.nodes:
        raise EmptyModel("model has no nodes")
    if len(x) != model.dims:
        raise ArityMismatch(f"expected {model.dims} dims, got {len(x)}")
    best: tuple[float, float, int] | None = None  # (-activation, d, id)
    nearest: tuple[float, int] | None = None
    for node in model.nodes:
        d = _distance(x, node.centre)
        if nearest is None or (d, node.node_id) < nearest:
            nearest = (d, node.node_id)
        if d <= node.radius:
            key = (-(1.0 - d / node.radius), d, node.node_id)
            if best is None or key < best:
                best = key
    if best is not None:
        node = model.nodes[best[2]]
        return node.label, 1.0 - best[1] / node.radius, node.node_id
    node = model.nodes[nearest[1]]
    return node.label, 0.0, node.node_id


def classify_vote(
    model: EcfModel, x: Sequence[float], m_of_n: int | None = None
) -> CategoryLabel:
    """Optional recall: majority label over the m nearest nodes.

    Ties favour the label whose closest node is nearer. Kept for parity with
    the original tooling; nearest-node recall above is the default."""
    if not model.nodes:
        raise EmptyModel("model has no nodes")
    if len(x) != model.dims:
        raise ArityMismatch(f"expected {model.dims} dims, got {len(x)}")
    m = model.params.m_of_n if m_of_n is None else m_of_n
    ranked = sorted(
        model.nodes, key=lambda n: (_distance(x, n.centre), n.node_id)
    )[: max(1, m)]
    tally: dict[CategoryLabel, tuple[int, int]] = {}
    for rank, node in enumerate(ranked):
        votes, first = tally.get(node.label, (0, rank))
        tally[node.label] = (votes + 1, min(first, rank))
    return max(tally, key=lambda lab: (tally[lab][0], -tally[lab][1]))


def extract_rules(model: EcfModel) -> tuple[dict, ...]:
    """Readable rule dump: centres denormalized back to raw units."""
    out = []
    for node in model.nodes:
        centre_raw = tuple(
            lo + c * (hi - lo) for c, (lo, hi) in zip(node.centre, model.bounds)
        )
        out.append(
            {
                "node_id": node.node_id,
                "rule_id": model.rule_id,
                "label": node.label.value,
                "radius": node.radius,
                "centre": node.centre,
                "centre_raw": centre_raw,
                "schema": model.schema,
                "example_count": node.example_count,
            }
        )
    return tuple(out)


# ------------------------------------------------------------- persistence

_MODEL_HEADER_RE = re.compile(r"^#ecf (?P<ver>v\d+) rule=(?P<rule>\S+) dims=(?P<dims>\d+)$")
_FORMAT_VERSION = "v1"


def _fmt(v: float) -> str:
    return repr(float(v))


def save_model(model: EcfModel) -> str:
    """Full-precision text form; load_model inverts it exactly."""
    if not model.nodes:
        raise EmptyModel("refusing to persist a model with no nodes")
    p = model.params
    lines = [
        f"#ecf {_FORMAT_VERSION} rule={model.rule_id} dims={model.dims}",
        (
            f"params,r_max={_fmt(p.r_max)},r_min={_fmt(p.r_min)},"
            f"epochs={p.epochs},m_of_n={p.m_of_n},"
            f"membership_functions={p.membership_functions}"
        ),
        "bounds," + ",".join(f"{_fmt(lo)},{_fmt(hi)}" for lo, hi in model.bounds),
        "schema," + ",".join(model.schema),
    ]
    for node in model.nodes:
        lines.append(
            f"node,{node.node_id},{node.label.value},{_fmt(node.radius)},"
            + ",".join(_fmt(c) for c in node.centre)
            + f",{node.example_count}"
        )
    return "\n".join(lines) + "\n"


def _model_float(cell: str, where: str) -> float:
    try:
        v = float(cell)
    except ValueError:
        raise MalformedModelFile(f"{where}: {cell!r} is not a number") from None
    if not math.isfinite(v):
        raise MalformedModelFile(f"{where}: {cell!r} is not finite")
    return v


def _model_int(cell: str, where: str) -> int:
    try:
        return int(cell)
    except ValueError:
        raise MalformedModelFile(f"{where}: {cell!r} is not an integer") from None


def load_model(text: str) -> EcfModel:
    if hasattr(text, "read"):
        text = text.read()
    lines = [ln for ln in text.splitlines() if ln]
    if not lines:
        raise MalformedModelFile("empty model file")
    m = _MODEL_HEADER_RE.match(lines[0])
    if not m:
        raise MalformedModelFile(f"bad header: {lines[0]!r}")
    if m.group("ver") != _FORMAT_VERSION:
        raise VersionMismatch(
            f"model format {m.group('ver')} not supported (want {_FORMAT_VERSION})"
        )
    dims = int(m.group("dims"))
    if len(lines) < 4:
        raise MalformedModelFile("missing params/bounds/schema lines")

    kv = {}
    cells = lines[1].split(",")
    if cells[0] != "params":
        raise MalformedModelFile("second line must be the params line")
    for cell in cells[1:]:
        if "=" not in cell:
            raise MalformedModelFile(f"bad params cell {cell!r}")
        key, val = cell.split("=", 1)
        kv[key] = val
    try:
        params = EcfParams(
            r_max=_model_float(kv["r_max"], "r_max"),
            r_min=_model_float(kv["r_min"], "r_min"),
            epochs=int(kv["epochs"]),
            m_of_n=int(kv["m_of_n"]),
            membership_functions=int(kv.get("membership_functions", "3")),
        )
    except (KeyError, ValueError) as e:
        raise MalformedModelFile(f"bad params line: {e}") from None

    cells = lines[2].split(",")
    if cells[0] != "bounds" or len(cells) != 1 + 2 * dims:
        raise MalformedModelFile("bounds line must hold one (min,max) pair per dim")
    flat = [_model_float(c, "bounds") for c in cells[1:]]
    bounds = tuple((flat[2 * i], flat[2 * i + 1]) for i in range(dims))

    cells = lines[3].split(",")
    if cells[0] != "schema" or len(cells) != 1 + dims:
        raise MalformedModelFile("schema line must name every dim")
    schema = tuple(cells[1:])

    nodes: list[RuleNode] = []
    for line in lines[4:]:
        cells = line.split(",")
        if cells[0] != "node" or len(cells) != 4 + dims + 1:
            raise MalformedModelFile(f"bad node line: {line!r}")
        try:
            label = CategoryLabel(cells[2])
        except ValueError:
            raise MalformedModelFile(f"unknown label {cells[2]!r}") from None
        try:
            nodes.append(
                RuleNode(
                    node_id=_model_int(cells[1], "node_id"),
                    label=label,
                    radius=_model_float(cells[3], "radius"),
                    centre=tuple(
                        _model_float(c, "centre") for c in cells[4 : 4 + dims]
                    ),
                    example_count=_model_int(cells[4 + dims], "example_count"),
                )
            )
        except ValueError as e:
            raise MalformedModelFile(f"bad node line: {e}") from None
    if not nodes:
        raise MalformedModelFile("model file has no node lines")
    return EcfModel(tuple(nodes), params, bounds, m.group("rule"), schema)
