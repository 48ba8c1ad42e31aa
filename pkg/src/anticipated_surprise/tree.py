"""Outcome-resolution trees and their exact, exhaustive evaluation.

A tree encodes how an option's outcome is mentally resolved stage by
stage: internal nodes are resolution events with weighted branches,
terminals are final payoffs.  Evaluation walks every path, so for each
stage t the surprise is the exact expectation of the kernel applied to
the revision of conditional expected value at that stage.  This is the
ground truth the analytic formulas in ``closed_form`` are checked
against.

Trees are immutable after construction and evaluation is pure, so any
number of threads may evaluate the same tree concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import isfinite
from typing import Union

from .core import ModelParams, ValidationError, surprise_kernel, utility

#: Branch probabilities of an internal node must sum to 1 within this.
PROBABILITY_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Terminal:
    """Leaf node: resolution has finished with this payoff."""

    payoff: float


@dataclass(frozen=True)
class Branch:
    probability: float
    child: "ResolutionNode"


@dataclass(frozen=True)
class Internal:
    """One resolution stage.

    ``surprise_weight`` multiplies only the surprise contributed by this
    node's own branching (not its descendants').  The default 1 leaves
    the plain model; the timing-risk scheme uses it to emphasize the
    stage at which the delivery time is revealed.
    """

    branches: tuple[Branch, ...]
    surprise_weight: float = 1.0


ResolutionNode = Union[Terminal, Internal]


@dataclass
class ValidationReport:
    """Outcome of a structural check; renormalized paths had probability
    sums off from 1 by at most PROBABILITY_SUM_TOL and are divided
    through by their exact sum during evaluation."""

    node_count: int = 0
    max_depth: int = 0
    renormalized: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class EvaluationResult:
    """Everything the model extracts from one tree."""

    expected_value: float
    stage_surprises: tuple[float, ...]
    total_surprise: float
    utility: float


def validate(node: ResolutionNode) -> ValidationReport:
    """Check payoff finiteness, branch probabilities, and weights.

    Raises ValidationError naming the path of the offending node.
    """
    report = ValidationReport()
    stack = [(node, "root", 0)]
    while stack:
        nd, path, depth = stack.pop()
        report.node_count += 1
        report.max_depth = max(report.max_depth, depth)
        if isinstance(nd, Terminal):
            if not isfinite(nd.payoff):
                raise ValidationError(f"{path}: payoff must be finite, got {nd.payoff!r}")
            continue
        if not isinstance(nd, Internal):
            raise ValidationError(f"{path}: not a resolution node: {nd!r}")
        if not nd.branches:
            raise ValidationError(f"{path}: internal node needs at least one branch")
        if not isfinite(nd.surprise_weight) or nd.surprise_weight < 0.0:
            raise ValidationError(
                f"{path}: surprise_weight must be finite and >= 0, got {nd.surprise_weight!r}"
            )
        total = 0.0
        for i, br in enumerate(nd.branches):
            if not isfinite(br.probability) or not 0.0 < br.probability <= 1.0:
                raise ValidationError(
                    f"{path}.branches[{i}]: probability must lie in (0, 1], got {br.probability!r}"
                )
            total += br.probability
            stack.append((br.child, f"{path}.branches[{i}]", depth + 1))
        if abs(total - 1.0) > PROBABILITY_SUM_TOL:
            raise ValidationError(
                f"{path}: branch probabilities sum to {total!r}, expected 1 "
                f"within {PROBABILITY_SUM_TOL}"
            )
        if total != 1.0:
            report.renormalized.append(path)
    return report


def _expected_value(node: ResolutionNode, memo: dict[int, float]) -> float:
    if isinstance(node, Terminal):
        return node.payoff
    key = id(node)
    cached = memo.get(key)
    if cached is not None:
        return cached
    total = sum(br.probability for br in node.branches)
    value = sum(br.probability * _expected_value(br.child, memo) for br in node.branches) / total
    memo[key] = value
    return value


def expected_value(node: ResolutionNode) -> float:
    """Probability-weighted payoff over all resolution paths."""
    validate(node)
    return _expected_value(node, {})


def stage_surprises(node: ResolutionNode, params: ModelParams) -> list[float]:
    """Exact per-stage surprise, indexed by resolution stage (depth).

    Stage t collects, over every internal node v sitting t-1 levels below
    the root, the probability of reaching v times v's weighted expected
    kernel value of the jump in conditional expected value across its
    branches.  Grouping by node is equivalent to averaging over whole
    trajectories because each node stands for the class of trajectories
    sharing its history.
    """
    validate(node)
    memo: dict[int, float] = {}
    out: list[float] = []
    level: list[tuple[ResolutionNode, float]] = [(node, 1.0)]
    while level:
        nxt: list[tuple[ResolutionNode, float]] = []
        stage_total = 0.0
        saw_internal = False
        for nd, reach in level:
            if isinstance(nd, Terminal):
                continue
            saw_internal = True
            total = sum(br.probability for br in nd.branches)
            e_here = _expected_value(nd, memo)
            jump = sum(
                (br.probability / total)
                * surprise_kernel(_expected_value(br.child, memo) - e_here, params)
                for br in nd.branches
            )
            stage_total += reach * nd.surprise_weight * jump
            for br in nd.branches:
                nxt.append((br.child, reach * (br.probability / total)))
        if saw_internal:
            out.append(stage_total)
        level = nxt
    return out


def evaluate(node: ResolutionNode, params: ModelParams) -> EvaluationResult:
    """Expected value, per-stage surprises, their sum, and the utility."""
    surprises = stage_surprises(node, params)
    u0 = _expected_value(node, {})
    total = sum(surprises)
    return EvaluationResult(
        expected_value=u0,
        stage_surprises=tuple(surprises),
        total_surprise=total,
        utility=utility(u0, total, params),
    )


def collapse_deterministic(node: ResolutionNode) -> ResolutionNode:
    """Drop internal nodes with a single (probability-1) branch.

    Such nodes revise the conditional expected value by zero, so the
    kernel gives them zero surprise and removal leaves every evaluation
    result unchanged.
    """
    validate(node)
    return _collapse(node)


def _collapse(node: ResolutionNode) -> ResolutionNode:
    if isinstance(node, Terminal):
        return node
    if len(node.branches) == 1:
        return _collapse(node.branches[0].child)
    return Internal(
        branches=tuple(
            Branch(br.probability, _collapse(br.child)) for br in node.branches
        ),
        surprise_weight=node.surprise_weight,
    )


# ---------------------------------------------------------------------------
# File format: {"payoff": x} | {"branches": [{"p": p, "node": ...}, ...],
#               "weight": w}   (weight optional, default 1)
# ---------------------------------------------------------------------------


def tree_from_dict(obj: object, path: str = "root") -> ResolutionNode:
    if not isinstance(obj, dict):
        raise ValidationError(f"{path}: expected an object, got {type(obj).__name__}")
    if "payoff" in obj:
        if "branches" in obj:
            raise ValidationError(f"{path}: node cannot have both payoff and branches")
        payoff = obj["payoff"]
        if not isinstance(payoff, (int, float)) or isinstance(payoff, bool):
            raise ValidationError(f"{path}: payoff must be a number, got {payoff!r}")
        return Terminal(float(payoff))
    if "branches" not in obj:
        raise ValidationError(f"{path}: node needs either 'payoff' or 'branches'")
    raw = obj["branches"]
    if not isinstance(raw, list) or not raw:
        raise ValidationError(f"{path}: 'branches' must be a non-empty array")
    branches = []
    for i, entry in enumerate(raw):
        where = f"{path}.branches[{i}]"
        if not isinstance(entry, dict) or "p" not in entry or "node" not in entry:
            raise ValidationError(f"{where}: expected an object with 'p' and 'node'")
        prob = entry["p"]
        if not isinstance(prob, (int, float)) or isinstance(prob, bool):
            raise ValidationError(f"{where}: 'p' must be a number, got {prob!r}")
        branches.append(Branch(float(prob), tree_from_dict(entry["node"], where)))
    weight = obj.get("weight", 1.0)
    if not isinstance(weight, (int, float)) or isinstance(weight, bool):
        raise ValidationError(f"{path}: 'weight' must be a number, got {weight!r}")
    return Internal(tuple(branches), float(weight))


def tree_to_dict(node: ResolutionNode) -> dict:
    if isinstance(node, Terminal):
        return {"payoff": node.payoff}
    out: dict = {
        "branches": [
            {"p": br.probability, "node": tree_to_dict(br.child)} for br in node.branches
        ]
    }
    if node.surprise_weight != 1.0:
        out["weight"] = node.surprise_weight
    return out


def load_tree(path: str) -> ResolutionNode:
    """Read a tree-specification file and validate it."""
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: not valid JSON: {exc}") from exc
    node = tree_from_dict(obj)
    validate(node)
    return node
