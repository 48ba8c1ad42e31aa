"""Analytic surprise and utility formulas for the standard schemes.

Everything here has a brute-force counterpart: build the matching tree
with ``builders`` and run ``tree.evaluate``.  The test suite keeps the
two routes within 1e-9 of each other over a parameter grid, and where a
published formula admitted more than one reading, the tree decided.

Conventions: q = 1 - p, ap = alpha - 1, and the per-stage constant
C = k*p - p**alpha * q**(1-alpha), positive unless p is large.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import ModelParams, ValidationError, surprise_modulation, utility


@dataclass(frozen=True)
class HazardSpec:
    """Survival chain: a unit reward after n steps, each step losing it
    with probability p.  Non-integer n is allowed (the geometric-sum
    closed form extends continuously); trees require integer n.
    """

    p: float
    n: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and 0.0 < self.p < 1.0):
            raise ValidationError(f"p must lie in (0, 1), got {self.p!r}")
        if not (math.isfinite(self.n) and self.n >= 0.0):
            raise ValidationError(f"n must be >= 0, got {self.n!r}")


@dataclass(frozen=True)
class TimingRiskSpec:
    """Hazard chain whose reward arrives early (n-1 steps, probability
    p_tr) or late (n+1 steps), with the timing revealed after n-1
    survived steps.  k_tr weighs the surprise of that reveal.
    """

    p: float
    n: int
    p_tr: float
    k_tr: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and 0.0 < self.p < 1.0):
            raise ValidationError(f"p must lie in (0, 1), got {self.p!r}")
        if int(self.n) != self.n or self.n < 2:
            raise ValidationError(f"n must be an integer >= 2, got {self.n!r}")
        if not (math.isfinite(self.p_tr) and 0.0 < self.p_tr < 1.0):
            raise ValidationError(f"p_tr must lie in (0, 1), got {self.p_tr!r}")
        if not (math.isfinite(self.k_tr) and self.k_tr >= 0.0):
            raise ValidationError(f"k_tr must be >= 0, got {self.k_tr!r}")


class DualScheme(Enum):
    """How an explicit success probability is resolved against the delay."""

    SEPARATE_AFTER = "separate-after"    # own stage, after the delay risk
    SEPARATE_BEFORE = "separate-before"  # own stage, before the delay risk
    INCORPORATED = "incorporated"        # folded into a larger per-step hazard


@dataclass(frozen=True)
class DualRiskSpec:
    """Delayed reward (hazard p over n steps) that additionally pays off
    only with probability p_pr.  k2_prob is the negative-surprise gain
    used when valuing the probability-only comparison option.
    """

    p: float
    n: int
    p_pr: float
    scheme: DualScheme = DualScheme.SEPARATE_AFTER
    k2_prob: float = 2.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and 0.0 < self.p < 1.0):
            raise ValidationError(f"p must lie in (0, 1), got {self.p!r}")
        if int(self.n) != self.n or self.n < 1:
            raise ValidationError(f"n must be an integer >= 1, got {self.n!r}")
        if not (math.isfinite(self.p_pr) and 0.0 < self.p_pr < 1.0):
            raise ValidationError(f"p_pr must lie in (0, 1), got {self.p_pr!r}")
        if not (math.isfinite(self.k2_prob) and self.k2_prob >= 0.0):
            raise ValidationError(f"k2_prob must be >= 0, got {self.k2_prob!r}")
        if self.scheme is DualScheme.INCORPORATED:
            if not 0.0 < self.inflated_hazard() < 1.0:
                raise ValidationError(
                    f"inflated hazard {self.inflated_hazard()!r} falls outside (0, 1)"
                )

    def inflated_hazard(self) -> float:
        """Per-step hazard p' = 1 - p_pr**(1/n) * (1-p) that folds the
        success probability into the chain: (1-p')**n = p_pr*(1-p)**n."""
        return 1.0 - self.p_pr ** (1.0 / self.n) * (1.0 - self.p)


def _chain_constant(p: float, params: ModelParams) -> float:
    # C = k*p - p**alpha * q**(1-alpha); the whole of one stage's surprise
    # up to the survival-probability prefactors.
    return params.k * p - p**params.alpha * (1.0 - p) ** (1.0 - params.alpha)


def hazard_stage_surprise(spec: HazardSpec, t: int, params: ModelParams) -> float:
    """Surprise contributed by step t of the chain, 1 <= t <= n.

    q**(t-1) is the probability of still being in the game at step t;
    -C * q**(alpha*(n-t+1)) is the kernel-weighted pair of jumps (survive
    vs lose) at that step.  Later steps are worse: the stake has grown.
    """
    if int(t) != t or not 1 <= t <= spec.n:
        raise ValidationError(f"stage must be an integer in [1, {spec.n}], got {t!r}")
    q = 1.0 - spec.p
    c = _chain_constant(spec.p, params)
    return q ** (t - 1) * (-c * q ** (params.alpha * (spec.n - t + 1)))


def hazard_total_surprise(spec: HazardSpec, params: ModelParams) -> float:
    """Geometric-sum closed form of the chain's total surprise:

        -C * q**(n+ap) * (1 - q**(n*ap)) / (1 - q**ap),  ap = alpha - 1.

    Defined for real n >= 0, which is how fixed options at fractional
    delays are valued.
    """
    q = 1.0 - spec.p
    ap = params.alpha - 1.0
    denom = 1.0 - q**ap
    if denom == 0.0:
        raise ValidationError("q**(alpha-1) == 1; hazard probability too small to resolve")
    c = _chain_constant(spec.p, params)
    return -c * q ** (spec.n + ap) * (1.0 - q ** (spec.n * ap)) / denom


def discount_factor(spec: HazardSpec, params: ModelParams) -> float:
    """Value of the delayed unit reward relative to an immediate one:
    q**n * g(total surprise).  Strictly decreasing in both n and p."""
    q = 1.0 - spec.p
    if spec.n == 0:
        return 1.0
    return utility(q**spec.n, hazard_total_surprise(spec, params), params)


def prob_only_surprise(p_pr: float, params: ModelParams) -> float:
    """Single-stage surprise of the gamble paying 1 with probability p_pr:

        p_pr*(1-p_pr)**alpha - k*(1-p_pr)*p_pr**alpha

    Positive for small p_pr (risk seeking), negative once p_pr grows.
    Degenerate gambles (p_pr 0 or 1) carry no surprise.
    """
    if not (math.isfinite(p_pr) and 0.0 <= p_pr <= 1.0):
        raise ValidationError(f"p_pr must lie in [0, 1], got {p_pr!r}")
    if p_pr in (0.0, 1.0):
        return 0.0
    a = params.alpha
    return p_pr * (1.0 - p_pr) ** a - params.k * (1.0 - p_pr) * p_pr**a


@dataclass(frozen=True)
class TimingComponents:
    """Decomposition of the timing-risk surprise by stage group.

    delta_common: the n-1 hazard stages ahead of the timing reveal
    delta_tr0:    the reveal itself (unweighted; k_tr multiplies it)
    delta_late:   the two hazard stages after a late reveal
    delta_total:  delta_common + k_tr*delta_tr0 + delta_late
    e_tr:         expected value of the timing lottery
    e_fix:        expected value of the fixed option at the mean delay
    """

    delta_common: float
    delta_tr0: float
    delta_late: float
    delta_total: float
    e_tr: float
    e_fix: float


def mean_delay(spec: TimingRiskSpec) -> float:
    """Probability-weighted delay p_tr*(n-1) + (1-p_tr)*(n+1)."""
    return spec.p_tr * (spec.n - 1) + (1.0 - spec.p_tr) * (spec.n + 1)


def timing_components(spec: TimingRiskSpec, params: ModelParams) -> TimingComponents:
    """Closed forms for every piece of the timing-risk scheme.

    The stages ahead of the reveal behave like a chain shortened to n-1
    steps whose conditional expected values all carry the factor
    m = p_tr + (1-p_tr)*q**2 (the reveal node's own expected value), so
    their surprise is the shortened geometric sum scaled by m**alpha.
    The reveal is a plain binary gamble between payoff-equivalents 1 and
    q**2, and the late branch adds two ordinary hazard stages.  Each
    piece equals the exhaustive tree evaluation of its stage group.
    """
    p, n, p_tr = spec.p, spec.n, spec.p_tr
    a = params.alpha
    ap = a - 1.0
    q = 1.0 - p
    c = _chain_constant(p, params)
    m = p_tr + (1.0 - p_tr) * q * q

    denom = 1.0 - q**ap
    if denom == 0.0:
        raise ValidationError("q**(alpha-1) == 1; hazard probability too small to resolve")
    d_common = -c * m**a * q ** (n - 1 + ap) * (1.0 - q ** ((n - 1) * ap)) / denom
    d_tr0 = q ** (n - 1) * (1.0 - q * q) ** a * prob_only_surprise(p_tr, params)
    d_late = (
        p
        * q ** (n + a)
        * (1.0 - p_tr)
        * (p**ap * (1.0 + q ** (1.0 - a)) - params.k * (1.0 + q**ap))
    )
    e_tr = p_tr * q ** (n - 1) + (1.0 - p_tr) * q ** (n + 1)
    return TimingComponents(
        delta_common=d_common,
        delta_tr0=d_tr0,
        delta_late=d_late,
        delta_total=d_common + spec.k_tr * d_tr0 + d_late,
        e_tr=e_tr,
        e_fix=q ** mean_delay(spec),
    )


def timing_ratio(spec: TimingRiskSpec, params: ModelParams) -> float:
    """U_tr / U_fix: the timing lottery against a fixed reward at the
    mean delay.  Below 1 means the lottery is discounted harder, i.e.
    aversion to timing risk."""
    comps = timing_components(spec, params)
    u_tr = utility(comps.e_tr, comps.delta_total, params)
    u_fix = discount_factor(HazardSpec(spec.p, mean_delay(spec)), params)
    return u_tr / u_fix


def dual_surprise(spec: DualRiskSpec, params: ModelParams) -> float:
    """Total surprise of the dual-risk option under the given scheme.

    SEPARATE_AFTER: every chain jump is scaled by p_pr (so chain surprise
    by p_pr**alpha) and the final success gamble, reached with
    probability q**n, adds its single-stage surprise.

    SEPARATE_BEFORE: the success gamble comes first, over jumps of size
    scaled by q**n (surprise factor q**(n*alpha)); the chain is then an
    ordinary one reached with probability p_pr.  Note the q**(n*(alpha-1))
    rescaling relative to SEPARATE_AFTER's q**n factor: resolving first
    makes the later gamble's jumps full-sized but the earlier gamble's
    jumps small.  (An alternative reading with a q**(alpha-1) prior
    factor disagrees with exhaustive tree evaluation; the tree wins.)

    INCORPORATED: plain chain at the inflated hazard p'.
    """
    a = params.alpha
    q = 1.0 - spec.p
    base = HazardSpec(spec.p, spec.n)
    if spec.scheme is DualScheme.SEPARATE_AFTER:
        return spec.p_pr**a * hazard_total_surprise(base, params) + q**spec.n * prob_only_surprise(
            spec.p_pr, params
        )
    if spec.scheme is DualScheme.SEPARATE_BEFORE:
        return spec.p_pr * hazard_total_surprise(base, params) + q ** (
            spec.n * a
        ) * prob_only_surprise(spec.p_pr, params)
    return hazard_total_surprise(HazardSpec(spec.inflated_hazard(), spec.n), params)


def discount_ratio(spec: DualRiskSpec, params: ModelParams) -> float:
    """D = U_pt / (U_p * U_t): does adding the success probability soften
    (D > 1) or sharpen (D < 1) the discount attributed to the delay?

    U_pt values the dual option (expected value p_pr * q**n), U_t the
    delay-only option, and U_p the probability-only gamble, the last with
    k2 replaced by the spec's k2_prob.
    """
    q = 1.0 - spec.p
    u_pt = utility(spec.p_pr * q**spec.n, dual_surprise(spec, params), params)
    u_t = discount_factor(HazardSpec(spec.p, spec.n), params)
    p_params = params.with_k2(spec.k2_prob)
    u_p = utility(spec.p_pr, prob_only_surprise(spec.p_pr, p_params), p_params)
    return u_pt / (u_p * u_t)


def modulation(delta: float, params: ModelParams) -> float:
    """Re-export of the core correction g, for callers composing ratios."""
    return surprise_modulation(delta, params)
