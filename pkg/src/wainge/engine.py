"""Core scoring model and sensitivity analytics.

The model turns per-factor weights w_k, intrinsic risks r_k and a team
attitude value (AVA) into three numbers:

    OSR = (sum of w_k * r_k) / n            overall specific risk
    MAF = log((0.5 + AVA) / (1.5 - AVA)) * min(|OSR|, |1 - OSR|)
    DEC = OSR + MAF                          final decisional value

AVA = 0.5 is a neutral attitude (MAF vanishes); an Agile-skeptical team
(AVA < 0.5) pulls DEC down, an enthusiastic one pushes it up. A DEC above
the configured threshold (default 0.5) classifies Agile adoption as overly
risky. With the default base-10 logarithm, |MAF| < min(OSR, 1 - OSR), so
DEC always stays inside [0, 1].

All operations are pure functions of their arguments.
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DomainError, RangeError, UnknownFactorError


class Recommendation(str, Enum):
    AGILE_VIABLE = "AgileViable"
    AGILE_RISKY = "AgileRisky"


class KinkWarning(UserWarning):
    """The gradient was requested at OSR = 0.5, where min(OSR, 1-OSR) kinks."""


@dataclass(frozen=True)
class ModelConfig:
    """Tunable model parameters.

    ``log_base`` defaults to 10, which keeps |MAF| strictly below
    min(OSR, 1-OSR) and therefore DEC inside [0, 1] without clamping.
    ``clamp_dec`` guards other bases (e.g. the natural log) that can push
    DEC marginally outside the unit interval.
    """

    log_base: float = 10.0
    threshold: float = 0.5
    borderline_margin: float = 0.05
    clamp_dec: bool = True

    def __post_init__(self) -> None:
        if not self.log_base > 1.0:
            raise RangeError(f"log_base must be > 1, got {self.log_base!r}")
        if not 0.0 <= self.threshold <= 1.0:
            raise RangeError(f"threshold {self.threshold!r} outside [0, 1]")
        if self.borderline_margin < 0.0:
            raise RangeError(
                f"borderline_margin must be >= 0, got {self.borderline_margin!r}"
            )


DEFAULT_CONFIG = ModelConfig()


@dataclass(frozen=True)
class ScoreEntry:
    """One factor's contribution: elicited weight and intrinsic risk."""

    factor_id: str
    weight: float
    risk: float = 1.0


@dataclass(frozen=True)
class ScoreInput:
    """Everything the model needs: ordered factor entries plus the AVA.

    Entry order must match the taxonomy order; it defines the factor
    indices reported by the sensitivity operations.
    """

    entries: tuple[ScoreEntry, ...]
    ava: float

    @property
    def n(self) -> int:
        return len(self.entries)

    def index_of(self, factor_id: str) -> int:
        for i, e in enumerate(self.entries):
            if e.factor_id == factor_id:
                return i
        raise UnknownFactorError(f"unknown factor id {factor_id!r}")


@dataclass(frozen=True)
class DecisionResult:
    osr: float
    maf: float
    dec: float
    recommendation: Recommendation
    borderline: bool
    clamped: bool
    warnings: tuple[str, ...]
    config_snapshot: ModelConfig


@dataclass(frozen=True)
class TornadoEntry:
    """DEC at the two weight extremes of one factor, others held fixed."""

    factor_id: str
    dec_at_w0: float
    dec_at_w1: float
    swing: float


@dataclass(frozen=True)
class SensitivityReport:
    gradient: tuple[float, ...]
    tornado: tuple[TornadoEntry, ...]
    threshold_ava: Optional[float]
    warnings: tuple[str, ...] = ()


def _check_unit(value: float, label: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise RangeError(f"{label} {value!r} outside [0, 1]")


def _log(x: float, base: float) -> float:
    if base == 10.0:
        return math.log10(x)
    if base == math.e:
        return math.log(x)
    return math.log(x) / math.log(base)


def _attitude_log(ava: float, config: ModelConfig) -> float:
    return _log((0.5 + ava) / (1.5 - ava), config.log_base)


def compute_osr(score_input: ScoreInput) -> float:
    """Overall specific risk: the r-weighted mean of the factor weights."""
    if score_input.n == 0:
        raise DomainError("taxonomy has no factors")
    for e in score_input.entries:
        if not 0.0 <= e.weight <= 1.0:
            raise RangeError(
                f"factor {e.factor_id}: weight {e.weight!r} outside [0, 1]"
            )
        if not 0.0 <= e.risk <= 1.0:
            raise RangeError(
                f"factor {e.factor_id}: intrinsic risk {e.risk!r} outside [0, 1]"
            )
    return math.fsum(e.weight * e.risk for e in score_input.entries) / score_input.n


def compute_maf(ava: float, osr: float, config: ModelConfig = DEFAULT_CONFIG) -> float:
    """Mitigation-amplification factor for a given attitude and risk level.

    Zero when the attitude is neutral (AVA = 0.5) or when OSR sits at
    either end of the unit interval; negative for Agile-skeptical teams,
    positive for enthusiastic ones.
    """
    _check_unit(ava, "ava")
    _check_unit(osr, "osr")
    return _attitude_log(ava, config) * min(abs(osr), abs(1.0 - osr))


def compute_dec(
    osr: float, maf: float, config: ModelConfig = DEFAULT_CONFIG
) -> tuple[float, bool]:
    """Final decisional value OSR + MAF, optionally clipped into [0, 1].

    Returns (dec, clamped); the flag is True only when clipping changed
    the value, which cannot happen under the default base-10 logarithm.
    """
    _check_unit(osr, "osr")
    dec = osr + maf
    if config.clamp_dec:
        clipped = min(1.0, max(0.0, dec))
        return clipped, clipped != dec
    return dec, False


def classify(
    dec: float, config: ModelConfig = DEFAULT_CONFIG
) -> tuple[Recommendation, bool]:
    """Apply the decision threshold: risky iff DEC strictly exceeds it.

    The borderline flag marks values within ``borderline_margin`` of the
    threshold on either side.
    """
    recommendation = (
        Recommendation.AGILE_RISKY
        if dec > config.threshold
        else Recommendation.AGILE_VIABLE
    )
    borderline = abs(dec - config.threshold) <= config.borderline_margin
    return recommendation, borderline


def evaluate(
    score_input: ScoreInput,
    config: ModelConfig = DEFAULT_CONFIG,
    warnings: Iterable[str] = (),
) -> DecisionResult:
    """Run the full model and classification over one input.

    ``warnings`` lets callers thread elicitation-layer notes (such as
    defaulted weights) into the result.
    """
    osr = compute_osr(score_input)
    maf = compute_maf(score_input.ava, osr, config)
    dec, clamped = compute_dec(osr, maf, config)
    recommendation, borderline = classify(dec, config)
    notes = list(warnings)
    if clamped:
        notes.append(f"DEC {osr + maf!r} clipped into [0, 1]")
    return DecisionResult(
        osr=osr,
        maf=maf,
        dec=dec,
        recommendation=recommendation,
        borderline=borderline,
        clamped=clamped,
        warnings=tuple(notes),
        config_snapshot=config,
    )


_KINK_MESSAGE = (
    "OSR is exactly 0.5, where min(OSR, 1-OSR) is not differentiable; "
    "the gradient uses the OSR > 0.5 branch"
)


def gradient(
    score_input: ScoreInput, config: ModelConfig = DEFAULT_CONFIG
) -> list[float]:
    """Analytic per-factor derivative of DEC with respect to each weight.

    d(DEC)/d(w_k) = (r_k / n) * (1 + s * L) with L the attitude log-ratio
    and s = +1 below the OSR = 0.5 kink, -1 above it. At the kink itself
    the upper branch is returned and a KinkWarning is emitted.
    """
    osr = compute_osr(score_input)
    _check_unit(score_input.ava, "ava")
    if osr == 0.5:
        _warnings.warn(_KINK_MESSAGE, KinkWarning, stacklevel=2)
    s = 1.0 if osr < 0.5 else -1.0
    factor = 1.0 + s * _attitude_log(score_input.ava, config)
    n = score_input.n
    return [e.risk / n * factor for e in score_input.entries]


def tornado(
    score_input: ScoreInput, config: ModelConfig = DEFAULT_CONFIG
) -> list[TornadoEntry]:
    """One-at-a-time extremal sweep of every weight.

    Each factor's weight is set to 0 and to 1 with all other entries
    unchanged, and the model is re-run in full (no linearization across
    the OSR = 0.5 kink). Entries come back sorted by descending |swing|,
    ties keeping taxonomy order.
    """
    compute_osr(score_input)  # surface range/domain errors up front
    entries = list(score_input.entries)
    report = []
    for i, entry in enumerate(entries):
        decs = []
        for w in (0.0, 1.0):
            swept = entries.copy()
            swept[i] = replace(entry, weight=w)
            swept_input = ScoreInput(entries=tuple(swept), ava=score_input.ava)
            decs.append(evaluate(swept_input, config).dec)
        report.append(
            TornadoEntry(
                factor_id=entry.factor_id,
                dec_at_w0=decs[0],
                dec_at_w1=decs[1],
                swing=decs[1] - decs[0],
            )
        )
    report.sort(key=lambda t: -abs(t.swing))
    return report


def threshold_ava(
    score_input: ScoreInput, config: ModelConfig = DEFAULT_CONFIG
) -> Optional[float]:
    """The attitude value at which DEC crosses the decision threshold.

    DEC is strictly increasing in AVA while OSR lies strictly inside
    (0, 1), so the crossing is unique when it exists. Returns None when
    DEC stays on one side of the threshold over AVA in [0, 1], or when
    OSR is 0 or 1 (MAF is pinned at zero there).
    """
    osr = compute_osr(score_input)
    span = min(osr, 1.0 - osr)
    if span == 0.0:
        return None
    target = (config.threshold - osr) / span
    if abs(target) > _log(3.0, config.log_base):
        return None
    ratio = config.log_base**target
    ava = (1.5 * ratio - 0.5) / (1.0 + ratio)
    return min(1.0, max(0.0, ava))


def apply_overrides(
    score_input: ScoreInput,
    weights: Optional[Mapping[str, float]] = None,
    ava: Optional[float] = None,
) -> ScoreInput:
    """Return a copy of the input with selected weights and/or AVA replaced."""
    entries = list(score_input.entries)
    if weights:
        for factor_id, weight in weights.items():
            i = score_input.index_of(factor_id)
            if not 0.0 <= weight <= 1.0:
                raise RangeError(
                    f"factor {factor_id}: weight {weight!r} outside [0, 1]"
                )
            entries[i] = replace(entries[i], weight=float(weight))
    if ava is not None:
        _check_unit(ava, "ava")
    return ScoreInput(
        entries=tuple(entries),
        ava=float(ava) if ava is not None else score_input.ava,
    )


def whatif(
    score_input: ScoreInput,
    config: ModelConfig = DEFAULT_CONFIG,
    weights: Optional[Mapping[str, float]] = None,
    ava: Optional[float] = None,
) -> DecisionResult:
    """Evaluate the input under ephemeral overrides, leaving it untouched."""
    return evaluate(apply_overrides(score_input, weights=weights, ava=ava), config)


def sensitivity(
    score_input: ScoreInput, config: ModelConfig = DEFAULT_CONFIG
) -> SensitivityReport:
    """Bundle gradient, tornado sweep and threshold attitude into one report."""
    osr = compute_osr(score_input)
    notes: tuple[str, ...] = ()
    with _warnings.catch_warnings():
        _warnings.simplefilter("ignore", KinkWarning)
        grad = gradient(score_input, config)
    if osr == 0.5:
        notes = (_KINK_MESSAGE,)
    return SensitivityReport(
        gradient=tuple(grad),
        tornado=tuple(tornado(score_input, config)),
        threshold_ava=threshold_ava(score_input, config),
        warnings=notes,
    )


def score_input_from_weights(
    weights: Sequence[float],
    ava: float,
    risks: Optional[Sequence[float]] = None,
    factor_ids: Optional[Sequence[str]] = None,
) -> ScoreInput:
    """Convenience constructor for plain weight lists (mostly for tests/tools)."""
    n = len(weights)
    if risks is None:
        risks = [1.0] * n
    if factor_ids is None:
        factor_ids = [f"R{i:02d}" for i in range(1, n + 1)]
    entries = tuple(
        ScoreEntry(factor_id=fid, weight=float(w), risk=float(r))
        for fid, w, r in zip(factor_ids, weights, risks)
    )
    return ScoreInput(entries=entries, ava=float(ava))
