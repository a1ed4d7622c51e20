"""Turning facilitation artifacts into model inputs.

A session collects project problems, conditional question responses per
(problem, factor) pair, and per-member attitude values. This module
renders the conditional questions, averages question weights into one
weight per factor, averages member attitudes into the team AVA, and
assembles the engine's ScoreInput.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .engine import DecisionResult, ModelConfig, ScoreEntry, ScoreInput, evaluate
from .errors import (
    AggregationError,
    ElicitationError,
    IntegrityError,
    RangeError,
)
from .taxonomy import RiskFactor

NEUTRAL_WEIGHT = 0.5


class Provenance(str, Enum):
    """How a factor's resolved weight was obtained."""

    AGGREGATED = "Aggregated"
    OVERRIDE = "Override"
    NEUTRAL_DEFAULT = "NeutralDefault"


@dataclass(frozen=True)
class Problem:
    """A project problem the risk factors are weighed against."""

    id: str
    statement: str


@dataclass(frozen=True)
class QuestionResponse:
    """An elicited weight for one (factor, problem) conditional question."""

    factor_id: str
    problem_id: str
    weight: float
    respondent_id: Optional[str] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class AttitudeResponse:
    """One team member's self-assessed attitude towards Agile in [0, 1]."""

    member_id: str
    ava: float


@dataclass(frozen=True)
class WeightEntry:
    factor_id: str
    weight: float
    provenance: Provenance


@dataclass(frozen=True)
class WeightVector:
    """Resolved per-factor weights, one entry per taxonomy factor, in order."""

    entries: tuple[WeightEntry, ...]

    def weight_of(self, factor_id: str) -> float:
        for e in self.entries:
            if e.factor_id == factor_id:
                return e.weight
        raise KeyError(factor_id)


ATTITUDE_QUESTION = "Would you describe yourself and your team as a supporter of Agile?"
ATTITUDE_SCALE = ("Absolutely not", "Absolutely yes")


def render_question(factor: RiskFactor, problem: Problem) -> str:
    """Phrase the conditional question for one (factor, problem) pair.

    The factor description gets its leading capital lowered and any
    trailing period stripped; the problem statement is inserted verbatim.
    """
    description = factor.description.strip()
    if description.endswith("."):
        description = description[:-1]
    if description:
        description = description[0].lower() + description[1:]
    return f"If {description}, then how could this affect {problem.statement}?"


def aggregate_factor_weight(
    responses: Sequence[QuestionResponse],
) -> tuple[float, Provenance]:
    """Average one factor's question responses into a single weight.

    No responses means no agreement: the neutral 0.5 default applies.
    The mean is computed exactly (rational arithmetic, one final
    rounding), so e.g. (1.0, 0.5, 0.9) yields exactly 0.8.
    """
    if not responses:
        return NEUTRAL_WEIGHT, Provenance.NEUTRAL_DEFAULT
    factor_ids = {r.factor_id for r in responses}
    if len(factor_ids) > 1:
        raise AggregationError(
            f"responses mix factors {sorted(factor_ids)}; aggregate one factor at a time"
        )
    for r in responses:
        if not 0.0 <= r.weight <= 1.0:
            raise RangeError(
                f"factor {r.factor_id}: response weight {r.weight!r} outside [0, 1]"
            )
    return float(statistics.mean(r.weight for r in responses)), Provenance.AGGREGATED


def aggregate_ava(attitudes: Sequence[AttitudeResponse]) -> float:
    """Team attitude: the plain average of member values.

    There is no neutral fallback for attitude; an empty list is an error.
    """
    if not attitudes:
        raise ElicitationError("no attitude responses")
    for a in attitudes:
        if not 0.0 <= a.ava <= 1.0:
            raise RangeError(f"member {a.member_id}: ava {a.ava!r} outside [0, 1]")
    return float(statistics.mean(a.ava for a in attitudes))


def _check_session_integrity(session) -> None:
    factor_ids = set(session.taxonomy.factor_ids())
    problem_ids = {p.id for p in session.problems}
    member_ids = {m.member_id for m in session.team}
    offenders: list[str] = []
    for r in session.responses:
        if r.factor_id not in factor_ids:
            offenders.append(f"response references unknown factor {r.factor_id!r}")
        if r.problem_id not in problem_ids:
            offenders.append(f"response references unknown problem {r.problem_id!r}")
        if r.respondent_id is not None and r.respondent_id not in member_ids:
            offenders.append(
                f"response references unknown team member {r.respondent_id!r}"
            )
    for o in session.weight_overrides:
        if o.factor_id not in factor_ids:
            offenders.append(f"weight override references unknown factor {o.factor_id!r}")
    for a in session.attitudes:
        if a.member_id not in member_ids:
            offenders.append(f"attitude references unknown team member {a.member_id!r}")
    if offenders:
        raise IntegrityError(offenders)


def resolve_weights(session) -> tuple[WeightVector, list[str]]:
    """Resolve one weight per taxonomy factor, with provenance.

    Precedence per factor: an explicit override wins; otherwise the mean
    of that factor's responses across all problems and respondents;
    otherwise the neutral 0.5 default, which also adds a warning naming
    the factor. Output order matches taxonomy order.
    """
    _check_session_integrity(session)
    overrides = {o.factor_id: o.weight for o in session.weight_overrides}
    by_factor: dict[str, list[QuestionResponse]] = {}
    for r in session.responses:
        by_factor.setdefault(r.factor_id, []).append(r)

    entries: list[WeightEntry] = []
    warnings: list[str] = []
    for factor in session.taxonomy.factors:
        if factor.id in overrides:
            weight = overrides[factor.id]
            if not 0.0 <= weight <= 1.0:
                raise RangeError(
                    f"factor {factor.id}: override weight {weight!r} outside [0, 1]"
                )
            entries.append(WeightEntry(factor.id, float(weight), Provenance.OVERRIDE))
            continue
        weight, provenance = aggregate_factor_weight(by_factor.get(factor.id, []))
        if provenance is Provenance.NEUTRAL_DEFAULT:
            warnings.append(
                f"no responses for factor {factor.id}; defaulted weight to 0.5"
            )
        entries.append(WeightEntry(factor.id, weight, provenance))
    return WeightVector(entries=tuple(entries)), warnings


def session_ava(session) -> float:
    """The session's attitude value: explicit override, else member average."""
    if session.ava_override is not None:
        if not 0.0 <= session.ava_override <= 1.0:
            raise RangeError(f"ava override {session.ava_override!r} outside [0, 1]")
        return float(session.ava_override)
    return aggregate_ava(session.attitudes)


def to_score_input(session) -> ScoreInput:
    """Assemble the engine input: resolved weights paired with intrinsic risks.

    Entries follow taxonomy order regardless of response insertion order.
    """
    weight_vector, _ = resolve_weights(session)
    entries = tuple(
        ScoreEntry(factor_id=factor.id, weight=entry.weight, risk=factor.intrinsic_risk)
        for factor, entry in zip(session.taxonomy.factors, weight_vector.entries)
    )
    return ScoreInput(entries=entries, ava=session_ava(session))


def evaluate_session(session, config: Optional[ModelConfig] = None) -> DecisionResult:
    """Resolve a session and run the model, threading resolution warnings.

    Uses the session's own config unless one is passed explicitly.
    """
    weight_vector, warnings = resolve_weights(session)
    entries = tuple(
        ScoreEntry(factor_id=factor.id, weight=entry.weight, risk=factor.intrinsic_risk)
        for factor, entry in zip(session.taxonomy.factors, weight_vector.entries)
    )
    score_input = ScoreInput(entries=entries, ava=session_ava(session))
    return evaluate(score_input, config or session.config, warnings=warnings)
