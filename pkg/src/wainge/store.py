"""Persistent assessment sessions.

A session is a self-contained JSON document (extension ``.wainge.json``)
embedding its taxonomy, elicitation data, config and an optional cached
result. Serialization is canonical: fixed key order, UTF-8, two-space
indentation, floats in shortest round-trip form, one trailing newline.
Loading a file and saving it back is therefore byte-identical.

Commits use optimistic concurrency: every committed mutation must name
the revision it was based on, bumps it by exactly one, refreshes
``updated_at`` and clears any cached result.
"""

from __future__ import annotations

import json
import re
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional, Union

from .elicitation import (
    AttitudeResponse,
    Problem,
    QuestionResponse,
    _check_session_integrity,
    evaluate_session,
)
from .engine import DecisionResult, ModelConfig, Recommendation
from .errors import (
    ConflictError,
    IntegrityError,
    MigrationError,
    RangeError,
    TaxonomyValidationError,
    WaingeError,
)
from .taxonomy import Category, RiskFactor, Taxonomy, validate_taxonomy

SCHEMA_VERSION = 1
FILE_SUFFIX = ".wainge.json"

_SAFE_ID = re.compile(r"^[A-Za-z0-9_-]+$")


@dataclass
class TeamMember:
    member_id: str
    name: str
    role: str = ""


@dataclass
class WeightOverride:
    factor_id: str
    weight: float


@dataclass
class AssessmentSession:
    """The persistent document tying a whole assessment together."""

    id: str
    title: str
    created_at: str
    updated_at: str
    taxonomy: Taxonomy
    schema_version: int = SCHEMA_VERSION
    revision: int = 0
    problems: list[Problem] = field(default_factory=list)
    team: list[TeamMember] = field(default_factory=list)
    responses: list[QuestionResponse] = field(default_factory=list)
    weight_overrides: list[WeightOverride] = field(default_factory=list)
    attitudes: list[AttitudeResponse] = field(default_factory=list)
    ava_override: Optional[float] = None
    agile_candidate: Optional[str] = None
    non_agile_candidate: Optional[str] = None
    config: ModelConfig = field(default_factory=ModelConfig)
    cached_result: Optional[DecisionResult] = None


def now_utc() -> str:
    """Current UTC time in the canonical RFC 3339 form used by documents."""
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")


def generate_id() -> str:
    return secrets.token_hex(16)


def new_session(title: str, taxonomy: Taxonomy, session_id: Optional[str] = None) -> AssessmentSession:
    """Create an empty session over a validated taxonomy at revision 0."""
    violations = validate_taxonomy(taxonomy)
    if violations:
        raise TaxonomyValidationError(violations)
    stamp = now_utc()
    return AssessmentSession(
        id=session_id or generate_id(),
        title=title,
        created_at=stamp,
        updated_at=stamp,
        taxonomy=taxonomy,
    )


# ---------------------------------------------------------------------------
# document construction (fixed key order = canonical form)
# ---------------------------------------------------------------------------


def taxonomy_to_doc(taxonomy: Taxonomy) -> dict:
    return {
        "name": taxonomy.name,
        "factors": [
            {
                "id": f.id,
                "description": f.description,
                "category": f.category.value,
                "intrinsic_risk": float(f.intrinsic_risk),
                "source": f.source,
            }
            for f in taxonomy.factors
        ],
    }


def config_to_doc(config: ModelConfig) -> dict:
    return {
        "log_base": float(config.log_base),
        "threshold": float(config.threshold),
        "borderline_margin": float(config.borderline_margin),
        "clamp_dec": config.clamp_dec,
    }


def result_to_doc(result: DecisionResult) -> dict:
    return {
        "osr": result.osr,
        "maf": result.maf,
        "dec": result.dec,
        "recommendation": result.recommendation.value,
        "borderline": result.borderline,
        "clamped": result.clamped,
        "warnings": list(result.warnings),
        "config_snapshot": config_to_doc(result.config_snapshot),
    }


def sensitivity_to_doc(report, factor_ids) -> dict:
    """Serialize a SensitivityReport, pairing gradient entries with factor ids."""
    return {
        "gradient": [
            {"factor_id": factor_id, "value": value}
            for factor_id, value in zip(factor_ids, report.gradient)
        ],
        "tornado": [
            {
                "factor_id": t.factor_id,
                "dec_at_w0": t.dec_at_w0,
                "dec_at_w1": t.dec_at_w1,
                "swing": t.swing,
            }
            for t in report.tornado
        ],
        "threshold_ava": report.threshold_ava,
        "warnings": list(report.warnings),
    }


def session_to_doc(session: AssessmentSession) -> dict:
    return {
        "schema_version": session.schema_version,
        "id": session.id,
        "title": session.title,
        "created_at": session.created_at,
        "updated_at": session.updated_at,
        "revision": session.revision,
        "taxonomy": taxonomy_to_doc(session.taxonomy),
        "problems": [{"id": p.id, "statement": p.statement} for p in session.problems],
        "team": [
            {"member_id": m.member_id, "name": m.name, "role": m.role}
            for m in session.team
        ],
        "responses": [
            {
                "factor_id": r.factor_id,
                "problem_id": r.problem_id,
                "weight": float(r.weight),
                "respondent_id": r.respondent_id,
                "note": r.note,
            }
            for r in session.responses
        ],
        "weight_overrides": [
            {"factor_id": o.factor_id, "weight": float(o.weight)}
            for o in session.weight_overrides
        ],
        "attitudes": [
            {"member_id": a.member_id, "ava": float(a.ava)} for a in session.attitudes
        ],
        "ava_override": (
            float(session.ava_override) if session.ava_override is not None else None
        ),
        "agile_candidate": session.agile_candidate,
        "non_agile_candidate": session.non_agile_candidate,
        "config": config_to_doc(session.config),
        "cached_result": (
            result_to_doc(session.cached_result)
            if session.cached_result is not None
            else None
        ),
    }


def dumps_session(session: AssessmentSession) -> str:
    """Canonical text form of a session document."""
    return json.dumps(session_to_doc(session), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# document parsing
# ---------------------------------------------------------------------------


class _DocReader:
    """Collects type/shape offenders while pulling fields out of a dict."""

    def __init__(self, doc: dict, context: str = "document"):
        self.doc = doc
        self.context = context
        self.offenders: list[str] = []

    def fail(self, message: str) -> None:
        self.offenders.append(message)

    def text(self, key: str, required: bool = True, default: str = "") -> str:
        value = self.doc.get(key)
        if value is None:
            if required:
                self.fail(f"{self.context}: missing field {key!r}")
            return default
        if not isinstance(value, str):
            self.fail(f"{self.context}: field {key!r} must be a string")
            return default
        return value

    def opt_text(self, key: str) -> Optional[str]:
        value = self.doc.get(key)
        if value is None:
            return None
        if not isinstance(value, str):
            self.fail(f"{self.context}: field {key!r} must be a string or null")
            return None
        return value

    def number(self, key: str, default: float = 0.0) -> float:
        value = self.doc.get(key)
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
        self.fail(f"{self.context}: field {key!r} must be a number")
        return default

    def opt_number(self, key: str) -> Optional[float]:
        value = self.doc.get(key)
        if value is None:
            return None
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
        self.fail(f"{self.context}: field {key!r} must be a number or null")
        return None

    def integer(self, key: str, default: int = 0) -> int:
        value = self.doc.get(key)
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        self.fail(f"{self.context}: field {key!r} must be an integer")
        return default

    def boolean(self, key: str, default: bool = False) -> bool:
        value = self.doc.get(key)
        if isinstance(value, bool):
            return value
        self.fail(f"{self.context}: field {key!r} must be a boolean")
        return default

    def items(self, key: str) -> list:
        value = self.doc.get(key, [])
        if not isinstance(value, list):
            self.fail(f"{self.context}: field {key!r} must be a list")
            return []
        bad = [v for v in value if not isinstance(v, dict)]
        if bad:
            self.fail(f"{self.context}: field {key!r} must contain objects")
            return []
        return value


def taxonomy_from_doc(doc: Any) -> Taxonomy:
    if not isinstance(doc, dict):
        raise IntegrityError(["taxonomy must be an object"])
    reader = _DocReader(doc, "taxonomy")
    name = reader.text("name")
    factors: list[RiskFactor] = []
    for i, item in enumerate(reader.items("factors")):
        fr = _DocReader(item, f"taxonomy factor #{i + 1}")
        factor_id = fr.text("id")
        description = fr.text("description")
        category_text = fr.text("category")
        try:
            category = Category(category_text)
        except ValueError:
            fr.fail(
                f"taxonomy factor {factor_id or i + 1}: "
                f"unknown category {category_text!r}"
            )
            category = Category.INTRINSIC_TO_AGILE
        risk = fr.number("intrinsic_risk", default=1.0)
        source = fr.opt_text("source")
        reader.offenders.extend(fr.offenders)
        factors.append(
            RiskFactor(
                id=factor_id,
                description=description,
                category=category,
                intrinsic_risk=risk,
                source=source,
            )
        )
    if reader.offenders:
        raise IntegrityError(reader.offenders)
    return Taxonomy(name=name, factors=tuple(factors))


def config_from_doc(doc: Any) -> ModelConfig:
    if not isinstance(doc, dict):
        raise IntegrityError(["config must be an object"])
    reader = _DocReader(doc, "config")
    log_base = reader.number("log_base", default=10.0)
    threshold = reader.number("threshold", default=0.5)
    margin = reader.number("borderline_margin", default=0.05)
    clamp = reader.boolean("clamp_dec", default=True)
    if reader.offenders:
        raise IntegrityError(reader.offenders)
    try:
        return ModelConfig(
            log_base=log_base,
            threshold=threshold,
            borderline_margin=margin,
            clamp_dec=clamp,
        )
    except RangeError as exc:
        raise IntegrityError([f"config: {exc}"]) from exc


def result_from_doc(doc: Any) -> DecisionResult:
    if not isinstance(doc, dict):
        raise IntegrityError(["cached_result must be an object or null"])
    reader = _DocReader(doc, "cached_result")
    osr = reader.number("osr")
    maf = reader.number("maf")
    dec = reader.number("dec")
    rec_text = reader.text("recommendation")
    try:
        recommendation = Recommendation(rec_text)
    except ValueError:
        reader.fail(f"cached_result: unknown recommendation {rec_text!r}")
        recommendation = Recommendation.AGILE_VIABLE
    borderline = reader.boolean("borderline")
    clamped = reader.boolean("clamped")
    warnings_value = doc.get("warnings", [])
    if not isinstance(warnings_value, list) or any(
        not isinstance(w, str) for w in warnings_value
    ):
        reader.fail("cached_result: field 'warnings' must be a list of strings")
        warnings_value = []
    if reader.offenders:
        raise IntegrityError(reader.offenders)
    return DecisionResult(
        osr=osr,
        maf=maf,
        dec=dec,
        recommendation=recommendation,
        borderline=borderline,
        clamped=clamped,
        warnings=tuple(warnings_value),
        config_snapshot=config_from_doc(doc.get("config_snapshot")),
    )


_SESSION_KEYS = {
    "schema_version",
    "id",
    "title",
    "created_at",
    "updated_at",
    "revision",
    "taxonomy",
    "problems",
    "team",
    "responses",
    "weight_overrides",
    "attitudes",
    "ava_override",
    "agile_candidate",
    "non_agile_candidate",
    "config",
    "cached_result",
}


def _check_timestamp(value: str, key: str, offenders: list[str]) -> None:
    try:
        datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError:
        offenders.append(f"field {key!r} is not an RFC 3339 timestamp: {value!r}")


def session_from_doc(doc: Any) -> AssessmentSession:
    """Parse and fully validate a session document.

    Raises MigrationError for unknown schema versions and IntegrityError
    (listing every offender) for structural, referential, range or
    cached-result staleness violations.
    """
    if not isinstance(doc, dict):
        raise IntegrityError(["session document must be a JSON object"])
    version = doc.get("schema_version")
    if not isinstance(version, int) or isinstance(version, bool):
        raise IntegrityError(["field 'schema_version' must be an integer"])
    if version != SCHEMA_VERSION:
        raise MigrationError(
            f"unsupported schema_version {version}; this build reads version {SCHEMA_VERSION}"
        )

    offenders: list[str] = [
        f"unknown field {key!r}" for key in sorted(set(doc) - _SESSION_KEYS)
    ]
    reader = _DocReader(doc, "session")
    session_id = reader.text("id")
    title = reader.text("title", required=False)
    created_at = reader.text("created_at")
    updated_at = reader.text("updated_at")
    revision = reader.integer("revision")
    offenders.extend(reader.offenders)
    if created_at:
        _check_timestamp(created_at, "created_at", offenders)
    if updated_at:
        _check_timestamp(updated_at, "updated_at", offenders)
    if revision < 0:
        offenders.append(f"field 'revision' must be >= 0, got {revision}")

    try:
        taxonomy = taxonomy_from_doc(doc.get("taxonomy"))
    except IntegrityError as exc:
        offenders.extend(exc.offenders)
        taxonomy = Taxonomy(name="", factors=())
    else:
        offenders.extend(str(v) for v in validate_taxonomy(taxonomy))

    problems: list[Problem] = []
    for i, item in enumerate(reader.items("problems")):
        pr = _DocReader(item, f"problem #{i + 1}")
        problem = Problem(id=pr.text("id"), statement=pr.text("statement"))
        offenders.extend(pr.offenders)
        if problem.id and not problem.statement.strip():
            offenders.append(f"problem {problem.id}: statement is empty")
        problems.append(problem)
    problem_ids = [p.id for p in problems]
    if len(problem_ids) != len(set(problem_ids)):
        offenders.append("duplicate problem ids")

    team: list[TeamMember] = []
    for i, item in enumerate(reader.items("team")):
        tr = _DocReader(item, f"team member #{i + 1}")
        team.append(
            TeamMember(
                member_id=tr.text("member_id"),
                name=tr.text("name", required=False),
                role=tr.text("role", required=False),
            )
        )
        offenders.extend(tr.offenders)

    responses: list[QuestionResponse] = []
    for i, item in enumerate(reader.items("responses")):
        rr = _DocReader(item, f"response #{i + 1}")
        response = QuestionResponse(
            factor_id=rr.text("factor_id"),
            problem_id=rr.text("problem_id"),
            weight=rr.number("weight"),
            respondent_id=rr.opt_text("respondent_id"),
            note=rr.opt_text("note"),
        )
        offenders.extend(rr.offenders)
        if not 0.0 <= response.weight <= 1.0:
            offenders.append(
                f"response #{i + 1}: weight {response.weight!r} outside [0, 1]"
            )
        responses.append(response)

    overrides: list[WeightOverride] = []
    for i, item in enumerate(reader.items("weight_overrides")):
        orr = _DocReader(item, f"weight override #{i + 1}")
        override = WeightOverride(
            factor_id=orr.text("factor_id"), weight=orr.number("weight")
        )
        offenders.extend(orr.offenders)
        if not 0.0 <= override.weight <= 1.0:
            offenders.append(
                f"weight override {override.factor_id}: "
                f"weight {override.weight!r} outside [0, 1]"
            )
        overrides.append(override)
    override_ids = [o.factor_id for o in overrides]
    if len(override_ids) != len(set(override_ids)):
        offenders.append("duplicate weight overrides for the same factor")

    attitudes: list[AttitudeResponse] = []
    for i, item in enumerate(reader.items("attitudes")):
        ar = _DocReader(item, f"attitude #{i + 1}")
        attitude = AttitudeResponse(member_id=ar.text("member_id"), ava=ar.number("ava"))
        offenders.extend(ar.offenders)
        if not 0.0 <= attitude.ava <= 1.0:
            offenders.append(
                f"attitude for {attitude.member_id}: ava {attitude.ava!r} outside [0, 1]"
            )
        attitudes.append(attitude)

    ava_override = reader.opt_number("ava_override")
    if ava_override is not None and not 0.0 <= ava_override <= 1.0:
        offenders.append(f"ava_override {ava_override!r} outside [0, 1]")
    agile_candidate = reader.opt_text("agile_candidate")
    non_agile_candidate = reader.opt_text("non_agile_candidate")
    offenders.extend(o for o in reader.offenders if o not in offenders)

    config = ModelConfig()
    if doc.get("config") is not None:
        try:
            config = config_from_doc(doc["config"])
        except IntegrityError as exc:
            offenders.extend(exc.offenders)

    cached_result: Optional[DecisionResult] = None
    if doc.get("cached_result") is not None:
        try:
            cached_result = result_from_doc(doc["cached_result"])
        except IntegrityError as exc:
            offenders.extend(exc.offenders)

    session = AssessmentSession(
        id=session_id,
        title=title,
        created_at=created_at,
        updated_at=updated_at,
        taxonomy=taxonomy,
        revision=revision,
        problems=problems,
        team=team,
        responses=responses,
        weight_overrides=overrides,
        attitudes=attitudes,
        ava_override=ava_override,
        agile_candidate=agile_candidate,
        non_agile_candidate=non_agile_candidate,
        config=config,
        cached_result=cached_result,
    )

    if not offenders:
        try:
            _check_session_integrity(session)
        except IntegrityError as exc:
            offenders.extend(exc.offenders)
    if not offenders and cached_result is not None:
        try:
            fresh = evaluate_session(session)
        except WaingeError as exc:
            offenders.append(f"cached_result present but session cannot be evaluated: {exc}")
        else:
            if fresh != cached_result:
                offenders.append("cached_result is stale; it does not match a fresh evaluation")
    if offenders:
        raise IntegrityError(offenders)
    return session


def loads_session(text: str) -> AssessmentSession:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IntegrityError([f"document is not valid JSON: {exc}"]) from exc
    return session_from_doc(doc)


def save_session(session: AssessmentSession, destination: Union[str, Path]) -> Path:
    """Write the canonical form; validates invariants before touching disk."""
    session_from_doc(session_to_doc(session))
    path = Path(destination)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_session(session), encoding="utf-8")
    return path


def load_session(source: Union[str, Path]) -> AssessmentSession:
    return loads_session(Path(source).read_text(encoding="utf-8"))


def apply_commit(
    stored: AssessmentSession,
    updated: AssessmentSession,
    expected_revision: int,
) -> AssessmentSession:
    """Full-document replacement under an optimistic revision check.

    The caller edits a copy of the stored session and commits it against
    the revision it loaded. On success the returned document keeps the
    stored identity and creation time, carries revision + 1, a fresh
    ``updated_at``, and no cached result.
    """
    if stored.revision != expected_revision:
        raise ConflictError(
            f"revision conflict: expected {expected_revision}, "
            f"store has {stored.revision}; reload and retry"
        )
    if updated.id != stored.id:
        raise IntegrityError(
            [f"commit changes session id from {stored.id!r} to {updated.id!r}"]
        )
    return AssessmentSession(
        id=stored.id,
        title=updated.title,
        created_at=stored.created_at,
        updated_at=now_utc(),
        taxonomy=updated.taxonomy,
        revision=stored.revision + 1,
        problems=list(updated.problems),
        team=list(updated.team),
        responses=list(updated.responses),
        weight_overrides=list(updated.weight_overrides),
        attitudes=list(updated.attitudes),
        ava_override=updated.ava_override,
        agile_candidate=updated.agile_candidate,
        non_agile_candidate=updated.non_agile_candidate,
        config=updated.config,
        cached_result=None,
    )


class SessionStore:
    """Directory-backed session store, one canonical file per session id.

    Commits are serialized process-wide by a lock plus the revision
    check, so concurrent writers conflict loudly instead of losing
    updates. Reads always see the last committed state. Evaluation
    results are memoized per (id, revision); any commit bumps the
    revision, so the memo can never serve a stale result.
    """

    def __init__(self, root: Union[str, Path]):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        self._results: dict[tuple[str, int], DecisionResult] = {}

    def path_for(self, session_id: str) -> Path:
        if not _SAFE_ID.match(session_id or ""):
            raise IntegrityError(
                [f"session id {session_id!r} is not storable (use [A-Za-z0-9_-])"]
            )
        return self.root / f"{session_id}{FILE_SUFFIX}"

    def ids(self) -> list[str]:
        return sorted(
            p.name[: -len(FILE_SUFFIX)]
            for p in self.root.glob(f"*{FILE_SUFFIX}")
            if p.is_file()
        )

    def exists(self, session_id: str) -> bool:
        return self.path_for(session_id).exists()

    def get(self, session_id: str) -> AssessmentSession:
        path = self.path_for(session_id)
        if not path.exists():
            raise KeyError(session_id)
        return load_session(path)

    def create(self, session: AssessmentSession) -> AssessmentSession:
        with self._lock:
            path = self.path_for(session.id)
            if path.exists():
                raise ConflictError(f"session {session.id!r} already exists")
            save_session(session, path)
        return session

    def commit(
        self, updated: AssessmentSession, expected_revision: int
    ) -> AssessmentSession:
        with self._lock:
            stored = self.get(updated.id)
            committed = apply_commit(stored, updated, expected_revision)
            save_session(committed, self.path_for(committed.id))
        return committed

    def result_for(self, session: AssessmentSession) -> DecisionResult:
        if session.cached_result is not None:
            return session.cached_result
        key = (session.id, session.revision)
        result = self._results.get(key)
        if result is None:
            result = evaluate_session(session)
            self._results[key] = result
        return result
