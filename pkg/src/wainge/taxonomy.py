"""Risk-factor taxonomies.

Ships the built-in WAINGE-19 taxonomy of issues that challenge the
suitability of adopting an Agile method, and validates custom taxonomies
before they are used for scoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Category(str, Enum):
    """Where a risk factor originates."""

    INTRINSIC_TO_AGILE = "IntrinsicToAgile"
    CONSULTANCY_CONFLICT = "ConsultancyConflict"
    ADJACENT_PROCESS = "AdjacentProcess"


@dataclass(frozen=True)
class RiskFactor:
    """A single issue challenging Agile suitability.

    ``intrinsic_risk`` is the factor's own risk value r in [0, 1]; by
    convention it defaults to 1 so only the elicited weight matters.
    """

    id: str
    description: str
    category: Category
    intrinsic_risk: float = 1.0
    source: Optional[str] = None


@dataclass(frozen=True)
class Taxonomy:
    """An ordered, immutable set of risk factors.

    Order is significant: it defines the factor indices k = 1..n used by
    the scoring engine and by every weight vector derived from it.
    """

    name: str
    factors: tuple[RiskFactor, ...]

    @property
    def n(self) -> int:
        return len(self.factors)

    def factor_ids(self) -> list[str]:
        return [f.id for f in self.factors]

    def by_id(self, factor_id: str) -> RiskFactor:
        for f in self.factors:
            if f.id == factor_id:
                return f
        raise KeyError(factor_id)


@dataclass(frozen=True)
class Violation:
    """One validation failure; ``factor_id`` is None for taxonomy-level issues."""

    factor_id: Optional[str]
    message: str

    def __str__(self) -> str:
        if self.factor_id is None:
            return self.message
        return f"{self.factor_id}: {self.message}"


_INTRINSIC = Category.INTRINSIC_TO_AGILE
_CONSULTANCY = Category.CONSULTANCY_CONFLICT
_ADJACENT = Category.ADJACENT_PROCESS

# (description, category, source) per factor, in canonical R01..R19 order.
_BUILTIN_ROWS: tuple[tuple[str, Category, Optional[str]], ...] = (
    (
        "The customer representative cannot be always available and present "
        "alongside the development process",
        _INTRINSIC,
        None,
    ),
    (
        "A final “weaker” (e.g., less complete than expected) User "
        "Acceptance Test is likely",
        _INTRINSIC,
        None,
    ),
    (
        "A less reliable initial prediction on time and budget is to be expected",
        _INTRINSIC,
        None,
    ),
    (
        "Documentation cannot to be considered and thoroughly prepared as a "
        "critical asset (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "An agile methodology, with its set of practices, as such, can be less "
        "flexible than expected by an agile approach overall (Turk et al., 2002; "
        "Yegge, 2006; Halliwell, 2008)",
        _INTRINSIC,
        "Turk et al., 2002; Yegge, 2006; Halliwell, 2008",
    ),
    (
        "Little experience and somehow more relaxed discipline in Agile could "
        "reflect negatively on project management (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "Limited or unsustainable support for distributed development "
        "environments is likely to occur (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "Outsourcing and/or subcontracting is likely to be more difficult to "
        "manage (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "Limited support and/or opportunities for building reusable artifacts "
        "is likely to occur (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "Limited or unsustainable support for development involving large teams "
        "is likely to occur (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "Limited supported for developing safety-critical software is likely to "
        "occur (Turk et al., 2002)",
        _INTRINSIC,
        "Turk et al., 2002",
    ),
    (
        "Limited support for developing large, complex software is likely to "
        "occur (Turk et al., 2002; Dybå and Dingsøy, 2008)",
        _CONSULTANCY,
        "Turk et al., 2002; Dybå and Dingsøy, 2008",
    ),
    (
        "The lack of focus on architecture is bound to engender suboptimal "
        "design-decisions (Dybå and Dingsøy, 2008)",
        _INTRINSIC,
        "Dybå and Dingsøy, 2008",
    ),
    (
        "Because of social values embraced by Agile, decision making can be "
        "less effective than expected (Dybå and Dingsøy, 2008)",
        _INTRINSIC,
        "Dybå and Dingsøy, 2008",
    ),
    (
        "Agile developers/consultants might not be around for long "
        "(Halliwell, 2008)",
        _CONSULTANCY,
        "Halliwell, 2008",
    ),
    (
        "Agile methods could tackle only the “trivial” part of a "
        "project and leave behind the tricky, hard ones (Halliwell, 2008)",
        _INTRINSIC,
        "Halliwell, 2008",
    ),
    (
        "Development process and outcomes could depend on the quality of the "
        "hiring process (people are more important than processes and tools) "
        "(Halliwell, 2008)",
        _ADJACENT,
        "Halliwell, 2008",
    ),
    (
        "Adaptive planning could be “practically” (for instance, when "
        "responding to a change) translated into no long-term planning "
        "(Halliwell, 2008)",
        _INTRINSIC,
        "Halliwell, 2008",
    ),
    (
        "Planning poker, as a variation of Wideband Delphi (Boehm, 1981), and "
        "other distributed decision-making strategies could be affected (both "
        "unwillingly or otherwise) by individuals who are not focused on the "
        "actual development",
        _ADJACENT,
        "Tørresdal, 2007",
    ),
)

BUILTIN_NAME = "WAINGE-19"

_BUILTIN = Taxonomy(
    name=BUILTIN_NAME,
    factors=tuple(
        RiskFactor(
            id=f"R{i:02d}",
            description=description,
            category=category,
            intrinsic_risk=1.0,
            source=source,
        )
        for i, (description, category, source) in enumerate(_BUILTIN_ROWS, start=1)
    ),
)


def builtin_taxonomy() -> Taxonomy:
    """Return the built-in 19-factor WAINGE-19 taxonomy.

    The value is constant: every call returns the same immutable object.
    """
    return _BUILTIN


def validate_taxonomy(taxonomy: Taxonomy) -> list[Violation]:
    """Check a taxonomy against its invariants.

    Returns a list of violations, one per failed invariant; an empty list
    means the taxonomy is valid. Never raises.
    """
    violations: list[Violation] = []
    if taxonomy.n < 1:
        violations.append(Violation(None, "taxonomy has no factors"))
    seen: set[str] = set()
    for f in taxonomy.factors:
        if not f.id:
            violations.append(Violation(None, "factor id is empty"))
        elif f.id in seen:
            violations.append(Violation(f.id, "duplicate factor id"))
        else:
            seen.add(f.id)
        if not f.description or not f.description.strip():
            violations.append(Violation(f.id, "description is empty"))
        if not isinstance(f.category, Category):
            violations.append(Violation(f.id, f"unknown category {f.category!r}"))
        if not 0.0 <= f.intrinsic_risk <= 1.0:
            violations.append(
                Violation(
                    f.id,
                    f"intrinsic_risk {f.intrinsic_risk!r} outside [0, 1]",
                )
            )
    return violations
