#!/usr/bin/env python3
"""Regenerate fixtures/ktp-2593.wainge.json in canonical form.

The fixture is the KTP 2593 case study: the full weight matrix entered as
explicit overrides, the negotiated team attitude of 0.4, and the two
candidate methods (FDD vs the Spiral Model).
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from wainge.elicitation import Problem
from wainge.store import (
    AssessmentSession,
    TeamMember,
    WeightOverride,
    save_session,
)
from wainge.engine import ModelConfig
from wainge.taxonomy import builtin_taxonomy

KTP_WEIGHTS = {
    "R01": 0.8,
    "R02": 0.8,
    "R03": 0.7,
    "R04": 0.8,
    "R05": 0.6,
    "R06": 0.5,
    "R07": 0.0,
    "R08": 0.0,
    "R09": 1.0,
    "R10": 0.0,
    "R11": 0.5,
    "R12": 0.8,
    "R13": 1.0,
    "R14": 0.6,
    "R15": 0.9,
    "R16": 0.8,
    "R17": 0.7,
    "R18": 0.3,
    "R19": 0.8,
}

PROBLEMS = [
    Problem(
        id="P1",
        statement=(
            "Moving the software out of customer premises and reducing the "
            "amount of expected customization by the supplier (IMC)"
        ),
    ),
    Problem(
        id="P2",
        statement=(
            "Improving the maintenance processes and making the software "
            "less platform-sensitive"
        ),
    ),
    Problem(
        id="P3",
        statement=(
            "Supporting customers in managing and accessing from everywhere "
            "their front-end GUI without affecting IMC overall control on "
            "server-side main functionalities and authorization processes"
        ),
    ),
]

TEAM = [
    TeamMember("m1", "Stakeholder 1", "Academic coordinator"),
    TeamMember("m2", "Stakeholder 2", "Academic supervisor"),
    TeamMember("m3", "Stakeholder 3", "Academic associate"),
    TeamMember("m4", "Stakeholder 4", "Company technical director"),
    TeamMember("m5", "Stakeholder 5", "Company supervisor"),
]

STAMP = "2011-06-30T12:00:00.000000Z"


def build() -> AssessmentSession:
    taxonomy = builtin_taxonomy()
    return AssessmentSession(
        id="ktp-2593",
        title="KTP No. 2593 development project",
        created_at=STAMP,
        updated_at=STAMP,
        taxonomy=taxonomy,
        revision=0,
        problems=list(PROBLEMS),
        team=list(TEAM),
        responses=[],
        weight_overrides=[
            WeightOverride(factor_id=f.id, weight=KTP_WEIGHTS[f.id])
            for f in taxonomy.factors
        ],
        attitudes=[],
        ava_override=0.4,
        agile_candidate="FDD",
        non_agile_candidate="Spiral Model",
        config=ModelConfig(),
        cached_result=None,
    )


def main() -> None:
    destination = Path(__file__).resolve().parents[1] / "fixtures" / "ktp-2593.wainge.json"
    save_session(build(), destination)
    print(f"wrote {destination}")


if __name__ == "__main__":
    main()
