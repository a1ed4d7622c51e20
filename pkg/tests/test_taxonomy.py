from dataclasses import replace

from wainge.taxonomy import (
    Category,
    RiskFactor,
    Taxonomy,
    builtin_taxonomy,
    validate_taxonomy,
)

INTRINSIC_IDS = {
    "R01", "R02", "R03", "R04", "R05", "R06", "R07", "R08", "R09", "R10",
    "R11", "R13", "R14", "R16", "R18",
}
CONSULTANCY_IDS = {"R12", "R15"}
ADJACENT_IDS = {"R17", "R19"}


def test_builtin_has_19_factors():
    taxonomy = builtin_taxonomy()
    assert taxonomy.n == 19
    assert taxonomy.name == "WAINGE-19"
    assert taxonomy.factor_ids() == [f"R{i:02d}" for i in range(1, 20)]


def test_builtin_r01_description():
    r01 = builtin_taxonomy().factors[0]
    assert r01.id == "R01"
    assert r01.description.startswith(
        "The customer representative cannot be always available"
    )


def test_builtin_all_intrinsic_risk_one():
    assert all(f.intrinsic_risk == 1.0 for f in builtin_taxonomy().factors)


def test_builtin_category_assignment():
    by_category = {Category.INTRINSIC_TO_AGILE: set(),
                   Category.CONSULTANCY_CONFLICT: set(),
                   Category.ADJACENT_PROCESS: set()}
    for f in builtin_taxonomy().factors:
        by_category[f.category].add(f.id)
    assert by_category[Category.INTRINSIC_TO_AGILE] == INTRINSIC_IDS
    assert by_category[Category.CONSULTANCY_CONFLICT] == CONSULTANCY_IDS
    assert by_category[Category.ADJACENT_PROCESS] == ADJACENT_IDS


def test_builtin_is_referentially_constant():
    a = builtin_taxonomy()
    b = builtin_taxonomy()
    assert a == b
    assert a.factors == b.factors


def test_builtin_validates_clean():
    assert validate_taxonomy(builtin_taxonomy()) == []


def test_duplicate_id_reported():
    base = builtin_taxonomy()
    dup = Taxonomy(
        name="broken",
        factors=base.factors + (replace(base.factors[0]),),
    )
    report = validate_taxonomy(dup)
    assert len(report) == 1
    assert report[0].factor_id == "R01"
    assert "duplicate" in report[0].message


def test_out_of_range_intrinsic_risk_reported():
    factor = RiskFactor(
        id="X1", description="something", category=Category.ADJACENT_PROCESS,
        intrinsic_risk=1.2,
    )
    report = validate_taxonomy(Taxonomy(name="t", factors=(factor,)))
    assert len(report) == 1
    assert report[0].factor_id == "X1"
    assert "outside [0, 1]" in report[0].message


def test_empty_taxonomy_reported():
    report = validate_taxonomy(Taxonomy(name="empty", factors=()))
    assert any("no factors" in v.message for v in report)


def test_empty_description_reported():
    factor = RiskFactor(id="X1", description="  ", category=Category.INTRINSIC_TO_AGILE)
    report = validate_taxonomy(Taxonomy(name="t", factors=(factor,)))
    assert any("description" in v.message for v in report)


def test_single_injected_violation_names_offender():
    base = builtin_taxonomy()
    for i in range(base.n):
        factors = list(base.factors)
        factors[i] = replace(factors[i], intrinsic_risk=-0.5)
        report = validate_taxonomy(Taxonomy(name="t", factors=tuple(factors)))
        assert len(report) == 1
        assert report[0].factor_id == base.factors[i].id
