import pytest

from polylaw.symcat import S2Obj, S3Obj, S2Mor, Component, monad_component
from polylaw.matchings import Matching, delta1_elements
from polylaw.coherence import (
    KElement, check_pdd2, pdd3_forward, pdd3_elements, pdd3_moves, pdd3_classes, is_hat_shaped, check_pdd3,
    check_pdd3_dual, LocalMonoWitness, PdaCell, PDA_PATHS, lower_coend, upper_coend, check_pda_local_monos,
)
from polylaw.coherence._pda import _check_cell, pda1_cells
from polylaw.report import CheckResult

ONE = S2Obj((1,), 1)
MERGED = S2Obj((1, 1), 1)
SPLIT = S2Obj((1, 2), 2)


@pytest.mark.parametrize("phi, n, expected", [
    (MERGED, 2, 2),
    (SPLIT, 2, 0),
    (ONE, 1, 1),
    (MERGED, 1, 0),
])
def test_unit_cell_sizes(phi, n, expected):
    assert len(delta1_elements(phi, monad_component(Component.SEta1, n))) == expected


@pytest.mark.parametrize("n, phi, expected", [
    (2, SPLIT, 2),
    (2, MERGED, 0),
    (0, S2Obj((), 0), 1),
])
def test_counit_cell_sizes(n, phi, expected):
    assert len(delta1_elements(monad_component(Component.EtaS1, n), phi)) == expected


@pytest.mark.parametrize("bound", [1, 2])
def test_pdd2(bound):
    report = check_pdd2(bound)
    assert report.passed, report.to_text()
    assert report.checks["pdd2-coend"].instances > 0


def test_trivial_comultiplication_generator():
    phi = S3Obj(ONE, ONE)
    (x,) = pdd3_elements(phi, ONE)
    assert isinstance(x, KElement) and not x.dual
    assert (x.psi, x.xi, x.rho) == (phi, phi, ONE)
    assert pdd3_forward(x) == Matching(ONE, ONE, (1,))
    assert is_hat_shaped(x)
    assert [c.size for c in pdd3_classes(phi, ONE)] == [1]


def test_kelement_rejects_mismatched_components():
    phi = S3Obj(ONE, ONE)
    (x,) = pdd3_elements(phi, ONE)
    with pytest.raises(ValueError, match=r"not composable"):
        KElement(x.f, x.g, S2Mor.identity(SPLIT))


def test_pdd3_elements_outside_the_constraints():
    phi = S3Obj(MERGED, ONE)
    assert pdd3_elements(phi, ONE) == []
    assert pdd3_classes(phi, MERGED) == []


@pytest.mark.parametrize("dual", [False, True])
def test_forward_is_invariant_under_moves(dual):
    phi = S3Obj(MERGED, ONE)
    elements = pdd3_elements(phi, SPLIT, dual)
    assert elements
    for x in elements:
        for y in pdd3_moves(x):
            assert y.dual == dual
            assert pdd3_forward(y) == pdd3_forward(x)


@pytest.mark.parametrize("dual", [False, True])
def test_classes_match_the_target_cell(dual):
    phi = S3Obj(MERGED, ONE)
    classes = pdd3_classes(phi, SPLIT, dual)
    target = delta1_elements(SPLIT, MERGED) if dual else delta1_elements(MERGED, SPLIT)
    assert sorted(pdd3_forward(c.representative) for c in classes) == target


def test_pdd3():
    report = check_pdd3(2)
    assert report.passed, report.to_text()
    assert set(report.checks) == {"pdd3-euler", "pdd3-forward-invariant", "pdd3-bijection", "pdd3-projection"}
    assert any(note.startswith("hat-shape:") for note in report.notes)


def test_pdd3_dual():
    report = check_pdd3_dual(2)
    assert report.passed, report.to_text()
    assert "pdd3-dual-bijection" in report.checks


@pytest.mark.slow
@pytest.mark.parametrize("check", [check_pdd3, check_pdd3_dual])
def test_pdd3_at_bound_three(check):
    report = check(3)
    assert report.passed, report.to_text()
    assert report.parameters["bound"] == 3
    assert report.parameters["instances"] > check(2).parameters["instances"]


def test_pdd3_bound_is_capped():
    assert check_pdd3(1).parameters["bound"] == 1
    assert check_pdd3(1).parameters["instances"] > 0


def test_literal_coends_match_delta1():
    assert len(lower_coend(MERGED, SPLIT)) == len(delta1_elements(MERGED, SPLIT)) == 2
    assert len(upper_coend(SPLIT, MERGED)) == len(delta1_elements(SPLIT, MERGED)) == 2
    assert lower_coend(SPLIT, SPLIT) == []


def test_pda1_cells():
    cells = {(c.witness["m"], c.witness["n"]): c for c in pda1_cells(2)}
    assert cells[(1, 1)].elements == [((1,), (1,))]
    assert cells[(1, 1)].reduced == ["*"]
    assert cells[(2, 1)].elements == [] and cells[(0, 0)].elements == []


def test_pda_local_monos():
    report = check_pda_local_monos(2)
    assert report.passed, report.to_text()
    assert list(report.checks) == [path.tag for path in PDA_PATHS]
    assert report.checks["PDA2"].instances == report.checks["PDA5"].instances > 0


def test_pda1_is_a_point_exactly_at_one_one():
    for cell in pda1_cells(3):
        m, n = cell.witness["m"], cell.witness["n"]
        assert bool(cell.elements) == ((m, n) == (1, 1))
        assert cell.reduced == (["*"] if (m, n) == (1, 1) else [])


@pytest.mark.slow
def test_pda_local_monos_at_bound_three():
    report = check_pda_local_monos(3)
    assert report.passed, report.to_text()
    smaller = check_pda_local_monos(2)
    for path in PDA_PATHS:
        assert report.checks[path.tag].instances >= smaller.checks[path.tag].instances
    assert report.checks["PDA1"].instances == 16


def test_collision_is_reported():
    result = CheckResult("PDA2")
    _check_cell(result, PdaCell({"cell": 1}, ["a", "b"], lambda e: (1,)))
    assert not result.passed
    witness = result.violations[0].witness["collision"]
    assert witness == LocalMonoWitness("a", "b", (1,))
    assert witness.to_dict() == {"first": "a", "second": "b", "projection": [1]}


def test_reduced_mismatch_is_reported():
    result = CheckResult("PDA1")
    _check_cell(result, PdaCell({}, ["a"], lambda e: (1,), ["*", "*"], lambda e: "*"))
    assert not result.passed
