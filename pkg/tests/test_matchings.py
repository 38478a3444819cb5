import itertools

import pytest

from polylaw.symcat import S2Obj, S2Mor, S3Obj, enumerate_s3, s2_hom, s3_hom
from polylaw.matchings import (
    Matching, delta1_elements, delta1_act, delta1_project, transpose,
    WhiskeredRight, WhiskeredLeft, whiskered_elements, whiskered_square, check_delta1,
)
from polylaw.fincard import FinMap, Span, is_suitable_span, is_pushout
from polylaw.utilities import all_permutations
from polylaw.exceptions import CompositionError, UsageError

ONE = S2Obj((1,), 1)
MERGED = S2Obj((1, 1), 1)
SPLIT = S2Obj((1, 2), 2)


@pytest.mark.parametrize("phi, psi, expected", [
    (MERGED, SPLIT, [(1, 2), (2, 1)]),
    (ONE, ONE, [(1,)]),
    (SPLIT, SPLIT, []),
    (MERGED, ONE, []),
    (S2Obj((), 1), S2Obj((), 0), [()]),
])
def test_delta1_elements(phi, psi, expected):
    assert [x.f_n for x in delta1_elements(phi, psi)] == expected


def test_matching_rejects_unsuitable_bijection():
    with pytest.raises(ValueError, match=r"not a suitable matching"):
        Matching(SPLIT, SPLIT, (1, 2))


def test_left_action_by_swap_exchanges_matchings():
    swap = S2Mor(SPLIT, SPLIT, (2, 1), (2, 1))
    a, b = delta1_elements(MERGED, SPLIT)
    assert delta1_act(a, left=swap) == b
    assert delta1_act(b, left=swap) == a


def test_identity_acts_trivially():
    for x in delta1_elements(MERGED, SPLIT):
        assert delta1_act(x, left=S2Mor.identity(SPLIT), right=S2Mor.identity(MERGED)) == x


def test_action_endpoint_mismatch():
    x = delta1_elements(ONE, ONE)[0]
    with pytest.raises(CompositionError):
        delta1_act(x, left=S2Mor.identity(SPLIT))
    with pytest.raises(CompositionError):
        delta1_act(x, right=S2Mor.identity(MERGED))


def test_projection():
    assert delta1_project(delta1_elements(ONE, ONE)[0]).perm == (1,)
    perms = sorted(delta1_project(x).perm for x in delta1_elements(MERGED, SPLIT))
    assert perms == all_permutations(2)


def test_transpose_is_involutive():
    phi = S2Obj((1, 1, 2), 2)
    psi = S2Obj((1, 2, 2), 2)
    elements = delta1_elements(phi, psi)
    assert elements
    for x in elements:
        assert transpose(transpose(x)) == x
    assert sorted(transpose(x) for x in elements) == delta1_elements(psi, phi)


def test_delta1_matches_brute_force_at_three():
    phi = S2Obj((1, 1, 2), 2)
    psi = S2Obj((1, 2, 2), 2)
    brute = [f for f in itertools.permutations((1, 2, 3))
             if is_suitable_span(Span(phi.phi, FinMap(tuple(psi(v) for v in f), 2)))]
    assert [x.f_n for x in delta1_elements(phi, psi)] == brute


def test_whiskered_right_trivial():
    chain = S3Obj(ONE, ONE)
    assert len(whiskered_elements("right", chain, chain)) == 1


def test_whiskered_right_agrees_with_brute_force():
    chains = [c for n in range(3) for m in range(3) for r in range(3) for c in enumerate_s3(n, m, r)]
    for phi in chains:
        for psi in chains:
            if phi.n != psi.n or phi.m != psi.m:
                continue
            expected = []
            for f_n in all_permutations(phi.n):
                for f_m in all_permutations(phi.m):
                    try:
                        expected.append(WhiskeredRight(phi, psi, f_n, f_m))
                    except ValueError:
                        pass
            assert sorted(whiskered_elements("right", phi, psi)) == sorted(expected)


def test_whiskered_left_equation_violated():
    phi = S3Obj(SPLIT, S2Obj((1, 1), 1))
    psi = S3Obj(MERGED, ONE)
    # r + n == 3 but m + m == 4 for phi against itself
    assert whiskered_elements("left", phi, phi) == []
    assert len(whiskered_elements("left", phi, psi)) == 2


def test_whiskered_left_square_is_pushout():
    phi = S3Obj(SPLIT, S2Obj((1, 1), 1))
    psi = S3Obj(MERGED, ONE)
    for w in whiskered_elements("left", phi, psi):
        assert is_pushout(whiskered_square(phi, psi, w.f_n, w.f_r))
        assert w.fiberwise_suitable()


def test_whiskered_actions():
    phi = S3Obj(SPLIT, S2Obj((1, 1), 1))
    psi = S3Obj(MERGED, ONE)
    w = whiskered_elements("left", phi, psi)[0]
    for h in s3_hom(phi, phi):
        assert isinstance(w.act_right(h), WhiskeredLeft)
    r = whiskered_elements("right", S3Obj(ONE, ONE), S3Obj(ONE, ONE))[0]
    for g in s3_hom(S3Obj(ONE, ONE), S3Obj(ONE, ONE)):
        assert r.act_left(g) == r


def test_whiskered_unknown_side():
    with pytest.raises(UsageError):
        whiskered_elements("middle", S3Obj(ONE, ONE), S3Obj(ONE, ONE))


def test_check_delta1_passes():
    report = check_delta1(3, action_bound=2)
    assert report.passed, report.to_text()
    assert report.checks["delta1-anchor"].instances == 1
    assert report.checks["action-left-functorial"].instances > 0
