import pytest
from hypothesis import given, strategies as st
from scipy.special import comb

from polylaw.symcat import (
    S1Mor, S2Obj, S2Mor, S3Obj, s1_hom, s2_hom, s2_compose, s3_hom, s3_compose,
    enumerate_s2, enumerate_s3, enumerate_chains, collapse, Component, monad_component,
)
from polylaw.exceptions import CompositionError, UsageError


def test_s2_hom_contains_reference_morphism():
    phi = S2Obj((1, 1, 3, 4, 4), 4)
    psi = S2Obj((2, 2, 3, 4, 4), 4)
    homs = s2_hom(phi, psi)
    assert S2Mor(phi, psi, (5, 4, 3, 1, 2), (4, 1, 3, 2)) in homs


def test_s2_hom_identity_and_count():
    phi = S2Obj((1, 1), 1)
    assert S2Mor.identity(phi) in s2_hom(phi, phi)
    assert len(s2_hom(phi, phi)) == 2


def test_s2_hom_is_sorted():
    phi = S2Obj((1, 2, 2), 2)
    homs = s2_hom(phi, phi)
    assert [h.sort_key() for h in homs] == sorted(h.sort_key() for h in homs)


@pytest.mark.parametrize("phi, psi", [
    (S2Obj((1, 1), 2), S2Obj((1, 2), 2)),
    (S2Obj((1,), 1), S2Obj((1, 1), 1)),
    (S2Obj((1, 1), 1), S2Obj((1, 1), 2)),
])
def test_s2_hom_empty(phi, psi):
    assert s2_hom(phi, psi) == []


def test_s2_hom_nonempty_iff_fiber_multisets_agree():
    for n in range(4):
        for m in range(4):
            objs = enumerate_s2(n, m)
            for phi in objs:
                for psi in objs:
                    assert bool(s2_hom(phi, psi)) == (sorted(phi.fiber_sizes()) == sorted(psi.fiber_sizes()))
                    for f in s2_hom(phi, psi):
                        assert all(psi(f.f_n[i - 1]) == f.f_m[phi(i) - 1] for i in range(1, n + 1))


def test_s2_compose_inverse_is_identity():
    phi = S2Obj((1, 1, 3, 4, 4), 4)
    psi = S2Obj((2, 2, 3, 4, 4), 4)
    f = S2Mor(phi, psi, (5, 4, 3, 1, 2), (4, 1, 3, 2))
    assert s2_compose(f.inverse(), f) == S2Mor.identity(phi)
    assert s2_compose(S2Mor.identity(psi), f) == f


def test_s2_compose_mismatch():
    phi = S2Obj((1, 1), 1)
    psi = S2Obj((1, 2), 2)
    with pytest.raises(CompositionError, match=r"Endpoints do not match"):
        s2_compose(S2Mor.identity(phi), S2Mor.identity(psi))


@given(st.integers(0, 3), st.integers(1, 3), st.data())
def test_s2_compose_associative(n, m, data):
    phi = data.draw(st.sampled_from(enumerate_s2(n, m)))
    f, g, h = (data.draw(st.sampled_from(s2_hom(phi, phi))) for _ in range(3))
    assert s2_compose(h, s2_compose(g, f)) == s2_compose(s2_compose(h, g), f)


def test_s2_mor_rejects_noncommuting_pair():
    phi = S2Obj((1, 2), 2)
    with pytest.raises(ValueError, match=r"does not commute"):
        S2Mor(phi, phi, (2, 1), (1, 2))


def test_s2obj_rejects_nonmonotone():
    with pytest.raises(ValueError, match=r"not weakly increasing"):
        S2Obj((2, 1), 2)


@pytest.mark.parametrize("n, m, count", [(0, 3, 1), (2, 2, 3), (1, 3, 3), (3, 2, 4), (4, 4, 35)])
def test_enumerate_s2(n, m, count):
    objs = enumerate_s2(n, m)
    assert len(objs) == count
    assert objs == sorted(objs)
    if m:
        assert count == comb(n + m - 1, n, exact=True)


def test_enumerate_s2_listing():
    assert [o.values for o in enumerate_s2(2, 2)] == [(1, 1), (1, 2), (2, 2)]


def test_enumerate_chains_matches_s3():
    chains = enumerate_chains((2, 2, 1))
    assert [S3Obj(*c) for c in chains] == enumerate_s3(2, 2, 1)
    assert collapse(chains[0]) == S2Obj((1, 1), 1)
    assert len(enumerate_chains((1, 1, 1, 1))) == 1


def test_s3_hom_and_compose():
    phi = S3Obj(S2Obj((1, 2), 2), S2Obj((1, 1), 1))
    homs = s3_hom(phi, phi)
    assert len(homs) == 2
    swap = homs[1]
    assert swap.f_n == (2, 1) and swap.f_m == (2, 1) and swap.f_r == (1,)
    assert s3_compose(swap, swap) == homs[0]
    assert swap.collapse() in s2_hom(phi.collapse(), phi.collapse())


def test_s1_hom():
    assert len(s1_hom(3, 3)) == 6
    assert s1_hom(2, 3) == []
    assert S1Mor((2, 3, 1)).compose(S1Mor((2, 3, 1)).inverse()) == S1Mor.identity(3)


@pytest.mark.parametrize("tag, x, expected", [
    ("SEta1", 3, S2Obj((1, 2, 3), 3)),
    ("EtaS1", 3, S2Obj((1, 1, 1), 1)),
    (Component.Mu1, S2Obj((1, 1, 2), 2), 3),
    ("SMu1", S3Obj(S2Obj((1,), 1), S2Obj((1,), 1)), S2Obj((1,), 1)),
    ("MuS1", S3Obj(S2Obj((1, 2), 2), S2Obj((1, 1), 1)), S2Obj((1, 2), 2)),
])
def test_monad_component(tag, x, expected):
    assert monad_component(tag, x) == expected


@pytest.mark.parametrize("tag, x", [
    ("SEta1", S2Obj((1,), 1)),
    ("Mu1", 3),
    ("MuS1", S2Obj((1,), 1)),
    ("Eta", 1),
])
def test_monad_component_wrong_kind(tag, x):
    with pytest.raises(UsageError):
        monad_component(tag, x)


def test_monad_laws_at_one():
    for n in range(5):
        assert monad_component("Mu1", monad_component("SEta1", n)) == n
        assert monad_component("Mu1", monad_component("EtaS1", n)) == n
    for phi in enumerate_s3(3, 2, 2):
        n = phi.n
        assert monad_component("Mu1", monad_component("MuS1", phi)) == n
        assert monad_component("Mu1", monad_component("SMu1", phi)) == n
