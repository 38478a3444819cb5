import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polylaw.polycat import (
    PolyMap, PolyTable, HomTable, FamilyMatching, FreePolycategory, is_suitable_matching, binary_compose,
    cut_provenance, peel, peel_orders, normal_order, normalize, polycompose, respects_interleaving, members_in_order,
    edge_count_ok, check_polycategory_axioms, AXIOMS, PolycompositeTable, instance_key, pad,
    polycomposites_from_binary, binary_from_polycomposites, roundtrip_check, roundtrip_instances,
    check_polycompose, random_matching,
)
from polylaw.testtable import (
    terminal_polytable, free_one_generator, free_two_generators, corpus, mutate_composition,
    mutate_polycomposite,
)
from polylaw.exceptions import (
    CompositionError, CompositeTypeError, BoundExceededError, UsageError, DanglingReferenceError,
    PolyTableInvariantError,
)


@pytest.fixture(scope="module")
def free_two():
    return free_two_generators(3)


def _minimal(**changes):
    data = dict(objects=("x",), bound=1, maps=[PolyMap("id_x", ("x",), ("x",))], exchange={},
                identities={"x": "id_x"}, composition={("id_x", "id_x", 1, 1): "id_x"})
    data.update(changes)
    return PolyTable(data["objects"], data["bound"], data["maps"], data["exchange"], data["identities"],
                     data["composition"])


def test_minimal_table():
    P = _minimal()
    assert len(P) == 1
    assert P.compose("id_x", "id_x", 1, 1) == P.identity("x")
    assert check_polycategory_axioms(P).passed


@pytest.mark.parametrize("changes, error, match", [
    ({"identities": {"x": "nope"}}, DanglingReferenceError, r"'nope'"),
    ({"identities": {}}, PolyTableInvariantError, r"identity-present"),
    ({"composition": {("id_x", "id_x", 1, 1): "nope"}}, DanglingReferenceError, r"composition"),
    ({"composition": {("id_x", "id_x", 2, 1): "id_x"}}, PolyTableInvariantError, r"cut-position"),
    ({"maps": [PolyMap("id_x", ("x",), ("x",)), PolyMap("id_x", ("x",), ("x",))]}, PolyTableInvariantError,
     r"unique-ids"),
    ({"maps": [PolyMap("id_x", ("x",), ("x",)), PolyMap("f", ("x", "x"), ())]}, PolyTableInvariantError,
     r"bound"),
    ({"maps": [PolyMap("id_x", ("x",), ("y",))]}, DanglingReferenceError, r"'y'"),
])
def test_table_validation(changes, error, match):
    with pytest.raises(error, match=match):
        _minimal(**changes)


def test_cut_typing_error_names_the_entry():
    maps = [PolyMap("id_x", ("x",), ("x",)), PolyMap("id_y", ("y",), ("y",))]
    with pytest.raises(PolyTableInvariantError, match=r"composition \(id_y, id_x, 1, 1\) violates 'cut-typing'"):
        PolyTable("xy", 1, maps, {}, {"x": "id_x", "y": "id_y"}, {("id_y", "id_x", 1, 1): "id_x"})


def test_composite_typing_is_checked_at_load():
    P = terminal_polytable(2)
    with pytest.raises(PolyTableInvariantError,
                       match=r"composition \(t2_1, t1_2, 1, 1\) violates 'composition-typing'"):
        P.replace_composition(("t2_1", "t1_2", 1, 1), "t2_1")


def test_compose_rejects_a_wrongly_typed_entry():
    broken = terminal_polytable(2).replace_composition(("t2_1", "t1_2", 1, 1), "t2_1", check_typing=False)
    with pytest.raises(CompositeTypeError) as info:
        broken.compose("t2_1", "t1_2", 1, 1)
    assert info.value.key == ("t2_1", "t1_2", 1, 1)
    assert info.value.result == "t2_1"
    assert info.value.expected == (("x", "x"), ("x", "x"))


def test_exchange_totality():
    maps = [PolyMap("id_x", ("x",), ("x",)), PolyMap("m", ("x", "x"), ("x",))]
    with pytest.raises(PolyTableInvariantError, match=r"exchange-totality"):
        HomTable("x", 2, maps, {})


def test_terminal_compose_and_bound():
    P = terminal_polytable(2)
    f = P["t1_2"]
    assert P.compose(P.identity("x"), f, 1, 1) == f
    assert binary_compose(P, "t2_1", "t1_2", (1, 1)) == P["t2_2"]
    with pytest.raises(BoundExceededError, match=r"has length 3, which exceeds the bound 2"):
        P.compose("t2_2", "t2_2", 1, 1)
    with pytest.raises(DanglingReferenceError):
        P["nope"]
    assert P.exchange(P["t2_2"], (2, 1), (2, 1)) == P["t2_2"]


def test_free_compose_docstring_example():
    F = FreePolycategory("abxy", {"f": ("a", "xy"), "g": ("x", "b")})
    h = F.compose(F.generator("g"), F.generator("f"), 1, 1)
    assert (h.dom, h.cod) == (("a",), ("b", "y"))
    assert h.size == 2
    assert F.compose(h, F.identity("a"), 1, 1) == h
    with pytest.raises(CompositionError, match=r"joins"):
        F.compose(F.generator("f"), F.generator("g"), 1, 1)
    with pytest.raises(UsageError):
        FreePolycategory("a", {"f": ("a", "z")})


def test_free_exchange_is_an_action():
    F = FreePolycategory("ab", {"f": ("ab", "ab")})
    f = F.generator("f")
    once = F.exchange(f, (2, 1), (1, 2))
    assert once != f and once.dom == ("b", "a")
    assert F.exchange(once, (2, 1), (1, 2)) == f


def test_free_truncations_are_polycategories():
    for name, P in corpus(2).items():
        report = check_polycategory_axioms(P)
        assert report.passed, (name, report.to_text())
        assert set(report.checks) == set(AXIOMS)


def test_free_two_generators_contents(free_two):
    assert {"f", "g", "id_a", "id_b", "id_c"} <= set(free_two.maps)
    assert len(free_two.hom(("a",), ("b", "b"))) == 2
    assert len(free_two.hom(("a",), ("c", "c"))) >= 1
    assert free_one_generator(2).hom(("a",), ("c", "b"))


def test_axioms_unknown_law():
    with pytest.raises(UsageError, match=r"no-such-law"):
        check_polycategory_axioms(terminal_polytable(1), laws=["no-such-law"])


def test_mutated_composition_breaks_a_law(free_two):
    mutated, key = mutate_composition(free_two)
    assert mutated.composition[key] != free_two.composition[key]
    report = check_polycategory_axioms(mutated)
    assert not report.passed


@pytest.mark.parametrize("name", sorted(corpus(2)))
def test_mutated_corpus_tables_are_reported(name):
    P = corpus(2)[name]
    mutated, key = mutate_composition(P)
    report = check_polycategory_axioms(mutated)
    assert not report.passed
    assert report.violations


@pytest.mark.parametrize("name", sorted(corpus(2)))
def test_wrongly_typed_composite_is_a_located_violation(name):
    P = corpus(2)[name]
    mutated, key = mutate_composition(P, well_typed=False)
    report = check_polycategory_axioms(mutated)
    located = [v for v in report.violations if v.witness.get("entry") == list(key)]
    assert located
    assert located[0].witness["result"] == mutated.composition[key]


def test_suitable_matching():
    F = FreePolycategory("ab", {"f": ("a", "bb"), "g": ("bb", "a")})
    f, g = F.generator("f"), F.generator("g")
    assert not is_suitable_matching(FamilyMatching((f,), (g,), [((1, 1), (1, 1)), ((1, 2), (1, 2))]))
    fm = FamilyMatching((f,), (g,), [((1, 1), (1, 2))])
    assert is_suitable_matching(fm) and edge_count_ok(fm)
    with pytest.raises(ValueError, match=r"uses a port twice"):
        FamilyMatching((f,), (g,), [((1, 1), (1, 1)), ((1, 1), (1, 2))])
    with pytest.raises(CompositionError):
        is_suitable_matching(FamilyMatching((g,), (g,), [((1, 1), (1, 1))]))


def test_cut_provenance():
    upper = (("u1", "u2"), ("v1",))
    lower = (("l1",), ("m1", "m2"))
    assert cut_provenance(upper, lower, 2, 1) == (("l1", "u2"), ("m1", "v1"))


def test_peel_orders_and_normal_form():
    F = FreePolycategory("ab", {"f": ("a", "bb"), "g": ("bb", "a")})
    f, g = F.generator("f"), F.generator("g")
    fm = FamilyMatching((f,), (g,), [((1, 2), (1, 1))])
    assert peel_orders(fm) == [(("f", 1),), (("g", 1),)]
    results = []
    for order in peel_orders(fm):
        composite, dom, cod = peel(F, fm, order)
        assert respects_interleaving(fm, dom, cod)
        h, dom_target, cod_target = normalize(F, composite, dom, cod)
        assert (dom_target, cod_target) == normal_order(dom, cod)
        results.append(h)
    assert results[0] == results[1] == polycompose(F, fm)
    assert dom_target[0] == (("f", 1), 1)
    assert cod_target[0] == (("g", 1), 1)


def test_member_order_is_fixed_by_normalisation():
    # g takes y before x, so peeling puts the inputs of f2 ahead of those of f1
    F = FreePolycategory("abxy", {"f1": ("a", "x"), "f2": ("a", "y"), "g": ("yx", "b")})
    fm = FamilyMatching((F.generator("f1"), F.generator("f2")), (F.generator("g"),),
                        [((1, 1), (1, 2)), ((2, 1), (1, 1))])
    for order in peel_orders(fm):
        composite, dom, cod = peel(F, fm, order)
        assert dom == ((("f", 2), 1), (("f", 1), 1))
        assert respects_interleaving(fm, dom, cod)
        assert not members_in_order(fm, dom, cod)
        h, dom_target, cod_target = normalize(F, composite, dom, cod)
        assert dom_target == ((("f", 1), 1), (("f", 2), 1))
        assert members_in_order(fm, dom_target, cod_target)
        assert h.dom == ("a", "a") and h.cod == ("b",)


def test_peel_rejects_bad_orders():
    F = FreePolycategory("ab", {"f": ("a", "bb"), "g": ("bb", "a")})
    f, g = F.generator("f"), F.generator("g")
    fm = FamilyMatching((f, f), (g,), [((1, 1), (1, 1)), ((2, 1), (1, 2))])
    with pytest.raises(CompositionError, match=r"not a leaf"):
        peel(F, fm, [("g", 1)])
    with pytest.raises(CompositionError, match=r"ends before"):
        peel(F, fm, [("f", 1)])
    with pytest.raises(CompositionError, match=r"continues after"):
        peel(F, fm, [("f", 1), ("f", 2), ("g", 1)])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_polycompose_is_independent_of_peel_order(seed):
    F, fm = random_matching(np.random.default_rng(seed), 5)
    results = {polycompose(F, fm, order) for order in peel_orders(fm)}
    assert len(results) == 1
    (h,) = results
    assert h.size == fm.j + fm.k


def test_pads_give_binary_composites(free_two):
    for g, f, i, j in free_two.cuts():
        assert polycompose(free_two, pad(free_two, g, f, i, j)) == free_two.compose(g, f, i, j)


def test_roundtrip(free_two):
    instances = roundtrip_instances(free_two)
    assert len({instance_key(fm) for fm in instances}) == len(instances)
    PC = polycomposites_from_binary(free_two, instances)
    assert isinstance(PC, PolycompositeTable) and len(PC) > 0
    back = binary_from_polycomposites(PC)
    assert back.composition == free_two.composition
    assert roundtrip_check(free_two).passed


def test_roundtrip_detects_mutated_polycomposite(free_two):
    PC = polycomposites_from_binary(free_two)
    mutated, key = mutate_polycomposite(PC)
    assert mutated.entries[key] != PC.entries[key]
    report = roundtrip_check(free_two, mutated)
    assert not report.checks["polycomposite-roundtrip"].passed
    assert report.checks["binary-roundtrip"].passed


@pytest.mark.parametrize("name", sorted(corpus(2)))
def test_roundtrip_detects_mutated_polycomposites_on_the_corpus(name):
    P = corpus(2)[name]
    mutated, key = mutate_polycomposite(polycomposites_from_binary(P))
    report = roundtrip_check(P, mutated)
    assert not report.passed
    assert report.violations


def test_binary_from_polycomposites_needs_a_table():
    PC = PolycompositeTable(HomTable("x", 1, [PolyMap("id_x", ("x",), ("x",))], {}), {})
    with pytest.raises(UsageError):
        binary_from_polycomposites(PC)


def test_polycompose_suite():
    report = check_polycompose(seed=3, samples=25, max_generators=4)
    assert report.passed, report.to_text()
    assert report.checks["peel-order-independence"].instances == 25
