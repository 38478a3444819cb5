import pytest

from polylaw.testtable import (
    terminal_polytable, free_one_generator, free_two_generators, corpus, mutate_composition,
    mutate_polycomposite,
)
from polylaw.polycat import PolycompositeTable, polycomposites_from_binary, instance_key, pad
from polylaw.exceptions import UsageError, PolyTableInvariantError


@pytest.mark.parametrize("bound", [1, 2, 3])
def test_terminal_has_one_map_per_type(bound):
    P = terminal_polytable(bound)
    assert len(P) == (bound + 1) ** 2
    for f in P.maps.values():
        assert P.hom(f.dom, f.cod) == [f]
    assert P.identity("x").id == "id_x"


def test_terminal_needs_a_positive_bound():
    with pytest.raises(UsageError, match=r"bound >= 1"):
        terminal_polytable(0)


def test_corpus_names():
    assert sorted(corpus(1)) == ["free-one", "free-two", "terminal"]


def test_free_one_generator_is_closed_under_exchange():
    P = free_one_generator(2)
    f = P["f"]
    swapped = P.exchange_step(f, "cod", 1)
    assert swapped.cod == ("c", "b")
    assert P.exchange_step(swapped, "cod", 1) == f
    assert [g.id for g in P.orbit(f)] == sorted([f.id, swapped.id])


def test_mutate_composition_keeps_the_type():
    P = free_two_generators(2)
    mutated, key = mutate_composition(P)
    before, after = P[P.composition[key]], mutated[mutated.composition[key]]
    assert before != after
    assert (before.dom, before.cod) == (after.dom, after.cod)
    assert {k: v for k, v in mutated.composition.items() if k != key} == \
        {k: v for k, v in P.composition.items() if k != key}


def test_mutate_composition_with_key():
    P = terminal_polytable(2)
    mutated, key = mutate_composition(P, ("t2_1", "t1_2", 1, 1))
    assert key == ("t2_1", "t1_2", 1, 1)
    assert mutated.composition[key] != "t2_2"


@pytest.mark.parametrize("name", ["terminal", "free-one"])
def test_thin_tables_only_have_wrongly_typed_mutations(name):
    P = corpus(2)[name]
    mutated, key = mutate_composition(P)
    before, after = P[P.composition[key]], mutated[mutated.composition[key]]
    assert (before.dom, before.cod) != (after.dom, after.cod)
    with pytest.raises(UsageError, match=r"second map of its type"):
        mutate_composition(P, well_typed=True)


def test_mutate_composition_can_break_the_type():
    P = free_two_generators(2)
    mutated, key = mutate_composition(P, well_typed=False)
    before, after = P[P.composition[key]], mutated[mutated.composition[key]]
    assert (before.dom, before.cod) != (after.dom, after.cod)
    with pytest.raises(PolyTableInvariantError, match=r"composition-typing"):
        P.replace_composition(key, after.id)


def test_mutate_polycomposite_keeps_the_type_when_it_can():
    P = free_two_generators(2)
    PC = polycomposites_from_binary(P)
    mutated, key = mutate_polycomposite(PC, well_typed=True)
    before, after = P[PC.entries[key]], P[mutated.entries[key]]
    assert before != after
    assert (before.dom, before.cod) == (after.dom, after.cod)


def test_mutate_polycomposite_avoids_pads():
    P = free_two_generators(3)
    PC = polycomposites_from_binary(P)
    mutated, key = mutate_polycomposite(PC)
    pads = {instance_key(pad(P, g, f, i, j)) for g, f, i, j in P.cuts()}
    assert key not in pads
    assert len(mutated) == len(PC)


def test_mutate_polycomposite_needs_a_non_pad_entry():
    P = terminal_polytable(1)
    g, f, i, j = next(P.cuts())
    key = instance_key(pad(P, g, f, i, j))
    with pytest.raises(UsageError, match=r"only pad entries"):
        mutate_polycomposite(PolycompositeTable(P, {key: P.compose(g, f, i, j).id}))
