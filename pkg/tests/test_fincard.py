import time

import pytest
from hypothesis import given, strategies as st

from polylaw.fincard import (
    Cardinal, FinMap, Span, CommutingSquare, pushout, is_connected, is_acyclic,
    is_suitable_span, is_pushout, induced_spans, enumerate_maps, enumerate_spans, enumerate_span_classes,
    enumerate_squares, component_count, component_counts, has_cycle, check_spans,
)
from polylaw.config import DEFAULT_BOUNDS
from polylaw.exceptions import CompositionError


def span(n, left, m, right):
    return Span(FinMap(left, n), FinMap(right, m))


@st.composite
def spans(draw, bound=4):
    n = draw(st.integers(0, bound))
    m = draw(st.integers(0, bound))
    k = draw(st.integers(0, bound)) if n and m else 0
    left = draw(st.lists(st.integers(1, max(n, 1)), min_size=k, max_size=k))
    right = draw(st.lists(st.integers(1, max(m, 1)), min_size=k, max_size=k))
    return span(n, left, m, right)


def test_cardinal_rejects_negative():
    with pytest.raises(ValueError, match=r"nonnegative"):
        Cardinal(-1)


def test_finmap_rejects_values_outside_codomain():
    with pytest.raises(ValueError, match=r"does not lie in"):
        FinMap((1, 3), 2)


def test_finmap_compose_and_inverse():
    f = FinMap((2, 3, 1), 3)
    assert f.compose(f.inverse()) == FinMap.identity(3)
    assert FinMap((1, 1, 1), 1).compose(f.compose(FinMap((1, 2), 3))) == FinMap((1, 1), 1)
    with pytest.raises(CompositionError, match=r"Endpoints do not match"):
        f.compose(FinMap((1,), 1))


def test_finmap_fibers_are_ordered():
    f = FinMap((2, 1, 2, 2), 3)
    assert f.fibers() == [(2,), (1, 3, 4), ()]
    assert f.fiber_sizes() == (1, 3, 0)
    assert not f.is_monotone()
    assert FinMap((1, 1, 2), 2).is_monotone()


@pytest.mark.parametrize("s, r, tau1, tau2", [
    (span(2, (), 3, ()), 5, (1, 2), (3, 4, 5)),
    (span(1, (1, 1), 2, (1, 2)), 1, (1,), (1, 1)),
    (span(2, (1, 2), 2, (1, 2)), 2, (1, 2), (1, 2)),
    (span(2, (2,), 2, (1,)), 3, (1, 2), (2, 3)),
])
def test_pushout(s, r, tau1, tau2):
    p = pushout(s)
    assert p.r == r
    assert p.tau1.values == tau1
    assert p.tau2.values == tau2
    assert p.tau1.compose(s.left) == p.tau2.compose(s.right)


@pytest.mark.parametrize("s, connected, acyclic, suitable", [
    (span(0, (), 1, ()), True, True, True),
    (span(0, (), 0, ()), False, True, False),
    (span(1, (1, 1), 2, (1, 2)), True, True, True),
    (span(3, (), 2, ()), False, True, False),
    (span(1, (1, 1), 1, (1, 1)), True, False, False),
    (span(1, (1,), 1, (1,)), True, True, True),
])
def test_span_predicates(s, connected, acyclic, suitable):
    assert is_connected(s) == connected
    assert is_acyclic(s) == acyclic
    assert is_suitable_span(s) == suitable


@given(spans())
def test_pushout_matches_oracles(s):
    assert pushout(s).r == component_count(s)
    assert is_acyclic(s) == (not has_cycle(s))


@given(spans())
def test_euler_two_of_three(s):
    conditions = (is_acyclic(s), is_connected(s), s.n + s.m == s.k + 1)
    assert sum(conditions) != 2


def test_induced_spans_split_disjoint_union():
    s = span(2, (1, 2), 2, (1, 2))
    sq = CommutingSquare(s, FinMap.identity(2), FinMap.identity(2))
    assert induced_spans(sq) == [span(1, (1,), 1, (1,))] * 2
    assert is_pushout(sq)


def test_induced_spans_over_one_point():
    s = span(2, (1, 2), 2, (2, 1))
    sq = CommutingSquare(s, FinMap.constant(2), FinMap.constant(2))
    assert induced_spans(sq) == [s]
    assert not is_pushout(sq)


def test_square_must_commute():
    with pytest.raises(ValueError, match=r"does not commute"):
        CommutingSquare(span(1, (1,), 1, (1,)), FinMap((1,), 2), FinMap((2,), 2))


def test_induced_spans_suitable_iff_pushout_and_euler():
    for sq in enumerate_squares(2, r_bound=1):
        s = sq.span
        if (s.n, s.m, s.k, sq.r) != (2, 2, 2, 1):
            continue
        pieces = induced_spans(sq)
        assert all(is_suitable_span(x) for x in pieces) == (is_pushout(sq) and s.n + s.m == s.k + sq.r)


@pytest.mark.parametrize("k, n, count", [(0, 0, 1), (0, 3, 1), (2, 0, 0), (2, 3, 9)])
def test_enumerate_maps(k, n, count):
    assert len(enumerate_maps(k, n)) == count


def test_enumerate_spans_count():
    # sum over k of (sum over n of n^k)^2 with n, k <= 2
    assert len(list(enumerate_spans(2))) == 9 + 9 + 25


def test_enumerate_span_classes():
    classes = list(enumerate_span_classes(2))
    # k = 0: 9, k = 1: 9, k = 2: multisets of two edges, 1 + 3 + 3 + 10
    assert len(classes) == 9 + 9 + 17

    def key(s):
        return int(s.n), int(s.m), tuple(sorted(s.edges()))

    assert all(s.edges() == sorted(s.edges()) for s in classes)
    assert len({key(s) for s in classes}) == len(classes)
    assert {key(s) for s in classes} == {key(s) for s in enumerate_spans(2)}


def test_component_counts_in_one_call():
    spans = list(enumerate_spans(2))
    assert list(component_counts(spans)) == [component_count(s) for s in spans]
    assert len(component_counts([])) == 0


def test_check_spans_passes():
    report = check_spans(3)
    assert report.passed, report.to_text()
    assert report.checks["pushout-components"].instances == len(list(enumerate_span_classes(3)))
    assert report.checks["induced-suitable"].instances > 0


def test_check_spans_at_the_default_bound_is_fast():
    start = time.perf_counter()
    report = check_spans(DEFAULT_BOUNDS["spans"])
    elapsed = time.perf_counter() - start
    assert report.passed, report.to_text()
    assert elapsed < 10, f"span suite took {elapsed:.1f} s"
