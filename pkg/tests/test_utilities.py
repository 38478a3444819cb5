import itertools

import pytest
from hypothesis import given, strategies as st

from polylaw.utilities import (
    UnionFind, identity_permutation, is_permutation, compose_permutations, invert_permutation, permute,
    all_permutations, adjacent_transposition, transposition_word, arrangements, permutation_sum, parallel_map,
)
from polylaw.report import Report, CheckResult, jsonable
from polylaw.config import worker_count, THREADS_ENV
from polylaw.exceptions import UsageError

permutations = st.integers(0, 6).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


@given(permutations)
def test_transposition_word_recomposes(s):
    word = transposition_word(s)
    n = len(s)
    assert compose_permutations(identity_permutation(n), *[adjacent_transposition(n, i) for i in word]) == s


@given(permutations, st.data())
def test_permute_is_a_right_action(a, data):
    b = data.draw(st.permutations(range(1, len(a) + 1)).map(tuple))
    seq = tuple("abcdef"[:len(a)])
    assert permute(permute(seq, a), b) == permute(seq, compose_permutations(a, b))


@given(permutations)
def test_inverse(s):
    assert compose_permutations(s, invert_permutation(s)) == identity_permutation(len(s))


def test_compose_mismatch():
    with pytest.raises(UsageError, match=r"Cannot compose"):
        compose_permutations((1, 2), (1,))
    with pytest.raises(UsageError):
        adjacent_transposition(2, 2)


@pytest.mark.parametrize("src, dst, expected", [
    ("ab", "ba", [(2, 1)]),
    ("aab", "aba", [(1, 3, 2), (2, 3, 1)]),
    ("ab", "aa", []),
    ("", "", [()]),
])
def test_arrangements(src, dst, expected):
    assert arrangements(src, dst) == expected


def test_all_permutations_and_sum():
    assert all_permutations(3) == sorted(itertools.permutations((1, 2, 3)))
    assert permutation_sum((2, 1), (1,), (2, 1)) == (2, 1, 3, 5, 4)
    assert is_permutation((3, 1, 2)) and not is_permutation((1, 1))


def test_union_find():
    uf = UnionFind("abcd")
    assert uf.union("a", "b")
    assert not uf.union("b", "a")
    uf.union("c", "d")
    assert uf.connected("a", "b") and not uf.connected("a", "c")
    assert uf.num_sets == 2 and uf.size("a") == 2
    uf.add("e")
    assert "e" in uf and len(uf) == 5
    assert uf.groups(order="abcde") == [["a", "b"], ["c", "d"], ["e"]]
    copy = uf.copy()
    copy.union("a", "e")
    assert not uf.connected("a", "e")


def test_parallel_map_keeps_order():
    assert parallel_map(lambda x: x * x, range(20), workers=4) == [x * x for x in range(20)]
    assert parallel_map(str, [], workers=3) == []


def test_worker_count(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "1")
    assert worker_count() == 1
    monkeypatch.setenv(THREADS_ENV, "many")
    with pytest.warns(UserWarning, match=THREADS_ENV):
        assert worker_count() >= 1


def test_report_records_and_merges():
    report = Report("demo", {"bound": 2})
    c = report.check("law", "a law")
    c.record(True)
    c.record(False, "broken", where=(1, 2))
    report.check("other").skip(2)
    assert not report.passed and report.instances == 2
    assert report.violations[0].witness == {"where": (1, 2)}

    other = Report("demo")
    other.check("law").record(True)
    other.note("seen")
    report.merge(other)
    assert report.checks["law"].instances == 3
    assert report.notes == ["seen"]

    data = report.to_dict()
    assert data["checks"][0]["violations"][0]["witness"] == {"where": [1, 2]}
    assert "FAILED with 1 violation(s)" in report.to_text()
    assert report.to_json() == Report.to_json(report)


def test_merge_with_prefix_keeps_suites_apart():
    spans, axioms = Report("spans"), Report("polyaxioms")
    spans.check("unit").record(True)
    axioms.check("unit").record(False, "broken", map="f")
    axioms.note("seen")
    merged = Report("all").merge(spans, prefix="spans").merge(axioms, prefix="polyaxioms")
    assert list(merged.checks) == ["spans/unit", "polyaxioms/unit"]
    assert merged.checks["spans/unit"].passed
    assert [v.tag for v in merged.violations] == ["polyaxioms/unit"]
    assert merged.notes == ["polyaxioms: seen"]


def test_check_result_merge_mismatch():
    with pytest.raises(ValueError, match=r"Cannot merge"):
        CheckResult("a").merge(CheckResult("b"))


def test_jsonable():
    assert jsonable({1: (2, frozenset({3})), "x": None}) == {"1": [2, [3]], "x": None}
