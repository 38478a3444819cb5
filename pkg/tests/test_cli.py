import json

import pytest

from polylaw.cli import (
    parse_finmap, parse_s2, parse_s3, parse_bijection, parse_ids, parse_pairing, format_values, format_pairing,
    table_to_dict, serialize_polytable, parse_polytable_text, parse_polytable, load_polytable,
    SuiteConfig, run_suite, render, EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, main,
)
from polylaw.symcat import S2Obj, S3Obj
from polylaw.testtable import terminal_polytable, free_two_generators, corpus, mutate_composition
from polylaw.exceptions import (
    EncodingError, UsageError, PolyTableParseError, DanglingReferenceError, PolyTableInvariantError,
)


def test_encodings():
    assert parse_finmap("1,1@1").values == (1, 1)
    assert parse_s2("1,1,2@2") == S2Obj((1, 1, 2), 2)
    assert parse_s2("@1") == S2Obj((), 1)
    assert parse_s3("1,1@1/1@1") == S3Obj(S2Obj((1, 1), 1), S2Obj((1,), 1))
    assert parse_bijection("2,1,3") == (2, 1, 3)
    assert parse_ids(" f, g ,") == ("f", "g")
    pairing = parse_pairing("1.1>2.1, 2.2>1.1")
    assert pairing == (((1, 1), (2, 1)), ((2, 2), (1, 1)))
    assert format_pairing(pairing) == "1.1>2.1,2.2>1.1"
    assert format_values((3, 1)) == "3,1"


@pytest.mark.parametrize("parse, text", [
    (parse_s2, "1,1"),
    (parse_s2, "2,1@2"),
    (parse_s2, "1,x@2"),
    (parse_finmap, "3@2"),
    (parse_s3, "1@1"),
    (parse_bijection, "1,1"),
    (parse_ids, " , "),
    (parse_pairing, "1.1-2.1"),
    (parse_pairing, "1>2"),
])
def test_bad_encodings(parse, text):
    with pytest.raises(EncodingError):
        parse(text)


def test_table_text_roundtrip():
    P = free_two_generators(2)
    text = serialize_polytable(P)
    assert text.endswith("\n")
    assert table_to_dict(parse_polytable_text(text)) == table_to_dict(P)
    assert serialize_polytable(parse_polytable_text(text)) == text


def test_reference_table(copy_reference):
    path = copy_reference("data/minimal.json")
    P = parse_polytable(path)
    assert P.objects == ("x",) and len(P) == 1
    assert load_polytable(path).locate("id_x") == (8, 13)


def test_malformed_json_has_a_position():
    with pytest.raises(PolyTableParseError) as info:
        parse_polytable_text('{\n  "objects": [\n}')
    assert info.value.line == 3


@pytest.mark.parametrize("data, error", [
    ({"objects": ["x"]}, PolyTableParseError),
    ({"objects": ["x"], "bound": "1", "homs": [], "exchange": [], "identities": {}, "composition": []},
     PolyTableParseError),
    ({"objects": ["x"], "bound": 1, "homs": [], "exchange": [], "identities": {"x": "id_x"}, "composition": []},
     DanglingReferenceError),
    ({"objects": ["x"], "bound": 1, "homs": [], "exchange": [], "identities": {}, "composition": []},
     PolyTableInvariantError),
    ({"objects": ["x"], "bound": 1, "homs": [], "exchange": [], "identities": {}, "composition": [], "x": 1},
     PolyTableParseError),
])
def test_table_errors(data, error):
    with pytest.raises(error):
        parse_polytable_text(json.dumps(data))


def test_dangling_reference_is_located(table_file):
    text = serialize_polytable(terminal_polytable(1)).replace('"x": "id_x"', '"x": "nope"')
    path = table_file(text)
    with pytest.raises(DanglingReferenceError) as info:
        load_polytable(path)
    assert info.value.line is not None


def test_suite_config():
    with pytest.raises(UsageError):
        SuiteConfig("nope")
    with pytest.raises(UsageError):
        SuiteConfig("spans", bound=0)
    with pytest.raises(UsageError):
        SuiteConfig("spans", format="yaml")
    cfg = SuiteConfig("roundtrip")
    assert cfg.bound_for("roundtrip") == 4
    assert sorted(cfg.tables_for("roundtrip")) == ["free-one", "free-two", "terminal"]


def test_run_suite():
    code, report = run_suite(SuiteConfig("spans", bound=2))
    assert code == EXIT_OK and report.passed
    assert json.loads(render(report, "json"))["suite"] == "spans"


def test_run_suite_on_a_broken_table():
    broken, _ = mutate_composition(terminal_polytable(2), ("t2_1", "t1_2", 1, 1))
    code, report = run_suite(SuiteConfig("polyaxioms", tables={"broken": broken}))
    assert code == EXIT_VIOLATION
    assert all(v.witness["table"] == "broken" for v in report.violations)


def test_main_span(capsys):
    assert main(["span", "1,1@1", "1,2@2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "pushout: r=1" in out and "suitable: True" in out
    assert main(["span", "1,1@1", "1,1@1", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["suitable"] is False and data["pushout"]["r"] == 1


@pytest.mark.parametrize("argv, count", [
    (["enumerate", "delta1", "--phi", "1,1@1", "--psi", "1,2@2"], 2),
    (["enumerate", "s2", "--n", "2", "--m", "2"], 3),
    (["enumerate", "s3", "--n", "1", "--m", "1", "--r", "1"], 1),
    (["enumerate", "whiskered", "--phi", "1@1/1@1", "--psi", "1@1/1@1"], 1),
])
def test_main_enumerate(capsys, argv, count):
    assert main(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == f"count: {count}"
    assert len(lines) == count + 1


def test_main_compose(capsys, table_file):
    path = table_file(terminal_polytable(2))
    assert main(["compose", path, "--g", "t2_1", "--f", "t1_2", "--cut", "1,1"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "t2_2: (x, x) -> (x, x)"
    assert main(["compose", path, "--fs", "t1_2", "--gs", "id_x,id_x", "--pairing", "1.1>1.1,1.2>2.1",
                 "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["result"] == "t1_2"


def test_main_verify(capsys, copy_reference, table_file):
    assert main(["verify", "--suite", "polyaxioms", "--table", str(copy_reference("data/minimal.json"))]) == EXIT_OK
    broken, _ = mutate_composition(free_two_generators(2))
    assert main(["verify", "--suite", "polyaxioms", "--table", table_file(broken)]) == EXIT_VIOLATION
    assert "FAILED" in capsys.readouterr().out


def test_main_verify_rejects_a_wrongly_typed_table_file(capsys, table_file):
    broken, _ = mutate_composition(terminal_polytable(2), ("t2_1", "t1_2", 1, 1))
    assert main(["verify", "--suite", "polyaxioms", "--table", table_file(broken)]) == EXIT_INPUT
    assert "composition-typing" in capsys.readouterr().err


@pytest.mark.parametrize("suite", ["polyaxioms", "monad"])
def test_run_suite_reports_wrongly_typed_tables(suite):
    tables = {name: mutate_composition(P, well_typed=False)[0] for name, P in corpus(2).items()}
    code, report = run_suite(SuiteConfig(suite, tables=tables))
    assert code == EXIT_VIOLATION
    assert report.violations


def test_main_input_errors(capsys, table_file):
    assert main(["verify", "--suite", "nope"]) == EXIT_INPUT
    assert main(["span", "1,1", "1@1"]) == EXIT_INPUT
    assert main(["enumerate", "delta1", "--phi", "1@1"]) == EXIT_INPUT
    capsys.readouterr()
    assert main(["compose", table_file("{\n  oops\n}"), "--g", "a", "--f", "b", "--cut", "1,1"]) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err
    text = serialize_polytable(terminal_polytable(1)).replace('"x": "id_x"', '"x": "nope"')
    assert main(["verify", "--suite", "polyaxioms", "--table", table_file(text)]) == EXIT_INPUT
    assert "invalid table at line" in capsys.readouterr().err
    assert main(["compose", table_file(terminal_polytable(1)), "--g", "t1_0", "--f", "t1_0", "--cut", "1,1"]) == \
        EXIT_INPUT
