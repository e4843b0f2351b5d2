import json

import pytest

from hyperhomology import OrientedHypergraph, boundary_matrix, Ring
from hyperhomology.cli import (
    DocumentError,
    parse_document,
    run_command,
    serialize_document,
)
from hyperhomology.fixtures import BUILTIN_EXAMPLES


def _run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write_example(tmp_path, name):
    path = tmp_path / f"{name}.json"
    path.write_text(serialize_document(BUILTIN_EXAMPLES[name](), name=name))
    return str(path)


def test_parse_serialize_round_trip():
    for name, factory in BUILTIN_EXAMPLES.items():
        h = factory()
        again = parse_document(serialize_document(h, name=name))
        assert again == h
        assert parse_document(serialize_document(again)) == again


def test_parse_empty_document():
    h = parse_document('{"vertices": [], "edges": []}')
    assert h.vertex_count == 0 and h.edge_count == 0


def test_parse_reports_syntax_position():
    with pytest.raises(DocumentError, match="line 1"):
        parse_document("{nope")


def test_parse_rejects_bad_shapes():
    with pytest.raises(DocumentError):
        parse_document("[1, 2]")
    with pytest.raises(DocumentError):
        parse_document('{"vertices": [1], "edges": []}')
    with pytest.raises(DocumentError):
        parse_document('{"vertices": [], "edges": [{"tails": "x", "heads": []}]}')


def test_parse_forwards_validation_errors():
    document = '{"vertices": ["a"], "edges": [{"tails": ["a"], "heads": ["a"]}]}'
    with pytest.raises(Exception, match="overlap"):
        parse_document(document)


def test_main_example_document_matches_boundary_columns():
    h = parse_document(serialize_document(BUILTIN_EXAMPLES["main-example"]()))
    matrix = boundary_matrix(h, Ring.INTEGER)
    assert [matrix.column(j) for j in range(3)] == [
        [1, -1, -1],
        [-1, 1, -1],
        [-1, -1, 1],
    ]


def test_validate_command(tmp_path, capsys):
    path = _write_example(tmp_path, "triangle-graph")
    code, out, _ = _run(capsys, "validate", path)
    assert code == 0 and "valid" in out

    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"], "edges": [{"tails": ["a"], "heads": ["a"]}]}')
    code, out, err = _run(capsys, "validate", str(bad), "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"] is False
    assert any("overlap" in v for v in payload["violations"])


def test_validate_missing_file(capsys):
    code, _, err = _run(capsys, "validate", "/nonexistent/file.json")
    assert code == 1 and "error" in err


def test_unknown_subcommand(capsys):
    code, _, _ = _run(capsys, "frobnicate")
    assert code == 2


def test_unknown_flag(capsys):
    code, _, _ = _run(capsys, "validate", "--bogus")
    assert code == 2


def test_unknown_example_name(capsys):
    code, _, _ = _run(capsys, "example", "no-such-fixture")
    assert code == 2


def test_homology_command_json(tmp_path, capsys):
    path = _write_example(tmp_path, "main-example")
    code, out, _ = _run(capsys, "homology", path, "--ring", "int", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["h1"] == {"free_rank": 0, "torsion": []}
    assert payload["h1_cohomology"] == {"free_rank": 0, "torsion": [2, 2]}
    assert payload["rank_image_boundary"] == 3
    assert payload["h1_basis"] == []


def test_homology_parallel_edges(tmp_path, capsys):
    path = _write_example(tmp_path, "parallel-edges")
    code, out, _ = _run(capsys, "homology", path, "--ring", "int", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["h1"] == {"free_rank": 1, "torsion": []}
    assert payload["h1_cohomology"] == {"free_rank": 1, "torsion": []}


def test_graphlike_command_exit_codes(tmp_path, capsys):
    good = _write_example(tmp_path, "parallel-edges")
    code, out, _ = _run(capsys, "graphlike", good, "--json")
    assert code == 0
    assert json.loads(out)["graph_like"] is True

    bad = _write_example(tmp_path, "main-example")
    code, out, _ = _run(capsys, "graphlike", bad, "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["graph_like"] is False
    assert set(payload["conditions"].values()) == {False}
    witnesses = {w["condition"]: w for w in payload["witnesses"]}
    assert witnesses["annihilator_equals_coboundary_image"]["coefficients"] == {"e1": 1}


def test_spanning_tree_rational_command(tmp_path, capsys):
    path = _write_example(tmp_path, "triangle-graph")
    code, out, _ = _run(capsys, "spanning-tree", path, "--ring", "rat", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["tree_edges"] == ["e1", "e2"]
    assert payload["chords"] == ["e3"]
    assert payload["axioms_verified"] is True
    assert payload["fundamental_cycles"]["e3"] == {"e1": "-1", "e2": "-1", "e3": "1"}


def test_spanning_tree_check_integral_flag(tmp_path, capsys):
    graph = _write_example(tmp_path, "triangle-graph")
    code, out, _ = _run(capsys, "spanning-tree", graph, "--ring", "rat", "--check-integral", "--json")
    assert code == 0
    assert json.loads(out)["integral"] is True

    hyper = _write_example(tmp_path, "main-example")
    code, out, _ = _run(capsys, "spanning-tree", hyper, "--ring", "rat", "--check-integral", "--json")
    assert code == 1
    assert json.loads(out)["integral"] is False


def test_spanning_tree_integer_command(tmp_path, capsys):
    graph = _write_example(tmp_path, "parallel-edges")
    code, out, _ = _run(capsys, "spanning-tree", graph, "--ring", "int", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] is True
    assert payload["tree_edges"] == ["e1"]
    assert payload["fundamental_cuts"]["e1"] == {"e1": 1, "e2": 1}

    hyper = _write_example(tmp_path, "main-example")
    code, out, _ = _run(capsys, "spanning-tree", hyper, "--ring", "int", "--json")
    assert code == 1
    assert json.loads(out) == {"found": False, "exhausted": True}


def test_spanning_tree_limit_exceeded(tmp_path, capsys):
    hyper = _write_example(tmp_path, "main-example")
    code, _, err = _run(capsys, "spanning-tree", hyper, "--ring", "int", "--limit", "0")
    assert code == 3
    assert "limit" in err


def test_decompose_command(tmp_path, capsys):
    path = _write_example(tmp_path, "parallel-edges")
    code, out, _ = _run(capsys, "decompose", path, "--ring", "int", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["spans_all_chains"] is False
    assert payload["missing_chain"] == {"e1": 1}
    assert payload["intersection_trivial"] is True

    code, out, _ = _run(capsys, "decompose", path, "--ring", "rat", "--json")
    payload = json.loads(out)
    assert payload["spans_all_chains"] is True
    assert payload["missing_chain"] is None


def test_example_command_emits_parseable_documents(capsys):
    for name in BUILTIN_EXAMPLES:
        code, out, _ = _run(capsys, "example", name)
        assert code == 0
        assert parse_document(out) == BUILTIN_EXAMPLES[name]()


def test_random_command_deterministic(capsys):
    args = ("random", "--vertices", "5", "--edges", "6", "--seed", "9")
    code_a, out_a, _ = _run(capsys, *args)
    code_b, out_b, _ = _run(capsys, *args)
    assert code_a == code_b == 0
    assert out_a == out_b
    h = parse_document(out_a)
    assert h.vertex_count == 5 and h.edge_count == 6


def test_random_command_documents_validate(capsys):
    for seed in range(10):
        code, out, _ = _run(
            capsys, "random", "--vertices", "4", "--edges", "5", "--seed", str(seed)
        )
        assert code == 0
        parse_document(out)


def test_random_command_infeasible_is_usage_error(capsys):
    code, _, err = _run(
        capsys, "random", "--vertices", "0", "--edges", "2", "--seed", "1"
    )
    assert code == 2 and "error" in err


def test_stdin_input(tmp_path, capsys, monkeypatch):
    import io

    document = serialize_document(BUILTIN_EXAMPLES["path-graph"]())
    monkeypatch.setattr("sys.stdin", io.StringIO(document))
    code, out, _ = _run(capsys, "validate", "-")
    assert code == 0
