import csv
import io
import json

import pytest

from ringline import cli

CUBIC = "GF(2)[x]/(x^3-x)"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ring_info_text(capsys):
    code, out, err = run_cli(capsys, "ring-info", "--ring", CUBIC)
    assert code == 0 and err == ""
    assert "characteristic: 2" in out
    assert "local: no" in out
    assert "units (2): 1, x^2+x+1" in out
    assert "{0, x, x^2, x^2+x}  [principal <x>, maximal]" in out
    assert "jacobson radical: {0, x^2+x}" in out


def test_ring_info_json(capsys):
    code, out, _ = run_cli(capsys, "ring-info", "--ring", "GF(2)", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 2
    assert doc["local"] is True
    assert doc["units"] == ["1"]
    assert doc["jacobson_radical"] == ["0"]


def test_ring_info_product(capsys):
    code, out, _ = run_cli(capsys, "ring-info", "--ring", "GF(2)*GF(2)",
                           "--format", "json")
    doc = json.loads(out)
    assert doc["size"] == 4
    assert len(doc["units"]) == 1
    assert sum(1 for entry in doc["ideals"] if entry["maximal"]) == 2
    assert doc["jacobson_radical"] == ["(0,0)"]


def test_ring_table_text_matches_display_order(capsys):
    code, out, _ = run_cli(capsys, "ring-table", "--ring", CUBIC, "--op", "mul")
    assert code == 0
    rows = out.splitlines()
    assert rows[0].split() == [
        "*", "0", "1", "x", "x^2", "x+1", "x^2+1", "x^2+x", "x^2+x+1"
    ]
    assert rows[2].split() == ["0"] + ["0"] * 8


def test_ring_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "ring-table", "--ring", CUBIC, "--op", "add", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 9
    # row of 0 under addition equals the header order
    assert rows[1][1:] == rows[0][1:]


def test_ring_table_csv_quotes_product_names(capsys):
    code, out, _ = run_cli(
        capsys, "ring-table", "--ring", "GF(2)*GF(2)", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][1:] == ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]


def test_line_points(capsys):
    code, out, _ = run_cli(capsys, "line-points", "--ring", CUBIC,
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 18
    assert (doc["type_i"], doc["type_ii"]) == (14, 4)


def test_line_neighbours_with_labels(capsys):
    code, out, _ = run_cli(
        capsys, "line-neighbours", "--ring", CUBIC, "--point", "(1,0)"
    )
    assert code == 0
    assert "9 points" in out
    assert "U0" in out and "jacobson" in out
    # alternate representatives resolve to the same point
    code2, out2, _ = run_cli(
        capsys, "line-neighbours", "--ring", CUBIC, "--point", "(x^2+x+1,0)"
    )
    assert code2 == 0 and out2 == out


def test_line_stats(capsys):
    code, out, _ = run_cli(capsys, "line-stats", "--ring", CUBIC,
                           "--format", "json")
    doc = json.loads(out)
    assert doc["points_total"] == 18
    assert doc["type_i"] == {"formula": 14, "actual": 14}
    assert doc["type_ii"] == {"formula": 4, "actual": 4}
    assert doc["element_counts"]["covered_zero_divisor_pairs"] == 28
    assert doc["neighbourhood_sizes"] == [[9, 18]]
    # 153 unordered pairs, 81 neighbour pairs, hence 72 distant pairs
    assert doc["distant_pair_overlaps"] == [[4, 72]]
    # each distant pair extends to a pairwise-distant triple in 2 ways: 72*2/3
    assert doc["distant_triple_overlaps"] == [[0, 48]]
    assert doc["neighbour_relation_transitive"] is False
    assert doc["jacobson_points_per_point"] == [[1, 18]]


def test_line_graph_dot(capsys):
    code, out, _ = run_cli(capsys, "line-graph", "--ring", CUBIC)
    assert code == 0
    assert out.count("[label=") == 18
    assert out.count(" -- ") == 81
    assert out.count("shape=box") == 4
    code, out, _ = run_cli(capsys, "line-graph", "--ring", "GF(2)")
    assert out.count("[label=") == 3 and " -- " not in out


def test_line_graph_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "line-graph", "--ring", CUBIC,
                           "--format", "json")
    doc = json.loads(out)
    assert len(doc["points"]) == 18
    assert len(doc["edges"]) == 81
    # reconstructing point and edge sets from the document matches a rebuild
    from ringline import build_ring_from_text, enumerate_points

    line = enumerate_points(build_ring_from_text(CUBIC))
    name = line.ring.element_name
    rebuilt_points = {tuple(p["canonical"]) for p in doc["points"]}
    assert rebuilt_points == {
        (name(p.canonical[0]), name(p.canonical[1])) for p in line.points
    }
    rebuilt_edges = {tuple(edge) for edge in doc["edges"]}
    assert rebuilt_edges == {
        (i, j)
        for i in range(len(line))
        for j in range(i + 1, len(line))
        if not line.distant(i, j)
    }


def test_hom_induced_jacobson(capsys):
    code, out, _ = run_cli(
        capsys, "hom-induced", "--ring", CUBIC, "--ideal", "jacobson",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["quotient"].endswith("/J")
    assert all(len(fiber["sources"]) == 2 for fiber in doc["fibers"])
    assert len(doc["fibers"]) == 9


def test_hom_induced_principal(capsys):
    code, out, _ = run_cli(capsys, "hom-induced", "--ring", CUBIC, "--ideal", "x")
    assert code == 0
    assert "-> (1,0)" in out and "-> (0,1)" in out and "-> (1,1)" in out
    code, out, _ = run_cli(
        capsys, "hom-induced", "--ring", CUBIC, "--ideal", "x+1", "--format", "json"
    )
    doc = json.loads(out)
    assert sorted(len(f["sources"]) for f in doc["fibers"]) == [6, 6, 6]


def test_verify_default(capsys):
    code, out, err = run_cli(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out
    assert err == ""
    assert out.strip().endswith("checks passed")


def test_verify_specific_ring(capsys):
    code, out, _ = run_cli(capsys, "verify", "--ring", "GF(3)")
    assert code == 0
    assert "field line has p+1 points" in out


@pytest.mark.parametrize(
    "argv,expected_code",
    [
        (("ring-info", "--ring", "GF(4)"), 3),
        (("ring-info", "--ring", "GF(2)[x]/("), 3),
        (("ring-info", "--ring", "GF(2)[x]/(x^13)"), 4),
        (("line-neighbours", "--ring", "GF(2)", "--point", "(0,0)"), 5),
        (("line-neighbours", "--ring", "GF(2)", "--point", "bogus"), 5),
        (("hom-induced", "--ring", "GF(2)", "--ideal", "q"), 5),
    ],
)
def test_error_exit_codes(capsys, argv, expected_code):
    code, out, err = run_cli(capsys, *argv)
    assert code == expected_code
    assert out == ""
    assert err.startswith("error:")


def test_unknown_format_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["line-graph", "--ring", "GF(2)", "--format", "svg"])
    assert exc.value.code == 2


def test_max_elements_flag_and_env(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys, "ring-info", "--ring", "GF(5)", "--max-elements", "4"
    )
    assert code == 4 and "exceeding" in err
    monkeypatch.setenv("RINGLINE_MAX_ELEMENTS", "4")
    code, _, err = run_cli(capsys, "ring-info", "--ring", "GF(5)")
    assert code == 4


@pytest.mark.parametrize(
    "argv",
    [
        ("verify",),
        ("line-graph", "--ring", CUBIC, "--format", "json"),
        ("line-graph", "--ring", CUBIC, "--format", "dot"),
        ("ring-table", "--ring", CUBIC, "--format", "csv"),
        ("line-stats", "--ring", "GF(2)*GF(2)", "--format", "json"),
        ("hom-induced", "--ring", CUBIC, "--ideal", "jacobson", "--format", "json"),
    ],
)
def test_outputs_are_deterministic(capsys, argv):
    code_a, out_a, _ = run_cli(capsys, *argv)
    code_b, out_b, _ = run_cli(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a.encode() == out_b.encode()
    assert out_a.endswith("\n")


def test_verify_reports_corruption_with_witness():
    # negative control: a corrupted table must fail the suite with a witness
    import numpy as np

    from ringline import FiniteRing, build_ring_from_text
    from ringline.verify import run_ring_suite

    good = build_ring_from_text("GF(2)*GF(2)")
    mul = np.array(good.mul_table)
    mul[2, 2] = 3  # (1,0)*(1,0) forced to (1,1)
    broken = FiniteRing(
        add_table=np.array(good.add_table),
        mul_table=mul,
        neg_table=np.array(good.neg_table),
        one=good.one,
        names=good.names,
        label="corrupted",
        check=False,
    )
    results = run_ring_suite(broken)
    failures = [r for r in results if not r.passed]
    assert failures
    assert any("(" in f.detail for f in failures)  # witness names present
