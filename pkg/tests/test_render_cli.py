import json
import re
import subprocess
import sys

import networkx as nx
import numpy as np
import pydot
import pytest

from mackeyspec import cli
from mackeyspec.burnside import build_burnside
from mackeyspec.groups import build_group
from mackeyspec.golden import GOLDEN, compute_summary, golden_check
from mackeyspec.render import (
    FigureDocument,
    burnside_document,
    compare_document,
    hasse_pairs,
    spectrum_document,
    subgroups_document,
    to_ascii,
    to_dot,
    transitive_closure,
)
from mackeyspec.spectrum import build_spectrum


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def documents(spaces, groups):
    for d in ("C1", "C5", "S3", "D8", "A4", "Q8"):
        for local in (None, 2):
            X = spaces(d, local)
            yield spectrum_document(X)
            yield burnside_document(X)
            yield compare_document(X, shg=True)
        yield subgroups_document(groups(d))


def test_json_round_trip_is_byte_identical(spaces, groups):
    for doc in documents(spaces, groups):
        text = doc.to_json()
        again = FigureDocument.from_json(text).to_json()
        assert again == text
        assert json.loads(text)["schema"] == 1


def test_json_schema_fields(spaces):
    data = json.loads(burnside_document(spaces("S3", 3)).to_json())
    assert {"schema", "group", "points", "specialization", "gluing"} <= set(data)
    assert set(data["group"]) == {"name", "order", "classes"}
    assert set(data["group"]["classes"][0]) == {"label", "order", "class_size"}
    assert set(data["points"][0]) == {"class", "slot"}
    with pytest.raises(ValueError):
        FigureDocument.from_dict({**data, "schema": 2})


def test_unknown_keys_survive_round_trip(spaces):
    data = json.loads(spectrum_document(spaces("C3")).to_json())
    data["annotation"] = {"z": [1, 2]}
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    assert FigureDocument.from_json(text).to_json() == text


@pytest.mark.parametrize("descriptor", ["S3", "D8", "A4", "S4", "C2 x C2 x C2", "D12"])
def test_hasse_matches_networkx_reduction(spaces, descriptor):
    for local in (None, *[2, 3]):
        X = spaces(descriptor, local)
        g = nx.DiGraph()
        g.add_nodes_from(range(len(X)))
        g.add_edges_from((i, j) for i, j in zip(*np.nonzero(X.leq)) if i != j)
        assert set(hasse_pairs(X.leq)) == set(nx.transitive_reduction(g).edges)
        assert np.array_equal(transitive_closure(len(X), hasse_pairs(X.leq)), X.leq)


def test_document_relations_recover_leq(spaces):
    X = spaces("D8", 2)
    doc = spectrum_document(X)
    assert np.array_equal(transitive_closure(len(X), [tuple(p) for p in doc.hasse]), X.leq)
    full = transitive_closure(len(X), [tuple(p) for p in doc.specialization])
    assert np.array_equal(full, X.leq)
    B = build_burnside(X)
    q = burnside_document(X, B).quotient
    assert np.array_equal(transitive_closure(len(B), [tuple(p) for p in q["hasse"]]), B.leq)


def dot_edges(text, prefix="n"):
    (graph,) = pydot.graph_from_dot_data(text)
    edges = []
    pending = [graph]
    while pending:
        g = pending.pop()
        edges += [(e.get_source(), e.get_destination()) for e in g.get_edges()]
        pending += g.get_subgraphs()
    pat = re.compile(rf"{prefix}(\d+)$")
    return {(int(pat.match(a)[1]), int(pat.match(b)[1])) for a, b in edges if pat.match(a) and pat.match(b)}


def test_dot_is_valid_and_matches_hasse(spaces, groups):
    for doc in documents(spaces, groups):
        for color in (True, False):
            text = to_dot(doc, color=color)
            prefix = "c" if doc.kind == "subgroups" else "n"
            assert dot_edges(text, prefix) == {tuple(p) for p in doc.hasse}
            assert ("fillcolor" in text) == color
            if doc.quotient and doc.kind.startswith("compare"):
                assert dot_edges(text, "b") == {tuple(p) for p in doc.quotient["hasse"]}


def test_dot_labels(spaces):
    text = to_dot(spectrum_document(spaces("S3")))
    assert 'label="P(C3,3)"' in text and 'label="P(S3,q*)"' in text


def test_outputs_are_deterministic(spaces, groups):
    first = [(d.to_json(), to_dot(d), to_ascii(d)) for d in documents(spaces, groups)]
    fresh = [(d.to_json(), to_dot(d), to_ascii(d)) for d in (
        spectrum_document(build_spectrum(groups("D8"), local=2)),)]
    assert fresh[0] in first
    assert first == [(d.to_json(), to_dot(d), to_ascii(d)) for d in documents(spaces, groups)]


def test_ascii_d8_two_local(capsys):
    code, out, _ = run(capsys, "spec", "D8", "--local", "2", "--format", "ascii")
    assert code == 0
    lines = out.splitlines()
    rows = {ln.split()[0]: ln for ln in lines if ln.startswith("  0") or ln.startswith("  2 ")}
    assert set(rows) == {"0", "2"}
    assert all(rows[s].count("o") == 8 for s in rows)
    assert lines.index(rows["0"]) < lines.index(rows["2"])
    covers = [ln for ln in lines if "->" in ln and ln.startswith("  P(")]
    assert len(covers) == len(hasse_pairs(build_spectrum(build_group("D8"), local=2).leq))


def test_burnside_s3_json(capsys):
    code, out, _ = run(capsys, "burnside", "S3", "--local", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    slot = lambda g: data["points"][g[0]]["slot"]  # noqa: E731
    assert sum(1 for g in data["gluing"] if slot(g) == "3") == 3
    assert sum(1 for g in data["gluing"] if slot(g) == "0") == 4


def test_spec_trivial_group_json(capsys):
    code, out, _ = run(capsys, "spec", "C1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [p["slot"] for p in data["points"]] == ["0", "q*"]
    assert data["specialization"] == [[1, 0]]


def test_compare_and_shg(capsys):
    code, out, _ = run(capsys, "compare", "D8", "--local", "2", "--format", "ascii")
    assert code == 0 and "--rho-->" in out and "closed points: 1" in out
    assert "{1,C2a,C2b,C2c,V4a,V4b,C4,D8}" in out
    code, out, _ = run(capsys, "compare", "S3", "--shg", "--format", "json")
    data = json.loads(out)
    assert data["kind"] == "compare-shg"
    for p, c in zip(data["points"], data["chromatic"]):
        assert c["height"] == (1 if p["slot"] == "0" else "inf")


def test_ideals_modes(capsys):
    code, out, _ = run(capsys, "ideals", "C3", "--local", "3", "--list", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["admissible_count"] == 7 and len(data["admissible"]) == 7
    code, out, _ = run(capsys, "ideals", "S3", "--format", "json")
    counts = json.loads(out)["admissible_counts"]
    assert set(counts) == {"2", "3", "5"} and counts["5"] == 3**4
    code, out, err = run(capsys, "ideals", "C2 x C2 x C2 x C2", "--local", "2", "--list", "--format", "json")
    assert code == 0 and "listing limit" in err and err.count("\n") == 1
    assert "admissible" not in json.loads(out)
    code, out, _ = run(capsys, "ideals", "S3", "--local", "2", "--count")
    assert "admissible subsets: " in out


def test_subgroups_verb(capsys):
    code, out, _ = run(capsys, "subgroups", "D8")
    assert code == 0 and "10 subgroups, 8 conjugacy classes" in out
    code, out, _ = run(capsys, "subgroups", "S4", "--format", "json")
    data = json.loads(out)
    assert data["subgroup_count"] == 30 and data["class_count"] == 11


@pytest.mark.parametrize(
    "argv, code",
    [
        (["spec", "Z7"], cli.EXIT_PARSE),
        (["spec", "perm:(0 1"], cli.EXIT_PARSE),
        (["spec", "S7"], cli.EXIT_CAP),
        (["spec", "S5", "--cap", "100"], cli.EXIT_CAP),
        (["golden", "S4", "2"], cli.EXIT_USAGE),
        (["golden"], cli.EXIT_USAGE),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [["spec", "S3", "--local", "4"], ["spec", "S3", "--bogus"], ["frobnicate", "S3"],
                                  ["spec", "S3", "--format", "svg"], ["ideals", "S3", "--count", "--list"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == cli.EXIT_USAGE
    assert capsys.readouterr().err


def test_output_and_plot_files(tmp_path, capsys):
    out_file = tmp_path / "d8.dot"
    png = tmp_path / "d8.png"
    code, out, _ = run(capsys, "compare", "D8", "--local", "2", "--format", "dot", "-o", str(out_file),
                       "--plot", str(png))
    assert code == 0 and out == ""
    assert out_file.read_text().startswith("digraph")
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    for verb in ("spec", "subgroups", "burnside"):
        target = tmp_path / f"{verb}.svg"
        assert run(capsys, verb, "S3", "--no-color", "--plot", str(target))[0] == 0
        assert target.read_text().lstrip().startswith("<?xml")


@pytest.mark.parametrize("key", sorted(GOLDEN))
def test_golden_entries_pass(key):
    report = golden_check(*key)
    assert report.ok, str(report)
    assert report.checks == 5


def test_golden_detects_mismatch(monkeypatch):
    bad = dict(GOLDEN[("S3", 3)], fibers=[[1, 2, 3], [6]])
    monkeypatch.setitem(GOLDEN, ("S3", 3), bad)
    report = golden_check("S3", 3)
    assert not report.ok and "fibers" in report.failures[0]
    assert "FAIL" in str(report)


def test_golden_cli(capsys):
    code, out, _ = run(capsys, "golden", "--all")
    assert code == 0 and out.count(": pass") == len(GOLDEN)
    code, out, _ = run(capsys, "golden", "D8", "2")
    assert code == 0 and "pass" in out


def test_q8_summary_is_frozen():
    assert compute_summary("Q8", 2)["fibers"] == [[1, 2, 4, 4, 4, 8]]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mackeyspec", "spec", "C2", "--format", "json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["group"]["order"] == 2
