import json

import pytest

from troplex.cli import main
from troplex.jobspec import bundled_path, load_job

EX = str(bundled_path("one_relator.json"))
ORB = str(bundled_path("orbifold_g2.json"))
WR = str(bundled_path("wraag_k4.json"))


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def json_head(out):
    """bns-bound prints a JSON document, a blank line, then prose."""
    return json.loads(out.split("\n\n", 1)[0])


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out == "troplex 0.1.0\n"


def test_alexander_goldens(capsys):
    assert run(capsys, "alexander", EX, "--rep", "s3") == (
        0, "1 - 2*t1 + t1^2 - 3*t2^2\n", "")
    assert run(capsys, "alexander", EX, "--rep", "trivial") == (0, "1 - t1\n", "")
    assert run(capsys, "alexander", EX, "--rep", "s3", "--ring", "fp:3") == (
        0, "1 + t1 + t1^2\n", "")
    assert run(capsys, "alexander", EX, "--rep", "s3", "--ring", "fp:3",
               "--squarefree") == (0, "1 + 2*t1\n", "")


def test_trop_tsv_integral(capsys):
    rc, out, err = run(capsys, "trop", EX, "--rep", "s3", "--valuation", "Z")
    assert rc == 0 and err == ""
    assert out.splitlines() == [
        "ray\t0\t0\t-1\t-1\t.\t.\t0,2;2,0",
        "ray\t0\t0\t0\t1\t.\t.\t0,0;1,0;2,0",
        "ray\t0\t0\t1\t0\t.\t.\t0,0;0,2",
        "cone2\t0\t0\t-1\t-1\t1\t0\t0,2",
    ]


def test_trop_tsv_valued_field(capsys):
    rc, out, err = run(capsys, "trop", EX, "--rep", "s3", "--valuation", "p-adic:3")
    assert rc == 0
    assert out.splitlines() == [
        "ray\t0\t-1/2\t-1\t-1\t.\t.\t0,2;2,0",
        "ray\t0\t-1/2\t0\t1\t.\t.\t0,0;1,0;2,0",
        "ray\t0\t-1/2\t1\t0\t.\t.\t0,0;0,2",
    ]
    rc, out, err = run(capsys, "trop", EX, "--rep", "trivial", "--valuation", "trivial")
    assert rc == 0
    assert out.splitlines() == [
        "ray\t0\t0\t0\t-1\t.\t.\t0,0;1,0",
        "ray\t0\t0\t0\t1\t.\t.\t0,0;1,0",
    ]


def test_trop_contains(capsys):
    assert run(capsys, "trop", EX, "--rep", "s3", "--valuation", "Z",
               "--contains", "1,-1") == (0, "yes\n", "")
    assert run(capsys, "trop", EX, "--rep", "s3", "--valuation", "Z",
               "--contains", "5,1") == (0, "no\n", "")
    # zero polynomial: every point is a member, but there is no finite cell list
    assert run(capsys, "trop", ORB, "--rep", "trivial", "--valuation", "Z",
               "--contains", "1,2,0,-1") == (0, "yes\n", "")
    rc, out, err = run(capsys, "trop", ORB, "--rep", "trivial", "--valuation", "Z")
    assert rc == 3 and out == ""
    assert err == "degenerate: Delta = 0, tropical set is all of R^4\n"


def test_trop_svg(capsys, tmp_path):
    target = tmp_path / "fig.svg"
    rc, out, err = run(capsys, "trop", EX, "--rep", "s3", "--valuation", "Z",
                       "--svg", str(target))
    assert rc == 0
    text = target.read_text()
    assert text.lstrip().startswith("<svg") or "<svg" in text
    assert "</svg>" in text


def test_bns_bound_sharp(capsys):
    rc, out, err = run(capsys, "bns-bound", EX, "--rep", "s3", "--rep", "trivial",
                       "--fixture", "brown_one_relator")
    assert rc == 0 and err == ""
    doc = json_head(out)
    assert doc["vacuous"] is False and doc["excluded"] == []
    assert doc["comparison"] == {"fixture": "brown_one_relator", "result": "Equal",
                                 "difference": []}
    assert doc["bound"] == [
        {"kind": "point", "dir": [0, 1]},
        {"kind": "arc", "start": [-1, -1], "end": [1, 0],
         "closed_start": True, "closed_end": True},
    ]
    assert out.strip().splitlines()[-1] == "comparison: Equal"


def test_bns_bound_weaker(capsys):
    rc, out, err = run(capsys, "bns-bound", EX, "--rep", "trivial",
                       "--fixture", "brown_one_relator")
    assert rc == 0
    doc = json_head(out)
    assert doc["comparison"]["result"] == "BoundWeaker"
    diff = doc["comparison"]["difference"]
    assert [c["kind"] for c in diff] == ["arc", "arc"]
    assert out.strip().splitlines()[-1] == "comparison: BoundWeaker"


def test_bns_bound_vacuous(capsys, tmp_path):
    doc = json.load(open(EX))
    doc["representations"] = {
        "q3": {"ring": "Q", "matrices": {"x1": [["3"]], "x2": [["3"]]}}}
    doc["valuations"] = []
    path = tmp_path / "q3.json"
    path.write_text(json.dumps(doc))
    rc, out, err = run(capsys, "bns-bound", str(path), "--rep", "q3",
                       "--valuation", "p-adic:3")
    assert rc == 3
    head = json_head(out)
    assert head["vacuous"] is True
    assert head["excluded"] == [{"admissible": False, "descriptor": "q3",
                                 "mode": "3-adic", "reason": "det valuation 1 != 0"}]
    assert "bound: vacuous (no admissible entries)" in out


def test_bns_bound_violation(capsys, tmp_path):
    path = tmp_path / "orb12.json"
    rc, out, err = run(capsys, "orbifold", "--g", "1", "--mu", "2", "-o", str(path))
    assert rc == 0
    rc, out, err = run(capsys, "bns-bound", str(path), "--rep", "trivial",
                       "--valuation", "fp:2", "--fixture", "brown_one_relator")
    assert rc == 4
    assert err == ("violation: fixture arcs escape the computed complement; "
                   "this contradicts the bound and is a bug\n")
    assert json_head(out)["comparison"]["result"] == "Violation"


def test_kaehler_goldens(capsys, tmp_path):
    rc, out, err = run(capsys, "kaehler-test", WR, "--fields", "q,fp:2")
    assert rc == 0
    assert out == ("Q: Delta = 1\n"
                   "F_2: Delta = 1 + t1\n"
                   "NOT KAHLER (witness: F_2, Delta = 1 + t1)\n")
    rc, out, err = run(capsys, "kaehler-test", ORB, "--fields", "q,fp:2,fp:3")
    assert rc == 0
    assert out.endswith("consistent (Delta = 0)\n")
    rc, out, err = run(capsys, "kaehler-test", EX, "--rep", "s3",
                       "--fields", "q,fp:2,fp:3,fp:5")
    assert rc == 0
    assert out == ("Q: Delta = 1 - 2*t1 + t1^2 - 3*t2^2\n"
                   "F_2: Delta = 1 + t1 + t2\n"
                   "F_3: Delta = 1 + 2*t1\n"
                   "F_5: Delta = 1 + 3*t1 + t1^2 + 2*t2^2\n"
                   "NOT KAHLER (witness: Q, Delta = 1 - 2*t1 + t1^2 - 3*t2^2)\n")
    # complete weight-13 triangle: unit over Q, zero over F_13, consistent both ways
    graph = tmp_path / "g3graph.json"
    graph.write_text(json.dumps(
        {"name": "g3", "vertices": 3, "edges": [[1, 2, 13], [1, 3, 13], [2, 3, 13]]}))
    g3doc = tmp_path / "g3.json"
    rc, out, err = run(capsys, "wraag", "--graph", str(graph), "-o", str(g3doc))
    assert rc == 0
    rc, out, err = run(capsys, "kaehler-test", str(g3doc), "--fields", "q,fp:13")
    assert rc == 0
    assert out == ("Q: Delta = 1\n"
                   "F_13: Delta = 0\n"
                   "consistent (Delta = 1; 0)\n")


def test_orbifold_document(capsys, tmp_path):
    rc, out, err = run(capsys, "orbifold", "--g", "1", "--mu", "2")
    assert rc == 0
    doc = json.loads(out)
    assert doc["name"] == "orbifold_g1_mu2"
    assert doc["presentation"] == {
        "generators": ["x1", "y1", "z1"],
        "relators": ["x1 y1 x1^-1 y1^-1 z1", "z1^2"],
    }
    path = tmp_path / "o.json"
    rc, out, err = run(capsys, "orbifold", "--g", "2", "-o", str(path))
    assert rc == 0 and out == ""
    job = load_job(path)
    assert job.presentation.ngens == 4
    assert job.representation("trivial").rank == 1


def test_wraag_document(capsys, tmp_path):
    graph = tmp_path / "g.json"
    graph.write_text(json.dumps({"vertices": ["u", "v"], "edges": [[1, 2, 2]]}))
    rc, out, err = run(capsys, "wraag", "--graph", str(graph))
    assert rc == 0
    doc = json.loads(out)
    assert doc["presentation"] == {
        "generators": ["u", "v"],
        "relators": ["u v u^-1 v^-1 u v u^-1 v^-1"],
    }
    graph.write_text(json.dumps({"vertices": 2}))
    rc, out, err = run(capsys, "wraag", "--graph", str(graph))
    assert rc == 2 and err == "error: graph document needs an 'edges' list\n"


def test_product_document(capsys, tmp_path):
    path = tmp_path / "p.json"
    rc, out, err = run(capsys, "product", EX, EX, "-o", str(path))
    assert rc == 0
    doc = json.loads(path.read_text())
    assert doc["name"] == "one_relator_x_one_relator"
    assert doc["presentation"]["generators"] == ["x1", "x2", "x1'", "x2'"]
    job = load_job(path)  # round trip through the schema + parser
    assert job.presentation.ngens == 4


def test_input_errors_exit_2(capsys):
    rc, out, err = run(capsys, "alexander", EX, "--rep", "bogus")
    assert rc == 2 and out == ""
    assert err == ("error: unknown representation 'bogus'; "
                   "document defines reg_s3, s3, trivial\n")
    rc, out, err = run(capsys, "alexander", "/nonexistent.json", "--rep", "t")
    assert rc == 2 and err.startswith("error: cannot read /nonexistent.json")
    rc, out, err = run(capsys, "trop", EX, "--rep", "s3", "--valuation", "bogus")
    assert rc == 2
    assert err == "error: unknown valuation 'bogus' (want Z, trivial, p-adic:P, or fp:P)\n"
    rc, out, err = run(capsys, "trop", EX, "--rep", "s3", "--valuation", "Z",
                       "--contains", "1")
    assert rc == 2 and err == "error: point '1' has 1 coordinates, need 2\n"
