import csv
import io
import json
import subprocess
import sys

import jsonschema
import numpy as np
import pytest

from diamaug import generate, parse_instance, random_path
from diamaug.cli import main
from diamaug.instances import INSTANCE_SCHEMA, RESULT_SCHEMA, InstanceError, path_to_dict, tree_to_dict

SQUARE = {"kind": "path", "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}
COLLINEAR = {"kind": "path", "points": [[0, 0], [1, 0], [2.5, 0], [4, 0]]}
STAR = {"kind": "tree", "points": [[0, 0], [1, 0], [-0.5, 0.8660254037844386], [-0.5, -0.8660254037844386]],
        "edges": [[1, 2], [1, 3], [1, 4]]}
SQUARE_TREE = dict(SQUARE, kind="tree", edges=[[1, 2], [2, 3], [3, 4]])


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        f = tmp_path / name
        f.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(f)
    return _write


def run(capsys, *argv):
    code = main(["--threads", "1", *argv])
    out = capsys.readouterr().out
    return code, out


def result(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, RESULT_SCHEMA)
    return data


def test_decide(capsys, write):
    f = write("square.json", SQUARE)
    assert result(capsys, "decide", "--input", f, "--lambda", "2.0")["shortcut"] == [1, 4]
    r = result(capsys, "decide", "--input", f, "--lambda", "1.5")
    assert r["shortcut"] is None and r["lambda"] == 1.5
    g = write("line.json", COLLINEAR)
    assert result(capsys, "decide", "--input", g, "--lambda", "4")["shortcut"] is not None


def test_path_exact(capsys, write):
    assert result(capsys, "path-exact", "--input", write("s.json", SQUARE))["diameter"] == 2.0
    r = result(capsys, "path-exact", "--input", write("c.json", COLLINEAR))
    assert r["diameter"] == r["original_diameter"]


def test_path_approx(capsys, write):
    r = result(capsys, "path-approx", "--input", write("s.json", SQUARE), "--eps", "0.5")
    assert r["diameter"] <= 3.0 and r["eps"] == 0.5
    r = result(capsys, "path-approx", "--input", write("c.json", COLLINEAR), "--eps", "0.1")
    assert r["diameter"] == r["original_diameter"]


def test_path_approx_random_1000(capsys, write):
    f = write("r.json", generate("path", 1000, 5))
    exact = result(capsys, "path-exact", "--input", f)["diameter"]
    assert result(capsys, "path-approx", "--input", f, "--eps", "0.1")["diameter"] <= 1.1 * exact


def test_tree_exact(capsys, write):
    r = result(capsys, "tree-exact", "--input", write("star.json", STAR))
    assert r["shortcut"] is None and r["diameter"] == pytest.approx(2.0)
    sq = result(capsys, "tree-exact", "--input", write("sqt.json", SQUARE_TREE), "--inner", "bsearch")
    assert sq["shortcut"] == [1, 4] and sq["diameter"] == 2.0
    f = write("t11.json", generate("tree", 25, 11))
    a = result(capsys, "tree-exact", "--input", f)
    b = result(capsys, "brute", "--input", f)
    assert a["diameter"] == pytest.approx(b["diameter"], abs=1e-9)


def test_brute(capsys, write):
    r = result(capsys, "brute", "--input", write("s.json", SQUARE))
    assert r["diameter"] == 2.0 and r["shortcut"] == [1, 4]
    assert result(capsys, "brute", "--input", write("star.json", STAR))["diameter"] == pytest.approx(2.0)
    assert result(capsys, "brute", "--input", write("c.json", COLLINEAR))["diameter"] == 4.0


def test_gen_collinear_and_deterministic(capsys):
    code, a = run(capsys, "gen", "--kind", "path", "--n", "4", "--seed", "3", "--dist", "collinear")
    assert code == 0
    data = json.loads(a)
    jsonschema.validate(data, INSTANCE_SCHEMA)
    assert all(p[1] == 0 for p in data["points"])
    _, b = run(capsys, "gen", "--kind", "path", "--n", "4", "--seed", "3", "--dist", "collinear")
    assert a == b


def test_gen_round_trip(capsys):
    for kind in ("path", "tree"):
        _, out = run(capsys, "gen", "--kind", kind, "--n", "9", "--seed", "2")
        data = json.loads(out)
        jsonschema.validate(data, INSTANCE_SCHEMA)
        k, inst = parse_instance(data)
        again = path_to_dict(inst) if k == "path" else tree_to_dict(inst)
        assert again["points"] == data["points"]
        if k == "tree":
            assert again["edges"] == data["edges"]


def test_order_round_trip():
    data = dict(SQUARE, order=[2, 1, 3, 4])
    _, p = parse_instance(data)
    assert p.order.tolist() == [1, 0, 2, 3]
    assert path_to_dict(p)["order"] == [2, 1, 3, 4]


def test_shortcut_points_follow_order(capsys, write):
    # reversing the order keeps the path geometry, so the best positions are still 1 and 4
    f = write("rev.json", dict(SQUARE, order=[4, 3, 2, 1]))
    r = result(capsys, "path-exact", "--input", f)
    assert r["shortcut"] == [1, 4] and r["shortcut_points"] == [4, 1]


@pytest.mark.parametrize("bad", [
    "not json",
    {"kind": "path"},
    {"kind": "cycle", "points": [[0, 0]]},
    {"kind": "path", "points": [[0, 0], [1]]},
    {"kind": "tree", "points": [[0, 0], [1, 0], [2, 0]], "edges": [[1, 2]]},
    {"kind": "tree", "points": [[0, 0], [1, 0]], "edges": [[1, 5]]},
    {"kind": "path", "points": [[0, 0], [1, 0]], "distance_matrix": [[0, 1], [1, 0]]},
])
def test_malformed_exit_2(capsys, write, bad):
    code, _ = run(capsys, "path-exact", "--input", write("bad.json", bad))
    assert code == 2


def test_input_errors_exit_2(capsys, write):
    assert run(capsys, "gen", "--kind", "path", "--n", "0", "--seed", "1")[0] == 2
    assert run(capsys, "path-exact", "--input", write("two.json", {"kind": "path", "points": [[0], [1]]}))[0] == 2
    mat = {"kind": "path", "distance_matrix": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]}
    assert run(capsys, "path-approx", "--input", write("m.json", mat), "--eps", "0.5")[0] == 2
    assert run(capsys, "path-approx", "--input", write("s.json", SQUARE), "--eps", "1.5")[0] == 2
    assert run(capsys, "decide", "--input", write("s.json", SQUARE), "--lambda", "0")[0] == 2
    assert run(capsys, "path-exact", "--input", "/nonexistent/file.json")[0] == 2
    assert run(capsys, "bench", "--suite", "exact", "--sizes", "x")[0] == 2
    assert main(["no-such-command"]) == 2


def test_wrong_kind_exit_3(capsys, write):
    assert run(capsys, "path-exact", "--input", write("star.json", STAR))[0] == 3
    assert run(capsys, "decide", "--input", write("star.json", STAR), "--lambda", "1")[0] == 3
    assert run(capsys, "tree-exact", "--input", write("s.json", SQUARE))[0] == 3


def test_bench_csv(capsys):
    code, out = run(capsys, "bench", "--suite", "exact", "--sizes", "10,12", "--seed", "7", "--repeat", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["suite", "n", "eps", "seed", "runtime_ms", "diameter"]
    assert len(rows) == 4
    from diamaug.oracle import brute_force_path
    for row in rows:
        p = random_path(int(row["n"]), int(row["seed"]))
        assert float(row["diameter"]) == pytest.approx(brute_force_path(p).optimum, abs=1e-9)


@pytest.mark.parametrize("suite", ["decision", "approx", "tree"])
def test_bench_other_suites(capsys, suite):
    code, out = run(capsys, "bench", "--suite", suite, "--sizes", "50", "--eps", "0.5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 and rows[0]["suite"] == suite


def test_pipeline_through_stdin():
    gen = subprocess.run([sys.executable, "-m", "diamaug", "gen", "--kind", "path", "--n", "30", "--seed", "7"],
                         capture_output=True, text=True, check=True)
    outs = []
    for cmd in ("path-exact", "brute"):
        r = subprocess.run([sys.executable, "-m", "diamaug", cmd, "--input", "-"], input=gen.stdout,
                           capture_output=True, text=True, check=True)
        outs.append(json.loads(r.stdout))
    assert outs[0]["diameter"] == pytest.approx(outs[1]["diameter"], abs=1e-9)
    assert outs[0]["shortcut"] == outs[1]["shortcut"]


def test_parse_errors_are_instance_errors():
    with pytest.raises(InstanceError):
        parse_instance([])
    with pytest.raises(InstanceError):
        parse_instance({"kind": "path", "points": [[0, 0]], "order": [0]})
