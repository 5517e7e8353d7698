import json
import subprocess
import sys

import pytest

from tuttecov.cli import main
from tuttecov.dctree import expand_leaf, indecomposable_covering, covering_from_tree, trivial_tree
from tuttecov.io import covering_to_json, matroid_to_json
from tuttecov.matroid import EMPTY, uniform
from tuttecov.pivot import MAX_INDEX


@pytest.fixture
def files(tmp_path):
    paths = {}
    (tmp_path / "triangle.graph").write_text("# K3\na 1 2\nb 2 3\nc 1 3\n")
    paths["triangle"] = tmp_path / "triangle.graph"
    for name, M in [("u12", uniform(1, 2, ["a", "b"])), ("empty", EMPTY), ("u23", uniform(2, 3, ["a", "b", "c"]))]:
        p = tmp_path / f"{name}.matroid"
        p.write_text(json.dumps(matroid_to_json(M)))
        paths[name] = p
    (tmp_path / "bad.matroid").write_text(json.dumps({"ground": ["a", "b"], "bases": [["a"], ["a", "b"]]}))
    paths["bad"] = tmp_path / "bad.matroid"
    (tmp_path / "broken.matroid").write_text("{not json")
    paths["broken"] = tmp_path / "broken.matroid"
    big = tmp_path / "big.graph"
    big.write_text("".join(f"e{i} a b\n" for i in range(65)))
    paths["big"] = big
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_tutte_triangle(capsys, files):
    for engine in ("direct", "dc", "dc-memo"):
        code, out, _ = run(capsys, "tutte", "--engine", engine, files["triangle"])
        assert code == 0 and out == "x^2 + x + y\n"


def test_tutte_empty(capsys, files):
    assert run(capsys, "tutte", files["empty"])[:2] == (0, "1\n")


def test_tutte_json(capsys, files):
    code, out, _ = run(capsys, "tutte", "--format", "json", files["u12"])
    assert json.loads(out) == {"terms": [{"x": 0, "y": 1, "c": "1"}, {"x": 1, "y": 0, "c": "1"}]}


def test_k0(capsys, files):
    code, out, _ = run(capsys, "k0", files["u12"])
    assert code == 0
    assert json.loads(out) == {
        "classes": [{"loops": 0, "coloops": 1, "coeff": 1}, {"loops": 1, "coloops": 0, "coeff": 1}]
    }


def test_tree_and_cover(capsys, files):
    code, out, _ = run(capsys, "tree", files["u23"])
    assert code == 0 and len(json.loads(out)["nodes"]) == 5
    code, out, _ = run(capsys, "tree", "--format", "dot", files["u23"])
    assert out.startswith("digraph")
    code, out, _ = run(capsys, "cover", "--strategy", "max-index", files["u23"])
    assert len(json.loads(out)["legs"]) == 3


def test_refine(capsys, files, tmp_path):
    M = uniform(2, 3, ["a", "b", "c"])
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(covering_to_json(covering_from_tree(expand_leaf(trivial_tree(M), 0, "a")))))
    b.write_text(json.dumps(covering_to_json(indecomposable_covering(M, MAX_INDEX))))
    code, out, _ = run(capsys, "refine", a, b)
    data = json.loads(out)
    assert code == 0 and len(data["legs"]) == 3
    assert [m["leg"] for m in data["into_first"]] == [0, 1, 1]
    code, out, _ = run(capsys, "refine", "--format", "text", a, b)
    assert out.startswith("3 legs")


def test_refine_mismatch(capsys, files, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(covering_to_json(indecomposable_covering(uniform(1, 2)))))
    b.write_text(json.dumps(covering_to_json(indecomposable_covering(uniform(2, 3)))))
    assert run(capsys, "refine", a, b)[0] == 2


def test_info(capsys, files):
    code, out, _ = run(capsys, "info", files["u12"])
    assert code == 0
    assert "rank: 1" in out and "element a: non-degenerate" in out
    assert "indecomposable: no" in out and "automorphisms: 2" in out
    code, out, _ = run(capsys, "info", "--format", "json", files["empty"])
    assert json.loads(out)["class"] == [0, 0]


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", files["triangle"])
    assert code == 0 and "DISAGREES" not in out and "axioms: ok" in out


def test_exit_codes(capsys, files):
    assert run(capsys, "tutte", files["bad"])[0] == 2
    assert run(capsys, "tutte", files["broken"])[0] == 1
    assert run(capsys, "tutte", files["big"])[0] == 3
    assert run(capsys, "tutte", "--engine", "nope", files["u12"])[0] == 1
    assert run(capsys, "frobnicate", files["u12"])[0] == 1
    assert run(capsys, "info", "--format", "dot", files["u12"])[0] == 1
    assert run(capsys, "tutte", "/nonexistent.matroid")[0] == 1


def test_input_kind_override(capsys, files, tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text(files["triangle"].read_text())
    assert run(capsys, "tutte", "--input-kind", "graph", p)[1] == "x^2 + x + y\n"


def test_seeded_deterministic(capsys, files):
    first = run(capsys, "cover", "--strategy", "random", "--seed", "4", files["u23"])
    second = run(capsys, "cover", "--strategy", "random", "--seed", "4", files["u23"])
    assert first == second


def test_module_entry_byte_identical(files):
    cmd = [sys.executable, "-m", "tuttecov", "tree", str(files["triangle"])]
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]
