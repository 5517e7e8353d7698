import json

import pytest

from tuttecov.dctree import (
    covering_from_tree,
    expand_leaf,
    indecomposable_covering,
    trivial_tree,
    validate_tree,
)
from tuttecov.errors import InvalidCover, InvalidMatroid, ParseError
from tuttecov.io import (
    covering_from_json,
    covering_to_json,
    matroid_from_json,
    matroid_to_json,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)
from tuttecov.matroid import uniform

U23 = uniform(2, 3, ["a", "b", "c"])


def test_matroid_roundtrip():
    data = matroid_to_json(U23)
    assert data["ground"] == ["a", "b", "c"]
    assert matroid_from_json(json.dumps(data)) == U23


def test_matroid_from_independent():
    data = {"ground": ["a", "b"], "independent": [[], ["a"], ["b"]]}
    assert matroid_from_json(data) == uniform(1, 2, ["a", "b"])


@pytest.mark.parametrize(
    "data, key",
    [
        ({"bases": [[]]}, "ground"),
        ({"ground": ["a"]}, "bases"),
        ({"ground": ["a"], "bases": [["a"]], "independent": [[]]}, "bases"),
        ({"ground": [1], "bases": [[]]}, "ground"),
        ({"ground": ["a"], "independent": "a"}, "independent"),
    ],
)
def test_matroid_parse_errors(data, key):
    with pytest.raises(ParseError) as info:
        matroid_from_json(data)
    assert info.value.key == key


def test_invalid_matroid():
    with pytest.raises(InvalidMatroid):
        matroid_from_json({"ground": ["a", "b"], "bases": [["a"], ["a", "b"]]})


def test_tree_roundtrip():
    t = indecomposable_covering(U23).witness
    data = json.loads(json.dumps(tree_to_json(t)))
    assert tree_from_json(data) == t
    assert all(set(n) == {"id", "matroid", "children"} for n in data["nodes"])


def test_tree_normalized_on_input():
    t = expand_leaf(trivial_tree(U23), 0, "a")
    data = tree_to_json(t)
    ref = data["nodes"][1]["matroid"]
    data["matroids"][ref]["ground"] = ["p", "q"]
    data["matroids"][ref]["bases"] = [["p", "q"]]
    loaded = tree_from_json(data)
    assert validate_tree(loaded) and loaded == t
    assert not validate_tree(tree_from_json(data, normalize=False))


def test_covering_roundtrip():
    c = covering_from_tree(expand_leaf(trivial_tree(U23), 0, "b"))
    assert covering_from_json(json.dumps(covering_to_json(c))) == c
    data = covering_to_json(c)
    data["legs"][0]["map"] = {"a": "c", "c": "a"}
    with pytest.raises(InvalidCover):
        covering_from_json(data)


def test_dot():
    dot = tree_to_dot(expand_leaf(trivial_tree(U23), 0, "a"))
    assert 'label="\\\\a"' in dot and 'label="/a"' in dot
    assert dot.startswith("digraph")
