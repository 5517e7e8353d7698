"""JSON and DOT serialization for matroids, trees, coverings and graphs."""

from __future__ import annotations

import json
from pathlib import Path

from .dctree import (
    DCTree,
    Link,
    Node,
    Op,
    TutteCovering,
    covering_from_tree,
    normalize_tree,
)
from .errors import InvalidCover, ParseError
from .graph import graphic_matroid, parse_graph
from .matroid import Matroid, from_bases, from_independent_sets


def matroid_to_json(M: Matroid) -> dict:
    return {
        "ground": list(M.labels),
        "bases": [[M.labels[i] for i in range(M.size) if int(b) >> i & 1] for b in M.bases],
    }


def matroid_from_json(data) -> Matroid:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("matroid JSON must be an object")
    if "ground" not in data:
        raise ParseError("missing key 'ground'", key="ground")
    ground = data["ground"]
    if not isinstance(ground, list) or not all(isinstance(x, str) for x in ground):
        raise ParseError("'ground' must be an array of strings", key="ground")
    present = [k for k in ("bases", "independent") if k in data]
    if len(present) != 1:
        raise ParseError("exactly one of 'bases' or 'independent' is required", key="bases")
    (key,) = present
    family = data[key]
    if not isinstance(family, list) or not all(
        isinstance(s, list) and all(isinstance(x, str) for x in s) for s in family
    ):
        raise ParseError(f"'{key}' must be an array of arrays of strings", key=key)
    build = from_bases if key == "bases" else from_independent_sets
    return build(ground, family)


def tree_to_json(t: DCTree) -> dict:
    refs: dict[Matroid, str] = {}
    matroids = {}
    nodes = []
    for node in t.nodes:
        if node.matroid not in refs:
            refs[node.matroid] = f"m{len(refs)}"
            matroids[refs[node.matroid]] = matroid_to_json(node.matroid)
        nodes.append(
            {
                "id": node.id,
                "matroid": refs[node.matroid],
                "children": [
                    {"op": lk.op.value, "element": lk.element, "node": lk.child}
                    for lk in node.children
                ],
            }
        )
    return {"root": t.root, "matroids": matroids, "nodes": nodes}


def _field(obj, key, where):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise ParseError(f"{where}: missing key {key!r}", key=key) from None


def tree_from_json(data, normalize: bool = True) -> DCTree:
    """Read a tree; with ``normalize`` children merely isomorphic to the
    literal minors are replaced by those minors."""
    if isinstance(data, str):
        data = json.loads(data)
    raw = _field(data, "matroids", "tree")
    if not isinstance(raw, dict):
        raise ParseError("'matroids' must be an object", key="matroids")
    matroids = {ref: matroid_from_json(m) for ref, m in raw.items()}
    entries = _field(data, "nodes", "tree")
    ids = sorted(_field(e, "id", "node") for e in entries)
    if ids != list(range(len(entries))):
        raise ParseError("node ids must be 0..N-1", key="id")
    nodes = [None] * len(entries)
    for e in entries:
        ref = _field(e, "matroid", f"node {e['id']}")
        if ref not in matroids:
            raise ParseError(f"node {e['id']}: unknown matroid ref {ref!r}", key="matroid")
        links = []
        for ch in e.get("children", []):
            try:
                op = Op(_field(ch, "op", "child"))
            except ValueError:
                raise ParseError(f"unknown op {ch['op']!r}", key="op") from None
            links.append(Link(op, ch.get("element"), int(_field(ch, "node", "child"))))
        nodes[e["id"]] = Node(e["id"], matroids[ref], tuple(links))
    t = DCTree(tuple(nodes), int(data.get("root", 0)))
    if normalize:
        t, _ = normalize_tree(t)
    return t


def covering_to_json(c: TutteCovering) -> dict:
    data = tree_to_json(c.witness)
    data["legs"] = [
        {"node": leaf, "map": dict(leg.mapping)}
        for leaf, leg in zip(c.witness.leaves(), c.legs)
    ]
    return data


def covering_from_json(data) -> TutteCovering:
    """Covering carried by its witness tree; any listed legs must match it."""
    if isinstance(data, str):
        data = json.loads(data)
    c = covering_from_tree(tree_from_json(data))
    if "legs" in data:
        listed = data["legs"]
        leaves = c.witness.leaves()
        if len(listed) != len(leaves):
            raise InvalidCover(f"{len(listed)} legs listed but the tree has {len(leaves)} leaves")
        for k, (entry, leaf, leg) in enumerate(zip(listed, leaves, c.legs)):
            if entry.get("node") != leaf or entry.get("map") != dict(leg.mapping):
                raise InvalidCover(f"leg {k} does not match the witness tree")
    return c


def tree_to_dot(t: DCTree) -> str:
    lines = ["digraph dctree {", "  node [shape=box];"]
    for node in t.nodes:
        M = node.matroid
        label = f"{node.id}: n={M.size} r={M.rank} |B|={len(M.bases)}"
        lines.append(f'  n{node.id} [label="{label}"];')
    for node in t.nodes:
        for lk in node.children:
            if lk.op is Op.DELETE:
                text = "\\\\" + lk.element
            elif lk.op is Op.CONTRACT:
                text = "/" + lk.element
            else:
                text = "="
            lines.append(f'  n{node.id} -> n{lk.child} [label="{text}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_matroid(path: str | Path, kind: str | None = None) -> Matroid:
    """Read a ``.matroid`` JSON or ``.graph`` edge-list file."""
    path = Path(path)
    if kind is None:
        kind = "graph" if path.suffix == ".graph" else "matroid"
    text = path.read_text()
    if kind == "graph":
        return graphic_matroid(parse_graph(text))
    return matroid_from_json(text)


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"
