"""Deletion-contraction trees, Tutte coverings and their refinements."""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    DegenerateElement,
    InvalidCover,
    InvalidParameters,
    InvalidTree,
    NotALeaf,
    NotIndecomposableCover,
    TargetMismatch,
)
from .matroid import (
    ElementClass,
    IndecomposableClass,
    Matroid,
    MatroidMorphism,
    are_isomorphic,
    classify_element,
    contract,
    delete,
    identity,
    inclusion,
    indecomposable_class,
    is_indecomposable,
)
from .pivot import MIN_INDEX, PivotStrategy


class Op(str, enum.Enum):
    DELETE = "delete"
    CONTRACT = "contract"
    PASS = "pass"


class Order(enum.Enum):
    DELETE_FIRST = "delete-first"
    CONTRACT_FIRST = "contract-first"


class _Basepoint:
    """The distinguished object ``*``; it never carries a matroid."""

    def __repr__(self):
        return "*"


BASEPOINT = _Basepoint()


@dataclass(frozen=True)
class Link:
    op: Op
    element: str | None
    child: int


@dataclass(frozen=True)
class Node:
    id: int
    matroid: Matroid
    children: tuple[Link, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class DCTree:
    """Rooted binary tree of matroids; ``nodes[i].id == i``.

    Constructors in this module keep node ids equal to positions and only
    ever append, so grafting and expansion never renumber existing nodes.
    """

    nodes: tuple[Node, ...]
    root: int = 0

    @property
    def matroid(self) -> Matroid:
        return self.nodes[self.root].matroid

    def node(self, node_id: int) -> Node:
        return self.nodes[node_id]

    def leaves(self) -> list[int]:
        """Leaf ids in depth-first, left-to-right order."""
        out = []
        stack = [self.root]
        while stack:
            node = self.nodes[stack.pop()]
            if node.is_leaf:
                out.append(node.id)
            else:
                stack.extend(link.child for link in reversed(node.children))
        return out

    def parents(self) -> dict[int, tuple[int, Link]]:
        return {link.child: (node.id, link) for node in self.nodes for link in node.children}

    def path_to_root(self, node_id: int, parents: dict | None = None) -> list[int]:
        up = self.parents() if parents is None else parents
        path = [node_id]
        while path[-1] in up:
            path.append(up[path[-1]][0])
        return path

    def __len__(self):
        return len(self.nodes)


def trivial_tree(M) -> DCTree:
    if M is BASEPOINT or not isinstance(M, Matroid):
        raise InvalidParameters("the root of a deletion-contraction tree must be a matroid")
    return DCTree((Node(0, M),))


def _replace(nodes: list[Node], node: Node) -> None:
    nodes[node.id] = node


def expand_leaf(t: DCTree, leaf: int, e: str, order: Order = Order.DELETE_FIRST) -> DCTree:
    """Split ``leaf`` into ``M \\ e`` and ``M / e`` at a non-degenerate ``e``."""
    node = t.nodes[leaf]
    if not node.is_leaf:
        raise NotALeaf(f"node {leaf} already has children")
    M = node.matroid
    kind = classify_element(M, e)
    if kind is not ElementClass.NONDEGENERATE:
        raise DegenerateElement(f"{e!r} is a {kind.value} of node {leaf}")
    nodes = list(t.nodes)
    d_id, c_id = len(nodes), len(nodes) + 1
    nodes.append(Node(d_id, delete(M, e)))
    nodes.append(Node(c_id, contract(M, e)))
    links = (Link(Op.DELETE, e, d_id), Link(Op.CONTRACT, e, c_id))
    if order is Order.CONTRACT_FIRST:
        links = links[::-1]
    _replace(nodes, Node(leaf, M, links))
    return DCTree(tuple(nodes), t.root)


def add_pass(t: DCTree, leaf: int) -> DCTree:
    """Give ``leaf`` a single child carrying the same matroid."""
    node = t.nodes[leaf]
    if not node.is_leaf:
        raise NotALeaf(f"node {leaf} already has children")
    nodes = list(t.nodes)
    child = len(nodes)
    nodes.append(Node(child, node.matroid))
    _replace(nodes, Node(leaf, node.matroid, (Link(Op.PASS, None, child),)))
    return DCTree(tuple(nodes), t.root)


def graft(t: DCTree, leaf: int, sub: DCTree) -> DCTree:
    """Hang ``sub`` below ``leaf``; both must carry the same matroid there."""
    node = t.nodes[leaf]
    if not node.is_leaf:
        raise NotALeaf(f"node {leaf} already has children")
    if sub.matroid != node.matroid:
        raise InvalidTree("grafted tree root differs from the leaf matroid")
    nodes = list(t.nodes)
    base = len(nodes)
    # sub's root is merged into the leaf; every other sub node is appended
    remap = {}
    for sn in sub.nodes:
        remap[sn.id] = leaf if sn.id == sub.root else base + sn.id - (sn.id > sub.root)
    for sn in sub.nodes:
        links = tuple(Link(lk.op, lk.element, remap[lk.child]) for lk in sn.children)
        new = Node(remap[sn.id], sn.matroid, links)
        if new.id == leaf:
            _replace(nodes, new)
        else:
            nodes.append(new)
    nodes.sort(key=lambda n: n.id)
    return DCTree(tuple(nodes), t.root)


def tree_problems(t: DCTree) -> list[str]:
    """Every violated tree invariant, re-deriving each child from its parent."""
    problems = []
    if not t.nodes:
        return ["tree has no nodes"]
    for pos, node in enumerate(t.nodes):
        if node.id != pos:
            problems.append(f"node at position {pos} has id {node.id}")
    if problems:
        return problems
    if not 0 <= t.root < len(t.nodes):
        return [f"root id {t.root} out of range"]
    root = t.nodes[t.root].matroid
    if root is BASEPOINT or not isinstance(root, Matroid):
        problems.append("root carries the basepoint")
    seen_parent: dict[int, int] = {}
    for node in t.nodes:
        for link in node.children:
            if not 0 <= link.child < len(t.nodes) or link.child == t.root:
                problems.append(f"node {node.id} links to invalid child {link.child}")
            elif link.child in seen_parent:
                problems.append(f"node {link.child} has two parents")
            else:
                seen_parent[link.child] = node.id
    if problems:
        return problems
    reachable = {t.root}
    stack = [t.root]
    while stack:
        for link in t.nodes[stack.pop()].children:
            reachable.add(link.child)
            stack.append(link.child)
    if len(reachable) != len(t.nodes):
        problems.append(f"nodes {sorted(set(range(len(t.nodes))) - reachable)} unreachable from root")
    for node in t.nodes:
        M = node.matroid
        kids = node.children
        if len(kids) > 2:
            problems.append(f"node {node.id} has {len(kids)} children")
        elif len(kids) == 1:
            link = kids[0]
            if link.op is not Op.PASS:
                problems.append(f"only child of node {node.id} is not a pass link")
            elif t.nodes[link.child].matroid != M:
                problems.append(f"pass child {link.child} differs from node {node.id}")
        elif len(kids) == 2:
            ops = {link.op for link in kids}
            elements = {link.element for link in kids}
            if ops != {Op.DELETE, Op.CONTRACT} or len(elements) != 1:
                problems.append(f"node {node.id} does not split on one element")
                continue
            (e,) = elements
            if e not in M.labels:
                problems.append(f"node {node.id} splits on unknown element {e!r}")
                continue
            if classify_element(M, e) is not ElementClass.NONDEGENERATE:
                problems.append(f"node {node.id} splits on degenerate element {e!r}")
            for link in kids:
                want = delete(M, e) if link.op is Op.DELETE else contract(M, e)
                if t.nodes[link.child].matroid != want:
                    problems.append(f"child {link.child} is not the {link.op.value} of {e!r}")
    return problems


def validate_tree(t: DCTree) -> bool:
    return not tree_problems(t)


def normalize_tree(t: DCTree) -> tuple[DCTree, dict[int, dict[str, str]]]:
    """Rewrite a tree whose nodes are only isomorphic to the literal minors.

    Returns the elementary tree together with, for each node whose matroid
    was replaced, a label bijection from the given matroid onto the literal
    minor. Raises InvalidTree when a node is not even isomorphic.
    """
    nodes = list(t.nodes)
    relabelings: dict[int, dict[str, str]] = {}
    order = [t.root]
    for nid in order:
        node = nodes[nid]
        M = node.matroid
        for link in node.children:
            given = nodes[link.child].matroid
            if link.op is Op.PASS:
                want = M
            elif link.op is Op.DELETE:
                want = delete(M, link.element)
            else:
                want = contract(M, link.element)
            if given != want:
                iso = are_isomorphic(given, want)
                if iso is None:
                    raise InvalidTree(f"node {link.child} is not isomorphic to its {link.op.value} minor")
                relabelings[link.child] = iso
                nodes[link.child] = Node(link.child, want, nodes[link.child].children)
            order.append(link.child)
    return DCTree(tuple(nodes), t.root), relabelings


# -- coverings -------------------------------------------------------------


@dataclass(frozen=True)
class TutteCovering:
    """Legs ``source -> target`` in leaf order, with the witnessing tree."""

    target: Matroid
    legs: tuple[MatroidMorphism, ...]
    witness: DCTree = field(compare=False)

    @property
    def sources(self) -> list[Matroid]:
        return [leg.source for leg in self.legs]

    def __len__(self):
        return len(self.legs)


def _path_leg(t: DCTree, leaf: int, parents: dict | None = None) -> MatroidMorphism:
    path = t.path_to_root(leaf, parents)
    leg = identity(t.nodes[leaf].matroid)
    for lower, upper in zip(path, path[1:]):
        step = inclusion(t.nodes[lower].matroid, t.nodes[upper].matroid)
        leg = step.compose(leg)
    return leg


def covering_from_tree(t: DCTree) -> TutteCovering:
    problems = tree_problems(t)
    if problems:
        raise InvalidTree("; ".join(problems))
    up = t.parents()
    legs = tuple(_path_leg(t, leaf, up) for leaf in t.leaves())
    return TutteCovering(t.matroid, legs, t)


def covering_problems(c: TutteCovering) -> list[str]:
    problems = tree_problems(c.witness)
    if problems:
        return problems
    if c.witness.matroid != c.target:
        problems.append("witness root differs from the covering target")
    up = c.witness.parents()
    expected = [_path_leg(c.witness, leaf, up) for leaf in c.witness.leaves()]
    if len(expected) != len(c.legs):
        problems.append(f"{len(c.legs)} legs but {len(expected)} leaves")
    for k, (leg, want) in enumerate(zip(c.legs, expected)):
        if leg != want:
            problems.append(f"leg {k} is not the root-path inclusion of its leaf")
    return problems


def _full_expansion(M: Matroid, choose, order: Order) -> DCTree:
    nodes: list[Node] = []

    def build(N: Matroid) -> int:
        nid = len(nodes)
        nodes.append(Node(nid, N))
        mask = N.nondegenerate_mask
        if mask:
            e = N.labels[choose(N, mask)]
            d = build(delete(N, e))
            c = build(contract(N, e))
            links = (Link(Op.DELETE, e, d), Link(Op.CONTRACT, e, c))
            if order is Order.CONTRACT_FIRST:
                links = links[::-1]
            nodes[nid] = Node(nid, N, links)
        return nid

    build(M)
    return DCTree(tuple(nodes))


def indecomposable_covering(
    M: Matroid, strategy: PivotStrategy = MIN_INDEX, order: Order = Order.DELETE_FIRST
) -> TutteCovering:
    """Split every leaf holding a non-degenerate element until none is left."""
    if M is BASEPOINT or not isinstance(M, Matroid):
        raise InvalidParameters("the basepoint has no Tutte covering by matroids")
    return covering_from_tree(_full_expansion(M, strategy.chooser(), order))


def random_partial_tree(M: Matroid, rng: random.Random, p_split: float = 0.5) -> DCTree:
    """Tree grown by splitting each leaf with probability ``p_split`` at a random pivot."""
    t = trivial_tree(M)
    frontier = [0]
    while frontier:
        leaf = frontier.pop()
        N = t.nodes[leaf].matroid
        labels = [N.labels[i] for i in range(N.size) if N.nondegenerate_mask >> i & 1]
        if labels and rng.random() < p_split:
            order = rng.choice(list(Order))
            t = expand_leaf(t, leaf, rng.choice(labels), order)
            frontier.extend(link.child for link in t.nodes[leaf].children)
    return t


def leaf_class_multiset(c: TutteCovering) -> Counter:
    bad = [k for k, s in enumerate(c.sources) if not is_indecomposable(s)]
    if bad:
        raise NotIndecomposableCover(f"legs {bad} have decomposable sources")
    return Counter(indecomposable_class(s) for s in c.sources)


@dataclass(frozen=True)
class Refinement:
    """A covering together with, per leg, the index of the coarser leg it
    factors through and the factoring morphism."""

    covering: TutteCovering
    through: tuple[int, ...]
    factors: tuple[MatroidMorphism, ...]


def refine_to_indecomposable(c: TutteCovering, strategy: PivotStrategy = MIN_INDEX) -> Refinement:
    problems = covering_problems(c)
    if problems:
        raise InvalidCover("; ".join(problems))
    choose = strategy.chooser()
    t = c.witness
    for leaf in c.witness.leaves():
        N = t.nodes[leaf].matroid
        if not is_indecomposable(N):
            t = graft(t, leaf, _full_expansion(N, choose, Order.DELETE_FIRST))
    refined = covering_from_tree(t)
    old_leaves = {leaf: k for k, leaf in enumerate(c.witness.leaves())}
    through, factors = [], []
    up = t.parents()
    for leaf, leg in zip(t.leaves(), refined.legs):
        ancestor = next(n for n in t.path_to_root(leaf, up) if n in old_leaves)
        k = old_leaves[ancestor]
        through.append(k)
        factors.append(inclusion(leg.source, c.legs[k].source))
    return Refinement(refined, tuple(through), tuple(factors))


def class_isomorphism(A: Matroid, B: Matroid) -> MatroidMorphism:
    """Order-preserving isomorphism between indecomposables of equal class."""
    if indecomposable_class(A) != indecomposable_class(B):
        raise InvalidParameters("indecomposable classes differ")
    mapping = {}
    for mask_a, mask_b in ((A.loop_mask, B.loop_mask), (A.coloop_mask, B.coloop_mask)):
        la = [A.labels[i] for i in range(A.size) if mask_a >> i & 1]
        lb = [B.labels[i] for i in range(B.size) if mask_b >> i & 1]
        mapping.update(zip(la, lb))
    return MatroidMorphism(A, B, mapping)


@dataclass(frozen=True)
class CommonRefinement:
    """Indecomposable covering refining ``a`` and, up to leg isomorphisms, ``b``.

    ``into_a`` satisfies ``a.legs[i] o h == covering.legs[k]`` exactly. On
    the ``b`` side each leg ``k`` is matched to leg ``matching[k]`` of
    ``refined_b`` through ``isomorphisms[k]``, and
    ``b.legs[j] o h == refined_b.covering.legs[matching[k]] o isomorphisms[k]``.
    """

    covering: TutteCovering
    into_a: Refinement
    into_b: tuple[tuple[int, MatroidMorphism], ...]
    refined_b: Refinement
    matching: tuple[int, ...]
    isomorphisms: tuple[MatroidMorphism, ...]


def common_refinement(
    a: TutteCovering, b: TutteCovering, strategy: PivotStrategy = MIN_INDEX
) -> CommonRefinement:
    if a.target != b.target:
        raise TargetMismatch("coverings have different targets")
    ra = refine_to_indecomposable(a, strategy)
    rb = refine_to_indecomposable(b, strategy)
    legs_a, legs_b = ra.covering.legs, rb.covering.legs
    classes_b: dict[IndecomposableClass, list[int]] = {}
    for i, leg in enumerate(legs_b):
        classes_b.setdefault(indecomposable_class(leg.source), []).append(i)
    matching = [-1] * len(legs_a)
    free = set(range(len(legs_b)))
    # identical legs pair up first, then any leg of the same class
    for k, leg in enumerate(legs_a):
        for i in classes_b.get(indecomposable_class(leg.source), ()):
            if i in free and legs_b[i] == leg:
                matching[k] = i
                free.discard(i)
                break
    for k, leg in enumerate(legs_a):
        if matching[k] >= 0:
            continue
        pool = [i for i in classes_b.get(indecomposable_class(leg.source), ()) if i in free]
        if not pool:
            raise InvalidCover("indecomposable leaf multisets differ")
        matching[k] = pool[0]
        free.discard(pool[0])
    if free:
        raise InvalidCover("indecomposable leaf multisets differ")
    isos, into_b = [], []
    for k, leg in enumerate(legs_a):
        i = matching[k]
        iso = class_isomorphism(leg.source, legs_b[i].source)
        isos.append(iso)
        into_b.append((rb.through[i], rb.factors[i].compose(iso)))
    return CommonRefinement(ra.covering, ra, tuple(into_b), rb, tuple(matching), tuple(isos))
