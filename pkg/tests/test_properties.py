"""Property tests over hypothesis-generated binary and graphic matroids."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import gf2_rank
from tuttecov.dctree import indecomposable_covering, leaf_class_multiset
from tuttecov.graph import Multigraph, graph_contract, graph_delete, graphic_matroid
from tuttecov.kzero import duality_involution, k0_class, tutte_from_class
from tuttecov.matroid import (
    check_axioms,
    classify_element,
    contract,
    delete,
    dual,
    from_bases,
)
from tuttecov.pivot import MAX_INDEX, MIN_INDEX, seeded
from tuttecov.tutte import MemoPolicy, tutte_dc, tutte_direct


@st.composite
def binary_matroids(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    rows = draw(st.integers(1, 4))
    cols = draw(st.lists(st.integers(0, 2**rows - 1), min_size=n, max_size=n))
    r = gf2_rank(cols)
    labels = [f"x{i}" for i in range(n)]
    bases = [
        [labels[i] for i in c]
        for c in itertools.combinations(range(n), r)
        if gf2_rank([cols[i] for i in c]) == r
    ]
    M = from_bases(labels, bases)
    return dual(M) if draw(st.booleans()) else M


@st.composite
def multigraphs(draw, max_edges=7):
    nv = draw(st.integers(1, 5))
    verts = [f"v{i}" for i in range(nv)]
    m = draw(st.integers(0, max_edges))
    ends = draw(st.lists(st.tuples(st.sampled_from(verts), st.sampled_from(verts)), min_size=m, max_size=m))
    return Multigraph(tuple(verts), tuple((f"g{k}", u, v) for k, (u, v) in enumerate(ends)))


@settings(max_examples=60, deadline=None)
@given(binary_matroids())
def test_dual_is_involution(M):
    assert dual(dual(M)) == M
    for e in M.labels:
        assert classify_element(dual(M), e) is classify_element(M, e).dual()


@settings(max_examples=60, deadline=None)
@given(binary_matroids(), st.data())
def test_minors_commute(M, data):
    labels = list(M.labels)
    T1 = data.draw(st.lists(st.sampled_from(labels), unique=True)) if labels else []
    rest = [x for x in labels if x not in T1]
    T2 = data.draw(st.lists(st.sampled_from(rest), unique=True)) if rest else []
    assert delete(delete(M, T1), T2) == delete(M, T1 + T2)
    assert contract(contract(M, T1), T2) == contract(M, T1 + T2)
    assert delete(contract(M, T2), T1) == contract(delete(M, T1), T2)
    assert check_axioms(contract(delete(M, T1), T2)) == []


@settings(max_examples=60, deadline=None)
@given(binary_matroids(), st.integers(0, 10**6))
def test_engines_agree(M, seed):
    want = tutte_direct(M)
    for s in (MIN_INDEX, MAX_INDEX, seeded(seed)):
        for memo in MemoPolicy:
            assert tutte_dc(M, s, memo) == want
    assert tutte_from_class(k0_class(M)) == want
    assert tutte_direct(dual(M)) == want.swap()


@settings(max_examples=60, deadline=None)
@given(binary_matroids(), st.integers(0, 10**6))
def test_leaf_multiset_strategy_invariant(M, seed):
    base = leaf_class_multiset(indecomposable_covering(M, MIN_INDEX))
    assert leaf_class_multiset(indecomposable_covering(M, seeded(seed))) == base
    assert duality_involution(k0_class(M)) == k0_class(dual(M))


@settings(max_examples=40, deadline=None)
@given(multigraphs(), st.data())
def test_graphic_closure(G, data):
    labels = list(G.edge_labels)
    T = data.draw(st.lists(st.sampled_from(labels), unique=True)) if labels else []
    M = graphic_matroid(G)
    assert graphic_matroid(graph_delete(G, T)) == delete(M, T)
    assert graphic_matroid(graph_contract(G, T)) == contract(M, T)
