"""Exact matroid minors, Tutte polynomials, Tutte coverings and K0 classes."""

from .dctree import (
    BASEPOINT,
    CommonRefinement,
    DCTree,
    Op,
    Order,
    Refinement,
    TutteCovering,
    common_refinement,
    covering_from_tree,
    expand_leaf,
    graft,
    indecomposable_covering,
    leaf_class_multiset,
    refine_to_indecomposable,
    trivial_tree,
    validate_tree,
)
from .errors import *  # noqa: F401,F403
from .graph import Multigraph, graph_contract, graph_delete, graphic_matroid
from .kzero import (
    KZeroElement,
    duality_involution,
    k0_add,
    k0_class,
    k0_negate,
    k0_product,
    tutte_from_class,
)
from .matroid import (
    EMPTY,
    ElementClass,
    IndecomposableClass,
    Matroid,
    MatroidMorphism,
    are_isomorphic,
    automorphism_count,
    classify_element,
    contract,
    delete,
    direct_sum,
    dual,
    from_bases,
    from_independent_sets,
    indecomposable_class,
    is_indecomposable,
    is_independent,
    is_morphism,
    rank,
    uniform,
)
from .pivot import MAX_INDEX, MIN_INDEX, PivotStrategy, seeded
from .polynomial import TuttePolynomial, evaluate, poly_add, poly_mul
from .tutte import MemoPolicy, corank_nullity, tutte_dc, tutte_direct

__version__ = "0.1.0"
