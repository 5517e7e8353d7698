"""Matroids stored as families of bases over at most 64 labelled elements.

A subset of the ground set is an ``int`` bitmask over label positions. The
basis family is kept as a sorted, duplicate-free ``numpy.uint64`` array so that
minors, duals and canonical keys are cheap vector operations.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import (
    CapacityExceeded,
    InvalidMatroid,
    InvalidParameters,
    NotIndecomposable,
    UnknownElement,
)

MAX_ELEMENTS = 64
AUTOMORPHISM_LIMIT = 8

_U64 = np.uint64


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr)


def _as_basis_array(masks: Iterable[int]) -> np.ndarray:
    arr = np.fromiter((int(m) for m in masks), dtype=np.uint64)
    arr = np.unique(arr)
    arr.setflags(write=False)
    return arr


def _remove_bit(arr: np.ndarray, i: int) -> np.ndarray:
    # drop position i and shift the higher bits down by one
    low = _U64((1 << i) - 1)
    return (arr & low) | ((arr >> _U64(i + 1)) << _U64(i))


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class ElementClass(enum.Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    NONDEGENERATE = "non-degenerate"

    def dual(self) -> "ElementClass":
        if self is ElementClass.LOOP:
            return ElementClass.COLOOP
        if self is ElementClass.COLOOP:
            return ElementClass.LOOP
        return self


class IndecomposableClass(NamedTuple):
    """Isomorphism type of a direct sum of ``loops`` loops and ``coloops`` coloops."""

    loops: int
    coloops: int

    def dual(self) -> "IndecomposableClass":
        return IndecomposableClass(self.coloops, self.loops)


class Matroid:
    """Immutable matroid given by its labelled ground set and basis family.

    Build instances with :func:`from_bases`, :func:`from_independent_sets`,
    :func:`uniform` or the graph helpers; the constructor itself does not
    check the matroid axioms.
    """

    __slots__ = ("_labels", "_index", "_bases", "_rank", "_hash")

    def __init__(self, labels: Sequence[str], bases: np.ndarray):
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        self._bases = bases
        self._rank = int(popcount(bases[:1])[0])
        self._hash = None

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def bases(self) -> np.ndarray:
        """Sorted read-only array of basis bitmasks."""
        return self._bases

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def mask(self, labels: Iterable[str] | int) -> int:
        """Bitmask of a label collection; ints pass through after a range check."""
        if isinstance(labels, (int, np.integer)):
            m = int(labels)
            if m < 0 or m >> self.size:
                raise UnknownElement(f"mask {m:#x} outside the ground set")
            return m
        if isinstance(labels, str):
            labels = [labels]
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def subset(self, mask: int) -> frozenset[str]:
        return frozenset(self._labels[i] for i in _bits(mask))

    def basis_sets(self) -> list[frozenset[str]]:
        return [self.subset(int(b)) for b in self._bases]

    @property
    def canonical_key(self) -> tuple[int, bytes]:
        """Label-free positional encoding; equal keys mean equal basis families."""
        return (self.size, self._bases.tobytes())

    @property
    def loop_mask(self) -> int:
        return self.full_mask & ~int(np.bitwise_or.reduce(self._bases))

    @property
    def coloop_mask(self) -> int:
        return int(np.bitwise_and.reduce(self._bases)) & self.full_mask

    @property
    def nondegenerate_mask(self) -> int:
        return self.full_mask & ~(self.loop_mask | self.coloop_mask)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(self._bases, other._bases)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._labels, self._bases.tobytes()))
        return self._hash

    def __repr__(self):
        return f"Matroid(n={self.size}, rank={self.rank}, bases={len(self._bases)})"


EMPTY = Matroid((), _as_basis_array([0]))


def _check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    labels = tuple(labels)
    if len(labels) > MAX_ELEMENTS:
        raise CapacityExceeded(f"{len(labels)} elements exceed the {MAX_ELEMENTS}-element limit")
    if len(set(labels)) != len(labels):
        raise InvalidParameters("ground set labels must be pairwise distinct")
    for lab in labels:
        if not isinstance(lab, str):
            raise InvalidParameters(f"labels must be strings, got {lab!r}")
    return labels


def _masks_from(labels: Sequence[str], family) -> list[int]:
    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for s in family:
        if isinstance(s, (int, np.integer)):
            m = int(s)
            if m < 0 or m >> len(labels):
                raise UnknownElement(f"mask {m:#x} outside the ground set")
        else:
            m = 0
            for lab in s:
                if lab not in index:
                    raise UnknownElement(f"unknown element {lab!r}")
                m |= 1 << index[lab]
        out.append(m)
    return out


def from_bases(labels: Sequence[str], bases) -> Matroid:
    """Build a matroid from its bases, checking basis exchange exhaustively.

    ``bases`` may hold label collections or integer masks.
    """
    labels = _check_labels(labels)
    masks = set(_masks_from(labels, bases))
    if not masks:
        raise InvalidMatroid("a matroid needs at least one basis", axiom="B1")
    sizes = {m.bit_count() for m in masks}
    if len(sizes) > 1:
        raise InvalidMatroid(f"bases of mixed cardinalities {sorted(sizes)}", axiom="B2")
    for b1 in masks:
        for b2 in masks:
            if b1 == b2:
                continue
            for x in _bits(b1 & ~b2):
                base = b1 & ~(1 << x)
                if not any((base | (1 << y)) in masks for y in _bits(b2 & ~b1)):
                    raise InvalidMatroid(
                        f"basis exchange fails removing {labels[x]!r} from "
                        f"{sorted(labels[i] for i in _bits(b1))}",
                        axiom="B2",
                    )
    return Matroid(labels, _as_basis_array(masks))


def independence_axiom_violation(family: set[int]) -> str | None:
    """Name of the first independence axiom ``family`` violates, or None."""
    if 0 not in family:
        return "I1"
    for a in family:
        for i in _bits(a):
            if a & ~(1 << i) not in family:
                return "I2"
    by_size: dict[int, list[int]] = {}
    for a in family:
        by_size.setdefault(a.bit_count(), []).append(a)
    # with (I2) in force it suffices to compare sets whose sizes differ by one
    for k, smaller in by_size.items():
        for a in by_size.get(k + 1, ()):
            for b in smaller:
                if not any((b | (1 << x)) in family for x in _bits(a & ~b)):
                    return "I3"
    return None


def from_independent_sets(labels: Sequence[str], family) -> Matroid:
    labels = _check_labels(labels)
    masks = set(_masks_from(labels, family))
    if not masks:
        raise InvalidMatroid("the independent family is empty", axiom="I1")
    axiom = independence_axiom_violation(masks)
    if axiom is not None:
        raise InvalidMatroid(f"independence axiom ({axiom}) fails", axiom=axiom)
    r = max(m.bit_count() for m in masks)
    return Matroid(labels, _as_basis_array(m for m in masks if m.bit_count() == r))


def independent_family(M: Matroid) -> set[int]:
    """Every independent set as a mask (all subsets of all bases)."""
    out: set[int] = set()
    for b in M.bases:
        b = int(b)
        sub = b
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & b
    return out


def check_axioms(M: Matroid) -> list[str]:
    """Re-derive the independent family and list the axioms it violates."""
    problems = []
    sizes = set(popcount(M.bases).tolist())
    if len(sizes) != 1:
        problems.append("equicardinal bases")
    axiom = independence_axiom_violation(independent_family(M))
    if axiom is not None:
        problems.append(axiom)
    return problems


def uniform(k: int, n: int, labels: Sequence[str] | None = None) -> Matroid:
    if n > MAX_ELEMENTS:
        raise CapacityExceeded(f"U({k},{n}) exceeds the {MAX_ELEMENTS}-element limit")
    if not 0 <= k <= n:
        raise InvalidParameters(f"need 0 <= k <= n, got k={k}, n={n}")
    if labels is None:
        labels = [f"e{i}" for i in range(n)]
    labels = _check_labels(labels)
    if len(labels) != n:
        raise InvalidParameters("label count must equal n")
    masks = (sum(1 << i for i in c) for c in itertools.combinations(range(n), k))
    return Matroid(labels, _as_basis_array(masks))


def relabel(M: Matroid, mapping: Mapping[str, str]) -> Matroid:
    """Rename elements; labels absent from ``mapping`` are kept."""
    return Matroid(_check_labels([mapping.get(lab, lab) for lab in M.labels]), M.bases)


def is_independent(M: Matroid, S) -> bool:
    s = _U64(M.mask(S))
    return bool(np.any((M.bases & s) == s))


def rank(M: Matroid, S=None) -> int:
    if S is None:
        return M.rank
    s = _U64(M.mask(S))
    return int(popcount(M.bases & s).max())


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Direct sum; when labels collide every label gets a ``.L``/``.R`` suffix."""
    if M1.size + M2.size > MAX_ELEMENTS:
        raise CapacityExceeded("direct sum exceeds the element limit")
    l1, l2 = M1.labels, M2.labels
    if set(l1) & set(l2):
        l1 = tuple(f"{lab}.L" for lab in l1)
        l2 = tuple(f"{lab}.R" for lab in l2)
    labels = _check_labels(l1 + l2)
    if M2.size == 0:
        return Matroid(labels, M1.bases)
    shifted = M2.bases << _U64(M1.size)
    combined = (M1.bases[:, None] | shifted[None, :]).ravel()
    return Matroid(labels, _as_basis_array(combined))


def dual(M: Matroid) -> Matroid:
    full = _U64(M.full_mask)
    return Matroid(M.labels, _as_basis_array(M.bases ^ full))


def _drop(M: Matroid, mask: int, bases: np.ndarray) -> Matroid:
    for i in reversed(_bits(mask)):
        bases = _remove_bit(bases, i)
    labels = tuple(lab for i, lab in enumerate(M.labels) if not mask >> i & 1)
    return Matroid(labels, _as_basis_array(bases))


def delete(M: Matroid, T=()) -> Matroid:
    """Restriction to the complement of ``T``."""
    t = M.mask(T)
    if t == 0:
        return M
    rest = M.bases & _U64(M.full_mask & ~t)
    counts = popcount(rest)
    return _drop(M, t, rest[counts == counts.max()])


def contract(M: Matroid, T=()) -> Matroid:
    """Contraction ``M / T``, equal to ``dual(delete(dual(M), T))``.

    The bases of the contraction are ``B - T`` for the bases ``B`` meeting
    ``T`` in as many elements as possible.
    """
    t = M.mask(T)
    if t == 0:
        return M
    counts = popcount(M.bases & _U64(t))
    keep = M.bases[counts == counts.max()] & _U64(M.full_mask & ~t)
    return _drop(M, t, keep)


def classify_element(M: Matroid, e: str) -> ElementClass:
    bit = 1 << M.index(e)
    if M.loop_mask & bit:
        return ElementClass.LOOP
    if M.coloop_mask & bit:
        return ElementClass.COLOOP
    return ElementClass.NONDEGENERATE


def is_indecomposable(M: Matroid) -> bool:
    return M.nondegenerate_mask == 0


def indecomposable_class(M: Matroid) -> IndecomposableClass:
    if not is_indecomposable(M):
        raise NotIndecomposable(
            f"non-degenerate elements present: {sorted(M.subset(M.nondegenerate_mask))}"
        )
    return IndecomposableClass(M.loop_mask.bit_count(), M.coloop_mask.bit_count())


def indecomposable(loops: int, coloops: int) -> Matroid:
    """``U(0,1)^loops (+) U(1,1)^coloops`` on labels ``l0.., c0..``."""
    labels = [f"l{i}" for i in range(loops)] + [f"c{i}" for i in range(coloops)]
    labels = _check_labels(labels)
    return Matroid(labels, _as_basis_array([((1 << coloops) - 1) << loops]))


# -- isomorphism -----------------------------------------------------------


def _incidence(M: Matroid) -> np.ndarray:
    shifts = np.arange(M.size, dtype=np.uint64)
    return ((M.bases[:, None] >> shifts[None, :]) & _U64(1)).astype(np.int64)


def _pair_degrees(M: Matroid) -> np.ndarray:
    # entry (i, j) counts bases containing both i and j; diagonal = degree
    inc = _incidence(M)
    return inc.T @ inc


def _permute(bases: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    out = np.zeros_like(bases)
    for i, p in enumerate(perm):
        out |= ((bases >> _U64(i)) & _U64(1)) << _U64(p)
    return np.unique(out)


def _search(M1: Matroid, M2: Matroid, *, count: bool):
    n = M1.size
    if n != M2.size or M1.rank != M2.rank or len(M1.bases) != len(M2.bases):
        return 0 if count else None
    d1, d2 = _pair_degrees(M1), _pair_degrees(M2)
    deg1, deg2 = np.diag(d1).tolist(), np.diag(d2).tolist()
    if sorted(deg1) != sorted(deg2):
        return 0 if count else None
    target = M2.bases
    freq = Counter(deg1)
    order = sorted(range(n), key=lambda i: (freq[deg1[i]], i))
    perm = [-1] * n
    used = [False] * n
    found = 0

    def extend(depth):
        nonlocal found
        if depth == n:
            if np.array_equal(_permute(M1.bases, perm), target):
                found += 1
                return not count
            return False
        i = order[depth]
        for p in range(n):
            if used[p] or deg2[p] != deg1[i]:
                continue
            if any(d1[i, j] != d2[p, perm[j]] for j in order[:depth]):
                continue
            perm[i] = p
            used[p] = True
            if extend(depth + 1):
                return True
            used[p] = False
            perm[i] = -1
        return False

    extend(0)
    if count:
        return found
    if found:
        return {M1.labels[i]: M2.labels[perm[i]] for i in range(n)}
    return None


def are_isomorphic(M1: Matroid, M2: Matroid) -> dict[str, str] | None:
    """A label bijection carrying ``M1`` onto ``M2``, or None.

    Candidates are pruned by rank, basis count and the matrix of pairwise
    basis co-membership counts before the final basis-family comparison.
    """
    if M1.size == M2.size and np.array_equal(M1.bases, M2.bases):
        return dict(zip(M1.labels, M2.labels))
    return _search(M1, M2, count=False)


def automorphism_count(M: Matroid, limit: int = AUTOMORPHISM_LIMIT) -> int:
    if M.size > limit:
        raise CapacityExceeded(f"automorphism enumeration is limited to {limit} elements")
    return _search(M, M, count=True)


# -- morphisms -------------------------------------------------------------


@dataclass(frozen=True)
class MatroidMorphism:
    """A map of ground sets ``source -> target`` given label to label."""

    source: Matroid
    target: Matroid
    mapping: Mapping[str, str] = field(compare=True)

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.mapping.items()))))

    def __call__(self, label: str) -> str:
        return self.mapping[label]

    def compose(self, inner: "MatroidMorphism") -> "MatroidMorphism":
        """``self o inner``."""
        if inner.target != self.source:
            raise InvalidParameters("cannot compose: inner target differs from outer source")
        return MatroidMorphism(
            inner.source, self.target, {a: self.mapping[b] for a, b in inner.mapping.items()}
        )

    def image_masks(self) -> np.ndarray:
        pos = [self.target.index(self.mapping[lab]) for lab in self.source.labels]
        return _permute(self.source.bases, pos)


def inclusion(source: Matroid, target: Matroid) -> MatroidMorphism:
    """The ground-set inclusion of a minor into the matroid it came from."""
    for lab in source.labels:
        target.index(lab)
    return MatroidMorphism(source, target, {lab: lab for lab in source.labels})


def identity(M: Matroid) -> MatroidMorphism:
    return inclusion(M, M)


def is_morphism(f: MatroidMorphism) -> bool:
    """True iff the map is injective, total, and sends independents to independents."""
    src, tgt = f.source, f.target
    if set(f.mapping) != set(src.labels):
        return False
    images = list(f.mapping.values())
    if len(set(images)) != len(images) or any(im not in tgt._index for im in images):
        return False
    # independents are subsets of bases, so the images of the bases suffice
    mapped = f.image_masks()
    return all(bool(np.any((tgt.bases & b) == b)) for b in mapped)


def is_isomorphism(f: MatroidMorphism) -> bool:
    if f.source.size != f.target.size or not is_morphism(f):
        return False
    return np.array_equal(f.image_masks(), f.target.bases)
