"""Classes in the free abelian group on pairs (loops, coloops)."""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .dctree import indecomposable_covering, leaf_class_multiset
from .errors import NegativeCoefficient, ParseError
from .matroid import IndecomposableClass, Matroid
from .pivot import MIN_INDEX, PivotStrategy
from .polynomial import TuttePolynomial


class KZeroElement:
    """Finitely supported integer combination of indecomposable classes."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(coeffs, Mapping):
            coeffs = coeffs.items()
        acc: dict[IndecomposableClass, int] = {}
        for key, c in coeffs:
            key = IndecomposableClass(*key)
            if key.loops < 0 or key.coloops < 0:
                raise ValueError("class indices must be non-negative")
            acc[key] = acc.get(key, 0) + int(c)
        self._coeffs = tuple(sorted((k, c) for k, c in acc.items() if c))

    @classmethod
    def generator(cls, loops: int, coloops: int) -> "KZeroElement":
        return cls({(loops, coloops): 1})

    @property
    def items(self) -> tuple[tuple[IndecomposableClass, int], ...]:
        return self._coeffs

    def coefficient(self, loops: int, coloops: int) -> int:
        return dict(self._coeffs).get(IndecomposableClass(loops, coloops), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "KZeroElement") -> "KZeroElement":
        if not isinstance(other, KZeroElement):
            return NotImplemented
        return KZeroElement(self._coeffs + other._coeffs)

    def __neg__(self) -> "KZeroElement":
        return KZeroElement((k, -c) for k, c in self._coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int) -> "KZeroElement":
        return KZeroElement((k, n * c) for k, c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, KZeroElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        if not self._coeffs:
            return "KZeroElement(0)"
        body = " + ".join(f"{c}*[{k.loops},{k.coloops}]" for k, c in self._coeffs)
        return f"KZeroElement({body})"

    def to_json(self) -> dict:
        return {
            "classes": [
                {"loops": k.loops, "coloops": k.coloops, "coeff": c} for k, c in self._coeffs
            ]
        }

    @classmethod
    def from_json(cls, data) -> "KZeroElement":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "classes" not in data:
            raise ParseError("K0 JSON needs a 'classes' array", key="classes")
        out = []
        for entry in data["classes"]:
            try:
                out.append(((int(entry["loops"]), int(entry["coloops"])), int(entry["coeff"])))
            except KeyError as exc:
                raise ParseError(f"K0 class missing {exc.args[0]!r}", key=exc.args[0]) from None
        return cls(out)


ZERO = KZeroElement()


def k0_class(M: Matroid, strategy: PivotStrategy = MIN_INDEX) -> KZeroElement:
    """Leaf classes of an indecomposable covering of ``M``, with multiplicity."""
    return KZeroElement(leaf_class_multiset(indecomposable_covering(M, strategy)))


def k0_add(a: KZeroElement, b: KZeroElement) -> KZeroElement:
    return a + b


def k0_negate(a: KZeroElement) -> KZeroElement:
    return -a


def k0_product(a: KZeroElement, b: KZeroElement) -> KZeroElement:
    """Bilinear extension of ``(m, n) * (m', n') = (m + m', n + n')``."""
    acc: dict[tuple[int, int], int] = {}
    for k1, c1 in a.items:
        for k2, c2 in b.items:
            key = (k1.loops + k2.loops, k1.coloops + k2.coloops)
            acc[key] = acc.get(key, 0) + c1 * c2
    return KZeroElement(acc)


def duality_involution(a: KZeroElement) -> KZeroElement:
    return KZeroElement((k.dual(), c) for k, c in a.items)


def tutte_from_class(a: KZeroElement) -> TuttePolynomial:
    """``sum c * x^coloops * y^loops`` over the support of ``a``."""
    negative = [k for k, c in a.items if c < 0]
    if negative:
        raise NegativeCoefficient(f"negative coefficients on classes {negative}")
    return TuttePolynomial(((k.coloops, k.loops), c) for k, c in a.items)
