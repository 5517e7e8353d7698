"""Sparse bivariate polynomials in ``x`` and ``y`` with integer coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError

Monomial = tuple[int, int]


class TuttePolynomial:
    """Immutable polynomial ``sum c * x^i * y^j`` keyed by ``(i, j)``.

    Zero coefficients are never stored and :attr:`terms` is ordered by
    ``(i, j)``, so two equal polynomials have identical term tuples.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Monomial, int] = {}
        for (i, j), c in terms:
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            acc[(int(i), int(j))] = acc.get((int(i), int(j)), 0) + int(c)
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c))

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, coeff: int = 1) -> "TuttePolynomial":
        return cls({(i, j): coeff})

    @property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return self._terms

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TuttePolynomial") -> "TuttePolynomial":
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return TuttePolynomial(self._terms + other._terms)

    def __neg__(self):
        return TuttePolynomial((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TuttePolynomial") -> "TuttePolynomial":
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms:
            for (i2, j2), c2 in other._terms:
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return TuttePolynomial(acc)

    def swap(self) -> "TuttePolynomial":
        """``p(y, x)``."""
        return TuttePolynomial(((j, i), c) for (i, j), c in self._terms)

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"TuttePolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in sorted(self._terms, key=lambda t: (-t[0][0], -t[0][1])):
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + text)
        return " ".join(pieces)

    def to_json(self) -> dict:
        return {"terms": [{"x": i, "y": j, "c": str(c)} for (i, j), c in self._terms]}

    @classmethod
    def from_json(cls, data) -> "TuttePolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            terms = data["terms"]
        except (KeyError, TypeError):
            raise ParseError("polynomial JSON needs a 'terms' array", key="terms") from None
        out = []
        for t in terms:
            try:
                out.append(((int(t["x"]), int(t["y"])), int(t["c"])))
            except KeyError as exc:
                raise ParseError(f"polynomial term missing {exc.args[0]!r}", key=exc.args[0]) from None
        return cls(out)


ZERO = TuttePolynomial()
ONE = TuttePolynomial.monomial(0, 0)
X = TuttePolynomial.monomial(1, 0)
Y = TuttePolynomial.monomial(0, 1)


def poly_add(p: TuttePolynomial, q: TuttePolynomial) -> TuttePolynomial:
    return p + q


def poly_mul(p: TuttePolynomial, q: TuttePolynomial) -> TuttePolynomial:
    return p * q


def evaluate(p: TuttePolynomial, x, y) -> Fraction:
    return p.evaluate(x, y)
