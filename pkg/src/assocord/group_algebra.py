"""Exact arithmetic in the rational group algebra Q[G]."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

import numpy as np

from .groups import Group, Subgroup, format_perm
from .intmat import content


class AlgebraError(ValueError):
    pass


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class AlgebraElement:
    """An element ``num / den`` of Q[G], stored as a dense integer vector.

    ``num[i]`` is the numerator of the coefficient of group element ``i``.  The
    pair is normalized so that ``den > 0`` and ``gcd(num, den) = 1``.
    """

    __slots__ = ("group", "num", "den")

    def __init__(self, group: Group, num: Iterable[int], den: int = 1):
        num = [int(x) for x in num]
        if len(num) != group.order:
            raise AlgebraError("coefficient vector has the wrong length")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = [-x for x in num], -den
        g = gcd(content(num), den) if any(num) else den
        self.group = group
        self.num = tuple(x // g for x in num)
        self.den = den // g

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, G: Group) -> "AlgebraElement":
        return cls(G, [0] * G.order)

    @classmethod
    def one(cls, G: Group) -> "AlgebraElement":
        return cls.basis(G, 0)

    @classmethod
    def basis(cls, G: Group, i: int) -> "AlgebraElement":
        v = [0] * G.order
        v[int(i)] = 1
        return cls(G, v)

    @classmethod
    def from_coefficients(cls, G: Group, coeffs: Mapping[int, Fraction | int]) -> "AlgebraElement":
        fr = {int(k): Fraction(v) for k, v in coeffs.items()}
        d = 1
        for v in fr.values():
            d = _lcm(d, v.denominator)
        num = [0] * G.order
        for k, v in fr.items():
            num[k] += int(v * d)
        return cls(G, num, d)

    # access -----------------------------------------------------------------

    def coefficient(self, i: int) -> Fraction:
        return Fraction(self.num[i], self.den)

    def coefficients(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.num) if x]

    def vector(self) -> np.ndarray:
        """Numerator vector as an integer array."""
        return np.array(self.num, dtype=object if max(map(abs, self.num), default=0) >= 1 << 62 else np.int64)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if other.group is not self.group:
            raise AlgebraError("elements belong to different group algebras")

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            v = [0] * self.group.order
            v[0] = f.numerator
            return AlgebraElement(self.group, v, f.denominator)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = _lcm(self.den, other.den)
        a, b = d // self.den, d // other.den
        return AlgebraElement(self.group, [a * x + b * y for x, y in zip(self.num, other.num)], d)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.group, [-x for x in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Fraction | int) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.group, [x * c.numerator for x in self.num], self.den * c.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (isinstance(other, AlgebraElement) and other.group is self.group
                and other.num == self.num and other.den == self.den)

    def __hash__(self) -> int:
        return hash((id(self.group), self.num, self.den))

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        terms = []
        for i, x in enumerate(self.num):
            if not x:
                continue
            c = Fraction(x, self.den)
            name = "1" if i == 0 else format_perm(self.group.elements[i])
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def is_central(self) -> bool:
        G = self.group
        return all(self * AlgebraElement.basis(G, g) == AlgebraElement.basis(G, g) * self
                   for g in range(G.order))


# ---------------------------------------------------------------------------

def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Convolution product ``x * y``."""
    if x.group is not y.group:
        raise AlgebraError("elements belong to different group algebras")
    G = x.group
    out = [0] * G.order
    ys = y.support()
    t = G.table
    for i in x.support():
        a = x.num[i]
        row = t[i]
        for j in ys:
            out[row[j]] += a * y.num[j]
    return AlgebraElement(G, out, x.den * y.den)


def right_mult_matrix(v: np.ndarray, G: Group) -> np.ndarray:
    """``R`` with ``x @ R = x * v`` for row coefficient vectors x."""
    return np.asarray(v)[G.ldiv]


def left_mult_matrix(v: np.ndarray, G: Group) -> np.ndarray:
    """``L`` with ``y @ L = v * y`` for row coefficient vectors y."""
    return np.asarray(v)[G.rdiv].T


def regular_rep(x: AlgebraElement) -> np.ndarray:
    """Matrix of left multiplication by ``x`` acting on column coordinate vectors."""
    G = x.group
    num = np.empty(G.order, dtype=object)
    num[:] = [Fraction(a, x.den) for a in x.num]
    return num[G.rdiv]


def trace_element(H: Subgroup) -> AlgebraElement:
    """``Tr_H``: the sum of the elements of H."""
    G = H.parent
    v = [0] * G.order
    for h in H.members:
        v[h] = 1
    return AlgebraElement(G, v)


def idempotent(H: Subgroup) -> AlgebraElement:
    """``e_H = Tr_H / |H|``."""
    return trace_element(H) / H.order


def conjugate_element(x: AlgebraElement, g: int) -> AlgebraElement:
    """``g x g^-1``."""
    G = x.group
    out = [0] * G.order
    for i in x.support():
        out[G.conjugate_index(g, i)] = x.num[i]
    return AlgebraElement(G, out, x.den)


def embed_element(x: AlgebraElement, G: Group) -> AlgebraElement:
    """Push an element of Q[H] into Q[G] along ``H.embedding``."""
    H = x.group
    if H.ambient is not G:
        raise AlgebraError("group is not embedded in the target")
    out = [0] * G.order
    for i in x.support():
        out[int(H.embedding[i])] = x.num[i]
    return AlgebraElement(G, out, x.den)


__all__ = [
    "AlgebraElement", "AlgebraError", "multiply", "regular_rep", "trace_element",
    "idempotent", "right_mult_matrix", "left_mult_matrix", "conjugate_element",
    "embed_element",
]
