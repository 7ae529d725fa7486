"""Binary forms, the GL2 action, transvectants, resultants, discriminants.

A binary form of order p is F(x) = sum_i a_i x1^(p-i) x2^i with no
binomial factors in the coefficients.  Coefficients are MPoly values, so
generic (symbolic) and specialised (numeric) forms share one type; a
numeric form simply has constant coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .mpoly import MPoly, PolyMatrix, Scalar, det_fraction_free

__all__ = [
    "BinaryForm", "GroupElement", "CovariantMeta",
    "act", "transvectant", "resultant", "discriminant", "weight_of",
    "sylvester_matrix", "form_from_roots",
]


def _as_mpoly(x) -> MPoly:
    return x if isinstance(x, MPoly) else MPoly.constant(x)


class GroupElement:
    """An invertible 2x2 matrix with exact rational entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)
        if self.det == 0:
            raise ValueError("singular matrix is not a group element")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(1, 0, 0, 1)

    def inverse(self) -> "GroupElement":
        dt = self.det
        return GroupElement(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __repr__(self) -> str:
        return f"GroupElement({self.a}, {self.b}, {self.c}, {self.d})"


class CovariantMeta:
    """Degree/order/weight bookkeeping for a covariant of a p-form.

    The three are tied together by degree * p == 2 * weight + order.
    """

    __slots__ = ("degree", "order", "weight", "source_order")

    def __init__(self, degree: int, order: int, source_order: int):
        weight2 = degree * source_order - order
        if weight2 < 0 or weight2 % 2:
            raise ValueError("inconsistent covariant degree/order")
        self.degree = degree
        self.order = order
        self.source_order = source_order
        self.weight = weight2 // 2

    def __repr__(self) -> str:
        return (f"CovariantMeta(degree={self.degree}, order={self.order}, "
                f"weight={self.weight})")


def weight_of(degree: int, source_order: int, order: int) -> int:
    """Weight of a covariant of given degree and order of a p-form."""
    w2 = degree * source_order - order
    if w2 < 0 or w2 % 2:
        raise ValueError(
            f"no covariant of degree {degree}, order {order} on a form of "
            f"order {source_order}")
    return w2 // 2


class BinaryForm:
    """A binary form, stored as its ordered coefficient vector."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = tuple(_as_mpoly(c) for c in coeffs)
        if not cs:
            raise ValueError("a form needs at least one coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    @classmethod
    def from_binomial_quartic(cls, q0, q1, q2, q3, q4) -> "BinaryForm":
        """Quartic given in the binomial convention

        q0 x1^4 + 4 q1 x1^3 x2 + 6 q2 x1^2 x2^2 + 4 q3 x1 x2^3 + q4 x2^4.
        """
        q1, q2, q3 = _as_mpoly(q1), _as_mpoly(q2), _as_mpoly(q3)
        return cls([q0, 4 * q1, 6 * q2, 4 * q3, q4])

    def binomial_coeffs(self) -> tuple:
        """The (q0..q4) of a quartic in the binomial convention."""
        if self.order != 4:
            raise ValueError("binomial convention is defined for quartics")
        a = self.coeffs
        return (a[0], a[1] / 4, a[2] / 6, a[3] / 4, a[4])

    def to_mpoly(self, x1: str = "x1", x2: str = "x2") -> MPoly:
        v1, v2 = MPoly.variable(x1), MPoly.variable(x2)
        p = self.order
        acc = MPoly.zero((x1, x2))
        for i, c in enumerate(self.coeffs):
            acc = acc + c * v1 ** (p - i) * v2 ** i
        return acc

    @classmethod
    def from_mpoly(cls, f: MPoly, order: int, x1: str = "x1",
                   x2: str = "x2") -> "BinaryForm":
        f = f.in_universe(sorted(set(f.variables) | {x1, x2}))
        coeffs = [f.coefficient(x1, order - i).coefficient(x2, i)
                  for i in range(order + 1)]
        got = cls(coeffs)
        if got.to_mpoly(x1, x2) != f:
            raise ValueError(f"polynomial is not a binary form of order {order}")
        return got

    def diff_x1(self) -> "BinaryForm":
        p = self.order
        if p == 0:
            return BinaryForm([MPoly.zero(())])
        return BinaryForm([(p - i) * self.coeffs[i] for i in range(p)])

    def diff_x2(self) -> "BinaryForm":
        p = self.order
        if p == 0:
            return BinaryForm([MPoly.zero(())])
        return BinaryForm([(i + 1) * self.coeffs[i + 1] for i in range(p)])

    def evaluate(self, x1: Scalar, x2: Scalar):
        x1 = Fraction(x1)
        x2 = Fraction(x2)
        p = self.order
        acc = MPoly.zero(())
        for i, c in enumerate(self.coeffs):
            acc = acc + c * (x1 ** (p - i) * x2 ** i)
        return acc

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            p, q = self.order, other.order
            out = [MPoly.zero(()) for _ in range(p + q + 1)]
            for i, ci in enumerate(self.coeffs):
                if ci.is_zero():
                    continue
                for j, cj in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + ci * cj
            return BinaryForm(out)
        return BinaryForm([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.order != other.order:
            raise ValueError("cannot add forms of different orders")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.order != other.order:
            raise ValueError("cannot subtract forms of different orders")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm([-c for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        return f"BinaryForm([{', '.join(str(c) for c in self.coeffs)}])"


def act(g: GroupElement, form: BinaryForm) -> BinaryForm:
    """The substitution action (g.F)(x) = F(g^-1 x)."""
    h = g.inverse()
    p = form.order
    # powers of the two transformed variables, as coefficient vectors
    pow1 = [[Fraction(1)]]
    pow2 = [[Fraction(1)]]
    for k in range(1, p + 1):
        prev = pow1[-1]
        pow1.append([(prev[i] if i < len(prev) else 0) * h.a +
                     (prev[i - 1] if i >= 1 else 0) * h.b for i in range(k + 1)])
        prev = pow2[-1]
        pow2.append([(prev[i] if i < len(prev) else 0) * h.c +
                     (prev[i - 1] if i >= 1 else 0) * h.d for i in range(k + 1)])
    out = [MPoly.zero(()) for _ in range(p + 1)]
    for i, ci in enumerate(form.coeffs):
        if ci.is_zero():
            continue
        v1 = pow1[p - i]
        v2 = pow2[i]
        for m, cm in enumerate(v1):
            if not cm:
                continue
            for n, cn in enumerate(v2):
                if not cn:
                    continue
                out[m + n] = out[m + n] + ci * (cm * cn)
    return BinaryForm(out)


def _mixed_partials(form: BinaryForm, k: int) -> list:
    """[d^k F / dx1^(k-i) dx2^i for i in 0..k]."""
    row = [form]
    for _ in range(k):
        nxt = [f.diff_x1() for f in row]
        nxt.append(row[-1].diff_x2())
        row = nxt
    return row


def transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    """The k-th transvectant (f, g)_k of forms of orders p and q:

    (p-k)!(q-k)!/(p!q!) * sum_i (-1)^i C(k,i)
        d^k f/dx1^(k-i)dx2^i * d^k g/dx1^i dx2^(k-i)

    a form of order p + q - 2k.
    """
    p, q = f.order, g.order
    if k < 0 or k > p or k > q:
        raise ValueError(f"transvectant index {k} out of range for orders {p},{q}")
    pref = Fraction(factorial(p - k) * factorial(q - k), factorial(p) * factorial(q))
    df = _mixed_partials(f, k)
    dg = _mixed_partials(g, k)
    acc = None
    for i in range(k + 1):
        piece = df[i] * dg[k - i]
        piece = piece * (comb(k, i) * pref * (-1 if i % 2 else 1))
        acc = piece if acc is None else acc + piece
    return acc


def sylvester_matrix(f: BinaryForm, g: BinaryForm) -> PolyMatrix:
    """The (p+q)x(p+q) Sylvester matrix of the coefficient vectors."""
    p, q = f.order, g.order
    if p == 0 or q == 0:
        raise ValueError("resultant needs two forms of positive order")
    n = p + q
    zero = MPoly.zero(())
    rows = []
    for r in range(q):
        rows.append([zero] * r + list(f.coeffs) + [zero] * (q - 1 - r))
    for r in range(p):
        rows.append([zero] * r + list(g.coeffs) + [zero] * (p - 1 - r))
    assert all(len(row) == n for row in rows)
    return PolyMatrix.from_rows(rows)


def resultant(f: BinaryForm, g: BinaryForm) -> MPoly:
    """Resultant as the Sylvester determinant of the coefficient vectors."""
    return det_fraction_free(sylvester_matrix(f, g))


def discriminant(form: BinaryForm) -> MPoly:
    """Discriminant normalised as the squared product of root brackets:

    (-1)^(p(p-1)/2) / p^(p-2) * Res(dF/dx1, dF/dx2).
    """
    p = form.order
    if p < 2:
        raise ValueError("discriminant needs a form of order >= 2")
    sign = -1 if (p * (p - 1) // 2) % 2 else 1
    res = resultant(form.diff_x1(), form.diff_x2())
    return res * Fraction(sign, p ** (p - 2))


def form_from_roots(roots: Sequence) -> BinaryForm:
    """Product of linear forms (x1 r2 - x2 r1) over roots (r1, r2)."""
    acc = BinaryForm([MPoly.constant(1)])
    for r1, r2 in roots:
        acc = acc * BinaryForm([r2, _as_mpoly(r1) * -1])
    return acc


def generic_form(order: int, prefix: str = "a") -> BinaryForm:
    """A form of the given order whose coefficients are fresh symbols
    prefix0, prefix1, ..., prefixP."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return BinaryForm([MPoly.variable(f"{prefix}{i}")
                       for i in range(order + 1)])
