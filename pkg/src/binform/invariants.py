"""Invariants of binary quartics and quintics in exact rational arithmetic.

A quartic carries the classical pair (S, T); a quintic carries the vector
(J, K, L, H) built from a fixed transvectant chain, together with its
discriminant.  The three-parameter Sylvester family

    u*x1**5 + v*x2**5 - w*(x1 + x2)**5

is the worked test bed: on it every quintic invariant collapses to a short
closed form in u, v, w, which makes exact cross-checking cheap.

All functions accept numeric (rational) or symbolic (polynomial) coefficients
and return values in kind: a Fraction when the result is constant, an MPoly
otherwise.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple

from .forms import BinaryForm, discriminant, transvectant
from .mpoly import MPoly

__all__ = [
    "QuarticInvariants",
    "quartic_S",
    "quartic_S_transvectant",
    "quartic_T",
    "quartic_T_transvectant",
    "quartic_invariants",
    "j_invariant",
    "CovariantChain",
    "quintic_covariants",
    "canonizant",
    "InvariantVector",
    "quintic_invariants",
    "verify_relation",
    "graded_dimension",
    "monomial_basis",
    "SylvesterPoint",
    "sylvester_specialize",
    "sylvester_invariants",
    "verify_disc",
    "verify_dims",
]


def _require_order(form: BinaryForm, order: int, what: str) -> None:
    if form.order != order:
        raise ValueError(
            f"{what} requires a form of order {order}, got order {form.order}")


def _scalar_or_poly(value):
    """Collapse a constant MPoly to a Fraction; pass everything else through."""
    if isinstance(value, MPoly):
        try:
            return value.constant_value()
        except ValueError:
            return value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"not an exact value: {value!r}")


def _is_zero(value) -> bool:
    return value.is_zero() if isinstance(value, MPoly) else value == 0


def _equal(a, b) -> bool:
    diff = a - b
    return diff.is_zero() if isinstance(diff, MPoly) else diff == 0


# ---------------------------------------------------------------------------
# quartic invariants
# ---------------------------------------------------------------------------

class QuarticInvariants:
    """The invariant pair (S, T) of a binary quartic.

    S has degree 2 and weight 4, T degree 3 and weight 6, and the quartic
    discriminant is 2**8 * (S**3 - 27*T**2) identically.
    """

    __slots__ = ("S", "T")

    DEGREES = {"S": 2, "T": 3}
    WEIGHTS = {"S": 4, "T": 6}

    def __init__(self, S, T):
        self.S = _scalar_or_poly(S)
        self.T = _scalar_or_poly(T)

    @property
    def discriminant(self):
        return _scalar_or_poly(256 * (self.S ** 3 - 27 * self.T ** 2))

    def __eq__(self, other):
        if not isinstance(other, QuarticInvariants):
            return NotImplemented
        return _equal(self.S, other.S) and _equal(self.T, other.T)

    def __hash__(self):
        return hash((QuarticInvariants, str(self.S), str(self.T)))

    def __repr__(self):
        return f"QuarticInvariants(S={self.S!r}, T={self.T!r})"


def quartic_S(quartic: BinaryForm):
    """Degree-2 quartic invariant: q0*q4 - 4*q1*q3 + 3*q2**2.

    The q's are the binomial-convention coefficients of the quartic; the
    half-fourth-transvectant route ``quartic_S_transvectant`` computes the
    same value by differentiation and is kept as an independent cross-check.
    """
    _require_order(quartic, 4, "quartic_S")
    q0, q1, q2, q3, q4 = quartic.binomial_coeffs()
    return _scalar_or_poly(q0 * q4 - 4 * (q1 * q3) + 3 * (q2 * q2))


def quartic_S_transvectant(quartic: BinaryForm):
    """S computed as half the fourth transvectant of the quartic with itself."""
    _require_order(quartic, 4, "quartic_S_transvectant")
    return _scalar_or_poly(
        Fraction(1, 2) * transvectant(quartic, quartic, 4).coeffs[0])


def quartic_T(quartic: BinaryForm):
    """Degree-3 quartic invariant:
    q0*q2*q4 + 2*q1*q2*q3 - q2**3 - q0*q3**2 - q1**2*q4.
    """
    _require_order(quartic, 4, "quartic_T")
    q0, q1, q2, q3, q4 = quartic.binomial_coeffs()
    return _scalar_or_poly(q0 * q2 * q4 + 2 * (q1 * q2 * q3)
                           - q2 ** 3 - q0 * q3 ** 2 - q1 ** 2 * q4)


def quartic_T_transvectant(quartic: BinaryForm):
    """T computed as one sixth of (Q, (Q,Q)_2)_4."""
    _require_order(quartic, 4, "quartic_T_transvectant")
    inner = transvectant(quartic, quartic, 2)
    return _scalar_or_poly(
        Fraction(1, 6) * transvectant(quartic, inner, 4).coeffs[0])


def quartic_invariants(quartic: BinaryForm) -> QuarticInvariants:
    return QuarticInvariants(quartic_S(quartic), quartic_T(quartic))


def j_invariant(quartic: BinaryForm) -> Fraction:
    """Projective invariant S**3 / (S**3 - 27*T**2) of a numeric quartic.

    Classifies the configuration of the quartic's four roots on the
    projective line; requires a nonvanishing quartic discriminant.
    """
    s = quartic_S(quartic)
    t = quartic_T(quartic)
    if isinstance(s, MPoly) or isinstance(t, MPoly):
        raise TypeError("j_invariant requires a numeric quartic")
    denominator = s ** 3 - 27 * t ** 2
    if denominator == 0:
        raise ValueError("degenerate quartic")
    return Fraction(s ** 3, 1) / denominator


# ---------------------------------------------------------------------------
# quintic covariants and invariants
# ---------------------------------------------------------------------------

class CovariantChain(NamedTuple):
    """The four chained covariants of a quintic F.

    first   = (F, F)_4             order 2, degree 2
    second  = (F, first)_2         order 3, degree 3
    third   = (second, second)_2   order 2, degree 6
    fourth  = (second, first)_2    order 1, degree 5

    The negated ``second`` is the canonizant: its three linear factors are
    the fifth-power forms of the Sylvester canonical shape.
    """

    first: BinaryForm
    second: BinaryForm
    third: BinaryForm
    fourth: BinaryForm


def quintic_covariants(quintic: BinaryForm) -> CovariantChain:
    """Compute the covariant chain of a quintic; orders come out (2, 3, 2, 1)."""
    _require_order(quintic, 5, "quintic_covariants")
    first = transvectant(quintic, quintic, 4)
    second = transvectant(quintic, first, 2)
    third = transvectant(second, second, 2)
    fourth = transvectant(second, first, 2)
    return CovariantChain(first, second, third, fourth)


def canonizant(quintic: BinaryForm) -> BinaryForm:
    """The degree-3, order-3 covariant locating the canonical fifth powers."""
    _require_order(quintic, 5, "canonizant")
    first = transvectant(quintic, quintic, 4)
    return -transvectant(quintic, first, 2)


class InvariantVector:
    """The fundamental quintic invariants J, K, L, H plus the discriminant.

    Degrees are (4, 8, 12, 18) and weights (10, 20, 30, 45); the discriminant
    has degree 8 and weight 20 and satisfies Disc = 5**5 * (J**2 - 128*K).
    The four generators are linked by the exact degree-36 relation

        16*H**2 = -432*L**3 - 72*L**2*K*J + 8*L*K**3
                  - 2*L*K**2*J**2 + L**2*J**3 + K**4*J.
    """

    __slots__ = ("J", "K", "L", "H", "Disc")

    DEGREES = {"J": 4, "K": 8, "L": 12, "H": 18, "Disc": 8}
    WEIGHTS = {"J": 10, "K": 20, "L": 30, "H": 45, "Disc": 20}

    def __init__(self, J, K, L, H, Disc=None):
        self.J = _scalar_or_poly(J)
        self.K = _scalar_or_poly(K)
        self.L = _scalar_or_poly(L)
        self.H = _scalar_or_poly(H)
        if Disc is None:
            Disc = 3125 * (self.J * self.J - 128 * self.K)
        self.Disc = _scalar_or_poly(Disc)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.__slots__}

    def to_json_dict(self) -> dict:
        """Exact-rational JSON payload; only numeric vectors serialize."""
        out = {}
        for name in self.__slots__:
            value = getattr(self, name)
            if isinstance(value, MPoly):
                raise TypeError(
                    "only numeric invariant vectors serialize to JSON")
            out[name] = str(Fraction(value))
        return out

    def __eq__(self, other):
        if not isinstance(other, InvariantVector):
            return NotImplemented
        return all(_equal(getattr(self, n), getattr(other, n))
                   for n in self.__slots__)

    def __hash__(self):
        return hash((InvariantVector,)
                    + tuple(str(getattr(self, n)) for n in self.__slots__))

    def __repr__(self):
        parts = ", ".join(f"{n}={getattr(self, n)!r}" for n in self.__slots__)
        return f"InvariantVector({parts})"


def quintic_invariants(quintic: BinaryForm) -> InvariantVector:
    """The invariant vector of a quintic, by the transvectant chain.

    J = -1/2 (first, first)_2        degree  4
    K =  1/8 (first, third)_2        degree  8
    L = 1/96 (third, third)_2        degree 12
    H = -1/384 ((fourth, third)_1, (first, fourth)_1)_1   degree 18
    """
    _require_order(quintic, 5, "quintic_invariants")
    chain = quintic_covariants(quintic)
    j = Fraction(-1, 2) * transvectant(chain.first, chain.first, 2).coeffs[0]
    k = Fraction(1, 8) * transvectant(chain.first, chain.third, 2).coeffs[0]
    l = Fraction(1, 96) * transvectant(chain.third, chain.third, 2).coeffs[0]
    left = transvectant(chain.fourth, chain.third, 1)
    right = transvectant(chain.first, chain.fourth, 1)
    h = Fraction(-1, 384) * transvectant(left, right, 1).coeffs[0]
    return InvariantVector(j, k, l, h)


def verify_relation(vector: InvariantVector) -> bool:
    """Exact check of the degree-36 relation tying J, K, L, H together."""
    J, K, L, H = vector.J, vector.K, vector.L, vector.H
    lhs = 16 * H * H
    rhs = (-432 * L ** 3 - 72 * L ** 2 * K * J + 8 * L * K ** 3
           - 2 * L * K ** 2 * J ** 2 + L ** 2 * J ** 3 + K ** 4 * J)
    return _equal(lhs, rhs)


# ---------------------------------------------------------------------------
# graded components of the quintic invariant ring
# ---------------------------------------------------------------------------

def _check_graded_degree(d: int) -> None:
    if not isinstance(d, int) or d <= 0 or d % 4:
        raise ValueError("degree must be a positive multiple of 4")


def graded_dimension(d: int) -> int:
    """Dimension of the space of degree-d quintic invariants.

    Computed as the partition-count sum nu(0) + ... + nu(d/4) with
    nu(k) = floor(k/6) when k = 1 mod 6 and floor(k/6) + 1 otherwise;
    for d = 24*l this equals 3*l**2 + 3*l + 1.
    """
    _check_graded_degree(d)
    total = 0
    for k in range(d // 4 + 1):
        nu = k // 6
        if k % 6 != 1:
            nu += 1
        total += nu
    return total


def monomial_basis(d: int) -> list:
    """Exponent triples (a1, a2, a3) with L**a1 * K**a2 * J**a3 of degree d.

    Since J, K, L are algebraically independent these monomials are a basis
    of the degree-d graded component; the fixed output order is L-exponent
    descending, then K-exponent descending.
    """
    _check_graded_degree(d)
    m = d // 4
    out = []
    for a1 in range(m // 3, -1, -1):
        for a2 in range((m - 3 * a1) // 2, -1, -1):
            out.append((a1, a2, m - 3 * a1 - 2 * a2))
    return out


# ---------------------------------------------------------------------------
# the Sylvester canonical family
# ---------------------------------------------------------------------------

class SylvesterPoint:
    """Parameters (u, v, w) of the canonical quintic
    u*x1**5 + v*x2**5 - w*(x1 + x2)**5."""

    __slots__ = ("u", "v", "w")

    def __init__(self, u, v, w):
        self.u = _scalar_or_poly(u)
        self.v = _scalar_or_poly(v)
        self.w = _scalar_or_poly(w)

    @classmethod
    def symbolic(cls) -> "SylvesterPoint":
        return cls(MPoly.variable("u"), MPoly.variable("v"),
                   MPoly.variable("w"))

    def __repr__(self):
        return f"SylvesterPoint({self.u!r}, {self.v!r}, {self.w!r})"


def sylvester_specialize(point: SylvesterPoint) -> BinaryForm:
    """Coefficient vector [u-w, -5w, -10w, -10w, -5w, v-w] of the canonical
    quintic."""
    u, v, w = point.u, point.v, point.w
    return BinaryForm([u - w, -5 * w, -10 * w, -10 * w, -5 * w, v - w])


def sylvester_invariants(point: SylvesterPoint) -> InvariantVector:
    """Closed forms of the quintic invariants on the canonical family:

    J = (uv + uw + vw)**2 - 4uvw(u + v + w)
    K = (uvw)**2 * (uv + uw + vw)
    L = (uvw)**4
    H = (uvw)**5 * (u - v)(u - w)(v - w)

    These equal the transvectant-route values of ``quintic_invariants`` on
    ``sylvester_specialize(point)`` — an identity the test suite pins down
    with u, v, w symbolic.
    """
    u, v, w = point.u, point.v, point.w
    e1 = u + v + w
    e2 = u * v + u * w + v * w
    e3 = u * v * w
    j = e2 * e2 - 4 * (e3 * e1)
    k = e3 * e3 * e2
    l = e3 ** 4
    h = e3 ** 5 * (u - v) * (u - w) * (v - w)
    return InvariantVector(j, k, l, h)


# ---------------------------------------------------------------------------
# batch verifications (used by the command line front end)
# ---------------------------------------------------------------------------

def verify_disc(samples: int = 20, seed: int = 0) -> dict:
    """Dual-route discriminant check: Disc(F) == 5**5 * (J**2 - 128*K).

    The left side always comes from the resultant of the two partial
    derivatives, the right side from the transvectant-route invariants.
    Checked symbolically on the canonical family (u, v, w indeterminate) and
    numerically on ``samples`` seeded random integer quintics.
    """
    point = SylvesterPoint.symbolic()
    form = sylvester_specialize(point)
    vector = quintic_invariants(form)
    symbolic_ok = _equal(discriminant(form),
                         3125 * (vector.J * vector.J - 128 * vector.K))

    rng = random.Random(seed)
    numeric_ok = True
    for _ in range(samples):
        coeffs = [rng.randrange(-9, 10) for _ in range(6)]
        form = BinaryForm(coeffs)
        vector = quintic_invariants(form)
        left = _scalar_or_poly(discriminant(form))
        right = 3125 * (vector.J * vector.J - 128 * vector.K)
        if left != right:
            numeric_ok = False
            break
    return {
        "symbolic_canonical": symbolic_ok,
        "numeric_samples": samples,
        "numeric_random": numeric_ok,
        "holds": symbolic_ok and numeric_ok,
    }


def verify_dims() -> dict:
    """Check the graded dimensions through all three routes.

    For l = 1..5 (degrees 24..120) the partition-count sum, the closed form
    3*l**2 + 3*l + 1, and the enumerated monomial basis must agree; the
    degree-24/48/72 values are additionally pinned to 7, 19, 37.
    """
    pinned = {24: 7, 48: 19, 72: 37}
    rows = []
    ok = True
    for l in range(1, 6):
        d = 24 * l
        nu_sum = graded_dimension(d)
        closed = 3 * l * l + 3 * l + 1
        basis = len(monomial_basis(d))
        match = nu_sum == closed == basis
        if d in pinned:
            match = match and nu_sum == pinned[d]
        ok = ok and match
        rows.append({"degree": d, "nu_sum": nu_sum, "closed_form": closed,
                     "basis_size": basis, "match": match})
    return {"holds": ok, "rows": rows}
