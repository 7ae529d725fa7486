"""Binary forms: group action, transvectants, resultants, discriminants."""

import random
from fractions import Fraction

import pytest

from binform.forms import (
    BinaryForm,
    CovariantMeta,
    GroupElement,
    act,
    discriminant,
    form_from_roots,
    generic_form,
    resultant,
    sylvester_matrix,
    transvectant,
    weight_of,
)
from binform.mpoly import MPoly


def random_group_element(rng, bound=5):
    while True:
        a, b, c, d = (rng.randrange(-bound, bound + 1) for _ in range(4))
        if a * d - b * c != 0:
            return GroupElement(a, b, c, d)


def random_det1(rng, factors=3, bound=5):
    g = GroupElement.identity()
    for i in range(factors):
        r = rng.randrange(-bound, bound + 1)
        shear = GroupElement(1, r, 0, 1) if i % 2 else GroupElement(1, 0, r, 1)
        g = g @ shear
    return g


def random_form(rng, order, bound=9):
    while True:
        coeffs = [rng.randrange(-bound, bound + 1) for _ in range(order + 1)]
        if any(coeffs):
            return BinaryForm(coeffs)


class TestGroupElement:
    def test_det_and_inverse(self):
        g = GroupElement(2, 3, 1, 2)
        assert g.det == 1
        assert g @ g.inverse() == GroupElement.identity()
        h = GroupElement(1, 0, 0, Fraction(1, 3))
        assert h.det == Fraction(1, 3)
        assert h.inverse() @ h == GroupElement.identity()

    def test_singular_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            GroupElement(1, 2, 2, 4)

    def test_composition_is_matrix_product(self):
        rng = random.Random(3)
        for _ in range(10):
            g = random_group_element(rng)
            h = random_group_element(rng)
            gh = g @ h
            assert gh.a == g.a * h.a + g.b * h.c
            assert gh.d == g.c * h.b + g.d * h.d


class TestWeights:
    def test_quintic_invariant_weights(self):
        # invariants (order 0) of the quintic: degree d has weight 5d/2
        assert weight_of(4, 5, 0) == 10
        assert weight_of(8, 5, 0) == 20
        assert weight_of(12, 5, 0) == 30
        assert weight_of(18, 5, 0) == 45
        assert weight_of(24, 5, 0) == 60

    def test_covariant_weights(self):
        # the quintic's quadratic covariant (F,F)_4: degree 2, order 2
        assert weight_of(2, 5, 2) == 4
        meta = CovariantMeta(2, 2, 5)
        assert (meta.degree, meta.order, meta.weight) == (2, 2, 4)

    def test_parity_violation_rejected(self):
        with pytest.raises(ValueError):
            weight_of(1, 5, 2)
        with pytest.raises(ValueError):
            CovariantMeta(1, 2, 5)


class TestBinaryForm:
    def test_order_and_zero(self):
        f = BinaryForm([1, 0, 0])
        assert f.order == 2
        assert not f.is_zero()
        assert BinaryForm([0, 0]).is_zero()
        with pytest.raises(ValueError):
            BinaryForm([])

    def test_binomial_round_trip(self):
        q = BinaryForm.from_binomial_quartic(1, 2, 3, 4, 5)
        assert [c.constant_value() for c in q.coeffs] == [1, 8, 18, 16, 5]
        assert [c.constant_value() for c in q.binomial_coeffs()] \
            == [1, 2, 3, 4, 5]
        with pytest.raises(ValueError, match="quartics"):
            BinaryForm([1, 0, 0]).binomial_coeffs()

    def test_mpoly_round_trip(self):
        rng = random.Random(5)
        for _ in range(10):
            f = random_form(rng, rng.randrange(1, 6))
            assert BinaryForm.from_mpoly(f.to_mpoly(), f.order) == f

    def test_from_mpoly_rejects_inhomogeneous(self):
        p = MPoly.variable("x1") ** 2 + MPoly.variable("x2")
        with pytest.raises(ValueError, match="binary form"):
            BinaryForm.from_mpoly(p, 2)

    def test_partials_match_mpoly_diff(self):
        rng = random.Random(7)
        for _ in range(10):
            f = random_form(rng, rng.randrange(1, 6))
            assert f.diff_x1().to_mpoly() == f.to_mpoly().diff("x1")
            assert f.diff_x2().to_mpoly() == f.to_mpoly().diff("x2")

    def test_product_matches_mpoly_product(self):
        rng = random.Random(9)
        for _ in range(10):
            f = random_form(rng, rng.randrange(1, 4))
            g = random_form(rng, rng.randrange(1, 4))
            assert (f * g).to_mpoly() == f.to_mpoly() * g.to_mpoly()

    def test_evaluate(self):
        f = BinaryForm([1, 0, 0, 0, 0, 1])  # x1^5 + x2^5
        assert f.evaluate(2, 1).constant_value() == 33

    def test_generic_form(self):
        f = generic_form(3, prefix="c")
        assert f.order == 3
        assert [c.variables for c in f.coeffs] \
            == [("c0",), ("c1",), ("c2",), ("c3",)]


class TestAction:
    def test_matches_substitution(self):
        rng = random.Random(11)
        x1, x2 = MPoly.variable("x1"), MPoly.variable("x2")
        for _ in range(15):
            f = random_form(rng, rng.randrange(1, 6))
            g = random_group_element(rng)
            inv = g.inverse()
            expected = f.to_mpoly().substitute({
                "x1": inv.a * x1 + inv.b * x2,
                "x2": inv.c * x1 + inv.d * x2,
            })
            assert act(g, f).to_mpoly() == expected

    def test_identity_and_composition(self):
        rng = random.Random(13)
        for _ in range(10):
            f = random_form(rng, 4)
            g = random_group_element(rng)
            h = random_group_element(rng)
            assert act(GroupElement.identity(), f) == f
            assert act(g @ h, f) == act(g, act(h, f))

    def test_scaling_matrix(self):
        # g = diag(1, 1/2): x2 -> 2 x2 in the argument, so a_i -> 2^i a_i
        f = BinaryForm([1, 1, 1, 1])
        g = GroupElement(1, 0, 0, Fraction(1, 2))
        assert [c.constant_value() for c in act(g, f).coeffs] == [1, 2, 4, 8]


class TestTransvectant:
    def test_zeroth_is_product(self):
        rng = random.Random(17)
        for _ in range(5):
            f = random_form(rng, 3)
            g = random_form(rng, 2)
            assert transvectant(f, g, 0) == f * g

    def test_symmetry_sign(self):
        rng = random.Random(19)
        for _ in range(10):
            p = rng.randrange(1, 5)
            q = rng.randrange(1, 5)
            f = random_form(rng, p)
            g = random_form(rng, q)
            for k in range(min(p, q) + 1):
                lhs = transvectant(f, g, k)
                rhs = transvectant(g, f, k)
                assert lhs == (rhs if k % 2 == 0 else -rhs)

    def test_normalization_pinned(self):
        # ((x1^2 + x2^2), (x1^2 + x2^2))_2 = 2 with the factorial prefactor
        f = BinaryForm([1, 0, 1])
        t = transvectant(f, f, 2)
        assert t.order == 0
        assert t.coeffs[0].constant_value() == 2

    def test_order_bookkeeping(self):
        f = generic_form(5)
        t = transvectant(f, f, 4)
        assert t.order == 2

    def test_index_out_of_range(self):
        f = BinaryForm([1, 0, 1])
        with pytest.raises(ValueError, match="out of range"):
            transvectant(f, f, 3)

    def test_covariance_under_the_action(self):
        # (gF, gG)_k = det(g)^(-k) * g (F, G)_k
        rng = random.Random(23)
        for _ in range(8):
            f = random_form(rng, 3)
            h = random_form(rng, 2)
            g = random_group_element(rng)
            for k in range(3):
                lhs = transvectant(act(g, f), act(g, h), k)
                rhs = act(g, transvectant(f, h, k)) * (g.det ** -k)
                assert lhs == rhs


class TestResultant:
    def test_sylvester_shape_and_layout(self):
        f = BinaryForm([1, 2, 3])   # p = 2
        g = BinaryForm([4, 5, 6, 7])  # q = 3
        m = sylvester_matrix(f, g)
        assert (m.rows, m.cols) == (5, 5)
        # q rows of f's coefficients first
        assert [e.constant_value() for e in m.entries[:5]] == [1, 2, 3, 0, 0]
        assert m.entry(3, 0).constant_value() == 4
        with pytest.raises(ValueError, match="positive order"):
            sylvester_matrix(BinaryForm([3]), g)

    def test_linear_case(self):
        xi, eta = Fraction(3), Fraction(-2)
        f = form_from_roots([(xi, 1)])
        g = form_from_roots([(eta, 1)])
        assert resultant(f, g).constant_value() == xi - eta

    def test_root_product_formula(self):
        rng = random.Random(29)
        for _ in range(8):
            xs = [Fraction(rng.randrange(-6, 7)) for _ in range(rng.randrange(1, 4))]
            ys = [Fraction(rng.randrange(-6, 7)) for _ in range(rng.randrange(1, 4))]
            f = form_from_roots([(x, 1) for x in xs])
            g = form_from_roots([(y, 1) for y in ys])
            expected = Fraction(1)
            for x in xs:
                for y in ys:
                    expected *= x - y
            assert resultant(f, g).constant_value() == expected

    def test_multiplicativity(self):
        rng = random.Random(31)
        for _ in range(6):
            f = random_form(rng, 2)
            g = random_form(rng, 2)
            h = random_form(rng, 3)
            lhs = resultant(f * g, h)
            rhs = resultant(f, h) * resultant(g, h)
            assert lhs == rhs

    def test_vanishes_iff_common_root(self):
        f = form_from_roots([(1, 1), (2, 1)])
        g = form_from_roots([(2, 1), (5, 1)])
        h = form_from_roots([(3, 1), (5, 1)])
        assert resultant(f, g).is_zero()
        assert not resultant(f, h).is_zero()

    def test_symbolic_resultant(self):
        # Res(x1^2 - t x2^2, x1 x2) vanishes exactly at t = 0; the root of
        # the second form at infinity flips the affine product's sign
        t = MPoly.variable("t")
        f = BinaryForm([1, 0, -t])
        g = BinaryForm([0, 1, 0])
        assert resultant(f, g) == -t


class TestDiscriminant:
    def test_squared_root_differences(self):
        rng = random.Random(37)
        for _ in range(8):
            n = rng.randrange(2, 6)
            xs = [Fraction(rng.randrange(-6, 7)) for _ in range(n)]
            f = form_from_roots([(x, 1) for x in xs])
            expected = Fraction(1)
            for i in range(n):
                for j in range(i + 1, n):
                    expected *= (xs[i] - xs[j]) ** 2
            assert discriminant(f).constant_value() == expected

    def test_repeated_root_vanishes(self):
        f = form_from_roots([(2, 1), (2, 1), (3, 1)])
        assert discriminant(f).is_zero()

    def test_scaling_degree(self):
        rng = random.Random(41)
        for p in (2, 3, 4, 5):
            f = random_form(rng, p)
            c = Fraction(3, 2)
            assert discriminant(c * f) == discriminant(f) * c ** (2 * p - 2)

    def test_fifth_power_sum_value(self):
        f = BinaryForm([1, 0, 0, 0, 0, 1])
        assert discriminant(f).constant_value() == 3125

    def test_low_order_rejected(self):
        with pytest.raises(ValueError, match="order >= 2"):
            discriminant(BinaryForm([1, 2]))
