"""Exact sparse polynomial arithmetic: ring axioms, calculus, text format,
Euclidean division, and fraction-free determinants."""

import random
from fractions import Fraction

import pytest

from binform.mpoly import (
    MPoly,
    PolyMatrix,
    det_fraction_free,
    format_poly,
    monic_divrem,
    parse_poly,
)

X = MPoly.variable("x")
Y = MPoly.variable("y")
Z = MPoly.variable("z")


def random_poly(rng, variables=("x", "y", "z"), max_terms=6, max_exp=4,
                rational=False):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        key = tuple(rng.randrange(max_exp + 1) for _ in variables)
        c = rng.randrange(-9, 10)
        if rational:
            c = Fraction(c, rng.randrange(1, 7))
        terms[key] = terms.get(key, 0) + c
    return MPoly.from_terms(variables, terms)


class TestConstruction:
    def test_zero_and_constant(self):
        assert MPoly.zero().is_zero()
        assert not MPoly.zero()
        assert MPoly.constant(7).constant_value() == 7
        assert MPoly.constant(Fraction(3, 6)).constant_value() == Fraction(1, 2)
        assert len(MPoly.constant(0)) == 0

    def test_variable(self):
        assert X.variables == ("x",)
        assert X.total_degree() == 1
        assert X.evaluate({"x": 5}) == 5

    def test_from_terms_drops_zeros_and_merges(self):
        p = MPoly.from_terms(("x",), {(1,): 2, (2,): 0})
        assert len(p) == 1
        q = MPoly.from_terms(("x",), {(1,): Fraction(1, 2)})
        assert (q + q).coefficient("x", 1).constant_value() == 1

    def test_constant_value_rejects_nonconstant(self):
        with pytest.raises(ValueError, match="not constant"):
            (X + 1).constant_value()

    def test_integral_coefficients_stay_integral(self):
        p = (X * Fraction(1, 3)) * 3
        for c in p.coefficients():
            assert isinstance(c, int)


class TestRingAxioms:
    def test_random_identities(self):
        rng = random.Random(11)
        for _ in range(40):
            f = random_poly(rng)
            g = random_poly(rng, rational=True)
            h = random_poly(rng, variables=("x", "y"))
            assert (f + g) * h == f * h + g * h
            assert f * g == g * f
            assert (f - g) + g == f
            assert f + 0 == f and 1 * f == f
            assert -(-f) == f

    def test_scalar_mixing(self):
        assert 2 + X == X + 2
        assert 2 - X == -(X - 2)
        assert X * Fraction(1, 2) * 2 == X
        assert (X / 2) * 2 == X
        with pytest.raises(ZeroDivisionError):
            X / 0

    def test_pow_matches_repeated_multiplication(self):
        rng = random.Random(13)
        for _ in range(10):
            f = random_poly(rng, variables=("x", "y"), max_terms=4, max_exp=3)
            product = MPoly.constant(1)
            for k in range(5):
                assert f ** k == product
                product = product * f
        with pytest.raises(ValueError):
            X ** -1

    def test_disjoint_variable_alignment(self):
        p = X + 1
        q = Y + 1
        assert (p * q).variables == ("x", "y")
        assert (p * q).evaluate({"x": 2, "y": 3}) == 12


class TestCalculusAndSubstitution:
    def test_diff_product_rule(self):
        rng = random.Random(17)
        for _ in range(15):
            f = random_poly(rng)
            g = random_poly(rng)
            lhs = (f * g).diff("x")
            rhs = f.diff("x") * g + f * g.diff("x")
            assert lhs == rhs

    def test_diff_unknown_variable_rejected(self):
        with pytest.raises(ValueError, match="unknown variable"):
            (X ** 2).diff("t")

    def test_substitute_commutes_with_evaluate(self):
        rng = random.Random(19)
        for _ in range(15):
            f = random_poly(rng)
            g = random_poly(rng, variables=("u", "v"), max_terms=3, max_exp=2)
            point = {"u": Fraction(rng.randrange(-4, 5)),
                     "v": Fraction(rng.randrange(-4, 5)),
                     "y": Fraction(rng.randrange(-4, 5)),
                     "z": Fraction(rng.randrange(-4, 5))}
            composed = f.substitute({"x": g})
            direct = f.evaluate({"x": g.evaluate(point),
                                 "y": point["y"], "z": point["z"]})
            assert composed.evaluate(point) == direct

    def test_substitute_scalar(self):
        p = X ** 2 + Y
        assert p.substitute({"x": 3}) == Y + 9

    def test_coefficient_reconstruction(self):
        rng = random.Random(23)
        for _ in range(10):
            f = random_poly(rng)
            rebuilt = MPoly.zero()
            for k in range(f.degree("x") + 1):
                rebuilt = rebuilt + f.coefficient("x", k) * X ** k
            assert rebuilt == f

    def test_coefficient_drops_the_variable(self):
        p = X ** 2 * Y + X ** 2
        c = p.coefficient("x", 2)
        assert "x" not in c.variables
        assert c == Y + 1


class TestTextFormat:
    def test_round_trip_random(self):
        rng = random.Random(29)
        for _ in range(25):
            f = random_poly(rng, rational=True)
            assert parse_poly(format_poly(f)) == f

    def test_canonical_examples(self):
        assert format_poly(MPoly.zero()) == "0"
        p = parse_poly("x^2 - 2/3*x*y + 1")
        assert p.coefficient("x", 1).coefficient("y", 1).constant_value() \
            == Fraction(-2, 3)
        assert format_poly(p) == "x^2 - 2/3*x*y + 1"

    def test_parse_rejects_garbage(self):
        for bad in ("x +", "1//2", "x^", "(x", "x**2"):
            with pytest.raises(ValueError):
                parse_poly(bad)


class TestMonicDivision:
    def test_division_invariant(self):
        rng = random.Random(31)
        for _ in range(20):
            f = random_poly(rng, variables=("x", "y"), max_terms=8, max_exp=5)
            d = rng.randrange(1, 4)
            g = X ** d + random_poly(rng, variables=("x", "y"),
                                     max_terms=4, max_exp=d - 1)
            if g.degree("x") != d:
                continue
            q, r = monic_divrem(f, g, "x")
            assert q * g + r == f
            assert r.degree("x") < d

    def test_exactness_on_products(self):
        g = X ** 3 + Y * X + 1
        f = (X ** 2 - Y + 2) * g
        q, r = monic_divrem(f, g, "x")
        assert r.is_zero()
        assert q == X ** 2 - Y + 2

    def test_rejects_nonmonic(self):
        with pytest.raises(ValueError, match="not monic"):
            monic_divrem(X ** 2, 2 * X + 1, "x")
        with pytest.raises(ValueError, match="not monic"):
            monic_divrem(X ** 2, Y * X + 1, "x")

    def test_rejects_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            monic_divrem(X, MPoly.zero(("x",)), "x")


def vandermonde(symbols):
    n = len(symbols)
    return PolyMatrix.from_rows(
        [[symbols[i] ** j for j in range(n)] for i in range(n)])


class TestDeterminant:
    def test_vandermonde_closed_form(self):
        for n in (2, 3, 4, 5):
            xs = [MPoly.variable(f"x{i}") for i in range(n)]
            det = det_fraction_free(vandermonde(xs))
            expected = MPoly.constant(1)
            for j in range(n):
                for i in range(j):
                    expected = expected * (xs[j] - xs[i])
            assert det == expected

    def test_numeric_matches_cofactor_expansion(self):
        rng = random.Random(37)

        def cofactor(rows):
            n = len(rows)
            if n == 1:
                return rows[0][0]
            total = 0
            for j in range(n):
                minor = [row[:j] + row[j + 1:] for row in rows[1:]]
                term = rows[0][j] * cofactor(minor)
                total = total + (term if j % 2 == 0 else -term)
            return total

        for _ in range(10):
            n = rng.randrange(1, 6)
            rows = [[rng.randrange(-9, 10) for _ in range(n)]
                    for _ in range(n)]
            det = det_fraction_free(PolyMatrix.from_rows(rows))
            assert det.constant_value() == cofactor(rows)

    def test_repeated_row_vanishes(self):
        row = [X, Y, X * Y, 1]
        other = [[random.Random(41).randrange(-5, 6) for _ in range(4)]
                 for _ in range(2)]
        matrix = PolyMatrix.from_rows([row] + other + [row])
        assert det_fraction_free(matrix).is_zero()

    def test_rational_entries(self):
        matrix = PolyMatrix.from_rows(
            [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]])
        assert det_fraction_free(matrix).constant_value() == \
            Fraction(1, 14) - Fraction(1, 15)

    def test_empty_and_shape_errors(self):
        assert det_fraction_free(PolyMatrix(0, 0, [])).constant_value() == 1
        with pytest.raises(ValueError, match="shape"):
            PolyMatrix(2, 2, [1, 2, 3])
        with pytest.raises(ValueError, match="square"):
            det_fraction_free(PolyMatrix.from_rows([[1, 2]]))
