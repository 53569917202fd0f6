import math
import random
from fractions import Fraction

import pytest

from fraclift.coeffseq import Term
from fraclift.errors import ExpansionError, LatticeError, ParseError
from fraclift.parser import (
    Add,
    Call,
    Div,
    Mul,
    Neg,
    Num,
    Pow,
    Sub,
    Var,
    parse,
    to_series,
    to_text,
)


class TestParse:
    def test_sum_of_powers(self):
        assert parse("x^2 + 3*x") == Add(Pow(Var(), Num(2.0)),
                                         Mul(Num(3.0), Var()))

    def test_scaled_centered_power(self):
        assert parse("2*(x-1)^0.5") == Mul(Num(2.0),
                                           Pow(Sub(Var(), Num(1.0)), Num(0.5)))

    def test_trailing_operator_position(self):
        with pytest.raises(ParseError) as err:
            parse("x +")
        assert err.value.column == 4
        assert err.value.line == 1

    def test_unknown_identifier(self):
        with pytest.raises(ParseError):
            parse("tan(x)")
        with pytest.raises(ParseError):
            parse("y + 1")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse("x 2")

    def test_power_right_associative(self):
        assert parse("x^2^3") == Pow(Var(), Pow(Num(2.0), Num(3.0)))

    def test_precedence(self):
        assert parse("1+2*x") == Add(Num(1.0), Mul(Num(2.0), Var()))
        assert parse("-x^2") == Neg(Pow(Var(), Num(2.0)))

    def test_negative_exponent_forms(self):
        assert parse("x^-0.5") == Pow(Var(), Neg(Num(0.5)))
        assert parse("(x-0)^(-0.5)") == Pow(Sub(Var(), Num(0.0)),
                                            Neg(Num(0.5)))

    def test_intrinsics(self):
        assert parse("exp(sin(x))") == Call("exp", Call("sin", Var()))

    def test_line_tracking(self):
        with pytest.raises(ParseError) as err:
            parse("1 +\n* 2")
        assert err.value.line == 2
        assert err.value.column == 1


def _random_ast(rng, depth):
    if depth == 0:
        return rng.choice([Num(float(rng.randint(0, 9))),
                           Num(rng.randint(1, 40) / 8.0), Var()])
    kind = rng.randint(0, 6)
    if kind == 0:
        return Add(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if kind == 1:
        return Sub(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if kind == 2:
        return Mul(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if kind == 3:
        return Div(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if kind == 4:
        return Neg(_random_ast(rng, depth - 1))
    if kind == 5:
        return Pow(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    return Call(rng.choice(["exp", "sin", "cos"]), _random_ast(rng, depth - 1))


class TestRoundTrip:
    def test_fixed_cases(self):
        for text in ("x^2 + 3*x", "2*(x-1)^0.5", "-x", "x + -x",
                     "exp(x)*sin(x) - cos(x^2)", "x^-0.5", "(x - 1)^(-2)",
                     "1/2*x", "x^2^3", "-(x + 1)*x"):
            ast = parse(text)
            assert parse(to_text(ast)) == ast

    def test_randomized(self):
        rng = random.Random(0)
        for _ in range(400):
            ast = _random_ast(rng, rng.randint(1, 4))
            assert parse(to_text(ast)) == ast


class TestToSeries:
    def test_exp_maclaurin(self):
        f = to_series("exp(x)", 0, 4)
        assert f.terms == tuple(Term(float(i), float(Fraction(1, math.factorial(i))))
                                for i in range(5))
        assert f.truncation_order == 4.0

    def test_verbatim_power_term(self):
        f = to_series("(x-1)^(-0.5)", 1.0, 10)
        assert f.basepoint == 1.0
        assert f.terms == (Term(-0.5, 1.0),)
        assert f.truncation_order is None

    def test_bare_x_power_at_origin(self):
        f = to_series("x^0.5", 0.0, 10)
        assert f.terms == (Term(0.5, 1.0),)

    def test_cauchy_product(self):
        f = to_series("sin(x)*x", 0, 5)
        assert f.terms == (Term(2.0, 1.0),
                           Term(4.0, float(Fraction(-1, 6))),
                           Term(6.0, float(Fraction(1, 120))))

    def test_product_of_jets_is_exact(self):
        # exp(x)*exp(x) convolves to 2^i/i! with no rounding at all
        f = to_series("exp(x)*exp(x)", 0, 10)
        for i in range(11):
            assert f.coefficient(float(i)) == float(
                Fraction(2**i, math.factorial(i)))

    def test_mixed_lattice_rejected(self):
        with pytest.raises(LatticeError):
            to_series("x^0.5 + x^0.25", 0, 8)

    def test_power_term_at_wrong_center(self):
        with pytest.raises(ExpansionError):
            to_series("(x-1)^0.5", 0.0, 8)

    def test_division_rules(self):
        f = to_series("x/2", 0, 4)
        assert f.terms == (Term(1.0, 0.5),)
        assert to_series("x/(1+1)", 0, 4).terms == (Term(1.0, 0.5),)
        with pytest.raises(ExpansionError):
            to_series("1/x", 0, 4)
        with pytest.raises(ExpansionError):
            to_series("x/0", 0, 4)

    def test_negative_power_of_general_expression_rejected(self):
        with pytest.raises(ExpansionError):
            to_series("(1+x)^(-1)", 0, 4)

    def test_integer_power_of_subexpression(self):
        f = to_series("(1+x)^3", 0, 8)
        assert f.terms == (Term(0.0, 1.0), Term(1.0, 3.0),
                           Term(2.0, 3.0), Term(3.0, 1.0))

    def test_shifted_polynomial_recenters(self):
        # (x-2)^2 expanded at basepoint 1: u = x-1, (u-1)^2 = 1 - 2u + u^2
        f = to_series("(x-2)^2", 1.0, 8)
        assert f.terms == (Term(0.0, 1.0), Term(1.0, -2.0), Term(2.0, 1.0))

    def test_recentered_intrinsic(self):
        f = to_series("exp(x)", 1.0, 6)
        for i in range(7):
            assert f.coefficient(float(i)) == pytest.approx(
                math.e / math.factorial(i), rel=1e-14)

    def test_composition_against_mpmath(self):
        import mpmath as mp

        f = to_series("exp(sin(x))", 0, 8)
        ref = mp.taylor(lambda t: mp.exp(mp.sin(t)), 0, 8)
        for i, c in enumerate(ref):
            assert f.coefficient(float(i)) == pytest.approx(float(c),
                                                            rel=1e-13, abs=1e-15)

    def test_composition_with_shift_against_mpmath(self):
        import mpmath as mp

        f = to_series("cos(x^2 + x)", 0, 7)
        ref = mp.taylor(lambda t: mp.cos(t**2 + t), 0, 7)
        for i, c in enumerate(ref):
            assert f.coefficient(float(i)) == pytest.approx(float(c),
                                                            rel=1e-13, abs=1e-15)

    def test_non_analytic_intrinsic_argument_rejected(self):
        with pytest.raises(ExpansionError):
            to_series("exp(x^0.5)", 0, 6)

    def test_constant_exponent_expressions(self):
        f = to_series("x^(1/2)", 0, 4)
        assert f.terms == (Term(0.5, 1.0),)

    def test_polynomials_are_exact(self):
        f = to_series("x^5 - 2*x + 7", 0, 3)
        assert f.truncation_order is None
        assert f.terms == (Term(0.0, 7.0), Term(1.0, -2.0), Term(5.0, 1.0))
