import math
import random
from fractions import Fraction

import pytest

from conftest import assert_series_close
from fraclift.coeffseq import CoeffSeq, GenSeries, Term, lift_jet, monomial
from fraclift.errors import BasepointError, ExponentError
from fraclift.lifted import (
    LiftedSeq,
    embed,
    lift_gen,
    lifted_from_json,
    lifted_to_json,
    project,
    shift,
)

SQRT_PI = math.sqrt(math.pi)


class TestEmbed:
    def test_restriction_is_identity(self):
        sigma = CoeffSeq(0.0, {1: 1.0, -4: 2.5})
        rho = embed(sigma)
        assert rho.offset == 0
        assert rho.values == sigma.entries
        assert rho.on_integers() == sigma

    def test_zero(self):
        assert embed(CoeffSeq(0.0, {})).is_zero

    def test_jet_restriction(self):
        sigma = lift_jet(monomial(2.0))
        assert embed(sigma).on_integers() == sigma


class TestShift:
    def test_halves_compose_to_one(self):
        rho = embed(CoeffSeq(0.0, {1: 1.0, 3: -2.0}))
        assert shift(shift(rho, 0.5), 0.5) == shift(rho, 1.0)

    def test_zero_shift_identity(self):
        rho = embed(CoeffSeq(0.0, {2: 1.0}))
        assert shift(rho, 0.0) == rho

    def test_exact_cancellation(self):
        rho = shift(embed(CoeffSeq(0.0, {0: 1.0})), 0.1)
        assert shift(shift(rho, 0.3), -0.3) == rho

    def test_bitwise_commutativity(self):
        rng = random.Random(1)
        for _ in range(300):
            rho = shift(embed(CoeffSeq(0.0, {rng.randint(-8, 16): rng.uniform(-10, 10)
                                             for _ in range(5)})),
                        rng.uniform(-2, 2))
            a, b = rng.uniform(-3, 3), rng.uniform(-3, 3)
            assert shift(shift(rho, a), b) == shift(shift(rho, b), a)

    def test_offset_is_exact_rational(self):
        rho = embed(CoeffSeq(0.0, {0: 1.0}))
        out = rho
        for _ in range(3):
            out = shift(out, math.pi / 3.0)
        assert out.offset == 3 * Fraction(math.pi / 3.0)

    def test_values_never_touched(self):
        values = {5: 1.75, -2: 3.0}
        rho = LiftedSeq(0.0, 0, values)
        assert shift(rho, 1.2345).values == values


class TestProject:
    def test_reduces_to_sequence_projection_at_offset_zero(self):
        sigma = CoeffSeq(0.0, {0: 1.0, 2: 4.0, -3: 9.0})
        from fraclift.coeffseq import project as seq_project
        assert project(embed(sigma)) == seq_project(sigma)
        assert project(sigma) == seq_project(sigma)

    def test_identity_on_jets(self):
        f = monomial(1.0)
        assert_series_close(project(embed(lift_jet(f))), f)

    def test_half_shift_of_x(self):
        rho = shift(embed(lift_jet(monomial(1.0))), 0.5)
        out = project(rho)
        assert len(out.terms) == 1
        assert out.terms[0].exponent == 0.5
        assert out.terms[0].coefficient == pytest.approx(2.0 / SQRT_PI, rel=1e-13)

    def test_pole_annihilation(self):
        rho = LiftedSeq(0.0, 0, {-1: 5.0})
        assert project(rho).is_zero
        # non-integer offsets never hit the poles
        assert not project(shift(rho, 0.25)).is_zero


class TestLiftGen:
    def test_jet_input_matches_embedding(self):
        f = monomial(1.0)
        assert lift_gen(f) == embed(lift_jet(f))

    def test_half_lattice(self):
        rho = lift_gen(monomial(-0.5))
        assert rho.offset == Fraction(1, 2)
        assert set(rho.values) == {0}
        assert rho.values[0] == pytest.approx(SQRT_PI, rel=1e-13)

    def test_negative_integer_exponent_rejected(self):
        with pytest.raises(ExponentError):
            lift_gen(monomial(-2.0))
        with pytest.raises(ExponentError):
            lift_gen(GenSeries(0.0, (Term(1.0, 1.0), Term(-1.0, 2.0))))

    def test_round_trip_general_lattices(self):
        rng = random.Random(2)
        for _ in range(100):
            phase = rng.uniform(0.0, 1.0)
            exps = sorted(rng.sample(range(-3, 12), rng.randint(1, 6)))
            f = GenSeries(0.0, tuple(Term(e + phase, rng.uniform(-10, 10))
                                     for e in exps))
            try:
                rho = lift_gen(f)
            except ExponentError:
                assert any(abs(t.exponent - round(t.exponent)) < 1e-9
                           and t.exponent < 0 for t in f.terms)
                continue
            assert_series_close(project(rho), f)

    def test_linearity(self):
        f = GenSeries(0.0, (Term(-0.5, 2.0), Term(1.5, 1.0)))
        g = GenSeries(0.0, (Term(0.5, -1.0), Term(1.5, 3.0)))
        assert_series_close(project(lift_gen(f) + lift_gen(g)),
                            project(lift_gen(f + g)))


class TestLiftedAlgebra:
    def test_add_requires_same_lattice(self):
        a = shift(embed(CoeffSeq(0.0, {0: 1.0})), 0.5)
        b = embed(CoeffSeq(0.0, {0: 1.0}))
        with pytest.raises(BasepointError):
            a + b

    def test_linearity_through_shift(self):
        a = embed(CoeffSeq(0.0, {0: 1.0, 2: 2.0}))
        b = embed(CoeffSeq(0.0, {1: -1.0, 2: 1.0}))
        k = 0.7
        assert shift(a + b, k) == shift(a, k) + shift(b, k)
        assert shift(3.0 * a, k) == 3.0 * shift(a, k)

    def test_off_lattice_restriction_is_zero(self):
        rho = shift(embed(CoeffSeq(0.0, {0: 1.0})), 0.5)
        assert rho.on_integers().is_zero


class TestLiftedJson:
    def test_round_trip(self):
        rho = shift(embed(CoeffSeq(0.0, {1: 1.0, -2: 0.5})), 0.75)
        back = lifted_from_json(lifted_to_json(rho))
        assert back == rho

    def test_canonical_text(self):
        rho = LiftedSeq(0.0, Fraction(1, 2), {0: 1.0})
        assert lifted_to_json(rho) == (
            '{"basepoint": 0, "offset": 0.5, '
            '"values": [{"index": 0, "value": 1}]}')

    def test_deterministic(self):
        rho = shift(embed(CoeffSeq(0.0, {3: math.pi, -1: 1 / 3})), math.pi / 3)
        assert lifted_to_json(rho) == lifted_to_json(rho)
