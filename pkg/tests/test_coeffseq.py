import json
import math

import pytest

from conftest import assert_seq_close, assert_series_close
from fraclift.coeffseq import (
    CoeffSeq,
    GenSeries,
    Term,
    int_antiderivative,
    int_derivative,
    lift_jet,
    monomial,
    project,
    seq_add,
    seq_scale,
    series_eval,
    series_from_json,
    series_to_json,
)
from fraclift.errors import (
    BasepointError,
    EvalDomainError,
    ExponentError,
    LatticeError,
)


class TestCoeffSeq:
    def test_add_identity(self):
        s = CoeffSeq(0.0, {0: 1.0, 1: 2.0})
        assert seq_add(s, CoeffSeq(0.0, {})) == s

    def test_scale_zero(self):
        s = CoeffSeq(0.0, {2: 3.0, -1: 4.0})
        assert seq_scale(0.0, s).is_zero

    def test_pointwise_add(self):
        a = CoeffSeq(0.0, {0: 1.0, 1: 2.0})
        b = CoeffSeq(0.0, {1: 3.0})
        assert (a + b).entries == {0: 1.0, 1: 5.0}

    def test_basepoint_mismatch(self):
        with pytest.raises(BasepointError):
            CoeffSeq(0.0, {0: 1.0}) + CoeffSeq(1.0, {0: 1.0})

    def test_zero_entries_dropped(self):
        s = CoeffSeq(0.0, {0: 0.0, 1: 1e-301, 2: 1.0})
        assert s.entries == {2: 1.0}

    def test_integer_shift(self):
        s = CoeffSeq(0.0, {0: 1.0, 3: 2.0})
        assert s.shift(1).entries == {-1: 1.0, 2: 2.0}
        assert s.shift(-2).entries == {2: 1.0, 5: 2.0}


class TestGenSeries:
    def test_sorted_and_merged(self):
        f = GenSeries(0.0, (Term(2.0, 1.0), Term(0.0, 3.0), Term(2.0, 4.0)))
        assert f.terms == (Term(0.0, 3.0), Term(2.0, 5.0))

    def test_lattice_rejection(self):
        with pytest.raises(LatticeError):
            GenSeries(0.0, (Term(0.5, 1.0), Term(0.25, 1.0)))

    def test_single_lattice_ok(self):
        GenSeries(0.0, (Term(-0.5, 1.0), Term(1.5, 2.0), Term(3.5, 1.0)))

    def test_scalar_ops(self):
        f = monomial(2.0, 3.0)
        assert (2.0 * f).terms == (Term(2.0, 6.0),)
        g = f + monomial(1.0, 1.0)
        assert g.terms == (Term(1.0, 1.0), Term(2.0, 3.0))


class TestProjection:
    def test_divides_by_factorials(self):
        f = project(CoeffSeq(0.0, {0: 1.0, 1: 1.0, 2: 1.0}))
        assert f.terms == (Term(0.0, 1.0), Term(1.0, 1.0), Term(2.0, 0.5))

    def test_negative_indices_annihilated(self):
        assert project(CoeffSeq(0.0, {-1: 7.0})).is_zero
        assert project(CoeffSeq(0.0, {})).is_zero
        mixed = project(CoeffSeq(0.0, {-3: 5.0, 1: 2.0}))
        assert mixed.terms == (Term(1.0, 2.0),)

    def test_lift_jet_multiplies_factorials(self):
        f = GenSeries(0.0, (Term(0.0, 1.0), Term(1.0, 1.0), Term(2.0, 0.5)))
        assert lift_jet(f).entries == {0: 1.0, 1: 1.0, 2: 1.0}
        assert lift_jet(monomial(3.0)).entries == {3: 6.0}

    def test_lift_jet_rejects_non_jets(self):
        with pytest.raises(ExponentError):
            lift_jet(monomial(0.5))
        with pytest.raises(ExponentError):
            lift_jet(monomial(-1.0))

    def test_round_trips(self):
        import random
        rng = random.Random(0)
        for _ in range(100):
            entries = {rng.randint(-8, 16): rng.uniform(-10, 10)
                       for _ in range(rng.randint(1, 10))}
            sigma = CoeffSeq(0.0, entries)
            back = lift_jet(project(sigma))
            assert all(i >= 0 for i in back.entries)
            expected = CoeffSeq(0.0, {i: v for i, v in entries.items() if i >= 0})
            assert_seq_close(back, expected)

            exps = rng.sample(range(0, 17), rng.randint(1, 8))
            f = GenSeries(0.0, tuple(Term(float(e), rng.uniform(-10, 10))
                                     for e in exps))
            assert_series_close(project(lift_jet(f)), f)

    def test_linearity(self):
        a = CoeffSeq(0.0, {-2: 1.0, 0: 2.0, 5: -3.0})
        b = CoeffSeq(0.0, {0: 4.0, 3: 1.5})
        assert_series_close(project(a + b), project(a) + project(b))
        assert_series_close(project(2.5 * a), 2.5 * project(a))


class TestSeriesEval:
    def test_exp_jet_at_one(self):
        f = GenSeries(0.0, tuple(Term(float(i), 1.0 / math.factorial(i))
                                 for i in range(13)))
        assert series_eval(f, 1.0) == pytest.approx(math.e, abs=1e-8)

    def test_sqrt_term(self):
        assert series_eval(monomial(0.5), 4.0) == 2.0

    def test_domain_errors(self):
        with pytest.raises(EvalDomainError):
            series_eval(monomial(-0.5), 0.0)
        with pytest.raises(EvalDomainError):
            series_eval(monomial(0.5), -1.0)
        with pytest.raises(EvalDomainError):
            series_eval(GenSeries(0.0, (Term(-2.0, 1.0),)), 0.0)

    def test_integer_exponents_allow_negative_argument(self):
        f = GenSeries(0.0, (Term(3.0, 1.0),))
        assert series_eval(f, -2.0) == -8.0

    def test_evaluation_at_basepoint(self):
        f = GenSeries(1.0, (Term(0.0, 5.0), Term(2.0, 3.0)))
        assert series_eval(f, 1.0) == 5.0


class TestIntCalculusHelpers:
    def test_derivative_exact(self):
        f = GenSeries(0.0, (Term(0.0, 7.0), Term(2.0, -2.0), Term(4.0, 3.0)))
        assert int_derivative(f, 1).terms == (Term(1.0, -4.0), Term(3.0, 12.0))
        assert int_derivative(f, 3).terms == (Term(1.0, 72.0),)

    def test_derivative_kills_low_terms_exactly(self):
        f = GenSeries(0.0, (Term(0.0, 3.0), Term(1.0, 2.0)))
        assert int_derivative(f, 2).is_zero

    def test_antiderivative(self):
        f = GenSeries(0.0, (Term(1.0, 2.0),))
        assert int_antiderivative(f, 1).terms == (Term(2.0, 1.0),)
        with pytest.raises(ExponentError):
            int_antiderivative(GenSeries(0.0, (Term(-1.0, 1.0),)), 1)


class TestJson:
    def test_canonical_output(self):
        f = GenSeries(0.0, (Term(0.5, 1.1283791670955126),))
        text = series_to_json(f)
        assert text == ('{"basepoint": 0, "terms": '
                        '[{"exp": 0.5, "coef": 1.1283791670955126}]}')
        assert json.loads(text)["terms"][0]["exp"] == 0.5

    def test_round_trip(self):
        f = GenSeries(1.5, (Term(-0.5, 2.0), Term(2.5, -1.25)))
        assert series_from_json(series_to_json(f)) == f

    def test_deterministic(self):
        f = GenSeries(0.0, (Term(3.0, 1 / 3), Term(0.0, math.pi)))
        assert series_to_json(f) == series_to_json(f)
