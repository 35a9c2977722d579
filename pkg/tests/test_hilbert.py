import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regrange.errors import InputError, NotCertifiableError
from regrange.hilbert import (
    HilbertFunction,
    IntPolynomial,
    gotzmann_decomposition,
    gotzmann_number,
    is_admissible,
    parse_hilbert_function,
    parse_polynomial,
)


class TestIntPolynomial:
    def test_from_power_and_eval(self):
        p = parse_polynomial("2z^2+3z+1")
        assert [p(z) for z in range(4)] == [1, 6, 15, 28]

    def test_eval_negative_argument(self):
        p = parse_polynomial("z^2")
        assert p(-3) == 9

    def test_rejects_non_integer_valued(self):
        with pytest.raises(InputError):
            IntPolynomial.from_power([Fraction(1, 2)])

    def test_accepts_rational_but_integer_valued(self):
        # z(z+1)/2 takes integer values
        p = IntPolynomial.from_power([Fraction(0), Fraction(1, 2), Fraction(1, 2)])
        assert [p(z) for z in range(5)] == [0, 1, 3, 6, 10]

    def test_delta(self):
        p = parse_polynomial("2z^2+3z+1")
        assert p.delta() == parse_polynomial("4z+1")
        assert parse_polynomial("4z+1").delta() == IntPolynomial.constant(4)
        assert IntPolynomial.constant(4).delta().is_zero

    def test_antiderivative(self):
        p = IntPolynomial.constant(4)
        P = p.antiderivative(1, 4)
        assert P == parse_polynomial("4z")

    def test_str_round_trip(self):
        for text in ["28z-90", "2z^2+3z+1", "z", "0", "5", "-z^3+z"]:
            p = parse_polynomial(text)
            assert parse_polynomial(str(p)) == p

    def test_rational_coefficient_parse(self):
        p = parse_polynomial("1/2z^2+1/2z")
        assert [p(z) for z in range(4)] == [0, 1, 3, 6]

    def test_parse_rejects_garbage(self):
        for bad in ["", "z+", "2x", "1,2"]:
            with pytest.raises(InputError):
                parse_polynomial(bad)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
    @settings(max_examples=200)
    def test_newton_interpolation_round_trip(self, coeffs):
        p = IntPolynomial(tuple(coeffs))
        q = IntPolynomial.from_values([p(z) for z in range(len(coeffs) + 1)])
        assert p == q
        shifted = IntPolynomial.from_values(
            [p(z) for z in range(3, 3 + len(coeffs) + 1)], start=3
        )
        assert shifted == p


class TestHilbertFunctionBasics:
    def test_eval_prefix_and_tail(self, hf):
        u = hf("1 ; 4z")
        assert u(0) == 1
        assert u(3) == 12

    def test_eval_veronese(self, hf):
        u = hf("1,5 ; 2z^2+3z+1")
        assert u(2) == 15

    def test_canonical_strips_agreeing_prefix(self, hf):
        assert hf("1,5,15 ; 2z^2+3z+1") == hf("1,5 ; 2z^2+3z+1")
        assert hf("1 ; z+1") == hf("z+1")

    def test_rejects_negative_values(self):
        with pytest.raises(InputError):
            HilbertFunction((1, -2), IntPolynomial.constant(1))
        with pytest.raises(InputError):
            parse_hilbert_function("-1")
        with pytest.raises(InputError):
            # eventually negative tail
            parse_hilbert_function("1 ; -z+2")

    def test_tail_negative_below_prefix_is_fine(self, hf):
        u = hf("1,4,10,20,35,55,80 ; 28z-90")
        assert u(0) == 1 and u(7) == 106

    def test_rho(self, hf):
        assert hf("1 ; 4z").rho() == 1
        assert hf("1,5 ; 2z^2+3z+1").rho() == 2
        assert hf("4z+1").rho() == 0


class TestDeltaSigma:
    def test_delta_veronese(self, hf):
        assert hf("1,5 ; 2z^2+3z+1").delta() == hf("1,4,10 ; 4z+1")

    def test_delta_big_example(self, hf):
        u = hf("1,4,10,20,35,55,80 ; 28z-90")
        assert u.delta() == hf("1,3,6,10,15,20,25,26 ; 28")

    def test_delta_line_bundle_style(self, hf):
        u = hf("1 ; 4z")
        assert u.delta() == hf("1,3 ; 4")
        assert u.delta().sigma() == u

    def test_sigma_big_example(self, hf):
        f = hf("1,3,6,10,15,20,25,26 ; 28")
        assert f.sigma() == hf("1,4,10,20,35,55,80 ; 28z-90")

    def test_sigma_of_ones(self, hf):
        assert hf("1 ; 1").sigma() == hf("z+1")

    def test_delta_requires_one_at_zero(self, hf):
        with pytest.raises(InputError):
            hf("2 ; 2").delta()
        with pytest.raises(InputError):
            hf("2 ; 2").sigma()

    def test_round_trips_random(self, hf):
        rng = random.Random(7)
        tails = ["4z+1", "28z-90", "2z^2+3z+1", "4", "0", "z+1"]
        for _ in range(200):
            tail = parse_polynomial(rng.choice(tails))
            prefix = [1] + [rng.randint(0, 30) for _ in range(rng.randint(0, 5))]
            try:
                u = HilbertFunction(tuple(prefix), tail)
            except InputError:
                continue
            if u(0) != 1:
                continue
            assert u.sigma().delta() == u
            bound = max(u.rho() + 2, 8)
            nondecreasing = all(u(t) <= u(t + 1) for t in range(bound))
            if nondecreasing:
                assert u.delta().sigma() == u

    def test_rho_shift_under_delta(self, hf):
        for text in ["1,5 ; 2z^2+3z+1", "1,4,10,20,35,55,80 ; 28z-90", "1 ; 4z"]:
            u = parse_hilbert_function(text)
            if u.rho() >= 1 and u.tail.degree >= 1:
                assert u.delta().rho() == u.rho() + 1


class TestOrder:
    def test_paper_example_true(self, hf):
        assert hf("1,4,8 ; 4z+1").leq(hf("1,4,10 ; 4z+1"))

    def test_reflexive(self, hf):
        u = hf("1,4,8 ; 4z+1")
        assert u.leq(u)

    def test_antitone_pair(self, hf):
        # the lower-regularity minimal function dominates the higher one
        f5 = hf("1,3,6,10,15 ; 4z+1")
        f3 = hf("1,4,8 ; 4z+1")
        assert f5.leq(f3)
        assert not f3.leq(f5)

    def test_tail_dominance(self, hf):
        assert hf("1 ; 4z").leq(hf("1 ; z^2+3z"))
        assert not hf("1 ; z^2+3z").leq(hf("1 ; 4z"))

    def test_agrees_with_scan(self, hf):
        rng = random.Random(11)
        tails = ["4z+1", "4z", "5z-3", "4", "5", "2z^2+3z+1", "0"]
        pool = []
        for _ in range(60):
            tail = parse_polynomial(rng.choice(tails))
            prefix = tuple(rng.randint(0, 25) for _ in range(rng.randint(0, 4)))
            try:
                pool.append(HilbertFunction(prefix, tail))
            except InputError:
                continue
        for a in pool:
            for b in pool:
                scan = all(a(t) <= b(t) for t in range(51))
                exact = a.leq(b)
                if exact:
                    assert scan
                elif scan:
                    # scan bound too short only when tails eventually cross
                    assert any(a(t) > b(t) for t in range(51, 200))


class TestOSequence:
    def test_veronese_delta(self, hf):
        assert hf("1,4,10 ; 4z+1").is_o_sequence()

    def test_growth_violation(self, hf):
        assert not hf("1,1,2 ; 2").is_o_sequence()

    def test_field(self, hf):
        assert hf("1 ; 0").is_o_sequence()

    def test_zero_at_zero(self, hf):
        assert not hf("2 ; 2").is_o_sequence()

    def test_artinian(self, hf):
        assert hf("1,2,1 ; 0").is_o_sequence()
        assert not hf("1,2,1,3 ; 0").is_o_sequence()

    def test_uncertifiable_tail_raises(self, hf):
        u = HilbertFunction((1,), parse_polynomial("2z^2"))
        with pytest.raises(NotCertifiableError):
            u.is_o_sequence()


class TestGotzmann:
    def test_5z_minus_3(self, poly):
        assert gotzmann_number(poly("5z-3")) == 7

    def test_constants(self):
        for d in range(1, 9):
            assert gotzmann_number(IntPolynomial.constant(d)) == d

    def test_4z_plus_1(self, poly):
        assert gotzmann_number(poly("4z+1")) == 7

    def test_decomposition_shape(self, poly):
        seq = gotzmann_decomposition(poly("5z-3"))
        assert seq == (1, 1, 1, 1, 1, 0, 0)

    def test_admissible_examples(self, poly):
        assert is_admissible(poly("28z-90"))
        assert not is_admissible(poly("-1"))
        assert not is_admissible(poly("2z^2"))
        assert not is_admissible(IntPolynomial.zero())

    def test_derivative_shrinks_gotzmann_number(self, poly):
        for text in ["5z-3", "4z+1", "2z^2+3z+1", "28z-90"]:
            p = poly(text)
            if p.degree >= 1:
                assert gotzmann_number(p.delta()) <= gotzmann_number(p)

    def test_decomposition_reconstructs(self, poly):
        from regrange.hilbert import gotzmann_piece

        for text in ["5z-3", "4z+1", "2z^2+3z+1", "28z-90", "7"]:
            p = poly(text)
            seq = gotzmann_decomposition(p)
            total = IntPolynomial.zero()
            for i, a in enumerate(seq, start=1):
                total = total + gotzmann_piece(a, i)
            assert total == p
            assert all(x >= y for x, y in zip(seq, seq[1:]))


class TestLiterals:
    def test_round_trip(self):
        for text in ["1 ; 4z", "1,3 ; 4", "4z+1", "1,2,1 ; 0"]:
            u = parse_hilbert_function(text)
            assert parse_hilbert_function(u.literal()) == u

    def test_paper_style_str(self, hf):
        assert str(hf("1,4,8 ; 4z+1")) == "(1,4,8,4z+1)"
        assert str(hf("4z+1")) == "(4z+1)"

    def test_whitespace_insignificant(self):
        assert parse_hilbert_function(" 1 , 3 ;  4 ") == parse_hilbert_function("1,3;4")

    def test_bad_prefix(self):
        with pytest.raises(InputError):
            parse_hilbert_function("1,a ; 4")
