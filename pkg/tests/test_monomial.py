import pytest

from regrange.errors import InputError
from regrange.hilbert import parse_hilbert_function
from regrange.monomial import (
    BorelSet,
    MonomialIdeal,
    deglex_cmp,
    expand,
    hf_quotient,
    ideal_from_json_dict,
    is_borel,
    is_strongly_stable,
    lex_ideal,
    minimal_generators,
    reg_ss,
    saturate_ss,
    term_str,
)


def T(*exps):
    return tuple(exps)


# ambient x0..x3 unless said otherwise; exponent tuples list x0 first
GHL_M3 = {
    T(0, 0, 0, 3),  # x3^3
    T(0, 0, 1, 2),  # x3^2 x2
    T(0, 0, 2, 1),  # x3 x2^2
    T(0, 0, 3, 0),  # x2^3
    T(0, 1, 0, 2),  # x3^2 x1
    T(0, 1, 1, 1),  # x3 x2 x1
    T(1, 0, 0, 2),  # x0 x3^2
    T(1, 0, 1, 1),  # x0 x3 x2
}


class TestDeglex:
    def test_square_beats_product(self):
        assert deglex_cmp(T(0, 0, 0, 2), T(0, 0, 1, 1)) > 0

    def test_big_variable_dominates(self):
        # x3 x1^2 > x2^3 even though the shared degree sits lower
        assert deglex_cmp(T(0, 2, 0, 1), T(0, 3, 0, 0)) > 0

    def test_degree_dominates(self):
        assert deglex_cmp(T(0, 3, 0, 0), T(0, 0, 1, 1)) > 0

    def test_equal(self):
        assert deglex_cmp(T(1, 2, 0, 0), T(1, 2, 0, 0)) == 0

    def test_ambient_mismatch(self):
        with pytest.raises(InputError):
            deglex_cmp(T(1, 0), T(1, 0, 0))


class TestBorel:
    def test_ghl_example_is_borel(self):
        assert is_borel(BorelSet(3, 4, GHL_M3))

    def test_single_mixed_term_is_not(self):
        assert not is_borel(BorelSet(3, 4, {T(0, 1, 1, 1)}))

    def test_full_degree_is_borel(self):
        from regrange.kernels import iter_terms

        full = BorelSet(3, 3, set(iter_terms(3, 3)))
        assert is_borel(full)

    def test_expand_fixed_ambient(self):
        # ambient restricted to x1, x2, x3
        B = BorelSet(2, 3, {T(0, 0, 2), T(0, 1, 1)})
        grown = expand(B)
        assert grown.terms == {
            T(0, 0, 3),
            T(0, 1, 2),
            T(1, 0, 2),
            T(0, 2, 1),
            T(1, 1, 1),
        }
        assert is_borel(grown)

    def test_expand_empty(self):
        assert len(expand(BorelSet(2, 3, set()))) == 0

    def test_expand_full_is_full(self):
        from regrange.kernels import bucket_count, iter_terms

        full = BorelSet(2, 3, set(iter_terms(2, 3)))
        assert len(expand(full)) == bucket_count(3, 3)

    def test_degree_validation(self):
        with pytest.raises(InputError):
            BorelSet(2, 3, {T(1, 1, 1)})


class TestLexIdeal:
    def test_four_points_in_three_vars(self, hf):
        J = lex_ideal(hf("1,3 ; 4"), 3)
        assert set(J.gens) == {T(0, 0, 2), T(0, 1, 1), T(2, 0, 1), T(4, 0, 0)}
        assert J.var_offset == 1
        assert J.to_text() == "x3^2, x3*x2, x3*x1^2, x2^4"

    def test_one_variable(self, hf):
        J = lex_ideal(hf("1 ; 0"), 1)
        assert J.gens == (T(1),)
        assert J.to_text() == "x1"

    def test_artinian_plane(self, hf):
        # derived by hand: segments of sizes 0, 2, 4 leave quotients 2, 1, 0
        J = lex_ideal(hf("1,2,1 ; 0"), 2)
        assert set(J.gens) == {T(0, 2), T(1, 1), T(3, 0)}
        assert J.to_text() == "x2^2, x2*x1, x1^3"

    def test_artinian_plane_shifted(self, hf):
        # the function with one more step keeps the quartic generator
        J = lex_ideal(hf("1,2,2,1 ; 0"), 2)
        assert J.to_text() == "x2^2, x2*x1^2, x1^4"

    def test_round_trip(self, hf):
        for text, nvars in [
            ("1,3 ; 4", 3),
            ("1,2,1 ; 0", 2),
            ("1,4,10 ; 4z+1", 4),
            ("1,3,6,10,15,20,25,26 ; 28", 3),
        ]:
            h = parse_hilbert_function(text)
            assert hf_quotient(lex_ideal(h, nvars)) == h

    def test_too_few_variables(self, hf):
        with pytest.raises(InputError):
            lex_ideal(hf("1,3 ; 4"), 1)

    def test_requires_o_sequence(self, hf):
        with pytest.raises(InputError):
            lex_ideal(hf("1,1,2 ; 0"), 3)


class TestMinimalGenerators:
    def test_new_generator_shows_up(self):
        from regrange.kernels import top_terms

        parts = {
            2: BorelSet(2, 3, {T(0, 0, 2), T(0, 1, 1)}),
            3: BorelSet(3, 3, set(top_terms(3, 3, 6))),
        }
        gens = minimal_generators(parts)
        assert set(gens) == {T(0, 0, 2), T(0, 1, 1), T(2, 0, 1)}

    def test_single_degree(self):
        parts = {2: BorelSet(2, 3, {T(0, 0, 2), T(0, 1, 1)})}
        assert set(minimal_generators(parts)) == {T(0, 0, 2), T(0, 1, 1)}

    def test_stabilized_chain_adds_nothing(self):
        B2 = BorelSet(2, 3, {T(0, 0, 2)})
        B3 = expand(B2)
        gens = minimal_generators({2: B2, 3: B3})
        assert set(gens) == {T(0, 0, 2)}

    def test_containment_violation(self):
        with pytest.raises(InputError):
            minimal_generators(
                {2: BorelSet(2, 3, {T(0, 0, 2)}), 3: BorelSet(3, 3, {T(0, 0, 3)})}
            )


class TestStronglyStable:
    def test_saturated_example(self):
        J = MonomialIdeal(4, (T(0, 0, 0, 2), T(0, 0, 1, 1), T(0, 0, 3, 0)))
        assert is_strongly_stable(J)

    def test_power_of_small_variable_alone(self):
        assert not is_strongly_stable(MonomialIdeal(2, (T(2, 0),)))

    def test_square_of_maximal_ideal(self):
        J = MonomialIdeal(2, (T(0, 2), T(1, 1), T(2, 0)))
        assert is_strongly_stable(J)


class TestSaturation:
    def test_m3_borel_set(self):
        J = saturate_ss(MonomialIdeal(4, tuple(GHL_M3)))
        assert J.to_text() == "x3^2, x3*x2, x2^3"

    def test_already_saturated_fixed_point(self):
        J = MonomialIdeal(4, (T(0, 0, 0, 2), T(0, 0, 1, 1), T(0, 0, 3, 0)))
        assert saturate_ss(J) == J

    def test_requires_strongly_stable(self):
        with pytest.raises(InputError):
            saturate_ss(MonomialIdeal(2, (T(2, 0),)))

    def test_requires_full_ring(self):
        J = MonomialIdeal(2, (T(0, 1),), var_offset=1)
        with pytest.raises(InputError):
            saturate_ss(J)

    def test_values_agree_from_generator_degree_on(self):
        raw = MonomialIdeal(4, tuple(GHL_M3))
        sat = saturate_ss(raw)
        hq_raw, hq_sat = hf_quotient(raw), hf_quotient(sat)
        for t in range(raw.max_gen_degree(), raw.max_gen_degree() + 6):
            assert hq_raw(t) == hq_sat(t)


class TestHfQuotient:
    def test_m3_ideal(self, hf):
        J = MonomialIdeal(4, (T(0, 0, 0, 2), T(0, 0, 1, 1), T(0, 0, 3, 0)))
        assert hf_quotient(J) == hf("1 ; 4z")

    def test_m4_ideal(self, hf):
        J = MonomialIdeal(
            4, (T(0, 0, 0, 2), T(0, 0, 1, 1), T(0, 2, 0, 1), T(0, 0, 4, 0))
        )
        assert hf_quotient(J) == hf("1 ; 4z")

    def test_zero_ideal(self, hf):
        assert hf_quotient(MonomialIdeal(4, ())) == hf("1/6z^3+z^2+11/6z+1")
        assert hf_quotient(MonomialIdeal(3, ())) == hf("1/2z^2+3/2z+1")

    def test_rejects_non_strongly_stable(self):
        with pytest.raises(InputError):
            hf_quotient(MonomialIdeal(2, (T(2, 0),)))


class TestRegSS:
    def test_examples(self):
        assert reg_ss(MonomialIdeal(4, (T(0, 0, 0, 2), T(0, 0, 1, 1), T(0, 0, 3, 0)))) == 3
        assert (
            reg_ss(
                MonomialIdeal(
                    4, (T(0, 0, 0, 2), T(0, 0, 1, 1), T(0, 2, 0, 1), T(0, 0, 4, 0))
                )
            )
            == 4
        )
        assert reg_ss(MonomialIdeal(4, (T(0, 0, 0, 1),))) == 1
        assert reg_ss(MonomialIdeal(4, ())) == 0

    def test_lex_regularity_closed_form(self, hf):
        from regrange.hilbert import gotzmann_number_or_none

        for text, nvars in [
            ("1,3 ; 4", 3),
            ("1,4,10 ; 4z+1", 4),
            ("1,2,1 ; 0", 2),
            ("1,3,6,10,15,20,25,26 ; 28", 3),
        ]:
            h = parse_hilbert_function(text)
            r = gotzmann_number_or_none(h.tail)
            expected = max(h.rho(), r) if r is not None else h.rho()
            assert reg_ss(lex_ideal(h, nvars)) == expected


class TestSerialization:
    def test_generator_order(self):
        J = MonomialIdeal(
            4, (T(0, 0, 4, 0), T(0, 0, 0, 2), T(0, 2, 0, 1), T(0, 0, 1, 1))
        )
        assert J.to_text() == "x3^2, x3*x2, x3*x1^2, x2^4"

    def test_pruning(self):
        J = MonomialIdeal(2, (T(0, 1), T(1, 1), T(0, 2)))
        assert J.gens == (T(0, 1),)

    def test_term_str(self):
        assert term_str(T(0, 2, 0, 1)) == "x3*x1^2"
        assert term_str(T(0, 0), 1) == "1"

    def test_json_round_trip(self):
        J = MonomialIdeal(3, (T(0, 0, 2), T(0, 1, 1)), var_offset=1)
        data = J.to_json_dict()
        assert data["ambient_n"] == 3
        assert data["regularity"] == 2
        assert ideal_from_json_dict(data) == J
