import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_gb import (
    Binomial,
    LinearCode,
    buchberger,
    build_coset_leader_table,
    capability,
    coset_engine,
    degrevlex_compare,
    ideal_generators,
    is_groebner,
    normal_form,
    reduce_poly,
    spoly,
)
from schubert_gb.fixtures import load_basis
from schubert_gb.groebner import (
    _validated_basis,
    exponents_from_mask,
    field_relation,
)
from schubert_gb.validation import EnumerationLimitError
from schubert_gb.verify import coset_minimum
from schubert_gb.words import mask_from_support, monomial_from_string, weight



def exps(mon: str, n: int):
    return exponents_from_mask(monomial_from_string(mon), n)


class TestDegrevlex:
    def test_reference_lead(self):
        assert degrevlex_compare(exps("x1*x2", 7), exps("x4*x7", 7)) > 0

    def test_one_is_minimum(self):
        assert degrevlex_compare(exps("1", 7), exps("x1", 7)) < 0

    def test_reflexive_equal(self):
        assert degrevlex_compare(exps("x3", 7), exps("x3", 7)) == 0

    def test_square_versus_pair(self):
        # x1^2 > x1*x2 > x2^2 under degrevlex
        x1sq = (2, 0, 0)
        x1x2 = (1, 1, 0)
        x2sq = (0, 2, 0)
        assert degrevlex_compare(x1sq, x1x2) > 0
        assert degrevlex_compare(x1x2, x2sq) > 0

    exps_st = st.lists(st.integers(min_value=0, max_value=3), min_size=5, max_size=5).map(tuple)

    @given(exps_st, exps_st)
    def test_total_and_antisymmetric(self, a, b):
        c = degrevlex_compare(a, b)
        assert c in (-1, 0, 1)
        assert c == -degrevlex_compare(b, a)
        assert (c == 0) == (a == b)

    @given(exps_st, exps_st, exps_st)
    @settings(max_examples=60)
    def test_multiplicative(self, a, b, c):
        shifted = tuple(x + y for x, y in zip(a, c)), tuple(x + y for x, y in zip(b, c))
        assert degrevlex_compare(a, b) == degrevlex_compare(*shifted)

    @given(exps_st, exps_st, exps_st)
    @settings(max_examples=60)
    def test_transitive(self, a, b, c):
        if degrevlex_compare(a, b) <= 0 and degrevlex_compare(b, c) <= 0:
            assert degrevlex_compare(a, c) <= 0


class TestIdealGenerators:
    def test_reference_generators(self, codes):
        gens = ideal_generators(codes["1_4"])
        assert len(gens) == 3 + 7
        code_leads = {g.lead for g in gens if g.kind == "code"}
        assert code_leads == {
            mask_from_support(s) for s in [(1, 5, 6, 7), (2, 4, 5, 6), (3, 4, 5, 7)]
        }
        assert all(g.trail == 0 for g in gens)
        assert sum(1 for g in gens if g.kind == "field") == 7

    def test_zero_dimensional_code(self):
        code = LinearCode.from_generator(np.zeros((0, 4), dtype=int), 2)
        gens = ideal_generators(code)
        assert len(gens) == 4 and all(g.kind == "field" for g in gens)

    def test_count_is_k_plus_n(self, codes):
        for code in codes.values():
            assert len(ideal_generators(code)) == code.k + code.n


class TestSpoly:
    def test_equal_inputs_cancel(self):
        f = (exps("x1*x2", 7), exps("x4*x7", 7))
        assert spoly(f, f) is None

    def test_hand_expanded_pair(self):
        f = (exps("x1*x2", 7), exps("x4*x7", 7))
        g = (exps("x2*x3", 7), exps("x6*x7", 7))
        assert spoly(f, g) == (exps("x3*x4*x7", 7), exps("x1*x6*x7", 7))

    def test_field_relation_pair(self):
        f = ((2, 0, 0, 0, 0, 0, 0), exps("1", 7))  # x1^2 - 1
        g = (exps("x1*x2", 7), exps("x4*x7", 7))
        assert spoly(f, g) == (exps("x1*x4*x7", 7), exps("x2", 7))

    def test_result_is_binomial(self):
        rng = random.Random(5)
        for _ in range(50):
            f = (tuple(rng.randint(0, 2) for _ in range(5)),
                 tuple(rng.randint(0, 2) for _ in range(5)))
            g = (tuple(rng.randint(0, 2) for _ in range(5)),
                 tuple(rng.randint(0, 2) for _ in range(5)))
            if f[0] == f[1] or g[0] == g[1]:
                continue
            s = spoly(f, g)
            assert s is None or (len(s) == 2 and degrevlex_compare(*s) > 0)


class TestReducePoly:
    def test_self_reduction(self):
        f = (exps("x1*x2", 7), exps("x4*x7", 7))
        assert reduce_poly(f, [f]) == ()

    def test_square_by_field_relations(self):
        fields = [field_relation(i).exponent_pair(7) for i in range(1, 8)]
        assert reduce_poly([(0, 0, 0, 2, 0, 0, 0), exps("1", 7)], fields) == ()

    def test_spoly_of_basis_elements_vanishes(self, bases):
        pairs = bases["1_4"].as_pairs()
        s = (exps("x3*x4*x7", 7), exps("x1*x6*x7", 7))
        assert reduce_poly(s, pairs) == ()

    def test_partial_reduction_keeps_binomial(self):
        fields = [field_relation(i).exponent_pair(3) for i in range(1, 4)]
        out = reduce_poly([(2, 1, 0), (0, 0, 1)], fields)
        assert out == ((0, 1, 0), (0, 0, 1))


class TestEngines:
    def test_buchberger_reproduces_reference_listing(self, codes):
        assert buchberger(ideal_generators(codes["1_4"])) == load_basis("1_4")

    def test_coset_engine_reproduces_reference_listing(self, bases):
        assert bases["2_3"] == load_basis("2_3")

    def test_element_breakdown_1_4(self, bases):
        gb = bases["1_4"]
        assert len(gb.elements) == 21
        assert sum(1 for b in gb.elements if b.kind == "field") == 7
        assert all(weight(b.lead) == 2 for b in gb.code_binomials)

    def test_min_total_degree_1_5(self, bases):
        assert min(weight(b.lead) for b in bases["1_5"].code_binomials) == 4

    def test_standard_monomial_count(self, codes, bases):
        for tag, code in codes.items():
            table = build_coset_leader_table(code)
            assert len(set(int(x) for x in table.leaders)) == 1 << (code.n - code.k)

    def test_field_relations_alone(self):
        gens = [field_relation(i) for i in range(1, 5)]
        gb = buchberger(gens)
        assert gb.n == 4 and gb.code_binomials == ()

    def test_buchberger_guard(self, codes):
        with pytest.raises(EnumerationLimitError, match="coset engine"):
            buchberger(ideal_generators(codes["1_5"]))

    def test_missing_field_relations_rejected(self):
        with pytest.raises(ValueError, match="field relation"):
            buchberger([Binomial(0b11, 0, "code")])

    def test_engines_agree_on_random_codes(self, small_random_codes):
        for code in small_random_codes:
            assert buchberger(ideal_generators(code)) == coset_engine(code)

    def test_degenerate_distance_two_rejected(self):
        # two equal parity columns force a weight-2 codeword
        code = LinearCode.from_generator(np.array([[1, 1, 0], [0, 1, 1]]), 2)
        with pytest.raises(ValueError, match="degenerate"):
            coset_engine(code)
        with pytest.raises(ValueError, match="degenerate"):
            buchberger(ideal_generators(code))

    def test_engine_outputs_are_groebner(self, codes, bases, small_random_codes):
        assert is_groebner(bases["1_4"].elements, n=7)
        assert is_groebner(bases["2_3"].elements, n=7)
        for code in small_random_codes[:3]:
            assert is_groebner(coset_engine(code).elements, n=code.n)


class TestNormalForm:
    def test_reference_rewrites(self, bases):
        gb = bases["1_4"]
        assert normal_form(mask_from_support([1, 2]), gb) == mask_from_support([4, 7])
        assert normal_form(0, gb) == 0
        assert normal_form(mask_from_support([1, 5, 6, 7]), gb) == 0

    def test_exhaustive_oracle_1_4(self, codes, bases):
        cw = codes["1_4"].codeword_masks()
        for m in range(1 << 7):
            assert normal_form(m, bases["1_4"]) == coset_minimum(m, cw)

    def test_sampled_oracle_2_4(self, codes, bases):
        cw = codes["2_4"].codeword_masks()
        rng = random.Random(99)
        for _ in range(500):
            m = rng.randrange(1 << 19)
            assert normal_form(m, bases["2_4"]) == coset_minimum(m, cw)

    def test_confluence_under_random_selection(self, bases):
        gb = bases["1_4"]
        for seed in range(10):
            rng = random.Random(seed)
            selector = lambda hits: rng.randrange(len(hits))
            for m in range(1 << 7):
                assert normal_form(m, gb, selector=selector) == normal_form(m, gb)

    def test_idempotent(self, bases):
        gb = bases["2_3"]
        for m in range(1 << 7):
            nf = normal_form(m, gb)
            assert normal_form(nf, gb) == nf


class TestCapability:
    def test_reference_capabilities(self, bases):
        assert capability(bases["1_4"]) == 1
        assert capability(bases["1_5"]) == 3
        assert capability(bases["2_4"]) == 3

    def test_undefined_without_code_binomials(self):
        gb = buchberger([field_relation(i) for i in range(1, 4)])
        with pytest.raises(ValueError, match="capability undefined"):
            capability(gb)

    def test_floor_rule_on_random_codes(self, small_random_codes):
        from schubert_gb import min_distance_bruteforce

        for code in small_random_codes:
            gb = coset_engine(code)
            assert capability(gb) == (min_distance_bruteforce(code) - 1) // 2


class TestIsGroebner:
    def test_reference_listing_is_groebner(self):
        assert is_groebner(load_basis("1_4").elements, n=7)

    def test_raw_generators_are_not(self, codes):
        assert not is_groebner(ideal_generators(codes["1_4"]), n=7)

    def test_field_relations_alone(self):
        assert is_groebner([field_relation(i) for i in range(1, 6)], n=5)

    def test_exponent_route_without_field_relations(self):
        # no field relations at all: the exponent-tuple fallback must run
        # and deliver definite verdicts
        single = [Binomial(0b011, 0, "code")]  # one element is always a basis
        assert is_groebner(single, n=3)
        pair = [Binomial(0b011, 0, "code"), Binomial(0b110, 0, "code")]
        # S(x1x2-1, x2x3-1) leaves x1 - x3, reducible by neither lead
        assert not is_groebner(pair, n=3)

    def test_broken_basis_detected(self, bases):
        elements = [
            b for b in bases["1_4"].elements if b.kind == "field"
        ] + list(bases["1_4"].code_binomials[:5])
        assert not is_groebner(elements, n=7)


class TestValidation:
    def test_rejects_missing_field_relation(self):
        with pytest.raises(ValueError, match="field relations"):
            _validated_basis(3, [field_relation(1), field_relation(2)])

    def test_rejects_dividing_leads(self):
        elements = [field_relation(i) for i in range(1, 5)]
        elements += [
            Binomial(mask_from_support([1, 2]), 0, "code"),
            Binomial(mask_from_support([1, 2, 3]), mask_from_support([4]), "code"),
        ]
        with pytest.raises(ValueError, match="not reduced"):
            _validated_basis(4, elements)

    def test_rejects_misoriented_element(self):
        elements = [field_relation(i) for i in range(1, 5)]
        elements += [Binomial(mask_from_support([3, 4]), mask_from_support([1, 2]), "code")]
        with pytest.raises(ValueError, match="oriented"):
            _validated_basis(4, elements)

    def test_elements_sorted_ascending(self, bases):
        from schubert_gb.groebner import _element_sort_key

        for gb in bases.values():
            keys = [_element_sort_key(b, gb.n) for b in gb.elements]
            assert keys == sorted(keys)


class TestThirdEngineCrossCheck:
    """Compare against an unrelated computer-algebra system when available."""

    @staticmethod
    def _sympy_basis_elements(code):
        sp = pytest.importorskip("sympy")
        xs = sp.symbols(f"x1:{code.n + 1}")
        gens = [
            sp.Poly(sp.prod(x for x, b in zip(xs, row) if b) - 1, *xs, domain=sp.GF(2))
            for row in code.generator
        ]
        gens += [sp.Poly(x**2 - 1, *xs, domain=sp.GF(2)) for x in xs]
        gb = sp.groebner(gens, *xs, order="grevlex", domain=sp.GF(2))
        elements = set()
        for poly in gb.polys:
            monoms = poly.monoms()
            assert len(monoms) <= 2  # binomial ideal stays binomial

            def to_part(exp):
                if any(e == 2 for e in exp):
                    (i,) = [i for i, e in enumerate(exp) if e]
                    return ("sq", i + 1)
                return ("m", sum(1 << i for i, e in enumerate(exp) if e))

            parts = [to_part(m) for m in monoms]
            if len(parts) == 1:
                parts.append(("m", 0))
            elements.add(frozenset(parts))
        return elements

    @staticmethod
    def _as_parts(gb):
        out = set()
        for b in gb.elements:
            if b.kind == "field":
                out.add(frozenset([("sq", b.lead.bit_length()), ("m", 0)]))
            else:
                out.add(frozenset([("m", b.lead), ("m", b.trail)]))
        return out

    def test_reference_codes(self, codes, bases):
        for tag in ("1_4", "2_3"):
            assert self._sympy_basis_elements(codes[tag]) == self._as_parts(bases[tag])

    def test_random_codes(self, small_random_codes):
        for code in small_random_codes[:3]:
            assert self._sympy_basis_elements(code) == self._as_parts(coset_engine(code))


class TestMaskExponentConsistency:
    def test_spoly_mask_shortcut_matches_reference(self, bases):
        """The engines' eagerly field-reduced S-polynomial equals the
        exponent-tuple S-polynomial followed by field-relation reduction."""
        gb = bases["2_3"]
        n = gb.n
        fields = [field_relation(i).exponent_pair(n) for i in range(1, n + 1)]
        codes_ = list(gb.code_binomials)
        rng = random.Random(3)
        for _ in range(60):
            f, g = rng.sample(codes_, 2)
            lcm = f.lead | g.lead
            mask_terms = {lcm ^ f.lead ^ f.trail, lcm ^ g.lead ^ g.trail}
            if len(mask_terms) == 1:
                mask_terms = set()
            s = spoly(f.exponent_pair(n), g.exponent_pair(n))
            ref_terms = set(reduce_poly(s, fields)) if s else set()
            got = {exponents_from_mask(m, n) for m in mask_terms}
            assert got == ref_terms
