"""
Tests voor de termtaal: parser, printer, afgeleide connectieven.
"""

import numpy as np
import pytest

from flewsat.errors import TermSyntaxError
from flewsat.logic.generate import random_terms
from flewsat.logic.term import (
    ONE, ZERO, Impl, Join, Meet, Mult, Var, equiv, neg, nsum, parse_term, plus, power,
    print_term, size, substitute, variables,
)

x1, x2, x3 = Var(1), Var(2), Var(3)


# === parse_term ===

class TestParseTerm:
    def test_variabele_en_constanten(self):
        assert parse_term("x1") == x1
        assert parse_term("0") == ZERO
        assert parse_term("1") == ONE

    def test_negatie_is_implicatie_naar_nul(self):
        assert parse_term("~x1") == Impl(x1, ZERO)

    def test_equivalentie_wordt_uitgeschreven(self):
        assert parse_term("x1 <-> ~x1") == Mult(Impl(x1, neg(x1)), Impl(neg(x1), x1))

    def test_implicatie_rechts_associatief(self):
        assert parse_term("x1 -> x2 -> x3") == Impl(x1, Impl(x2, x3))

    def test_product_links_associatief(self):
        assert parse_term("x1 * x2 * x3") == Mult(Mult(x1, x2), x3)

    def test_precedentie_meet_boven_join(self):
        assert parse_term("x1 \\/ x2 /\\ x3") == Join(x1, Meet(x2, x3))

    def test_precedentie_product_boven_meet(self):
        assert parse_term("x1 /\\ x2 * x3") == Meet(x1, Mult(x2, x3))

    def test_join_bindt_sterker_dan_implicatie(self):
        assert parse_term("x1 \\/ x2 -> x3") == Impl(Join(x1, x2), x3)

    def test_macht_bindt_sterker_dan_negatie(self):
        assert parse_term("~x1^2") == neg(Mult(x1, x1))

    def test_macht_en_veelvoud(self):
        assert parse_term("x1^3") == power(x1, 3)
        assert parse_term("2#x1") == plus(x1, x1)

    def test_plus(self):
        assert parse_term("x1 + x2") == neg(Mult(neg(x1), neg(x2)))

    def test_haakjes(self):
        assert parse_term("(x1 -> x2) -> x3") == Impl(Impl(x1, x2), x3)

    def test_equivalentie_niet_associatief(self):
        with pytest.raises(TermSyntaxError):
            parse_term("x1 <-> x2 <-> x3")

    def test_onbekend_teken_geeft_offset(self):
        with pytest.raises(TermSyntaxError) as info:
            parse_term("x1 & x2")
        assert info.value.offset == 3

    def test_offset_telt_bytes(self):
        with pytest.raises(TermSyntaxError) as info:
            parse_term("¬x1")
        assert info.value.offset == 0
        # niet-brekende spatie is twee bytes
        with pytest.raises(TermSyntaxError) as info:
            parse_term("x1\u00a0& x2")
        assert info.value.offset == 4

    def test_ontbrekend_haakje(self):
        with pytest.raises(TermSyntaxError):
            parse_term("(x1 * x2")

    def test_exponent_nul_geweigerd(self):
        with pytest.raises(TermSyntaxError):
            parse_term("x1^0")

    def test_andere_constante_geweigerd(self):
        with pytest.raises(TermSyntaxError):
            parse_term("x1 * 2")

    def test_lege_invoer(self):
        with pytest.raises(TermSyntaxError):
            parse_term("")


# === print_term ===

class TestPrintTerm:
    def test_volledig_gehaakt(self):
        assert print_term(parse_term("x1 * x2 -> x3")) == "((x1 * x2) -> x3)"

    def test_negatie_uitgeschreven(self):
        assert print_term(neg(x1)) == "(x1 -> 0)"

    @pytest.mark.parametrize("text", [
        "x1 <-> ~x1",
        "(~x1 -> x1) /\\ ~(x1^3)",
        "x1 \\/ x2 /\\ x3 -> 3#x2",
        "((x1 -> x2) -> x1) -> x1",
    ])
    def test_parse_print_parse(self, text):
        t = parse_term(text)
        assert parse_term(print_term(t)) == t

    def test_parse_print_willekeurige_termen(self):
        for t in random_terms(np.random.default_rng(21), 200, max_vars=3, max_depth=5):
            assert parse_term(print_term(t)) == t, print_term(t)


# === Hulpfuncties ===

class TestHulpfuncties:
    def test_variabelen(self):
        assert variables(parse_term("x3 * (x1 -> 0)")) == {1, 3}
        assert variables(ONE) == frozenset()

    def test_substitutie_is_simultaan(self):
        t = Mult(x1, x2)
        assert substitute(t, {1: x2, 2: x1}) == Mult(x2, x1)

    def test_substitutie_zonder_treffers_geeft_zelfde_object(self):
        t = Mult(x1, x2)
        assert substitute(t, {3: x1}) is t

    def test_size_telt_binaire_knopen(self):
        assert size(x1) == 0
        assert size(neg(x1)) == 1
        assert size(equiv(x1, x2)) == 3

    def test_macht_vraagt_positieve_exponent(self):
        with pytest.raises(ValueError):
            power(x1, 0)
        with pytest.raises(ValueError):
            nsum(0, x1)

    def test_negatieve_index_geweigerd(self):
        with pytest.raises(ValueError):
            Var(-1)
