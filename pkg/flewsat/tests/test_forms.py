"""
Tests voor de syntactische fragmenten: CF/DF, klassieke vervulbaarheid,
DIMACS, hoekpuntmaximum en de DP-reductie.
"""

from fractions import Fraction

import numpy as np
import pytest

from flewsat.algebra.core import evaluate_all
from flewsat.algebra.exact import standard_mv_eval
from flewsat.algebra.zoo import lukasiewicz_chain
from flewsat.errors import BudgetExceeded, DimacsError, FlewsatError
from flewsat.app.decision import sat, satpos
from flewsat.logic import forms
from flewsat.logic.forms import (
    CFForm, DFForm, Literal, cf_size, cf_to_df, cf_to_term, classical_sat_cv, consistent, cv_to_df,
    df_to_term, dimacs_export, dimacs_import, dp_reduce, recognize_cf, recognize_cv, vertex_max,
)
from flewsat.logic.term import parse_term, print_term

DIMACS_SAT = """c voorbeeld
p cnf 3 2
1 -2 0
2 3 0
"""

DIMACS_UNSAT = """p cnf 1 2
1 0
-1 0
"""


# === Herkenning ===

class TestHerkenning:
    def test_literalen(self):
        assert recognize_cv(parse_term("x1")) == Literal(1, True)
        assert recognize_cv(parse_term("~x2")) == Literal(2, False)

    def test_cv_fragment(self):
        assert recognize_cv(parse_term("(x1 \\/ ~x2) * x3")) is not None

    def test_buiten_fragment(self):
        assert recognize_cv(parse_term("x1 /\\ x2")) is None
        assert recognize_cv(parse_term("~~x1")) is None
        assert recognize_cv(parse_term("x1 -> x2")) is None

    def test_cf(self):
        c = recognize_cf(parse_term("(x1 \\/ ~x2) * x3"))
        assert c.clauses == ((Literal(1), Literal(2, False)), (Literal(3),))

    def test_geen_cf(self):
        assert recognize_cf(parse_term("x1 \\/ (x2 * x3)")) is None

    def test_lege_vormen_geweigerd(self):
        with pytest.raises(FlewsatError):
            CFForm(())
        with pytest.raises(FlewsatError):
            DFForm(((),))


# === Distributie ===

class TestDistributie:
    def test_cf_naar_df(self):
        c = recognize_cf(parse_term("(x1 \\/ x2) * (x3 \\/ ~x1)"))
        assert cf_size(c) == 4
        df = cf_to_df(c)
        assert df.text() == "x1 * x3 \\/ x1 * ~x1 \\/ x2 * x3 \\/ x2 * ~x1"

    def test_multipliciteit_blijft(self):
        df = cv_to_df(recognize_cv(parse_term("(x1 \\/ x2) * x1")))
        assert df.monomials == ((Literal(1), Literal(1)), (Literal(2), Literal(1)))

    def test_budget_voor_expansie(self):
        c = recognize_cf(parse_term("(x1 \\/ x2) * (x3 \\/ x4) * (x5 \\/ x6)"))
        with pytest.raises(BudgetExceeded) as info:
            cf_to_df(c, budget=4)
        assert info.value.needed == 8

    def test_df_behoudt_evaluatie(self):
        t = parse_term("((x1 \\/ ~x2) * x3 \\/ x2) * (~x3 \\/ x1)")
        df_term = df_to_term(cv_to_df(recognize_cv(t)))
        L5 = lukasiewicz_chain(5)
        assert np.array_equal(evaluate_all(t, L5, (1, 2, 3)), evaluate_all(df_term, L5, (1, 2, 3)))

    def test_cf_term_terug(self):
        t = parse_term("(x1 \\/ ~x2) * x3")
        assert cf_to_term(recognize_cf(t)) == t


# === Klassieke vervulbaarheid ===

class TestKlassiekeSat:
    def test_complementair_paar(self):
        assert not consistent((Literal(1), Literal(2), Literal(1, False)))
        assert consistent((Literal(1), Literal(1), Literal(2, False)))

    def test_vervulbaar_met_getuige(self):
        verdict = classical_sat_cv(parse_term("(x1 \\/ x2) * ~x1"))
        assert verdict.holds
        assert verdict.witness == {1: 0, 2: 1}

    def test_onvervulbaar(self):
        assert not classical_sat_cv(parse_term("x1 * ~x1")).holds
        assert not classical_sat_cv(parse_term("(x1 \\/ x2) * ~x1 * ~x2")).holds

    def test_buiten_fragment(self):
        with pytest.raises(FlewsatError):
            classical_sat_cv(parse_term("x1 /\\ ~x1"))

    def test_zoektocht_boven_budget(self):
        t = parse_term("(x1 \\/ x2) * (x3 \\/ x4) * (~x1 \\/ ~x3) * ~x2")
        verdict = classical_sat_cv(t, budget=2)
        assert verdict.holds
        assert verdict.witness[1] == 1 and verdict.witness[3] == 0

    def test_brute_kracht_na_stappenlimiet(self, monkeypatch):
        monkeypatch.setattr(forms, "MAX_SEARCH_STEPS", 1)
        t = parse_term("(x1 \\/ x2) * ~x1")
        verdict = classical_sat_cv(t, budget=1)
        assert verdict.holds and verdict.witness == {1: 0, 2: 1}

    def test_gelijk_aan_sat_in_l3(self):
        L3 = lukasiewicz_chain(3)
        for text in ("(x1 \\/ x2) * ~x1", "x1 * ~x1", "(x1 \\/ ~x1) * (x2 \\/ ~x2)"):
            t = parse_term(text)
            expected = classical_sat_cv(t).holds
            assert sat(L3, t).holds == satpos(L3, t).holds == expected, text


# === DIMACS ===

class TestDimacs:
    def test_import(self):
        c = dimacs_import(DIMACS_SAT)
        assert c.clauses == ((Literal(1), Literal(2, False)), (Literal(2), Literal(3)))

    def test_export_is_bit_exact(self):
        assert dimacs_export(dimacs_import(DIMACS_SAT)) == "p cnf 3 2\n1 -2 0\n2 3 0\n"

    def test_clausule_over_regels(self):
        c = dimacs_import("p cnf 2 1\n1\n-2 0\n")
        assert c.clauses == ((Literal(1), Literal(2, False)),)

    def test_procent_terminator(self):
        c = dimacs_import("p cnf 1 1\n1 0\n%\n0\n")
        assert len(c.clauses) == 1

    def test_onvervulbaar(self):
        assert not classical_sat_cv(cf_to_term(dimacs_import(DIMACS_UNSAT))).holds

    @pytest.mark.parametrize("text,message", [
        ("1 0\n", "kopregel"),
        ("p cnf x 1\n1 0\n", "kopregel"),
        ("p cnf 1 1\n2 0\n", "variabele 2"),
        ("p cnf 1 1\n0\n", "lege clausule"),
        ("p cnf 1 1\n1\n", "niet afgesloten"),
        ("p cnf 1 2\n1 0\n", "2 clausules"),
        ("p cnf 1 1\n1 a 0\n", "ongeldig literaal"),
    ])
    def test_fouten(self, text, message):
        with pytest.raises(DimacsError, match=message):
            dimacs_import(text)


# === Hoekpuntmaximum ===

class TestVertexMax:
    def test_bereikt_een(self):
        best, vertex = vertex_max(parse_term("(x1 \\/ x2) * ~x1"))
        assert best == 1
        assert vertex == {1: 0, 2: 1}

    def test_nul_bij_onvervulbaar(self):
        best, _ = vertex_max(parse_term("x1 * ~x1"))
        assert best == 0

    def test_binnenpunten_niet_hoger(self):
        t = parse_term("x1 * ~x1")
        best, _ = vertex_max(t)
        assert standard_mv_eval(t, {1: Fraction(1, 2)}) <= best

    def test_buiten_fragment(self):
        with pytest.raises(FlewsatError):
            vertex_max(parse_term("x1 <-> ~x1"))


# === DP-reductie ===

class TestDpReductie:
    def test_hernoemen(self):
        t, renaming = dp_reduce(parse_term("x1 /\\ ~x1"), parse_term("x1"), parse_term("x1 * ~x1"))
        assert renaming == [("alpha", 1, 1), ("phi1", 1, 2), ("phi2", 1, 3)]
        assert print_term(t) == "(((x1 /\\ (x1 -> 0)) /\\ x2) \\/ (x3 * (x3 -> 0)))"

    def test_verschil_in_l3(self):
        L3 = lukasiewicz_chain(3)
        t, _ = dp_reduce(parse_term("x1 /\\ ~x1"), parse_term("x1"), parse_term("x1 * ~x1"))
        assert satpos(L3, t).holds and not sat(L3, t).holds

    def test_vervulbare_alpha_geeft_sat(self):
        L3 = lukasiewicz_chain(3)
        t, _ = dp_reduce(parse_term("x1 <-> ~x1"), parse_term("x1"), parse_term("x1 * ~x1"))
        assert sat(L3, t).holds

    def test_vervulbare_phi2_geeft_sat(self):
        L3 = lukasiewicz_chain(3)
        t, _ = dp_reduce(parse_term("x1 /\\ ~x1"), parse_term("x1 * ~x1"), parse_term("x1 \\/ x2"))
        assert sat(L3, t).holds

    def test_cf_vorm_als_invoer(self):
        phi = CFForm(((Literal(1),),))
        t, renaming = dp_reduce(parse_term("x1 /\\ ~x1"), phi, phi)
        assert renaming[-1] == ("phi2", 1, 3)
