"""
Tests voor de termgeneratoren.
"""

import numpy as np
import pytest

from flewsat.algebra.core import evaluate_all, product
from flewsat.algebra.zoo import bool2, godel_chain, lukasiewicz_chain
from flewsat.logic.forms import recognize_cv
from flewsat.logic.generate import (
    FIXED_TERMS, classical_tautology_sample, enumerate_bounded_terms, random_cv_terms, random_terms,
)
from flewsat.logic.term import parse_term, size, variables


class TestBegrensdeTermen:
    def test_bool2_heeft_zestien_klassen(self):
        pool = enumerate_bounded_terms([bool2()])
        # alle Booleaanse functies van twee variabelen
        assert len(pool) == 16
        assert not pool.truncated

    def test_representanten_zijn_uniek(self):
        pool = enumerate_bounded_terms([lukasiewicz_chain(3)], pool_limit=500)
        rows = {row.tobytes() for row in pool.signatures}
        assert len(rows) == len(pool)

    def test_signatuur_klopt_met_evaluatie(self):
        L3 = lukasiewicz_chain(3)
        pool = enumerate_bounded_terms([L3], pool_limit=200)
        for t, row in zip(pool.terms, pool.signatures):
            assert np.array_equal(evaluate_all(t, L3, pool.variables), row)

    def test_afkappen(self):
        pool = enumerate_bounded_terms([lukasiewicz_chain(4)], pool_limit=50)
        assert len(pool) == 50
        assert pool.truncated

    def test_peiltermen_altijd_aanwezig(self):
        L3 = lukasiewicz_chain(3)
        pool = enumerate_bounded_terms([L3], pool_limit=20)
        rows = {row.tobytes() for row in pool.signatures}
        for text, _ in FIXED_TERMS:
            row = evaluate_all(parse_term(text), L3, pool.variables).astype(pool.signatures.dtype)
            assert row.tobytes() in rows, text

    def test_niveaus_begrensd(self):
        pool = enumerate_bounded_terms([godel_chain(3)], max_connectives=3)
        assert max(pool.levels) <= 3
        assert all(variables(t) <= {1, 2} for t in pool.terms)

    def test_signaturen_per_algebra(self):
        L3, G3 = lukasiewicz_chain(3), godel_chain(3)
        pool = enumerate_bounded_terms([L3, G3], pool_limit=100)
        assert pool.values(L3).shape == (len(pool), 9)
        assert pool.values(G3).shape == (len(pool), 9)

    def test_volledig_tot_zeven_connectieven(self):
        pool = enumerate_bounded_terms([lukasiewicz_chain(3)])
        assert not pool.truncated
        assert max(pool.levels) <= 7
        assert 6 in pool.levels

    def test_product_via_factoren(self):
        L3, G3 = lukasiewicz_chain(3), godel_chain(3)
        AB = product(L3, G3)
        pool = enumerate_bounded_terms([AB], max_connectives=3)
        assert pool.algebras[0] is L3 and pool.algebras[1] is G3
        assert pool.covers(AB)
        values = pool.values(AB)
        assert values.shape == (len(pool), 81)
        for t, row in zip(pool.terms, values):
            assert np.array_equal(evaluate_all(t, AB, pool.variables), row), str(t)

    def test_product_niet_gedekt_door_andere_pool(self):
        pool = enumerate_bounded_terms([lukasiewicz_chain(3)], max_connectives=1)
        assert not pool.covers(product(lukasiewicz_chain(3), godel_chain(3)))

    @pytest.mark.slow
    def test_product_volledig_met_eigen_tabellen(self):
        L3, G3 = lukasiewicz_chain(3), godel_chain(3)
        pool = enumerate_bounded_terms([L3, G3, product(L3, G3)], expand_products=False)
        assert not pool.truncated
        assert max(pool.levels) <= 7
        assert 6 in pool.levels


class TestWillekeurig:
    def test_reproduceerbaar(self):
        a = random_terms(np.random.default_rng(3), 20)
        b = random_terms(np.random.default_rng(3), 20)
        assert a == b

    def test_cv_termen_in_fragment(self):
        terms = random_cv_terms(np.random.default_rng(5), 50, max_vars=4, max_literals=10)
        for t in terms:
            assert recognize_cv(t) is not None
            assert variables(t) <= {1, 2, 3, 4}

    def test_cv_grootte(self):
        for t in random_cv_terms(np.random.default_rng(6), 50, max_literals=10):
            # hoogstens 10 literalen: 9 binaire knopen plus één per negatie
            assert size(t) <= 19


class TestTautologieen:
    def test_twintig_klassieke_tautologieen(self):
        sample = classical_tautology_sample()
        assert len(sample) == 20
        B = bool2()
        for t in sample:
            assert (evaluate_all(t, B) == B.one).all(), str(t)
