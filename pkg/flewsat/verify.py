"""
Eigenschapssuites over de eindige catalogus, stap voor stap.

Bouwt de catalogus, controleert de validator en doorloopt daarna de
karakteriseringen over de begrensde termverzameling (WCon, homomorfisme
naar 𝟚, ¬-brug, inclusies), ketencriterium, BL-inbedding, inbedding van eindige ketens,
fragment-collaps, convexiteit, DP-reductie, Glivenko en productwetten.

Gebruik:
    python -m flewsat.verify
    python -m flewsat.verify --quick
"""

import argparse
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from flewsat.algebra.core import (
    TABLES, FiniteAlgebra, evaluate_all, is_chain, is_nontrivial, product, validate,
)
from flewsat.algebra.exact import standard_mv_eval
from flewsat.algebra.zoo import build_catalog, godel_chain, lukasiewicz_chain, small_catalog
from flewsat.app.decision import (
    chain_criterion, classify, configured_seed, finite_chain_containment, glivenko,
    hom_characterization, hom_onto_bool, komori_chain_criterion, product_laws, sat, satpos, taut,
    truth_masks, wcon_characterization,
)
from flewsat.logic.forms import (
    CFForm, Literal, cf_to_term, classical_sat_cv, cv_to_df, df_to_term, dp_reduce, recognize_cv, vertex_max,
)
from flewsat.logic.generate import (
    BOUNDED_MAX_CONNECTIVES, BOUNDED_MAX_VARS, POOL_LIMIT, classical_tautology_sample,
    enumerate_bounded_terms, random_cv_terms, random_terms,
)
from flewsat.logic.term import Meet, Var, equiv, neg, parse_term, variables

MUTATIONS = 50
CV_TERMS = 200
BL_TERMS = 100
CV_MAX_VARS = 4
CV_MAX_LITERALS = 10
CV_MAX_SIZE = 6
CONVEXITY_SAMPLES = 1000
CONVEXITY_MAX_DEN = 12
CONTAIN_N = range(2, 7)
CONTAIN_M = range(2, 13)

# Kleinere grenzen voor --quick
QUICK = {
    "max_chain": 5,
    "max_lattice": 4,
    "max_product": 12,
    "max_connectives": 4,
    "cv_terms": 40,
    "bl_terms": 20,
    "samples": 100,
}


@dataclass
class SuiteResult:
    """Aantal gecontroleerde gevallen plus de gevonden afwijkingen."""
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)


# === Stap 1: validator ===

def mutate(A: FiniteAlgebra, rng: np.random.Generator) -> FiniteAlgebra:
    """Kopie van A met precies één gewijzigde tabelentry."""
    tables = {name: A.table(name).copy() for name in TABLES}
    name = TABLES[int(rng.integers(len(TABLES)))]
    i, j = (int(v) for v in rng.integers(A.size, size=2))
    old = tables[name][i, j]
    tables[name][i, j] = (old + int(rng.integers(1, A.size))) % A.size
    return FiniteAlgebra.from_tables(A.names, tables["mult"], tables["impl"], tables["meet"],
                                     tables["join"], A.zero, A.one, label=f"{A.label}*")


def check_validator(catalog: dict, rng: np.random.Generator, mutations: int = MUTATIONS) -> SuiteResult:
    result = SuiteResult("validator")
    for name, A in tqdm(catalog.items(), desc="Valideren"):
        result.checked += 1
        report = validate(A)
        if not report.ok:
            result.fail(f"{name}: {report.failures[0].line()}")

    base = lukasiewicz_chain(5)
    for _ in range(mutations):
        result.checked += 1
        broken = mutate(base, rng)
        if validate(broken).ok:
            result.fail("mutatie van L5 niet gedetecteerd")
    return result


# === Stap 2: getuigen ===

def check_witnesses() -> SuiteResult:
    result = SuiteResult("getuigen")
    L3 = lukasiewicz_chain(3)
    x1 = Var(1)

    verdict = sat(L3, equiv(x1, neg(x1)))
    result.checked += 1
    if not verdict.holds or verdict.witness_text(L3) != "x1=1/2":
        result.fail(f"sat(L3, x1 <-> ~x1): {verdict}")

    t = Meet(x1, neg(x1))
    result.checked += 1
    if sat(L3, t).holds or not satpos(L3, t).holds:
        result.fail("x1 /\\ ~x1 hoort in SATPOS∖SAT(L3)")
    return result


# === Stap 3: begrensde termverzameling ===

def bounded_pool(algebras, max_connectives: int = BOUNDED_MAX_CONNECTIVES, pool_limit: int = POOL_LIMIT,
                 expand_products: bool = True):
    return enumerate_bounded_terms(algebras, BOUNDED_MAX_VARS, max_connectives, pool_limit,
                                   expand_products=expand_products)


def check_bounded_sets(catalog: dict, max_connectives: int = BOUNDED_MAX_CONNECTIVES,
                       pool_limit: int = POOL_LIMIT) -> list:
    """
    Eén opsomming per algebra, vier suites:
    wcon (vier voorwaarden vallen samen), hom (A → 𝟚 ⇔ klassieke SAT),
    negatie (satpos faalt ⇔ ¬t is tautologie) en inclusies
    (SAT(𝟚) ⊆ SAT(A) ⊆ SATPOS(A)).
    """
    wcon = SuiteResult("wcon")
    hom = SuiteResult("hom")
    bridge = SuiteResult("negatie")
    inclusions = SuiteResult("inclusies")
    for name, A in tqdm(catalog.items(), desc="Begrensde termen"):
        if not is_nontrivial(A):
            continue
        pool = bounded_pool([A], max_connectives, pool_limit)
        if pool.truncated:
            wcon.fail(f"{name}: pool afgekapt bij {len(pool)} termen")
            continue

        wcon.checked += 1
        conditions = wcon_characterization(A, pool)
        values = [conditions[key] for key in ("identity", "meet-neg-unsat", "satpos-is-classical", "sat-is-satpos")]
        if len(set(values)) != 1:
            wcon.fail(f"{name}: {conditions}")
        flags = classify(A)
        if not flags["wcon"] == flags["wcon-square"] == flags["wcon-impl"]:
            wcon.fail(f"{name}: WCon-identiteiten verschillen")
        if (flags["involutive"] and flags["wcon"]) != flags["boolean"]:
            wcon.fail(f"{name}: involutief ∧ wcon ≠ boolean")

        hom.checked += 1
        characterization = hom_characterization(A, pool)
        if characterization["hom"] != characterization["classical-sat"]:
            hom.fail(f"{name}: {characterization}")

        masks = truth_masks(A, pool)
        table = pool.values(A)
        negated_taut = (A.neg[table] == A.one).all(axis=1)
        bridge.checked += len(pool)
        mismatch = np.flatnonzero(negated_taut == masks["satpos"])
        if len(mismatch):
            bridge.fail(f"{name}: {pool.terms[mismatch[0]]}")

        inclusions.checked += len(pool)
        bad = np.flatnonzero((masks["classical"] & ~masks["sat"]) | (masks["sat"] & ~masks["satpos"]))
        if len(bad):
            inclusions.fail(f"{name}: {pool.terms[bad[0]]}")
    return [wcon, hom, bridge, inclusions]


# === Stap 4: ketencriterium ===

def check_chains(catalog: dict) -> SuiteResult:
    result = SuiteResult("ketens")
    for name, A in catalog.items():
        if not (is_chain(A) and is_nontrivial(A)):
            continue
        result.checked += 1
        report = chain_criterion(A)
        if not report.agree:
            result.fail(f"{name}: (2)={report.condition2} (3)={report.condition3} (4)={report.condition4}")

    result.checked += 3
    if not komori_chain_criterion(1):
        result.fail("Chang-algebra hoort klassiek vervulbaar te zijn")
    if komori_chain_criterion(2) or komori_chain_criterion(3):
        result.fail("K3 en K4 horen niet klassiek vervulbaar te zijn")
    if hom_onto_bool(lukasiewicz_chain(3)) is not None:
        result.fail("L3 heeft geen homomorfisme naar 2")
    return result


def check_bl_containment(catalog: dict, terms: list) -> SuiteResult:
    """Elke term die vervulbaar is in een BL-keten van de catalogus, is dat ook in een Ł_k uit de catalogus."""
    result = SuiteResult("bl-inbedding")
    lukasiewicz = [A for name, A in catalog.items() if name.startswith("L") and "x" not in name]
    chains = {name: A for name, A in catalog.items() if is_chain(A) and is_nontrivial(A) and classify(A)["bl"]}
    for t in tqdm(terms, desc="BL-ketens"):
        in_lukasiewicz = any(sat(L, t).holds for L in lukasiewicz)
        for name, A in chains.items():
            result.checked += 1
            if sat(A, t).holds and not in_lukasiewicz:
                result.fail(f"{name}: {t}")
    return result


# === Stap 5: inbedding van eindige ketens ===

def check_containment() -> SuiteResult:
    result = SuiteResult("inbedding")
    for n, m in itertools.product(CONTAIN_N, CONTAIN_M):
        result.checked += 1
        if finite_chain_containment(n, m) != (m % n == 0):
            result.fail(f"n={n}, m={m}")
    return result


# === Stap 6: fragment-collaps ===

def check_fragment(terms: list, catalog: dict) -> SuiteResult:
    result = SuiteResult("fragment")
    algebras = {name: A for name, A in small_catalog(CV_MAX_SIZE, catalog).items() if is_nontrivial(A)}
    for t in tqdm(terms, desc="(·,∨)-termen"):
        classical = classical_sat_cv(t).holds
        df_term = df_to_term(cv_to_df(recognize_cv(t)))
        vars_ = tuple(sorted(variables(t)))
        for name, A in algebras.items():
            result.checked += 1
            if not sat(A, t).holds == satpos(A, t).holds == classical:
                result.fail(f"{name}: {t}")
            if not np.array_equal(evaluate_all(t, A, vars_), evaluate_all(df_term, A, vars_)):
                result.fail(f"{name}: DF-expansie van {t} wijkt af")
    return result


# === Stap 7: convexiteit ===

def check_convexity(terms: list, rng: np.random.Generator, samples: int = CONVEXITY_SAMPLES) -> SuiteResult:
    result = SuiteResult("convexiteit")
    for t in tqdm(terms, desc="Hoekpunten"):
        best, _ = vertex_max(t)
        result.checked += 1
        if best not in (0, 1):
            result.fail(f"{t}: maximum {best} niet in {{0,1}}")
        vars_ = sorted(variables(t))
        for _ in range(samples):
            den = int(rng.integers(1, CONVEXITY_MAX_DEN + 1))
            e = {i: Fraction(int(rng.integers(0, den + 1)), den) for i in vars_}
            if standard_mv_eval(t, e) > best:
                result.fail(f"{t}: {e} overschrijdt {best}")
                break
    return result


# === Stap 8: DP-reductie ===

DP_ALPHA = "x1 /\\ ~x1"


def small_cf_forms(max_vars: int = 2, max_clauses: int = 2) -> list:
    """Alle CF-vormen met ≤ max_clauses clausules van 1-2 verschillende literalen."""
    literals = [Literal(i, positive) for i in range(1, max_vars + 1) for positive in (True, False)]
    clauses = [(lit,) for lit in literals] + list(itertools.combinations(literals, 2))
    forms = []
    for k in range(1, max_clauses + 1):
        for chosen in itertools.combinations_with_replacement(clauses, k):
            forms.append(CFForm(tuple(chosen)))
    return forms


def check_dp(forms: list = None) -> SuiteResult:
    result = SuiteResult("dp")
    L3 = lukasiewicz_chain(3)
    alpha = parse_term(DP_ALPHA)
    forms = forms if forms is not None else small_cf_forms()
    classical = {c: classical_sat_cv(cf_to_term(c)).holds for c in forms}
    for phi1, phi2 in tqdm(list(itertools.product(forms, forms)), desc="CF-paren"):
        result.checked += 1
        t, _ = dp_reduce(alpha, phi1, phi2)
        in_difference = satpos(L3, t).holds and not sat(L3, t).holds
        if in_difference != (classical[phi1] and not classical[phi2]):
            result.fail(f"{phi1} / {phi2}")
    return result


# === Stap 9: Glivenko ===

def check_glivenko(catalog: dict) -> SuiteResult:
    result = SuiteResult("glivenko")
    sample = classical_tautology_sample()
    wcon_algebras = {name: A for name, A in catalog.items() if is_nontrivial(A) and classify(A)["wcon"]}
    for name, A in tqdm(wcon_algebras.items(), desc="Glivenko"):
        for t in sample:
            result.checked += 1
            if not taut(A, glivenko(t)).holds:
                result.fail(f"{name}: ¬¬({t})")
    G3 = godel_chain(3)
    result.checked += 1
    if all(taut(G3, t).holds for t in sample):
        result.fail("elke voorbeeldterm is een G3-tautologie")
    return result


# === Stap 10: productwetten ===

def check_products(max_connectives: int = BOUNDED_MAX_CONNECTIVES, pool_limit: int = POOL_LIMIT) -> SuiteResult:
    result = SuiteResult("product")
    L3, G3 = lukasiewicz_chain(3), godel_chain(3)
    AB = product(L3, G3, label="L3xG3")
    # het product als eigen component: de wetten worden op zijn tabellen gecontroleerd
    pool = bounded_pool([L3, G3, AB], max_connectives, pool_limit, expand_products=False)
    if pool.truncated:
        result.fail(f"pool afgekapt bij {len(pool)} termen")
        return result
    laws = product_laws(L3, G3, pool, AB=AB)
    result.checked += len(pool)
    for law, holds in laws.items():
        if not holds:
            result.fail(law)
    return result


# === Pipeline ===

def run(quick: bool = False, seed: int = None) -> bool:
    """Voer alle suites uit; True als alles slaagt."""
    seed = configured_seed() if seed is None else seed
    limits = QUICK if quick else {
        "max_chain": 8,
        "max_lattice": 6,
        "max_product": 36,
        "max_connectives": BOUNDED_MAX_CONNECTIVES,
        "cv_terms": CV_TERMS,
        "bl_terms": BL_TERMS,
        "samples": CONVEXITY_SAMPLES,
    }
    rng = np.random.default_rng(seed)

    print("\n" + "=" * 60)
    print(f"  EIGENSCHAPSSUITES: flewsat (seed {seed}{', quick' if quick else ''})")
    print("=" * 60 + "\n")

    print("=== Stap 1: Catalogus bouwen en valideren ===\n")
    catalog = build_catalog(limits["max_chain"], limits["max_lattice"], limits["max_product"], progress=True)
    print(f"Algebra's in catalogus: {len(catalog)}")
    results = [check_validator(catalog, rng)]

    print("\n=== Stap 2: Getuigen in L3 ===\n")
    results.append(check_witnesses())

    print("\n=== Stap 3: Begrensde termverzameling ===\n")
    results.extend(check_bounded_sets(catalog, limits["max_connectives"]))

    print("\n=== Stap 4: Ketencriterium en BL-inbedding ===\n")
    results.append(check_chains(catalog))
    bl_terms = random_terms(rng, limits["bl_terms"], max_vars=2, max_depth=3)
    results.append(check_bl_containment(catalog, bl_terms))

    print("\n=== Stap 5: Inbedding eindige ketens ===\n")
    results.append(check_containment())

    terms = random_cv_terms(rng, limits["cv_terms"], CV_MAX_VARS, CV_MAX_LITERALS)
    print("\n=== Stap 6: Fragment-collaps ===\n")
    results.append(check_fragment(terms, catalog))

    print("\n=== Stap 7: Convexiteit ===\n")
    results.append(check_convexity(terms, rng, limits["samples"]))

    print("\n=== Stap 8: DP-reductie ===\n")
    results.append(check_dp())

    print("\n=== Stap 9: Glivenko ===\n")
    results.append(check_glivenko(catalog))

    print("\n=== Stap 10: Productwetten ===\n")
    results.append(check_products(limits["max_connectives"]))

    print("\n" + "=" * 60)
    print("  SUITES VOLTOOID")
    print("=" * 60)
    for r in results:
        status = "OK" if r.ok else f"{len(r.failures)} FOUT"
        print(f"  {r.name:<14} {r.checked:>7} gevallen   {status}")
        for failure in r.failures[:5]:
            print(f"    - {failure}")
    print("=" * 60)
    return all(r.ok for r in results)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Eigenschapssuites over de catalogus")
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--seed", type=int, default=None)
    args = parser.parse_args()
    raise SystemExit(0 if run(args.quick, args.seed) else 1)
