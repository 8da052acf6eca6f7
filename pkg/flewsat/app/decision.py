"""
Beslisprocedures: TAUT / SAT / SATPOS over eindige algebra's, classificatie,
homomorfisme naar 𝟚, het ketencriterium, Glivenko-vertaling en begrensde
vervulbaarheid in de standaard MV-algebra.

Alle scans lopen lexicografisch over de toekenningen (eerste variabele
het meest significant); de eerste treffer is de getuige.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

import numpy as np
from dotenv import load_dotenv

from flewsat.algebra.core import (
    FiniteAlgebra, assignment_at, assignment_count, evaluate, identity_holds,
    is_chain, is_homomorphism, is_nontrivial, iter_blocks, product, require_valid,
)
from flewsat.algebra.exact import KomoriChain, standard_mv_eval
from flewsat.algebra.zoo import bool2, lukasiewicz_chain
from flewsat.errors import AlgebraError, BudgetExceeded, FlewsatError
from flewsat.logic.generate import TermPool
from flewsat.logic.term import (
    ONE, Impl, Meet, Mult, Term, Var, equiv, mult_all, neg, parse_term, power, variables,
)

# Laad .env uit de root van de repository
load_dotenv(Path(__file__).parent.parent.parent / ".env")

DEFAULT_BUDGET = 10_000_000
DEFAULT_SEED = 2016


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise FlewsatError(f"{name} moet een geheel getal zijn, kreeg {raw!r}") from None
    if value < 1:
        raise FlewsatError(f"{name} moet positief zijn, kreeg {value}")
    return value


def configured_budget() -> int:
    """Budget uit FLEWSAT_BUDGET (ook via .env), anders DEFAULT_BUDGET."""
    return _env_int("FLEWSAT_BUDGET", DEFAULT_BUDGET)


def configured_seed() -> int:
    """Seed uit FLEWSAT_SEED (ook via .env), anders DEFAULT_SEED."""
    return _env_int("FLEWSAT_SEED", DEFAULT_SEED)


# === Verdict ===

@dataclass(frozen=True)
class Verdict:
    """
    Uitkomst van een scan. `witness` is de vervullende toekenning (sat,
    satpos) of het tegenvoorbeeld (taut, postaut); `value` is de waarde van
    de term onder die toekenning.
    """
    holds: bool
    witness: Optional[dict] = None
    value: Optional[int] = None

    def witness_text(self, A: FiniteAlgebra) -> str:
        if self.witness is None:
            return ""
        return " ".join(f"x{i}={A.names[v]}" for i, v in sorted(self.witness.items()))


def _scan(A: FiniteAlgebra, t: Term, predicate, budget: Optional[int]):
    """Eerste toekenning (lexicografisch) waarvoor predicate(waarden) waar is."""
    require_valid(A)
    budget = configured_budget() if budget is None else budget
    vars_ = tuple(sorted(variables(t)))
    total = assignment_count(A, vars_)
    if total > budget:
        raise BudgetExceeded(total, budget)
    for start, values in iter_blocks(t, A, vars_):
        hits = np.flatnonzero(predicate(values))
        if len(hits):
            first = int(hits[0])
            return assignment_at(A, vars_, start + first), int(values[first])
    return None


def sat(A: FiniteAlgebra, t: Term, budget: Optional[int] = None) -> Verdict:
    """Volledig vervulbaar: een toekenning geeft 1."""
    hit = _scan(A, t, lambda v: v == A.one, budget)
    if hit is None:
        return Verdict(False)
    return Verdict(True, *hit)


def satpos(A: FiniteAlgebra, t: Term, budget: Optional[int] = None) -> Verdict:
    """Positief vervulbaar: een toekenning geeft een waarde > 0."""
    hit = _scan(A, t, lambda v: v != A.zero, budget)
    if hit is None:
        return Verdict(False)
    return Verdict(True, *hit)


def taut(A: FiniteAlgebra, t: Term, budget: Optional[int] = None) -> Verdict:
    """Tautologie; bij falen is de getuige het eerste tegenvoorbeeld (waarde < 1)."""
    hit = _scan(A, t, lambda v: v != A.one, budget)
    if hit is None:
        return Verdict(True)
    return Verdict(False, *hit)


def postaut(A: FiniteAlgebra, t: Term, budget: Optional[int] = None) -> Verdict:
    """Positieve tautologie: geen toekenning stuurt t naar 0."""
    hit = _scan(A, t, lambda v: v == A.zero, budget)
    if hit is None:
        return Verdict(True)
    return Verdict(False, *hit)


def solvable(A: FiniteAlgebra, left: Term, right: Term, budget: Optional[int] = None) -> Verdict:
    """Is de vergelijking left ≈ right oplosbaar in A? Beslist als sat(A, left ≡ right)."""
    return sat(A, equiv(left, right), budget)


def sat_all(A: FiniteAlgebra, terms: list, budget: Optional[int] = None) -> Verdict:
    """Gelijktijdige vervulbaarheid van een eindige verzameling termen (via hun product)."""
    return sat(A, mult_all(list(terms)) if terms else ONE, budget)


# === Classificatie ===

IDENTITIES = {
    "wcon": ("x1 /\\ ~x1", "0"),
    "wcon-square": ("~(x1^2)", "~x1"),
    "wcon-impl": ("x1 -> ~x1", "~x1"),
    "involutive": ("~~x1", "x1"),
    "semilinear": ("(x1 -> x2) \\/ (x2 -> x1)", "1"),
    "heyting": ("x1 * x1", "x1"),
    "boolean": ("x1 \\/ ~x1", "1"),
    "divisible": ("x1 /\\ x2", "x1 * (x1 -> x2)"),
    "product-law": ("~~x3 -> ((x1 * x3 -> x2 * x3) -> (x1 -> x2))", "1"),
}


def classify(A: FiniteAlgebra) -> dict:
    """
    Exhaustieve identiteitscontrole.

    Returns:
        dict met vlaggen; `hom-onto-2` is "degenerate" voor de triviale algebra.
    """
    require_valid(A)
    holds = {name: identity_holds(A, parse_term(l), parse_term(r)) for name, (l, r) in IDENTITIES.items()}
    bl = holds["semilinear"] and holds["divisible"]
    nontrivial = is_nontrivial(A)
    return {
        "nontrivial": nontrivial,
        "chain": is_chain(A),
        "wcon": holds["wcon"],
        "wcon-square": holds["wcon-square"],
        "wcon-impl": holds["wcon-impl"],
        "involutive": holds["involutive"],
        "semilinear": holds["semilinear"],
        "heyting": holds["heyting"],
        "boolean": holds["boolean"],
        "bl": bl,
        "mv": bl and holds["involutive"],
        "sbl": bl and holds["wcon"],
        "product": bl and holds["wcon"] and holds["product-law"],
        "hom-onto-2": (hom_onto_bool(A) is not None) if nontrivial else "degenerate",
    }


# === Homomorfisme naar 𝟚 ===

@dataclass(frozen=True)
class HomPartition:
    """Blokken (A₀, A₁); A₁ gaat naar 1, A₀ naar 0."""
    zero_block: tuple
    one_block: tuple

    def mapping(self, size: int) -> np.ndarray:
        h = np.zeros(size, dtype=np.int64)
        h[list(self.one_block)] = 1
        return h

    def text(self, A: FiniteAlgebra) -> str:
        zero = ",".join(A.names[i] for i in self.zero_block)
        one = ",".join(A.names[i] for i in self.one_block)
        return f"{{{zero}}}/{{{one}}}"


def filter_candidates(A: FiniteAlgebra) -> list[tuple]:
    """
    Alle echte filters (bevat 1, niet 0, naar boven gesloten, ·-gesloten).
    In een eindige algebra is elk filter ↑m met m = het product van al zijn
    elementen, en dan is m idempotent; we lopen dus de idempotenten af.
    """
    candidates = []
    for m in range(A.size):
        if m == A.zero or A.mult[m, m] != m:
            continue
        members = np.flatnonzero(A.order[m, :])
        if A.zero in members:
            continue
        products = A.mult[np.ix_(members, members)]
        if np.isin(products, members).all():
            candidates.append(tuple(int(i) for i in members))
    return candidates


def hom_onto_bool(A: FiniteAlgebra) -> Optional[HomPartition]:
    """Zoek een homomorfisme A → 𝟚; None als er geen is (of A triviaal is)."""
    require_valid(A)
    if not is_nontrivial(A):
        return None
    target = bool2()
    for one_block in filter_candidates(A):
        zero_block = tuple(i for i in range(A.size) if i not in one_block)
        partition = HomPartition(zero_block, one_block)
        if is_homomorphism(A, target, partition.mapping(A.size)):
            return partition
    return None


# === Ketencriterium ===

CHAIN_TERM = "(~x1 -> x1) /\\ ~(x1^3)"


@dataclass(frozen=True)
class ChainReport:
    """
    De drie equivalente voorwaarden voor klassieke SAT van een keten:
    unsat_term: (¬x→x)∧¬(x³) is onvervulbaar;
    no_fixed_point en square_closed samen: geen ¬-dekpunt en {x : x² > 0} ·-gesloten;
    hom: er is een homomorfisme naar 𝟚.
    """
    unsat_term: bool
    term_witness: Optional[int]
    fixed_point: Optional[int]
    closure_witness: Optional[tuple]
    partition: Optional[HomPartition]

    @property
    def condition2(self) -> bool:
        return self.unsat_term

    @property
    def condition3(self) -> bool:
        return self.fixed_point is None and self.closure_witness is None

    @property
    def condition4(self) -> bool:
        return self.partition is not None

    @property
    def agree(self) -> bool:
        return self.condition2 == self.condition3 == self.condition4


def chain_criterion(A: FiniteAlgebra, budget: Optional[int] = None) -> ChainReport:
    """
    Bereken de voorwaarden (2), (3) en (4) onafhankelijk van elkaar.

    Raises:
        AlgebraError: als A geen niet-triviale keten is.
    """
    require_valid(A)
    if not is_chain(A):
        raise AlgebraError(f"{A.label or 'algebra'} is geen keten")
    if not is_nontrivial(A):
        raise AlgebraError("het ketencriterium vraagt een niet-triviale algebra")

    verdict = sat(A, parse_term(CHAIN_TERM), budget)
    fixed = np.flatnonzero(A.neg == np.arange(A.size))

    upper = np.flatnonzero(A.mult[np.arange(A.size), np.arange(A.size)] != A.zero)
    closure = None
    for a in upper:
        for b in upper:
            if A.mult[A.mult[a, b], A.mult[a, b]] == A.zero:
                closure = (int(a), int(b))
                break
        if closure:
            break

    return ChainReport(
        unsat_term=not verdict.holds,
        term_witness=verdict.witness.get(1) if verdict.holds else None,
        fixed_point=int(fixed[0]) if len(fixed) else None,
        closure_witness=closure,
        partition=hom_onto_bool(A),
    )


def komori_chain_criterion(n: int) -> bool:
    """Klassieke SAT van K_{n+1}: geen ¬-dekpunt en {x : x² > 0} ·-gesloten."""
    chain = KomoriChain(n)
    return chain.fixed_point() is None and chain.closure_witness() is None


def komori_classify(n: int) -> dict:
    """Classificatievlaggen voor K_{n+1}, exact nagerekend op de randrepresentanten."""
    chain = KomoriChain(n)
    points = chain.sample()
    pairs = [(x, y) for x in points for y in points]
    involutive = all(chain.neg(chain.neg(x)) == x for x in points)
    wcon = all(chain.meet(x, chain.neg(x)) == chain.zero for x in points)
    semilinear = all(chain.join(chain.impl(x, y), chain.impl(y, x)) == chain.unit for x, y in pairs)
    divisible = all(chain.meet(x, y) == chain.mult(x, chain.impl(x, y)) for x, y in pairs)
    bl = semilinear and divisible
    return {
        "nontrivial": True,
        "chain": True,
        "wcon": wcon,
        "involutive": involutive,
        "semilinear": semilinear,
        "heyting": all(chain.mult(x, x) == x for x in points),
        "boolean": all(chain.join(x, chain.neg(x)) == chain.unit for x in points),
        "bl": bl,
        "mv": bl and involutive,
        "sbl": bl and wcon,
        "hom-onto-2": komori_chain_criterion(n),
    }


# === Vertalingen en standaard MV ===

def glivenko(t: Term) -> Term:
    """¬¬t."""
    return neg(neg(t))


def half_term(t: Term) -> Term:
    """(y ≡ ¬y)·(y → t) met y vers; in standaard MV vervulbaar ⇔ t ≥ 1/2 haalbaar."""
    y = Var(max(variables(t), default=0) + 1)
    return Mult(equiv(y, neg(y)), Impl(y, t))


def bounded_mv_sat(t: Term, max_den: int, budget: Optional[int] = None) -> Optional[dict]:
    """
    Zoek een volledig vervullende rationale toekenning met noemers ≤ max_den
    door Ł_k af te lopen voor k-1 = 1..max_den.

    Returns:
        {index: Fraction}, of None. None betekent alleen: geen getuige met
        noemer ≤ max_den, niet dat t onvervulbaar is in de standaard MV-algebra.
    """
    if max_den < 1:
        raise AlgebraError(f"max_den moet >= 1 zijn, kreeg {max_den}")
    for den in range(1, max_den + 1):
        A = lukasiewicz_chain(den + 1)
        verdict = sat(A, t, budget)
        if verdict.holds:
            witness = {i: Fraction(v, den) for i, v in verdict.witness.items()}
            if standard_mv_eval(t, witness) != 1:
                raise FlewsatError(f"getuige {witness} van {A.label} geeft geen 1 in standaard MV")
            return witness
    return None


def finite_chain_containment(n: int, m: int, budget: Optional[int] = None) -> bool:
    """Vervult Ł_{m+1} de term x ≡ (¬x)^{n-1}? (Gelijk aan n | m.)"""
    if n < 2 or m < 2:
        raise AlgebraError(f"n en m moeten >= 2 zijn, kreeg n={n}, m={m}")
    return sat(lukasiewicz_chain(m + 1), containment_term(n), budget).holds


def containment_term(n: int) -> Term:
    x1 = Var(1)
    return equiv(x1, power(neg(x1), n - 1))


# === Karakteriseringen over termverzamelingen ===

def _classical_columns(A: FiniteAlgebra, pool: TermPool) -> np.ndarray:
    """Kolommen van toekenningen die alleen 0 en 1 gebruiken."""
    total = assignment_count(A, pool.variables)
    n = A.size
    k = len(pool.variables)
    positions = np.arange(total)
    mask = np.ones(total, dtype=bool)
    for i in range(k):
        digit = (positions // n ** (k - 1 - i)) % n
        mask &= (digit == A.zero) | (digit == A.one)
    return mask


def truth_masks(A: FiniteAlgebra, terms, budget: Optional[int] = None) -> dict:
    """
    Per term: sat, satpos, taut en klassieke vervulbaarheid, als bool-arrays.
    `terms` is een TermPool (snelle route via signaturen) of een lijst termen.
    """
    require_valid(A)
    if isinstance(terms, TermPool) and terms.covers(A):
        values = terms.values(A)
        if is_nontrivial(A):
            classical = (values[:, _classical_columns(A, terms)] == A.one).any(axis=1)
        else:
            two = bool2()
            classical = np.array([sat(two, t).holds for t in terms.terms], dtype=bool)
        return {
            "sat": (values == A.one).any(axis=1),
            "satpos": (values != A.zero).any(axis=1),
            "taut": (values == A.one).all(axis=1),
            "classical": classical,
        }

    term_list = terms.terms if isinstance(terms, TermPool) else list(terms)
    two = bool2()
    rows = {"sat": [], "satpos": [], "taut": [], "classical": []}
    for t in term_list:
        rows["sat"].append(sat(A, t, budget).holds)
        rows["satpos"].append(satpos(A, t, budget).holds)
        rows["taut"].append(taut(A, t, budget).holds)
        rows["classical"].append(sat(two, t, budget).holds)
    return {key: np.array(value, dtype=bool) for key, value in rows.items()}


def wcon_characterization(A: FiniteAlgebra, terms) -> dict:
    """
    De vier voorwaarden die voor niet-triviale A samenvallen:
    identiteit x∧¬x = 0; x∧¬x niet positief vervulbaar; SATPOS = klassieke SAT;
    SAT = SATPOS (op de gegeven termen).
    """
    masks = truth_masks(A, terms)
    x1 = Var(1)
    return {
        "nontrivial": is_nontrivial(A),
        "identity": classify(A)["wcon"],
        "meet-neg-unsat": not satpos(A, Meet(x1, neg(x1))).holds,
        "satpos-is-classical": bool(np.array_equal(masks["satpos"], masks["classical"])),
        "sat-is-satpos": bool(np.array_equal(masks["sat"], masks["satpos"])),
    }


def hom_characterization(A: FiniteAlgebra, terms) -> dict:
    """Bestaat A → 𝟚, en is SAT(A) ⊆ SAT(𝟚) op de gegeven termen?"""
    masks = truth_masks(A, terms)
    return {
        "hom": hom_onto_bool(A) is not None,
        "classical-sat": bool(np.all(masks["classical"] | ~masks["sat"])),
    }


def product_laws(A: FiniteAlgebra, B: FiniteAlgebra, terms, AB: Optional[FiniteAlgebra] = None) -> dict:
    """SAT(A×B) = SAT(A) ∩ SAT(B) en SATPOS(A×B) = SATPOS(A) ∪ SATPOS(B)."""
    AB = AB if AB is not None else product(A, B)
    ma, mb, mab = truth_masks(A, terms), truth_masks(B, terms), truth_masks(AB, terms)
    return {
        "sat-intersection": bool(np.array_equal(mab["sat"], ma["sat"] & mb["sat"])),
        "satpos-union": bool(np.array_equal(mab["satpos"], ma["satpos"] | mb["satpos"])),
    }


def verify_witness(A: FiniteAlgebra, t: Term, verdict: Verdict) -> bool:
    """Herevalueer de getuige: hij moet de geclaimde waarde geven."""
    if verdict.witness is None:
        return True
    return evaluate(t, A, verdict.witness) == verdict.value
