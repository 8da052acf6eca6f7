"""
Syntactische fragmenten: literalen, CF- en DF-termen, (·,∨)-termen.

- recognize_cv: herkent termen opgebouwd uit literalen met alleen · en ∨.
- cf_to_df / cv_to_df: distributie van · over ∨ (multipliciteit blijft behouden,
  · is niet idempotent).
- classical_sat_cv: vervulbaar ⇔ een monoom zonder complementair paar.
- DIMACS in/uit, vertex_max (maximum op {0,1}ⁿ) en de DP-reductie.
"""

import itertools
import re
from dataclasses import dataclass
from math import prod
from typing import Optional, Union

from flewsat.algebra.exact import standard_mv_eval
from flewsat.algebra.zoo import bool2
from flewsat.app.decision import Verdict, sat
from flewsat.errors import BudgetExceeded, DimacsError, FlewsatError
from flewsat.logic.term import (
    Impl, Join, Meet, Mult, Term, Var, Zero, join_all, mult_all, neg, substitute, variables,
)

MAX_DF_MONOMIALS = 1_000_000
MAX_SEARCH_STEPS = 1_000_000
MAX_BRUTE_FORCE_VARS = 20
MAX_VERTEX_VARS = 20

HEADER_RE = re.compile(r"^\s*p\s+cnf\s+(\d+)\s+(\d+)\s*$")
LITERAL_RE = re.compile(r"-?\d+")


@dataclass(frozen=True)
class Literal:
    index: int
    positive: bool = True

    def term(self) -> Term:
        v = Var(self.index)
        return v if self.positive else neg(v)

    def __str__(self):
        return f"x{self.index}" if self.positive else f"~x{self.index}"


@dataclass(frozen=True)
class CVProduct:
    left: object
    right: object


@dataclass(frozen=True)
class CVJoin:
    left: object
    right: object


CVTerm = Union[Literal, CVProduct, CVJoin]


@dataclass(frozen=True)
class CFForm:
    """Product (·) van clausules; elke clausule is een join van literalen."""
    clauses: tuple

    def __post_init__(self):
        if not self.clauses or any(not clause for clause in self.clauses):
            raise FlewsatError("een CF-term heeft niet-lege clausules nodig")


@dataclass(frozen=True)
class DFForm:
    """Join (∨) van monomen; elk monoom is een product van literalen."""
    monomials: tuple

    def __post_init__(self):
        if not self.monomials or any(not m for m in self.monomials):
            raise FlewsatError("een DF-term heeft niet-lege monomen nodig")

    def text(self) -> str:
        return " \\/ ".join(" * ".join(str(lit) for lit in m) for m in self.monomials)


# === Herkenning en inbedding ===

def _literal(t: Term) -> Optional[Literal]:
    if isinstance(t, Var):
        return Literal(t.index, True)
    if isinstance(t, Impl) and isinstance(t.left, Var) and isinstance(t.right, Zero):
        return Literal(t.left.index, False)
    return None


def recognize_cv(t: Term) -> Optional[CVTerm]:
    """De (·,∨)-structuur van t, of None als t buiten het fragment valt."""
    lit = _literal(t)
    if lit is not None:
        return lit
    if isinstance(t, (Mult, Join)):
        left = recognize_cv(t.left)
        right = recognize_cv(t.right) if left is not None else None
        if right is None:
            return None
        return CVProduct(left, right) if isinstance(t, Mult) else CVJoin(left, right)
    return None


def recognize_cf(t: Term) -> Optional[CFForm]:
    """t als CF-term (product van joins van literalen), of None."""
    def clause(node):
        lit = _literal(node)
        if lit is not None:
            return [lit]
        if isinstance(node, Join):
            left, right = clause(node.left), clause(node.right)
            if left is not None and right is not None:
                return left + right
        return None

    def clauses(node):
        single = clause(node)
        if single is not None:
            return [tuple(single)]
        if isinstance(node, Mult):
            left, right = clauses(node.left), clauses(node.right)
            if left is not None and right is not None:
                return left + right
        return None

    found = clauses(t)
    return CFForm(tuple(found)) if found is not None else None


def cv_to_term(s: CVTerm) -> Term:
    if isinstance(s, Literal):
        return s.term()
    if isinstance(s, CVProduct):
        return Mult(cv_to_term(s.left), cv_to_term(s.right))
    return Join(cv_to_term(s.left), cv_to_term(s.right))


def cf_to_term(c: CFForm) -> Term:
    return mult_all([join_all([lit.term() for lit in clause]) for clause in c.clauses])


def df_to_term(d: DFForm) -> Term:
    return join_all([mult_all([lit.term() for lit in m]) for m in d.monomials])


# === Distributie ===

def cf_size(c: CFForm) -> int:
    """Aantal monomen na volledige distributie: product van de clausulebreedtes."""
    return prod(len(clause) for clause in c.clauses)


def cf_to_df(c: CFForm, budget: int = MAX_DF_MONOMIALS) -> DFForm:
    """
    Distribueer · over ∨. Monoom i kiest één literaal per clausule.

    Raises:
        BudgetExceeded: als cf_size(c) > budget (gemeld vóór expansie).
    """
    needed = cf_size(c)
    if needed > budget:
        raise BudgetExceeded(needed, budget, "monomen")
    return DFForm(tuple(itertools.product(*c.clauses)))


def _cv_monomials(s: CVTerm, budget: int) -> list:
    if isinstance(s, Literal):
        return [(s,)]
    left = _cv_monomials(s.left, budget)
    right = _cv_monomials(s.right, budget)
    if isinstance(s, CVJoin):
        needed = len(left) + len(right)
        if needed > budget:
            raise BudgetExceeded(needed, budget, "monomen")
        return left + right
    needed = len(left) * len(right)
    if needed > budget:
        raise BudgetExceeded(needed, budget, "monomen")
    return [a + b for a in left for b in right]


def cv_to_df(s: CVTerm, budget: int = MAX_DF_MONOMIALS) -> DFForm:
    """DF-expansie van een willekeurige (·,∨)-structuur."""
    return DFForm(tuple(_cv_monomials(s, budget)))


# === Klassieke vervulbaarheid ===

def consistent(monomial) -> bool:
    """Geen variabele komt in beide polariteiten voor."""
    polarity = {}
    for lit in monomial:
        if polarity.setdefault(lit.index, lit.positive) != lit.positive:
            return False
    return True


def _witness(t: Term, choice: dict) -> dict:
    """Gekozen literalen waar, overige variabelen 0 (indices in 𝟚)."""
    return {i: int(choice.get(i, False)) for i in sorted(variables(t))}


class _StepLimit(Exception):
    pass


def _search(s: CVTerm, fixed: dict, steps: list):
    """Diepte-eerst over clausulekeuzes; levert consistente literaalkeuzes op."""
    steps[0] += 1
    if steps[0] > MAX_SEARCH_STEPS:
        raise _StepLimit()
    if isinstance(s, Literal):
        current = fixed.get(s.index)
        if current is None:
            yield {**fixed, s.index: s.positive}
        elif current == s.positive:
            yield fixed
        return
    if isinstance(s, CVJoin):
        yield from _search(s.left, fixed, steps)
        yield from _search(s.right, fixed, steps)
        return
    for partial in _search(s.left, fixed, steps):
        yield from _search(s.right, partial, steps)


def classical_sat_cv(t: Term, budget: int = MAX_DF_MONOMIALS) -> Verdict:
    """
    Klassieke vervulbaarheid van een (·,∨)-term, wat gelijk is aan SAT en
    SATPOS in elke niet-triviale FL_ew-algebra.

    Eerst via DF-expansie; boven het budget een diepte-eerst zoektocht over
    clausulekeuzes, en als ook die te groot wordt brute kracht over 𝟚.
    """
    s = recognize_cv(t)
    if s is None:
        raise FlewsatError("geen (·,∨)-term over literalen")
    try:
        df = cv_to_df(s, budget)
    except BudgetExceeded:
        df = None

    if df is not None:
        for monomial in df.monomials:
            if consistent(monomial):
                return Verdict(True, _witness(t, {lit.index: lit.positive for lit in monomial}), 1)
        return Verdict(False)

    try:
        for choice in _search(s, {}, [0]):
            return Verdict(True, _witness(t, choice), 1)
        return Verdict(False)
    except _StepLimit:
        pass

    count = len(variables(t))
    if count > MAX_BRUTE_FORCE_VARS:
        raise BudgetExceeded(count, MAX_BRUTE_FORCE_VARS, "variabelen")
    return sat(bool2(), t, budget=2 ** count)


# === DIMACS ===

def dimacs_import(text: str) -> CFForm:
    """
    Lees DIMACS CNF: `p cnf V C`, clausules afgesloten met 0, commentaar `c`.

    Raises:
        DimacsError: foute kop, literaal > V, lege clausule, aantal klopt niet.
    """
    header = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise DimacsError(f"regel {lineno}: tweede kopregel")
            match = HEADER_RE.match(line)
            if not match:
                raise DimacsError(f"regel {lineno}: ongeldige kopregel {line!r}")
            header = (int(match.group(1)), int(match.group(2)))
            continue
        if header is None:
            raise DimacsError(f"regel {lineno}: clausule vóór de kopregel")
        for token in line.split():
            if not LITERAL_RE.fullmatch(token):
                raise DimacsError(f"regel {lineno}: ongeldig literaal {token!r}")
            value = int(token)
            if value == 0:
                if not current:
                    raise DimacsError(f"regel {lineno}: lege clausule")
                clauses.append(tuple(current))
                current = []
                continue
            if abs(value) > header[0]:
                raise DimacsError(f"regel {lineno}: variabele {abs(value)} > {header[0]}")
            current.append(Literal(abs(value), value > 0))

    if header is None:
        raise DimacsError("geen kopregel 'p cnf V C'")
    if current:
        raise DimacsError("laatste clausule is niet afgesloten met 0")
    if len(clauses) != header[1]:
        raise DimacsError(f"kop meldt {header[1]} clausules, gevonden {len(clauses)}")
    if not clauses:
        raise DimacsError("geen clausules")
    return CFForm(tuple(clauses))


def dimacs_export(c: CFForm) -> str:
    """CFForm terug naar DIMACS-tekst."""
    top = max(lit.index for clause in c.clauses for lit in clause)
    lines = [f"p cnf {top} {len(c.clauses)}"]
    for clause in c.clauses:
        lines.append(" ".join(str(lit.index if lit.positive else -lit.index) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


# === Convexiteit ===

def vertex_max(t: Term) -> tuple:
    """
    Maximum van t in de standaard MV-algebra over de hoekpunten {0,1}ⁿ.

    Returns:
        (maximum als Fraction, eerste hoekpunt waar het wordt bereikt)
    """
    if recognize_cv(t) is None:
        raise FlewsatError("geen (·,∨)-term over literalen")
    vars_ = sorted(variables(t))
    if len(vars_) > MAX_VERTEX_VARS:
        raise BudgetExceeded(len(vars_), MAX_VERTEX_VARS, "variabelen")
    best, best_vertex = None, None
    for bits in itertools.product((0, 1), repeat=len(vars_)):
        vertex = dict(zip(vars_, bits))
        value = standard_mv_eval(t, vertex)
        if best is None or value > best:
            best, best_vertex = value, vertex
            if best == 1:
                break
    return best, best_vertex


# === DP-reductie ===

def _rename_apart(parts: list) -> tuple:
    """Hernoem de delen naar opeenvolgende, disjuncte variabelen."""
    renamed = []
    renaming = []
    next_index = 1
    for name, t in parts:
        mapping = {}
        for old in sorted(variables(t)):
            mapping[old] = Var(next_index)
            renaming.append((name, old, next_index))
            next_index += 1
        renamed.append(substitute(t, mapping))
    return renamed, renaming


def dp_reduce(alpha: Term, phi1, phi2) -> tuple:
    """
    Bouw (α ∧ φ₁) ∨ φ₂ na variabele-disjunct hernoemen.

    Args:
        alpha: een term in SATPOS∖SAT van de doelalgebra.
        phi1, phi2: CF-termen (CFForm of Term).

    Returns:
        (term, renaming) met renaming een lijst (deel, oude index, nieuwe index).
    """
    parts = []
    for name, t in (("alpha", alpha), ("phi1", phi1), ("phi2", phi2)):
        parts.append((name, cf_to_term(t) if isinstance(t, CFForm) else t))
    (a, p1, p2), renaming = _rename_apart(parts)
    return Join(Meet(a, p1), p2), renaming
