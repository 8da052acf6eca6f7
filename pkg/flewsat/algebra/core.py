"""
Eindige FL_ew-algebra's als operatietabellen.

Een algebra is een drager {0..n-1} met tabellen voor ·, →, ∧, ∨ en
aangewezen elementen 0 en 1. De orde wordt altijd afgeleid uit ∧
(a ≤ b ⇔ a∧b = a), nooit apart opgeslagen.

Validatie controleert alle wetten exhaustief (tralie, commutatieve monoïde,
residuatie over alle n³ drietallen) en wordt per algebra gecachet.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

import numpy as np

from flewsat.errors import AlgebraError, UnassignedVariable
from flewsat.logic.term import Impl, Join, Meet, Mult, One, Term, Var, Zero
from flewsat.logic.term import variables as term_variables

TABLES = ("mult", "impl", "meet", "join")

# Aantal toekenningen per numpy-blok bij evaluate_all
CHUNK_SIZE = 1 << 18


@dataclass(frozen=True)
class LawCheck:
    """Uitkomst van één wet: ok, of de eerste schending (elementnamen)."""
    name: str
    ok: bool
    witness: Optional[tuple] = None

    def line(self) -> str:
        if self.ok:
            return f"{self.name}: ok"
        return f"{self.name}: fail at ({','.join(self.witness)})"


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    trivial: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        out.append(f"trivial: {str(self.trivial).lower()}")
        out.append(f"valid: {str(self.ok).lower()}")
        return out


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """
    Eindige FL_ew-algebra. Tabellen zijn read-only numpy int-arrays (n×n),
    rij = linkerargument.
    """
    names: tuple
    mult: np.ndarray
    impl: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    zero: int
    one: int
    label: str = field(default="", compare=False)
    # (A, B) als dit A×B is; evaluatie is dan per coördinaat
    factors: tuple = field(default=(), compare=False, repr=False)

    @classmethod
    def from_tables(cls, names: Iterable[str], mult, impl, meet, join,
                    zero: int, one: int, label: str = "", factors: tuple = ()) -> "FiniteAlgebra":
        """Bouw een algebra uit (geneste) lijsten of arrays."""
        arrays = []
        for table in (mult, impl, meet, join):
            arr = np.array(table, dtype=np.int64)
            arr.setflags(write=False)
            arrays.append(arr)
        return cls(tuple(str(n) for n in names), *arrays, int(zero), int(one), label, tuple(factors))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        """Index van een element op naam."""
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"onbekend element {name!r}") from None

    def table(self, name: str) -> np.ndarray:
        return getattr(self, name)

    @cached_property
    def order(self) -> np.ndarray:
        """order[a, b] ⇔ a ≤ b, afgeleid uit de meet-tabel."""
        return self.meet == np.arange(self.size)[:, None]

    @cached_property
    def neg(self) -> np.ndarray:
        """¬x = x → 0 als vector."""
        return self.impl[:, self.zero]

    @cached_property
    def validation(self) -> ValidationReport:
        return _validate(self)

    def __repr__(self):
        return f"FiniteAlgebra({self.label or 'naamloos'}, size={self.size})"


def _first(mask: np.ndarray) -> Optional[tuple]:
    """Eerste (lexicografisch kleinste) index waar mask waar is."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _check(name: str, mask_bad: np.ndarray, names: tuple) -> LawCheck:
    hit = _first(mask_bad)
    if hit is None:
        return LawCheck(name, True)
    return LawCheck(name, False, tuple(names[i] for i in hit))


def _well_formed(A: FiniteAlgebra) -> Optional[str]:
    n = A.size
    if n < 1:
        return "lege drager"
    if len(set(A.names)) != n:
        return "elementnamen niet uniek"
    if not (0 <= A.zero < n and 0 <= A.one < n):
        return "zero of one buiten de drager"
    for name in TABLES:
        table = A.table(name)
        if table.shape != (n, n):
            return f"tabel {name} heeft vorm {table.shape}, verwacht ({n}, {n})"
        if table.min() < 0 or table.max() >= n:
            return f"tabel {name} bevat indices buiten [0, {n})"
    return None


def _associative(table: np.ndarray) -> np.ndarray:
    """bad[x, y, z] ⇔ (x∘y)∘z ≠ x∘(y∘z)."""
    n = table.shape[0]
    left = table[table]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]
    return left != right


def _validate(A: FiniteAlgebra) -> ValidationReport:
    problem = _well_formed(A)
    if problem:
        return ValidationReport((LawCheck("well-formed", False, (problem,)),))

    n = A.size
    names = A.names
    e = np.arange(n)
    col = e[:, None]
    leq = A.order
    checks = [LawCheck("well-formed", True)]

    checks.append(_check("meet-commutative", A.meet != A.meet.T, names))
    checks.append(_check("join-commutative", A.join != A.join.T, names))
    checks.append(_check("meet-associative", _associative(A.meet), names))
    checks.append(_check("join-associative", _associative(A.join), names))
    checks.append(_check("meet-idempotent", np.diag(A.meet) != e, names))
    checks.append(_check("join-idempotent", np.diag(A.join) != e, names))
    absorption = (A.meet[col, A.join] != col) | (A.join[col, A.meet] != col)
    checks.append(_check("absorption", absorption, names))
    checks.append(_check("bounds", ~leq[A.zero, :] | ~leq[:, A.one], names))

    checks.append(_check("mult-commutative", A.mult != A.mult.T, names))
    checks.append(_check("mult-associative", _associative(A.mult), names))
    checks.append(_check("mult-unit", A.mult[A.one, :] != e, names))

    # x·y ≤ z ⇔ x ≤ y→z
    lhs = leq[A.mult[:, :, None], e[None, None, :]]
    rhs = leq[e[:, None, None], A.impl[None, :, :]]
    checks.append(_check("residuation", lhs != rhs, names))

    return ValidationReport(tuple(checks), trivial=(n == 1))


def validate(A: FiniteAlgebra) -> ValidationReport:
    """Exhaustieve controle van alle FL_ew-wetten; fouten zijn rapportregels."""
    return A.validation


def require_valid(A: FiniteAlgebra) -> FiniteAlgebra:
    """Geef A terug als die valideert, anders AlgebraError met de eerste fout."""
    report = A.validation
    if not report.ok:
        raise AlgebraError(f"ongeldige algebra {A.label or A.size}: {report.failures[0].line()}")
    return A


# === Orde ===

def leq(A: FiniteAlgebra, a: int, b: int) -> bool:
    return bool(A.order[a, b])


def is_chain(A: FiniteAlgebra) -> bool:
    return bool(np.all(A.order | A.order.T))


def is_nontrivial(A: FiniteAlgebra) -> bool:
    return A.zero != A.one


# === Evaluatie ===

def evaluate(t: Term, A: FiniteAlgebra, e: Mapping[int, int]) -> int:
    """
    Interpreteer t in A onder toekenning e (variabele-index → element-index).

    Raises:
        UnassignedVariable: als een variabele van t geen waarde heeft.
        AlgebraError: als een waarde geen element van A is.
    """
    if isinstance(t, Var):
        if t.index not in e:
            raise UnassignedVariable(t.index)
        value = int(e[t.index])
        if not 0 <= value < A.size:
            raise AlgebraError(f"x{t.index}={value} is geen element van {A.label or A.size}")
        return value
    if isinstance(t, Zero):
        return A.zero
    if isinstance(t, One):
        return A.one
    left = evaluate(t.left, A, e)
    right = evaluate(t.right, A, e)
    return int(_binary_table(A, t)[left, right])


def _binary_table(A: FiniteAlgebra, t: Term) -> np.ndarray:
    if isinstance(t, Mult):
        return A.mult
    if isinstance(t, Impl):
        return A.impl
    if isinstance(t, Meet):
        return A.meet
    if isinstance(t, Join):
        return A.join
    raise TypeError(f"geen term: {t!r}")


def assignment_count(A: FiniteAlgebra, variables: tuple) -> int:
    return A.size ** len(variables)


def assignment_at(A: FiniteAlgebra, variables: tuple, position: int) -> dict:
    """
    De toekenning op plek `position` in lexicografische volgorde
    (eerste variabele het meest significant).
    """
    values = {}
    n = A.size
    for var in reversed(variables):
        values[var] = position % n
        position //= n
    return {var: values[var] for var in variables}


def evaluate_block(t: Term, A: FiniteAlgebra, variables: tuple, start: int, stop: int) -> np.ndarray:
    """Waarden van t voor de toekenningen start..stop-1 (lexicografisch)."""
    n = A.size
    k = len(variables)
    positions = np.arange(start, stop, dtype=np.int64)
    columns = {}
    for i, var in enumerate(variables):
        columns[var] = (positions // (n ** (k - 1 - i))) % n
    count = stop - start
    memo = {}

    def walk(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Var):
            if node.index not in columns:
                raise UnassignedVariable(node.index)
            result = columns[node.index]
        elif isinstance(node, Zero):
            result = np.full(count, A.zero, dtype=np.int64)
        elif isinstance(node, One):
            result = np.full(count, A.one, dtype=np.int64)
        else:
            result = _binary_table(A, node)[walk(node.left), walk(node.right)]
        memo[key] = result
        return result

    return walk(t)


def iter_blocks(t: Term, A: FiniteAlgebra, variables: tuple, chunk: int = CHUNK_SIZE):
    """Yield (start, waarden) per blok, in lexicografische volgorde."""
    total = assignment_count(A, variables)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        yield start, evaluate_block(t, A, variables, start, stop)


def evaluate_all(t: Term, A: FiniteAlgebra, variables: Optional[Iterable[int]] = None) -> np.ndarray:
    """
    Gevectoriseerde evaluatie over álle toekenningen van `variables`
    (standaard: variabelen van t, oplopend), in lexicografische volgorde.
    """
    if variables is None:
        variables = term_variables(t)
    variables = tuple(sorted(variables))
    return evaluate_block(t, A, variables, 0, assignment_count(A, variables))


# === Constructies ===

def product(A: FiniteAlgebra, B: FiniteAlgebra, label: str = "") -> FiniteAlgebra:
    """Direct product; element (a, b) heet "a|b" en heeft index a·m + b."""
    m = B.size
    pairs = np.arange(A.size * m)
    first, second = pairs // m, pairs % m
    tables = []
    for name in TABLES:
        ta, tb = A.table(name), B.table(name)
        tables.append(ta[first[:, None], first[None, :]] * m + tb[second[:, None], second[None, :]])
    names = [f"{a}|{b}" for a in A.names for b in B.names]
    return FiniteAlgebra.from_tables(
        names, *tables,
        zero=A.zero * m + B.zero,
        one=A.one * m + B.one,
        label=label or f"{A.label}x{B.label}",
        factors=(A, B),
    )


def rename(A: FiniteAlgebra, names: Iterable[str], label: Optional[str] = None) -> FiniteAlgebra:
    """Zelfde tabellen, nieuwe elementnamen."""
    names = tuple(names)
    if len(names) != A.size:
        raise AlgebraError(f"{len(names)} namen voor {A.size} elementen")
    return FiniteAlgebra.from_tables(names, A.mult, A.impl, A.meet, A.join, A.zero, A.one,
                                     label=A.label if label is None else label, factors=A.factors)


def is_homomorphism(A: FiniteAlgebra, B: FiniteAlgebra, h) -> bool:
    """Controleer h: A → B (array van lengte |A|) op alle operaties en constanten."""
    h = np.asarray(h, dtype=np.int64)
    if h.shape != (A.size,) or h[A.zero] != B.zero or h[A.one] != B.one:
        return False
    for name in TABLES:
        if not np.array_equal(h[A.table(name)], B.table(name)[np.ix_(h, h)]):
            return False
    return True


def _invariants(A: FiniteAlgebra) -> list:
    below = A.order.sum(axis=0)
    above = A.order.sum(axis=1)
    square = A.mult[np.arange(A.size), np.arange(A.size)]
    idempotent = square == np.arange(A.size)
    return [(int(below[i]), int(above[i]), bool(idempotent[i])) for i in range(A.size)]


def isomorphic(A: FiniteAlgebra, B: FiniteAlgebra) -> Optional[np.ndarray]:
    """
    Zoek een isomorfisme A → B via backtracking over elementen met gelijke
    invarianten. Returns de afbeelding, of None.
    """
    if A.size != B.size:
        return None
    inv_a, inv_b = _invariants(A), _invariants(B)
    if sorted(inv_a) != sorted(inv_b):
        return None
    candidates = [[j for j in range(B.size) if inv_b[j] == inv_a[i]] for i in range(A.size)]
    candidates[A.zero] = [B.zero] if B.zero in candidates[A.zero] else []
    candidates[A.one] = [B.one] if B.one in candidates[A.one] else []

    mapping = [-1] * A.size
    used = set()

    def extend(i: int) -> bool:
        if i == A.size:
            return is_homomorphism(A, B, mapping)
        for j in candidates[i]:
            if j in used:
                continue
            mapping[i] = j
            used.add(j)
            if extend(i + 1):
                return True
            used.discard(j)
        mapping[i] = -1
        return False

    if extend(0):
        return np.array(mapping, dtype=np.int64)
    return None


def subalgebra_generated(A: FiniteAlgebra, generators: Iterable[int]) -> list[int]:
    """Kleinste deelverzameling met 0, 1 en de generatoren die gesloten is onder alle operaties."""
    current = set(generators) | {A.zero, A.one}
    while True:
        members = np.array(sorted(current), dtype=np.int64)
        grown = set(current)
        for name in TABLES:
            grown.update(int(v) for v in np.unique(A.table(name)[np.ix_(members, members)]))
        if grown == current:
            return sorted(current)
        current = grown


def restrict(A: FiniteAlgebra, elements: list[int], label: str = "") -> FiniteAlgebra:
    """De deelalgebra op `elements` (moet gesloten zijn), hergenummerd."""
    elements = sorted(elements)
    position = {e: i for i, e in enumerate(elements)}
    members = np.array(elements, dtype=np.int64)
    tables = []
    for name in TABLES:
        sub = A.table(name)[np.ix_(members, members)]
        try:
            tables.append(np.vectorize(position.__getitem__, otypes=[np.int64])(sub))
        except KeyError:
            raise AlgebraError("deelverzameling is niet gesloten onder de operaties") from None
    return FiniteAlgebra.from_tables(
        [A.names[e] for e in elements], *tables,
        zero=position[A.zero], one=position[A.one],
        label=label or f"sub({A.label})",
    )


def identity_holds(A: FiniteAlgebra, left: Term, right: Term) -> bool:
    """Geldt left ≈ right in A voor alle toekenningen?"""
    vars_ = tuple(sorted(term_variables(left) | term_variables(right)))
    return bool(np.array_equal(evaluate_all(left, A, vars_), evaluate_all(right, A, vars_)))

