"""
Termgeneratoren voor de eigenschapstests.

- enumerate_bounded_terms: alle termen over x1..xk met hoogstens c
  connectieven, op semantische equivalentie na (signatuur = waarden onder
  alle toekenningen in de opgegeven algebra's).
- random_terms / random_cv_terms: geseede willekeurige termen.
- classical_tautology_sample: vaste set klassieke tautologieën.

Volledigheid van de opsomming: heeft een signatuur op niveau k al een
representant t, dan levert elke samenstelling met een equivalente subterm
van niveau ≥ k dezelfde signatuur als de samenstelling met t, en die komt
op een niveau dat niet hoger ligt. Eén representant per signatuur verliest
dus geen enkele signatuur van de begrensde verzameling.
"""

from dataclasses import dataclass, field

import numpy as np

from flewsat.algebra.core import FiniteAlgebra, assignment_count, evaluate_block
from flewsat.logic.term import (
    ONE, ZERO, Impl, Join, Meet, Mult, Term, Var, equiv, neg, parse_term,
)
from flewsat.logic.term import variables as term_variables

# Vangnet; de catalogus blijft hier ruim onder. Afkappen maakt de pool onvolledig.
POOL_LIMIT = 500_000
BOUNDED_MAX_VARS = 2
BOUNDED_MAX_CONNECTIVES = 7

# Maximaal aantal tabelopzoekingen per blok bij het combineren van twee niveaus
COMBINE_CHUNK = 1 << 22

# Begrensde termen die altijd in de pool komen, met hun aantal connectieven
# (¬ en ≡ tellen als één): de ketenterm, x∧¬x en x≡¬x
FIXED_TERMS = (
    ("(~x1 -> x1) /\\ ~(x1^3)", 6),
    ("x1 /\\ ~x1", 2),
    ("x1 <-> ~x1", 2),
)

# Connectieven per niveau; ¬ en ≡ tellen als één connectief
BINARY_OPS = ("mult", "impl", "meet", "join", "equiv")
BUILDERS = {
    "mult": Mult,
    "impl": Impl,
    "meet": Meet,
    "join": Join,
    "equiv": equiv,
}


@dataclass
class TermPool:
    """
    Representanten van de begrensde termverzameling.

    signatures[i] is de signatuur van terms[i]: per component de waarden
    onder alle toekenningen van `variables` (lexicografisch), aaneengeschakeld.
    Een product waarvan de factoren componenten zijn, wordt gedekt via zijn
    factoren (evaluatie in een product is per coördinaat).
    """
    terms: list
    levels: list
    variables: tuple
    algebras: tuple
    signatures: np.ndarray
    offsets: list = field(default_factory=list)
    truncated: bool = False

    def __len__(self):
        return len(self.terms)

    def covers(self, A: FiniteAlgebra) -> bool:
        if any(B is A for B in self.algebras):
            return True
        return bool(A.factors) and all(self.covers(F) for F in A.factors)

    def values(self, A: FiniteAlgebra) -> np.ndarray:
        """Waarden (termen × toekenningen) in algebra A, of KeyError."""
        for k, B in enumerate(self.algebras):
            if B is A:
                return self.signatures[:, self.offsets[k]:self.offsets[k + 1]]
        if A.factors and self.covers(A):
            return self._product_values(A)
        raise KeyError(f"{A!r} hoort niet bij deze pool")

    def _product_values(self, A: FiniteAlgebra) -> np.ndarray:
        # element (a, b) van F×G heeft index a·|G| + b
        F, G = A.factors
        m = G.size
        k = len(self.variables)
        positions = np.arange(assignment_count(A, self.variables))
        left = np.zeros_like(positions)
        right = np.zeros_like(positions)
        for i in range(k):
            digit = (positions // A.size ** (k - 1 - i)) % A.size
            left = left * F.size + digit // m
            right = right * m + digit % m
        return self.values(F)[:, left].astype(np.int64) * m + self.values(G)[:, right]


def _components(algebras, expand_products: bool) -> tuple:
    """De algebra's waarover de signatuur loopt; producten eventueel via hun factoren."""
    out = []

    def add(A):
        if expand_products and A.factors:
            for F in A.factors:
                add(F)
        elif not any(B is A for B in out):
            out.append(A)

    for A in algebras:
        add(A)
    return tuple(out)


def _op_table(A: FiniteAlgebra, op: str) -> np.ndarray:
    if op == "equiv":
        # (x→y)·(y→x)
        return A.mult[A.impl, A.impl.T]
    return A.table(op)


class _Signatures:
    """
    Operaties op aaneengeschakelde signaturen. Alle componenttabellen
    liggen plat achter elkaar; kolom c gebruikt het blok van zijn component.
    """

    def __init__(self, algebras, variables):
        self.algebras = algebras
        self.variables = variables
        self.offsets = [0]
        for A in algebras:
            self.offsets.append(self.offsets[-1] + assignment_count(A, variables))
        self.width = self.offsets[-1]
        self.dtype = np.uint8 if max(A.size for A in algebras) <= 256 else np.int64

        self.sizes = np.empty(self.width, dtype=np.int64)
        self.starts = np.empty(self.width, dtype=np.int64)
        self.neg_starts = np.empty(self.width, dtype=np.int64)
        tables = {op: [] for op in BINARY_OPS}
        negations = []
        start = neg_start = 0
        for k, A in enumerate(algebras):
            s = slice(self.offsets[k], self.offsets[k + 1])
            self.sizes[s] = A.size
            self.starts[s] = start
            self.neg_starts[s] = neg_start
            for op in BINARY_OPS:
                tables[op].append(_op_table(A, op).ravel())
            negations.append(A.neg)
            start += A.size * A.size
            neg_start += A.size
        self.flat = {op: np.concatenate(parts) for op, parts in tables.items()}
        self.flat_neg = np.concatenate(negations)

    def base(self, t: Term) -> np.ndarray:
        parts = [evaluate_block(t, A, self.variables, 0, assignment_count(A, self.variables))
                 for A in self.algebras]
        return np.concatenate(parts).astype(self.dtype)

    def combine(self, op: str, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """left: (p, N), right: (q, N) → (p·q, N), linkerrij buitenste lus."""
        index = self.starts + left[:, None, :].astype(np.int64) * self.sizes + right[None, :, :]
        return self.flat[op][index].astype(self.dtype).reshape(-1, self.width)

    def negate(self, rows: np.ndarray) -> np.ndarray:
        return self.flat_neg[self.neg_starts + rows].astype(self.dtype)


class _PoolBuilder:
    """Verzamelt representanten in opsommingsvolgorde; één per signatuur."""

    def __init__(self, sig: _Signatures, limit: int):
        self.sig = sig
        self.limit = limit
        self.terms = []
        self.levels = []
        self.blocks = []
        self.seen = set()
        self.truncated = False

    def offer(self, rows: np.ndarray, make_term, level: int) -> tuple:
        """
        Neem de nog onbekende signaturen uit `rows` op, in rijvolgorde.
        make_term(i) bouwt de term van rij i.

        Returns:
            (poolindices, rijen) van de nieuwe representanten
        """
        if self.truncated or len(rows) == 0:
            return [], rows[:0]
        _, first = np.unique(rows, axis=0, return_index=True)
        first.sort()
        kept, positions = [], []
        for i in first:
            key = rows[i].tobytes()
            if key in self.seen:
                continue
            if len(self.terms) >= self.limit:
                self.truncated = True
                break
            self.seen.add(key)
            positions.append(len(self.terms))
            self.terms.append(make_term(int(i)))
            self.levels.append(level)
            kept.append(i)
        new_rows = rows[kept]
        if len(new_rows):
            self.blocks.append(new_rows)
        return positions, new_rows

    def pool(self, algebras: tuple) -> TermPool:
        signatures = (np.concatenate(self.blocks) if self.blocks
                      else np.empty((0, self.sig.width), dtype=self.sig.dtype))
        return TermPool(
            terms=self.terms,
            levels=self.levels,
            variables=self.sig.variables,
            algebras=algebras,
            signatures=signatures,
            offsets=self.sig.offsets,
            truncated=self.truncated,
        )


def _stack(parts: list, width: int, dtype) -> np.ndarray:
    parts = [p for p in parts if len(p)]
    return np.concatenate(parts) if parts else np.empty((0, width), dtype=dtype)


def enumerate_bounded_terms(algebras, max_vars: int = BOUNDED_MAX_VARS,
                            max_connectives: int = BOUNDED_MAX_CONNECTIVES,
                            pool_limit: int = POOL_LIMIT, seeds=FIXED_TERMS,
                            expand_products: bool = True) -> TermPool:
    """
    Bottom-up opsomming van termen over x1..x{max_vars}, één representant
    per signatuur (de eerste in opsommingsvolgorde). Elk niveau wordt
    volledig opgesomd tenzij pool_limit bereikt wordt.

    Args:
        algebras: de algebra's waarover de signatuur loopt.
        max_vars: aantal variabelen.
        max_connectives: hoogste niveau (¬, ·, →, ∧, ∨, ≡ tellen elk als één).
        pool_limit: maximaal aantal representanten.
        seeds: paren (term, aantal connectieven) uit de begrensde verzameling
            die vóór niveau 1 worden opgenomen.
        expand_products: signatuur van een product via zijn factoren
            (smaller; zet uit om de producttabellen zelf te gebruiken).

    Returns:
        TermPool; `truncated` is waar als pool_limit bereikt is.
    """
    components = _components(tuple(algebras), expand_products)
    variables = tuple(range(1, max_vars + 1))
    sig = _Signatures(components, variables)
    builder = _PoolBuilder(sig, pool_limit)
    terms = builder.terms

    leaves = [Var(i) for i in variables] + [ZERO, ONE]
    by_level = [builder.offer(np.stack([sig.base(t) for t in leaves]), lambda i: leaves[i], 0)]

    seeded = {}
    for seed, level in seeds:
        t = parse_term(seed) if isinstance(seed, str) else seed
        if 1 <= level <= max_connectives and term_variables(t) <= set(variables):
            positions, rows = builder.offer(sig.base(t)[None, :], lambda i, t=t: t, level)
            parts = seeded.setdefault(level, ([], []))
            parts[0].extend(positions)
            parts[1].append(rows)

    for level in range(1, max_connectives + 1):
        if builder.truncated:
            break
        positions, row_parts = seeded.get(level, ([], []))
        positions, row_parts = list(positions), list(row_parts)

        previous, previous_rows = by_level[level - 1]
        if previous:
            new, rows = builder.offer(sig.negate(previous_rows),
                                      lambda i, src=previous: neg(terms[src[i]]), level)
            positions.extend(new)
            row_parts.append(rows)

        for op in BINARY_OPS:
            for a in range(level):
                lefts, left_rows = by_level[a]
                rights, right_rows = by_level[level - 1 - a]
                if not lefts or not rights or builder.truncated:
                    continue
                q = len(rights)
                chunk = max(1, COMBINE_CHUNK // (q * sig.width))
                for start in range(0, len(lefts), chunk):
                    block = sig.combine(op, left_rows[start:start + chunk], right_rows)

                    def make(i, op=op, start=start, lefts=lefts, rights=rights, q=q):
                        return BUILDERS[op](terms[lefts[start + i // q]], terms[rights[i % q]])

                    new, rows = builder.offer(block, make, level)
                    positions.extend(new)
                    row_parts.append(rows)
                    if builder.truncated:
                        break
        by_level.append((positions, _stack(row_parts, sig.width, sig.dtype)))

    return builder.pool(components)


# === Willekeurige termen ===

UNARY_WEIGHT = 0.2
CONSTANT_WEIGHT = 0.1


def _random_term(rng: np.random.Generator, max_vars: int, depth: int) -> Term:
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < CONSTANT_WEIGHT:
            return ONE if rng.random() < 0.5 else ZERO
        return Var(int(rng.integers(1, max_vars + 1)))
    if rng.random() < UNARY_WEIGHT:
        return neg(_random_term(rng, max_vars, depth - 1))
    op = BINARY_OPS[int(rng.integers(len(BINARY_OPS)))]
    return BUILDERS[op](_random_term(rng, max_vars, depth - 1), _random_term(rng, max_vars, depth - 1))


def random_terms(rng: np.random.Generator, count: int, max_vars: int = 3, max_depth: int = 4) -> list:
    """`count` willekeurige termen over x1..x{max_vars} met diepte ≤ max_depth."""
    return [_random_term(rng, max_vars, max_depth) for _ in range(count)]


def _random_literal(rng: np.random.Generator, max_vars: int) -> Term:
    v = Var(int(rng.integers(1, max_vars + 1)))
    return neg(v) if rng.random() < 0.5 else v


def _random_cv(rng: np.random.Generator, max_vars: int, literals: int) -> Term:
    if literals == 1:
        return _random_literal(rng, max_vars)
    split = int(rng.integers(1, literals))
    left = _random_cv(rng, max_vars, split)
    right = _random_cv(rng, max_vars, literals - split)
    return Mult(left, right) if rng.random() < 0.5 else Join(left, right)


def random_cv_terms(rng: np.random.Generator, count: int, max_vars: int = 4, max_literals: int = 10) -> list:
    """Willekeurige (·,∨)-termen over literalen, met 1..max_literals literalen."""
    return [_random_cv(rng, max_vars, int(rng.integers(1, max_literals + 1))) for _ in range(count)]


# === Vaste voorbeeldsets ===

CLASSICAL_TAUTOLOGIES = (
    "x1 \\/ ~x1",
    "((x1 -> x2) -> x1) -> x1",
    "~(x1 /\\ x2) -> (~x1 \\/ ~x2)",
    "(~x1 \\/ ~x2) -> ~(x1 /\\ x2)",
    "~(x1 \\/ x2) -> (~x1 /\\ ~x2)",
    "(~x1 /\\ ~x2) -> ~(x1 \\/ x2)",
    "~~x1 -> x1",
    "x1 -> (x2 -> x1)",
    "(x1 -> x2) \\/ (x2 -> x1)",
    "(x1 -> (x1 -> x2)) -> (x1 -> x2)",
    "(x1 -> x2) -> (~x2 -> ~x1)",
    "(~x2 -> ~x1) -> (x1 -> x2)",
    "x1 -> x1 * x1",
    "x1 /\\ x2 -> x1 * x2",
    "((x1 -> x2) -> x2) -> (x1 \\/ x2)",
    "(x1 -> x2) \\/ (x1 /\\ ~x2)",
    "~(x1 * ~x1)",
    "(x1 -> x2) <-> (~x1 \\/ x2)",
    "(x1 \\/ x2) * (~x1 \\/ x3) -> (x2 \\/ x3)",
    "(x1 -> ~x1) -> ~x1",
)


def classical_tautology_sample() -> list:
    """Twintig klassieke tautologieën (o.a. x∨¬x, Peirce, De Morgan)."""
    return [parse_term(text) for text in CLASSICAL_TAUTOLOGIES]
