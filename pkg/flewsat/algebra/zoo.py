"""
Algebrafamilies: de Booleaanse algebra 𝟚, Łukasiewicz- en Gödelketens,
Heyting-uitbreidingen van eindige distributieve tralies en de catalogus
van alle eindige algebra's die de eigenschapstests doorlopen.
"""

import itertools
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from flewsat.algebra.core import FiniteAlgebra, product, require_valid, validate
from flewsat.errors import AlgebraError

LATTICE_LAWS = (
    "well-formed", "meet-commutative", "join-commutative", "meet-associative",
    "join-associative", "meet-idempotent", "join-idempotent", "absorption", "bounds",
)

# Standaardgrenzen van de catalogus
MAX_CHAIN = 8
MAX_LATTICE = 6
MAX_PRODUCT = 36


def _chain_names(k: int) -> list[str]:
    return [str(Fraction(i, k - 1)) for i in range(k)]


def lukasiewicz_chain(k: int) -> FiniteAlgebra:
    """
    Ł_k: {0, 1/(k-1), ..., 1} met x·y = max(0, x+y-1) en x→y = min(1, 1-x+y).
    """
    if k < 2:
        raise AlgebraError(f"lukasiewicz_chain vraagt k >= 2, kreeg {k}")
    top = k - 1
    i = np.arange(k)[:, None]
    j = np.arange(k)[None, :]
    return require_valid(FiniteAlgebra.from_tables(
        _chain_names(k),
        mult=np.maximum(0, i + j - top),
        impl=np.minimum(top, top - i + j),
        meet=np.minimum(i, j),
        join=np.maximum(i, j),
        zero=0, one=top, label=f"L{k}",
    ))


def godel_chain(k: int) -> FiniteAlgebra:
    """G_k: · = min, x→y = 1 als x ≤ y, anders y."""
    if k < 2:
        raise AlgebraError(f"godel_chain vraagt k >= 2, kreeg {k}")
    top = k - 1
    i = np.arange(k)[:, None]
    j = np.arange(k)[None, :]
    return require_valid(FiniteAlgebra.from_tables(
        _chain_names(k),
        mult=np.minimum(i, j),
        impl=np.where(i <= j, top, j),
        meet=np.minimum(i, j),
        join=np.maximum(i, j),
        zero=0, one=top, label=f"G{k}",
    ))


def bool2() -> FiniteAlgebra:
    """De tweewaardige Booleaanse algebra 𝟚."""
    A = lukasiewicz_chain(2)
    return FiniteAlgebra.from_tables(A.names, A.mult, A.impl, A.meet, A.join, A.zero, A.one, label="bool2")


def trivial_algebra() -> FiniteAlgebra:
    """De één-elementige algebra (0 = 1)."""
    return FiniteAlgebra.from_tables(["0"], [[0]], [[0]], [[0]], [[0]], 0, 0, label="trivial")


# === Heyting-uitbreiding ===

def _default_names(n: int, bottom: int, top: int) -> list[str]:
    letters = iter("abcdefghijklmnopqrstuvwyz")
    names = []
    for i in range(n):
        if i == bottom:
            names.append("0")
        elif i == top:
            names.append("1")
        else:
            names.append(next(letters) if n <= 27 else f"a{i}")
    return names


def heyting_from_lattice(meet, join, names=None, label: str = "") -> FiniteAlgebra:
    """
    Breid een eindige begrensde distributieve tralie uit tot Heyting-algebra:
    · := ∧ en x→y := max{z : z∧x ≤ y}.

    Raises:
        AlgebraError: als de tabellen geen begrensde tralie vormen, of als
            distributiviteit faalt (met het eerste schendende drietal).
    """
    meet = np.array(meet, dtype=np.int64)
    join = np.array(join, dtype=np.int64)
    n = meet.shape[0]
    if meet.shape != (n, n) or join.shape != (n, n) or n < 1:
        raise AlgebraError("meet en join moeten vierkante tabellen van gelijke grootte zijn")
    if meet.min() < 0 or meet.max() >= n or join.min() < 0 or join.max() >= n:
        raise AlgebraError(f"tabelindices buiten [0, {n})")

    e = np.arange(n)
    leq = meet == e[:, None]
    bottoms = [b for b in range(n) if leq[b, :].all()]
    tops = [t for t in range(n) if leq[:, t].all()]
    if not bottoms or not tops:
        raise AlgebraError("tralie is niet begrensd (geen kleinste of grootste element)")
    bottom, top = bottoms[0], tops[0]
    if names is None:
        names = _default_names(n, bottom, top)

    lattice_check = FiniteAlgebra.from_tables(names, meet, meet, meet, join, bottom, top)
    for check in validate(lattice_check).checks:
        if check.name in LATTICE_LAWS and not check.ok:
            raise AlgebraError(f"geen tralie: {check.line()}")

    # x∧(y∨z) = (x∧y)∨(x∧z)
    lhs = meet[e[:, None, None], join[None, :, :]]
    rhs = join[meet[:, :, None], meet[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        x, y, z = (names[int(i)] for i in bad[0])
        raise AlgebraError(f"tralie is niet distributief: fail at ({x},{y},{z})")

    impl = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            allowed = [z for z in range(n) if leq[meet[z, a], b]]
            result = allowed[0]
            for z in allowed[1:]:
                result = join[result, z]
            impl[a, b] = result

    return require_valid(FiniteAlgebra.from_tables(
        names, meet, impl, meet, join, bottom, top, label=label or f"H{n}",
    ))


# === Distributieve tralies via down-sets van posets ===

def _transitive_closure(p: int, edges: list) -> np.ndarray:
    below = np.eye(p, dtype=bool)
    for i, j in edges:
        below[i, j] = True
    for k in range(p):
        below |= below[:, k:k + 1] & below[k:k + 1, :]
    return below


def _down_sets(p: int, below: np.ndarray) -> list[int]:
    """Alle naar beneden gesloten deelverzamelingen, als bitmaskers."""
    result = []
    for mask in range(1 << p):
        closed = True
        for j in range(p):
            if mask >> j & 1:
                for i in range(p):
                    if below[i, j] and not mask >> i & 1:
                        closed = False
                        break
            if not closed:
                break
        if closed:
            result.append(mask)
    return result


def _canonical_key(meet: np.ndarray, rank: list[int]) -> tuple:
    """Kleinste meet-tabel over alle rang-bewarende permutaties."""
    n = len(rank)
    groups = [[i for i in range(n) if rank[i] == r] for r in sorted(set(rank))]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [i for part in choice for i in part]
        position = np.empty(n, dtype=np.int64)
        position[order] = np.arange(n)
        relabeled = position[meet][np.ix_(order, order)]
        key = tuple(relabeled.ravel().tolist())
        if best is None or key < best:
            best = key
    return (n, best)


def distributive_lattices(max_size: int = MAX_LATTICE) -> list[tuple[np.ndarray, np.ndarray]]:
    """
    Alle distributieve tralies met hoogstens `max_size` elementen, op
    isomorfie na, als (meet, join) tabellen. Element 0 is de bodem, het
    laatste element de top.
    """
    found = {}
    # een tralie met m elementen heeft hoogstens m-1 join-irreducibelen
    for p in range(0, max_size):
        pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
        for edge_mask in range(1 << len(pairs)):
            edges = [pairs[b] for b in range(len(pairs)) if edge_mask >> b & 1]
            below = _transitive_closure(p, edges)
            downs = _down_sets(p, below)
            if len(downs) > max_size:
                continue
            downs.sort(key=lambda m: (bin(m).count("1"), m))
            index = {m: i for i, m in enumerate(downs)}
            meet = np.array([[index[a & b] for b in downs] for a in downs], dtype=np.int64)
            join = np.array([[index[a | b] for b in downs] for a in downs], dtype=np.int64)
            key = _canonical_key(meet, [bin(m).count("1") for m in downs])
            if key not in found:
                found[key] = (meet, join)
    return sorted(found.values(), key=lambda mj: mj[0].shape[0])


def is_chain_table(meet: np.ndarray) -> bool:
    leq = meet == np.arange(meet.shape[0])[:, None]
    return bool(np.all(leq | leq.T))


# === Catalogus ===

def build_catalog(max_chain: int = MAX_CHAIN, max_lattice: int = MAX_LATTICE,
                  max_product: int = MAX_PRODUCT, progress: bool = False) -> dict:
    """
    De eindige catalogus: bool2, Ł_k en G_k (2 ≤ k ≤ max_chain),
    Heyting-uitbreidingen van distributieve tralies (ketens zitten al in G_k,
    de triviale tralie wel apart) en alle paarsgewijze producten tot
    `max_product` elementen.

    Returns:
        dict naam → FiniteAlgebra, in vaste volgorde.
    """
    catalog = {"bool2": bool2()}
    for k in range(2, max_chain + 1):
        catalog[f"L{k}"] = lukasiewicz_chain(k)
    for k in range(2, max_chain + 1):
        catalog[f"G{k}"] = godel_chain(k)

    counters = {}
    for meet, join in distributive_lattices(max_lattice):
        n = meet.shape[0]
        if n > 1 and is_chain_table(meet):
            continue
        counters[n] = counters.get(n, 0) + 1
        label = f"H{n}{chr(ord('a') + counters[n] - 1)}"
        catalog[label] = heyting_from_lattice(meet, join, label=label)

    # Ł2 en G2 zijn kopieën van bool2; de triviale algebra geeft A×1 ≅ A
    factors = [name for name, A in catalog.items()
               if A.size > 1 and name not in ("L2", "G2")]
    pairs = [(a, b) for i, a in enumerate(factors) for b in factors[i:]
             if catalog[a].size * catalog[b].size <= max_product]
    for a, b in tqdm(pairs, desc="Producten", disable=not progress):
        name = f"{a}x{b}"
        catalog[name] = product(catalog[a], catalog[b], label=name)
    return catalog


def small_catalog(max_size: int, catalog: dict = None) -> dict:
    """Deel van de catalogus met algebra's van hoogstens `max_size` elementen."""
    catalog = catalog if catalog is not None else build_catalog()
    return {name: A for name, A in catalog.items() if A.size <= max_size}
