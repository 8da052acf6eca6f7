"""
Exacte rekenkunde voor twee oneindige families.

- De standaard MV-algebra op [0,1] ∩ ℚ, met fractions.Fraction (nooit afronden).
- Komori-ketens K_{n+1}: het interval [(0,0), (n,0)] in ℤ ×_lex ℤ.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from sympy import factorint, isprime

from flewsat.errors import AlgebraError, OutOfBounds, UnassignedVariable
from flewsat.logic.term import Impl, Meet, Mult, One, Term, Var, Zero

Rational = Fraction

ZERO_Q = Fraction(0)
ONE_Q = Fraction(1)


# === Standaard MV-algebra ===

def _as_unit(value) -> Fraction:
    q = Fraction(value)
    if not ZERO_Q <= q <= ONE_Q:
        raise OutOfBounds(f"waarde {q} ligt niet in [0, 1]")
    return q


def standard_mv_eval(t: Term, e: Mapping[int, object]) -> Fraction:
    """
    Evalueer t exact in de standaard MV-algebra:
    x·y = max(0, x+y-1), x→y = min(1, 1-x+y), ∧ = min, ∨ = max.

    Raises:
        UnassignedVariable: variabele zonder waarde.
        OutOfBounds: een waarde buiten [0, 1].
    """
    values = {index: _as_unit(v) for index, v in e.items()}
    return _mv(t, values)


def _mv(t: Term, values: dict) -> Fraction:
    if isinstance(t, Var):
        if t.index not in values:
            raise UnassignedVariable(t.index)
        return values[t.index]
    if isinstance(t, Zero):
        return ZERO_Q
    if isinstance(t, One):
        return ONE_Q
    a = _mv(t.left, values)
    b = _mv(t.right, values)
    if isinstance(t, Mult):
        return max(ZERO_Q, a + b - 1)
    if isinstance(t, Impl):
        return min(ONE_Q, 1 - a + b)
    if isinstance(t, Meet):
        return min(a, b)
    return max(a, b)


def lukasiewicz_element(k: int, q) -> int:
    """Index van q in Ł_k; q·(k-1) moet een geheel getal in [0, k-1] zijn."""
    q = _as_unit(q)
    scaled = q * (k - 1)
    if scaled.denominator != 1:
        raise OutOfBounds(f"{q} ligt niet in Ł_{k}")
    return int(scaled)


def rstar_membership(primes: Iterable[int], q) -> bool:
    """
    Denominatorcriterium voor de deelalgebra voortgebracht door de breuken
    met priemnoemers uit R: de gereduceerde noemer van q is kwadraatvrij en
    heeft alleen priemfactoren uit R.
    """
    primes = set(int(p) for p in primes)
    for p in primes:
        if not isprime(p):
            raise AlgebraError(f"{p} is geen priemgetal")
    q = _as_unit(q)
    factors = factorint(q.denominator)
    return all(p in primes and multiplicity == 1 for p, multiplicity in factors.items())


# === Komori-ketens ===

@dataclass(frozen=True, order=True)
class LexPair:
    """Element van ℤ ×_lex ℤ; de veldvolgorde geeft de lexicografische orde."""
    a: int
    b: int

    def __add__(self, other: "LexPair") -> "LexPair":
        return LexPair(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "LexPair") -> "LexPair":
        return LexPair(self.a - other.a, self.b - other.b)

    def scale(self, k: int) -> "LexPair":
        return LexPair(k * self.a, k * self.b)

    def __str__(self):
        return f"({self.a},{self.b})"


class KomoriChain:
    """
    K_{n+1}: het interval [(0,0), (n,0)] met eenheid u = (n,0).

        x·y = max((0,0), x+y-u)     x→y = min(u, u-x+y)     ¬x = u-x
    """

    def __init__(self, n: int):
        if n < 1:
            raise AlgebraError(f"Komori-keten vraagt n >= 1, kreeg {n}")
        self.n = n
        self.zero = LexPair(0, 0)
        self.unit = LexPair(n, 0)

    def __repr__(self):
        return f"KomoriChain({self.n})"

    def contains(self, x: LexPair) -> bool:
        return self.zero <= x <= self.unit

    def check(self, *items: LexPair):
        for x in items:
            if not self.contains(x):
                raise OutOfBounds(f"{x} ligt buiten [{self.zero}, {self.unit}]")

    def mult(self, x: LexPair, y: LexPair) -> LexPair:
        self.check(x, y)
        return max(self.zero, x + y - self.unit)

    def impl(self, x: LexPair, y: LexPair) -> LexPair:
        self.check(x, y)
        return min(self.unit, self.unit - x + y)

    def meet(self, x: LexPair, y: LexPair) -> LexPair:
        self.check(x, y)
        return min(x, y)

    def join(self, x: LexPair, y: LexPair) -> LexPair:
        self.check(x, y)
        return max(x, y)

    def neg(self, x: LexPair) -> LexPair:
        self.check(x)
        return self.unit - x

    def power(self, x: LexPair, k: int) -> LexPair:
        """x^k = max(0, kx - (k-1)u)."""
        self.check(x)
        return max(self.zero, x.scale(k) - self.unit.scale(k - 1))

    def evaluate(self, t: Term, e: Mapping[int, LexPair]) -> LexPair:
        """Evalueer een term exact in deze keten."""
        if isinstance(t, Var):
            if t.index not in e:
                raise UnassignedVariable(t.index)
            self.check(e[t.index])
            return e[t.index]
        if isinstance(t, Zero):
            return self.zero
        if isinstance(t, One):
            return self.unit
        left = self.evaluate(t.left, e)
        right = self.evaluate(t.right, e)
        if isinstance(t, Mult):
            return self.mult(left, right)
        if isinstance(t, Impl):
            return self.impl(left, right)
        if isinstance(t, Meet):
            return self.meet(left, right)
        return self.join(left, right)

    def sample(self) -> list[LexPair]:
        """
        Randrepresentanten: per eerste coördinaat a de tweede coördinaat
        -1, 0, 1 (voor zover binnen het interval). Binnen een schijf is de
        rekenkunde affien in b, dus het teken van b bepaalt elke vergelijking.
        """
        out = []
        for a in range(self.n + 1):
            for b in (-1, 0, 1):
                x = LexPair(a, b)
                if self.contains(x):
                    out.append(x)
        return out

    def fixed_point(self) -> Optional[LexPair]:
        """Het ¬-dekpunt: 2x = u heeft een oplossing precies als n even is."""
        if self.n % 2 == 0:
            return LexPair(self.n // 2, 0)
        return None

    def positive_square(self, x: LexPair) -> bool:
        return self.power(x, 2) > self.zero

    def closure_witness(self) -> Optional[tuple]:
        """
        Een paar (x, y) met x² > 0, y² > 0 maar (x·y)² = 0, of None als
        {x : x² > 0} gesloten is onder ·.
        """
        upper = [x for x in self.sample() if self.positive_square(x)]
        for i, x in enumerate(upper):
            for y in upper[i:]:
                if not self.positive_square(self.mult(x, y)):
                    return x, y
        return None


def komori_ops(n: int) -> KomoriChain:
    """De exacte operaties van K_{n+1}."""
    return KomoriChain(n)
