"""
Termtaal: AST, parser, canonieke printer en hulpfuncties.

Knooppunten: Var, Zero, One, Mult (·), Impl (→), Meet (∧), Join (∨).
Afgeleide connectieven (¬, ≡, +, machten, n-voudige sommen) bestaan alleen
als constructors; ze worden bij het bouwen meteen uitgeschreven.

Grammatica (sterkst bindend eerst):
    ^  >  ~ en n#  >  *  >  /\\  >  \\/  >  +  >  -> (rechts-associatief)  >  <-> (niet associatief)
"""

import re
from dataclasses import dataclass
from typing import ClassVar, Mapping, Union

from flewsat.errors import TermSyntaxError


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variabele-index moet >= 0 zijn, kreeg {self.index}")

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class One:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Mult:
    left: "Term"
    right: "Term"
    symbol: ClassVar[str] = "*"

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True)
class Impl:
    left: "Term"
    right: "Term"
    symbol: ClassVar[str] = "->"

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"
    symbol: ClassVar[str] = "/\\"

    def __str__(self):
        return print_term(self)


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"
    symbol: ClassVar[str] = "\\/"

    def __str__(self):
        return print_term(self)


Term = Union[Var, Zero, One, Mult, Impl, Meet, Join]
BINARY = (Mult, Impl, Meet, Join)

ZERO = Zero()
ONE = One()


def x(index: int) -> Var:
    """Korte schrijfwijze voor Var(index)."""
    return Var(index)


# === Afgeleide connectieven ===

def neg(t: Term) -> Term:
    """¬t = t → 0."""
    return Impl(t, ZERO)


def equiv(left: Term, right: Term) -> Term:
    """l ≡ r = (l → r) · (r → l)."""
    return Mult(Impl(left, right), Impl(right, left))


def plus(left: Term, right: Term) -> Term:
    """l + r = ¬(¬l · ¬r)."""
    return neg(Mult(neg(left), neg(right)))


def power(t: Term, k: int) -> Term:
    """t^k = t · t · ... · t (k keer, links-associatief)."""
    if k < 1:
        raise ValueError(f"exponent moet >= 1 zijn, kreeg {k}")
    result = t
    for _ in range(k - 1):
        result = Mult(result, t)
    return result


def nsum(k: int, t: Term) -> Term:
    """k#t = t + t + ... + t (k keer, links-associatief)."""
    if k < 1:
        raise ValueError(f"aantal termen moet >= 1 zijn, kreeg {k}")
    result = t
    for _ in range(k - 1):
        result = plus(result, t)
    return result


def mult_all(terms: list) -> Term:
    """Links-associatief product van een niet-lege lijst termen."""
    result = terms[0]
    for t in terms[1:]:
        result = Mult(result, t)
    return result


def join_all(terms: list) -> Term:
    """Links-associatieve join van een niet-lege lijst termen."""
    result = terms[0]
    for t in terms[1:]:
        result = Join(result, t)
    return result


# === Printen ===

def print_term(t: Term) -> str:
    """Canonieke, volledig gehaakte tekst; parse_term(print_term(t)) == t."""
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    return f"({print_term(t.left)} {t.symbol} {print_term(t.right)})"


# === Variabelen en substitutie ===

def variables(t: Term) -> frozenset:
    """De indices van alle variabelen die in t voorkomen."""
    found = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.index)
        elif isinstance(node, BINARY):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def substitute(t: Term, mapping: Mapping[int, Term]) -> Term:
    """Simultane substitutie; variabelen buiten de mapping blijven staan."""
    if isinstance(t, Var):
        return mapping.get(t.index, t)
    if isinstance(t, BINARY):
        left = substitute(t.left, mapping)
        right = substitute(t.right, mapping)
        if left is t.left and right is t.right:
            return t
        return type(t)(left, right)
    return t


def size(t: Term) -> int:
    """Aantal binaire knooppunten van de uitgeschreven term."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, BINARY):
            count += 1
            stack.append(node.left)
            stack.append(node.right)
    return count


# === Parser ===

TOKEN_RE = re.compile(r"x\d+|\d+|<->|->|/\\|\\/|[~*+^#()]")


def _tokenize(text: str) -> list[tuple[str, int]]:
    """Splits tekst in (token, byte-offset) paren."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = TOKEN_RE.match(text, pos)
        if not match:
            raise TermSyntaxError(f"onverwacht teken {text[pos]!r}", _byte_offset(text, pos))
        tokens.append((match.group(), _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(("", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    """Recursive-descent parser volgens de precedentie in de moduledocstring."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> str:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)][0]

    def offset(self) -> int:
        return self.tokens[self.pos][1]

    def take(self) -> str:
        token = self.tokens[self.pos][0]
        self.pos += 1
        return token

    def expect(self, token: str):
        if self.peek() != token:
            raise TermSyntaxError(f"verwacht {token!r}, kreeg {self.peek() or 'einde'!r}", self.offset())
        self.take()

    def parse(self) -> Term:
        t = self.equiv()
        if self.peek() != "":
            raise TermSyntaxError(f"onverwacht token {self.peek()!r}", self.offset())
        return t

    def equiv(self) -> Term:
        left = self.impl()
        if self.peek() == "<->":
            self.take()
            right = self.impl()
            if self.peek() == "<->":
                raise TermSyntaxError("<-> is niet associatief; gebruik haakjes", self.offset())
            return equiv(left, right)
        return left

    def impl(self) -> Term:
        left = self.plus()
        if self.peek() == "->":
            self.take()
            return Impl(left, self.impl())
        return left

    def plus(self) -> Term:
        result = self.join()
        while self.peek() == "+":
            self.take()
            result = plus(result, self.join())
        return result

    def join(self) -> Term:
        result = self.meet()
        while self.peek() == "\\/":
            self.take()
            result = Join(result, self.meet())
        return result

    def meet(self) -> Term:
        result = self.mult()
        while self.peek() == "/\\":
            self.take()
            result = Meet(result, self.mult())
        return result

    def mult(self) -> Term:
        result = self.unary()
        while self.peek() == "*":
            self.take()
            result = Mult(result, self.unary())
        return result

    def unary(self) -> Term:
        token = self.peek()
        if token == "~":
            self.take()
            return neg(self.unary())
        if token.isdigit() and self.peek(1) == "#":
            offset = self.offset()
            count = int(self.take())
            self.take()
            if count < 1:
                raise TermSyntaxError("aantal voor # moet >= 1 zijn", offset)
            return nsum(count, self.unary())
        return self.power()

    def power(self) -> Term:
        result = self.primary()
        while self.peek() == "^":
            self.take()
            offset = self.offset()
            token = self.take()
            if not token.isdigit():
                raise TermSyntaxError("na ^ hoort een positief geheel getal", offset)
            exponent = int(token)
            if exponent < 1:
                raise TermSyntaxError("exponent moet >= 1 zijn", offset)
            result = power(result, exponent)
        return result

    def primary(self) -> Term:
        offset = self.offset()
        token = self.take()
        if token.startswith("x"):
            return Var(int(token[1:]))
        if token == "0":
            return ZERO
        if token == "1":
            return ONE
        if token == "(":
            t = self.equiv()
            self.expect(")")
            return t
        if token.isdigit():
            raise TermSyntaxError(f"alleen 0 en 1 zijn constanten, kreeg {token!r}", offset)
        raise TermSyntaxError(f"verwacht een term, kreeg {token or 'einde'!r}", offset)


def parse_term(text: str) -> Term:
    """
    Parse tekst naar een (uitgeschreven) Term.

    Raises:
        TermSyntaxError: met byte-offset van de fout.
    """
    return _Parser(text).parse()
