"""
Lezen en schrijven van het `flewalg 1` tekstformaat.

    flewalg 1
    size 3
    names 0 1/2 1
    zero 0
    one 2
    mult
    0 0 0
    ...

Witruimte-gescheiden; blokken `mult`, `impl`, `meet`, `join` bevatten elk
n regels van n indices (rij = linkerargument). Onbekende kopjes worden
geweigerd.
"""

import re
from pathlib import Path
from typing import Union

from flewsat.algebra.core import TABLES, FiniteAlgebra
from flewsat.errors import AlgebraFormatError

DATA_DIR = Path(__file__).parent.parent / "data"
ALGEBRA_DIR = DATA_DIR / "algebras"
LATTICE_DIR = DATA_DIR / "lattices"

MAGIC = ("flewalg", "1")
LATTICE_MAGIC = ("flewlat", "1")
INDEX_RE = re.compile(r"0|[1-9]\d*")
HEADERS = ("size", "names", "zero", "one") + TABLES


class _Tokens:
    def __init__(self, text: str):
        self.items = text.split()
        self.pos = 0

    def next(self, what: str) -> str:
        if self.pos >= len(self.items):
            raise AlgebraFormatError(f"onverwacht einde van bestand, verwacht {what}")
        token = self.items[self.pos]
        self.pos += 1
        return token

    def index(self, what: str, n: int) -> int:
        token = self.next(what)
        if not INDEX_RE.fullmatch(token):
            raise AlgebraFormatError(f"{what}: geen geldige index {token!r}")
        value = int(token)
        if value >= n:
            raise AlgebraFormatError(f"{what}: index {value} buiten [0, {n})")
        return value

    def done(self) -> bool:
        return self.pos >= len(self.items)


def parse_algebra(text: str, label: str = "") -> FiniteAlgebra:
    """
    Parse `flewalg 1` tekst naar een FiniteAlgebra (nog niet gevalideerd).

    Raises:
        AlgebraFormatError: bij een ontbrekend/onbekend kopje of foute index.
    """
    tokens = _Tokens(text)
    if (tokens.next("flewalg"), tokens.next("versie")) != MAGIC:
        raise AlgebraFormatError("bestand begint niet met 'flewalg 1'")

    if tokens.next("size") != "size":
        raise AlgebraFormatError("verwacht 'size' direct na de kop")
    size_token = tokens.next("grootte")
    if not INDEX_RE.fullmatch(size_token) or int(size_token) < 1:
        raise AlgebraFormatError(f"ongeldige grootte {size_token!r}")
    n = int(size_token)

    seen = {}
    while not tokens.done():
        header = tokens.next("kopje")
        if header not in HEADERS or header == "size":
            raise AlgebraFormatError(f"onbekend kopje {header!r}")
        if header in seen:
            raise AlgebraFormatError(f"kopje {header!r} komt twee keer voor")
        if header == "names":
            seen[header] = [tokens.next("elementnaam") for _ in range(n)]
        elif header in ("zero", "one"):
            seen[header] = tokens.index(header, n)
        else:
            seen[header] = [[tokens.index(f"{header}[{r}]", n) for _ in range(n)] for r in range(n)]

    missing = [h for h in HEADERS[1:] if h not in seen]
    if missing:
        raise AlgebraFormatError(f"ontbrekende kopjes: {', '.join(missing)}")
    if len(set(seen["names"])) != n:
        raise AlgebraFormatError("elementnamen zijn niet uniek")

    return FiniteAlgebra.from_tables(
        seen["names"], seen["mult"], seen["impl"], seen["meet"], seen["join"],
        zero=seen["zero"], one=seen["one"], label=label,
    )


def read_algebra(path: Union[str, Path]) -> FiniteAlgebra:
    """Lees een algebra uit een bestand; het label is de bestandsnaam zonder extensie."""
    path = Path(path)
    return parse_algebra(path.read_text(encoding="utf-8"), label=path.stem)


def write_algebra(A: FiniteAlgebra) -> str:
    """Schrijf A in het `flewalg 1` formaat."""
    lines = [
        " ".join(MAGIC),
        f"size {A.size}",
        "names " + " ".join(A.names),
        f"zero {A.zero}",
        f"one {A.one}",
    ]
    for name in TABLES:
        lines.append(name)
        for row in A.table(name):
            lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_lattice(text: str) -> tuple:
    """
    Parse een tralie in `flewlat 1` formaat: `size n`, optioneel `names`,
    daarna de blokken `meet` en `join`.

    Returns:
        (meet, join, names) met names None als het bestand ze niet geeft.
    """
    tokens = _Tokens(text)
    if (tokens.next("flewlat"), tokens.next("versie")) != LATTICE_MAGIC:
        raise AlgebraFormatError("bestand begint niet met 'flewlat 1'")
    if tokens.next("size") != "size":
        raise AlgebraFormatError("verwacht 'size' direct na de kop")
    size_token = tokens.next("grootte")
    if not INDEX_RE.fullmatch(size_token) or int(size_token) < 1:
        raise AlgebraFormatError(f"ongeldige grootte {size_token!r}")
    n = int(size_token)

    seen = {}
    while not tokens.done():
        header = tokens.next("kopje")
        if header not in ("names", "meet", "join"):
            raise AlgebraFormatError(f"onbekend kopje {header!r}")
        if header in seen:
            raise AlgebraFormatError(f"kopje {header!r} komt twee keer voor")
        if header == "names":
            seen[header] = [tokens.next("elementnaam") for _ in range(n)]
        else:
            seen[header] = [[tokens.index(f"{header}[{r}]", n) for _ in range(n)] for r in range(n)]
    for header in ("meet", "join"):
        if header not in seen:
            raise AlgebraFormatError(f"ontbrekend kopje {header!r}")
    return seen["meet"], seen["join"], seen.get("names")


def read_lattice(path: Union[str, Path]) -> tuple:
    return parse_lattice(Path(path).read_text(encoding="utf-8"))
