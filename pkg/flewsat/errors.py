"""
Foutklassen voor flewsat.

Alles wat de gebruiker kan veroorzaken (syntax, bestandsformaat, budget)
is een FlewsatError; de CLI vangt die af en meldt één `error:` regel.
"""


class FlewsatError(Exception):
    """Basisklasse voor alle fouten in flewsat."""


class TermSyntaxError(FlewsatError, ValueError):
    """Syntaxfout in een term, met byte-offset in de invoer."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class AlgebraError(FlewsatError, ValueError):
    """Ongeldige algebra of ongeldige constructor-parameter."""


class AlgebraFormatError(FlewsatError, ValueError):
    """Fout in een `flewalg 1` bestand."""


class UnassignedVariable(FlewsatError, KeyError):
    """Een variabele in de term heeft geen waarde in de toekenning."""

    def __init__(self, index: int):
        super().__init__(f"variabele x{index} heeft geen waarde")
        self.index = index

    def __str__(self):
        return self.args[0]


class BudgetExceeded(FlewsatError):
    """Het aantal te doorzoeken toekenningen (of monomen) is te groot."""

    def __init__(self, needed: int, budget: int, what: str = "toekenningen"):
        super().__init__(f"budget overschreden: {needed} {what} nodig, budget {budget}")
        self.needed = needed
        self.budget = budget


class DimacsError(FlewsatError, ValueError):
    """Fout in DIMACS CNF invoer."""


class OutOfBounds(FlewsatError, ValueError):
    """Element buiten het domein van een exacte algebra."""


class UsageError(FlewsatError):
    """Ongeldige aanroep van de command-line interface."""
