"""Independent brute-force evaluator for the document category table.

Kept separate from the package on purpose: it re-reads the classification
table with exact Fraction arithmetic and a data-driven rule loop, so tests
can cross-check the production classifier against it.
"""
from __future__ import annotations

from fractions import Fraction

_RULES = (
    ("prototypical", ("typical", "coverage")),
    ("comprehensive", ("coverage",)),
    ("specialized", ("typical",)),
    ("atypical", ("rare",)),
    ("deep", ("intricate",)),
    ("irrelevant", ("irrelevant",)),
)


def oracle_classify(
    typical: int,
    rare: int,
    intricate: int,
    irrelevant: int,
    covered: int,
    possible: int,
) -> str:
    total = typical + rare + intricate + irrelevant
    ratios = {
        "typical": Fraction(typical, total),
        "rare": Fraction(rare, total),
        "intricate": Fraction(intricate, total),
        "irrelevant": Fraction(irrelevant, total),
        "coverage": Fraction(covered, possible) if possible else Fraction(0),
    }
    half = Fraction(1, 2)
    for name, needed in _RULES:
        if all(ratios[key] > half for key in needed):
            return name
    return "generic"


def all_distributions(max_total: int, max_possible: int):
    """Every (typical, rare, intricate, irrelevant, covered, possible) tuple
    with 1 <= total <= max_total and covered <= possible <= max_possible."""
    for total in range(1, max_total + 1):
        for typical in range(total + 1):
            for rare in range(total - typical + 1):
                for intricate in range(total - typical - rare + 1):
                    irrelevant = total - typical - rare - intricate
                    for possible in range(max_possible + 1):
                        for covered in range(possible + 1):
                            yield typical, rare, intricate, irrelevant, covered, possible
