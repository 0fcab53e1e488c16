"""Exact multiple qt-combinatorial numbers from well-poised Macdonald functions.

Everything is computed in exact rational arithmetic at rational points
(q, t), by an algebraic route and by reversed-tableau sums.
"""
from qtcomb.arith import DenominatorVanishes, QTPoint, Rational, format_rational, parse_rational
from qtcomb.partition import Partition
from qtcomb.tableau import NotAStrip, ReversedTableau

__version__ = "0.1.0"

__all__ = [
    "DenominatorVanishes", "NotAStrip", "Partition", "QTPoint", "Rational", "ReversedTableau",
    "format_rational", "parse_rational",
]
