"""Reversed semistandard tableaux, strip chains and psi weights.

A reversed tableau with entries in 1..n corresponds to a chain of
horizontal strips () = lam^(0) < lam^(1) < ... < lam^(n) = shape.  The cells
holding entry v are the strip added at step n - v + 1, so the largest entries
enter first and lam^(k) is the set of cells with entry >= n - k + 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qtcomb import kernels
from qtcomb.arith import Product, QTPoint
from qtcomb.partition import Cell, Partition, cell_stats, is_horizontal_strip


class NotAStrip(ValueError):
    pass


class StripChain(tuple):
    """Sequence of partitions, each a horizontal strip over its predecessor."""

    def __new__(cls, chain):
        chain = tuple(Partition(p) for p in chain)
        if not chain or chain[0]:
            raise ValueError("a strip chain starts at the empty partition")
        for inner, outer in zip(chain, chain[1:]):
            if not is_horizontal_strip(outer, inner):
                raise NotAStrip(f"{outer}/{inner} is not a horizontal strip")
        return super().__new__(cls, chain)

    @property
    def shape(self) -> Partition:
        return self[-1]

    @property
    def n(self) -> int:
        return len(self) - 1


@dataclass(frozen=True)
class ReversedTableau:
    shape: Partition
    rows: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match the shape")
        for r in self.rows:
            for v in r:
                if not 1 <= v <= self.n:
                    raise ValueError(f"entry {v} outside 1..{self.n}")
            for a, b in zip(r, r[1:]):
                if a < b:
                    raise ValueError("rows must weakly decrease")
        for upper, lower in zip(self.rows, self.rows[1:]):
            for a, b in zip(upper, lower):
                if a <= b:
                    raise ValueError("columns must strictly decrease")

    def __getitem__(self, cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def items(self):
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                yield Cell(i, j), v

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str, n: int) -> ReversedTableau:
        rows = json.loads(text)
        return cls(Partition(len(r) for r in rows), tuple(tuple(r) for r in rows), n)

    def __str__(self):
        return self.to_json()


def _rows_from_filling(shape, filling):
    rows, pos = [], 0
    for part in shape:
        rows.append(tuple(filling[pos:pos + part]))
        pos += part
    return tuple(rows)


@lru_cache(maxsize=4096)
def _chains(shape: Partition, n: int):
    return tuple(StripChain(c) for c in kernels.strip_chains(tuple(shape), n))


def strip_chains(shape, n: int):
    """All strip chains ending at ``shape`` with n steps, lexicographically ordered."""
    return _chains(Partition(shape), n)


def chain_to_tableau(chain) -> ReversedTableau:
    chain = chain if isinstance(chain, StripChain) else StripChain(chain)
    filling = kernels.chain_filling(tuple(tuple(p) for p in chain))
    return ReversedTableau(chain.shape, _rows_from_filling(chain.shape, filling), chain.n)


def tableau_to_chain(T: ReversedTableau) -> StripChain:
    levels = []
    for k in range(T.n + 1):
        threshold = T.n - k + 1
        levels.append(Partition(sum(1 for v in row if v >= threshold) for row in T.rows))
    return StripChain(levels)


def enumerate_rssyt(shape, n: int):
    """Yield every reversed semistandard tableau of ``shape`` with entries <= n."""
    for chain in strip_chains(shape, n):
        yield chain_to_tableau(chain)


def _require_strip(lam, mu):
    if not is_horizontal_strip(lam, mu):
        raise NotAStrip(f"{lam}/{mu} is not a horizontal strip")


def psi_strip(lam, mu, pt: QTPoint) -> Fraction:
    """psi_{lam/mu} as a product of b_mu(s)/b_lam(s) over cells in a strip row but not a strip column."""
    lam, mu = Partition(lam), Partition(mu)
    _require_strip(lam, mu)
    return _psi_strip(lam, mu, pt)


@lru_cache(maxsize=1 << 15)
def _psi_strip(lam: Partition, mu: Partition, pt: QTPoint) -> Fraction:
    rows = {i for i in range(1, len(lam) + 1) if lam.part(i) > mu.part(i)}
    cols = {j for i in rows for j in range(mu.part(i) + 1, lam.part(i) + 1)}
    prod = Product(pt)
    for s in mu.cells():
        if s.row not in rows or s.col in cols:
            continue
        a_mu, l_mu, _, _ = cell_stats(mu, s)
        a_lam, l_lam, _, _ = cell_stats(lam, s)
        # b_mu(s) / b_lam(s)
        prod.mul_factor(a_mu, l_mu + 1)
        prod.div_factor(a_mu + 1, l_mu)
        prod.mul_factor(a_lam + 1, l_lam)
        prod.div_factor(a_lam, l_lam + 1)
    return prod.value()


def psi_strip_algebraic(lam, mu, pt: QTPoint) -> Fraction:
    """psi_{lam/mu} from the double product of f(a) = (at)_inf/(aq)_inf.

    Each f in the numerator is paired with a denominator f whose argument
    differs by q^m, m = mu_j - lam_{j+1}, leaving finite quotients
    f(u)/f(u q^m) = (ut)_m/(uq)_m.
    """
    lam, mu = Partition(lam), Partition(mu)
    _require_strip(lam, mu)
    prod = Product(pt)
    ell = len(mu)
    for i in range(1, ell + 1):
        for j in range(i, ell + 1):
            m = mu.part(j) - lam.part(j + 1)
            if m == 0:
                continue
            # f(q^{mu_i-mu_j} t^{j-i}) / f(q^{mu_i-lam_{j+1}} t^{j-i})
            u = mu.part(i) - mu.part(j)
            prod.mul_poch(1, u, j - i + 1, m)
            prod.div_poch(1, u + 1, j - i, m)
            # f(q^{lam_i-lam_{j+1}} t^{j-i}) / f(q^{lam_i-mu_j} t^{j-i})
            v = lam.part(i) - mu.part(j)
            prod.mul_poch(1, v + 1, j - i, m)
            prod.div_poch(1, v, j - i + 1, m)
    return prod.value()


def psi_chain(chain, pt: QTPoint) -> Fraction:
    prod = Product(pt)
    for inner, outer in zip(chain, chain[1:]):
        prod.mul(_psi_strip(Partition(outer), Partition(inner), pt))
    return prod.value()


def psi_tableau(T: ReversedTableau, pt: QTPoint) -> Fraction:
    return psi_chain(tableau_to_chain(T), pt)


@lru_cache(maxsize=4096)
def _chain_data(shape: Partition, n: int, pt: QTPoint):
    chains = strip_chains(shape, n)
    fillings = [kernels.chain_filling(tuple(tuple(p) for p in c)) for c in chains]
    weights = [psi_chain(c, pt) for c in chains]
    return fillings, [w.numerator for w in weights], [w.denominator for w in weights]


def tableau_sum(shape, n: int, pt: QTPoint, cell_factor) -> Fraction:
    """sum over reversed tableaux T of psi_T * prod_s cell_factor(s, T(s)).

    ``cell_factor(cell, value)`` must depend only on the cell and its entry.
    """
    shape = Partition(shape)
    if len(shape) > n:
        return Fraction(0)
    fillings, wnum, wden = _chain_data(shape, n, pt)
    tnum, tden = [], []
    for s in shape.cells():
        row_n, row_d = [], []
        for v in range(1, n + 1):
            f = Fraction(cell_factor(s, v))
            row_n.append(f.numerator)
            row_d.append(f.denominator)
        tnum.append(row_n)
        tden.append(row_d)
    num, den = kernels.weighted_product_sum(fillings, wnum, wden, tnum, tden)
    return Fraction(num, den)
