"""Partitions, cells and the interlacing relation."""
from __future__ import annotations

from collections import namedtuple
from math import comb

from qtcomb import kernels

Cell = namedtuple("Cell", ["row", "col"])
CellStats = namedtuple("CellStats", ["arm", "leg", "arm_colength", "leg_colength"])


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros are trimmed)."""

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        if isinstance(parts, str):
            return cls.parse(parts)
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls(())
        return cls(int(p) for p in text.strip("()[]").split(",") if p.strip())

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(str(p) for p in self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part lookup with implicit zeros."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self):
        return [Cell(i, j) for i, row in enumerate(self, start=1) for j in range(1, row + 1)]

    def n_stat(self) -> int:
        """n(lam) = sum (i-1) lam_i."""
        return sum(i * p for i, p in enumerate(self))

    def n_conj_stat(self) -> int:
        """n(lam') = sum binom(lam_i, 2)."""
        return sum(comb(p, 2) for p in self)


def conjugate(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam, mu) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def is_horizontal_strip(lam, mu) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... (mu interlaces lam)."""
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam) or len(lam) > len(mu) + 1:
        return False
    for i in range(1, len(lam) + 1):
        if not lam.part(i) >= mu.part(i) >= lam.part(i + 1):
            return False
    return True


def cell_stats(lam, s) -> CellStats:
    lam = Partition(lam)
    i, j = s
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {tuple(s)} is not in {lam}")
    leg = sum(1 for p in lam[i:] if p >= j)
    return CellStats(lam[i - 1] - j, leg, j - 1, i - 1)


def interlacing_predecessors(lam, cap=None) -> list:
    """All nu with nu < lam (and cap < nu when cap is given), in lexicographic order."""
    lam = Partition(lam)
    length = len(lam)
    lo = [lam.part(i + 1) for i in range(1, length + 1)]
    hi = list(lam)
    if cap is not None:
        cap = Partition(cap)
        if len(cap) > length:
            return []
        lo = [max(a, cap.part(i)) for i, a in enumerate(lo, start=1)]
        hi = [min(a, cap.part(i - 1)) if i > 1 else a for i, a in enumerate(hi, start=1)]
    return sorted(Partition(nu) for nu in kernels.box_product(lo, hi))


def predecessors_containing(lam, mu) -> list:
    """All nu with nu < lam and mu contained in nu."""
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam):
        return []
    lo = [max(lam.part(i + 1), mu.part(i)) for i in range(1, len(lam) + 1)]
    return sorted(Partition(nu) for nu in kernels.box_product(lo, list(lam)))


def partitions_of(weight: int, max_part: int | None = None, max_length: int | None = None):
    """Partitions of ``weight`` in reverse lexicographic order."""
    if max_part is None:
        max_part = weight
    if weight == 0:
        yield Partition(())
        return
    if max_length == 0:
        return
    for first in range(min(weight, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions_of(weight - first, first, rest_len):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(max_weight: int, max_length: int | None = None):
    for w in range(max_weight + 1):
        yield from partitions_of(w, max_length=max_length)


def rectangle(k: int, n: int) -> Partition:
    return Partition((k,) * n)
