"""Multiple qt-binomial coefficients, bracket function, Catalan and Lah numbers.

Each sequence has a definitional route (through w evaluated by the branching
recursion or a closed product) and a combinatorial route (reversed tableau
sums).  Exponent vectors z are integer tuples so that q^z stays rational;
the ``*_at`` variants take the multiplicative point q^z t^delta(n) directly.
"""
from __future__ import annotations

from fractions import Fraction

from qtcomb.arith import Product, QTPoint, as_rational
from qtcomb.partition import Partition, cell_stats, contains, partitions_up_to
from qtcomb.tableau import tableau_sum
from qtcomb.wfun import _pair_product, delta_point, w_multi_branch

ZERO = Fraction(0)
ONE = Fraction(1)


def _exponents(z, n: int):
    z = tuple(int(v) for v in z)
    if len(z) != n:
        raise ValueError(f"exponent vector must have length n={n}")
    return z


def _scales(s, n: int):
    if s is None:
        return (ONE,) * n
    s = tuple(as_rational(v) for v in s)
    if len(s) != n or any(v == 0 for v in s):
        raise ValueError(f"scale vector must have n={n} nonzero entries")
    return s


def _check_length(mu: Partition, n: int):
    if len(mu) > n:
        raise ValueError(f"{mu} has more than {n} parts")


def _binom_prefactor(mu: Partition, n: int, pt: QTPoint) -> Product:
    M = mu.padded(n)
    prod = Product(pt)
    prod.mul_mono(mu.size, 2 * mu.n_stat() + (1 - n) * mu.size)
    prod.div_qt_poch(1, 1, n - 1, M)
    _pair_product(prod, M, n, lambda i, j: ((1, 1, j - i), (-1, 1, j - i - 1)))
    return prod


def binom_at(point, mu, n: int, pt: QTPoint) -> Fraction:
    """Multiple qt-binomial with w_mu evaluated at an arbitrary point of length n."""
    mu = Partition(mu)
    point = tuple(as_rational(v) for v in point)
    if len(point) != n:
        raise ValueError("point must have length n")
    if len(mu) > n:
        return ZERO
    prod = _binom_prefactor(mu, n, pt)
    prod.mul(w_multi_branch(point, mu, (), pt))
    return prod.value()


def binom(z, mu, n: int, pt: QTPoint) -> Fraction:
    """Multiple qt-binomial coefficient for an integer exponent vector z."""
    z = _exponents(z, n)
    return binom_at(delta_point(z, n, pt), mu, n, pt)


def _hook_denominator(prod: Product, mu: Partition):
    for s in mu.cells():
        st = cell_stats(mu, s)
        prod.div_factor(st.arm + 1, st.leg)


def binom_comb(z, mu, n: int, pt: QTPoint) -> Fraction:
    """Tableau-sum formula for the multiple qt-binomial coefficient."""
    z = _exponents(z, n)
    mu = Partition(mu)
    if len(mu) > n:
        return ZERO
    prod = Product(pt)
    _hook_denominator(prod, mu)

    def factor(s, v):
        a_co, l_co = s.col - 1, s.row - 1
        return pt.mono(0, l_co + 1 - v) * (1 - pt.mono(z[v - 1] - a_co, l_co))

    prod.mul(tableau_sum(mu, n, pt, factor))
    return prod.value()


def binom_rect(z, k: int, n: int, pt: QTPoint) -> Fraction:
    """Multiple qt-binomial for the rectangle k^n as a product of one-dimensional quotients."""
    z = _exponents(z, n)
    prod = Product(pt)
    for i in range(1, n + 1):
        prod.mul_poch(1, 1 - k + z[i - 1], n - i, k)
        prod.div_poch(1, 1, n - i, k)
    return prod.value()


def bracket_at(point, mu, n: int, pt: QTPoint) -> Fraction:
    """Bracket function with w_mu evaluated at an arbitrary point of length n."""
    mu = Partition(mu)
    point = tuple(as_rational(v) for v in point)
    if len(point) != n:
        raise ValueError("point must have length n")
    if len(mu) > n:
        return ZERO
    M = mu.padded(n)
    prod = Product(pt)
    prod.mul_mono(mu.size, 0)
    for i in range(1, n + 1):
        prod.div_factor(1, n - i, power=M[i - 1])
    _pair_product(prod, M, n, lambda i, j: ((1, 0, j - i), (-1, 0, j - i + 1)))
    prod.mul(w_multi_branch(point, mu, (), pt))
    return prod.value()


def bracket(z, s, mu, n: int, pt: QTPoint) -> Fraction:
    """qt-factorial (bracket) function [z, s, n, q, t]_mu; zero when len(mu) > n."""
    z = _exponents(z, n)
    s = _scales(s, n)
    return bracket_at(delta_point(z, n, pt, s), mu, n, pt)


def bracket_comb(z, s, mu, n: int, pt: QTPoint) -> Fraction:
    """Tableau-sum formula for the bracket function."""
    z = _exponents(z, n)
    s = _scales(s, n)
    mu = Partition(mu)
    if len(mu) > n:
        return ZERO
    prod = Product(pt)
    for cell in mu.cells():
        st = cell_stats(mu, cell)
        prod.div_factor(1, n - 1 - st.leg_colength)
        prod.mul_factor(st.arm, st.leg + 1)
        prod.div_factor(st.arm_colength, -st.leg_colength + n)

    def factor(cell, v):
        a_co, l_co = cell.col - 1, cell.row - 1
        return pt.mono(0, -l_co + n - v) * (1 - s[v - 1] * pt.mono(z[v - 1] - a_co, l_co))

    prod.mul(tableau_sum(mu, n, pt, factor))
    return prod.value()


def bracket_xbar(x: int, mu, n: int, pt: QTPoint) -> Fraction:
    """[x, ..., x]_mu = prod_i (q^x t^{i-1}; 1/q)_{mu_i} / (1 - q t^{n-i})^{mu_i}."""
    mu = Partition(mu)
    _check_length(mu, n)
    M = mu.padded(n)
    prod = Product(pt)
    for i in range(1, n + 1):
        for k in range(M[i - 1]):
            prod.mul_factor(x - k, i - 1)
        prod.div_factor(1, n - i, power=M[i - 1])
    return prod.value()


def qt_number(z, n: int, pt: QTPoint) -> Fraction:
    """[z] = prod_i (1 - q^{z_i} t^{n-i}) / (1 - q t^{n-i})."""
    z = _exponents(z, n)
    prod = Product(pt)
    for i in range(1, n + 1):
        prod.mul_factor(z[i - 1], n - i)
        prod.div_factor(1, n - i)
    return prod.value()


def mu_factorial(mu, n: int, pt: QTPoint) -> Fraction:
    """mu! = [mu]_mu in closed double-product form."""
    mu = Partition(mu)
    _check_length(mu, n)
    M = mu.padded(n)
    prod = Product(pt)
    prod.mul_mono(0, -2 * mu.n_stat() - (1 - n) * mu.size)
    for i in range(1, n + 1):
        prod.mul_poch(1, 1, n - i, M[i - 1])
        prod.div_factor(1, n - i, power=M[i - 1])
    _pair_product(prod, M, n, lambda i, j: (
        (1, 0, j - i), (-1, 0, j - i + 1), (1, 1, j - i - 1), (-1, 1, j - i)))
    return prod.value()


def _catalan_shape(lam, n: int) -> Partition:
    lam = Partition(lam)
    if len(lam) != n:
        raise ValueError(f"Catalan numbers need an n-part partition; got {lam} with n={n}")
    return lam


def catalan(lam, n: int, pt: QTPoint) -> Fraction:
    """C_lam = binom(2 lam, lam) / [lam + 1]."""
    lam = _catalan_shape(lam, n)
    prod = Product(pt, binom([2 * p for p in lam], lam, n, pt))
    prod.div(qt_number([p + 1 for p in lam], n, pt))
    return prod.value()


def catalan_comb(lam, n: int, pt: QTPoint) -> Fraction:
    """Tableau-sum formula for C_lam (prefactor over the column 1^n and over lam)."""
    lam = _catalan_shape(lam, n)
    prod = Product(pt)
    for i in range(1, n + 1):
        # cell (i, 1) of the single column: a' = 0, l' = i - 1
        prod.mul_factor(1, n - i)
        prod.div_factor(1 + lam[i - 1], n - i)
    prod.mul(binom_comb([2 * p for p in lam], lam, n, pt))
    return prod.value()


def catalan_rect(k: int, n: int, pt: QTPoint) -> Fraction:
    """C_{k^n} = prod_i (q^{2+k} t^{n-i}; q)_{k-1} / (q^2 t^{n-i}; q)_{k-1}."""
    prod = Product(pt)
    for i in range(1, n + 1):
        prod.mul_poch(1, 2 + k, n - i, k - 1)
        prod.div_poch(1, 2, n - i, k - 1)
    return prod.value()


def rising_bracket(x: int, lam, n: int, pt: QTPoint) -> Fraction:
    """[x]^lam: the bracket of the constant vector at (1/q, 1/t)."""
    return bracket_xbar(x, lam, n, pt.reciprocal())


def lah_explicit(lam, mu, n: int, pt: QTPoint) -> Fraction:
    """Closed form of the multiple qt-Lah number L(lam, mu); zero unless mu is inside lam.

    (t^{2(n-1)})_lam / (t^{2(n-1)})_mu is taken with common factors cancelled,
    which keeps n = 1 finite where both Pochhammers vanish.
    """
    lam, mu = Partition(lam), Partition(mu)
    _check_length(lam, n)
    if not contains(lam, mu):
        return ZERO
    L, M = lam.padded(n), mu.padded(n)
    sign = -1 if (lam.size + mu.size) % 2 else 1
    prod = Product(pt, sign)
    prod.mul_mono(-lam.size + mu.size, lam.n_stat() - mu.n_stat())
    for i in range(1, n + 1):
        prod.div_factor(1, n - i, power=L[i - 1] - M[i - 1])
        prod.mul_poch(1, M[i - 1], 2 * (n - 1) + 1 - i, L[i - 1] - M[i - 1])
    prod.mul(binom(L, mu, n, pt))
    return prod.value()


def lah_comb(lam, mu, n: int, pt: QTPoint, stats=cell_stats) -> Fraction:
    """Tableau-sum formula for L(lam, mu).

    ``stats`` supplies the cell statistics and exists so tests can perturb it.
    """
    lam, mu = Partition(lam), Partition(mu)
    _check_length(lam, n)
    if not contains(lam, mu):
        return ZERO
    L = lam.padded(n)
    prod = Product(pt)
    for i in range(1, len(lam) + 1):
        for j in range(mu.part(i) + 1, lam[i - 1] + 1):
            st = stats(lam, (i, j))
            prod.mul_mono(-1, st.leg_colength, -1)
            prod.mul_factor(st.arm_colength, 2 * (n - 1) - st.leg_colength)
            prod.div_factor(1, n - 1 - st.leg_colength)
    for s in mu.cells():
        st = stats(mu, s)
        prod.div_factor(st.arm + 1, st.leg)

    def factor(cell, v):
        st = stats(mu, cell)
        return pt.mono(0, st.leg_colength + 1 - v) * (
            1 - pt.mono(L[v - 1] - st.arm_colength, st.leg_colength))

    prod.mul(tableau_sum(mu, n, pt, factor))
    return prod.value()


def lah_expansion_terms(lam, n: int, pt: QTPoint, x: int):
    """Both sides of the Lah connection identity at one integer x: ([x]^lam, sum over mu)."""
    lam = Partition(lam)
    _check_length(lam, n)
    lhs = rising_bracket(x, lam, n, pt)
    rhs = ZERO
    for mu in partitions_up_to(lam.size, max_length=n):
        if not contains(lam, mu):
            continue
        prod = Product(pt, -1 if mu.size % 2 else 1)
        prod.mul_mono(-mu.size + 2 * mu.n_conj_stat(), -mu.n_stat())
        prod.mul(lah_explicit(lam, mu, n, pt))
        prod.mul(bracket_xbar(x, mu, n, pt))
        rhs += prod.value()
    return lhs, rhs


def lah_expansion_check(lam, n: int, pt: QTPoint, xs) -> bool:
    xs = list(xs)
    if not xs:
        raise ValueError("xs must be nonempty")
    for x in xs:
        lhs, rhs = lah_expansion_terms(lam, n, pt, x)
        if lhs != rhs:
            return False
    return True


__all__ = [
    "binom", "binom_at", "binom_comb", "binom_rect", "bracket", "bracket_at", "bracket_comb",
    "bracket_xbar", "qt_number", "mu_factorial", "catalan", "catalan_comb", "catalan_rect",
    "rising_bracket", "lah_explicit", "lah_comb", "lah_expansion_terms", "lah_expansion_check",
]
