from fractions import Fraction

import pytest

import oracles
from qtcomb import wfun
from qtcomb.arith import QTPoint
from qtcomb.partition import Partition, cell_stats, is_horizontal_strip, partitions_up_to
from qtcomb.verify import random_rational, random_vector


@pytest.mark.parametrize("lam", list(partitions_up_to(4)), ids=str)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_tableau_route_against_brute_force(lam, n, rng):
    pt, z = oracles.generic_point(rng), random_vector(rng, n)
    ref = oracles.w_tableau_oracle(z, lam, pt.q, pt.t)
    assert wfun.w_multi_tableau(z, lam, pt) == ref
    assert wfun.w_multi_branch(z, lam, (), pt) == ref


def test_empty_and_one_box(pt):
    x = Fraction(3)
    assert wfun.w_single(x, (), (), pt) == 1
    # w_(1)(x) = q^{-1} (1 - x) from the one-cell tableau
    assert wfun.w_single(x, (1,), (), pt) == (1 - x) / pt.q
    assert wfun.w_multi_branch([x], (1,), (), pt) == (1 - x) / pt.q


def test_non_strip_single_is_zero(pt):
    assert wfun.w_single(2, (2, 2), (), pt) == 0


def test_single_variable_routes(points, rng):
    for pt in points:
        for lam in partitions_up_to(5):
            for mu in partitions_up_to(lam.size):
                if is_horizontal_strip(lam, mu):
                    x = random_rational(rng)
                    assert wfun.w_single(x, lam, mu, pt) == wfun.w_single_comb(x, lam, mu, pt)


def test_single_at_x_equal_one_does_not_raise(pt):
    # (1/x; q, t)_mu vanishes at x = 1; the cancelled quotient stays finite
    assert wfun.w_single(1, (2, 1), (1, 1), pt) == wfun.w_single_comb(1, (2, 1), (1, 1), pt)


def test_h_factor_needs_strip(pt):
    with pytest.raises(wfun.NotAStrip):
        wfun.h_factor((2, 2), (), pt)


def test_delta_point(pt):
    assert wfun.delta_point((2, 0), 2, pt) == (pt.q ** 2 * pt.t, Fraction(1))
    with pytest.raises(ValueError):
        wfun.delta_point((1, 1, 1), 2, pt)


def test_vanishing_small(pt):
    assert wfun.w_multi_tableau(wfun.delta_point((1,), 1, pt), (2,), pt) == 0
    assert wfun.w_multi_branch(wfun.delta_point((2,), 2, pt), (1, 1), (), pt) == 0
    assert wfun.w_multi_branch(wfun.delta_point((1, 1), 2, pt), (1, 1), (), pt) != 0


def test_branch_is_symmetric(rng):
    pt = oracles.generic_point(rng)
    z = random_vector(rng, 3)
    lam = Partition((2, 1))
    vals = {wfun.w_multi_branch(p, lam, (), pt) for p in [z, z[::-1], (z[1], z[0], z[2])]}
    assert len(vals) == 1


def test_variables_must_be_nonzero(pt):
    with pytest.raises(ValueError):
        wfun.w_multi_branch([0, 1], (1,), (), pt)
    with pytest.raises(ValueError):
        wfun.w_single(0, (1,), (), pt)


def test_W_single_small(rng):
    params = wfun.WParams(oracles.generic_point(rng), random_rational(rng), random_rational(rng))
    assert wfun.W_single(2, (), (), params, 1) == 1
    assert wfun.W_single(2, (2, 2), (), params, 2) == 0
    with pytest.raises(ValueError):
        wfun.W_single(2, (1, 1), (), params, 1)


@pytest.mark.parametrize("lam,mu", [((1,), ()), ((2,), ()), ((2, 1), (1,)), ((3, 1), (2,))])
def test_W_limit_gives_w(lam, mu):
    # w = lim_s s^d lim_a W(x; q, t, a, a s); take a tiny and s large
    pt = QTPoint(Fraction(1, 2), Fraction(1, 3))
    x, n = Fraction(3, 7), 3
    d = sum(lam) - sum(mu)
    target = wfun.w_single(x, lam, mu, pt)
    a = Fraction(1, 10 ** 60)
    gaps = []
    for s in (10 ** 6, 10 ** 12):
        val = wfun.W_single(x, lam, mu, wfun.WParams(pt, a, a * s), n) * s ** d
        gaps.append(abs(val / target - 1))
    assert gaps[1] < 1e-9
    assert gaps[1] < gaps[0] * 1e-4


def test_lemmas_pass(rng):
    for n in range(1, 4):
        for lam in partitions_up_to(5, max_length=n):
            pt = oracles.generic_point(rng)
            checks = wfun.factor_lemma_checks(lam, n, pt, random_rational(rng), random_rational(rng))
            assert all(checks.values()), checks


def test_lemmas_detect_bad_colength(rng):
    def off_by_one(lam, s):
        st = cell_stats(lam, s)
        return st._replace(arm_colength=st.arm_colength + 1)

    pt = oracles.generic_point(rng)
    checks = wfun.factor_lemma_checks((2, 1), 2, pt, Fraction(5, 3), Fraction(2, 7), stats=off_by_one)
    assert not checks["a"] and not checks["c"]


def test_lemma_length_check(pt):
    with pytest.raises(ValueError):
        wfun.factor_lemma_checks((1, 1, 1), 2, pt, 2, 3)
