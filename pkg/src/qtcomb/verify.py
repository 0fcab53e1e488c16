"""Identity suites: grids of partitions x random rational points, exact comparisons."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from qtcomb import numbers as nb
from qtcomb import wfun
from qtcomb.arith import DenominatorVanishes, QTPoint, format_rational
from qtcomb.partition import contains, is_horizontal_strip, partitions_up_to, rectangle
from qtcomb.tableau import psi_strip, psi_strip_algebraic

SUITES = ("all", "w", "binom", "bracket", "catalan", "lah", "lemmas")
MAX_REDRAWS = 50


def random_rational(rng: random.Random, bound: int = 20, exclude=(0,)) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        x = Fraction(num, den)
        if x not in exclude:
            return x


def random_point(rng: random.Random, bound: int = 20) -> QTPoint:
    # +-1 make many factors 1 - q^a t^b vanish identically
    bad = (0, 1, -1)
    return QTPoint(random_rational(rng, bound, bad), random_rational(rng, bound, bad))


def random_vector(rng: random.Random, n: int, bound: int = 20):
    return tuple(random_rational(rng, bound) for _ in range(n))


def random_exponents(rng: random.Random, n: int, lo: int = -3, hi: int = 6):
    return tuple(rng.randint(lo, hi) for _ in range(n))


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class Report:
    results: dict = field(default_factory=dict)

    def check(self, name: str) -> CheckResult:
        return self.results.setdefault(name, CheckResult(name))

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def lines(self):
        for name in sorted(self.results):
            r = self.results[name]
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {name}: passed={r.passed} failed={r.failed} skipped={r.skipped}"
            yield line
            if r.first_failure:
                yield f"  first counterexample: {r.first_failure}"


def _fmt(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, QTPoint):
        return f"q={format_rational(x.q)},t={format_rational(x.t)}"
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(v) for v in x) + ")"
    return str(x)


def record(report: Report, name: str, draw, compute, describe):
    """Draw inputs (redrawing on singular points), compare both sides, record the outcome."""
    check = report.check(name)
    for _ in range(MAX_REDRAWS):
        inputs = draw()
        try:
            lhs, rhs = compute(*inputs)
        except DenominatorVanishes:
            continue
        if lhs == rhs:
            check.passed += 1
        else:
            check.failed += 1
            if check.first_failure is None:
                check.first_failure = (
                    f"{describe(*inputs)} lhs={_fmt(lhs)} rhs={_fmt(rhs)}")
        return
    check.skipped += 1


def _strips(max_weight):
    for lam in partitions_up_to(max_weight):
        for mu in partitions_up_to(lam.size):
            if is_horizontal_strip(lam, mu):
                yield lam, mu


def suite_w(report, rng, max_weight, max_n, trials):
    for lam in partitions_up_to(max_weight):
        for n in range(1, max_n + 1):
            for _ in range(trials):
                record(report, "w: branching == tableau sum",
                       lambda: (random_point(rng), random_vector(rng, n)),
                       lambda pt, z: (wfun.w_multi_branch(z, lam, (), pt),
                                      wfun.w_multi_tableau(z, lam, pt)),
                       lambda pt, z: f"lam={lam} n={n} {_fmt(pt)} z={_fmt(z)}")
    for lam, mu in _strips(max_weight):
        for _ in range(trials):
            record(report, "w: H == psi == psi_algebraic",
                   lambda: (random_point(rng),),
                   lambda pt: ((wfun.h_factor(lam, mu, pt), psi_strip_algebraic(lam, mu, pt)),
                               (psi_strip(lam, mu, pt), psi_strip(lam, mu, pt))),
                   lambda pt: f"lam={lam} mu={mu} {_fmt(pt)}")
            record(report, "w: single-variable algebraic == combinatorial",
                   lambda: (random_point(rng), random_rational(rng)),
                   lambda pt, x: (wfun.w_single(x, lam, mu, pt),
                                  wfun.w_single_comb(x, lam, mu, pt)),
                   lambda pt, x: f"lam={lam} mu={mu} {_fmt(pt)} x={_fmt(x)}")
    small = min(max_weight, 5)
    for n in range(1, min(max_n, 3) + 1):
        shapes = list(partitions_up_to(small, max_length=n))
        for mu in shapes:
            for _ in range(trials):
                record(report, "w: principal evaluation",
                       lambda: (random_point(rng),),
                       lambda pt: (wfun.w_principal(mu, n, pt),
                                   wfun.w_multi_tableau(wfun.delta_point(mu, n, pt), mu, pt)),
                       lambda pt: f"mu={mu} n={n} {_fmt(pt)}")
                record(report, "w: constant-vector evaluation",
                       lambda: (random_point(rng), random_rational(rng)),
                       lambda pt, x: (wfun.w_xbar(mu, x, n, pt),
                                      wfun.w_multi_tableau([x * pt.t ** (n - i) for i in range(1, n + 1)], mu, pt)),
                       lambda pt, x: f"mu={mu} n={n} {_fmt(pt)} x={_fmt(x)}")
            for lam in shapes:
                if contains(lam, mu):
                    continue
                record(report, "w: vanishing at q^lam t^delta",
                       lambda: (random_point(rng),),
                       lambda pt: (wfun.w_multi_tableau(wfun.delta_point(lam, n, pt), mu, pt), 0),
                       lambda pt: f"lam={lam} mu={mu} n={n} {_fmt(pt)}")
        for k in range(1, 4):
            for _ in range(trials):
                record(report, "w: rectangular evaluation",
                       lambda: (random_point(rng), random_vector(rng, n)),
                       lambda pt, z: (wfun.w_rect(k, z, pt),
                                      wfun.w_multi_tableau(z, rectangle(k, n), pt)),
                       lambda pt, z: f"k={k} n={n} {_fmt(pt)} z={_fmt(z)}")
    suite_W(report, rng, min(max_weight, 4), min(max_n, 3), trials)


def suite_W(report, rng, max_weight, max_n, trials):
    def draw_params(n):
        pt = random_point(rng)
        return (wfun.WParams(pt, random_rational(rng), random_rational(rng)), random_vector(rng, n))

    for n in range(1, max_n + 1):
        for lam in partitions_up_to(max_weight, max_length=n):
            for _ in range(trials):
                def both(params, z):
                    values = {wfun.W_multi(p, lam, (), params, n) for p in permutations(z)}
                    base = wfun.W_multi(z, lam, (), params, n)
                    return (len(values), base), (1, base)
                record(report, "W: symmetric in its variables", lambda: draw_params(n), both,
                       lambda params, z: f"lam={lam} n={n} {_fmt(params.pt)} a={_fmt(params.a)} b={_fmt(params.b)} z={_fmt(z)}")
            for mu in partitions_up_to(lam.size):
                for _ in range(trials):
                    record(report, "W: one variable reduces to W_single",
                           lambda: draw_params(1),
                           lambda params, z: (wfun.W_multi(z, lam, mu, params, n),
                                              wfun.W_single(z[0], lam, mu, params, n)),
                           lambda params, z: f"lam={lam} mu={mu} n={n}")


def suite_binom(report, rng, max_weight, max_n, trials):
    max_weight = min(max_weight, 5)
    for n in range(1, min(max_n, 3) + 1):
        for mu in partitions_up_to(max_weight, max_length=n):
            for _ in range(trials):
                record(report, "binom: definition == tableau sum",
                       lambda: (random_point(rng), random_exponents(rng, n)),
                       lambda pt, z: (nb.binom(z, mu, n, pt), nb.binom_comb(z, mu, n, pt)),
                       lambda pt, z: f"mu={mu} n={n} {_fmt(pt)} z={z}")
            for lam in partitions_up_to(max_weight, max_length=n):
                if contains(lam, mu):
                    continue
                record(report, "binom: vanishes unless mu inside z",
                       lambda: (random_point(rng),),
                       lambda pt: (nb.binom(lam.padded(n), mu, n, pt), 0),
                       lambda pt: f"z={lam} mu={mu} n={n} {_fmt(pt)}")
        for k in range(1, 4):
            for _ in range(trials):
                record(report, "binom: rectangular product",
                       lambda: (random_point(rng), random_exponents(rng, n)),
                       lambda pt, z: (nb.binom_rect(z, k, n, pt), nb.binom(z, rectangle(k, n), n, pt)),
                       lambda pt, z: f"k={k} n={n} {_fmt(pt)} z={z}")


def suite_bracket(report, rng, max_weight, max_n, trials):
    max_weight = min(max_weight, 5)
    for n in range(1, min(max_n, 3) + 1):
        for mu in partitions_up_to(max_weight, max_length=n):
            for _ in range(trials):
                record(report, "bracket: definition == tableau sum",
                       lambda: (random_point(rng), random_exponents(rng, n), random_vector(rng, n)),
                       lambda pt, z, s: (nb.bracket(z, s, mu, n, pt), nb.bracket_comb(z, s, mu, n, pt)),
                       lambda pt, z, s: f"mu={mu} n={n} {_fmt(pt)} z={z} s={_fmt(s)}")
                record(report, "bracket: constant vector closed form",
                       lambda: (random_point(rng), rng.randint(-3, 6)),
                       lambda pt, x: (nb.bracket((x,) * n, None, mu, n, pt), nb.bracket_xbar(x, mu, n, pt)),
                       lambda pt, x: f"mu={mu} n={n} {_fmt(pt)} x={x}")
                record(report, "bracket: [z]_mu == mu! binom(z, mu)",
                       lambda: (random_point(rng), random_exponents(rng, n)),
                       lambda pt, z: (nb.bracket(z, None, mu, n, pt),
                                      nb.mu_factorial(mu, n, pt) * nb.binom(z, mu, n, pt)),
                       lambda pt, z: f"mu={mu} n={n} {_fmt(pt)} z={z}")


def suite_catalan(report, rng, max_weight, max_n, trials):
    max_weight = min(max_weight, 6)
    for n in range(1, min(max_n, 3) + 1):
        for lam in partitions_up_to(max_weight, max_length=n):
            if len(lam) != n:
                continue
            for _ in range(trials):
                record(report, "catalan: definition == tableau sum",
                       lambda: (random_point(rng),),
                       lambda pt: (nb.catalan(lam, n, pt), nb.catalan_comb(lam, n, pt)),
                       lambda pt: f"lam={lam} n={n} {_fmt(pt)}")
        for k in range(1, 4):
            for _ in range(trials):
                record(report, "catalan: rectangular product",
                       lambda: (random_point(rng),),
                       lambda pt: (nb.catalan(rectangle(k, n), n, pt), nb.catalan_rect(k, n, pt)),
                       lambda pt: f"k={k} n={n} {_fmt(pt)}")
    for n in range(1, 6):
        for _ in range(trials):
            record(report, "catalan: C_(1^n) == 1",
                   lambda: (random_point(rng),),
                   lambda pt: (nb.catalan(rectangle(1, n), n, pt), 1),
                   lambda pt: f"n={n} {_fmt(pt)}")


def suite_lah(report, rng, max_weight, max_n, trials):
    max_weight = min(max_weight, 5)
    for n in range(1, min(max_n, 3) + 1):
        for lam in partitions_up_to(max_weight, max_length=n):
            for mu in partitions_up_to(lam.size, max_length=n):
                if not contains(lam, mu):
                    continue
                for _ in range(trials):
                    record(report, "lah: explicit == tableau sum",
                           lambda: (random_point(rng),),
                           lambda pt: (nb.lah_explicit(lam, mu, n, pt), nb.lah_comb(lam, mu, n, pt)),
                           lambda pt: f"lam={lam} mu={mu} n={n} {_fmt(pt)}")
            xs = range(0, lam.size + 2)
            for _ in range(trials):
                def sides(pt):
                    for x in xs:
                        lhs, rhs = nb.lah_expansion_terms(lam, n, pt, x)
                        if lhs != rhs:
                            return (x, lhs), (x, rhs)
                    return 0, 0
                record(report, "lah: connection-coefficient expansion",
                       lambda: (random_point(rng),), sides,
                       lambda pt: f"lam={lam} n={n} {_fmt(pt)} xs=0..{lam.size + 1}")


def suite_lemmas(report, rng, max_weight, max_n, trials):
    for n in range(1, max_n + 1):
        for lam in partitions_up_to(max_weight, max_length=n):
            for _ in range(trials):
                def draw():
                    return random_point(rng), random_rational(rng), random_rational(rng)

                def sides(pt, x, y):
                    checks = wfun.factor_lemma_checks(lam, n, pt, x, y)
                    failed = sorted(k for k, v in checks.items() if not v)
                    return tuple(failed), ()
                record(report, "lemmas: cell-product identities", draw, sides,
                       lambda pt, x, y: f"lam={lam} n={n} {_fmt(pt)} x={_fmt(x)} y={_fmt(y)}")


_SUITE_FUNCS = {
    "w": suite_w,
    "binom": suite_binom,
    "bracket": suite_bracket,
    "catalan": suite_catalan,
    "lah": suite_lah,
    "lemmas": suite_lemmas,
}


def run_verify(suite: str = "all", max_weight: int = 6, max_n: int = 4, trials: int = 3,
               seed: int = 0) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = Report()
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    for name in names:
        # one generator per suite so a suite's draws do not depend on which others ran
        rng = random.Random(f"{seed}:{name}")
        _SUITE_FUNCS[name](report, rng, max_weight, max_n, trials)
    return report
