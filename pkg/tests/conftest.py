"""Shared towers and random generators for the test-suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from valx import (
    AboveAll,
    PAdicRationals,
    PairOfDefinition,
    Poly,
    QuadIrr,
    RationalFunctionField,
    RationalPoint,
    Tower,
    value,
)


def padic_cubic(p: int = 3) -> Tower:
    """(Q, nu_p) with a root of x^p - 1/p, the root having value -1/p."""
    T = Tower(PAdicRationals(p), henselian=True)
    T.construct_extension("a", [Fraction(-1, p)] + [0] * (p - 1) + [1], value(Fraction(-1, p)))
    return T


def as_kummer(p: int = 3) -> Tower:
    """F_p(t) with an Artin-Schreier root a1 and a square root a2 of 1/t."""
    T = Tower(RationalFunctionField(p, ["t"]), henselian=True)
    t = T.gen("t")
    T.construct_extension("a1", [-1 / t, -1] + [0] * (p - 2) + [1], value(Fraction(-1, p)))
    T.construct_extension("a2", [-1 / t, 0, 1], value(Fraction(-1, 2)))
    return T


def lex_nonic() -> Tower:
    """F_3(u, v) with the lex valuation and a root of x^9 + u x^3 + v."""
    T = Tower(RationalFunctionField(3, ["u", "v"]), henselian=True)
    u, v = T.gen("u"), T.gen("v")
    T.construct_extension("a", [v, 0, 0, u, 0, 0, 0, 0, 0, 1], value(0, Fraction(1, 9)))
    return T


def artin_schreier(p: int = 3) -> Tower:
    T = Tower(RationalFunctionField(p, ["t"]), henselian=True)
    t = T.gen("t")
    T.construct_extension("a1", [-1 / t, -1] + [0] * (p - 2) + [1], value(Fraction(-1, p)))
    return T


def cubic_pair(p: int = 3, gamma=Fraction(1, 5)) -> PairOfDefinition:
    T = padic_cubic(p)
    return PairOfDefinition(T.gen("a"), RationalPoint((Fraction(gamma),)))


def kummer_pair(spec=None) -> PairOfDefinition:
    T = as_kummer(3)
    spec = spec or QuadIrr(Fraction(0), Fraction(1, 4), 2)
    return PairOfDefinition(T.gen("a1") / T.gen("a2"), spec)


def nonic_pair(spec=None) -> PairOfDefinition:
    T = lex_nonic()
    spec = spec or QuadIrr(Fraction(0), Fraction(1, 3), 3, (Fraction(0),))
    return PairOfDefinition(T.gen("a"), spec)


# random data ---------------------------------------------------------------

def rand_rational(rng: random.Random, p: int) -> Fraction:
    """Small rationals with occasional powers of p in numerator or denominator."""
    num = rng.randint(-9, 9)
    den = rng.randint(1, 5)
    k = rng.randint(-2, 3)
    return Fraction(num * p ** max(k, 0), den * p ** max(-k, 0))


def rand_base(rng: random.Random, T: Tower):
    """A random base-field element, zero with probability about 1/8."""
    B = T.base
    if isinstance(B, PAdicRationals):
        return T.element(rand_rational(rng, B.p))
    if rng.random() < 0.125:
        return T.element(0)
    names = B.names
    terms = {}
    for _ in range(rng.randint(1, 2)):
        exps = tuple(rng.randint(-2, 2) for _ in names)
        terms[exps] = rng.randint(1, B.p - 1)
    e = T.zero()
    for exps, c in terms.items():
        e = e + T.element(B.monomial(exps, c))
    return e


def rand_element(rng: random.Random, T: Tower, level: int | None = None):
    """sum of a few monomials in the generators with random base coefficients."""
    k = T.top if level is None else level
    gens = [T.gen(T.levels[j].name) for j in range(1, k + 1)]
    e = T.zero(k)
    for _ in range(rng.randint(1, 3)):
        m = rand_base(rng, T)
        for g, j in zip(gens, range(1, k + 1)):
            m = m * g ** rng.randrange(T.levels[j].degree)
        e = e + m
    return e


def rand_poly(rng: random.Random, T: Tower, max_deg: int, level: int = 0, min_deg: int = 0):
    deg = rng.randint(min_deg, max_deg)
    cs = [rand_base(rng, T) if level == 0 else rand_element(rng, T, level) for _ in range(deg)]
    lead = rand_base(rng, T)
    while lead.is_zero():
        lead = rand_base(rng, T)
    return Poly.from_coeffs(T, cs + [lead], level=level)


def spec_variants(rank: int, rational, quad):
    """One spec of each kind for a tower of the given rank."""
    return [RationalPoint(tuple(Fraction(c) for c in rational)), quad, AboveAll(rank)]


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def cubic3():
    return padic_cubic(3)


@pytest.fixture(scope="session")
def kummer():
    return as_kummer(3)


@pytest.fixture(scope="session")
def nonic():
    return lex_nonic()


# acceptance summary -------------------------------------------------------------

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
