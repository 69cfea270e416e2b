import random
from fractions import Fraction as F

import pytest
from conftest import artin_schreier, as_kummer, padic_cubic, rand_element, rand_poly

from valx import PAdicRationals, Poly, RationalFunctionField, Tower, gcd, is_separable, q_expand, taylor_expand
from valx.errors import NonMonicDivisor, NonMonicQ
from valx.polynomial import DEG_ZERO, reconstruct_q, reconstruct_taylor, shift


def px(T, coeffs, level=None):
    return Poly.from_coeffs(T, coeffs, level=level)


def composed(f: Poly, a) -> list:
    """f(y + a) by Horner composition with the linear polynomial y + a."""
    T = f.tower
    y_plus_a = Poly.x(T) + Poly.const(T, a)
    acc = Poly.const(T, 0)
    for c in reversed(f.coeffs()):
        acc = acc * y_plus_a + Poly.const(T, c)
    n = f.degree + 1
    return [acc.coeff(i) for i in range(n)]


def test_zero_polynomial_degree():
    T = Tower(PAdicRationals(3))
    assert Poly(T, 0, []).degree == DEG_ZERO
    assert (Poly.x(T) - Poly.x(T)).is_zero()


def test_taylor_of_square_at_one():
    T = Tower(PAdicRationals(3))
    assert taylor_expand(px(T, [0, 0, 1]), 1) == [T.element(c) for c in (1, 2, 1)]


def test_taylor_of_artin_schreier_polynomial():
    T = artin_schreier(3)
    a, t = T.gen("a1"), T.gen("t")
    cs = taylor_expand(px(T, [-1 / t, -1, 0, 1]), a)
    assert [c.lower() for c in cs] == [T.element(c) for c in (0, -1, 0, 1)]


def test_taylor_of_cubic(cubic3):
    a = cubic3.gen("a")
    cs = taylor_expand(px(cubic3, [F(-1, 3), 0, 0, 1]), a)
    assert cs == [cubic3.zero(1), 3 * a * a, 3 * a, cubic3.one(1)]


def test_q_expand_round_trip_small():
    T = Tower(RationalFunctionField(3, ["t"]))
    x, t = Poly.x(T), T.gen("t")
    Q = x * x - t
    f = Q * Q + x * Q + 1
    assert q_expand(f, Q) == [Poly.const(T, 1), x, Poly.const(T, 1)]


def test_q_expand_of_x4():
    T = Tower(RationalFunctionField(3, ["t"]))
    x, t = Poly.x(T), T.gen("t")
    parts = q_expand(x ** 4, x * x - t)
    assert parts == [Poly.const(T, t * t), Poly.const(T, 2 * t), Poly.const(T, 1)]


def test_q_expand_linear_is_taylor(cubic3):
    rng = random.Random(5)
    b = cubic3.element(F(2, 9))
    Q = Poly.x(cubic3) - Poly.const(cubic3, b)
    for _ in range(10):
        f = rand_poly(rng, cubic3, 6)
        assert [p.coeff(0) for p in q_expand(f, Q)] == [c for c in taylor_expand(f, b)][: len(q_expand(f, Q))]


def test_q_expand_needs_monic():
    T = Tower(PAdicRationals(3))
    with pytest.raises(NonMonicQ):
        q_expand(px(T, [1, 1, 1]), px(T, [1, 2]))


def test_divmod():
    T = Tower(PAdicRationals(3))
    q, r = px(T, [1, 0, 0, 1]).divmod(px(T, [-1, 1]))
    assert q == px(T, [1, 1, 1]) and r == Poly.const(T, 2)
    with pytest.raises(NonMonicDivisor):
        px(T, [1, 1]).divmod(px(T, [1, 2]))


def test_separability():
    K = RationalFunctionField(3, ["t"])
    T = Tower(K)
    t = T.gen("t")
    assert not is_separable(px(T, [-t, 0, 0, 1]))
    assert is_separable(px(T, [-1 / t, -1, 0, 1]))


def test_gcd_of_products(cubic3):
    x = Poly.x(cubic3)
    a = cubic3.gen("a")
    g = gcd((x - a) * (x + 1), (x - a) * (x - 2))
    assert g == x - a


# properties --------------------------------------------------------------------

@pytest.mark.parametrize("make", [padic_cubic, as_kummer], ids=["Q3(a)", "F3(t)(a1,a2)"])
def test_taylor_matches_composition_oracle(make):
    T = make()
    rng = random.Random(3)
    for _ in range(20):
        f = rand_poly(rng, T, 6)
        a = rand_element(rng, T)
        cs = taylor_expand(f, a)
        assert cs == composed(f, a)
        assert reconstruct_taylor(cs, a) == f
        assert shift(f, a)(T.zero()) == f(a)


@pytest.mark.parametrize("make", [padic_cubic, as_kummer], ids=["Q3(a)", "F3(t)(a1,a2)"])
def test_q_expansion_round_trip(make):
    T = make()
    rng = random.Random(4)
    for _ in range(20):
        Q = rand_poly(rng, T, 4, min_deg=1).monic()
        f = rand_poly(rng, T, 12)
        parts = q_expand(f, Q)
        assert all(p.degree < Q.degree for p in parts)
        assert reconstruct_q(parts, Q) == f


@pytest.mark.parametrize("make", [padic_cubic, as_kummer], ids=["Q3(a)", "F3(t)(a1,a2)"])
def test_division_identity(make):
    T = make()
    rng = random.Random(6)
    for _ in range(20):
        g = rand_poly(rng, T, 4, level=T.top, min_deg=1).monic()
        f = rand_poly(rng, T, 8, level=T.top)
        q, r = f.divmod(g)
        assert q * g + r == f and r.degree < g.degree


def test_gcd_divides_both(rng, cubic3):
    for _ in range(20):
        h = rand_poly(rng, cubic3, 2, min_deg=1)
        f = h * rand_poly(rng, cubic3, 3)
        g = h * rand_poly(rng, cubic3, 3)
        d = gcd(f, g)
        assert (f % d).is_zero() and (g % d).is_zero()
        assert (d % h.monic()).is_zero()
