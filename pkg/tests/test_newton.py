import random
from fractions import Fraction as F

import pytest
from conftest import artin_schreier, as_kummer, lex_nonic, padic_cubic, rand_poly
from hypothesis import given
from hypothesis import strategies as st

from valx import INF, PAdicRationals, Poly, RationalFunctionField, Tower, conjugate_differences, kras, newton_polygon, value
from valx.errors import DegreeOne, Inseparable, NotARoot
from valx.newton import points_polygon
from valx.polynomial import shift
from valx.valgroup import sort_values


def brute_root_values(vals):
    """Root values from the index range where i -> v_i + i*s attains its minimum."""
    pts = [(i, v) for i, v in enumerate(vals) if v is not INF]
    cands = {(v1 - v2).divide(i2 - i1) for (i1, v1) in pts for (i2, v2) in pts if i1 < i2}
    out = []
    for s in cands:
        ws = [(v + s * i, i) for i, v in pts]
        m = min(w for w, _ in ws)
        idx = [i for w, i in ws if w == m]
        out.extend([s] * (max(idx) - min(idx)))
    return sort_values(out)


def px(T, coeffs):
    return Poly.from_coeffs(T, coeffs)


def test_square_root_of_p():
    T = Tower(PAdicRationals(5))
    poly = newton_polygon(px(T, [-5, 0, 1]))
    assert poly.segments == ((value(F(1, 2)), 2),)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_artin_schreier_polygon(p):
    T = Tower(RationalFunctionField(p, ["t"]))
    t = T.gen("t")
    poly = newton_polygon(px(T, [-1 / t, -1] + [0] * (p - 2) + [1]))
    assert poly.segments == ((value(F(-1, p)), p),)


def test_cubic_polygon():
    T = Tower(PAdicRationals(3))
    assert newton_polygon(px(T, [F(-1, 3), 0, 0, 1])).segments == ((value(F(-1, 3)), 3),)


def test_zero_roots_are_counted_apart():
    T = Tower(PAdicRationals(3))
    poly = newton_polygon(px(T, [0, 0, 3, 1]))
    assert poly.ord0 == 2
    assert poly.root_values() == [value(1)]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cubic_conjugate_differences(p):
    a = padic_cubic(p).gen("a")
    d = conjugate_differences(a)
    # nu(a - zeta a) = nu(a) + nu(1 - zeta) = -1/p + 1/(p-1)
    expect = value(F(1, p - 1) - F(1, p))
    assert d.values == (expect,) * (p - 1)
    assert kras(a) == expect


def test_square_root_differences_by_direct_expansion(kummer):
    a2 = kummer.gen("a2")
    # g(a2 + y)/y = y + 2*a2, one root of value nu(2*a2) = -1/2
    d = conjugate_differences(a2, 1)
    assert d.values == (value(F(-1, 2)),)
    assert (2 * a2).value() == value(F(-1, 2))


@pytest.mark.parametrize("p", [3, 5])
def test_artin_schreier_conjugates_differ_by_units(p):
    a1 = artin_schreier(p).gen("a1")
    d = conjugate_differences(a1)
    assert d.values == (value(0),) * (p - 1)
    assert kras(a1) == value(0)


def test_lex_separable_subgenerator(nonic):
    b = nonic.gen("a") ** 3
    assert len(nonic.minimal_polynomial(b)) == 4
    assert kras(b) == value(F(1, 2), 0)
    assert b.value() == value(0, F(1, 3))


def test_preconditions(nonic, cubic3):
    with pytest.raises(Inseparable):
        conjugate_differences(nonic.gen("a"))
    with pytest.raises(DegreeOne):
        kras(cubic3.element(2))
    a = cubic3.gen("a")
    with pytest.raises(NotARoot):
        conjugate_differences(a, 0, px(cubic3, [F(-1, 9), 0, 0, 1]))


def test_kras_shrinks_over_larger_base(kummer):
    a = kummer.gen("a1") / kummer.gen("a2")
    k0 = kras(a, 0)
    k1 = kras(a, 1)
    assert k1 <= k0
    assert len(conjugate_differences(a, 1)) == 1
    assert len(conjugate_differences(a, 0)) == 5


# properties --------------------------------------------------------------------

value_lists = st.lists(st.one_of(st.just(INF), st.fractions(-10, 10, max_denominator=6).map(value)),
                       min_size=2, max_size=9).filter(lambda vs: vs[-1] is not INF)


@given(value_lists)
def test_polygon_matches_brute_force(vals):
    if all(v is INF for v in vals[:-1]):
        return
    poly = points_polygon(vals)
    assert sort_values(poly.root_values()) == brute_root_values(vals)


@given(value_lists)
def test_multiplicities_and_product_of_roots(vals):
    if all(v is INF for v in vals[:-1]):
        return
    poly = points_polygon(vals)
    n = len(vals) - 1
    assert sum(m for _, m in poly.segments) == n - poly.ord0
    slopes = [s for s, _ in poly.segments]
    assert all(x < y for x, y in zip(slopes, slopes[1:]))
    total = value(0)
    for s, m in poly.segments:
        total = total + s * m
    assert total == vals[poly.ord0] - vals[n]


@pytest.mark.parametrize("make", [padic_cubic, as_kummer, lex_nonic], ids=["Q3(a)", "F3(t)(a1,a2)", "F3(u,v)(a)"])
def test_polygon_of_tower_polynomials(make):
    T = make()
    rng = random.Random(9)
    for _ in range(30):
        f = rand_poly(rng, T, 8, min_deg=1)
        vals = [c.value() for c in f.coeffs()]
        if all(v is INF for v in vals[:-1]):
            continue
        assert sort_values(newton_polygon(f).root_values()) == brute_root_values(vals)


def test_root_values_of_explicit_products(cubic3):
    a = cubic3.gen("a")
    x = Poly.x(cubic3)
    roots = [a, 3 * a, cubic3.element(F(1, 9)), a * a + 27]
    f = Poly.const(cubic3, 1)
    for r in roots:
        f = f * (x - r)
    assert sort_values(newton_polygon(f).root_values()) == sort_values([r.value() for r in roots])
    g = shift(f, a)
    assert g.coeff(0).is_zero()
