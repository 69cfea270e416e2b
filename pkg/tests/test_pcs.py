from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valx import (
    PairOfDefinition,
    PcsPrefix,
    Poly,
    RationalFunctionField,
    RationalPoint,
    Tower,
    is_limit_at_prefix,
    limit_root_witness,
    pair_limit_check,
    poly_track,
    value,
    verify_prefix,
)
from valx.errors import PreconditionError


def tower():
    T = Tower(RationalFunctionField(3, ["t"]), henselian=True)
    t = T.gen("t")
    T.construct_extension("a1", [-1 / t, -1, 0, 1], value(F(-1, 3)))
    return T


def partial_sums(T, exps):
    t = T.gen("t")
    out, acc = [], T.zero()
    for e in exps:
        out.append(acc)
        acc = acc + t ** e
    out.append(acc)
    return out


def test_geometric_partial_sums():
    T = tower()
    t = T.gen("t")
    z = [sum((t ** i for i in range(1, mu + 1)), T.one()) for mu in range(6)]
    p = PcsPrefix(z)
    assert verify_prefix(p)
    assert p.gaps() == [value(mu + 1) for mu in range(5)]


def test_constant_sequence_is_not_a_prefix():
    T = tower()
    assert not verify_prefix(PcsPrefix([T.one()] * 4))


def test_small_prefix():
    T = tower()
    p = PcsPrefix(partial_sums(T, [1, 3, 4]))
    assert verify_prefix(p)
    assert p.gaps() == [value(1), value(3), value(4)]
    with pytest.raises(PreconditionError):
        PcsPrefix(p.elements[:2])


def test_limits():
    T = tower()
    z = partial_sums(T, [1, 3, 4, 7])
    p = PcsPrefix(z[:-1])
    assert is_limit_at_prefix(z[-1], p)
    assert not is_limit_at_prefix(z[0], p)
    # adding anything of value above the last gap keeps a limit a limit
    t = T.gen("t")
    assert is_limit_at_prefix(z[-1] + T.gen("a1") * t ** 6, p)
    assert not is_limit_at_prefix(z[-1] + t ** 2, p)


def test_poly_track():
    T = tower()
    z = partial_sums(T, [1, 3, 4, 7])
    p = PcsPrefix(z[:-1])
    x = Poly.x(T)
    tr = poly_track(x - z[-1], p)
    assert tr.verdict == "IncreasingOnTail"
    assert list(tr.values) == p.gaps()
    tr = poly_track(Poly.const(T, T.gen("t") ** 2), p)
    assert tr.verdict == "ConstantOnTail" and set(tr.values) == {value(2)}
    assert poly_track(x * x + 1, p).verdict == "ConstantOnTail"


def test_minimal_polynomial_of_a_limit_root_increases():
    T = tower()
    t = T.gen("t")
    y = t + t ** 3 + t ** 4 + T.gen("a1") * t ** 10
    p = PcsPrefix(partial_sums(T, [1, 3, 4]))
    Q = Poly.from_coeffs(T, T.minimal_polynomial(y))
    assert Q.degree == 3
    assert poly_track(Q, p).verdict == "IncreasingOnTail"


def test_pair_limit_check():
    T = tower()
    t = T.gen("t")
    a = t + t ** 3 + t ** 4 + T.gen("a1") * t ** 10
    p = PcsPrefix(partial_sums(T, [1, 3, 4]))
    ok = pair_limit_check(PairOfDefinition(a, RationalPoint((F(5),))), p)
    assert ok.consistent and not ok.contradiction_case
    low = pair_limit_check(PairOfDefinition(a, RationalPoint((F(7, 2),))), p)
    assert low.a_is_limit and not low.gamma_above_gaps and low.contradiction_case
    off = pair_limit_check(PairOfDefinition(T.gen("a1"), RationalPoint((F(5),))), p)
    assert not off.consistent and off.first_mismatch == 0


def test_limit_root_witness():
    T = tower()
    z = partial_sums(T, [1, 3, 4, 7])
    y, u = z[-1], T.one()
    p = PcsPrefix(z[:-1])
    x = Poly.x(T)
    assert limit_root_witness((x - y) * (x - u), p, [u, y]) == y
    assert limit_root_witness(x * x - T.gen("t"), p, []) is None
    got = limit_root_witness(x * x - y * y, p, [-y, y])
    assert got == y


# properties --------------------------------------------------------------------

exponent_steps = st.lists(st.integers(1, 4), min_size=3, max_size=12)


@settings(max_examples=30, deadline=None)
@given(exponent_steps, st.integers(1, 5))
def test_increasing_exponents_give_prefixes(steps, bump):
    T = tower()
    exps = [sum(steps[: i + 1]) for i in range(len(steps))]
    z = partial_sums(T, exps)
    p = PcsPrefix(z[:-1])
    assert verify_prefix(p)
    assert p.gaps() == [value(e) for e in exps[:-1]]
    y = z[-1] + T.gen("t") ** (exps[-1] + bump)
    assert is_limit_at_prefix(y, p)
    tr = poly_track(Poly.x(T) - y, p)
    assert tr.verdict == "IncreasingOnTail" and list(tr.values) == p.gaps()
