import random
from fractions import Fraction as F

import pytest
from conftest import artin_schreier, as_kummer, cubic_pair, kummer_pair, nonic_pair, padic_cubic

from valx import (
    AboveAll,
    DistinguishedChain,
    PAdicRationals,
    PairOfDefinition,
    QuadIrr,
    RationalFunctionField,
    RationalPoint,
    Tower,
    ic_classify,
    j_count,
    kras,
    minimal_pair_from_chain,
    pairs_equivalent,
    tame_degree,
    value,
    verify_chain,
)
from valx.errors import BrokenMonotonicity, NotHenselianContext, NotMinimalAsserted
from valx.structure import prime_to_p, resolve_minimal
from valx.valgroup import cmp


def synthetic_tower():
    T = Tower(PAdicRationals(5), henselian=True)
    T.construct_extension("b", [-5, 0, 1], value(F(1, 2)))
    T.construct_extension("c", [-5, 0, 0, 1], value(F(1, 3)))
    b, c = T.gen("b"), T.gen("c")
    T.construct_extension("d", [-5 * c / b, 0, 1], value(F(5, 12)))
    return T


def synthetic_chain():
    T = synthetic_tower()
    b, c, d = T.gen("b"), T.gen("c"), T.gen("d")
    a2 = 1 + b
    a1 = a2 + 25 * (1 + c)
    a0 = a1 + 5 ** 5 * (1 + d)
    return DistinguishedChain([a0, a1, a2, T.zero()])


def test_single_step_chain(cubic3):
    ch = DistinguishedChain([cubic3.gen("a"), cubic3.zero()])
    assert ch.deltas() == [value(F(-1, 3))]
    assert ch.degrees() == [3, 1]
    assert verify_chain(ch)


def test_chain_failures(cubic3):
    a = cubic3.gen("a")
    with pytest.raises(BrokenMonotonicity):
        verify_chain(DistinguishedChain([a, a + 1, cubic3.zero()]))
    els = synthetic_chain().elements
    assert not verify_chain(DistinguishedChain(els[1:3]))
    T = Tower(PAdicRationals(3))
    T.construct_extension("a", [F(-1, 3), 0, 0, 1], value(F(-1, 3)))
    with pytest.raises(NotHenselianContext):
        verify_chain(DistinguishedChain([T.gen("a"), T.zero()]))


def test_synthetic_chain_deltas_and_degrees():
    ch = synthetic_chain()
    assert ch.deltas() == [value(5), value(2), value(0)]
    assert ch.degrees() == [12, 6, 2, 1]
    assert verify_chain(ch)


@pytest.mark.parametrize("gamma,index", [(F(3), 1), (F(6), 0), (F(1, 2), 2), (F(-1), 3)])
def test_minimal_pair_from_chain(gamma, index):
    ch = synthetic_chain()
    spec = RationalPoint((gamma,))
    pd = minimal_pair_from_chain(ch, spec)
    assert pd.a == ch.elements[index]
    # oracle: the choice defines the same omega as (a_0, gamma) and no lower-degree
    # chain element does
    top = PairOfDefinition(ch.elements[0], spec)
    assert pairs_equivalent(pd, top)
    for e, deg in zip(ch.elements, ch.degrees()):
        if deg < ch.degrees()[index]:
            assert not pairs_equivalent(PairOfDefinition(e, spec), top)


def test_resolve_minimal_uses_the_chain():
    ch = synthetic_chain()
    pd = PairOfDefinition(ch.elements[0], RationalPoint((F(3),)), label="a0")
    got = resolve_minimal(pd, ch)
    assert got.a == ch.elements[1] and got.label == "a1"
    with pytest.raises(NotMinimalAsserted):
        resolve_minimal(pd)


def test_j_count_above_kras():
    assert j_count(cubic_pair(3, F(1, 5))) == 1


def test_j_count_below_kras_value_transcendental():
    # gamma = sqrt(2)/10 ~ 0.1414 is below 1/6
    pd = PairOfDefinition(padic_cubic().gen("a"), QuadIrr(F(0), F(1, 10), 2))
    assert j_count(pd) == 3


def test_j_count_at_kras_counts_ties():
    assert j_count(cubic_pair(3, F(1, 6))) == 3
    assert j_count(cubic_pair(5, F(1, 20))) == 5


def test_tame_degrees():
    T = as_kummer(3)
    assert tame_degree(T) == 2
    assert tame_degree(artin_schreier(3)) == 1
    Q = Tower(RationalFunctionField(0, ["t"]))
    t = Q.gen("t")
    Q.construct_extension("s", [-t, 0, 0, 0, 0, 0, 1], value(F(1, 6)))
    assert tame_degree(Q) == 6
    assert prime_to_p(12, 2) == 3 and prime_to_p(7, 1) == 7


def test_ic_krasner():
    r = ic_classify(cubic_pair(3, F(1, 5)))
    assert (r.verdict, str(r.field), r.rule, r.j) == ("Exact", "K(a)^h", "krasner", 1)


@pytest.mark.parametrize("p", [3, 5])
def test_ic_prime_degree_at_kras(p):
    k = F(1, p - 1) - F(1, p)
    r = ic_classify(cubic_pair(p, k))
    assert (r.verdict, str(r.field), r.rule, r.j) == ("Exact", "K^h", "prime-degree", p)
    r = ic_classify(cubic_pair(p, k + F(1, 100)))
    assert (r.verdict, str(r.field)) == ("Exact", "K(a)^h")


def test_ic_irrational_gamma_between_value_and_kras():
    pd = PairOfDefinition(padic_cubic().gen("a"), QuadIrr(F(0), F(1, 10), 2))
    r = ic_classify(pd)
    assert (r.verdict, str(r.field), r.rule) == ("Exact", "K^h", "prime-degree")


def test_ic_proper_subfield_pinned_by_divisors():
    pd = kummer_pair()
    assert cmp(pd.a.value(), kras(pd.a), pd.spec) < 0
    r = ic_classify(pd)
    assert r.verdict == "Exact" and r.rule == "divisor-pinning"
    assert str(r.field) == "K(a2)^h" and r.field.degree == 2
    assert r.upper.degree == 6 and r.j == 3


def test_ic_separable_part():
    r = ic_classify(nonic_pair())
    assert r.verdict == "Exact" and r.rule == "krasner-separable-part"
    assert r.field.degree == 3 and str(r.field) == "(K(a)^h|K)^sep"


def test_ic_separable_part_bounds_below_kras():
    # gamma = (sqrt(3)/9, 0): 3*gamma ~ 0.577... > 1/2, use sqrt(2)/9 so 3*gamma < 1/2
    r = ic_classify(nonic_pair(QuadIrr(F(0), F(1, 9), 2, (F(0),))))
    assert r.verdict == "BoundsOnly"
    assert r.lower.degree == 1 and r.upper.degree == 3


def test_ic_purely_inseparable():
    T = Tower(RationalFunctionField(3, ["t"]), henselian=True)
    t = T.gen("t")
    T.construct_extension("r", [-t, 0, 0, 1], value(F(1, 3)))
    r = ic_classify(PairOfDefinition(T.gen("r"), RationalPoint((F(1),))))
    assert (r.verdict, str(r.field), r.rule) == ("Exact", "K^h", "purely-inseparable")


def test_ic_gamma_above_all():
    T = padic_cubic()
    r = ic_classify(PairOfDefinition(T.gen("a"), AboveAll(1)))
    assert (r.verdict, str(r.field), r.rule) == ("Exact", "K(a)^h", "gamma-above-all")
    r = ic_classify(PairOfDefinition(T.element(F(1, 3)), AboveAll(1)))
    assert str(r.field) == "K^h"


def test_ic_base_point():
    r = ic_classify(PairOfDefinition(padic_cubic().element(2), RationalPoint((F(1, 2),))))
    assert (r.verdict, r.rule) == ("Exact", "a-in-K")


def test_ic_on_synthetic_chain():
    ch = synthetic_chain()
    pd = PairOfDefinition(ch.elements[0], RationalPoint((F(3),)), label="a0")
    r = ic_classify(pd, ch)
    assert (r.verdict, str(r.field), r.rule) == ("Exact", "K(a1)^h", "krasner")


CASES = [
    lambda: cubic_pair(3, F(1, 5)),
    lambda: cubic_pair(3, F(1, 6)),
    lambda: cubic_pair(5, F(1, 30)),
    lambda: kummer_pair(),
    lambda: kummer_pair(RationalPoint((F(1, 4),))),
    lambda: kummer_pair(RationalPoint((F(2),))),
    lambda: kummer_pair(QuadIrr(F(1), F(1, 5), 3)),
    lambda: nonic_pair(),
    lambda: PairOfDefinition(as_kummer().gen("a2"), RationalPoint((F(0),))),
]


@pytest.mark.parametrize("make", CASES)
def test_ic_bounds_are_consistent(make):
    pd = make()
    r = ic_classify(pd)
    assert r.upper.degree % r.lower.degree == 0
    if r.field is not None:
        assert r.upper.degree % r.field.degree == 0
        assert r.field.degree % r.lower.degree == 0
    if r.verdict == "ProperWithJ":
        assert r.j >= 2
    if r.j is not None:
        assert 1 <= r.j <= pd.degree
