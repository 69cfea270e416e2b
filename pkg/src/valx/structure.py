"""Distinguished chains, the j-count and the implicit constant field.

The classifier works through a fixed cascade of decided cases and falls back
to honest lower/upper bounds when none of them applies.  Every report names
the rule that produced it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    BrokenMonotonicity,
    Inseparable,
    NotCoincident,
    NotHenselianContext,
    NotMinimalAsserted,
)
from .extension import (
    OmegaKind,
    PairOfDefinition,
    classify,
    coincidence_test,
    is_minimal_pair_by_value_order,
    value_group_of_Ka,
)
from .newton import kras
from .polynomial import Poly, is_separable
from .valgroup import INF, AboveAll, cmp


# ---------------------------------------------------------------------------
# distinguished chains
# ---------------------------------------------------------------------------

@dataclass
class DistinguishedChain:
    """a_0, ..., a_n with a_n in the base; maximality of each delta is certified."""

    elements: list
    certified: bool = True
    over: int = 0

    @property
    def tower(self):
        return self.elements[0].tower

    def deltas(self) -> list:
        return [(x - y).value() for x, y in zip(self.elements, self.elements[1:])]

    def degrees(self) -> list:
        T = self.tower
        return [len(T.minimal_polynomial(e, self.over)) - 1 for e in self.elements]


def verify_chain(chain: DistinguishedChain) -> bool:
    T = chain.tower
    if not T.henselian:
        raise NotHenselianContext("distinguished chains need a henselian base (declare it)")
    degs = chain.degrees()
    if any(d1 <= d2 for d1, d2 in zip(degs, degs[1:])):
        raise BrokenMonotonicity(f"degrees {degs} are not strictly decreasing")
    ds = chain.deltas()
    for d1, d2 in zip(ds, ds[1:]):
        if d1 is INF or d2 is INF or cmp(d1, d2, None) <= 0:
            raise BrokenMonotonicity(
                "deltas " + ", ".join(str(d) for d in ds) + " are not strictly decreasing")
    if chain.elements[-1].lower().level > chain.over:
        return False
    return bool(chain.certified)


def minimal_pair_from_chain(chain: DistinguishedChain, spec, label: str = "a") -> PairOfDefinition:
    """The first a_i (in chain order) with gamma > delta(a_i, K), else a_n."""
    g = spec.gamma()
    els = chain.elements
    for i, d in enumerate(chain.deltas()):
        if d is not INF and cmp(g, d, spec) > 0:
            return PairOfDefinition(els[i], spec, chain.over, f"{label}{i}")
    return PairOfDefinition(els[-1], spec, chain.over, f"{label}{len(els) - 1}")


def resolve_minimal(pd: PairOfDefinition, chain: DistinguishedChain | None = None):
    """``pd`` if the value-order test proves it minimal, else the chain's choice."""
    if is_minimal_pair_by_value_order(pd):
        return pd
    if chain is not None and verify_chain(chain):
        label = pd.label.rstrip("0123456789") or "a"
        return minimal_pair_from_chain(chain, pd.spec, label)
    raise NotMinimalAsserted(
        "pair is not known to be minimal (value-order test fails, no chain or assertion)")


# ---------------------------------------------------------------------------
# j-count and tame degree
# ---------------------------------------------------------------------------

def j_count(pd: PairOfDefinition) -> int:
    if not pd.is_separable():
        raise Inseparable("j-count needs a separable element")
    g = pd.gamma
    ds = pd.conj_diffs().values
    if classify(pd) is OmegaKind.VALUE:
        return 1 + sum(1 for d in ds if cmp(d, g, pd.spec) > 0)
    return 1 + sum(1 for d in ds if cmp(d, g, pd.spec) >= 0)


def prime_to_p(n: int, p: int) -> int:
    if p <= 1:
        return n
    while n % p == 0:
        n //= p
    return n


def tame_degree(tower, level: int | None = None, over: int = 0) -> int:
    """Prime-to-p part of the ramification index of a tower level over ``over``."""
    k = tower.top if level is None else level
    e = tower.levels[k].total_degree // tower.levels[over].total_degree
    return prime_to_p(e, tower.char_exponent)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, math.isqrt(n) + 1))


# ---------------------------------------------------------------------------
# implicit constant field
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDesc:
    name: str
    degree: int

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ICReport:
    verdict: str  # Exact, ProperWithJ or BoundsOnly
    field: FieldDesc | None
    lower: FieldDesc
    upper: FieldDesc
    rule: str
    j: int | None = None
    notes: tuple = field(default=())

    def lines(self) -> list:
        out = [("verdict", self.verdict)]
        if self.field is not None:
            out.append(("field", str(self.field)))
            out.append(("degree", str(self.field.degree)))
        out.append(("lower", f"{self.lower} [{self.lower.degree}]"))
        out.append(("upper", f"{self.upper} [{self.upper.degree}]"))
        if self.j is not None:
            out.append(("j", str(self.j)))
        out.append(("rule", self.rule))
        for n in self.notes:
            out.append(("note", n))
        return out


def _purely_inseparable_shape(Q: Poly, p: int) -> bool:
    if p <= 1:
        return False
    n = Q.degree
    q = 1
    while q < n:
        q *= p
    if q != n or n < 2:
        return False
    return all(Q.coeff(i).is_zero() for i in range(1, n))


def separable_part(Q: Poly, p: int):
    """(q, g) with Q(x) = g(x^q), q a power of p as large as possible."""
    q = 1
    if p > 1:
        while True:
            nq = q * p
            if Q.degree % nq:
                break
            if any(not Q.coeff(i).is_zero() for i in range(Q.degree + 1) if i % nq):
                break
            q = nq
    g = Poly.from_coeffs(Q.tower, [Q.coeff(i) for i in range(0, Q.degree + 1, q)], level=Q.level)
    return q, g


def _tame_lower(pd: PairOfDefinition, d: int) -> FieldDesc:
    """Name the tame subfield of K(a) of degree ``d``."""
    if d == 1:
        return FieldDesc("K^h", 1)
    T = pd.tower
    low = pd.a.lower()
    if T.levels[low.level].total_degree == pd.degree * T.levels[pd.over].total_degree:
        p = T.char_exponent
        for k in range(pd.over + 1, low.level + 1):
            L = T.levels[k]
            g = T.gen(L.name)
            m = len(T.minimal_polynomial(g, pd.over)) - 1
            if m == d and prime_to_p(m, p) == m:
                return FieldDesc(f"K({L.name})^h", d)
    return FieldDesc(f"tame subfield of K({pd.label})^h of degree {d}", d)


def _pin(lower: int, upper: int) -> bool:
    cands = [m for m in range(lower, upper) if m % lower == 0 and upper % m == 0]
    return cands == [lower]


def ic_classify(pd: PairOfDefinition, chain: DistinguishedChain | None = None,
                asserted: bool = False) -> ICReport:
    """Implicit constant field of (K(x)|K, omega) for a minimal pair.

    With a verified chain the pair is first replaced by the minimal pair the
    chain selects (it defines the same omega).
    """
    if not asserted:
        pd = resolve_minimal(pd, chain)
    T = pd.tower
    p = T.char_exponent
    n = pd.degree
    lab = pd.label
    Kh = FieldDesc("K^h", 1)
    Q = pd.minpoly
    sep = n == 1 or is_separable(Q)
    q, g = (1, Q) if sep else separable_part(Q, p)
    nsep = g.degree
    upper = FieldDesc(f"K({lab})^h", n) if sep else FieldDesc(f"(K({lab})^h|K)^sep", nsep)

    if not sep and _purely_inseparable_shape(Q, p):
        return ICReport("Exact", Kh, Kh, Kh, "purely-inseparable")
    if isinstance(pd.spec, AboveAll):
        if n == 1:
            upper = Kh
        return ICReport("Exact", upper, upper, upper, "gamma-above-all",
                        j_count(pd) if sep else None)
    if n == 1:
        return ICReport("Exact", Kh, Kh, Kh, "a-in-K", 1)
    kind = classify(pd)
    if not sep:
        b = pd.a ** q
        notes = ()
        if nsep >= 2:
            kb = kras(b, pd.over, g)
            if cmp(pd.gamma * q, kb, pd.spec) > 0:
                return ICReport("Exact", upper, upper, upper, "krasner-separable-part",
                                notes=(f"separable generator {lab}^{q}, kras = {kb}",))
            notes = (f"separable generator {lab}^{q}, kras = {kb}",)
        return ICReport("BoundsOnly", None, Kh, upper, "bounds", notes=notes)

    k = kras(pd.a, pd.over, Q)
    c = cmp(pd.gamma, k, pd.spec)
    j = j_count(pd)
    if c > 0:
        return ICReport("Exact", upper, upper, upper, "krasner", j)
    if _is_prime(n):
        return ICReport("Exact", Kh, Kh, upper, "prime-degree", j)
    if kind is OmegaKind.VALUE:
        e = value_group_of_Ka(pd).index_over(pd.base_group())
        lower = _tame_lower(pd, prime_to_p(e, p))
    else:
        lower = Kh
    notes = ()
    if kind is OmegaKind.RESIDUE:
        notes = ("either the value group grows or the residue degree equals j",)
    if lower.degree < n and _pin(lower.degree, n):
        return ICReport("Exact", lower, lower, upper, "divisor-pinning", j, notes)
    return ICReport("ProperWithJ", None, lower, upper, "proper", j, notes)


def minimal_field_invariants_check(p1: PairOfDefinition, p2: PairOfDefinition,
                                   asserted: bool = False) -> bool:
    """Equal ramification index and residue field for two minimal fields of one omega."""
    if not coincidence_test(p1, p2, asserted):
        raise NotCoincident("the two pairs do not define the same omega")
    e1 = value_group_of_Ka(p1).index_over(p1.base_group())
    e2 = value_group_of_Ka(p2).index_over(p2.base_group())
    r1 = r2 = p1.tower.base.residue_field_name()
    return e1 == e2 and r1 == r2
