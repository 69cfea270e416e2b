"""The valuation omega = nu_{a,gamma} on K(x) and its basic invariants.

A :class:`PairOfDefinition` bundles a tower element ``a``, a gamma spec and
the level playing the role of K (level 0 unless stated otherwise).  Values
of polynomials are computed from the Taylor expansion at ``a``::

    omega(sum c_i (x-a)^i) = min(nu c_i + i*gamma)

and ``omega(Q)`` for the minimal polynomial Q of ``a`` also from the
conjugate differences, ``gamma + sum min(gamma, d)``.  The two routes must
agree; the test-suite checks that they do.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    IncomparableSpecs,
    Inseparable,
    NotMinimalAsserted,
    PreconditionError,
    UnsupportedValue,
)
from .field_tower import FieldElement
from .newton import conjugate_differences, newton_polygon
from .polynomial import Poly, is_separable, q_expand, shift, taylor_expand
from .valgroup import (
    INF,
    AboveAll,
    RationalPoint,
    SubgroupDesc,
    cmp,
    torsion_order,
    vmin,
)


class OmegaKind(enum.Enum):
    VALUE = "value-transcendental"
    RESIDUE = "residue-transcendental"

    def __str__(self):
        return self.value


class PairOfDefinition:
    """(a, gamma) over the level ``over`` of a tower."""

    def __init__(self, a: FieldElement, spec, over: int = 0, label: str = "a"):
        self.a = a
        self.spec = spec
        self.over = over
        self.label = label
        self.tower = a.tower
        if spec.rank != self.tower.rank:
            from .errors import RankMismatch

            raise RankMismatch(f"gamma of rank {spec.rank} for a rank-{self.tower.rank} tower")
        if a.level < over:
            self.a = a.lift(over)
        self._minpoly = None
        self._conj = None

    @property
    def gamma(self):
        return self.spec.gamma()

    @property
    def minpoly(self) -> Poly:
        if self._minpoly is None:
            cs = self.tower.minimal_polynomial(self.a, self.over)
            self._minpoly = Poly.from_coeffs(self.tower, cs, level=self.over)
        return self._minpoly

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def conj_diffs(self):
        if self._conj is None:
            self._conj = conjugate_differences(self.a, self.over, self.minpoly)
        return self._conj

    def is_separable(self) -> bool:
        return is_separable(self.minpoly)

    def base_group(self) -> SubgroupDesc:
        return self.tower.levels[self.over].value_group

    def __repr__(self):
        return f"PairOfDefinition({self.label} = {self.a}, gamma = {self.gamma})"


def value_group_of_Ka(pd: PairOfDefinition) -> SubgroupDesc:
    """The value group of K(a).

    Known exactly in two situations: ``a`` generates the whole level it lives
    on (the level is totally ramified over K), or ``nu a`` has order equal to
    [K(a):K] modulo nu K (then nu K + Z nu a already has the right index).
    """
    H = pd.base_group()
    n = pd.degree
    if n == 1:
        return H
    low = pd.a.lower()
    L = pd.tower.levels[low.level]
    if L.total_degree == n * pd.tower.levels[pd.over].total_degree:
        return L.value_group
    va = pd.a.value()
    if torsion_order(va, H) == n:
        return H.extend(va)
    raise UnsupportedValue("value group of K(a) is not determined by the tower data")


def omega(f, pd: PairOfDefinition):
    """nu_{a,gamma}(f) for a polynomial or a constant."""
    if not isinstance(f, Poly):
        f = Poly.const(pd.tower, f)
    if f.is_zero():
        return INF
    spec = pd.spec
    g = pd.gamma
    best = INF
    for i, c in enumerate(taylor_expand(f, pd.a)):
        v = c.value()
        if v is INF:
            continue
        w = v + g * i
        if best is INF or cmp(w, best, spec) < 0:
            best = w
    return best


nu_a_gamma = omega


def omega_ratio(f, g, pd: PairOfDefinition):
    """omega(f/g) = omega(f) - omega(g)."""
    vg = omega(g, pd)
    if vg is INF:
        raise ZeroDivisionError("denominator is zero")
    vf = omega(f, pd)
    return INF if vf is INF else vf - vg


def classify(pd: PairOfDefinition) -> OmegaKind:
    return OmegaKind.RESIDUE if isinstance(pd.spec, RationalPoint) else OmegaKind.VALUE


def unique_pair(pd: PairOfDefinition) -> bool:
    """gamma above every algebraic value forces a single pair of definition."""
    return isinstance(pd.spec, AboveAll)


def pairs_equivalent(p1: PairOfDefinition, p2: PairOfDefinition) -> bool:
    if p1.spec != p2.spec and not (isinstance(p1.spec, RationalPoint)
                                   and isinstance(p2.spec, RationalPoint)):
        raise IncomparableSpecs("pairs use different irrational gamma specs")
    if cmp(p1.gamma, p2.gamma, p1.spec) != 0:
        return False
    return cmp((p1.a - p2.a).value(), p1.gamma, p1.spec) >= 0


def is_minimal_pair_by_value_order(pd: PairOfDefinition) -> bool:
    """Sufficient test: nu a < gamma and nu a has order [K(a):K] modulo nu K."""
    va = pd.a.value()
    if va is INF:
        return pd.degree == 1
    if pd.degree == 1:
        return True
    if torsion_order(va, pd.base_group()) != pd.degree:
        return False
    return cmp(va, pd.gamma, pd.spec) < 0


def omega_Q(pd: PairOfDefinition):
    """gamma + sum over conjugate differences d of min(gamma, d)."""
    if not pd.is_separable():
        raise Inseparable("omega(Q) by conjugates needs a separable element")
    g = pd.gamma
    total = g
    for d in pd.conj_diffs().values:
        total = total + vmin([g, d], pd.spec)
    return total


def delta(f, pd: PairOfDefinition):
    """max over roots b of f of min(gamma, nu(a - b))."""
    if not isinstance(f, Poly):
        f = Poly.const(pd.tower, f)
    if f.degree < 1:
        raise PreconditionError("delta needs a polynomial of positive degree")
    if f(pd.a).is_zero():
        return pd.gamma
    s = shift(f, pd.a)
    top = newton_polygon(s).max_slope()
    return vmin([pd.gamma, top], pd.spec)


def nu_Q(f, Q: Poly, omegaQ, pd: PairOfDefinition):
    """min(omega(f_i) + i*omega(Q)) over the Q-expansion of f."""
    if not isinstance(f, Poly):
        f = Poly.const(pd.tower, f)
    parts = q_expand(f, Q)
    best = INF
    for i, fi in enumerate(parts):
        v = omega(fi, pd)
        if v is INF:
            continue
        w = v + omegaQ * i
        if best is INF or cmp(w, best, pd.spec) < 0:
            best = w
    return best


def is_key_polynomial(pd: PairOfDefinition):
    """Is the minimal polynomial Q of ``a`` a key polynomial for omega?

    Q is a key polynomial exactly when (a, delta(Q)) is a minimal pair, and
    delta(Q) = gamma because a is a root of Q.  So the answer is ``True``
    when the value-order test proves minimality and ``None`` (undecided)
    otherwise; no search over lower-degree polynomials is attempted.
    """
    return True if is_minimal_pair_by_value_order(pd) else None


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    kind: OmegaKind
    omega_Q: object
    value_group: str
    value_group_lattice: SubgroupDesc
    residue_field: str
    index_e: int | None
    ramification: int | None

    def lines(self) -> list:
        return [
            ("kind", str(self.kind)),
            ("omegaQ", str(self.omega_Q)),
            ("valuegroup", self.value_group),
            ("residuefield", self.residue_field),
            ("e", "n/a" if self.index_e is None else str(self.index_e)),
        ]


def _require_minimal(pd, asserted):
    if not asserted and not is_minimal_pair_by_value_order(pd):
        raise NotMinimalAsserted(
            "pair is not known to be minimal (value-order test fails and no assertion given)")


def omega_Q_value(pd: PairOfDefinition):
    """omega(Q) by the conjugate route when possible, else by Taylor expansion."""
    if pd.is_separable():
        return omega_Q(pd)
    return omega(pd.minpoly, pd)


def structure_report(pd: PairOfDefinition, asserted: bool = False) -> StructureReport:
    _require_minimal(pd, asserted)
    kind = classify(pd)
    wq = omega_Q_value(pd)
    H = value_group_of_Ka(pd)
    res = pd.tower.base.residue_field_name()
    ram = H.index_over(pd.base_group())
    if kind is OmegaKind.VALUE:
        return StructureReport(kind, wq, f"{H} (+) Z*omegaQ", H, res, None, ram)
    e = torsion_order(wq, H, pd.spec)
    G = H.extend(pd.spec.fold(wq))
    return StructureReport(kind, wq, str(G), G, f"{res}(xi)", e, ram)


@dataclass(frozen=True)
class Purity:
    verdict: str  # PE1, PE2 or weakly-pure
    e: int | None = None

    def __str__(self):
        if self.verdict == "weakly-pure":
            return f"weakly-pure(e={self.e})"
        return self.verdict


def classify_purity(pd: PairOfDefinition) -> Purity:
    """Purity of omega over K(a), where ``a`` is a constant."""
    H = value_group_of_Ka(pd)
    e = torsion_order(pd.gamma, H, pd.spec)
    if e is None:
        return Purity("PE1")
    if e == 1:
        return Purity("PE2", 1)
    return Purity("weakly-pure", e)


def coincidence_test(p1: PairOfDefinition, p2: PairOfDefinition, asserted: bool = False) -> bool:
    """Two minimal pairs give the same omega on K(x) iff gamma agrees and a, a' are conjugate."""
    _require_minimal(p1, asserted)
    _require_minimal(p2, asserted)
    if p1.over != p2.over:
        raise PreconditionError("pairs over different base levels")
    try:
        if cmp(p1.gamma, p2.gamma, p1.spec) != 0 or p1.spec != p2.spec:
            return False
    except IncomparableSpecs:
        return False
    return p1.minpoly == p2.minpoly


def simultaneous_extension_bound(pd: PairOfDefinition) -> int:
    return pd.degree
