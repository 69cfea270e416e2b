"""Value groups: (Q^r, lex) extended by one extra element gamma.

A finite value is a pair ``(vec, gcoef)`` meaning ``vec + gcoef*gamma``.
How gamma sits inside the ordered group is fixed by a *gamma spec*:

* :class:`RationalPoint` -- gamma is a rational vector; values are folded so
  that arithmetic stays purely rational.
* :class:`QuadIrr` -- gamma = (q0 + q1*sqrt(d), tail...), an irrational first
  coordinate.  Comparisons use exact sign analysis, never floats.
* :class:`AboveAll` -- gamma exceeds every element of the divisible hull.

Values are immutable and hashable.  The value of zero is the dedicated
:data:`INF` object.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    IncomparableSpecs,
    NonIntegralGammaDivision,
    RankMismatch,
    UnsupportedValue,
)

__all__ = [
    "Fraction",
    "GroupValue",
    "INF",
    "RationalPoint",
    "QuadIrr",
    "AboveAll",
    "SubgroupDesc",
    "cmp",
    "vmin",
    "vmax",
    "torsion_order",
    "value",
    "format_value",
    "parse_value",
    "format_rational",
]


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GroupValue:
    """A finite value ``vec + gcoef*gamma``."""

    vec: tuple
    gcoef: int = 0

    @property
    def rank(self) -> int:
        return len(self.vec)

    @property
    def is_infinite(self) -> bool:
        return False

    def _check(self, other):
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        if other is INF:
            return INF
        if not isinstance(other, GroupValue):
            return NotImplemented
        self._check(other)
        return GroupValue(tuple(a + b for a, b in zip(self.vec, other.vec)),
                          self.gcoef + other.gcoef)

    def __neg__(self):
        return GroupValue(tuple(-a for a in self.vec), -self.gcoef)

    def __sub__(self, other):
        if not isinstance(other, GroupValue):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return GroupValue(tuple(a * n for a in self.vec), self.gcoef * n)

    __rmul__ = __mul__

    def divide(self, n: int) -> "GroupValue":
        """Exact division by a nonzero integer.

        The vector part lives in a Q-vector space, but the gamma coefficient
        must stay integral.
        """
        if self.gcoef % n:
            raise NonIntegralGammaDivision(
                f"gamma coefficient {self.gcoef} is not divisible by {n}")
        return GroupValue(tuple(a / n for a in self.vec), self.gcoef // n)

    def is_zero(self) -> bool:
        return self.gcoef == 0 and not any(self.vec)

    # Spec-free comparisons: only meaningful when the gamma parts agree.
    def _lex(self, other):
        if other is INF:
            return -1
        self._check(other)
        if self.gcoef != other.gcoef:
            raise IncomparableSpecs("comparison involving gamma needs a gamma spec")
        for a, b in zip(self.vec, other.vec):
            if a != b:
                return -1 if a < b else 1
        return 0

    def __lt__(self, other):
        return self._lex(other) < 0

    def __le__(self, other):
        return self._lex(other) <= 0

    def __gt__(self, other):
        return self._lex(other) > 0

    def __ge__(self, other):
        return self._lex(other) >= 0

    def __str__(self):
        return format_value(self)


class _Infinity:
    """The value of zero.  Absorbing for addition, larger than everything."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    is_infinite = True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise UnsupportedValue("inf - inf is undefined")
        return self

    def __mul__(self, n):
        if n <= 0:
            raise UnsupportedValue("inf can only be scaled by positive integers")
        return self

    __rmul__ = __mul__

    def divide(self, n):
        return self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def value(*coords, gcoef: int = 0) -> GroupValue:
    """Convenience constructor: ``value(1, '1/3')`` -> (1, 1/3)."""
    return GroupValue(tuple(Fraction(c) for c in coords), gcoef)


# ---------------------------------------------------------------------------
# gamma specs
# ---------------------------------------------------------------------------

def _lex_sign(vec) -> int:
    for a in vec:
        if a:
            return 1 if a > 0 else -1
    return 0


@dataclass(frozen=True)
class RationalPoint:
    point: tuple

    kind = "rational"

    @property
    def rank(self):
        return len(self.point)

    def gamma(self) -> GroupValue:
        return GroupValue(tuple(Fraction(c) for c in self.point), 0)

    def fold(self, v: GroupValue) -> GroupValue:
        if v.gcoef == 0:
            return v
        return GroupValue(tuple(a + v.gcoef * b for a, b in zip(v.vec, self.point)), 0)

    def sign(self, dvec, dg) -> int:
        return _lex_sign(tuple(a + dg * b for a, b in zip(dvec, self.point)))


@dataclass(frozen=True)
class QuadIrr:
    """gamma = (q0 + q1*sqrt(d), tail...) with d a positive non-square."""

    q0: Fraction
    q1: Fraction
    d: int
    tail: tuple = ()

    kind = "quadirr"

    def __post_init__(self):
        if self.q1 == 0:
            raise UnsupportedValue("quadratic irrational needs q1 != 0")
        if self.d <= 0 or math.isqrt(self.d) ** 2 == self.d:
            raise UnsupportedValue(f"d = {self.d} must be a positive non-square")

    @property
    def rank(self):
        return 1 + len(self.tail)

    def gamma(self) -> GroupValue:
        return GroupValue((Fraction(0),) * self.rank, 1)

    def fold(self, v):
        return v

    def sign(self, dvec, dg) -> int:
        if dg == 0:
            return _lex_sign(dvec)
        # first coordinate is s + t*sqrt(d), never zero
        s = dvec[0] + dg * self.q0
        t = dg * self.q1
        if s == 0:
            return 1 if t > 0 else -1
        if (s > 0) == (t > 0):
            return 1 if s > 0 else -1
        if s * s > t * t * self.d:
            return 1 if s > 0 else -1
        return 1 if t > 0 else -1


@dataclass(frozen=True)
class AboveAll:
    rank: int = 1

    kind = "aboveall"

    def gamma(self) -> GroupValue:
        return GroupValue((Fraction(0),) * self.rank, 1)

    def fold(self, v):
        return v

    def sign(self, dvec, dg) -> int:
        if dg:
            return 1 if dg > 0 else -1
        return _lex_sign(dvec)


def cmp(v, w, spec) -> int:
    """Total order on values: -1, 0 or 1."""
    if v is INF:
        return 0 if w is INF else 1
    if w is INF:
        return -1
    if v.rank != w.rank:
        raise RankMismatch(f"rank {v.rank} vs rank {w.rank}")
    if spec is not None and spec.rank != v.rank:
        raise RankMismatch(f"gamma spec has rank {spec.rank}, value rank {v.rank}")
    dvec = tuple(a - b for a, b in zip(v.vec, w.vec))
    dg = v.gcoef - w.gcoef
    if dg == 0:
        return _lex_sign(dvec)
    if spec is None:
        raise IncomparableSpecs("comparison involving gamma needs a gamma spec")
    return spec.sign(dvec, dg)


def _key(spec):
    return functools.cmp_to_key(lambda a, b: cmp(a, b, spec))


def vmin(values: Iterable, spec=None):
    return min(values, key=_key(spec))


def vmax(values: Iterable, spec=None):
    return max(values, key=_key(spec))


def sort_values(values: Iterable, spec=None) -> list:
    return sorted(values, key=_key(spec))


# ---------------------------------------------------------------------------
# subgroups of Q^r
# ---------------------------------------------------------------------------

def _echelon(rows, ncols):
    """Integer row echelon form (a Z-basis of the row lattice)."""
    rows = [list(r) for r in rows if any(r)]
    basis = []
    for c in range(ncols):
        nz = [r for r in rows if r[c]]
        rest = [r for r in rows if not r[c]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[c]))
            p = nz[0]
            keep = [p]
            for r in nz[1:]:
                q = r[c] // p[c]
                r2 = [a - q * b for a, b in zip(r, p)]
                (keep if r2[c] else rest).append(r2)
            nz = keep
        if nz:
            p = nz[0]
            if p[c] < 0:
                p = [-a for a in p]
            basis.append((c, p))
        rows = [r for r in rest if any(r)]
    # reduce entries above pivots so the basis is canonical
    for i in range(len(basis)):
        c, p = basis[i]
        for k in range(i):
            ck, pk = basis[k]
            q = pk[c] // p[c]
            if q:
                basis[k] = (ck, [a - q * b for a, b in zip(pk, p)])
    return basis


@dataclass(frozen=True)
class SubgroupDesc:
    """The subgroup of Q^r generated by finitely many rational vectors."""

    rank: int
    generators: tuple

    @classmethod
    def standard(cls, rank: int) -> "SubgroupDesc":
        gens = tuple(tuple(Fraction(int(i == j)) for j in range(rank)) for i in range(rank))
        return cls(rank, gens)

    @classmethod
    def of(cls, rank: int, gens: Iterable) -> "SubgroupDesc":
        out = []
        for g in gens:
            g = tuple(Fraction(c) for c in (g.vec if isinstance(g, GroupValue) else g))
            if len(g) != rank:
                raise RankMismatch(f"generator of rank {len(g)} in rank-{rank} group")
            out.append(g)
        return cls(rank, tuple(out))

    def extend(self, *vals) -> "SubgroupDesc":
        return SubgroupDesc.of(self.rank, self.generators + tuple(vals))

    @functools.cached_property
    def _scaled_basis(self):
        den = 1
        for g in self.generators:
            for c in g:
                den = math.lcm(den, c.denominator)
        rows = [[int(c * den) for c in g] for g in self.generators]
        return den, _echelon(rows, self.rank)

    def basis(self) -> list:
        den, basis = self._scaled_basis
        return [tuple(Fraction(a, den) for a in row) for _, row in basis]

    def is_full_rank(self) -> bool:
        return len(self._scaled_basis[1]) == self.rank

    def _coords(self, vec):
        den, basis = self._scaled_basis
        w = [Fraction(c) * den for c in vec]
        coords = []
        for c, row in basis:
            k = w[c] / row[c]
            coords.append(k)
            if k:
                w = [a - k * b for a, b in zip(w, row)]
        if any(w):
            return None
        return coords

    def contains(self, v) -> bool:
        if v is INF:
            return False
        vec = v.vec if isinstance(v, GroupValue) else tuple(v)
        if isinstance(v, GroupValue) and v.gcoef:
            return False
        if len(vec) != self.rank:
            raise RankMismatch(f"value of rank {len(vec)} in rank-{self.rank} group")
        coords = self._coords(vec)
        return coords is not None and all(k.denominator == 1 for k in coords)

    def index_over(self, other: "SubgroupDesc") -> int | None:
        """(self : other) for other contained in self, both full rank."""
        if not (self.is_full_rank() and other.is_full_rank()):
            return None
        q = abs(_det(other.basis())) / abs(_det(self.basis()))
        if q.denominator != 1:
            raise ValueError("not a subgroup of finite index")
        return int(q)

    def __str__(self):
        basis = self.basis()
        if not basis:
            return "0"
        if self.rank == 1 and len(basis) == 1:
            g = basis[0][0]
            if g == 1:
                return "Z"
            return f"({format_rational(g)})Z"
        return "+".join("Z(" + ",".join(format_rational(c) for c in b) + ")" for b in basis)


def _det(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[i])]
    return det


def torsion_order(v, H: SubgroupDesc, spec=None) -> int | None:
    """Least e >= 1 with e*v in H, or None if v is not torsion modulo H."""
    if v is INF:
        raise UnsupportedValue("torsion order of inf")
    if spec is not None:
        v = spec.fold(v)
    if v.gcoef:
        return None
    if v.rank != H.rank:
        raise RankMismatch(f"value of rank {v.rank} in rank-{H.rank} group")
    coords = H._coords(v.vec)
    if coords is None:
        return None
    e = 1
    for k in coords:
        e = math.lcm(e, k.denominator)
    return e


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def format_value(v) -> str:
    if v is INF:
        return "inf"
    if v.rank == 1:
        s = format_rational(v.vec[0])
    else:
        s = "(" + ",".join(format_rational(c) for c in v.vec) + ")"
    if v.gcoef:
        s += f"{'+' if v.gcoef > 0 else '-'}{abs(v.gcoef)}*gamma"
    return s


_GAMMA_TERM = re.compile(r"([+-])(\d+)\*gamma$")


def parse_value(text: str, rank: int | None = None) -> "GroupValue | _Infinity":
    s = "".join(text.split())
    if s == "inf":
        return INF
    gcoef = 0
    m = _GAMMA_TERM.search(s)
    if m:
        gcoef = int(m.group(2)) * (1 if m.group(1) == "+" else -1)
        s = s[: m.start()]
    try:
        if s.startswith("(") and s.endswith(")"):
            vec = tuple(Fraction(c) for c in s[1:-1].split(","))
        else:
            vec = (Fraction(s),)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse value {text!r}") from exc
    if rank is not None and len(vec) != rank:
        if len(vec) == 1 and not s.startswith("("):
            raise RankMismatch(f"value {text!r} has rank 1, expected rank {rank}")
        raise RankMismatch(f"value {text!r} has rank {len(vec)}, expected rank {rank}")
    return GroupValue(vec, gcoef)


def zero(rank: int) -> GroupValue:
    return GroupValue((Fraction(0),) * rank, 0)


def sum_values(values: Sequence, rank: int):
    total = zero(rank)
    for v in values:
        total = total + v
    return total
