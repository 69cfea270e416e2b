"""Dense univariate polynomials over a tower level.

A :class:`Poly` stores raw coefficients of one level (lowest degree first,
no trailing zeros).  Mixed-level arithmetic lifts to the higher level.
Taylor expansion uses repeated synthetic division, which works in every
characteristic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LevelMismatch, NonMonicDivisor, NonMonicQ, ZeroPolynomial
from .field_tower import FieldElement, Tower, _raw_divmod, _trim
from .fields import RatFunc

DEG_ZERO = -1  # degree of the zero polynomial


class Poly:
    __slots__ = ("tower", "level", "c")

    def __init__(self, tower: Tower, level: int, raws):
        self.tower = tower
        self.level = level
        self.c = tuple(_trim(tower.levels[level], list(raws)))

    # construction -------------------------------------------------------
    @classmethod
    def from_coeffs(cls, tower: Tower, coeffs, level: int | None = None) -> "Poly":
        els = [tower.element(c) for c in coeffs]
        k = max([e.level for e in els] + [0 if level is None else level])
        return cls(tower, k, [e.lift(k).raw for e in els])

    @classmethod
    def x(cls, tower: Tower, level: int = 0) -> "Poly":
        L = tower.levels[level]
        return cls(tower, level, [L.zero, L.one])

    @classmethod
    def const(cls, tower: Tower, c) -> "Poly":
        e = tower.element(c)
        return cls(tower, e.level, [e.raw])

    @property
    def L(self):
        return self.tower.levels[self.level]

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, i: int) -> FieldElement:
        raw = self.c[i] if i < len(self.c) else self.L.zero
        return FieldElement(self.tower, self.level, raw)

    def coeffs(self) -> list:
        return [FieldElement(self.tower, self.level, r) for r in self.c]

    def lead(self) -> FieldElement:
        if not self.c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeff(self.degree)

    def is_monic(self) -> bool:
        return bool(self.c) and self.L.is_one(self.c[-1])

    def lift(self, k: int) -> "Poly":
        if k == self.level:
            return self
        if k < self.level:
            raise LevelMismatch(f"cannot move a level-{self.level} polynomial to level {k}")
        return Poly(self.tower, k, [FieldElement(self.tower, self.level, r).lift(k).raw
                                    for r in self.c])

    def lower(self) -> "Poly":
        """The same polynomial over the lowest level containing its coefficients."""
        if not self.c:
            return Poly(self.tower, 0, [])
        els = [c.lower() for c in self.coeffs()]
        return Poly.from_coeffs(self.tower, els)

    def _pair(self, other):
        if isinstance(other, Poly):
            if other.tower is not self.tower:
                raise LevelMismatch("polynomials over different towers")
        elif isinstance(other, (int, Fraction, RatFunc, FieldElement)):
            other = Poly.const(self.tower, other)
        else:
            return None, None
        k = max(self.level, other.level)
        return self.lift(k), other.lift(k)

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        L = a.L
        n = max(len(a.c), len(b.c))
        za = a.c + (L.zero,) * (n - len(a.c))
        zb = b.c + (L.zero,) * (n - len(b.c))
        return Poly(a.tower, a.level, [L.add(x, y) for x, y in zip(za, zb)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.tower, self.level, [self.L.neg(x) for x in self.c])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        L = a.L
        if not a.c or not b.c:
            return Poly(a.tower, a.level, [])
        out = [L.zero] * (len(a.c) + len(b.c) - 1)
        for i, x in enumerate(a.c):
            if L.is_zero(x):
                continue
            for j, y in enumerate(b.c):
                if not L.is_zero(y):
                    out[i + j] = L.add(out[i + j], L.mul(x, y))
        return Poly(a.tower, a.level, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.const(self.tower, 1).lift(self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return (a - b).is_zero()

    def __hash__(self):
        low = self.lower()
        return hash(tuple(hash(c) for c in low.coeffs()))

    def divmod(self, g: "Poly"):
        """(q, r) with self = q*g + r and deg r < deg g; g must be monic."""
        a, b = self._pair(g)
        if b.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        if not b.is_monic():
            raise NonMonicDivisor("divisor must be monic")
        q, r = _raw_divmod(a.L, a.c, b.c)
        return Poly(a.tower, a.level, q), Poly(a.tower, a.level, r)

    def __divmod__(self, g):
        return self.divmod(g)

    def __floordiv__(self, g):
        return self.divmod(g)[0]

    def __mod__(self, g):
        return self.divmod(g)[1]

    def monic(self) -> "Poly":
        if not self.c:
            raise ZeroPolynomial("zero polynomial cannot be made monic")
        L = self.L
        inv = L.inv(self.c[-1])
        return Poly(self.tower, self.level, [L.mul(inv, x) for x in self.c])

    def derivative(self) -> "Poly":
        L = self.L
        out = []
        for i, x in enumerate(self.c[1:], start=1):
            out.append(L.mul(_int_raw(self.tower, self.level, i), x))
        return Poly(self.tower, self.level, out)

    def __call__(self, a) -> FieldElement:
        """Evaluate by Horner's rule."""
        a = self.tower.element(a)
        k = max(self.level, a.level)
        f = self.lift(k)
        L = f.L
        ar = a.lift(k).raw
        acc = L.zero
        for c in reversed(f.c):
            acc = L.add(L.mul(acc, ar), c)
        return FieldElement(self.tower, k, acc)

    def __str__(self):
        return self.format("x")

    def __repr__(self):
        return f"Poly<{self.level}>({self})"

    def format(self, var: str = "x") -> str:
        if not self.c:
            return "0"
        L = self.L
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.c[i]
            if L.is_zero(c):
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            cs = L.format(c)
            if not mono:
                terms.append(cs if L.simple(c) else f"({cs})")
            elif L.is_one(c):
                terms.append(mono)
            elif L.simple(c):
                terms.append(f"{cs}*{mono}")
            else:
                terms.append(f"({cs})*{mono}")
        return " + ".join(terms)


def _int_raw(tower, level, n):
    return tower.element(n).lift(level).raw


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (the zero polynomial if both inputs are zero)."""
    a, b = f._pair(g)
    L = a.L
    r0, r1 = list(a.c), list(b.c)
    while r1:
        _, r = _raw_divmod(L, r0, r1)
        r0, r1 = r1, r
    if not r0:
        return Poly(a.tower, a.level, [])
    return Poly(a.tower, a.level, r0).monic()


def is_separable(f: Poly) -> bool:
    """gcd(f, f') is constant; f' = 0 counts as inseparable."""
    d = f.derivative()
    if d.is_zero():
        return False
    return gcd(f, d).degree == 0


def taylor_expand(f: Poly, a) -> list:
    """[c_0, ..., c_n] with f(x) = sum c_i (x - a)^i."""
    a = f.tower.element(a)
    k = max(f.level, a.level)
    f = f.lift(k)
    L = f.L
    ar = a.lift(k).raw
    cur = list(f.c)
    out = []
    while cur:
        n = len(cur) - 1
        q = [None] * n
        acc = cur[n]
        for i in range(n - 1, -1, -1):
            q[i] = acc
            acc = L.add(cur[i], L.mul(ar, acc))
        out.append(acc)
        cur = q
    return [FieldElement(f.tower, k, c) for c in out]


def shift(f: Poly, a) -> Poly:
    """f(a + y) as a polynomial in y."""
    cs = taylor_expand(f, a)
    if not cs:
        return Poly(f.tower, f.level, [])
    return Poly.from_coeffs(f.tower, cs)


def reconstruct_taylor(coeffs, a: FieldElement) -> Poly:
    """sum c_i (x - a)^i."""
    tower = a.tower
    x_minus_a = Poly.x(tower) - Poly.const(tower, a)
    acc = Poly.const(tower, 0)
    for c in reversed(coeffs):
        acc = acc * x_minus_a + Poly.const(tower, c)
    return acc


def q_expand(f: Poly, Q: Poly) -> list:
    """[f_0, ..., f_r] with f = sum f_i Q^i and deg f_i < deg Q."""
    if Q.is_zero() or not Q.is_monic():
        raise NonMonicQ("Q must be monic")
    if Q.degree < 1:
        raise NonMonicQ("Q must have degree >= 1")
    a, b = f._pair(Q)
    out = []
    cur = a
    while not cur.is_zero():
        cur, r = cur.divmod(b)
        out.append(r)
    return out


def reconstruct_q(parts, Q: Poly) -> Poly:
    acc = Poly.const(Q.tower, 0)
    for f in reversed(parts):
        acc = acc * Q + f
    return acc
