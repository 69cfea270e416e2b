"""Towers of totally ramified simple extensions over a base valued field.

Level 0 is the base field.  Level k adjoins a root ``a_k`` of a monic
polynomial over level k-1 whose root value has order exactly ``deg`` modulo
the value group of level k-1.  In that situation the values of
``1, a_k, ..., a_k^(n-1)`` are pairwise distinct modulo the lower group, so

    nu(sum c_i a_k^i) = min_i (nu(c_i) + i*nu(a_k))

with the minimum attained once.  That makes values and residues cheap and
exact at every level.

Elements are handled as raw data by the level objects (a base element at
level 0, a tuple of parent raws of length ``deg`` above) and wrapped in
:class:`FieldElement` for user code.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CharZero,
    DegreeOne,
    InconsistentRootValue,
    LevelMismatch,
    NonMonic,
    NonNegativeValue,
    NotPowerOfCharExponent,
    NotTotallyRamified,
    PreconditionError,
)
from .fields import PAdicRationals, RatFunc, RationalFunctionField
from .valgroup import INF, GroupValue, SubgroupDesc, _lex_sign, torsion_order


# ---------------------------------------------------------------------------
# levels (raw arithmetic)
# ---------------------------------------------------------------------------

class BaseLevel:
    index = 0
    degree = 1
    name = None
    parent = None

    def __init__(self, field):
        self.field = field
        self.zero = field.zero
        self.one = field.one
        self.value_group = SubgroupDesc.standard(field.rank)
        self.total_degree = 1

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return self.field.inv(x)

    def is_zero(self, x):
        return not x

    def is_one(self, x):
        return x == self.one

    def value(self, x):
        return self.field.value(x)

    def residue(self, x):
        return self.field.residue(x)

    def coerce(self, x):
        return self.field.coerce(x)

    def format(self, x):
        return self.field.format(x)

    def flatten(self, x, j):
        return [x]

    def simple(self, x):
        """True when ``format(x)`` can stand next to ``*`` without parentheses."""
        s = self.format(x)
        return not any(c in s for c in " /(") and not s.startswith("-")


class ExtLevel:
    """Level ``index`` = parent(a) with a root of ``x^n + m_{n-1}x^{n-1} + ... + m_0``."""

    def __init__(self, parent, name, mod, root_value, index):
        self.parent = parent
        self.name = name
        self.mod = tuple(mod)  # m_0..m_{n-1}, parent raws
        self.degree = len(self.mod)
        self.root_value = root_value
        self.index = index
        self.total_degree = parent.total_degree * self.degree
        self.value_group = parent.value_group.extend(root_value)
        P = parent
        self.zero = (P.zero,) * self.degree
        self.one = (P.one,) + (P.zero,) * (self.degree - 1)
        self.gen = (P.zero, P.one) + (P.zero,) * (self.degree - 2)

    @property
    def field(self):
        return self.parent.field

    def add(self, x, y):
        P = self.parent
        return tuple(P.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        P = self.parent
        return tuple(P.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        P = self.parent
        return tuple(P.neg(a) for a in x)

    def is_zero(self, x):
        P = self.parent
        return all(P.is_zero(a) for a in x)

    def is_one(self, x):
        P = self.parent
        return P.is_one(x[0]) and all(P.is_zero(a) for a in x[1:])

    def scale(self, c, x):
        P = self.parent
        return tuple(P.mul(c, a) for a in x)

    def mul(self, x, y):
        P = self.parent
        n = self.degree
        xs = [(i, a) for i, a in enumerate(x) if not P.is_zero(a)]
        ys = [(j, b) for j, b in enumerate(y) if not P.is_zero(b)]
        if not xs or not ys:
            return self.zero
        prod = [None] * (2 * n - 1)
        for i, a in xs:
            for j, b in ys:
                t = P.mul(a, b)
                k = i + j
                prod[k] = t if prod[k] is None else P.add(prod[k], t)
        mod = self.mod
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c is None or P.is_zero(c):
                continue
            for j, m in enumerate(mod):
                if P.is_zero(m):
                    continue
                t = P.mul(c, m)
                i = k - n + j
                prod[i] = P.neg(t) if prod[i] is None else P.sub(prod[i], t)
        return tuple(P.zero if c is None else c for c in prod[:n])

    def inv(self, x):
        P = self.parent
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        r0 = list(self.mod) + [P.one]
        r1 = _trim(P, list(x))
        s0, s1 = [], [P.one]
        while len(r1) > 1:
            q, r = _raw_divmod(P, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _raw_sub(P, s0, _raw_mul(P, q, s1))
        c = P.inv(r1[0])
        out = [P.mul(c, a) for a in s1]
        return tuple(out + [P.zero] * (self.degree - len(out)))

    def value(self, x):
        P = self.parent
        best = INF
        for i, c in enumerate(x):
            if P.is_zero(c):
                continue
            v = P.value(c) + self.root_value * i
            if best is INF or v < best:
                best = v
        return best

    def residue(self, x):
        v = self.value(x)
        if v is INF or not v.is_zero():
            from .errors import NonzeroValue

            raise NonzeroValue(f"residue of an element of value {v} is undefined")
        return self.parent.residue(x[0])

    def from_parent(self, c):
        return (c,) + (self.parent.zero,) * (self.degree - 1)

    def flatten(self, x, j):
        if j == self.index:
            return [x]
        out = []
        for c in x:
            out.extend(self.parent.flatten(c, j))
        return out

    def format(self, x):
        P = self.parent
        terms = []
        for i in range(self.degree - 1, -1, -1):
            c = x[i]
            if P.is_zero(c):
                continue
            mono = "" if i == 0 else (self.name if i == 1 else f"{self.name}^{i}")
            cs = P.format(c)
            if not mono:
                terms.append(cs if P.simple(c) else f"({cs})")
            elif P.is_one(c):
                terms.append(mono)
            elif P.simple(c):
                terms.append(f"{cs}*{mono}")
            else:
                terms.append(f"({cs})*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms)

    def simple(self, x):
        nz = [i for i, c in enumerate(x) if not self.parent.is_zero(c)]
        if len(nz) != 1:
            return len(nz) == 0
        i = nz[0]
        return i == 0 and self.parent.simple(x[0]) or (i > 0 and self.parent.is_one(x[i]))


def _trim(L, p):
    while p and L.is_zero(p[-1]):
        p.pop()
    return p


def _raw_sub(L, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else L.zero
        y = b[i] if i < len(b) else L.zero
        out.append(L.sub(x, y))
    return _trim(L, out)


def _raw_mul(L, a, b):
    if not a or not b:
        return []
    out = [L.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if L.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not L.is_zero(y):
                out[i + j] = L.add(out[i + j], L.mul(x, y))
    return _trim(L, out)


def _raw_divmod(L, a, b):
    """Division with remainder of raw coefficient lists over level L."""
    a = list(a)
    db = len(b) - 1
    lead_inv = None if L.is_one(b[-1]) else L.inv(b[-1])
    q = [L.zero] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if L.is_zero(c):
            continue
        if lead_inv is not None:
            c = L.mul(c, lead_inv)
        q[k - db] = c
        for j in range(db + 1):
            if not L.is_zero(b[j]):
                a[k - db + j] = L.sub(a[k - db + j], L.mul(c, b[j]))
    return _trim(L, q), _trim(L, a[:db])


# ---------------------------------------------------------------------------
# tower and elements
# ---------------------------------------------------------------------------

class Tower:
    """A base valued field with a chain of totally ramified extensions."""

    def __init__(self, base, henselian: bool = False):
        self.base = base
        self.henselian = henselian
        self.levels = [BaseLevel(base)]
        self._names = {}
        if isinstance(base, RationalFunctionField):
            for n in base.names:
                self._names[n] = (0, base.gen(n))

    @property
    def rank(self) -> int:
        return self.base.rank

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    @property
    def char(self) -> int:
        return self.base.char

    @property
    def residue_char(self) -> int:
        return self.base.residue_char

    @property
    def char_exponent(self) -> int:
        return self.base.char_exponent

    def level(self, k: int):
        return self.levels[k]

    def names(self):
        return list(self._names)

    def gen(self, name: str) -> "FieldElement":
        k, raw = self._names[name]
        return FieldElement(self, k, raw)

    def element(self, x, level: int | None = None) -> "FieldElement":
        if isinstance(x, FieldElement):
            e = x
        elif isinstance(x, (int, Fraction, RatFunc)):
            e = FieldElement(self, 0, self.levels[0].coerce(x))
        else:
            raise TypeError(f"cannot make a tower element from {x!r}")
        return e if level is None else e.lift(level)

    def zero(self, level=0):
        return FieldElement(self, level, self.levels[level].zero)

    def one(self, level=0):
        return FieldElement(self, level, self.levels[level].one)

    def construct_extension(self, name: str, minpoly, root_value: GroupValue) -> int:
        """Adjoin a root ``name`` of ``minpoly`` with certified value ``root_value``.

        ``minpoly`` is a list of coefficients, lowest degree first, each
        coercible to the current top level.  Returns the new level index.
        """
        if name in self._names:
            raise PreconditionError(f"name {name!r} is already declared")
        from .newton import hull_segments

        top = self.top
        L = self.levels[top]
        coeffs = [self.element(c).lift(top).raw for c in minpoly]
        coeffs = _trim(L, coeffs)
        n = len(coeffs) - 1
        if n < 1:
            raise DegreeOne("minimal polynomial must have degree >= 2")
        if not L.is_one(coeffs[-1]):
            raise NonMonic("minimal polynomial must be monic")
        if n < 2:
            raise DegreeOne("minimal polynomial must have degree >= 2")
        if root_value is INF or root_value.gcoef:
            raise InconsistentRootValue("root value must be a finite rational value")
        if root_value.rank != self.rank:
            from .errors import RankMismatch

            raise RankMismatch(f"root value of rank {root_value.rank} in a rank-{self.rank} tower")
        pts = [(i, L.value(c)) for i, c in enumerate(coeffs) if not L.is_zero(c)]
        slopes = [s for s, _ in hull_segments(pts, None)]
        if root_value not in slopes:
            shown = ", ".join(str(s) for s in slopes) or "none"
            raise InconsistentRootValue(
                f"{root_value} is not a Newton polygon slope (slopes: {shown})")
        e = torsion_order(root_value, L.value_group)
        if e != n:
            raise NotTotallyRamified(
                f"root value {root_value} has order {e} modulo the value group, degree is {n}")
        lvl = ExtLevel(L, name, coeffs[:-1], root_value, top + 1)
        self.levels.append(lvl)
        self._names[name] = (lvl.index, lvl.gen)
        return lvl.index

    def ramification_index(self, k: int | None = None) -> int:
        k = self.top if k is None else k
        return self.levels[k].total_degree

    def minimal_polynomial(self, e: "FieldElement", over: int = 0) -> list:
        """Monic minimal polynomial of ``e`` over level ``over``, lowest degree first."""
        e = self.element(e)
        if e.level < over:
            e = e.lift(over)
        k = e.level
        L = self.levels[k]
        B = self.levels[over]
        dim = L.total_degree // B.total_degree
        # rows: coordinate vectors of powers, kept in echelon form with combos
        pivots = []  # (pivot col, row vector, combo vector)
        power = L.one
        for m in range(dim + 1):
            vec = L.flatten(power, over)
            combo = [B.zero] * m + [B.one]
            for col, row, rc in pivots:
                c = vec[col]
                if B.is_zero(c):
                    continue
                vec = [B.sub(a, B.mul(c, b)) for a, b in zip(vec, row)]
                combo = [B.sub(a, B.mul(c, b)) for a, b in
                         zip(combo, rc + [B.zero] * (len(combo) - len(rc)))]
            col = next((i for i, c in enumerate(vec) if not B.is_zero(c)), None)
            if col is None:
                # combo . (1, e, ..., e^m) = 0 with combo[m] = 1
                return [FieldElement(self, over, c) for c in combo]
            inv = B.inv(vec[col])
            pivots.append((col, [B.mul(inv, a) for a in vec], [B.mul(inv, a) for a in combo]))
            power = L.mul(power, e.raw)
        raise AssertionError("no linear dependence among powers")


class FieldElement:
    """An element of some tower level.  Mixed-level arithmetic lifts upward."""

    __slots__ = ("tower", "level", "raw")

    def __init__(self, tower: Tower, level: int, raw):
        self.tower = tower
        self.level = level
        self.raw = raw

    @property
    def L(self):
        return self.tower.levels[self.level]

    def lift(self, k: int) -> "FieldElement":
        if k < self.level:
            raise LevelMismatch(f"cannot move an element of level {self.level} down to level {k}")
        raw = self.raw
        for j in range(self.level + 1, k + 1):
            raw = self.tower.levels[j].from_parent(raw)
        return FieldElement(self.tower, k, raw)

    def lower(self) -> "FieldElement":
        """The same element at the lowest level containing it."""
        k, raw = self.level, self.raw
        while k > 0:
            P = self.tower.levels[k - 1]
            if not all(P.is_zero(c) for c in raw[1:]):
                break
            k, raw = k - 1, raw[0]
        return FieldElement(self.tower, k, raw)

    def _pair(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, (int, Fraction, RatFunc)):
                other = self.tower.element(other)
            else:
                return None, None
        elif other.tower is not self.tower:
            raise LevelMismatch("elements of different towers")
        k = max(self.level, other.level)
        return self.lift(k), other.lift(k)

    def _wrap(self, raw, k=None):
        return FieldElement(self.tower, self.level if k is None else k, raw)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a._wrap(a.L.add(a.raw, b.raw))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a._wrap(a.L.sub(a.raw, b.raw))

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a._wrap(a.L.sub(b.raw, a.raw))

    def __neg__(self):
        return self._wrap(self.L.neg(self.raw))

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a._wrap(a.L.mul(a.raw, b.raw))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return self._wrap(self.L.inv(self.raw))

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.tower.one(self.level)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.L.is_zero(self.raw)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.L.is_zero(a.L.sub(a.raw, b.raw))

    def __hash__(self):
        low = self.lower()
        return hash((low.level, _freeze(low.raw)))

    def value(self):
        return self.L.value(self.raw)

    def residue(self):
        return self.L.residue(self.raw)

    def coefficients(self) -> list:
        """Coefficients over the parent level (lowest power first)."""
        if self.level == 0:
            return [self]
        return [FieldElement(self.tower, self.level - 1, c) for c in self.raw]

    def __str__(self):
        return self.L.format(self.raw)

    def __repr__(self):
        return f"FieldElement<{self.level}>({self})"


def _freeze(raw):
    if isinstance(raw, tuple):
        return tuple(_freeze(c) for c in raw)
    return raw


# ---------------------------------------------------------------------------
# small arithmetic facts
# ---------------------------------------------------------------------------

def artin_schreier_root_value(c: FieldElement) -> GroupValue:
    """Value of a root of ``x^p - x - c`` when ``nu(c) < 0``: it is ``nu(c)/p``."""
    p = c.tower.char
    if not p:
        raise CharZero("Artin-Schreier root values need positive characteristic")
    v = c.value()
    if v is INF or _lex_sign(v.vec) >= 0:
        raise NonNegativeValue(f"nu(c) = {v} is not negative")
    return v.divide(p)


def ostrowski_defect(n: int, e: int, f: int, p: int) -> int:
    """The exponent d with ``n = e*f*p^d``."""
    if min(n, e, f, p) < 1:
        raise PreconditionError("n, e, f, p must be positive")
    if n % (e * f):
        raise NotPowerOfCharExponent(f"{e}*{f} does not divide {n}")
    q = n // (e * f)
    d = 0
    if p == 1:
        if q != 1:
            raise NotPowerOfCharExponent(f"{q} is not a power of 1")
        return 0
    while q % p == 0:
        q //= p
        d += 1
    if q != 1:
        raise NotPowerOfCharExponent(f"{n // (e * f)} is not a power of {p}")
    return d


def base_field(kind: str, *args):
    if kind == "padic":
        return PAdicRationals(*args)
    return RationalFunctionField(*args)
