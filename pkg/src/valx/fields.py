"""Base valued fields.

Two families are supported:

``PAdicRationals(p)``
    Q with the p-adic valuation, ``nu(p) = 1``.  Elements are plain
    :class:`fractions.Fraction` objects.

``RationalFunctionField(p, names)``
    k(u_1, ..., u_r) with k = F_p (or Q when ``p == 0``) and the lex monomial
    valuation ``nu(sum c_I u^I) = min{I : c_I != 0}``.  Elements are
    :class:`RatFunc` objects.

A rational function is kept as ``num/den`` where both parts are Laurent
polynomials (sparse dicts from exponent tuples to coefficients), the
denominator's lex-smallest term is exactly ``1`` and numerator and
denominator are coprime.  This form is canonical, and it makes the
valuation the lex-smallest exponent of the numerator.
"""

from __future__ import annotations

import functools
from fractions import Fraction

import flint

from .errors import NonzeroValue, PreconditionError
from .valgroup import INF, GroupValue, format_rational


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def padic_order(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


class PAdicRationals:
    """The rationals with the p-adic valuation."""

    kind = "padic"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.char = 0
        self.residue_char = p
        self.rank = 1
        self.names = ()
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, PAdicRationals) and other.p == self.p

    def __hash__(self):
        return hash(("padic", self.p))

    @property
    def char_exponent(self) -> int:
        return self.residue_char

    def residue_field_name(self) -> str:
        return f"F{self.p}"

    def describe(self) -> str:
        return f"padic {self.p}"

    def coerce(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def gen(self, name):
        raise KeyError(name)

    def is_zero(self, x) -> bool:
        return not x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def value(self, x):
        if not x:
            return INF
        v = padic_order(abs(x.numerator), self.p) - padic_order(x.denominator, self.p)
        return GroupValue((Fraction(v),), 0)

    def residue(self, x) -> int:
        v = self.value(x)
        if v is INF or v.vec[0] != 0:
            raise NonzeroValue(f"residue of {self.format(x)} (value {v}) is undefined")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def format(self, x) -> str:
        return format_rational(Fraction(x))


def _cnorm(c, p):
    return c % p if p else c


def _padd(a: dict, b: dict, p: int) -> dict:
    r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) + c
        if p:
            s %= p
        if s:
            r[e] = s
        else:
            r.pop(e, None)
    return r


def _pscale(a: dict, c, p: int) -> dict:
    if p:
        c %= p
    if not c:
        return {}
    if p:
        return {e: x * c % p for e, x in a.items()}
    return {e: x * c for e, x in a.items()}


def _pshift(a: dict, s: tuple) -> dict:
    return {tuple(x + y for x, y in zip(e, s)): c for e, c in a.items()}


_FLINT_MUL_CUTOFF = 48


@functools.lru_cache(maxsize=None)
def _flint_ctx(nvars: int, p: int):
    names = tuple(f"x{i}" for i in range(nvars))
    if p:
        return flint.fmpz_mod_mpoly_ctx.get(names, modulus=p)
    return flint.fmpq_mpoly_ctx.get(names)


def _to_flint(a: dict, shift: tuple, p: int):
    ctx = _flint_ctx(len(shift), p)
    if p:
        return ctx.from_dict({tuple(x + y for x, y in zip(e, shift)): int(c) for e, c in a.items()})
    return ctx.from_dict({tuple(x + y for x, y in zip(e, shift)): flint.fmpq(c.numerator, c.denominator)
                          for e, c in a.items()})


def _from_flint(f, unshift: tuple, p: int) -> dict:
    out = {}
    for e, c in f.to_dict().items():
        key = tuple(int(x) - s for x, s in zip(e, unshift))
        out[key] = int(c) if p else Fraction(int(c.p), int(c.q))
    return out


def _low_shift(*polys) -> tuple:
    n = len(next(iter(polys[0])))
    return tuple(max(0, -min(e[i] for d in polys for e in d)) for i in range(n))


def _flint_mul(a: dict, b: dict, p: int) -> dict:
    sa, sb = _low_shift(a), _low_shift(b)
    prod = _to_flint(a, sa, p) * _to_flint(b, sb, p)
    return _from_flint(prod, tuple(x + y for x, y in zip(sa, sb)), p)


def _pmul(a: dict, b: dict, p: int) -> dict:
    if len(a) == 1:
        (e, c), = a.items()
        return _pshift(_pscale(b, c, p), e)
    if len(b) == 1:
        (e, c), = b.items()
        return _pshift(_pscale(a, c, p), e)
    if len(a) * len(b) > _FLINT_MUL_CUTOFF:
        return _flint_mul(a, b, p)
    r = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            r[e] = r.get(e, 0) + c1 * c2
    if p:
        return {e: c % p for e, c in r.items() if c % p}
    return {e: c for e, c in r.items() if c}


class RatFunc:
    """An element of k(u_1, ..., u_r); see the module docstring for the form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num: dict, den: dict):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def make(cls, field, num: dict, den: dict, reduced: bool = False) -> "RatFunc":
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return field.zero
        p = field.p
        if len(den) > 1 and not reduced:
            num, den = field._cancel(num, den)
        e0 = min(den)
        c0 = den[e0]
        neg = tuple(-x for x in e0)
        ci = field._cinv(c0)
        if len(den) > 1 or c0 != 1 or any(e0):
            num = _pshift(_pscale(num, ci, p), neg)
            den = _pshift(_pscale(den, ci, p), neg)
        return cls(field, num, den)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("rational functions over different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def is_polynomial(self) -> bool:
        return self.den is self.field._one_dict or self.den == self.field._one_dict

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        p = F.p
        if self.is_polynomial() and o.is_polynomial():
            n = _padd(self.num, o.num, p)
            return RatFunc(F, n, F._one_dict) if n else F.zero
        if self.den == o.den:
            return RatFunc.make(F, _padd(self.num, o.num, p), self.den)
        n = _padd(_pmul(self.num, o.den, p), _pmul(o.num, self.den, p), p)
        return RatFunc.make(F, n, _pmul(self.den, o.den, p))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return RatFunc(F, _pscale(self.num, -1, F.p), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        p = F.p
        if not self.num or not o.num:
            return F.zero
        n = _pmul(self.num, o.num, p)
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc(F, n, F._one_dict)
        if self.is_polynomial():
            return RatFunc.make(F, n, o.den)
        if o.is_polynomial():
            return RatFunc.make(F, n, self.den)
        return RatFunc.make(F, n, _pmul(self.den, o.den, p))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc.make(self.field, self.den, self.num, reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc({self.field.format(self)})"

    __str__ = lambda self: self.field.format(self)


class RationalFunctionField:
    """k(u_1, ..., u_r), k = F_p or Q, with the lex monomial valuation."""

    kind = "ratfun"

    def __init__(self, p: int, names):
        names = tuple(names)
        if not names:
            raise PreconditionError("rational function field needs at least one variable")
        if p and not _is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.names = names
        self.nvars = len(names)
        self.char = p
        self.residue_char = p
        self.rank = len(names)
        self._zexp = (0,) * self.nvars
        self._one_dict = {self._zexp: 1}
        self.zero = RatFunc(self, {}, self._one_dict)
        self.one = RatFunc(self, {self._zexp: 1}, self._one_dict)

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.p == self.p and other.names == self.names)

    def __hash__(self):
        return hash(("ratfun", self.p, self.names))

    @property
    def char_exponent(self) -> int:
        return self.p if self.p else 1

    def residue_field_name(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    def describe(self) -> str:
        return f"ratfun {'F%d' % self.p if self.p else 'Q'} {' '.join(self.names)}"

    def _cinv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / Fraction(c)

    def _cancel(self, num: dict, den: dict):
        """Divide out gcd(num, den); exponents may be negative on input."""
        shift = _low_shift(num, den)
        n = _to_flint(num, shift, self.p)
        d = _to_flint(den, shift, self.p)
        g = n.gcd(d)
        if g.is_constant():
            return num, den
        zero = (0,) * self.nvars
        return _from_flint(n // g, zero, self.p), _from_flint(d // g, zero, self.p)

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            if self.p:
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} is not defined in characteristic {self.p}")
                return self.from_int(x.numerator * pow(x.denominator, -1, self.p))
            return RatFunc(self, {self._zexp: x}, self._one_dict) if x else self.zero
        raise TypeError(f"cannot coerce {x!r} into {self.describe()}")

    def from_int(self, n: int) -> RatFunc:
        c = _cnorm(n, self.p)
        if not c:
            return self.zero
        return RatFunc(self, {self._zexp: c if self.p else Fraction(c)}, self._one_dict)

    def gen(self, name: str) -> RatFunc:
        i = self.names.index(name)
        e = tuple(int(j == i) for j in range(self.nvars))
        return RatFunc(self, {e: 1}, self._one_dict)

    def monomial(self, exps, coeff=1) -> RatFunc:
        exps = tuple(exps)
        neg = tuple(-x if x < 0 else 0 for x in exps)
        if any(neg):
            return RatFunc.make(self, {tuple(x + y for x, y in zip(exps, neg)): _cnorm(coeff, self.p)},
                                {neg: 1})
        c = _cnorm(coeff, self.p)
        return RatFunc(self, {exps: c}, self._one_dict) if c else self.zero

    def is_zero(self, x) -> bool:
        return not x.num

    def inv(self, x):
        return x.inverse()

    def value(self, x):
        if not x.num:
            return INF
        return GroupValue(tuple(Fraction(c) for c in min(x.num)), 0)

    def residue(self, x):
        v = self.value(x)
        if v is INF or not v.is_zero():
            raise NonzeroValue(f"residue of {self.format(x)} (value {v}) is undefined")
        c = x.num[min(x.num)]
        return c if self.p else Fraction(c)

    # text ---------------------------------------------------------------
    def _fmt_poly(self, d: dict) -> str:
        if not d:
            return "0"
        parts = []
        for e in sorted(d, reverse=True):
            c = d[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(self.names, e) if k)
            if self.p:
                # print coefficients in the symmetric range for readability
                c = c if c <= self.p // 2 else c - self.p
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def format(self, x: RatFunc) -> str:
        n = self._fmt_poly(x.num)
        if x.is_polynomial():
            return n
        return f"({n})/({self._fmt_poly(x.den)})"
