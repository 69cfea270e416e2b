"""Session files: parsing, canonical printing and execution.

A session is line oriented.  Declarations come first in dependency order
(base, extensions, gamma, pair, named polynomials, sequences, chains) and
commands may follow at any point after what they use::

    base padic 3
    ext a : x^3 - 1/3 @ -1/3
    gamma rational 1/5
    pair a
    kras
    ic

Expressions are ordinary arithmetic in the declared names and ``x``; ``^``
is exponentiation.  Output is one ``key = value`` pair per line.
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InvariantBreach,
    ParseError,
    PreconditionError,
    UseBeforeDecl,
    ValxError,
)
from .extension import (
    PairOfDefinition,
    classify_purity,
    delta,
    is_key_polynomial,
    is_minimal_pair_by_value_order,
    omega,
    omega_Q,
    omega_ratio,
    structure_report,
)
from .field_tower import FieldElement, Tower, ostrowski_defect
from .fields import PAdicRationals, RatFunc, RationalFunctionField
from .newton import conjugate_differences, kras, newton_polygon
from .pcs import PcsPrefix, is_limit_at_prefix, pair_limit_check, poly_track, verify_prefix
from .polynomial import Poly
from .structure import (
    DistinguishedChain,
    ic_classify,
    j_count,
    minimal_pair_from_chain,
    resolve_minimal,
    verify_chain,
)
from .valgroup import AboveAll, QuadIrr, RationalPoint, format_rational, parse_value

COMMANDS = ("eval", "delta", "kras", "conj", "j", "newton", "minpair", "ic", "report",
            "pcs", "ostrowski")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


@dataclass
class Ratio:
    num: Poly
    den: Poly


@dataclass
class Decl:
    kind: str
    text: str  # canonical text of the line
    line: int


@dataclass
class Command:
    name: str
    args: str
    line: int
    data: dict = field(default_factory=dict)

    @property
    def text(self):
        return f"{self.name} {self.args}".strip()


@dataclass
class Session:
    tower: Tower | None = None
    spec: object = None
    pair: PairOfDefinition | None = None
    polys: dict = field(default_factory=dict)
    seqs: dict = field(default_factory=dict)
    chain: DistinguishedChain | None = None
    decls: list = field(default_factory=list)
    commands: list = field(default_factory=list)
    last_seq: str | None = None

    def to_text(self) -> str:
        items = sorted([(d.line, d.text) for d in self.decls]
                       + [(c.line, c.text) for c in self.commands])
        lines = [t for _, t in items]
        return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# expressions
# ---------------------------------------------------------------------------

def _translate(text: str):
    """Replace ``^`` by ``**``; return new text and a column map back to the input."""
    out, cols = [], []
    for i, ch in enumerate(text):
        if ch == "^":
            out.append("**")
            cols.extend([i, i])
        else:
            out.append(ch)
            cols.append(i)
    cols.append(len(text))
    return "".join(out), cols


class _Eval:
    def __init__(self, session: Session, line: int, col0: int, allow_x: bool = True):
        self.s = session
        self.line = line
        self.col0 = col0
        self.allow_x = allow_x
        self.cols = None

    def err(self, msg, node=None, cls=ParseError):
        col = self.col0
        if node is not None and self.cols is not None:
            col = self.col0 + self.cols[min(node.col_offset, len(self.cols) - 1)]
        if issubclass(cls, ParseError):
            return cls(msg, self.line, col + 1)
        return cls(f"line {self.line}, column {col + 1}: {msg}")

    def run(self, text: str):
        if not text.strip():
            raise ParseError("empty expression", self.line, self.col0 + 1)
        lead = len(text) - len(text.lstrip())
        self.col0 += lead
        text = text.strip()
        src, self.cols = _translate(text)
        try:
            tree = ast.parse(src.strip(), mode="eval")
        except SyntaxError as exc:
            off = (exc.offset or 1) - 1
            col = self.col0 + self.cols[min(off, len(self.cols) - 1)]
            raise ParseError(f"invalid expression {text!r}", self.line, col + 1)
        return self.node(tree.body)

    def _num(self, v):
        T = self.s.tower
        if isinstance(v, Fraction) and T is not None:
            return T.element(v)
        return v

    def node(self, n):
        T = self.s.tower
        if isinstance(n, ast.Constant):
            if isinstance(n.value, bool) or not isinstance(n.value, int):
                raise self.err(f"unsupported literal {n.value!r}", n)
            return Fraction(n.value)
        if isinstance(n, ast.Name):
            name = n.id
            if name == "x":
                if not self.allow_x:
                    raise self.err("x is not allowed here", n)
                return Poly.x(T)
            if name in self.s.polys:
                return self.s.polys[name]
            if T is not None and name in T.names():
                return T.gen(name)
            if self.s.pair is not None and name == self.s.pair.label:
                return self.s.pair.a
            raise self.err(f"unknown name {name!r}", n, UseBeforeDecl)
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, (ast.USub, ast.UAdd)):
            v = self.node(n.operand)
            return -v if isinstance(n.op, ast.USub) else v
        if isinstance(n, ast.BinOp):
            if isinstance(n.op, ast.Pow):
                e = n.right
                neg = False
                if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
                    neg, e = True, e.operand
                if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                    raise self.err("exponent must be an integer literal", n.right)
                k = -e.value if neg else e.value
                base = self.node(n.left)
                if isinstance(base, Poly) and k < 0:
                    raise self.err("negative power of a polynomial", n)
                if isinstance(base, Ratio):
                    raise self.err("powers of quotients are not supported", n)
                if isinstance(base, Fraction):
                    return base ** k
                if isinstance(base, FieldElement) and k < 0 and base.is_zero():
                    raise self.err("zero to a negative power", n, PreconditionError)
                return base ** k
            left = self.node(n.left)
            right = self.node(n.right)
            if isinstance(left, Ratio) or isinstance(right, Ratio):
                raise self.err("a quotient of polynomials may only appear at the top", n)
            if isinstance(n.op, ast.Add):
                return left + right
            if isinstance(n.op, ast.Sub):
                return left - right
            if isinstance(n.op, ast.Mult):
                return left * right
            if isinstance(n.op, ast.Div):
                if isinstance(right, Poly):
                    if right.degree < 1:
                        right = right.coeff(0) if not right.is_zero() else Fraction(0)
                    else:
                        lp = left if isinstance(left, Poly) else Poly.const(T, left)
                        return Ratio(lp, right)
                if (isinstance(right, Fraction) and right == 0) or (
                        isinstance(right, FieldElement) and right.is_zero()):
                    raise self.err("division by zero", n, PreconditionError)
                if isinstance(left, Fraction) and isinstance(right, Fraction):
                    return left / right
                if isinstance(left, Poly):
                    inv = (right.inverse() if isinstance(right, FieldElement)
                           else T.element(right).inverse())
                    return left * inv
                return self._num(left) / right
        raise self.err(f"unsupported syntax {type(n).__name__}", n)


def _as_poly(v, T) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, Ratio):
        raise PreconditionError("expected a polynomial, got a quotient")
    return Poly.const(T, v)


def _as_elt(v, T, ev, node_text) -> FieldElement:
    if isinstance(v, (Poly, Ratio)):
        if isinstance(v, Poly) and v.degree < 1:
            return v.coeff(0) if not v.is_zero() else T.zero()
        raise ParseError(f"expected a field element, got a polynomial: {node_text}",
                         ev.line, ev.col0 + 1)
    return T.element(v)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _split_words(s):
    return s.split()


def parse(text: str) -> Session:
    s = Session()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        head, _, rest = body.partition(" ")
        rest_col = indent + len(head) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        handler = _DECLS.get(head)
        if handler is not None:
            handler(s, rest, lineno, rest_col)
        elif head in COMMANDS:
            _parse_command(s, head, rest, lineno, rest_col)
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno, indent + 1)
    return s


def _need(s: Session, what: str, line: int, col: int):
    if what == "base" and s.tower is None:
        raise UseBeforeDecl("no base field declared yet", line, col + 1)
    if what == "gamma" and s.spec is None:
        raise UseBeforeDecl("no gamma declared yet", line, col + 1)
    if what == "pair" and s.pair is None:
        raise UseBeforeDecl("no pair declared yet", line, col + 1)


def _d_base(s: Session, rest, line, col):
    if s.tower is not None:
        raise ParseError("only one base declaration is allowed", line, 1)
    w = rest.split()
    hens = False
    if w and w[-1] == "henselian":
        hens = True
        w = w[:-1]
    if len(w) == 2 and w[0] == "padic":
        try:
            p = int(w[1])
        except ValueError:
            raise ParseError(f"expected a prime, got {w[1]!r}", line, col + 7)
        F = PAdicRationals(p)
    elif len(w) >= 3 and w[0] == "ratfun":
        k = w[1]
        if k == "Q":
            p = 0
        elif re.fullmatch(r"F\d+", k):
            p = int(k[1:])
        else:
            raise ParseError(f"coefficient field must be Fp or Q, got {k!r}", line, col + 8)
        names = w[2:]
        for n in names:
            if not _IDENT.match(n) or n in ("x", "gamma", "inf"):
                raise ParseError(f"bad variable name {n!r}", line, col + 1)
        if len(set(names)) != len(names):
            raise ParseError("repeated variable name", line, col + 1)
        F = RationalFunctionField(p, names)
    else:
        raise ParseError("expected 'base padic <p>' or 'base ratfun <Fp|Q> <vars>'", line, col + 1)
    s.tower = Tower(F, henselian=hens)
    s.decls.append(Decl("base", f"base {F.describe()}" + (" henselian" if hens else ""), line))


def _d_ext(s: Session, rest, line, col):
    _need(s, "base", line, col)
    m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*:\s*(.+?)\s*@\s*(.+)", rest)
    if not m:
        raise ParseError("expected 'ext <name> : <poly> @ <value>'", line, col + 1)
    name, ptxt, vtxt = m.groups()
    T = s.tower
    if name in T.names() or name in ("x", "gamma") or name in s.polys:
        raise ParseError(f"name {name!r} is already in use", line, col + 1)
    ev = _Eval(s, line, col + m.start(2))
    f = _as_poly(ev.run(ptxt), T)
    try:
        v = parse_value(vtxt, T.rank)
    except ValueError as exc:
        raise ParseError(str(exc), line, col + m.start(3) + 1)
    T.construct_extension(name, [c for c in f.coeffs()], v)
    s.decls.append(Decl("ext", f"ext {name} : {f} @ {v}", line))


def _d_gamma(s: Session, rest, line, col):
    _need(s, "base", line, col)
    if s.spec is not None:
        raise ParseError("gamma is already declared", line, 1)
    w = rest.split()
    r = s.tower.rank
    try:
        if w and w[0] == "rational" and len(w) == 2:
            v = parse_value(w[1], r)
            if v.gcoef:
                raise ValueError("rational gamma cannot mention gamma")
            spec = RationalPoint(v.vec)
            txt = f"gamma rational {v}"
        elif w and w[0] == "quadirr" and len(w) == 4 + r - 1:
            q0, q1 = Fraction(w[1]), Fraction(w[2])
            d = int(w[3])
            tail = tuple(Fraction(c) for c in w[4:])
            spec = QuadIrr(q0, q1, d, tail)
            txt = "gamma quadirr " + " ".join(
                [format_rational(q0), format_rational(q1), str(d)]
                + [format_rational(c) for c in tail])
        elif w == ["aboveall"]:
            spec = AboveAll(r)
            txt = "gamma aboveall"
        else:
            raise ParseError(
                "expected 'gamma rational <q>', 'gamma quadirr <q0> <q1> <d> [tail]' "
                "or 'gamma aboveall'", line, col + 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad gamma: {exc}", line, col + 1)
    s.spec = spec
    s.decls.append(Decl("gamma", txt, line))


def _d_pair(s: Session, rest, line, col):
    _need(s, "base", line, col)
    _need(s, "gamma", line, col)
    if s.pair is not None:
        raise ParseError("pair is already declared", line, 1)
    m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.+)", rest)
    if m:
        label, etxt, off = m.group(1), m.group(2), m.start(2)
        if label in s.tower.names() or label == "x":
            raise ParseError(f"name {label!r} is already in use", line, col + 1)
    else:
        etxt, off = rest, 0
        label = rest if _IDENT.match(rest) else "a"
    ev = _Eval(s, line, col + off, allow_x=False)
    a = _as_elt(ev.run(etxt), s.tower, ev, etxt)
    s.pair = PairOfDefinition(a, s.spec, 0, label)
    if m:
        txt = f"pair {label} = {a}"
    elif _IDENT.match(rest):
        txt = f"pair {rest}"
    else:
        txt = f"pair {a}"
    s.decls.append(Decl("pair", txt, line))


def _d_poly(s: Session, rest, line, col):
    _need(s, "base", line, col)
    m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.+)", rest)
    if not m:
        raise ParseError("expected 'poly <name> = <expr>'", line, col + 1)
    name = m.group(1)
    if name in s.tower.names() or name == "x" or name in s.polys:
        raise ParseError(f"name {name!r} is already in use", line, col + 1)
    ev = _Eval(s, line, col + m.start(2))
    f = _as_poly(ev.run(m.group(2)), s.tower)
    s.polys[name] = f
    s.decls.append(Decl("poly", f"poly {name} = {f}", line))


def _elements(s, text, line, col):
    out = []
    pos = 0
    for part in text.split(","):
        ev = _Eval(s, line, col + pos, allow_x=False)
        out.append(_as_elt(ev.run(part), s.tower, ev, part))
        pos += len(part) + 1
    return out


def _d_seq(s: Session, rest, line, col):
    _need(s, "base", line, col)
    m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.+)", rest)
    if not m:
        raise ParseError("expected 'seq <name> = <elt>, <elt>, ...'", line, col + 1)
    name = m.group(1)
    els = _elements(s, m.group(2), line, col + m.start(2))
    s.seqs[name] = PcsPrefix(els)
    s.last_seq = name
    s.decls.append(Decl("seq", f"seq {name} = " + ", ".join(str(e) for e in els), line))


def _d_chain(s: Session, rest, line, col):
    _need(s, "base", line, col)
    els = _elements(s, rest, line, col)
    if len(els) < 2:
        raise ParseError("a chain needs at least two elements", line, col + 1)
    s.chain = DistinguishedChain(els)
    s.decls.append(Decl("chain", "chain " + ", ".join(str(e) for e in els), line))


_DECLS = {
    "base": _d_base,
    "ext": _d_ext,
    "gamma": _d_gamma,
    "pair": _d_pair,
    "poly": _d_poly,
    "seq": _d_seq,
    "chain": _d_chain,
}


def _parse_command(s: Session, name, rest, line, col):
    cmd = Command(name, " ".join(rest.split()), line)
    if name in ("eval", "delta", "newton"):
        _need(s, "base", line, col)
        if name != "newton":
            _need(s, "pair", line, col)
        if not rest:
            raise ParseError(f"{name} needs an argument", line, col + 1)
        cmd.data["value"] = _Eval(s, line, col).run(rest)
    elif name in ("kras", "conj", "j", "minpair", "ic", "report"):
        _need(s, "pair", line, col)
        if rest:
            raise ParseError(f"{name} takes no arguments", line, col + 1)
    elif name == "pcs":
        sub, _, arg = rest.partition(" ")
        if s.last_seq is None:
            raise UseBeforeDecl("no seq declared yet", line, col + 1)
        cmd.data["seq"] = s.seqs[s.last_seq]
        acol = col + len(sub) + 1
        if sub == "verify" and not arg.strip():
            pass
        elif sub == "limit" and arg.strip():
            ev = _Eval(s, line, acol, allow_x=False)
            cmd.data["value"] = _as_elt(ev.run(arg), s.tower, ev, arg)
        elif sub == "track" and arg.strip():
            cmd.data["value"] = _as_poly(_Eval(s, line, acol).run(arg), s.tower)
        elif sub == "pair" and not arg.strip():
            _need(s, "pair", line, col)
        else:
            raise ParseError("expected 'pcs verify', 'pcs limit <elt>', 'pcs track <poly>' "
                             "or 'pcs pair'", line, col + 1)
        cmd.data["sub"] = sub
    elif name == "ostrowski":
        try:
            nums = [int(w) for w in rest.split()]
        except ValueError:
            nums = []
        if len(nums) != 4:
            raise ParseError("expected 'ostrowski <n> <e> <f> <p>'", line, col + 1)
        cmd.data["nums"] = nums
    s.commands.append(cmd)


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def _vals(vs) -> str:
    return ", ".join(str(v) for v in vs)


def execute(s: Session, cmd: Command) -> list:
    """Run one command; returns a list of (key, value) pairs."""
    pd = s.pair
    n = cmd.name
    if n == "eval":
        v = cmd.data["value"]
        if isinstance(v, Ratio):
            w = omega_ratio(v.num, v.den, pd)
        else:
            w = omega(_as_poly(v, s.tower), pd)
        return [(f"omega({cmd.args})", str(w))]
    if n == "delta":
        return [(f"delta({cmd.args})", str(delta(_as_poly(cmd.data["value"], s.tower), pd)))]
    if n == "kras":
        return [("kras", str(kras(pd.a, pd.over, pd.minpoly)))]
    if n == "conj":
        return [("conj", _vals(conjugate_differences(pd.a, pd.over, pd.minpoly).values))]
    if n == "j":
        return [("j", str(j_count(pd)))]
    if n == "newton":
        poly = newton_polygon(_as_poly(cmd.data["value"], s.tower))
        out = [("newton.segment", f"{sl} {m}") for sl, m in poly.segments]
        if poly.ord0:
            out.append(("newton.zero_roots", str(poly.ord0)))
        return out
    if n == "minpair":
        out = [("minpair", str(is_minimal_pair_by_value_order(pd)).lower())]
        if s.chain is not None:
            ok = verify_chain(s.chain)
            out.append(("minpair.chain_verified", str(ok).lower()))
            if ok:
                mp = minimal_pair_from_chain(s.chain, s.spec)
                out.append(("minpair.chain_choice", str(mp.a)))
        return out
    if n == "ic":
        rep = ic_classify(pd, s.chain)
        return [(f"ic.{k}", v) for k, v in rep.lines()]
    if n == "report":
        pd = resolve_minimal(pd, s.chain)
        rep = structure_report(pd, asserted=True)
        out = []
        if pd is not s.pair:
            out.append(("minimal_pair", f"{pd.label} = {pd.a}"))
        out.extend(rep.lines())
        out.append(("purity", str(classify_purity(pd))))
        kp = is_key_polynomial(pd)
        out.append(("keypoly", "true" if kp else "undecided"))
        if pd.is_separable():
            wq = omega_Q(pd)
            wt = omega(pd.minpoly, pd)
            if wq != wt:
                raise InvariantBreach(f"omega(Q) routes disagree: {wq} vs {wt}")
        return out
    if n == "pcs":
        p = cmd.data["seq"]
        sub = cmd.data["sub"]
        if sub == "verify":
            return [("pcs.verify", str(verify_prefix(p)).lower()),
                    ("pcs.gaps", _vals(p.gaps()))]
        if sub == "limit":
            return [("pcs.limit", str(is_limit_at_prefix(cmd.data["value"], p)).lower())]
        if sub == "track":
            tr = poly_track(cmd.data["value"], p)
            return [("pcs.track", tr.verdict), ("pcs.values", _vals(tr.values)),
                    ("pcs.tail_start", str(tr.tail_start))]
        rep = pair_limit_check(pd, p)
        return [(f"pcs.pair.{k}", v) for k, v in rep.lines()]
    if n == "ostrowski":
        return [("ostrowski.defect", str(ostrowski_defect(*cmd.data["nums"])))]
    raise InvariantBreach(f"unknown command {n}")


def run(s: Session, as_json: bool = False):
    """Execute all commands.  Returns (stdout text, stderr text, exit code)."""
    out = []
    for cmd in s.commands:
        try:
            pairs = execute(s, cmd)
        except InvariantBreach as exc:
            return _join(out), f"line {cmd.line}: invariant breach: {exc}\n", 4
        except (PreconditionError, ZeroDivisionError) as exc:
            return _join(out), f"line {cmd.line}: {type(exc).__name__}: {exc}\n", 3
        except ValxError as exc:
            return _join(out), f"line {cmd.line}: {type(exc).__name__}: {exc}\n", 3
        if as_json:
            out.append(json.dumps({"line": cmd.line, "command": cmd.text,
                                   "result": dict(pairs)}, sort_keys=False))
        else:
            out.extend(f"{k} = {v}" for k, v in pairs)
    return _join(out), "", 0


def _join(lines) -> str:
    return "".join(line + "\n" for line in lines)


def run_text(text: str, as_json: bool = False):
    """Parse and run; maps every failure to the documented exit codes."""
    try:
        s = parse(text)
    except ParseError as exc:
        return "", f"parse error: {exc}\n", 2
    except InvariantBreach as exc:
        return "", f"invariant breach: {exc}\n", 4
    except (PreconditionError, ZeroDivisionError) as exc:
        return "", f"{type(exc).__name__}: {exc}\n", 3
    return run(s, as_json)
