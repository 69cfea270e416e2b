"""Finite prefixes of pseudo-Cauchy sequences.

Everything here is evidence about a finite prefix z_0, ..., z_m; nothing is
claimed about an infinite sequence.  The gaps are
``gamma_mu = nu(z_mu - z_{mu+1})`` for mu < m, so a prefix with m + 1
elements has m gaps and the last element only serves to fix the last gap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .extension import PairOfDefinition
from .polynomial import Poly
from .valgroup import INF, cmp


@dataclass
class PcsPrefix:
    elements: list

    def __post_init__(self):
        if len(self.elements) < 3:
            raise PreconditionError("a prefix needs at least three elements")

    @property
    def m(self) -> int:
        return len(self.elements) - 1

    def gaps(self) -> list:
        z = self.elements
        return [(z[i] - z[i + 1]).value() for i in range(self.m)]


def _increasing(vals) -> bool:
    return all(v is not INF and w is not INF and cmp(v, w, None) < 0
               for v, w in zip(vals, vals[1:]))


def verify_prefix(p: PcsPrefix) -> bool:
    """Strictly increasing gaps, and nu(z_mu - z_rho) = gamma_mu for every mu < rho."""
    gaps = p.gaps()
    if not _increasing(gaps):
        return False
    z = p.elements
    for mu in range(p.m):
        for rho in range(mu + 1, p.m + 1):
            if (z[mu] - z[rho]).value() != gaps[mu]:
                return False
    return True


def is_limit_at_prefix(y, p: PcsPrefix) -> bool:
    gaps = p.gaps()
    return all((y - z).value() == g for z, g in zip(p.elements, gaps))


@dataclass(frozen=True)
class Track:
    verdict: str  # IncreasingOnTail, ConstantOnTail or Mixed
    values: tuple
    tail_start: int

    def __str__(self):
        return self.verdict


def poly_track(f: Poly, p: PcsPrefix) -> Track:
    """nu f(z_mu) for mu < m, classified on the longest monotone suffix."""
    vals = [f(z).value() for z in p.elements[: p.m]]

    def c(v, w):
        return cmp(v, w, None)

    n = len(vals)
    if n == 1:
        return Track("ConstantOnTail", tuple(vals), 0)
    last = c(vals[-2], vals[-1])
    start = n - 1
    if last == 0:
        while start > 0 and c(vals[start - 1], vals[start]) == 0:
            start -= 1
        return Track("ConstantOnTail", tuple(vals), start)
    if last < 0:
        while start > 0 and c(vals[start - 1], vals[start]) < 0:
            start -= 1
        return Track("IncreasingOnTail", tuple(vals), start)
    return Track("Mixed", tuple(vals), n - 1)


@dataclass(frozen=True)
class PairLimitReport:
    gamma_above_gaps: bool
    a_is_limit: bool
    first_mismatch: int | None
    consistent: bool
    contradiction_case: bool

    def lines(self):
        return [
            ("gamma_above_gaps", str(self.gamma_above_gaps).lower()),
            ("a_is_limit", str(self.a_is_limit).lower()),
            ("first_mismatch", "none" if self.first_mismatch is None else str(self.first_mismatch)),
            ("consistent", str(self.consistent).lower()),
            ("contradiction_case", str(self.contradiction_case).lower()),
        ]


def pair_limit_check(pd: PairOfDefinition, p: PcsPrefix) -> PairLimitReport:
    gaps = p.gaps()
    g = pd.gamma
    above = all(cmp(g, gm, pd.spec) > 0 for gm in gaps)
    mismatch = None
    for i, (z, gm) in enumerate(zip(p.elements, gaps)):
        if (pd.a - z).value() != gm:
            mismatch = i
            break
    is_lim = mismatch is None
    # gamma <= some gap while a is a limit would make (z_mu, gamma) a pair
    # of definition of lower degree, impossible for a minimal pair outside K
    contradiction = (not above) and is_lim and pd.degree > 1
    return PairLimitReport(above, is_lim, mismatch, above and is_lim, contradiction)


def limit_root_witness(f: Poly, p: PcsPrefix, roots) -> object | None:
    """A root of ``f`` from ``roots`` that is a limit of the prefix, or None."""
    if poly_track(f, p).verdict != "IncreasingOnTail":
        return None
    for r in roots:
        if f(r).is_zero() and is_limit_at_prefix(r, p):
            return r
    return None
