"""Branching to Levi subgroups via partition functions.

[V(lambda) : V_I(mu)] = sum_w eps(w) P_I(w o lambda - mu), where P_I counts
the ways of writing a weight as a sum of positive roots not in R_I.  The
q-analogue with the full set of positive roots gives Lusztig's
K_{lambda,mu}(q).  An independent oracle restricts the character of
V(lambda) to G_I by leading term subtraction.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .characters import CharExpansion, alternant_character, weyl_character
from .laurent import LaurentPoly, QPoly
from .quotient import LeviDatum
from .rootsys import (RootSystem, dominant_representative, dominant_weights, dominates, dot,
                      enumerate_weyl, identity, normalize, reflection, root_system)


class PartitionFunction:
    """Kostant partition function for a finite set of roots that are all
    positive for a common functional h.

    The recursion runs through the roots in order; a node (i, gamma) is
    pruned unless gamma satisfies the sign and suffix-sum constraints that
    every combination of the remaining roots i, i+1, ... satisfies."""

    def __init__(self, roots: Sequence[Sequence]):
        self.roots = tuple(tuple(int(c) for c in r) for r in roots)
        n = len(self.roots[0]) if self.roots else 0
        self.n = n
        self.h = tuple(range(1, n + 1))
        self.heights = tuple(dot(self.h, r) for r in self.roots)
        if any(x <= 0 for x in self.heights):
            raise ValueError("roots are not positive for the height functional")
        pool = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            pool.append(tuple(e))
            pool.append(tuple(-c for c in e))
            s = [0] * n
            for k in range(j, n):
                s[k] = 1
            pool.append(tuple(s))
            pool.append(tuple(-c for c in s))
        self._constraints = []
        for i in range(len(self.roots) + 1):
            rest = self.roots[i:]
            ge, eq = [], []
            for f in pool:
                vals = [dot(f, r) for r in rest]
                if all(v == 0 for v in vals):
                    eq.append(f)
                elif all(v >= 0 for v in vals):
                    ge.append(f)
            self._constraints.append((tuple(ge), tuple(eq)))
        self._count = {}
        self._qcount = {}

    def _feasible(self, i, gamma) -> bool:
        ge, eq = self._constraints[i]
        for f in eq:
            if sum(a * b for a, b in zip(f, gamma)):
                return False
        for f in ge:
            if sum(a * b for a, b in zip(f, gamma)) < 0:
                return False
        return True

    def count(self, gamma: Sequence) -> int:
        gamma = tuple(gamma)
        if any(not isinstance(c, int) for c in gamma):
            if any(Fraction(c).denominator != 1 for c in gamma):
                return 0
            gamma = tuple(int(c) for c in gamma)
        return self._rec(0, gamma, dot(self.h, gamma))

    def _rec(self, i, gamma, ht):
        if ht == 0:
            return 1 if not any(gamma) else 0
        if ht < 0 or not self._feasible(i, gamma):
            return 0
        key = (i, gamma)
        cached = self._count.get(key)
        if cached is not None:
            return cached
        alpha = self.roots[i]
        step = self.heights[i]
        total = 0
        g = gamma
        while ht >= 0:
            total += self._rec(i + 1, g, ht)
            g = tuple(a - b for a, b in zip(g, alpha))
            ht -= step
        self._count[key] = total
        return total

    def qcount(self, gamma: Sequence) -> QPoly:
        """sum over decompositions of q^(number of roots used)."""
        gamma = tuple(gamma)
        if any(Fraction(c).denominator != 1 for c in gamma):
            return QPoly()
        gamma = tuple(int(c) for c in gamma)
        return QPoly(self._qrec(0, gamma, dot(self.h, gamma)))

    def _qrec(self, i, gamma, ht):
        if ht == 0:
            return (1,) if not any(gamma) else ()
        if ht < 0 or not self._feasible(i, gamma):
            return ()
        key = (i, gamma)
        cached = self._qcount.get(key)
        if cached is not None:
            return cached
        alpha = self.roots[i]
        step = self.heights[i]
        acc = defaultdict(int)
        g = gamma
        k = 0
        while ht >= 0:
            for d, c in enumerate(self._qrec(i + 1, g, ht)):
                if c:
                    acc[d + k] += c
            g = tuple(a - b for a, b in zip(g, alpha))
            ht -= step
            k += 1
        out = tuple(acc.get(d, 0) for d in range(max(acc) + 1)) if acc else ()
        self._qcount[key] = out
        return out


_pf_cache: dict = {}


def partition_function(roots: Sequence[Sequence]) -> PartitionFunction:
    key = tuple(normalize(r) for r in roots)
    pf = _pf_cache.get(key)
    if pf is None:
        pf = _pf_cache[key] = PartitionFunction(key)
    return pf


def kostant_partition(roots: Sequence[Sequence], gamma: Sequence) -> int:
    return partition_function(roots).count(gamma)


def kostant_partition_q(roots: Sequence[Sequence], gamma: Sequence) -> QPoly:
    return partition_function(roots).qcount(gamma)


def complement_roots(rs: RootSystem, datum: LeviDatum) -> list:
    levi = set(datum.positive_roots())
    full = set(rs.positive_roots)
    if not levi <= full:
        raise ValueError("Levi roots are not positive roots of the ambient system")
    return [a for a in rs.positive_roots if a not in levi]


def _check_dominant(rs: RootSystem, lam: Sequence) -> tuple:
    lam = normalize(lam)
    if len(lam) != rs.rank or not rs.is_dominant(lam):
        raise ValueError(f"{list(lam)} is not a dominant weight of {rs}")
    return lam


@lru_cache(maxsize=None)
def _weyl_table(kind: str, n: int) -> tuple:
    rs = root_system(kind, n)
    return tuple((tuple(abs(x) - 1 for x in w.images), tuple(1 if x > 0 else -1 for x in w.images), s)
                 for w, _, s in enumerate_weyl(rs))


def _dot_orbit_minus(rs: RootSystem, lam: Sequence, mu: Sequence):
    """Yield (w o lam - mu, eps(w)) over W, in doubled integer arithmetic so
    that half-integral rho costs nothing."""
    n = rs.rank
    rho2 = [int(2 * r) for r in rs.rho]
    shifted = [int(2 * a) + r for a, r in zip(lam, rho2)]
    base = [r + int(2 * m) for r, m in zip(rho2, mu)]
    for pos, sg, s in _weyl_table(rs.kind, n):
        img = [0] * n
        for j in range(n):
            img[pos[j]] = sg[j] * shifted[j]
        yield tuple((img[i] - base[i]) // 2 for i in range(n)), s


def branching_coeff(rs: RootSystem, lam: Sequence, datum: LeviDatum, mu: Sequence) -> int:
    """Multiplicity of V_I(mu) in the restriction of V(lambda) to G_I.
    mu is a dominant weight of G_I in global coordinates."""
    lam = _check_dominant(rs, lam)
    mu = normalize(mu)
    if not datum.is_dominant(mu):
        raise ValueError(f"{list(mu)} is not dominant for the Levi subgroup {datum.label()}")
    pf = partition_function(complement_roots(rs, datum))
    total = 0
    for gamma, s in _dot_orbit_minus(rs, lam, mu):
        total += s * pf.count(gamma)
    return total


def lusztig_q(rs: RootSystem, lam: Sequence, mu: Sequence) -> QPoly:
    """Lusztig's q-analogue K_{lambda,mu}(q) of the weight multiplicity."""
    lam = _check_dominant(rs, lam)
    mu = _check_dominant(rs, mu)
    pf = partition_function(rs.positive_roots)
    total = QPoly()
    for gamma, s in _dot_orbit_minus(rs, lam, mu):
        total = total + pf.qcount(gamma) * s
    return total


def s_mu_I_truncated(rs: RootSystem, datum: LeviDatum, mu: Sequence, bound: int) -> CharExpansion:
    """sum_lambda [V(lambda) : V_I(mu)] s_lambda over size(lambda) <= bound.
    In type A only partitions with |lambda| = |mu| can occur."""
    mu = normalize(mu)
    if rs.kind == "A":
        if sum(mu) < 0:
            return CharExpansion(rs.kind, rs.rank, {}, None)
        cands = dominant_weights(rs, sum(mu), exact=True)
    else:
        cands = dominant_weights(rs, bound)
    _, mu_dom = dominant_representative(rs, mu)
    terms = {}
    for lam in cands:
        if not dominates(rs, lam, mu_dom):
            continue
        c = branching_coeff(rs, lam, datum, mu)
        if c:
            terms[lam] = c
    return CharExpansion(rs.kind, rs.rank, terms, None if rs.kind == "A" else bound)


def levi_weyl_group(datum: LeviDatum) -> list:
    """(w, sign) for the Weyl group of G_I, generated by root reflections."""
    roots = datum.positive_roots()
    gens = [reflection(a) for a in roots]
    e = identity(datum.rank)
    seen = {e: 1}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u not in seen:
                    seen[u] = -seen[w]
                    nxt.append(u)
        frontier = nxt
    return list(seen.items())


_levi_char_cache: dict = {}


def levi_character(datum: LeviDatum, mu: Sequence) -> LaurentPoly:
    """Character of the irreducible G_I-module of highest weight mu."""
    mu = normalize(mu)
    key = (datum, mu)
    ch = _levi_char_cache.get(key)
    if ch is None:
        group = _levi_group_cache.get(datum)
        if group is None:
            group = _levi_group_cache[datum] = levi_weyl_group(datum)
        ch = alternant_character(group, datum.positive_roots(), datum.rho(), mu, datum.rank)
        _levi_char_cache[key] = ch
    return ch


_levi_group_cache: dict = {}


def restrict_character_oracle(rs: RootSystem, lam: Sequence, datum: LeviDatum) -> dict:
    """Decompose V(lambda)|_{G_I} by peeling off highest weights.

    The weight maximizing a functional positive on all positive roots is
    a highest weight of a G_I-constituent."""
    lam = _check_dominant(rs, lam)
    rest = weyl_character(rs, lam)
    h = tuple(range(1, rs.rank + 1))
    out = {}
    while rest:
        top = max(rest.terms, key=lambda e: (dot(h, e), e))
        c = rest.terms[top]
        if c < 0 or not datum.is_dominant(top):
            raise AssertionError(f"restriction oracle hit a non-dominant leading weight {top}")
        out[top] = c
        rest = rest - levi_character(datum, top) * c
    return out
