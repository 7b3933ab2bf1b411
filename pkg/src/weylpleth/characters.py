"""Weyl characters, Schur expansions and the truncated plethysm expansions.

Characters are computed from the Weyl character formula by exact division
of the alternant by the binomials (1 - x^-alpha), one positive root at a
time.  Decomposition into irreducible characters has two routes: leading
term subtraction, and straightening every monomial (s_beta for arbitrary
beta is +-s_lambda or 0).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .laurent import LaurentPoly, QPoly
from .rootsys import (RootSystem, dominant_weights, dominates, dot, enumerate_weyl, normalize,
                      root_system, simple_reflections, straighten)


class NotWeylInvariant(ValueError):
    """Raised when a Laurent polynomial to be decomposed is not W-invariant."""


@dataclass
class CharExpansion:
    """A finite (possibly truncated) sum of Weyl characters."""

    kind: str
    rank: int
    terms: dict = field(default_factory=dict)
    truncation_bound: int | None = None

    def coeff(self, lam):
        return self.terms.get(normalize(lam), 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in self.terms.items() if v}

    def __eq__(self, other):
        if not isinstance(other, CharExpansion):
            return NotImplemented
        return (self.kind, self.rank) == (other.kind, other.rank) and \
            self.nonzero() == other.nonzero()

    def scaled(self, c) -> "CharExpansion":
        return CharExpansion(self.kind, self.rank, {k: c * v for k, v in self.terms.items()},
                             self.truncation_bound)

    def at_q(self, q) -> "CharExpansion":
        return CharExpansion(self.kind, self.rank,
                             {k: (v(q) if isinstance(v, QPoly) else v)
                              for k, v in self.terms.items()},
                             self.truncation_bound)

    def sorted_items(self) -> list:
        rs = root_system(self.kind, self.rank)
        return sorted(self.nonzero().items(), key=lambda kv: (rs.weight_size(kv[0]), kv[0][::-1]))

    def to_json(self, convention: str = "increasing") -> dict:
        out = {"type": self.kind, "rank": self.rank}
        if self.truncation_bound is not None:
            out["truncation_bound"] = self.truncation_bound
        terms = []
        for lam, c in self.sorted_items():
            part = list(lam) if convention == "increasing" else list(lam)[::-1]
            if isinstance(c, QPoly):
                terms.append({"partition": part, "qpoly": c.to_list()})
            else:
                terms.append({"partition": part, "coeff": c})
        out["terms"] = terms
        return out

    def to_text(self, convention: str = "increasing") -> str:
        items = self.sorted_items()
        if not items:
            return "0"
        parts = []
        for lam, c in items:
            part = lam if convention == "increasing" else lam[::-1]
            label = "s(" + ",".join(str(a) for a in part) + ")"
            parts.append(f"({c})*{label}" if isinstance(c, QPoly) else f"{c}*{label}")
        return " + ".join(parts)


def alternant_character(group: Iterable, positive_roots: Sequence, rho: Sequence,
                        lam: Sequence, n: int) -> LaurentPoly:
    """Weyl character formula for a reflection group given as (w, sign)
    pairs together with its positive roots and half sum rho."""
    shifted = [a + b for a, b in zip(lam, rho)]
    numerator = defaultdict(int)
    for w, s in group:
        numerator[normalize([a - b for a, b in zip(w.act(shifted), rho)])] += s
    p = LaurentPoly(numerator, n)
    for alpha in positive_roots:
        p = p.divide_binomial([-a for a in alpha])
    return p


@lru_cache(maxsize=4096)
def _weyl_character(kind: str, n: int, lam: tuple) -> LaurentPoly:
    rs = root_system(kind, n)
    group = [(w, s) for w, _, s in enumerate_weyl(rs)]
    return alternant_character(group, rs.positive_roots, rs.rho, lam, n)


def weyl_character(rs: RootSystem, lam: Sequence) -> LaurentPoly:
    """The irreducible character s_lambda of highest weight lambda."""
    lam = normalize(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong length for {rs}")
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant for {rs}")
    return _weyl_character(rs.kind, rs.rank, lam)


def weyl_dimension(rs: RootSystem, lam: Sequence) -> int:
    """Weyl dimension formula."""
    shifted = [a + b for a, b in zip(lam, rs.rho)]
    num = Fraction(1)
    for alpha in rs.positive_roots:
        num *= Fraction(dot(shifted, alpha)) / dot(rs.rho, alpha)
    assert num.denominator == 1
    return int(num)


def weight_multiplicity(rs: RootSystem, lam: Sequence, mu: Sequence) -> int:
    return weyl_character(rs, lam).coeff(mu)


def is_weyl_invariant(rs: RootSystem, p: LaurentPoly) -> bool:
    for s in simple_reflections(rs):
        for e, c in p.terms.items():
            if p.terms.get(s.act(e), 0) != c:
                return False
    return True


def _leading_weight(p: LaurentPoly):
    n = p.nvars
    return max(p.terms, key=lambda e: (sum((i + 1) * a for i, a in enumerate(e)), e[::-1][:n]))


def decompose_schur(rs: RootSystem, p: LaurentPoly, method: str = "straighten",
                    check: bool = True) -> dict:
    """Expand a W-invariant Laurent polynomial as sum c_lambda s_lambda.

    method="straighten" uses P = sum_beta P_beta s_beta; method="subtract"
    peels off leading terms.  Both are exact.
    """
    if check and not is_weyl_invariant(rs, p):
        raise NotWeylInvariant("polynomial is not invariant under the Weyl group")
    out = defaultdict(int)
    if method == "straighten":
        for e, c in p.terms.items():
            sgn, lam = straighten(rs, e)
            if sgn:
                out[lam] += sgn * c
    elif method == "subtract":
        rest = p
        while rest:
            lam = _leading_weight(rest)
            c = rest.terms[lam]
            if not rs.is_dominant(lam):
                raise NotWeylInvariant(f"leading weight {lam} is not dominant")
            out[lam] += c
            rest = rest - weyl_character(rs, lam) * c
    else:
        raise ValueError(f"unknown method {method!r}")
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _psi_table(kind: str, n: int, lam: tuple, ell: int) -> tuple:
    rs = root_system(kind, n)
    out = defaultdict(int)
    for beta, m in weyl_character(rs, lam).terms.items():
        sgn, nu = straighten(rs, [ell * b for b in beta])
        if sgn:
            out[nu] += sgn * m
    return tuple(sorted((k, v) for k, v in out.items() if v))


def psi_plethysm_schur(rs: RootSystem, lam: Sequence, ell: int) -> dict:
    """Schur expansion of psi_ell(s_lambda)."""
    return dict(_psi_table(rs.kind, rs.rank, normalize(lam), ell))


def _candidate_weights(rs: RootSystem, mu: Sequence, ell: int, bound: int) -> list:
    if rs.kind == "A":
        total = sum(mu)
        if total % ell:
            return []
        return dominant_weights(rs, total // ell, exact=True)
    return dominant_weights(rs, bound)


def phi_plethysm_truncated(rs: RootSystem, mu: Sequence, ell: int, bound: int) -> CharExpansion:
    """phi_ell(s_mu) = sum_lambda n_{lambda,mu} s_lambda, where n_{lambda,mu}
    is the multiplicity of s_mu in psi_ell(s_lambda).  Terms are kept for
    size(lambda) <= bound; type A is exact (only |lambda| = |mu|/ell occurs).
    """
    mu = normalize(mu)
    terms = {}
    for lam in _candidate_weights(rs, mu, ell, bound):
        # every constituent of psi_ell(s_lambda) lies below ell * lambda
        if not dominates(rs, [ell * a for a in lam], mu):
            continue
        c = dict(_psi_table(rs.kind, rs.rank, lam, ell)).get(mu, 0)
        if c:
            terms[lam] = c
    return CharExpansion(rs.kind, rs.rank, terms, None if rs.kind == "A" else bound)


def hall_littlewood_truncated(rs: RootSystem, mu: Sequence, bound: int) -> CharExpansion:
    """sum_lambda K_{lambda,mu}(q) s_lambda over size(lambda) <= bound."""
    from .branching import lusztig_q
    mu = normalize(mu)
    if rs.kind == "A":
        cands = dominant_weights(rs, sum(mu), exact=True)
    else:
        cands = dominant_weights(rs, bound)
    terms = {}
    for lam in cands:
        k = lusztig_q(rs, lam, mu)
        if k:
            terms[lam] = k
    return CharExpansion(rs.kind, rs.rank, terms, None if rs.kind == "A" else bound)
