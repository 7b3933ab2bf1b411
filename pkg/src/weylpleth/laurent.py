"""Sparse Laurent polynomials in x_1..x_n and polynomials in q.

A LaurentPoly is a dict from exponent tuples to nonzero coefficients.
Coefficients are ints, or QPoly when a q-grading is carried along.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Sequence

from .rootsys import RootSystem, normalize


class QPoly:
    """Polynomial in q with integer coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPoly":
        return cls([0] * degree + [c])

    @staticmethod
    def coerce(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return QPoly([x])
        raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        try:
            return self.coeffs == QPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other):
        other = QPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([other * x for x in self.coeffs])
        other = QPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        return QPoly([0] * k + list(self.coeffs))

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_list(self) -> list:
        return list(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def _is_zero(c) -> bool:
    return not c


class LaurentPoly:
    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int | None = None):
        self.terms = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if _is_zero(c):
                    continue
                e = normalize(e)
                if e in self.terms:
                    s = self.terms[e] + c
                    if _is_zero(s):
                        del self.terms[e]
                    else:
                        self.terms[e] = s
                else:
                    self.terms[e] = c
        if nvars is None:
            nvars = len(next(iter(self.terms))) if self.terms else 0
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls._raw({(0,) * n: 1}, n)

    @classmethod
    def monomial(cls, exponents: Sequence, coeff=1) -> "LaurentPoly":
        e = normalize(exponents)
        return cls._raw({e: coeff} if coeff else {}, len(e))

    @classmethod
    def binomial(cls, gamma: Sequence) -> "LaurentPoly":
        """1 - x^gamma."""
        n = len(gamma)
        return cls({(0,) * n: 1, normalize(gamma): -1}, n)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exponents: Sequence):
        return self.terms.get(normalize(exponents), 0)

    def support(self) -> list:
        return list(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self.nvars) * other if other else LaurentPoly({}, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if _is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
        return LaurentPoly._raw(terms, self.nvars or other.nvars)

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if _is_zero(other):
                return LaurentPoly({}, self.nvars)
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()}, self.nvars)
        acc = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(acc, self.nvars or other.nvars)

    def __rmul__(self, other):
        return self * other

    def shift(self, gamma: Sequence) -> "LaurentPoly":
        """Multiply by x^gamma."""
        return LaurentPoly._raw(
            {normalize([a + b for a, b in zip(e, gamma)]): c for e, c in self.terms.items()},
            self.nvars)

    def map_exponents(self, f) -> "LaurentPoly":
        acc = defaultdict(int)
        for e, c in self.terms.items():
            acc[f(e)] += c
        return LaurentPoly(acc, self.nvars)

    def divide_binomial(self, gamma: Sequence) -> "LaurentPoly":
        """Exact quotient by (1 - x^gamma); raises ValueError if inexact.

        Terms are grouped into gamma-strings; along each string the
        quotient Q satisfies Q_k = N_k + Q_{k-1}, and exactness means
        every string sums to zero.
        """
        gamma = normalize(gamma)
        j = next(i for i, g in enumerate(gamma) if g != 0)
        g = gamma[j]
        strings = defaultdict(dict)
        for e, c in self.terms.items():
            k = e[j] // g
            base = tuple(a - k * b for a, b in zip(e, gamma))
            strings[base][k] = c
        out = {}
        for base, entries in strings.items():
            ks = sorted(entries)
            acc = 0
            for k in range(ks[0], ks[-1]):
                acc = acc + entries.get(k, 0)
                if not _is_zero(acc):
                    out[normalize([a + k * b for a, b in zip(base, gamma)])] = acc
            acc = acc + entries[ks[-1]]
            if not _is_zero(acc):
                raise ValueError(f"not divisible by 1 - x^{gamma}")
        return LaurentPoly._raw(out, self.nvars)

    def evaluate(self, point: Sequence):
        total = 0
        for e, c in self.terms.items():
            v = Fraction(1)
            for x, a in zip(point, e):
                v *= Fraction(x) ** a
            total += c * v
        return total

    def max_exponent_norm(self):
        return max((sum(abs(a) for a in e) for e in self.terms), default=0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: t[0])

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{a}" if a != 1 else f"x{i}"
                            for i, a in enumerate(e, start=1) if a != 0)
            coeff = f"({c})" if isinstance(c, QPoly) else str(c)
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"exponents": [_json_num(a) for a in e],
                 "coeff": c.to_list() if isinstance(c, QPoly) else c}
                for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None) -> "LaurentPoly":
        terms = {}
        for t in data:
            c = t["coeff"]
            terms[tuple(Fraction(a) for a in t["exponents"])] = QPoly(c) if isinstance(c, list) else c
        return cls(terms, nvars)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"


def _json_num(a):
    if isinstance(a, Fraction):
        return str(a)
    return a


def psi_l(p: LaurentPoly, ell: int) -> LaurentPoly:
    """Adams operation x^beta -> x^(ell beta)."""
    return LaurentPoly._raw({normalize([ell * a for a in e]): c for e, c in p.terms.items()},
                            p.nvars)


def phi_l(p: LaurentPoly, ell: int) -> LaurentPoly:
    """Keep monomials x^(ell beta) and send them to x^beta."""
    out = {}
    for e, c in p.terms.items():
        if all(Fraction(a) % ell == 0 for a in e):
            out[normalize([Fraction(a) / ell for a in e])] = c
    return LaurentPoly._raw(out, p.nvars)


def product_of_binomials(roots: Iterable[Sequence], n: int, sign: int = 1) -> LaurentPoly:
    """prod (1 - x^(sign * alpha))."""
    p = LaurentPoly.one(n)
    for a in roots:
        p = p * LaurentPoly.binomial([sign * c for c in a])
    return p


def delta(rs: RootSystem) -> LaurentPoly:
    """Delta = prod over positive roots of (1 - x^alpha)."""
    return product_of_binomials(rs.positive_roots, rs.rank)


def delta_alternating(rs: RootSystem) -> LaurentPoly:
    """Delta from the alternating sum x^rho sum_w eps(w) x^(-w rho)."""
    from .rootsys import enumerate_weyl
    rho = rs.rho
    terms = defaultdict(int)
    for w, _, s in enumerate_weyl(rs):
        wr = w.act(rho)
        terms[normalize([a - b for a, b in zip(rho, wr)])] += s
    return LaurentPoly(terms, rs.rank)
