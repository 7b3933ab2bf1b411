"""Extended affine Weyl group, alcove normalization, Kazhdan-Lusztig and
parabolic Kazhdan-Lusztig polynomials, and the functions G and H.

The group W^ = W x Z^n acts on weights through gamma -> w gamma - ell w beta
for the element w t_beta.  Writing x = -gamma / ell turns this into the
affine action x -> w(x + beta), so that alcove geometry in the x-space
describes everything.  The reflection hyperplanes are (x, a) in Z for the
positive coroots a:

    A: e_j - e_i      B: e_j -+ e_i, 2 e_i      C: e_j -+ e_i, e_i      D: e_j -+ e_i

The Coxeter part is W x Q (Q the root lattice) and W^ is its extension by
the length zero group Z^n / Q: trivial in type B, Z/2 in types C and D,
Z in type A.  Lengths count separating hyperplanes.
"""

from __future__ import annotations

import math
import os
import pickle
import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .characters import CharExpansion
from .laurent import QPoly
from .rootsys import (RootSystem, SignedPermutation, dominant_weights, dot, identity,
                      longest_element, normalize, reflection, root_system)

CACHE_ENV = "WEYLPLETH_CACHE_DIR"
CACHE_VERSION = 1
DEFAULT_MAX_LENGTH = 14


class KLBoundExceeded(RuntimeError):
    """A required Kazhdan-Lusztig entry lies beyond the length bound."""

    def __init__(self, y, w, length, bound):
        self.y, self.w, self.length, self.bound = y, w, length, bound
        super().__init__(f"KL entry (y={y}, w={w}) needs length {length} > bound {bound}")


class OrbitMismatch(ValueError):
    """The two weights lie in different orbits of the dot action."""


@lru_cache(maxsize=None)
def functionals(kind: str, n: int) -> tuple:
    """Positive coroots; the reflection hyperplanes are a.x in Z."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[j], v[i] = 1, -1
            out.append(tuple(v))
            if kind != "A":
                v = [0] * n
                v[j], v[i] = 1, 1
                out.append(tuple(v))
        if kind in ("B", "C"):
            v = [0] * n
            v[i] = 2 if kind == "B" else 1
            out.append(tuple(v))
    return tuple(out)


@lru_cache(maxsize=None)
def alcove_point(kind: str, n: int) -> tuple:
    """An interior point of the fundamental alcove."""
    if kind == "A":
        return tuple(Fraction(i, n + 1) for i in range(1, n + 1))
    if kind == "D":
        return tuple(Fraction(i, 2 * n) for i in range(n))
    return tuple(Fraction(i, 2 * n + 2) for i in range(1, n + 1))


@dataclass(frozen=True)
class AffineElement:
    """The element w t_beta, stored as the affine map x -> w x + shift with
    shift = w(beta)."""

    finite_part: SignedPermutation
    shift: tuple

    @classmethod
    def from_translation(cls, w: SignedPermutation, beta: Sequence) -> "AffineElement":
        return cls(w, tuple(w.act(normalize(beta))))

    @classmethod
    def identity(cls, n: int) -> "AffineElement":
        return cls(identity(n), (0,) * n)

    @property
    def translation(self) -> tuple:
        """beta with self = w t_beta."""
        return self.finite_part.inverse().act(self.shift)

    @property
    def n(self) -> int:
        return len(self.shift)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        w = self.finite_part * other.finite_part
        v = tuple(a + b for a, b in zip(self.finite_part.act(other.shift), self.shift))
        return AffineElement(w, v)

    def inverse(self) -> "AffineElement":
        winv = self.finite_part.inverse()
        return AffineElement(winv, tuple(-a for a in winv.act(self.shift)))

    def apply(self, x: Sequence) -> tuple:
        """Affine action on the x-space."""
        return normalize([a + b for a, b in zip(self.finite_part.act(x), self.shift)])

    def __str__(self):
        return f"{self.finite_part} t{list(self.translation)}"


def affine_act(e: AffineElement, gamma: Sequence, ell: int) -> tuple:
    """The action w t_beta . gamma = w gamma - ell w beta."""
    return normalize([a - ell * b for a, b in zip(e.finite_part.act(normalize(gamma)), e.shift)])


def affine_length(kind: str, e: AffineElement) -> int:
    """sum over positive functionals a of |(beta, a) + [w a < 0]|."""
    n = e.n
    beta = e.translation
    pos = set(functionals(kind, n))
    total = 0
    for a in functionals(kind, n):
        c = dot(beta, a)
        if e.finite_part.act(a) not in pos:
            c += 1
        total += abs(c)
    return total


def separation_length(kind: str, e: AffineElement) -> int:
    """Number of hyperplanes separating the fundamental alcove from its image."""
    p = alcove_point(kind, e.n)
    q = e.apply(p)
    return sum(abs(math.floor(dot(a, q)) - math.floor(dot(a, p))) for a in functionals(kind, e.n))


def hyperplane_reflection(a: Sequence, k: int) -> AffineElement:
    """Reflection in the hyperplane a.x = k."""
    a = tuple(a)
    s = reflection(a)
    norm = dot(a, a)
    shift = tuple(Fraction(2 * k * c, norm) for c in a)
    return AffineElement(s, normalize(shift))


@lru_cache(maxsize=None)
def simple_affine_reflections(kind: str, n: int) -> tuple:
    """(element, functional, level, side) for the walls of the fundamental
    alcove; side is the sign of a.p - k at an interior point p."""
    p = alcove_point(kind, n)
    out = []
    for a in functionals(kind, n):
        for k in (0, 1):
            s = hyperplane_reflection(a, k)
            if any(not isinstance(c, int) for c in s.shift):
                continue
            if separation_length(kind, s) == 1:
                side = 1 if dot(a, p) > k else -1
                out.append((s, a, k, side))
    return tuple(out)


def _omega_canonical(kind: str, x: tuple):
    """Canonical representative of the length-zero orbit of a point in the
    closed fundamental alcove; returns (x', omega) with x' = omega(x)."""
    n = len(x)
    e = AffineElement.identity(n)
    if kind == "A":
        # translations by (1,..,1) and the rotation tau(x) = (x_n - 1, x_1, .., x_{n-1})
        m = math.floor(x[0])
        if m:
            t = AffineElement(identity(n), (-m,) * n)
            x, e = t.apply(x), t * e
        tau = AffineElement(SignedPermutation(tuple(list(range(2, n + 1)) + [1])),
                            (-1,) + (0,) * (n - 1))
        while x[-1] >= 1:
            x, e = tau.apply(x), tau * e
        return x, e
    if kind in ("C", "D"):
        omega = _omega(kind, n)
        y = omega.apply(x)
        if (x[-1], -x[0]) > (y[-1], -y[0]):
            return y, omega
    return x, e


def _omega(kind: str, n: int) -> AffineElement:
    """The nontrivial length zero element in types C and D."""
    if kind == "C":
        imgs = tuple(range(1, n)) + (-n,)
    else:
        imgs = (-1,) + tuple(range(2, n)) + (-n,)
    return AffineElement(SignedPermutation(imgs), (0,) * (n - 1) + (1,))


def _omega_stabilizes(kind: str, x: tuple) -> bool:
    if kind not in ("C", "D"):
        return False
    return _omega(kind, len(x)).apply(x) == x


@dataclass(frozen=True)
class AlcoveNormalForm:
    kind: str
    ell: int
    weight: tuple
    nu: tuple
    min_rep: AffineElement
    stabilizer: tuple
    stabilizer_lengths: tuple

    @property
    def x_nu(self) -> tuple:
        return normalize([Fraction(-c, self.ell) for c in self.nu])


def _to_x(gamma, ell):
    return tuple(Fraction(-c) / ell for c in gamma)


def _from_x(x, ell):
    return normalize([-ell * c for c in x])


def _generate(gens: Sequence[AffineElement], n: int, kind: str) -> list:
    e = AffineElement.identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for u in frontier:
            for s in gens:
                v = u * s
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen, key=lambda u: (affine_length(kind, u), str(u)))


def alcove_normalize(rs: RootSystem, beta: Sequence, ell: int) -> AlcoveNormalForm:
    """The weight nu of the fundamental region in the orbit of beta, the
    minimal length element e with e . nu = beta, and the stabilizer W_nu."""
    kind, n = rs.kind, rs.rank
    beta = normalize(beta)
    x = _to_x(beta, ell)
    e = AffineElement.identity(n)
    walls = simple_affine_reflections(kind, n)
    moved = True
    while moved:
        moved = False
        for s, a, k, side in walls:
            if (dot(a, x) - k) * side < 0:
                x = s.apply(x)
                e = e * s
                moved = True
    x, omega = _omega_canonical(kind, x)
    e = e * omega.inverse()
    if _omega_stabilizes(kind, x):
        raise NotImplementedError(
            "a length-zero element stabilizes this weight; parabolic data for such "
            "orbits are not supported")
    fixing = [s for s, a, k, side in walls if dot(a, x) == k]
    stab = _generate(fixing, n, kind) if fixing else [AffineElement.identity(n)]
    best = min((e * z for z in stab), key=lambda u: (affine_length(kind, u), str(u)))
    nu = _from_x(x, ell)
    assert affine_act(best, nu, ell) == beta
    return AlcoveNormalForm(kind, ell, beta, nu, best, tuple(stab),
                            tuple(affine_length(kind, z) for z in stab))


def check_regularity(rs: RootSystem, beta: Sequence, ell: int) -> bool:
    """True when the stabilizer of beta under the level -ell action is trivial."""
    x = _to_x(normalize(beta), ell)
    if any(dot(a, x).denominator == 1 for a in functionals(rs.kind, rs.rank)):
        return False
    if rs.kind not in ("C", "D"):
        return True
    x = _to_x(beta, ell)
    walls = simple_affine_reflections(rs.kind, rs.rank)
    moved = True
    while moved:
        moved = False
        for s, a, k, side in walls:
            if (dot(a, x) - k) * side < 0:
                x = s.apply(x)
                moved = True
    return not _omega_stabilizes(rs.kind, x)


def stabilizer_by_enumeration(rs: RootSystem, beta: Sequence, ell: int, radius: int = 2) -> list:
    """Brute-force stabilizer: all w t_b with |b_i| <= radius fixing beta."""
    from .rootsys import iter_signed_permutations
    import itertools
    beta = normalize(beta)
    out = []
    for w in iter_signed_permutations(rs.kind, rs.rank):
        for b in itertools.product(range(-radius, radius + 1), repeat=rs.rank):
            e = AffineElement.from_translation(w, b)
            if affine_act(e, beta, ell) == beta:
                out.append(e)
    return out


class KLTable:
    """Kazhdan-Lusztig polynomials P_{y,w}(q) for the extended affine Weyl
    group, computed on demand for l(w) <= max_length.

    Normalized entries p_{y,w}(v) = v^(l(w) - l(y)) P_{y,w}(v^-2) are given
    by `p`."""

    def __init__(self, kind: str, rank: int, max_length: int = DEFAULT_MAX_LENGTH):
        self.kind = kind
        self.rank = rank
        self.max_length = max_length
        self.simple = [s for s, *_ in simple_affine_reflections(kind, rank)]
        self._P: dict = {}
        self._len: dict = {}

    def length(self, e: AffineElement) -> int:
        v = self._len.get(e)
        if v is None:
            v = self._len[e] = affine_length(self.kind, e)
        return v

    def column(self, w: AffineElement) -> dict:
        """{y: P_{y,w}} over y <= w."""
        col = self._P.get(w)
        if col is not None:
            return col
        lw = self.length(w)
        if lw > self.max_length:
            raise KLBoundExceeded(None, w, lw, self.max_length)
        stack = [w]
        # iterative descent to avoid deep recursion
        while stack:
            u = stack[-1]
            if u in self._P:
                stack.pop()
                continue
            s = self._left_descent(u)
            if s is None:
                self._P[u] = {u: QPoly([1])}
                stack.pop()
                continue
            v = s * u
            if v not in self._P:
                stack.append(v)
                continue
            pending = [z for z in self._mu_candidates(s, v) if z not in self._P]
            if pending:
                stack.extend(pending)
                continue
            self._P[u] = self._compute(u, s, v)
            stack.pop()
        return self._P[w]

    def _left_descent(self, w: AffineElement):
        lw = self.length(w)
        for s in self.simple:
            if self.length(s * w) < lw:
                return s
        return None

    def _mu_candidates(self, s, v):
        lv = self.length(v)
        out = []
        for z, pz in self._P[v].items():
            if z == v:
                continue
            d = lv - self.length(z)
            if d % 2 == 1 and self.length(s * z) < self.length(z):
                if _coeff(pz, (d - 1) // 2):
                    out.append(z)
        return out

    def _compute(self, w, s, v):
        Pv = self._P[v]
        lw = self.length(w)
        lv = lw - 1
        mus = []
        for z in self._mu_candidates(s, v):
            mu = _coeff(Pv[z], (lv - self.length(z) - 1) // 2)
            mus.append((z, mu, (lw - self.length(z)) // 2))
        cands = set(Pv)
        cands.update(s * y for y in Pv)
        out = {}
        for y in cands:
            sy = s * y
            c = 1 if self.length(sy) < self.length(y) else 0
            val = QPoly()
            if sy in Pv:
                val = val + Pv[sy].shift(1 - c)
            if y in Pv:
                val = val + Pv[y].shift(c)
            for z, mu, k in mus:
                pyz = self._P[z].get(y)
                if pyz:
                    val = val - pyz.shift(k) * mu
            if val:
                out[y] = val
        assert out.get(w) == 1, "KL recursion lost P_{w,w} = 1"
        return out

    def P(self, y: AffineElement, w: AffineElement) -> QPoly:
        """Classical Kazhdan-Lusztig polynomial P_{y,w}(q)."""
        return self.column(w).get(y, QPoly())

    def p(self, y: AffineElement, w: AffineElement) -> dict:
        """Normalized entry as {exponent of v: coefficient}."""
        d = self.length(w) - self.length(y)
        return {d - 2 * k: c for k, c in enumerate(self.P(y, w).coeffs) if c}

    def entries(self) -> int:
        return sum(len(c) for c in self._P.values())

    # persistence
    @staticmethod
    def cache_path(kind: str, rank: int, max_length: int) -> Path | None:
        root = os.environ.get(CACHE_ENV)
        if not root:
            return None
        return Path(root) / f"kl-v{CACHE_VERSION}-{kind}{rank}-L{max_length}.pickle"

    def save(self) -> Path | None:
        path = self.cache_path(self.kind, self.rank, self.max_length)
        if path is None:
            return None
        path.parent.mkdir(parents=True, exist_ok=True)
        data = {"version": CACHE_VERSION, "kind": self.kind, "rank": self.rank,
                "max_length": self.max_length,
                "columns": {_key(w): {_key(y): p.coeffs for y, p in col.items()}
                            for w, col in self._P.items()}}
        tmp = path.with_suffix(".tmp")
        with open(tmp, "wb") as fh:
            pickle.dump(data, fh)
        tmp.replace(path)
        return path

    def load(self) -> bool:
        path = self.cache_path(self.kind, self.rank, self.max_length)
        if path is None or not path.exists():
            return False
        with open(path, "rb") as fh:
            data = pickle.load(fh)
        if data.get("version") != CACHE_VERSION:
            return False
        for wk, col in data["columns"].items():
            self._P[_unkey(wk)] = {_unkey(yk): QPoly(c) for yk, c in col.items()}
        return True


def _key(e: AffineElement) -> tuple:
    return (e.finite_part.images, e.shift)


def _unkey(k) -> AffineElement:
    return AffineElement(SignedPermutation(k[0]), k[1])


def _coeff(p: QPoly, k: int) -> int:
    return p.coeffs[k] if 0 <= k < len(p.coeffs) else 0


_tables: dict = {}


def kl_table(rs: RootSystem, max_length: int = DEFAULT_MAX_LENGTH) -> KLTable:
    key = (rs.kind, rs.rank, max_length)
    t = _tables.get(key)
    if t is None:
        t = _tables[key] = KLTable(rs.kind, rs.rank, max_length)
        t.load()
    return t


def save_kl_tables() -> list:
    """Write every table built in this process to the cache directory named
    by the environment variable (no-op when it is unset)."""
    return [p for p in (t.save() for t in _tables.values() if t.entries()) if p is not None]


def parabolic_kl_v(rs: RootSystem, lower: Sequence, upper: Sequence, ell: int,
                   max_length: int = DEFAULT_MAX_LENGTH) -> dict:
    """sum_{z in W_nu} (-v)^l(z) p_{w(lower) z, w(upper)}(v), as {exponent: coeff}."""
    a = alcove_normalize(rs, lower, ell)
    b = alcove_normalize(rs, upper, ell)
    if a.nu != b.nu:
        raise OrbitMismatch(f"{list(lower)} and {list(upper)} are in different orbits")
    table = kl_table(rs, max_length)
    x = b.min_rep
    lx = table.length(x)
    if lx > max_length:
        raise KLBoundExceeded(a.min_rep, x, lx, max_length)
    out = defaultdict(int)
    for z, lz in zip(a.stabilizer, a.stabilizer_lengths):
        y = a.min_rep * z
        for e, c in table.p(y, x).items():
            out[e + lz] += c * (-1) ** lz
    return {e: c for e, c in out.items() if c}


def v_to_q(poly_v: dict) -> QPoly:
    """Substitute v^2 = q.  Odd exponents (odd length difference) are first
    divided by v."""
    if not poly_v:
        return QPoly()
    parities = {e % 2 for e in poly_v}
    if len(parities) != 1:
        raise ValueError("mixed parities in a parabolic KL polynomial")
    out = defaultdict(int)
    for e, c in poly_v.items():
        if e < 0:
            raise ValueError("negative power of v in a parabolic KL polynomial")
        out[e // 2] += c
    return QPoly([out.get(d, 0) for d in range(max(out) + 1)])


def parabolic_kl(rs: RootSystem, lower: Sequence, upper: Sequence, ell: int,
                 max_length: int = DEFAULT_MAX_LENGTH) -> QPoly:
    """Parabolic KL polynomial P^-_{lower, upper}(q) for the level -ell action."""
    result = v_to_q(parabolic_kl_v(rs, lower, upper, ell, max_length))
    if not result.nonnegative():
        raise AssertionError(f"negative coefficient in P^-: {result}")
    return result


def n_lambda(rs: RootSystem, lam: Sequence) -> AffineElement:
    """w0 t_lambda* with lambda* = -w0 lambda, the element sending the
    fundamental alcove weight -rho to ell lambda + rho.  lambda* = lambda
    except in type D of odd rank, where w0 keeps the first coordinate."""
    w0 = longest_element(rs)
    dual = normalize([-c for c in w0.act(lam)])
    return AffineElement.from_translation(w0, dual)


def _orbit_candidates(rs: RootSystem, size: int | None, bound: int) -> list:
    if rs.kind == "A":
        return dominant_weights(rs, size, exact=True) if size is not None and size >= 0 else []
    return dominant_weights(rs, bound)


def g_function(rs: RootSystem, mu: Sequence, ell: int, bound: int,
               max_length: int = DEFAULT_MAX_LENGTH) -> CharExpansion:
    """sum_lambda P^-_{mu + rho, ell lambda + rho}(q) s_lambda over size <= bound."""
    mu = normalize(mu)
    if rs.kind in ("B", "C", "D") and ell % 2 == 0:
        warnings.warn("for even ell in types B, C, D the coefficients are not "
                      "quantizations of branching coefficients", stacklevel=2)
    rho = rs.rho
    lower = tuple(a + b for a, b in zip(mu, rho))
    nu = alcove_normalize(rs, lower, ell).nu
    size = sum(mu) // ell if rs.kind == "A" and sum(mu) % ell == 0 else (None if rs.kind == "A" else 0)
    terms = {}
    for lam in _orbit_candidates(rs, size, bound):
        upper = tuple(ell * a + b for a, b in zip(lam, rho))
        if alcove_normalize(rs, upper, ell).nu != nu:
            continue
        val = parabolic_kl(rs, lower, upper, ell, max_length)
        if val:
            terms[lam] = val
    return CharExpansion(rs.kind, rs.rank, terms, None if rs.kind == "A" else bound)


def h_function(rs: RootSystem, mu: Sequence, ell: int, bound: int,
               max_length: int = DEFAULT_MAX_LENGTH) -> CharExpansion:
    return g_function(rs, [ell * a for a in mu], ell, bound, max_length)
