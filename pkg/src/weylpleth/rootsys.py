"""Classical root systems of types A, B, C, D and their Weyl groups.

Coordinates are indexed 1..n with the convention that partitions are
weakly increasing.  The positive roots are

    A: e_j - e_i (i < j)
    B: e_j -+ e_i (i < j), e_i
    C: e_j -+ e_i (i < j), 2 e_i
    D: e_j -+ e_i (i < j)

Weyl group elements are signed permutations of J_n = {-n..-1, 1..n}
acting on weights by (w.beta)_{|w(j)|} = sign(w(j)) beta_j.  Weights are
tuples of ints, or Fractions when half-integral (type B).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

KINDS = ("A", "B", "C", "D")

Weight = tuple


class WeylGroupTooLarge(ValueError):
    """Raised when full enumeration of a Weyl group is refused."""


def normalize(coords: Sequence) -> Weight:
    """Return coords as a tuple, with integral Fractions turned into ints."""
    out = []
    for c in coords:
        if isinstance(c, Fraction):
            out.append(int(c) if c.denominator == 1 else c)
        elif isinstance(c, int):
            out.append(c)
        else:
            f = Fraction(c)
            if f.denominator not in (1, 2):
                raise ValueError(f"weight coordinate {c!r} is not half-integral")
            out.append(int(f) if f.denominator == 1 else f)
    return tuple(out)


def add(a: Weight, b: Weight) -> Weight:
    return normalize([x + y for x, y in zip(a, b)])


def sub(a: Weight, b: Weight) -> Weight:
    return normalize([x - y for x, y in zip(a, b)])


def scale(c, a: Weight) -> Weight:
    return normalize([c * x for x in a])


def dot(a: Weight, b: Weight):
    return sum(x * y for x, y in zip(a, b))


def _unit(n: int, i: int, c=1) -> list:
    v = [0] * n
    v[i - 1] = c
    return v


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown root system type {self.kind!r}")
        if self.rank < 1 or (self.kind == "D" and self.rank < 2):
            raise ValueError(f"rank {self.rank} is not supported for type {self.kind}")

    @property
    def positive_roots(self) -> tuple:
        return _positive_roots(self.kind, self.rank)

    @property
    def rho(self) -> Weight:
        n = self.rank
        if self.kind in ("A", "C"):
            return tuple(range(1, n + 1))
        if self.kind == "D":
            return tuple(range(n))
        return tuple(Fraction(2 * i - 1, 2) for i in range(1, n + 1))

    @property
    def simple_roots(self) -> tuple:
        n = self.rank
        roots = [tuple(_unit(n, i + 1, 1)[j] - _unit(n, i, 1)[j] for j in range(n))
                 for i in range(1, n)]
        if self.kind == "B":
            roots.insert(0, tuple(_unit(n, 1)))
        elif self.kind == "C":
            roots.insert(0, tuple(_unit(n, 1, 2)))
        elif self.kind == "D":
            v = _unit(n, 1)
            v[1] = 1
            roots.insert(0, tuple(v))
        return tuple(roots)

    def is_dominant(self, beta: Weight) -> bool:
        return all(dot(beta, a) >= 0 for a in self.simple_roots)

    def is_root(self, alpha: Weight) -> bool:
        alpha = tuple(alpha)
        neg = tuple(-a for a in alpha)
        roots = self.positive_roots
        return alpha in roots or neg in roots

    def is_positive(self, alpha: Weight) -> bool:
        return tuple(alpha) in self.positive_roots

    def weight_size(self, beta: Weight):
        """Sum of absolute values of coordinates (|lambda| for partitions)."""
        return sum(abs(b) for b in beta)

    def __str__(self):
        return f"{self.kind}{self.rank}"


@lru_cache(maxsize=None)
def _positive_roots(kind: str, n: int) -> tuple:
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = [0] * n
            v[j - 1] = 1
            v[i - 1] = -1
            roots.append(tuple(v))
            if kind != "A":
                v = [0] * n
                v[j - 1] = 1
                v[i - 1] = 1
                roots.append(tuple(v))
        if kind == "B":
            roots.append(tuple(_unit(n, i)))
        elif kind == "C":
            roots.append(tuple(_unit(n, i, 2)))
    return tuple(roots)


@lru_cache(maxsize=None)
def root_system(kind: str, rank: int) -> RootSystem:
    return RootSystem(kind, rank)


def dominant_weights(rs: RootSystem, bound: int, exact: bool = False) -> list:
    """Dominant integral weights of size at most `bound` (exactly `bound`
    when `exact`).  Type A is restricted to partitions.  In type D the
    first coordinate may be negative and the size is the sum of absolute
    values."""
    n = rs.rank
    out = []

    def rec(prefix, lo, remaining, length):
        if len(prefix) == length:
            if not exact or remaining == 0:
                out.append(tuple(prefix))
            return
        k = length - len(prefix)
        for v in range(lo, remaining // k + 1):
            rec(prefix + [v], v, remaining - v, length)

    if rs.kind == "D":
        for first in range(-bound, bound + 1):
            start = len(out)
            rec([], abs(first), bound - abs(first), n - 1)
            out[start:] = [(first,) + w for w in out[start:]]
    else:
        rec([], 0, bound, n)
    return sorted(out, key=lambda w: (rs.weight_size(w), w[::-1]))


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation w of J_n, stored as (w(1), ..., w(n))."""

    images: tuple

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if x > 0:
            return self.images[x - 1]
        return -self.images[-x - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for j, wj in enumerate(self.images, start=1):
            inv[abs(wj) - 1] = j if wj > 0 else -j
        return SignedPermutation(tuple(inv))

    def act(self, beta: Sequence) -> Weight:
        out = [0] * self.n
        for j, wj in enumerate(self.images):
            out[abs(wj) - 1] = beta[j] if wj > 0 else -beta[j]
        return normalize(out)

    def negatives(self) -> int:
        return sum(1 for x in self.images if x < 0)

    def is_permutation(self) -> bool:
        return all(x > 0 for x in self.images)

    def belongs_to(self, kind: str) -> bool:
        if kind == "A":
            return self.is_permutation()
        if kind == "D":
            return self.negatives() % 2 == 0
        return True

    def length(self, kind: str) -> int:
        """Number of positive roots sent to negative roots."""
        roots = _positive_roots(kind, self.n)
        pos = set(roots)
        return sum(1 for a in roots if self.act(a) not in pos)

    def sign(self, kind: str) -> int:
        """Signature, computed from the underlying permutation."""
        perm = [abs(x) - 1 for x in self.images]
        s = _perm_sign(perm)
        if kind in ("B", "C"):
            s *= (-1) ** self.negatives()
        return s

    def __str__(self):
        return "(" + " ".join(str(x) if x > 0 else f"-{-x}" for x in self.images) + ")"


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, size = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            size += 1
        if size % 2 == 0:
            s = -s
    return s


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def longest_element(rs: RootSystem) -> SignedPermutation:
    n = rs.rank
    if rs.kind == "A":
        return SignedPermutation(tuple(range(n, 0, -1)))
    if rs.kind == "D" and n % 2 == 1:
        # -1 is not in W(D_n) for odd n; w0 fixes the sign of coordinate 1
        return SignedPermutation((1,) + tuple(-i for i in range(2, n + 1)))
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def simple_reflections(rs: RootSystem) -> list:
    """Simple reflections for the positive system above."""
    n = rs.rank
    gens = []
    if rs.kind in ("B", "C"):
        gens.append(SignedPermutation((-1,) + tuple(range(2, n + 1))))
    elif rs.kind == "D":
        gens.append(SignedPermutation((-2, -1) + tuple(range(3, n + 1))))
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(SignedPermutation(tuple(img)))
    return gens


def reflection(alpha: Sequence) -> SignedPermutation:
    """The reflection s_alpha for a root alpha of a classical system."""
    n = len(alpha)
    support = [i for i, a in enumerate(alpha) if a != 0]
    img = list(range(1, n + 1))
    if len(support) == 1:
        i = support[0]
        img[i] = -(i + 1)
    else:
        i, j = support
        if alpha[i] * alpha[j] < 0:
            img[i], img[j] = j + 1, i + 1
        else:
            img[i], img[j] = -(j + 1), -(i + 1)
    return SignedPermutation(tuple(img))


def weyl_group_order(rs: RootSystem) -> int:
    import math
    n = rs.rank
    if rs.kind == "A":
        return math.factorial(n)
    if rs.kind == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return 2 ** n * math.factorial(n)


def iter_signed_permutations(kind: str, n: int) -> Iterator[SignedPermutation]:
    for perm in itertools.permutations(range(1, n + 1)):
        if kind == "A":
            yield SignedPermutation(perm)
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if kind == "D" and signs.count(-1) % 2:
                continue
            yield SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


@lru_cache(maxsize=None)
def _weyl_elements(kind: str, n: int) -> tuple:
    return tuple((w, w.length(kind), w.sign(kind)) for w in iter_signed_permutations(kind, n))


def enumerate_weyl(rs: RootSystem, max_rank: int = 5) -> tuple:
    """All (w, length, sign) for the Weyl group of rs."""
    if rs.rank > max_rank:
        raise WeylGroupTooLarge(
            f"refusing to enumerate W({rs}) of order {weyl_group_order(rs)}; raise max_rank")
    return _weyl_elements(rs.kind, rs.rank)


def reduced_word_lengths(rs: RootSystem) -> dict:
    """Lengths by breadth-first search over simple reflections."""
    gens = simple_reflections(rs)
    e = identity(rs.rank)
    dist = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u not in dist:
                    dist[u] = dist[w] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def weyl_action(w: SignedPermutation, beta: Sequence) -> Weight:
    return w.act(beta)


def dot_action(rs: RootSystem, w: SignedPermutation, beta: Sequence) -> Weight:
    """w o beta = w(beta + rho) - rho."""
    return sub(w.act(add(beta, rs.rho)), rs.rho)


def _sorting_element(rs: RootSystem, gamma: Weight):
    """Return (w, delta) with delta = w(gamma) dominant."""
    n = rs.rank
    kind = rs.kind
    if kind == "A":
        order = sorted(range(n), key=lambda j: gamma[j])
        images = [0] * n
        for pos, j in enumerate(order, start=1):
            images[j] = pos
        w = SignedPermutation(tuple(images))
        return w, w.act(gamma)
    absval = [abs(g) for g in gamma]
    order = sorted(range(n), key=lambda j: absval[j])
    images = [0] * n
    for pos, j in enumerate(order, start=1):
        images[j] = pos if gamma[j] >= 0 else -pos
    if kind == "D":
        negs = sum(1 for x in images if x < 0)
        if negs % 2:
            # flip the coordinate that lands in position 1
            j = order[0]
            images[j] = -images[j]
    w = SignedPermutation(tuple(images))
    return w, w.act(gamma)


def straighten(rs: RootSystem, beta: Sequence):
    """Return (sign, lambda) with s_beta = sign * s_lambda, or (0, None)."""
    gamma = add(tuple(beta), rs.rho)
    w, delta = _sorting_element(rs, gamma)
    if not _strictly_dominant(rs, delta):
        return 0, None
    return w.sign(rs.kind), sub(delta, rs.rho)


def _strictly_dominant(rs: RootSystem, delta: Weight) -> bool:
    return all(dot(delta, a) > 0 for a in rs.simple_roots)


def is_regular(rs: RootSystem, gamma: Sequence) -> bool:
    """True when gamma has trivial stabilizer in W."""
    return all(dot(gamma, a) != 0 for a in rs.positive_roots)


def dominant_representative(rs: RootSystem, beta: Sequence):
    """Return (w, delta) with delta = w(beta) dominant."""
    return _sorting_element(rs, normalize(beta))


def simple_root_coefficients(rs: RootSystem, d: Sequence) -> list:
    """Coefficients of d on the simple roots (listed as in simple_roots)."""
    n = rs.rank
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + d[j]
    # suffix[j] pairs to 1 with e_{j+1} - e_j and to 0 with the others
    tail = [suffix[j] for j in range(1, n)]
    if rs.kind == "A":
        return tail if suffix[0] == 0 else None
    if rs.kind == "B":
        return [suffix[0]] + tail
    if rs.kind == "C":
        return [Fraction(suffix[0], 2)] + tail
    c0 = Fraction(suffix[0], 2)
    return [c0, suffix[1] - c0] + tail[1:]


def dominates(rs: RootSystem, lam: Sequence, nu: Sequence) -> bool:
    """True when lam - nu is a sum of positive roots."""
    coeffs = simple_root_coefficients(rs, [a - b for a, b in zip(lam, nu)])
    if coeffs is None:
        return False
    return all(c >= 0 and Fraction(c).denominator == 1 for c in coeffs)
