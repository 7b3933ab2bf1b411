"""The ell-quotient of a weight: the data describing phi_ell(Delta x^mu).

For a dominant weight mu, phi_ell(Delta x^mu) is either zero or equal to
eps(w0) * Delta_I * x^gamma, where Delta_I is the Weyl denominator of a
Levi subgroup G_I and gamma is a dominant weight of G_I written in global
coordinates.  The blocks of I are

  * a classical block of positive indices, carrying a root system of the
    ambient type (absent in type A), and
  * general linear blocks X of signed indices in J_n, sorted increasingly,
    whose positive roots are e_y - e_x for x < y in X (with e_{-i} = -e_i).

A weight of G_I is a tuple of block components; in global coordinates the
component entry at x in X sits at position |x| with sign sign(x).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import LaurentPoly, phi_l, product_of_binomials
from .rootsys import (RootSystem, SignedPermutation, normalize, root_system, dot,
                      add)


class EvenEllUnsupported(ValueError):
    """Raised for even ell in types C and D, where phi_ell(Delta x^mu) does
    not factor through a Levi denominator of the same type."""


_CLASSICAL_NAMES = {"B": ("SO", 1), "C": ("Sp", 0), "D": ("SO", 0)}


@dataclass(frozen=True)
class LeviDatum:
    kind: str
    rank: int
    classical: tuple | None
    gl_blocks: tuple
    alpha_offsets: tuple = ()

    @property
    def blocks(self) -> list:
        """(kind, indices) for every block, classical block first."""
        out = []
        if self.classical is not None:
            out.append(("classical", self.classical))
        out.extend(("GL", b) for b in self.gl_blocks)
        return out

    def positive_roots(self) -> list:
        n = self.rank
        roots = []

        def vec(pairs):
            v = [0] * n
            for idx, c in pairs:
                v[abs(idx) - 1] += c if idx > 0 else -c
            return tuple(v)

        if self.classical:
            idx = self.classical
            for a in range(len(idx)):
                for b in range(a + 1, len(idx)):
                    i, j = idx[a], idx[b]
                    roots.append(vec([(j, 1), (i, -1)]))
                    roots.append(vec([(j, 1), (i, 1)]))
                if self.kind == "B":
                    roots.append(vec([(idx[a], 1)]))
                elif self.kind == "C":
                    roots.append(vec([(idx[a], 2)]))
        for block in self.gl_blocks:
            for a in range(len(block)):
                for b in range(a + 1, len(block)):
                    roots.append(vec([(block[b], 1), (block[a], -1)]))
        return roots

    def delta(self) -> LaurentPoly:
        return product_of_binomials(self.positive_roots(), self.rank)

    def rho(self) -> tuple:
        """Half sum of the positive roots of G_I, in global coordinates."""
        total = [0] * self.rank
        for r in self.positive_roots():
            for i, c in enumerate(r):
                total[i] += c
        from fractions import Fraction
        return normalize([Fraction(t, 2) for t in total])

    def embed(self, components: Sequence[Sequence]) -> tuple:
        """Global coordinates of a G_I weight given by block components."""
        out = [0] * self.rank
        comps = list(components)
        for (_, idx), comp in zip(self.blocks, comps):
            if len(idx) != len(comp):
                raise ValueError("component length does not match block size")
            for x, c in zip(idx, comp):
                out[abs(x) - 1] = c if x > 0 else -c
        return normalize(out)

    def split(self, beta: Sequence) -> tuple:
        """Block components of a global weight."""
        comps = []
        for _, idx in self.blocks:
            comps.append(normalize([beta[x - 1] if x > 0 else -beta[-x - 1] for x in idx]))
        return tuple(comps)

    def is_dominant(self, beta: Sequence) -> bool:
        return all(dot(beta, a) >= 0 for a in self.positive_roots())

    def classical_name(self) -> str:
        return "GL" if self.kind == "A" else _CLASSICAL_NAMES[self.kind][0]

    def label(self) -> str:
        parts = []
        if self.classical:
            if self.kind == "A":
                parts.append(f"GL{len(self.classical)}")
            else:
                name, extra = _CLASSICAL_NAMES[self.kind]
                parts.append(f"{name}{2 * len(self.classical) + extra}")
        for b in self.gl_blocks:
            if b:
                parts.append(f"GL{len(b)}")
        return "x".join(parts) if parts else "1"

    def to_json(self, components=None) -> list:
        out = []
        comps = components if components is not None else [None] * len(self.blocks)
        for (kind, idx), comp in zip(self.blocks, comps):
            entry = {"kind": self.classical_name() if kind == "classical" else "GL",
                     "indices": list(idx)}
            if comp is not None:
                entry["component"] = [_num(c) for c in comp]
            out.append(entry)
        return out


def _num(c):
    from fractions import Fraction
    return str(c) if isinstance(c, Fraction) else c


@dataclass(frozen=True)
class QuotientResult:
    """Outcome of the ell-quotient; `vanishes` means phi_ell(Delta x^mu) = 0."""

    kind: str
    rank: int
    mu: tuple
    ell: int
    vanishes: bool
    sign: int = 0
    datum: LeviDatum | None = None
    components: tuple = ()
    w0: SignedPermutation | None = None

    def __bool__(self):
        return not self.vanishes

    @property
    def weight(self) -> tuple:
        """The quotient weight in global coordinates."""
        return self.datum.embed(self.components)

    def to_json(self) -> dict:
        if self.vanishes:
            return {"type": self.kind, "rank": self.rank, "mu": list(self.mu),
                    "ell": self.ell, "zero": True}
        return {"type": self.kind, "rank": self.rank, "mu": list(self.mu), "ell": self.ell,
                "zero": False, "sign": self.sign,
                "blocks": self.datum.to_json(self.components),
                "levi": self.datum.label(),
                "w0": list(self.w0.images)}

    def to_text(self) -> str:
        if self.vanishes:
            return f"phi_{self.ell}(Delta x^{list(self.mu)}) = 0"
        lines = [f"sign: {self.sign:+d}", f"Levi: {self.datum.label()}"]
        for (kind, idx), comp in zip(self.datum.blocks, self.components):
            name = self.datum.classical_name() if kind == "classical" else "GL"
            idx_s = ",".join(str(x) for x in idx)
            lines.append(f"  {name} block ({idx_s}): {list(comp)}")
        lines.append(f"w0: {self.w0}")
        return "\n".join(lines)


def _zero(kind, n, mu, ell) -> QuotientResult:
    return QuotientResult(kind, n, tuple(mu), ell, True)


def _residue(x: int, ell: int, top: bool) -> int:
    """x mod ell, in 1..ell when `top`, else in 0..ell-1."""
    r = x % ell
    if top and r == 0:
        return ell
    return r


def _signed_sorted(neg: Sequence[int], pos: Sequence[int]) -> tuple:
    return tuple(sorted([-i for i in neg] + list(pos)))


def _assemble_w0(n: int, assignments: dict) -> SignedPermutation:
    """Signed permutation from values on signed indices."""
    images = [0] * n
    for x, v in assignments.items():
        if x > 0:
            images[x - 1] = v
        else:
            images[-x - 1] = -v
    w = SignedPermutation(tuple(images))
    if sorted(abs(v) for v in images) != list(range(1, n + 1)):
        raise AssertionError(f"w0 is not a signed permutation: {images}")
    return w


def _xi(v: int) -> int:
    return 1 if v > 0 else -1


def w_hat(w: SignedPermutation) -> dict:
    """x -> w(x) - xi(x) on J_n, with values in K_n = {-(n-1), ..., n-1}."""
    n = w.n
    return {x: w(x) - _xi(w(x)) for x in range(-n, n + 1) if x}


def from_w_hat(values: dict, n: int) -> SignedPermutation:
    """The element of W(D_n) whose hat map agrees with `values` on signed
    indices (one per coordinate).  The index sent to 0 determines w only up
    to a sign, which is fixed by requiring an even number of sign changes."""
    assign, zero_at = {}, None
    for x, v in values.items():
        if v == 0:
            zero_at = x
            assign[x] = 1
        else:
            assign[x] = v + _xi(v)
    w = _assemble_w0(n, assign)
    if w.negatives() % 2:
        if zero_at is None:
            raise ValueError("hat values do not come from an element of W(D_n)")
        assign[zero_at] = -1
        w = _assemble_w0(n, assign)
    return w


def w_tilde(w: SignedPermutation) -> dict:
    """x -> w(x) + (1 - xi(x))/2, a bijection J_n -> L_n = {-(n-1), ..., n}."""
    n = w.n
    return {x: w(x) + (1 - _xi(w(x))) // 2 for x in range(-n, n + 1) if x}


def from_w_tilde(values: dict, n: int) -> SignedPermutation:
    """Inverse of w_tilde, given its values on signed indices (one per coordinate)."""
    return _assemble_w0(n, {x: (v if v > 0 else v - 1) for x, v in values.items()})


def _check_mu(rs: RootSystem, mu: Sequence, ell: int) -> tuple:
    mu = normalize(mu)
    if len(mu) != rs.rank:
        raise ValueError(f"weight {list(mu)} has length {len(mu)}, expected {rs.rank}")
    if any(not isinstance(m, int) for m in mu):
        raise ValueError("quotients are defined for integral weights")
    if not rs.is_dominant(mu):
        raise ValueError(f"{list(mu)} is not dominant for {rs}")
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return mu


def quotient_A(n: int, mu: Sequence, ell: int) -> QuotientResult:
    rs = root_system("A", n)
    mu = _check_mu(rs, mu, ell)
    shifted = [m + i for i, m in enumerate(mu, start=1)]
    blocks, comps, assign = [], [], {}
    # residue classes are taken in 1..ell so the class of 0 is listed as ell
    order = [ell] + list(range(1, ell))
    for k in order:
        idx = [i for i in range(1, n + 1) if _residue(shifted[i - 1], ell, True) == k]
        targets = [j for j in range(1, n + 1) if _residue(j, ell, True) == k]
        if len(idx) != len(targets):
            return _zero("A", n, mu, ell)
        for i, j in zip(idx, targets):
            assign[i] = j
        comp = [(shifted[i - 1] + ell - k) // ell - a for a, i in enumerate(idx, start=1)]
        blocks.append(tuple(idx))
        comps.append(normalize(comp))
    w0 = _assemble_w0(n, assign)
    datum = LeviDatum("A", n, None, tuple(blocks))
    return QuotientResult("A", n, mu, ell, False, w0.sign("A"), datum, tuple(comps), w0)


def quotient_C(n: int, mu: Sequence, ell: int) -> QuotientResult:
    rs = root_system("C", n)
    mu = _check_mu(rs, mu, ell)
    if ell % 2 == 0:
        raise EvenEllUnsupported(
            "type C with even ell: phi_ell(Delta x^mu) contains the factor "
            "prod (1 - x_i) of a type B root system and is not a Levi denominator of Sp")
    p = (ell + 1) // 2
    shifted = [m + i for i, m in enumerate(mu, start=1)]
    jn = [x for x in range(-n, n + 1) if x != 0]
    I = {k: [i for i in range(1, n + 1) if shifted[i - 1] % ell == k] for k in range(ell)}
    J = {k: [x for x in jn if x % ell == k] for k in range(ell)}
    if 2 * len(I[0]) != len(J[0]):
        return _zero("C", n, mu, ell)
    assign = {}
    for a, i in enumerate(I[0], start=1):
        assign[i] = a * ell
    comps = [normalize([shifted[i - 1] // ell - a for a, i in enumerate(I[0], start=1)])]
    blocks, alphas = [], []
    for k in range(1, p):
        X = _signed_sorted(I[k], I[ell - k])
        if len(X) != len(J[k]):
            return _zero("C", n, mu, ell)
        if not X:
            blocks.append(X)
            alphas.append(None)
            comps.append(())
            continue
        alpha = (-k - min(J[ell - k])) // ell
        for a, x in enumerate(X, start=1):
            assign[x] = -k - alpha * ell + (a - 1) * ell
        comp = []
        for a, x in enumerate(X, start=1):
            s = 1 if x > 0 else -1
            comp.append(s * (shifted[abs(x) - 1] + s * k) // ell - a + alpha + 1)
        blocks.append(X)
        alphas.append(alpha)
        comps.append(normalize(comp))
    w0 = _assemble_w0(n, assign)
    datum = LeviDatum("C", n, tuple(I[0]), tuple(blocks), tuple(alphas))
    return QuotientResult("C", n, mu, ell, False, w0.sign("C"), datum, tuple(comps), w0)


def quotient_D(n: int, mu: Sequence, ell: int) -> QuotientResult:
    rs = root_system("D", n)
    mu = _check_mu(rs, mu, ell)
    if ell % 2 == 0:
        raise EvenEllUnsupported(
            "type D with even ell: phi_ell(Delta x^mu) need not factor into binomials "
            "(already for SO4, phi_2((1 - x2/x1)(1 - x1 x2)) = 1 + x2)")
    p = (ell + 1) // 2
    shifted = [m + i - 1 for i, m in enumerate(mu, start=1)]
    kn = list(range(-(n - 1), n))
    I = {k: [i for i in range(1, n + 1) if shifted[i - 1] % ell == k] for k in range(ell)}
    J = {k: [x for x in kn if x % ell == k] for k in range(ell)}
    if 2 * len(I[0]) != len(J[0]) + 1:
        return _zero("D", n, mu, ell)
    hat = {}
    for a, i in enumerate(I[0], start=1):
        hat[i] = (a - 1) * ell
    comps = [normalize([shifted[i - 1] // ell - (a - 1) for a, i in enumerate(I[0], start=1)])]
    blocks, alphas = [], []
    for k in range(1, p):
        X = _signed_sorted(I[k], I[ell - k])
        if len(X) != len(J[k]):
            return _zero("D", n, mu, ell)
        if not X:
            blocks.append(X)
            alphas.append(None)
            comps.append(())
            continue
        alpha = (-k - min(J[ell - k])) // ell
        for a, x in enumerate(X, start=1):
            hat[x] = -k - alpha * ell + (a - 1) * ell
        comp = []
        for a, x in enumerate(X, start=1):
            s = 1 if x > 0 else -1
            comp.append(s * (shifted[abs(x) - 1] + s * k) // ell - (a - 1) + alpha)
        blocks.append(X)
        alphas.append(alpha)
        comps.append(normalize(comp))
    w0 = from_w_hat(hat, n)
    datum = LeviDatum("D", n, tuple(I[0]), tuple(blocks), tuple(alphas))
    return QuotientResult("D", n, mu, ell, False, w0.sign("D"), datum, tuple(comps), w0)


def quotient_B(n: int, mu: Sequence, ell: int) -> QuotientResult:
    rs = root_system("B", n)
    mu = _check_mu(rs, mu, ell)
    p = ell // 2
    shifted = [m + i for i, m in enumerate(mu, start=1)]
    ln = list(range(-(n - 1), n + 1))
    I = {k: [i for i in range(1, n + 1) if _residue(shifted[i - 1], ell, True) == k]
         for k in range(1, ell + 1)}
    J = {k: [x for x in ln if _residue(x, ell, True) == k] for k in range(1, ell + 1)}
    tilde = {}
    blocks, alphas, gl_comps = [], [], []
    for k in range(1, p + 1):
        X = _signed_sorted(I[k], I[ell - k + 1])
        if len(X) != len(J[k]):
            return _zero("B", n, mu, ell)
        if not X:
            blocks.append(X)
            alphas.append(None)
            gl_comps.append(())
            continue
        alpha = (-k + 1 - min(J[ell - k + 1])) // ell
        for a, x in enumerate(X, start=1):
            tilde[x] = -k + 1 - alpha * ell + (a - 1) * ell
        comp = []
        for a, x in enumerate(X, start=1):
            s = 1 if x > 0 else -1
            num = s * (shifted[abs(x) - 1] + s * k - (1 + s) // 2)
            comp.append(num // ell - a + alpha + 1)
        blocks.append(X)
        alphas.append(alpha)
        gl_comps.append(normalize(comp))
    if ell % 2:
        mid = I[p + 1]
        if 2 * len(mid) != len(J[p + 1]):
            return _zero("B", n, mu, ell)
        for a, i in enumerate(mid, start=1):
            tilde[i] = -p + a * ell
        classical = tuple(mid)
        class_comp = normalize([(shifted[i - 1] + p) // ell - a for a, i in enumerate(mid, start=1)])
    else:
        classical = ()
        class_comp = ()
    w0 = from_w_tilde(tilde, n)
    datum = LeviDatum("B", n, classical, tuple(blocks), tuple(alphas))
    comps = (class_comp,) + tuple(gl_comps)
    return QuotientResult("B", n, mu, ell, False, w0.sign("B"), datum, comps, w0)


_DISPATCH = {"A": quotient_A, "B": quotient_B, "C": quotient_C, "D": quotient_D}


def compute_quotient(kind: str, rank: int, mu: Sequence, ell: int) -> QuotientResult:
    if kind not in _DISPATCH:
        raise ValueError(f"unknown type {kind!r}")
    return _DISPATCH[kind](rank, mu, ell)


def phi_delta_monomial(rs: RootSystem, mu: Sequence, ell: int) -> LaurentPoly:
    """phi_ell(Delta x^mu), summing only the Weyl group elements that
    survive phi_ell.  Uses Delta = x^rho sum_w eps(w) x^(-w rho)."""
    n = rs.rank
    kind = rs.kind
    rho = rs.rho
    target = [m + r for m, r in zip(mu, rho)]
    terms = defaultdict(int)
    images = [0] * n
    used = [False] * n

    # (w rho)_i = s * rho_j exactly when w(j) = s * i
    def rec(i):
        if i == n:
            imgs = list(images)
            if kind == "D" and sum(1 for v in imgs if v < 0) % 2:
                # rho_1 = 0 in type D: flipping the sign of w(1) keeps the
                # action on rho and lands in W(D_n)
                imgs[0] = -imgs[0]
            w = SignedPermutation(tuple(imgs))
            wr = w.act(rho)
            terms[normalize([(t - c) / ell for t, c in zip(target, wr)])] += w.sign(kind)
            return
        for j in range(n):
            if used[j]:
                continue
            for s in ((1,) if kind == "A" or rho[j] == 0 else (1, -1)):
                if (target[i] - s * rho[j]) % ell:
                    continue
                used[j] = True
                images[j] = s * (i + 1)
                rec(i + 1)
                used[j] = False

    rec(0)
    return LaurentPoly(terms, n)


@dataclass
class FactorizationReport:
    """Comparison of phi_ell(Delta x^mu) with the predicted Levi factorization."""

    kind: str
    rank: int
    mu: tuple
    ell: int
    lhs: LaurentPoly
    rhs: LaurentPoly | None
    holds: bool
    factorizable: bool | None = None
    note: str = ""
    quotient: QuotientResult | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"type": self.kind, "rank": self.rank, "mu": list(self.mu), "ell": self.ell,
               "holds": self.holds, "factorizable": self.factorizable, "note": self.note,
               "lhs": self.lhs.to_json()}
        if self.quotient is not None:
            out["quotient"] = self.quotient.to_json()
        return out


def _even_c_data(n: int, mu: tuple, ell: int):
    """Block data for type C with even ell = 2p.  Besides the Sp and GL
    blocks there is a block I^(p) whose factor is a type B denominator.
    Returns None when phi_ell(Delta x^mu) vanishes."""
    p = ell // 2
    shifted = [m + i for i, m in enumerate(mu, start=1)]
    jn = [x for x in range(-n, n + 1) if x != 0]
    I = {k: [i for i in range(1, n + 1) if shifted[i - 1] % ell == k] for k in range(ell)}
    J = {k: [x for x in jn if x % ell == k] for k in range(ell)}
    if 2 * len(I[0]) != len(J[0]) or 2 * len(I[p]) != len(J[p]):
        return None
    assign = {}
    comps = {}
    for a, i in enumerate(I[0], start=1):
        assign[i] = a * ell
        comps[i] = shifted[i - 1] // ell - a
    for a, i in enumerate(I[p], start=1):
        assign[i] = p + (a - 1) * ell
        comps[i] = (shifted[i - 1] + p) // ell - a
    gl_blocks = []
    for k in range(1, p):
        X = _signed_sorted(I[k], I[ell - k])
        if len(X) != len(J[k]):
            return None
        gl_blocks.append(X)
        if not X:
            continue
        alpha = (-k - min(J[ell - k])) // ell
        for a, x in enumerate(X, start=1):
            assign[x] = -k - alpha * ell + (a - 1) * ell
            s = 1 if x > 0 else -1
            comps[x] = s * (shifted[abs(x) - 1] + s * k) // ell - a + alpha + 1
    w0 = _assemble_w0(n, assign)
    gamma = [0] * n
    for x, c in comps.items():
        gamma[abs(x) - 1] = c if x > 0 else -c
    c_datum = LeviDatum("C", n, tuple(I[0]), tuple(gl_blocks))
    b_datum = LeviDatum("B", n, tuple(I[p]), ())
    rhs = (c_datum.delta() * b_datum.delta()).shift(gamma) * w0.sign("C")
    return rhs, tuple(I[p])


def _provably_not_factorizable(p: LaurentPoly) -> bool:
    """A nonempty product of binomials (1 - x^beta) vanishes at x = 1, so a
    Laurent polynomial that does not vanish there and is not a monomial
    cannot be +-x^gamma times such a product."""
    return len(p) > 1 and p.evaluate([1] * p.nvars) != 0


def verify_quotient_factorization(kind: str, rank: int, mu: Sequence, ell: int) -> FactorizationReport:
    """Check phi_ell(Delta x^mu) == eps(w0) Delta_I x^gamma exactly."""
    rs = root_system(kind, rank)
    mu = _check_mu(rs, mu, ell)
    lhs = phi_delta_monomial(rs, mu, ell)
    if kind in ("C", "D") and ell % 2 == 0:
        if kind == "C":
            data = _even_c_data(rank, mu, ell)
            if data is None:
                return FactorizationReport(kind, rank, mu, ell, lhs, None, lhs.is_zero(),
                                           note="vanishes")
            rhs, bblock = data
            note = ("factor includes the type B denominator prod(1 - x_i) on block "
                    f"{list(bblock)}; not a Levi denominator of Sp") if bblock else \
                "no type B block for this weight"
            return FactorizationReport(kind, rank, mu, ell, lhs, rhs, lhs == rhs,
                                       factorizable=not bblock, note=note,
                                       extra={"type_b_block": list(bblock)})
        bad = _provably_not_factorizable(lhs)
        note = ("not of the form +-x^gamma * prod(1 - x^beta)" if bad else
                "no Levi factorization is predicted for even ell in type D")
        return FactorizationReport(kind, rank, mu, ell, lhs, None, False,
                                   factorizable=False if bad else None, note=note)
    q = compute_quotient(kind, rank, mu, ell)
    if not q:
        return FactorizationReport(kind, rank, mu, ell, lhs, LaurentPoly({}, rank),
                                   lhs.is_zero(), factorizable=True, note="vanishes", quotient=q)
    rhs = q.datum.delta().shift(q.weight) * q.sign
    return FactorizationReport(kind, rank, mu, ell, lhs, rhs, lhs == rhs, factorizable=True,
                               quotient=q)
