"""Command line front end: `weylpleth <subcommand> ...`.

Standard output carries the result only (text or JSON); progress and
diagnostics go to standard error.  Exit status is 0 on success, 1 on a
user error and 2 when an internal cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import verification as V
from .branching import branching_coeff, lusztig_q
from .characters import hall_littlewood_truncated, phi_plethysm_truncated, psi_plethysm_schur, CharExpansion
from .hecke import (DEFAULT_MAX_LENGTH, KLBoundExceeded, OrbitMismatch, g_function, h_function,
                    parabolic_kl, save_kl_tables)
from .quotient import EvenEllUnsupported, LeviDatum, compute_quotient, verify_quotient_factorization
from .rootsys import KINDS, normalize, root_system


class UserError(Exception):
    pass


class MismatchError(Exception):
    pass


_BLOCK_NAMES = {"A": ("GL",), "B": ("SO",), "C": ("Sp",), "D": ("SO",)}


def parse_weight(text: str, convention: str = "increasing") -> tuple:
    """Comma separated integers or fractions, e.g. "1,2,3" or "1/2,3/2"."""
    if text is None:
        raise UserError("missing weight")
    text = text.strip()
    if not text:
        return ()
    try:
        vals = [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UserError(f"cannot parse weight {text!r}") from None
    if convention == "decreasing":
        vals = vals[::-1]
    return normalize(vals)


def parse_levi(text: str, kind: str, rank: int) -> LeviDatum:
    """Parse "Sp4@2,4|GL@-5,1,3" style Levi data.

    Each block is NAME@indices with signed 1-based indices; the size after
    the name is optional and checked when given.  The classical block (Sp,
    SO, or in type A any GL block listed first) must use positive indices.
    """
    classical = None
    gl = []
    for part in (p for p in text.split("|") if p.strip()):
        if "@" not in part:
            raise UserError(f"Levi block {part!r} lacks '@'")
        name, idx_text = part.split("@", 1)
        name = name.strip()
        try:
            idx = tuple(int(t) for t in idx_text.split(",") if t.strip())
        except ValueError:
            raise UserError(f"bad indices in Levi block {part!r}") from None
        letters = name.rstrip("0123456789")
        digits = name[len(letters):]
        if letters not in ("GL", "Sp", "SO"):
            raise UserError(f"unknown Levi block name {name!r}")
        if kind != "A" and letters in ("Sp", "SO"):
            if letters not in _BLOCK_NAMES[kind]:
                raise UserError(f"{letters} block does not fit type {kind}")
            if classical is not None:
                raise UserError("more than one classical block")
            if any(i <= 0 for i in idx):
                raise UserError("classical block indices must be positive")
            expected = 2 * len(idx) + (1 if kind == "B" else 0)
            if digits and int(digits) != expected:
                raise UserError(f"{name} has {len(idx)} indices; expected {letters}{expected}")
            classical = idx
        else:
            if letters != "GL":
                raise UserError(f"{letters} block does not fit type {kind}")
            if digits and int(digits) != len(idx):
                raise UserError(f"{name} has {len(idx)} indices")
            gl.append(idx)
    used = sorted(abs(i) for b in ([classical] if classical else []) + gl for i in b)
    if len(used) != len(set(used)) or any(not 1 <= i <= rank for i in used):
        raise UserError("Levi indices must be distinct and lie in 1..rank")
    if kind == "A":
        if sorted(used) != list(range(1, rank + 1)) or any(i < 0 for b in gl for i in b):
            raise UserError("type A Levi blocks must partition 1..rank with positive indices")
        return LeviDatum("A", rank, gl[0] if gl else None, tuple(gl[1:]))
    return LeviDatum(kind, rank, classical if classical is not None else (), tuple(gl))


def _system(args):
    if args.type not in KINDS:
        raise UserError(f"unknown type {args.type!r}")
    if args.rank is None or args.rank < 1 or (args.type == "D" and args.rank < 2):
        raise UserError("rank must be >= 1 (>= 2 in type D)")
    return root_system(args.type, args.rank)


def _dominant(rs, text, convention, what="weight"):
    w = parse_weight(text, convention)
    if len(w) != rs.rank:
        raise UserError(f"{what} {list(w)} has {len(w)} entries; rank is {rs.rank}")
    if any(Fraction(c).denominator != 1 for c in w):
        raise UserError(f"{what} must be integral")
    if not rs.is_dominant(w):
        order = "weakly increasing" if convention == "increasing" else "weakly decreasing"
        raise UserError(f"{what} {text!r} is not dominant ({order} with nonnegative "
                        "entries; in type D the smallest entry may be negative)")
    return w


def _ell(args, allow_even=False):
    if args.ell is None or args.ell < 1:
        raise UserError("--ell must be a positive integer")
    if not allow_even and args.type in ("C", "D") and args.ell % 2 == 0:
        raise UserError(f"even ell in type {args.type}: phi_ell(Delta x^mu) is not a Levi "
                        "denominator here, so there is no branching interpretation; use "
                        "the `factorization` subcommand to inspect the obstruction")
    return args.ell


def _bound(args, default):
    return args.bound if args.bound is not None else default


def _weight_out(w, convention):
    w = list(w)[::-1] if convention == "decreasing" else list(w)
    return [str(c) if isinstance(c, Fraction) else c for c in w]


def _emit(args, payload_json, text):
    if args.format == "json":
        print(json.dumps(payload_json, sort_keys=True))
    else:
        print(text)


def _expansion_out(args, exp: CharExpansion):
    _emit(args, exp.to_json(args.convention), exp.to_text(args.convention))


def cmd_quotient(args):
    rs = _system(args)
    mu = _dominant(rs, args.mu, args.convention, "mu")
    q = compute_quotient(rs.kind, rs.rank, mu, _ell(args))
    payload = q.to_json()
    # block indices and components always refer to increasing coordinates
    payload["mu"] = _weight_out(q.mu, args.convention)
    _emit(args, payload, q.to_text())


def cmd_phi(args):
    rs = _system(args)
    mu = _dominant(rs, args.mu, args.convention, "mu")
    ell = _ell(args)
    exp = phi_plethysm_truncated(rs, mu, ell, _bound(args, int(rs.weight_size(mu))))
    _expansion_out(args, exp)


def cmd_psi(args):
    rs = _system(args)
    lam = _dominant(rs, args.lam, args.convention, "lambda")
    ell = _ell(args, allow_even=True)
    exp = CharExpansion(rs.kind, rs.rank, psi_plethysm_schur(rs, lam, ell))
    _expansion_out(args, exp)


def cmd_branch(args):
    rs = _system(args)
    lam = _dominant(rs, args.lam, args.convention, "lambda")
    if args.levi:
        datum = parse_levi(args.levi, rs.kind, rs.rank)
        mu = parse_weight(args.mu, args.convention)
    elif args.ell is not None:
        q = compute_quotient(rs.kind, rs.rank, _dominant(rs, args.mu, args.convention, "mu"),
                             _ell(args))
        if not q:
            _emit(args, {"coefficient": 0, "zero_quotient": True}, "0")
            return
        datum, mu = q.datum, q.weight
    else:
        raise UserError("branch needs --levi (with mu in global coordinates) or --ell")
    if len(mu) != rs.rank or not datum.is_dominant(mu):
        raise UserError(f"mu {list(mu)} is not dominant for {datum.label()}")
    c = branching_coeff(rs, lam, datum, mu)
    _emit(args, {"coefficient": c, "levi": datum.label()}, str(c))


def cmd_kostka_q(args):
    rs = _system(args)
    lam = _dominant(rs, args.lam, args.convention, "lambda")
    mu = _dominant(rs, args.mu, args.convention, "mu")
    k = lusztig_q(rs, lam, mu)
    _emit(args, {"qpoly": k.to_list()}, str(k))


def cmd_hall_littlewood(args):
    rs = _system(args)
    mu = _dominant(rs, args.mu, args.convention, "mu")
    _expansion_out(args, hall_littlewood_truncated(rs, mu, _bound(args, int(rs.weight_size(mu)) + 2)))


AUTO_LMAX_CAP = 40


def _with_lmax(args, compute):
    """Run compute(lmax).  Without --lmax the bound starts at the library
    default and grows to whatever length a failing entry reports."""
    if args.lmax is not None:
        result = compute(args.lmax)
    else:
        lmax = DEFAULT_MAX_LENGTH
        while True:
            try:
                result = compute(lmax)
                break
            except KLBoundExceeded as e:
                if e.length > AUTO_LMAX_CAP:
                    raise
                print(f"raising KL length bound to {e.length}", file=sys.stderr)
                lmax = e.length
    save_kl_tables()
    return result


def cmd_kl(args):
    rs = _system(args)
    ell = _ell(args)
    lam = _dominant(rs, args.lam, args.convention, "lambda")
    mu = _dominant(rs, args.mu, args.convention, "mu")
    rho = rs.rho
    lower = [a + r for a, r in zip(mu, rho)]
    upper = [ell * a + r for a, r in zip(lam, rho)]
    try:
        p = _with_lmax(args, lambda L: parabolic_kl(rs, lower, upper, ell, L))
    except OrbitMismatch:
        p = None
    if p is None:
        _emit(args, {"qpoly": [], "same_orbit": False}, "0")
    else:
        _emit(args, {"qpoly": p.to_list(), "same_orbit": True}, str(p))


def _gh(args, func):
    rs = _system(args)
    ell = _ell(args)
    mu = _dominant(rs, args.mu, args.convention, "mu")
    bound = _bound(args, int(rs.weight_size(mu)))
    exp = _with_lmax(args, lambda L: func(rs, mu, ell, bound, L))
    _expansion_out(args, exp)


def cmd_gfun(args):
    _gh(args, g_function)


def cmd_hfun(args):
    _gh(args, h_function)


SUITES = ("delta", "factorization", "plethysm", "branching", "lusztig",
          "hecke-endpoint", "hecke-duality", "hl-endpoints")


def _suite_systems(args, default_max):
    kinds = args.type if args.type else "ABCD"
    if any(k not in KINDS for k in kinds):
        raise UserError(f"unknown type in {kinds!r}")
    if args.rank is not None:
        return V.root_systems(kinds, args.rank, args.rank)
    return V.root_systems(kinds, args.max_rank or default_max)


def _ells(args):
    return (args.ell,) if args.ell is not None else (1, 2, 3, 5)


def _run_one(task):
    suite, rs_key, kw = task
    rs = root_system(*rs_key)
    fn = {"delta": V.delta_identity_grid, "factorization": V.quotient_grid,
          "plethysm": V.duality_grid, "branching": V.branching_grid,
          "lusztig": V.lusztig_grid, "hl-endpoints-h": V.h_one_grid,
          "hl-endpoints-r": V.regularity_grid}[suite]
    return fn([rs], **kw)


def run_suite(args, suite) -> V.GridReport:
    max_mu = args.max_mu
    if suite in ("hecke-endpoint", "hecke-duality"):
        kinds = args.type or ("C" if suite == "hecke-endpoint" else "BC")
        rank = args.rank or 2
        lmax = args.lmax or DEFAULT_MAX_LENGTH
        if suite == "hecke-endpoint":
            ell = args.ell or (2 * rank + 1 if kinds[0] != "A" else rank + 1)
            reports = [V.hecke_endpoint_grid(k, rank, ell, max_mu or 2, lmax) for k in kinds]
        else:
            reports = [V.hecke_duality_grid(k, rank, args.ell or 3, max_mu or 6, 3, lmax)
                       for k in kinds]
        return V.merge_reports(suite, reports)
    tasks = []
    if suite == "hl-endpoints":
        for rs in _suite_systems(args, 2):
            tasks.append(("hl-endpoints-h", (rs.kind, rs.rank),
                          {"max_size": max_mu or 2, "max_length": max(args.lmax or 0, 18)}))
        for rs in _suite_systems(args, 3):
            tasks.append(("hl-endpoints-r", (rs.kind, rs.rank), {}))
    else:
        kw = {}
        if suite in ("factorization", "plethysm", "branching"):
            kw["ells"] = _ells(args)
        if suite != "delta":
            kw["max_size"] = max_mu or (5 if suite == "lusztig" else 6)
        for rs in _suite_systems(args, 3 if suite != "delta" else 4):
            tasks.append((suite, (rs.kind, rs.rank), kw))
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, tasks))
    else:
        reports = []
        for t in tasks:
            print(f"  {suite}: {t[1][0]}{t[1][1]}", file=sys.stderr, flush=True)
            reports.append(_run_one(t))
    return V.merge_reports(suite, reports)


def cmd_verify(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.type and args.type in ("C", "D") and args.ell is not None and args.ell % 2 == 0 \
            and not set(suites) <= {"delta", "factorization", "lusztig"}:
        _ell(args)
    reports = [run_suite(args, s) for s in suites]
    if args.format == "json":
        print(json.dumps({"passed": all(r.passed for r in reports),
                          "suites": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
    if not all(r.passed for r in reports):
        raise MismatchError("verification failed")


def cmd_factorization(args):
    rs = _system(args)
    mu = _dominant(rs, args.mu, args.convention, "mu")
    rep = verify_quotient_factorization(rs.kind, rs.rank, mu, _ell(args, allow_even=True))
    _emit(args, rep.to_json(), f"holds: {rep.holds}\nfactorizable: {rep.factorizable}\n"
          f"phi: {rep.lhs.to_text()}" + (f"\nnote: {rep.note}" if rep.note else ""))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", type=str.upper, help="root system type A, B, C or D")
    common.add_argument("--rank", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--mu")
    common.add_argument("--lambda", dest="lam")
    common.add_argument("--bound", type=int, help="truncation bound on the size of lambda")
    common.add_argument("--convention", choices=("increasing", "decreasing"), default="increasing",
                        help="order of weight coordinates on input and output")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--lmax", type=int,
                        help="length bound for affine KL tables (default: grow as needed "
                             f"up to {AUTO_LMAX_CAP})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")

    parser = _Parser(prog="weylpleth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    cmds = {
        "quotient": (cmd_quotient, "ell-quotient of mu: sign, Levi blocks and weight"),
        "phi": (cmd_phi, "phi_ell(s_mu) expanded in Weyl characters"),
        "psi": (cmd_psi, "psi_ell(s_lambda) expanded in Weyl characters"),
        "branch": (cmd_branch, "branching coefficient [V(lambda) : V_I(mu)]"),
        "kostka-q": (cmd_kostka_q, "Lusztig q-analogue K_{lambda,mu}(q)"),
        "hall-littlewood": (cmd_hall_littlewood, "sum_lambda K_{lambda,mu}(q) s_lambda"),
        "kl": (cmd_kl, "parabolic KL polynomial P^-_{mu+rho, ell lambda+rho}(q)"),
        "gfun": (cmd_gfun, "G^ell_mu truncated at --bound"),
        "hfun": (cmd_hfun, "H^ell_mu truncated at --bound"),
        "factorization": (cmd_factorization, "compare phi_ell(Delta x^mu) with its Levi factorization"),
        "verify": (cmd_verify, "run identity grids"),
    }
    for name, (fn, help_) in cmds.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        if name == "branch":
            p.add_argument("--levi", help='e.g. "Sp4@2,4|GL@-5,1,3"; mu is then in global coordinates')
        if name == "verify":
            p.add_argument("--suite", choices=SUITES + ("all",), default="all")
            p.add_argument("--max-mu", type=int, dest="max_mu", help="size bound for mu")
            p.add_argument("--max-rank", type=int, dest="max_rank")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except MismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (UserError, EvenEllUnsupported) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except KLBoundExceeded as e:
        print(f"error: {e}; raise --lmax", file=sys.stderr)
        return 1
    except AssertionError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
