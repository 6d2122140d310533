"""``poly``: command-line front end.

Every subcommand maps onto one library call and prints JSON (or aligned
text with ``--pretty``).  Exit codes: 0 success, 1 domain error, 2 usage error;
errors are reported on stderr as ``{"error": {"type": ..., "message": ...}}``.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import bwb, deform, quantum, ring, schur
from . import partition as P
from .coeffs import format_rational, parse_rational

_NEGATIVE_VALUE = re.compile(r"^-[\d/,\s-]+$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunResult:
    exit_code: int
    output: str
    errors: str = ""


# -- argument helpers -------------------------------------------------------

def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]()")
    return tuple(int(x) for x in text.split(",")) if text else ()


def _rational_list(text: str) -> tuple[Fraction, ...]:
    text = text.strip().strip("[]()")
    return tuple(parse_rational(x) for x in text.split(",")) if text else ()


def _load_json(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    try:
        if text.startswith("@"):
            with open(text[1:]) as fh:
                return json.load(fh)
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from exc


def _load_matrix(path: str) -> deform.BMatrix:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read matrix file {path!r}: {exc}") from exc
    return deform.BMatrix.from_json(data)


def _spec(args) -> ring.RingSpec:
    sources = [args.symbolic, args.I is not None, args.matrix is not None]
    if sum(sources) > 1:
        raise UsageError("give at most one of --symbolic, --I, --matrix")
    if args.matrix is not None:
        B = _load_matrix(args.matrix)
        if B.n != args.n:
            raise ValueError(f"matrix is {B.n}x{B.n} but n={args.n}")
        return ring.RingSpec.from_matrix(args.k, B)
    if args.I is not None:
        return ring.RingSpec(args.k, args.n, _rational_list(args.I))
    if args.symbolic:
        return ring.RingSpec.symbolic(args.k, args.n)
    return ring.RingSpec.undeformed(args.k, args.n)


def _class_arg(text: str, rows: Optional[int]) -> schur.SchurClass:
    data = _load_json(text)
    if isinstance(data, list):
        return schur.SchurClass.kappa(P.normalize(data), rows)
    x = schur.SchurClass.from_json(data)
    if rows is not None and x.row_bound != rows:
        x = schur.SchurClass(x.terms, rows)
    return x


# -- subcommands --------------------------------------------------------------

def cmd_lr(args):
    lam, mu = P.parse(args.lam), P.parse(args.mu)
    if args.nu is not None:
        return {"coeff": schur.lr_coeff(lam, mu, P.parse(args.nu))}
    table = schur.lr_product(lam, mu, args.rows)
    return {"product": schur.SchurClass(table, args.rows).to_json()}


def cmd_mult(args):
    if args.a is not None:
        a, b = _class_arg(args.a, args.rows), _class_arg(args.b or "[]", args.rows)
    else:
        a = schur.SchurClass.kappa(P.parse(args.lam), args.rows)
        b = schur.SchurClass.kappa(P.parse(args.mu), args.rows)
    return (a * b).to_json()


def cmd_giambelli(args):
    return schur.giambelli(P.parse(args.lam), args.rows).to_json()


def cmd_bwb(args):
    if args.lam is not None:
        beta, gamma = bwb.cotangent_summand(P.parse(args.lam), args.k, args.n)
    else:
        beta, gamma = _int_list(args.s_star), _int_list(args.q_star)
    return bwb.bundle_cohomology(args.k, args.n, beta, gamma).to_json()


def cmd_invariants(args):
    return {"I": [format_rational(x) for x in deform.char_invariants(_load_matrix(args.matrix))]}


def cmd_degenerate(args):
    return deform.is_degenerate(_load_matrix(args.matrix), args.k).to_json()


def cmd_et(args):
    return deform.et_transform(_load_matrix(args.matrix), args.k, parse_rational(args.eps)).to_json()


def cmd_relation(args):
    return ring.kappa_tilde(_spec(args), args.r).to_json()


def cmd_betti(args):
    spec = _spec(args)
    rng = random.Random(args.seed)
    reports = ring.graded_dims(spec, args.max_degree, mode=args.rank_mode, rng=rng)
    out = {"dims": [r.dim for r in reports]}
    if spec.is_symbolic:
        out["rank_mode"] = sorted({r.mode for r in reports})
    return out


def cmd_nf(args):
    spec = _spec(args)
    return ring.normal_form(spec, _class_arg(args.x, spec.k)).to_json()


def cmd_ringmult(args):
    spec = _spec(args)
    if args.a is not None:
        a, b = _class_arg(args.a, spec.k), _class_arg(args.b or "[]", spec.k)
    else:
        a, b = spec.kappa(P.parse(args.lam)), spec.kappa(P.parse(args.mu))
    return ring.mult_mod(spec, a, b).to_json()


def cmd_vlocus(args):
    spec = _spec(args)
    res = ring.vlocus_test(spec, args.m, args.min_first_row)
    return {"dependent": res.dependent,
            "members": [list(l) for l in res.members],
            "basis": [list(l) for l in res.basis],
            "witness_minors": [m.to_json() for m in res.witness_minors]}


def cmd_qmult(args):
    spec = _spec(args)
    return quantum.q_mult(spec, P.parse(args.lam), P.parse(args.mu)).to_json()


def cmd_check_beps(args):
    return {"k": args.k, "n": args.n, "r": args.r,
            "identity": ring.b_eps_identity_check(args.k, args.n, args.r)}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="poly", description="Polymology of deformed Grassmannians.")
    parser.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized rank sampling")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_flags(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--I", help="invariants I_1..I_n (or I_0..I_n), comma separated")
        p.add_argument("--symbolic", action="store_true", help="keep I_1..I_n as indeterminates")
        p.add_argument("--matrix", help="JSON file holding the deformation matrix B")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient or full product")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu")
    p.add_argument("--rows", type=int)

    p = add("mult", cmd_mult, "product of Schur classes")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--lam", default="")
    p.add_argument("--mu", default="")
    p.add_argument("--rows", type=int)

    p = add("giambelli", cmd_giambelli, "Giambelli determinant expansion")
    p.add_argument("--lam", required=True)
    p.add_argument("--rows", type=int)

    p = add("bwb", cmd_bwb, "cohomology of K_beta S* (x) K_gamma Q*")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s-star", dest="s_star", default=None, help="beta, the S* weight")
    p.add_argument("--q-star", dest="q_star", default=None, help="gamma, the Q* weight")
    p.add_argument("--lam", help="shortcut for the summand K_{lam'} Q* (x) K_lam S")

    p = add("invariants", cmd_invariants, "characteristic invariants I_0..I_n of B")
    p.add_argument("--matrix", required=True)

    p = add("degenerate", cmd_degenerate, "degenerate-locus test for G(k,n)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("et", cmd_et, "eps-transformation (1+k eps) B + eps I")
    p.add_argument("--matrix", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", required=True)

    p = add("relation", cmd_relation, "deformed generator kt_(r)")
    spec_flags(p)
    p.add_argument("--r", type=int, required=True)

    p = add("betti", cmd_betti, "graded dimensions of the quotient ring")
    spec_flags(p)
    p.add_argument("--max-degree", dest="max_degree", type=int)
    p.add_argument("--rank-mode", dest="rank_mode", choices=["auto", "exact", "random"],
                   default="auto")

    p = add("nf", cmd_nf, "normal form of a homogeneous class")
    spec_flags(p)
    p.add_argument("--x", required=True, help="SchurClass JSON, partition list, or @file")

    p = add("ringmult", cmd_ringmult, "product in the quotient ring")
    spec_flags(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--lam", default="")
    p.add_argument("--mu", default="")

    p = add("vlocus", cmd_vlocus, "linear dependence of the deformed Giambelli classes")
    spec_flags(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--min-first-row", dest="min_first_row", type=int)

    p = add("qmult", cmd_qmult, "conjectural quantum product")
    spec_flags(p)
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("check-beps", cmd_check_beps, "verify the B = eps I expansion identity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--flag -1,-2`` into ``--flag=-1,-2`` so argparse keeps the value."""
    out: list[str] = []
    i = 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        lines = []
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{str(key).ljust(width)} :")
                lines.append(_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{str(key).ljust(width)} : {json.dumps(val)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        items = []
        for v in obj:
            if isinstance(v, (dict, list)):
                body = _pretty(v, indent + 1)
                items.append(f"{pad}- " + body.lstrip())
            else:
                items.append(f"{pad}- {json.dumps(v)}")
        return "\n".join(items)
    return pad + json.dumps(obj)


def _flat(val) -> bool:
    return isinstance(val, list) and all(not isinstance(v, (dict, list)) for v in val)


def _error(kind: str, message: str) -> str:
    return json.dumps({"error": {"type": kind, "message": message}})


def run(argv: Sequence[str]) -> RunResult:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except UsageError as exc:
        return RunResult(2, "", _error("usage", str(exc)))
    if args.command == "bwb" and args.lam is None and (args.s_star is None or args.q_star is None):
        return RunResult(2, "", _error("usage", "bwb needs --s-star and --q-star, or --lam"))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", bwb.StandingAssumptionWarning)
        try:
            result = args.func(args)
        except UsageError as exc:
            return RunResult(2, "", _error("usage", str(exc)))
        except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
            return RunResult(1, "", _error(type(exc).__name__, str(exc)))
    notes = "\n".join(sorted({json.dumps({"warning": str(w.message)}) for w in caught}))
    text = _pretty(result) if args.pretty else json.dumps(result)
    return RunResult(0, text, notes)


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    if res.output:
        print(res.output)
    if res.errors:
        print(res.errors, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
