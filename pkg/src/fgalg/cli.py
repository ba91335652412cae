"""Command-line interface: ``fgalg <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (bad mathematical input)
and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import commute, grading, hull, series, subgroup, tsets
from .algebra import Element, classify, format_rational
from .errors import DomainError
from .grading import Weighting
from .parsing import parse_element, parse_word_expr
from .words import DEFAULT_RANK, MAX_RANK, format_word, primitive_root


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--rank", type=int, help=f"number of generators (1..{MAX_RANK})")
    p.add_argument("--weights", help="generator weights, e.g. 1,1 or 1/2,-1")
    p.add_argument("--r", dest="r", help="positive rational r for the T(r) sets")
    p.add_argument("--ell", help="degree of the left factor for 'split'")
    p.add_argument("--max-len", dest="max_len", type=int, help="word-length bound L")
    p.add_argument("--trunc", type=int, help="series truncation degree N")
    p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="fgalg", description="Exact computations in free group algebras over Q.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, *args: tuple[str, dict]):
        sp = sub.add_parser(name, help=help, parents=[common])
        for arg, kw in args:
            sp.add_argument(arg, **kw)
        return sp

    add("parse", "parse and print an element", ("element", {}))
    add("mul", "multiply elements left to right", ("elements", {"nargs": "+"}))
    add("commutes", "test uv = vu", ("u", {}), ("v", {}))
    add("grade", "degree and homogeneous components", ("element", {}))
    add("leading", "highest-degree homogeneous component", ("element", {}))
    add("factorize", "canonical factorization of a word in T(r)", ("word", {}))
    add("split", "split the middle factor of a product of T(r) words", ("word", {}))
    add("tmember", "membership in O, Otilde, T1, T2, T", ("element", {}))
    add("construct-h", "weighting with positive degree and non-monomial top", ("element", {}))
    add("centralizer", "bounded centralizer basis", ("element", {}))
    add("analyze", "structure of the centralizer", ("element", {}))
    sg = add("subgroup", "folded graph of a finitely generated subgroup", ("words", {"nargs": "*"}))
    sg.add_argument("--gens", required=True, help="comma-separated generators")
    add("magnus", "Magnus-Fox image", ("element", {}))
    add("primitive-root", "w = r^m with m maximal", ("word", {}))
    return parser


class _Context:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        if args.rank is not None and not 1 <= args.rank <= MAX_RANK:
            raise UsageError(f"--rank must be in 1..{MAX_RANK}")
        self.weights = None
        if args.weights is not None:
            try:
                self.weights = Weighting.parse(args.weights)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad --weights {args.weights!r}")
            if args.rank is not None and self.weights.rank != args.rank:
                raise UsageError("--weights length must equal --rank")
        if args.max_len is not None and args.max_len < 1:
            raise UsageError("--max-len must be at least 1")
        if args.trunc is not None and args.trunc < 0:
            raise UsageError("--trunc must be nonnegative")
        self.r = None
        if args.r is not None:
            try:
                self.r = Fraction(args.r)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad --r {args.r!r}")
            if self.r <= 0:
                raise UsageError("--r must be positive")

    @property
    def parse_rank(self) -> int:
        if self.args.rank is not None:
            return self.args.rank
        if self.weights is not None:
            return self.weights.rank
        return MAX_RANK

    def element(self, text: str) -> Element:
        return parse_element(text, self.parse_rank)

    def word(self, text: str):
        return parse_word_expr(text, self.parse_rank)

    def ambient_rank(self, *elems: Element) -> int:
        if self.args.rank is not None:
            return self.args.rank
        if self.weights is not None:
            return self.weights.rank
        return max([DEFAULT_RANK] + [e.max_generator() for e in elems])

    def need_weights(self) -> Weighting:
        if self.weights is None:
            raise UsageError("--weights is required")
        return self.weights

    def need(self, name: str):
        value = getattr(self, name, None) if name == "r" else getattr(self.args, name)
        if value is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")
        return value


def _triple(parts) -> str:
    return "(" + ", ".join(format_word(w) for w in parts) + ")"


def _run(args: argparse.Namespace) -> tuple[str, object]:
    """Return (text, json_payload) for the command."""
    ctx = _Context(args)
    cmd = args.command

    if cmd == "parse":
        u = ctx.element(args.element)
        c = classify(u)
        return str(u), {"element": u.to_json(), "kind": c.kind.value, "isUnit": c.is_unit}

    if cmd == "mul":
        elems = [ctx.element(t) for t in args.elements]
        prod = elems[0]
        for e in elems[1:]:
            prod = prod * e
        return str(prod), {"element": prod.to_json()}

    if cmd == "commutes":
        ans = commute.commutes(ctx.element(args.u), ctx.element(args.v))
        return ("true" if ans else "false"), {"commutes": ans}

    if cmd in ("grade", "leading"):
        h = ctx.need_weights()
        u = ctx.element(args.element)
        if cmd == "leading":
            top = grading.leading(h, u)
            return str(top), {"degree": str(grading.degree(h, u)), "leading": top.to_json()}
        parts = grading.decompose(h, u)
        d = grading.degree(h, u)
        lines = [f"degree: {d}"] + [f"{k}: {v}" for k, v in parts.items()]
        return "\n".join(lines), {"degree": str(d), "components": {str(k): v.to_json() for k, v in parts.items()}}

    if cmd in ("factorize", "split", "tmember"):
        params = tsets.TParams(ctx.need("r"), ctx.need_weights())
        if cmd == "tmember":
            x = ctx.element(args.element)
            rep = tsets.membership(x, params).as_dict()
            return "\n".join(f"{k}: {str(v).lower()}" for k, v in rep.items()), rep
        w = ctx.word(args.word)
        if cmd == "factorize":
            f = tsets.factorize3(w, params)
            return _triple(f), {"w0": format_word(f.w0), "w1": format_word(f.w1), "w2": format_word(f.w2)}
        s = tsets.middle_split(w, Fraction(ctx.need("ell")), params)
        return _triple(s), {"w10": format_word(s.w10), "w11": format_word(s.w11), "w12": format_word(s.w12)}

    if cmd == "construct-h":
        u = ctx.element(args.element)
        h = hull.construct_weighting(u, ctx.ambient_rank(u))
        top = grading.leading(h, u)
        text = f"weights: {h}\ndegree: {grading.degree(h, u)}\nleading: {top}"
        return text, {"weights": [str(x) for x in h.weights], "degree": str(grading.degree(h, u)),
                      "leading": top.to_json()}

    if cmd == "centralizer":
        u = ctx.element(args.element)
        B = commute.centralizer_basis(u, ctx.need("max_len"), ctx.ambient_rank(u))
        text = "\n".join([f"dim: {B.dim} (words of length <= {B.bound})"] + [str(b) for b in B])
        return text, {"bound": B.bound, "rank": B.rank, "basisDim": B.dim, "basis": [b.to_json() for b in B]}

    if cmd == "analyze":
        u = ctx.element(args.element)
        rank = max(ctx.args.rank or 0, DEFAULT_RANK, u.max_generator())
        rep = commute.analyze(u, ctx.need("max_len"), rank, ctx.weights)
        payload = rep.to_json()
        lines = [f"{k}: {_plain(v)}" for k, v in payload.items() if v is not None and v != []]
        return "\n".join(lines), payload

    if cmd == "subgroup":
        gens = [ctx.word(t) for t in args.gens.split(",") if t.strip()]
        g = subgroup.fold(gens)
        basis = g.basis()
        members = {}
        for t in args.words:
            w = ctx.word(t)
            members[t] = {"member": g.contains(w),
                          "rewrite": _over_basis(g.rewrite(w)) if g.contains(w) else None}
        lines = [f"rank: {g.rank}",
                 "basis: " + ", ".join(f"h{i} = {format_word(b)}" for i, b in enumerate(basis, 1))]
        lines += [f"{t}: {'member' if m['member'] else 'not a member'}"
                  + (f" = {m['rewrite']}" if m["member"] else "")
                  for t, m in members.items()]
        return "\n".join(lines), {"rank": g.rank, "basis": [format_word(b) for b in basis],
                                  "vertices": g.num_vertices, "members": members}

    if cmd == "magnus":
        u = ctx.element(args.element)
        s = series.embed(u, ctx.need("trunc"))
        return str(s), {"trunc": s.N, "terms": [{"monomial": list(m), "coeff": format_rational(c)} for m, c in s.terms()]}

    if cmd == "primitive-root":
        root, m = primitive_root(ctx.word(args.word))
        shown = format_word(root)
        if len(root) > 1:
            shown = f"({shown})"
        return f"{shown}^{m}", {"root": format_word(root), "power": m}

    raise UsageError(f"unknown command {cmd}")


def _over_basis(w) -> str:
    """Word over the basis alphabet, with ``h1, h2, ...`` naming basis words."""
    if w.is_identity():
        return "1"
    runs: list[list[int]] = []
    for x in w:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    parts = []
    for x, n in runs:
        e = n if x > 0 else -n
        parts.append(f"h{abs(x)}" + ("" if e == 1 else f"^{e}"))
    return "*".join(parts)


def _plain(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_plain(x) for x in v) + "]"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, payload = _run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
