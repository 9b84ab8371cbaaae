"""Command-line interface.

Every subcommand prints a short human answer and, with --json, a stable
JSON document carrying the result, any caveats, the name of the
decision rule used, and the citations of table values consulted.

Exit codes: 0 answered, 1 usage error, 2 out of theorem scope,
3 unknown value or table gap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import selftest
from .abelian import AbGroup
from .bundles import classify_bundles, projection_induced_map_kind, reduce_class
from .errors import OutOfScopeError, UnknownValueError
from .gauge import (
    GaugeQuery,
    decompose_plocal,
    pi0_unpointed_gauge_m0,
    pi0_unpointed_gauge_plocal,
    pi_pointed_gauge_m0,
    pi_pointed_gauge_plocal,
    run_query,
    s7_gauge_equivalent,
    su5_gauge_equivalent_m0,
)
from .manifolds import (
    homology,
    is_homotopy_equivalent,
    normalize,
    suspension,
    suspension_plocal,
)
from .oracle import complex_for_manifold, homology_of, parse_complex
from .tables import LieGroupId, default_table, pi6_moore, pi6_moore_source

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_OUT_OF_SCOPE = 2
EXIT_UNKNOWN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 1, not argparse's 2
        raise UsageError(message)


@dataclass
class QueryResult:
    text: str
    payload: dict
    exit_code: int = EXIT_OK


def _result(command: str, result: dict, *, text: str, caveats=(), theorem=None,
            citations=()) -> QueryResult:
    payload = {
        "command": command,
        "status": "ok",
        "result": result,
        "caveats": list(caveats),
        "theorem": theorem,
        "citations": list(citations),
    }
    return QueryResult(text, payload)


def _error_result(command: str, status: str, message: str, code: int) -> QueryResult:
    payload = {
        "command": command,
        "status": status,
        "result": None,
        "caveats": [],
        "theorem": None,
        "citations": [],
        "error": message,
    }
    return QueryResult(f"error: {message}", payload, code)


def _group_json(g: AbGroup) -> dict:
    return {
        "group": g.render(),
        "free_rank": g.free_rank,
        "invariant_factors": list(g.invariant_factors),
        "local_prime": g.local_prime,
    }


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected a pair like 3,0 but got {text!r}")
    return int(parts[0]), int(parts[1])


def _locality(text: str) -> str | int:
    if text in ("integral", "rational"):
        return text
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"locality must be integral, rational or a prime: {text!r}")


def _cmd_classify(args) -> QueryResult:
    g = LieGroupId.parse(args.group)
    spec = normalize(args.l, args.m)
    index_set = classify_bundles(g, spec)
    size = index_set.order() or None
    result = {
        "set": index_set.render(),
        "size": size,
        "projection_on_classes": projection_induced_map_kind(spec.m),
    }
    text = (
        f"Prin_{g}({spec}) = {index_set.render()}"
        + (f" ({size} classes)" if size else " (infinitely many classes)")
    )
    if args.k is not None:
        bundle = reduce_class(g, spec, args.k)
        result["k"] = bundle.k
        result["modulus"] = bundle.modulus
        text += f"; k_raw={args.k} reduces to k={bundle.k}"
    return _result(
        "classify", result, text=text,
        theorem="bundle classification over the total space",
    )


def _cmd_manifold_equiv(args) -> QueryResult:
    a = normalize(*args.a)
    b = normalize(*args.b)
    decision = is_homotopy_equivalent(a, b)
    verdict = "equivalent" if decision.equivalent else "not equivalent"
    theorem = (
        "James-Whitehead criterion" if a.m == 0 else
        "S^7 identification" if a.m == 1 else "Crowley-Escher criterion"
    ) if a.m == b.m else "degree-3 homology"
    citations = []
    if a.m == b.m == 0:
        citations.append("James-Whitehead (1954)")
    elif a.m == b.m and a.m >= 2:
        citations.append("Crowley-Escher (2003)")
    return _result(
        "manifold equiv",
        {"equivalent": decision.equivalent, "reason": decision.reason,
         "a": {"l": a.l, "m": a.m}, "b": {"l": b.l, "m": b.m}},
        text=f"{a} and {b}: {verdict} ({decision.reason})",
        theorem=theorem,
        citations=citations,
    )


def _cmd_manifold_homology(args) -> QueryResult:
    spec = normalize(args.l, args.m)
    groups = homology(spec)
    text = "H_* = (" + ", ".join(g.render() for g in groups) + ")"
    return _result(
        "manifold homology",
        {"degrees": [g.render() for g in groups], "l": spec.l, "m": spec.m},
        text=f"{spec}: {text}",
        theorem="closed-form cellular homology",
    )


def _cmd_manifold_suspend(args) -> QueryResult:
    spec = normalize(args.l, args.m)
    if args.p is None:
        expr = suspension(spec)
        theorem = "integral suspension splitting"
        citations = []
    else:
        expr = suspension_plocal(spec, args.p)
        theorem = "p-local suspension splitting"
        citations = [pi6_moore_source()]
    return _result(
        "manifold suspend",
        {"expression": expr.render(), "tree": expr.to_json()},
        text=f"Susp {spec} = {expr.render()}",
        theorem=theorem,
        citations=citations,
    )


def _cmd_gauge_decompose(args) -> QueryResult:
    g = LieGroupId.parse(args.group)
    spec = normalize(args.l, args.m)
    locality: str | int = "integral" if args.p is None else args.p
    bundle = reduce_class(g, spec, args.k)
    query = GaugeQuery(bundle, pointed=args.pointed,
                       looped=1 if args.looped else 0, locality=locality)
    decomposition = run_query(query)
    loops = "O^1 " * decomposition.loops
    return _result(
        "gauge decompose",
        {
            "describes": decomposition.describes,
            "expression": decomposition.expr.render(),
            "tree": decomposition.expr.to_json(),
            "loops": decomposition.loops,
        },
        text=f"{decomposition.describes} = {decomposition.expr.render()}"
        + (f"  [{loops.strip()} applied]" if decomposition.loops else ""),
        caveats=decomposition.caveats,
        theorem=decomposition.theorem,
    )


def _cmd_gauge_pi(args) -> QueryResult:
    g = LieGroupId.parse(args.group)
    spec = normalize(args.l, args.m)
    if spec.m == 0:
        if args.unpointed:
            if args.n != 0:
                raise OutOfScopeError(
                    "only pi_0 of the unpointed gauge group is tabulated"
                )
            group = pi0_unpointed_gauge_m0(g, spec.l)
            return _result(
                "gauge pi", _group_json(group),
                text=f"pi_0(G^k(M({spec.l},0))) = {group.render()}",
                theorem="component table over a torsion-free base",
            )
        value = pi_pointed_gauge_m0(g, spec.l, args.k, args.n)
        result = _group_json(value.group)
        result["symbolic"] = list(value.symbolic)
        return _result(
            "gauge pi", result,
            text=f"pi_{args.n}(G*^{args.k}(M({spec.l},0))) = {value}",
            caveats=value.notes,
            theorem="pointed splitting over a torsion-free base",
            citations=value.sources,
        )
    if spec.m == 1:
        raise OutOfScopeError(
            "homotopy groups over S^7 are not tabulated; use gauge equiv-s7"
        )
    if args.p is None:
        raise UsageError("bases with torsion need a prime: pass --p")
    if args.unpointed:
        if args.n != 0:
            raise OutOfScopeError(
                "only pi_0 of the unpointed gauge group is computed for m >= 2"
            )
        group = pi0_unpointed_gauge_plocal(g, spec.m, args.k, args.p)
        return _result(
            "gauge pi", _group_json(group),
            text=f"pi_0(G^0(M({spec.l},{spec.m})) @ ({args.p})) = {group.render()}",
            theorem="p-local component table",
        )
    value = pi_pointed_gauge_plocal(
        g, spec.m, args.k, args.n, args.p,
        looped=True if args.looped else None,
    )
    return _result(
        "gauge pi", _group_json(value.group),
        text=f"{value.describes} = {value.group.render()}",
        caveats=value.notes,
        theorem=value.theorem,
        citations=value.sources,
    )


def _cmd_gauge_equiv_s7(args) -> QueryResult:
    g = LieGroupId.parse(args.group)
    locality = _locality(args.locality)
    decision = s7_gauge_equivalent(g, args.k, args.kp, locality)
    result = {"verdict": decision.verdict, "reason": decision.reason}
    if decision.expr is not None:
        result["expression"] = decision.expr.render()
        result["tree"] = decision.expr.to_json()
    out = _result(
        "gauge equiv-s7", result,
        text=f"G^{args.k}(S^7) vs G^{args.kp}(S^7) for {g} at {locality}: "
        f"{decision.verdict} ({decision.reason})",
        theorem="gcd rule for gauge groups over S^7",
        citations=["Lang (1973)", "Theriault (2010)"],
    )
    if decision.verdict == "out-of-scope":
        out.payload["status"] = "out-of-scope"
        out.exit_code = EXIT_OUT_OF_SCOPE
    return out


def _cmd_gauge_equiv_su5(args) -> QueryResult:
    decision = su5_gauge_equivalent_m0(args.k, args.kp)
    return _result(
        "gauge equiv-su5",
        {"verdict": decision.verdict, "reason": decision.reason},
        text=f"SU(5) gauge groups k={args.k}, k'={args.kp}: "
        f"{decision.verdict} ({decision.reason})",
        theorem="gcd-120 rule for SU(5) over torsion-free bases",
        citations=["Theriault (2015)"],
    )


def _cmd_tables_lookup(args) -> QueryResult:
    table = default_table()
    chosen = [x is not None for x in (args.space, args.group, args.moore)]
    if sum(chosen) != 1:
        raise UsageError("pick exactly one of --space, --group, --moore")
    if args.moore is not None:
        group = pi6_moore(args.moore)
        return _result(
            "tables lookup",
            {"key": f"P^4({args.moore})", "degree": 6,
             **_group_json(group), "source": pi6_moore_source()},
            text=f"pi_6(P^4({args.moore})) = {group.render()}",
            citations=[pi6_moore_source()],
        )
    if args.i is None:
        raise UsageError("--i is required for sphere and group lookups")
    if args.space is not None:
        if not args.space.startswith("S"):
            raise UsageError("sphere keys look like S3, S4, ...")
        n = int(args.space[1:])
        rec = table.sphere_record(n, args.i)
        label = f"pi_{args.i}(S^{n})"
    else:
        g = LieGroupId.parse(args.group)
        rec = table.lie_record(g, args.i)
        label = f"pi_{args.i}({g})"
    return _result(
        "tables lookup",
        {"key": rec.key, "degree": rec.degree, **_group_json(rec.group),
         "source": rec.source},
        text=f"{label} = {rec.group.render()}  [{rec.source}]",
        citations=[rec.source],
    )


def _cmd_oracle_homology(args) -> QueryResult:
    if args.complex is not None:
        text = Path(args.complex).read_text(encoding="utf-8")
        complex_ = parse_complex(text)
        label = args.complex
    else:
        if args.l is None or args.m is None:
            raise UsageError("pass either --complex FILE or both --l and --m")
        spec = normalize(args.l, args.m)
        complex_ = complex_for_manifold(spec)
        label = str(spec)
    groups = homology_of(complex_)
    return _result(
        "oracle homology",
        {
            "source": label,
            "cells": list(complex_.cells),
            "degrees": [g.render() for g in groups],
        },
        text=f"{label}: H_* = (" + ", ".join(g.render() for g in groups) + ")",
        theorem="Smith normal form on the cellular chain complex",
    )


def _cmd_selftest(args) -> QueryResult:
    results = selftest.run_all()
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append("all criteria passed" if ok else "FAILURES present")
    return QueryResult(
        "\n".join(lines),
        {
            "command": "selftest",
            "status": "ok" if ok else "failed",
            "result": [
                {
                    "criterion": r.number,
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": round(r.seconds, 3),
                }
                for r in results
            ],
            "caveats": [],
            "theorem": None,
            "citations": [],
        },
        EXIT_OK if ok else 1,
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="bundlegauge", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("classify", help="classify principal G-bundles")
    p.add_argument("--group", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="also reduce this class")
    p.set_defaults(fn=_cmd_classify)

    manifold = sub.add_parser("manifold", help="total-space questions")
    msub = manifold.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = msub.add_parser("equiv")
    p.add_argument("--a", type=_pair, required=True, metavar="L,M")
    p.add_argument("--b", type=_pair, required=True, metavar="L,M")
    p.set_defaults(fn=_cmd_manifold_equiv)
    p = msub.add_parser("homology")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=_cmd_manifold_homology)
    p = msub.add_parser("suspend")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(fn=_cmd_manifold_suspend)

    gauge_cmd = sub.add_parser("gauge", help="gauge group questions")
    gsub = gauge_cmd.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = gsub.add_parser("decompose")
    p.add_argument("--group", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--pointed", action="store_true")
    p.add_argument("--looped", action="store_true")
    p.set_defaults(fn=_cmd_gauge_decompose)
    p = gsub.add_parser("pi")
    p.add_argument("--group", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--looped", action="store_true")
    p.add_argument("--unpointed", action="store_true")
    p.set_defaults(fn=_cmd_gauge_pi)
    p = gsub.add_parser("equiv-s7")
    p.add_argument("--group", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kp", type=int, required=True)
    p.add_argument("--locality", default="integral")
    p.set_defaults(fn=_cmd_gauge_equiv_s7)
    p = gsub.add_parser("equiv-su5")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kp", type=int, required=True)
    p.set_defaults(fn=_cmd_gauge_equiv_su5)

    tables_cmd = sub.add_parser("tables", help="raw table lookups")
    tsub = tables_cmd.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = tsub.add_parser("lookup")
    p.add_argument("--space", default=None, help="sphere key such as S3")
    p.add_argument("--group", default=None, help="Lie group token such as Sp2")
    p.add_argument("--i", type=int, default=None, help="homotopy degree")
    p.add_argument("--moore", type=int, default=None,
                   help="pi_6 of the Moore space P^4(m)")
    p.set_defaults(fn=_cmd_tables_lookup)

    oracle_cmd = sub.add_parser("oracle", help="independent homology oracle")
    osub = oracle_cmd.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = osub.add_parser("homology")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--complex", default=None, help="chain complex text file")
    p.set_defaults(fn=_cmd_oracle_homology)

    p = sub.add_parser("selftest", help="run the full acceptance grid")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def run(argv: list[str]) -> QueryResult:
    """Parse and execute; returns the result instead of exiting."""
    parser = build_parser()
    command = " ".join(argv[:2]) if argv else ""
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "fn"):
            raise UsageError("missing subcommand; see --help")
        return args.fn(args)
    except UsageError as exc:
        return _error_result(command, "usage-error", str(exc), EXIT_USAGE)
    except (ValueError, OSError) as exc:
        return _error_result(command, "usage-error", str(exc), EXIT_USAGE)
    except OutOfScopeError as exc:
        return _error_result(command, "out-of-scope", str(exc), EXIT_OUT_OF_SCOPE)
    except UnknownValueError as exc:
        return _error_result(command, "unknown", str(exc), EXIT_UNKNOWN)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    emit_json = "--json" in argv
    result = run(argv)
    if emit_json:
        print(json.dumps(result.payload, indent=2, sort_keys=True))
    else:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
