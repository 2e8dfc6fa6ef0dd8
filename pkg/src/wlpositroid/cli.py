"""Command line front end.

    wlpositroid necklace '{"n": 8, "propagators": [[1,4],[2,4],[5,7],[5,8]]}'
    wlpositroid denom diagram.json --format text --letters
    wlpositroid enumerate --k 2 --n 6
    wlpositroid selftest --max-n 8

Exit codes: 0 ok, 1 domain error (e.g. inadmissible diagram), 2 usage error
or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .denominator import (
    denominator_definition,
    letter_namer,
    verify_radical,
)
from .diagram import WilsonLoopDiagram, enumerate_admissible, is_admissible
from .le import le_from_necklace, plus_count, validate_le
from .matroid import sorted_bases
from .necklace import grassmann_necklace
from .sympoly import c_matrix


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def load_diagram(arg: str) -> WilsonLoopDiagram:
    """Inline JSON, '-' for stdin, or a file path."""
    text = arg
    if arg == "-":
        text = sys.stdin.read()
    elif not arg.lstrip().startswith("{"):
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc.strerror}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}")
    try:
        return WilsonLoopDiagram.from_json(data)
    except ValueError as exc:
        raise UsageError(str(exc))


def _order(arg, W):
    if arg is None:
        return None
    try:
        order = [tuple(p) for p in json.loads(arg)]
        c_matrix(W, order)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"bad --order: {exc}")
    return order


def _require_admissible(W):
    rep = is_admissible(W)
    if not rep.ok:
        raise DomainError(json.dumps(rep.to_json()))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# each command returns (exit code, output text)

def cmd_check(args):
    W = load_diagram(args.diagram)
    rep = is_admissible(W)
    if args.format == "json":
        text = _dump(rep.to_json())
    else:
        lines = ["admissible" if rep.ok else "not admissible"]
        for v in rep.violations:
            lines.append(f"  {v.kind}: " + " ".join(str(p) for p in v.witness))
        text = "\n".join(lines)
    return (0 if rep.ok else 1), text


def cmd_necklace(args):
    W = load_diagram(args.diagram)
    _require_admissible(W)
    neck = grassmann_necklace(W)
    if args.format == "json":
        return 0, _dump(neck.to_json())
    lines = []
    for i in range(1, W.n + 1):
        a = neck.to_json()["assignments"][i - 1]
        pairs = ", ".join(f"({x['prop'][0]},{x['prop'][1]})->{x['vertex']}" for x in a)
        lines.append(f"I_{i} = {{{','.join(map(str, neck.display_term(i)))}}}   {pairs}")
    return 0, "\n".join(lines)


def cmd_le(args):
    W = load_diagram(args.diagram)
    _require_admissible(W)
    d = le_from_necklace(grassmann_necklace(W))
    if args.format == "json":
        return 0, _dump(d.to_json())
    return 0, d.render()


def cmd_dim(args):
    W = load_diagram(args.diagram)
    _require_admissible(W)
    d = le_from_necklace(grassmann_necklace(W))
    info = {"k": W.k, "plus_count": plus_count(d), "expected": 3 * W.k, "le_valid": validate_le(d)}
    if args.format == "json":
        return 0, _dump(info)
    return 0, f"dimension {info['plus_count']} (3k = {info['expected']})"


def cmd_bases(args):
    W = load_diagram(args.diagram)
    _require_admissible(W)
    bs = sorted_bases(W)
    if args.format == "json":
        return 0, _dump(bs)
    return 0, "\n".join("{" + ",".join(map(str, b)) + "}" for b in bs)


def cmd_cmatrix(args):
    W = load_diagram(args.diagram)
    M = c_matrix(W, _order(args.order, W))
    if args.format == "json":
        return 0, _dump({"rows": [[p.i, p.j] for p in M.order], "matrix": M.rows_text()})
    return 0, M.render()


def cmd_denom(args):
    W = load_diagram(args.diagram)
    _require_admissible(W)
    order = _order(args.order, W)
    namer = letter_namer(c_matrix(W, order)) if args.letters else None
    if args.display:
        # edge-by-edge product, in edge order
        return 0, denominator_definition(W, order).text(namer)
    rep = verify_radical(W, order)
    if args.format == "json":
        return (0 if rep.ok else 1), _dump(rep.to_json())
    lines = [rep.R_necklace.text(namer)]
    if args.verbose:
        for i, r in enumerate(rep.r_factors, start=1):
            lines.append(f"r_{i} = {r}")
        for name, val in rep.checks.items():
            lines.append(f"{name}: {val}")
    return (0 if rep.ok else 1), "\n".join(lines)


def cmd_enumerate(args):
    if args.k < 0 or args.n < args.k + 4:
        raise UsageError("need k >= 0 and n >= k+4")
    ds = list(enumerate_admissible(args.k, args.n))
    if args.format == "json":
        return 0, _dump([W.to_json() for W in ds])
    return 0, "\n".join(_dump(W.to_json()) for W in ds)


def cmd_selftest(args):
    if args.max_n < 4:
        raise UsageError("--max-n must be at least 4")
    results = checks.run_all(args.max_n, args.random, args.seed)
    ok = all(r.ok for r in results)
    if args.format == "json":
        text = _dump([
            {"case": r.name, "checked": r.checked, "failed": len(r.failures),
             "ok": r.ok, "failures": r.failures}
            for r in results
        ])
    else:
        lines = [r.line() for r in results]
        for r in results:
            lines.extend(f"    {msg}" for msg in r.failures[:5])
        lines.append("all passed" if ok else "FAILURES")
        text = "\n".join(lines)
    return (0 if ok else 1), text


COMMANDS = {
    "check": cmd_check,
    "necklace": cmd_necklace,
    "le": cmd_le,
    "dim": cmd_dim,
    "bases": cmd_bases,
    "cmatrix": cmd_cmatrix,
    "denom": cmd_denom,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wlpositroid", description="Wilson loop diagram positroid tools")
    sub = ap.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "text"], default="json")
    for name in ("check", "necklace", "le", "dim", "bases", "cmatrix", "denom"):
        p = sub.add_parser(name, parents=[fmt])
        p.add_argument("diagram", help="diagram JSON: a file path, inline JSON, or - for stdin")
        if name in ("cmatrix", "denom"):
            p.add_argument("--order", help="row order as JSON, e.g. [[1,6],[1,5],[1,4]]")
        if name == "denom":
            p.add_argument("--display", action="store_true",
                           help="print R as the edge-by-edge product and nothing else")
            p.add_argument("--letters", action="store_true",
                           help="name matrix entries a, b, c, ... row by row")
            p.add_argument("-v", "--verbose", action="store_true")
    p = sub.add_parser("enumerate", parents=[fmt])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("selftest", parents=[fmt])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--random", type=int, default=500, help="number of random diagrams with 9 <= n <= 12")
    p.add_argument("--seed", type=int, default=0)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(str(exc))
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
