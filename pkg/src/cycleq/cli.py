"""Command line front end.

Subcommands: compute (one class count), table (counts over a range), matrix
(the per-divisor tally), graph (DOT or JSON export), solve (list solutions
of one equation), verify (brute force against the formulas). Exit codes:
0 success, 1 verification failure, 2 usage error, 3 internal invariant
violation. Output is byte-deterministic for a fixed command line and seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .class_graph import build_gamma, export_dot, export_json
from .counting import (
    InexactDivision,
    count_table,
    p_count,
    predicted_size_histogram,
    q_count,
)
from .equation_solver import (
    EquationInstance,
    InvalidParameters,
    NoSolution,
    enumerate_solutions,
)
from .oracle import (
    DEFAULT_BOUND,
    DEFAULT_SEED,
    BoundExceeded,
    count_equation_solutions,
    enumerate_classes,
    sigma_independence_check,
)
from .permutation import one_line

__all__ = ["CliConfig", "main"]

ENV_ORACLE_BOUND = "CYCLEQ_ORACLE_BOUND"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


@dataclass
class CliConfig:
    command: str
    n: int = 0
    n_from: int = 0
    n_to: int = 0
    k: int = 0
    l: int = 0
    fmt: str = "text"
    oracle_bound: int = DEFAULT_BOUND
    seed: int = DEFAULT_SEED
    output: str | None = None


class UsageError(ValueError):
    pass


def _env_bound() -> int:
    raw = os.environ.get(ENV_ORACLE_BOUND)
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_ORACLE_BOUND} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleq",
        description="Count equivalence classes of S_n under two-sided "
                    "multiplication by powers of a full cycle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, fmt_choices, fmt_default):
        p = sub.add_parser(name, help=help_text)
        if fmt_choices:
            p.add_argument("-f", "--format", choices=fmt_choices,
                           default=fmt_default)
        p.add_argument("-o", "--output", metavar="PATH",
                       help="write to PATH instead of stdout")
        return p

    p = add("compute", "print the exact class count for one n",
            ("text", "json"), "text")
    p.add_argument("n", type=int)

    p = add("table", "class counts for a range of n",
            ("text", "csv", "json"), "text")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)

    p = add("matrix", "per-divisor tally for one n", ("text", "json"), "text")
    p.add_argument("n", type=int)

    p = add("graph", "export the divisor graph", ("dot", "json"), "dot")
    p.add_argument("n", type=int)

    p = add("solve", "list all solutions of sigma^k xi == xi sigma^l",
            ("text", "json"), "text")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)

    p = add("verify", "brute-force S_n against the formulas", None, None)
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--oracle-bound", type=int, default=None,
                   help=f"override the bound (default {DEFAULT_BOUND}, "
                        f"or {ENV_ORACLE_BOUND})")
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(command=ns.command)
    cfg.fmt = getattr(ns, "format", "text") or "text"
    cfg.output = getattr(ns, "output", None)
    if hasattr(ns, "n"):
        if ns.n < 1:
            raise UsageError(f"n must be at least 1, got {ns.n}")
        cfg.n = ns.n
    if hasattr(ns, "n_from"):
        if ns.n_from < 1 or ns.n_to < ns.n_from:
            raise UsageError(
                f"need 1 <= FROM <= TO, got {ns.n_from}..{ns.n_to}")
        cfg.n_from, cfg.n_to = ns.n_from, ns.n_to
    if hasattr(ns, "k"):
        cfg.k, cfg.l = ns.k, ns.l
    if ns.command == "verify":
        cfg.seed = ns.seed
        cfg.oracle_bound = ns.oracle_bound if ns.oracle_bound is not None else _env_bound()
    return cfg


def cmd_compute(cfg: CliConfig) -> tuple[int, str]:
    total = q_count(cfg.n)
    if cfg.fmt == "json":
        return EXIT_OK, f'{{"n": {cfg.n}, "classes": "{total}"}}\n'
    return EXIT_OK, f"{total}\n"


def cmd_table(cfg: CliConfig) -> tuple[int, str]:
    rows = [(n, str(q_count(n))) for n in range(cfg.n_from, cfg.n_to + 1)]
    if cfg.fmt == "csv":
        lines = ["n,classes"] + [f"{n},{c}" for n, c in rows]
        return EXIT_OK, "\n".join(lines) + "\n"
    if cfg.fmt == "json":
        body = ", ".join(f'{{"n": {n}, "classes": "{c}"}}' for n, c in rows)
        return EXIT_OK, f"[{body}]\n"
    wn = max(len("n"), max(len(str(n)) for n, _ in rows))
    wc = max(len("classes"), max(len(c) for _, c in rows))
    lines = ["n".rjust(wn) + "  " + "classes".rjust(wc)]
    lines += [str(n).rjust(wn) + "  " + c.rjust(wc) for n, c in rows]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_matrix(cfg: CliConfig) -> tuple[int, str]:
    table = count_table(cfg.n)
    if cfg.fmt == "json":
        return EXIT_OK, table.to_json() + "\n"
    return EXIT_OK, table.to_text()


def cmd_graph(cfg: CliConfig) -> tuple[int, str]:
    g = build_gamma(cfg.n)
    if cfg.fmt == "json":
        return EXIT_OK, export_json(g) + "\n"
    return EXIT_OK, export_dot(g)


def cmd_solve(cfg: CliConfig) -> tuple[int, str]:
    inst = EquationInstance(cfg.n, cfg.k, cfg.l)
    solutions = enumerate_solutions(inst)
    if cfg.fmt == "json":
        body = ", ".join(str(list(s.images)) for s in solutions)
        return EXIT_OK, (f'{{"n": {cfg.n}, "k": {cfg.k}, "l": {cfg.l}, '
                         f'"count": {len(solutions)}, "solutions": [{body}]}}\n')
    lines = [f"count={len(solutions)}"]
    lines += [one_line(s) for s in solutions]
    return EXIT_OK, "\n".join(lines) + "\n"


def _verify_one(n: int, bound: int, seed: int) -> str | None:
    """None when n checks out, else a short reason."""
    table = count_table(n)
    report = enumerate_classes(n, bound=bound)
    if report.class_count != table.total:
        return f"oracle found {report.class_count} classes, formula says {table.total}"
    predicted = predicted_size_histogram(n)
    if report.size_histogram != predicted:
        return (f"size histogram {report.size_histogram} "
                f"differs from predicted {predicted}")
    g = build_gamma(n)
    for v in sorted(g.vertices):
        if v.k == n:
            continue
        expected = p_count(n, v.k)
        got = count_equation_solutions(n, v.k, v.l, bound=bound)
        if got != expected:
            return (f"equation (k={v.k}, l={v.l}) has {got} solutions, "
                    f"formula says {expected}")
        listed = enumerate_solutions(EquationInstance(n, v.k, v.l))
        if len(listed) != expected:
            return (f"enumerator produced {len(listed)} solutions for "
                    f"(k={v.k}, l={v.l}), formula says {expected}")
    if not sigma_independence_check(n, seed=seed, bound=bound):
        return "class structure varied across choices of full cycle"
    return None


def cmd_verify(cfg: CliConfig) -> tuple[int, str]:
    lines = []
    code = EXIT_OK
    for n in range(cfg.n_from, cfg.n_to + 1):
        problem = _verify_one(n, cfg.oracle_bound, cfg.seed)
        if problem is None:
            lines.append(f"n={n} PASS")
        else:
            lines.append(f"n={n} FAIL: {problem}")
            code = EXIT_FAIL
    return code, "\n".join(lines) + "\n"


_DISPATCH = {
    "compute": cmd_compute,
    "table": cmd_table,
    "matrix": cmd_matrix,
    "graph": cmd_graph,
    "solve": cmd_solve,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:  # argparse already printed the message
        return int(e.code or 0)
    try:
        cfg = _config(ns)
        code, text = _DISPATCH[cfg.command](cfg)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParameters, NoSolution) as e:
        print(f"error: no solution family: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InexactDivision as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
