"""Command-line front end: text/JSON rendering over the library, a verify
suite runner, and an optional on-disk result cache.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage error, 3 size budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .errors import InvalidArgs, SizeBudgetExceeded, StableRepError
from .partitions import Partition, enumerate_partitions, specht_dimension
from .characters import cycle_types, irreducible_character, lr_coefficient
from .modules import verify_cauchy, verify_schur_weyl, split_extension_filtration_check
from .labeled import (
    enumerate_pq,
    hom_space_dimension_gl,
    verify_rw_prop,
    verify_splitting_lemma,
)
from .stable import (
    dimension_table,
    stable_cohomology,
    step1_dimension_identity,
    theorem_a_induction_check,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _table(headers: list[str], rows: list[list]) -> str:
    """Fixed-width ASCII table."""
    cells = [[str(x) for x in row] for row in rows]
    widths = [
        max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)
    ]
    def fmt(row):
        return "  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in cells]
    return "\n".join(lines)


def _render_report(rep, as_json: bool) -> tuple[str, int]:
    code = EXIT_OK if rep.passed else EXIT_VERIFY_FAIL
    if as_json:
        return json.dumps(rep.to_json(), indent=2, sort_keys=True), code
    status = "PASS" if rep.passed else "FAIL"
    lines = [f"{status}: {rep.claim}", f"left  = {rep.left}", f"right = {rep.right}"]
    for k, v in rep.witnesses.items():
        if k == "classwise_table" and isinstance(v, dict):
            lines.append("classwise values:")
            lines.append(
                _table(["class pair", "value"], [[kk, vv] for kk, vv in v.items()])
            )
        elif v not in ({}, [], None):
            lines.append(f"{k}: {v}")
    return "\n".join(lines), code


# ---------------------------------------------------------------------------
# Subcommand implementations, each returning (output, exit_code)


def _cmd_partitions(args) -> tuple[str, int]:
    parts = enumerate_partitions(args.n)
    if args.json:
        return json.dumps([str(p) for p in parts], indent=2), EXIT_OK
    rows = [[str(p), specht_dimension(p)] for p in parts]
    return _table(["partition", "specht_dim"], rows), EXIT_OK


def _cmd_char(args) -> tuple[str, int]:
    lam = Partition.parse(args.lam)
    chi = irreducible_character(lam)
    classes = cycle_types(lam.weight)
    if args.json:
        return (
            json.dumps(
                {
                    "lambda": str(lam),
                    "values": [
                        {"class": str(c), "value": int(chi.values[c])}
                        for c in classes
                    ],
                },
                indent=2,
            ),
            EXIT_OK,
        )
    rows = [[str(c), int(chi.values[c])] for c in classes]
    return _table(["class", f"chi^({lam})"], rows), EXIT_OK


def _cmd_lr(args) -> tuple[str, int]:
    lam, mu, nu = (Partition.parse(x) for x in (args.lam, args.mu, args.nu))
    c = lr_coefficient(lam, mu, nu)
    if args.json:
        return (
            json.dumps(
                {"lambda": str(lam), "mu": str(mu), "nu": str(nu), "coefficient": c}
            ),
            EXIT_OK,
        )
    return str(c), EXIT_OK


def _cmd_cauchy(args) -> tuple[str, int]:
    return _render_report(
        verify_cauchy(args.r, args.dv, args.dw, args.budget), args.json
    )


def _cmd_schur_weyl(args) -> tuple[str, int]:
    return _render_report(verify_schur_weyl(args.r, args.d, args.budget), args.json)


def _cmd_labeled_partitions(args) -> tuple[str, int]:
    objs = enumerate_pq(args.p, args.q)
    if args.json:
        return (
            json.dumps(
                {"p": args.p, "q": args.q, "count": len(objs),
                 "elements": [x.to_json() for x in objs]},
                indent=2,
            ),
            EXIT_OK,
        )
    lines = [str(x) for x in objs] + [f"total: {len(objs)}"]
    return "\n".join(lines), EXIT_OK


def _cmd_hom_dim(args) -> tuple[str, int]:
    dim = hom_space_dimension_gl(args.p, args.q, args.d, args.budget)
    if args.json:
        return (
            json.dumps({"p": args.p, "q": args.q, "d": args.d, "dimension": dim}),
            EXIT_OK,
        )
    return str(dim), EXIT_OK


def _cmd_verify(args) -> tuple[str, int]:
    which = args.what
    params = args.params
    def need(n, usage):
        if len(params) != n:
            raise InvalidArgs(f"verify {which} expects {usage}")
    if which == "rw-prop":
        need(3, "P Q D")
        rep = verify_rw_prop(int(params[0]), int(params[1]), int(params[2]), args.budget)
    elif which == "splitting":
        need(3, "P Q D")
        rep = verify_splitting_lemma(
            int(params[0]), int(params[1]), int(params[2]), args.budget
        )
    elif which == "extension":
        need(3, "LAMBDA DA DC")
        rep = split_extension_filtration_check(
            Partition.parse(params[0]), int(params[1]), int(params[2]), args.budget
        )
    elif which == "induction":
        need(2, "P Q")
        rep = theorem_a_induction_check(int(params[0]), int(params[1]), args.budget)
    elif which == "step1":
        need(3, "P Q D")
        rep = step1_dimension_identity(int(params[0]), int(params[1]), int(params[2]))
    else:
        raise InvalidArgs(f"unknown verification {which!r}")
    return _render_report(rep, args.json)


def _cmd_stable_cohomology(args) -> tuple[str, int]:
    if args.table is not None:
        pmax, qmax = args.table
        rows = dimension_table(pmax, qmax)
        if args.json:
            return json.dumps(rows, indent=2), EXIT_OK
        return (
            _table(
                ["p", "q", "degree", "dimension", "min_n"],
                [[r["p"], r["q"], r["degree"], r["dimension"], r["min_n"]] for r in rows],
            ),
            EXIT_OK,
        )
    if args.p is None or args.q is None:
        raise InvalidArgs("stable-cohomology requires P Q (or --table PMAX QMAX)")
    degree = args.degree if args.degree is not None else args.p - args.q
    res = stable_cohomology(args.p, args.q, degree, args.budget)
    if args.json:
        return json.dumps(res.to_json(), indent=2), EXIT_OK
    lines = [
        f"p={res.p} q={res.q} degree={res.degree}",
        f"dimension: {res.dimension}",
        f"stable range: {res.valid_range} (n >= {res.min_n})",
    ]
    if res.dimension:
        lines.append("decomposition:")
        lines.append(
            _table(
                ["lambda", "mu", "mult"],
                [[str(a), str(b), m] for (a, b), m in res.decomposition.items()],
            )
        )
    else:
        lines.append("zero (nonvanishing only in degree p - q with q <= p)")
    return "\n".join(lines), EXIT_OK


# ---------------------------------------------------------------------------
# Cache


def _cache_lookup(cache_dir: str, key: str) -> tuple[str, int] | None:
    path = os.path.join(cache_dir, key + ".json")
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return data["output"], data["exit"]
    except (OSError, ValueError, KeyError):
        return None


def _cache_store(cache_dir: str, key: str, output: str, code: int) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    payload = json.dumps({"version": __version__, "output": output, "exit": code})
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, os.path.join(cache_dir, key + ".json"))
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def _cache_key(argv: list[str]) -> str:
    blob = json.dumps([__version__] + argv)
    return hashlib.sha256(blob.encode()).hexdigest()


# ---------------------------------------------------------------------------
# Parser / entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stablerep",
        description="Exact computations with partitions, characters, Schur "
        "functors and stable-cohomology dimension tables.",
    )
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--budget", type=int, default=None, help="size budget cap")
    ap.add_argument("--cache", metavar="DIR", default=None, help="result cache dir")
    # The same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering a value parsed at the top level.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    common.add_argument("--cache", metavar="DIR", default=argparse.SUPPRESS)

    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("partitions", help="list partitions of N")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_partitions)

    p = add_parser("char", help="irreducible character table row")
    p.add_argument("lam", metavar="LAMBDA")
    p.set_defaults(func=_cmd_char)

    p = add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")
    p.add_argument("nu", metavar="NU")
    p.set_defaults(func=_cmd_lr)

    p = add_parser("cauchy", help="verify the Cauchy decomposition")
    p.add_argument("r", type=int)
    p.add_argument("dv", type=int, metavar="DV")
    p.add_argument("dw", type=int, metavar="DW")
    p.set_defaults(func=_cmd_cauchy)

    p = add_parser("schur-weyl", help="verify Schur-Weyl duality")
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_schur_weyl)

    p = add_parser("labeled-partitions", help="enumerate q-labeled partitions")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_labeled_partitions)

    p = add_parser("hom-dim", help="equivariant Hom-space dimension")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_hom_dim)

    p = add_parser("verify", help="run a structural verification")
    p.add_argument(
        "what",
        choices=["rw-prop", "splitting", "extension", "induction", "step1"],
    )
    p.add_argument("params", nargs="*")
    p.set_defaults(func=_cmd_verify)

    p = add_parser("stable-cohomology", help="stable cohomology calculator")
    p.add_argument("p", type=int, nargs="?", default=None)
    p.add_argument("q", type=int, nargs="?", default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--table", type=int, nargs=2, metavar=("PMAX", "QMAX"))
    p.set_defaults(func=_cmd_stable_cohomology)

    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if args.budget is None and os.environ.get("STABLEREP_BUDGET"):
        try:
            args.budget = int(os.environ["STABLEREP_BUDGET"])
        except ValueError:
            print("invalid STABLEREP_BUDGET", file=sys.stderr)
            return EXIT_USAGE

    key = None
    if args.cache:
        key = _cache_key(argv)
        hit = _cache_lookup(args.cache, key)
        if hit is not None:
            output, code = hit
            if output:
                print(output)
            return code

    try:
        output, code = args.func(args)
    except SizeBudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidArgs as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, StableRepError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAIL

    if args.cache and key is not None:
        _cache_store(args.cache, key, output, code)
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
