"""Command-line front end.

    rank2crystal orbit   --a1 3 --a2 3 --k1 1 --k2 1 --depth 2
    rank2crystal graph   --depth 3 --format dot --out ball.dot
    rank2crystal mult    --a1 4 --a2 4 --n-max 6
    rank2crystal verify  --depth 6
    rank2crystal f-table --x-max 20

Exit codes: 0 ok, 1 invalid configuration, 2 a verification check failed,
3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from . import verify
from .algebra import CartanData, ShapeWeight, Weight, WeightError, classify_weight, letter
from .crystalgraph import build_graph
from .embedding import theta
from .multiplicity import (SymmetricConfig, big_f, big_f_definitional, big_f_prime,
                           big_f_prime_definitional, multiplicity_at)

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3

DEFAULTS = {"a1": 3, "a2": 3, "k1": 1, "k2": 1, "depth": 4, "format": None, "out": None}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    a1: int
    a2: int
    k1: int
    k2: int
    depth: int
    format: str
    out: Optional[str] = None

    def shape(self) -> ShapeWeight:
        if self.depth < 0:
            raise WeightError(f"depth must be >= 0, got {self.depth}")
        return classify_weight(CartanData(self.a1, self.a2), Weight(self.k1, -self.k2))

    def symmetric(self) -> SymmetricConfig:
        self.shape()
        if self.a1 != self.a2 or self.a1 < 3 or (self.k1, self.k2) != (1, 1):
            raise WeightError(
                "only the symmetric case a1 = a2 >= 3 with lambda = L1 - L2 is supported "
                f"(got a1={self.a1}, a2={self.a2}, k1={self.k1}, k2={self.k2})")
        return SymmetricConfig(self.a1)


# commands -----------------------------------------------------------------

def cmd_orbit(cfg: RunConfig, args) -> str:
    shape = cfg.shape()
    lo = args.m_min if args.m_min is not None else -cfg.depth
    hi = args.m_max if args.m_max is not None else cfg.depth
    rows = []
    for m in range(lo, hi + 1):
        x = shape.orbit(m)
        # the Hasse edge between x_{m-1} and x_m is labelled by alpha_{letter(m)}
        rows.append({"m": m, "weight": [x.c1, x.c2], "p": shape.p(m),
                     "edge_from_prev": f"alpha{letter(m)}"})
    fmt = cfg.format or "tsv"
    if fmt == "json":
        return _dump({"config": asdict(cfg), "orbit": rows})
    if fmt == "dot":
        lines = ["digraph orbit {"]
        for r in rows:
            lines.append(f'  "x{r["m"]}" [label="x_{r["m"]} ({r["weight"][0]},{r["weight"][1]})"];')
        for r, nxt in zip(rows, rows[1:]):
            lines.append(f'  "x{r["m"]}" -> "x{nxt["m"]}" [label="{nxt["edge_from_prev"]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    out = ["m\tweight\tp\tedge_from_prev"]
    for r in rows:
        out.append(f'{r["m"]}\t({r["weight"][0]},{r["weight"][1]})\t{r["p"]}\t{r["edge_from_prev"]}')
    return "\n".join(out) + "\n"


def cmd_graph(cfg: RunConfig, args) -> str:
    doc = build_graph(cfg.shape(), cfg.depth, asdict(cfg))
    fmt = cfg.format or "dot"
    if fmt == "json":
        return doc.to_json()
    if fmt == "tsv":
        return doc.to_tsv()
    return doc.to_dot()


def cmd_mult(cfg: RunConfig, args) -> str:
    sym = cfg.symmetric()
    lo = args.n_min if args.n_min is not None else 0
    hi = args.n_max if args.n_max is not None else cfg.depth
    rows = [(n1, n2, multiplicity_at(sym, n1, n2))
            for n1 in range(lo, hi + 1) for n2 in range(lo, hi + 1)]
    fmt = cfg.format or "tsv"
    if fmt == "dot":
        raise UsageError("mult supports --format tsv or json")
    if fmt == "json":
        return _dump({"config": asdict(cfg),
                      "rows": [{"n1": a, "n2": b, "mult": c} for a, b, c in rows]})
    return "n1\tn2\tmult\n" + "".join(f"{a}\t{b}\t{c}\n" for a, b, c in rows)


def cmd_f_table(cfg: RunConfig, args) -> str:
    sym = cfg.symmetric()
    lo = args.x_min if args.x_min is not None else 0
    hi = args.x_max if args.x_max is not None else 10
    if lo < 0:
        raise WeightError("x-min must be >= 0")
    rows = []
    for x in range(lo, hi + 1):
        f, fd = big_f(sym, x), big_f_definitional(sym, x)
        g, gd = big_f_prime(sym, -x), big_f_prime_definitional(sym, -x)
        rows.append({"x": x, "F": f, "F_definitional": fd, "F'(-x)": g,
                     "F'_definitional": gd, "agree": f == fd and g == gd and g == -f})
    fmt = cfg.format or "tsv"
    if fmt == "dot":
        raise UsageError("f-table supports --format tsv or json")
    if fmt == "json":
        return _dump({"config": asdict(cfg), "rows": rows})
    head = ["x", "F", "F_definitional", "F'(-x)", "F'_definitional", "agree"]
    return "\t".join(head) + "\n" + "".join(
        "\t".join(str(r[h]).lower() if h == "agree" else str(r[h]) for h in head) + "\n"
        for r in rows)


def cmd_verify(cfg: RunConfig, args) -> tuple[str, bool]:
    shape = cfg.shape()
    theta_fn = verify.corrupted_theta if args.corrupt_theta else theta
    reports = verify.full_verification(shape, cfg.depth, args.extremal_depth, theta_fn)
    ok = all(r.ok for r in reports)
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name}  ({len(r.entries)} checks)", file=sys.stderr)
    if not ok:
        first = next(r for r in reports if not r.ok)
        print(f"first failing check: {first.name}: {first.first_failure()}", file=sys.stderr)
    body = {"config": asdict(cfg), "ok": ok, "suites": [r.to_dict() for r in reports]}
    if (cfg.format or "json") == "tsv":
        text = "suite\tok\tchecks\tfailures\n" + "".join(
            f"{r.name}\t{str(r.ok).lower()}\t{len(r.entries)}\t{len(r.failures)}\n" for r in reports)
    else:
        text = _dump(body)
    return text, ok


COMMANDS = {"orbit": cmd_orbit, "graph": cmd_graph, "mult": cmd_mult,
            "verify": cmd_verify, "f-table": cmd_f_table}


# plumbing -----------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a1", type=int)
    common.add_argument("--a2", type=int)
    common.add_argument("--k1", type=int)
    common.add_argument("--k2", type=int)
    common.add_argument("--depth", type=int, help="BFS radius / default table extent")
    common.add_argument("--format", choices=["dot", "json", "tsv"])
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--json", dest="json_config", metavar="PATH",
                        help="JSON object with any of the flags above; explicit flags win")

    parser = argparse.ArgumentParser(prog="rank2crystal", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("orbit", parents=[common], help="Weyl orbit x_m lambda and p_m")
    p.add_argument("--m-min", type=int)
    p.add_argument("--m-max", type=int)
    sub.add_parser("graph", parents=[common], help="crystal graph of the ball around pi_lambda")
    p = sub.add_parser("mult", parents=[common], help="weight multiplicities of V(L1 - L2)")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--extremal-depth", type=int, default=8)
    p.add_argument("--corrupt-theta", action="store_true", help=argparse.SUPPRESS)
    p = sub.add_parser("f-table", parents=[common], help="F and F' by both routes")
    p.add_argument("--x-min", type=int)
    p.add_argument("--x-max", type=int)
    return parser


def resolve_config(args) -> RunConfig:
    merged = dict(DEFAULTS)
    if args.json_config:
        try:
            with open(args.json_config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except OSError as exc:
            raise IOError(f"cannot read {args.json_config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.json_config} is not valid JSON: {exc}") from exc
        if not isinstance(loaded, dict):
            raise UsageError("JSON config must be an object")
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        merged.update(loaded)
    for key in DEFAULTS:
        val = getattr(args, key)
        if val is not None:
            merged[key] = val
    for key in ("a1", "a2", "k1", "k2", "depth"):
        if not isinstance(merged[key], int) or isinstance(merged[key], bool):
            raise UsageError(f"{key} must be an integer, got {merged[key]!r}")
    if merged["format"] not in (None, "dot", "json", "tsv"):
        raise UsageError(f"bad format {merged['format']!r}")
    return RunConfig(**merged)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        result = COMMANDS[args.command](cfg, args)
    except IOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (WeightError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    try:
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(result)
        else:
            sys.stdout.write(result)
    except OSError as exc:
        print(f"error: cannot write {cfg.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
