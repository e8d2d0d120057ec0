"""Command-line interface.

    gridfloer compute (--grid FILE | --builtin NAME) [--format text|json] [--workers K]
    gridfloer verify  (--grid FILE | --builtin NAME) --checks LIST [--moves N --seed S]
    gridfloer library [NAME]
    gridfloer oracle  (--grid FILE | --builtin NAME)

Exit status: 0 on success, 1 when a check fails or the grid is a link, 2 for
usage errors and unreadable or invalid grid input.  Errors are also written
to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import library
from .differential import verify_d_squared
from .errors import GridFloerError, InvalidGrid, NotAKnot, OracleTooLarge, ParseError, UnknownName
from .grid import GridDiagram, component_count, parse, serialize
from .homology import WORKERS_ENV, default_workers, graded_homology
from .invariants import (
    KnotReport,
    check_symmetry,
    check_vanishing,
    divide_v_factor,
    full_report,
)
from .moves import random_sequence

CHECKS = ("dsq", "symmetry", "moves", "oracle", "vfactor")


@dataclass
class CliConfig:
    command: str
    grid_path: str | None = None
    builtin: str | None = None
    format: str = "text"
    checks: list[str] = field(default_factory=list)
    workers: int = 1
    moves: int = 5
    seed: int = 0
    name: str | None = None


class CheckFailed(Exception):
    pass


class UsageError(Exception):
    pass


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _check_list(text):
    items = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in items if c not in CHECKS]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"unknown check(s) {bad}; choose from {','.join(CHECKS)}")
    return items


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gridfloer", description="Knot Floer homology from grid diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    def source(p):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--grid", dest="grid_path", metavar="FILE", help="grid file")
        grp.add_argument("--builtin", metavar="NAME", help="name from the built-in library")

    p = sub.add_parser("compute", help="compute GH~, HFK-hat and the invariants")
    source(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=_positive, default=None,
                   help=f"worker processes (default: ${WORKERS_ENV} or CPU count)")

    p = sub.add_parser("verify", help="run consistency checks and fail on the first failure")
    source(p)
    p.add_argument("--checks", type=_check_list, required=True, help=f"comma list from {','.join(CHECKS)}")
    p.add_argument("--moves", type=_positive, default=5, help="random move sequences for the 'moves' check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive, default=None)

    p = sub.add_parser("library", help="list built-in grids or print one")
    p.add_argument("name", nargs="?")

    p = sub.add_parser("oracle", help="dense reference computation (n <= 6)")
    source(p)
    return ap


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    workers = getattr(ns, "workers", None)
    return CliConfig(
        command=ns.command,
        grid_path=getattr(ns, "grid_path", None),
        builtin=getattr(ns, "builtin", None),
        format=getattr(ns, "format", "text"),
        checks=getattr(ns, "checks", []) or [],
        workers=workers if workers is not None else default_workers(),
        moves=getattr(ns, "moves", 5),
        seed=getattr(ns, "seed", 0),
        name=getattr(ns, "name", None),
    )


def load_grid(cfg: CliConfig) -> GridDiagram:
    if cfg.builtin is not None:
        return library.builtin(cfg.builtin)
    try:
        with open(cfg.grid_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.grid_path}: {exc.strerror}") from None
    return parse(text)


def _require_knot(g):
    k = component_count(g)
    if k != 1:
        raise NotAKnot(f"grid has {k} components; only knots are supported")


# ---------------------------------------------------------------------------
# Text rendering

def hfk_table(hfk) -> str:
    if not hfk:
        return "(zero)"
    ms = sorted({m for m, _ in hfk})
    alexes = sorted({a for _, a in hfk}, reverse=True)
    width = max(3, max(len(str(m)) for m in ms) + 1)
    lines = ["  a \\ m" + "".join(f"{m:>{width}}" for m in ms)]
    for a in alexes:
        cells = "".join(f"{hfk.get((m, a), 0) or '.':>{width}}" for m in ms)
        lines.append(f"{a:>7}" + cells)
    return "\n".join(lines)


def render_text(report: KnotReport, source: str) -> str:
    hfk = report.hfk
    top = sum(d for (_, a), d in hfk.items() if a == report.genus)
    out = [
        f"grid: {source} (n = {report.grid.n})",
        f"GH~ total dimension: {report.gh_tilde.total()}",
        "HFK-hat (rows: Alexander grading, columns: Maslov grading):",
        hfk_table(hfk),
        f"HFK total: {hfk.total()}",
        f"Alexander polynomial: {report.alexander}",
        f"  raw Euler characteristic: {report.alexander_raw}",
        f"genus: {report.genus}",
        f"fibered: {'yes' if report.fibered else 'no'} (top grading dimension {top})",
        f"symmetric: {'yes' if report.symmetric else 'no'}",
        f"vanishing outside |a| <= genus: {'yes' if report.vanishing_ok else 'no'}",
        "time: " + ", ".join(f"{k} {v:.2f}s" for k, v in report.timings.items()),
    ]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Commands

def cmd_compute(cfg: CliConfig, out) -> int:
    g = load_grid(cfg)
    _require_knot(g)
    report = full_report(g, workers=cfg.workers)
    if cfg.format == "json":
        out.write(report.to_json())
    else:
        out.write(render_text(report, cfg.builtin or cfg.grid_path))
    return 0


def _check_moves(g, hfk, cfg, out):
    rng = random.Random(cfg.seed)
    for k in range(cfg.moves):
        moved, records = random_sequence(g, rng, rng.randint(1, 5), max_n=max(g.n, 9))
        moved_hfk = divide_v_factor(graded_homology(moved, workers=cfg.workers), moved.n)
        trail = " ".join(map(str, records))
        if moved_hfk != hfk:
            raise CheckFailed(f"moves: HFK changed after [{trail}]")
        out.write(f"  sequence {k}: {trail} (n = {moved.n}) ok\n")


def cmd_verify(cfg: CliConfig, out) -> int:
    g = load_grid(cfg)
    out.write(f"seed: {cfg.seed}\n")
    needs_homology = any(c in cfg.checks for c in ("symmetry", "moves", "oracle", "vfactor"))
    if needs_homology:
        _require_knot(g)
    gh = hfk = None
    for check in cfg.checks:
        if check == "dsq":
            rep = verify_d_squared(g)
            if not rep:
                raise CheckFailed(f"dsq: nonzero composite starting at (m, 2a) = {rep.failure}")
            out.write(f"PASS dsq ({rep.compositions} compositions)\n")
            continue
        if gh is None:
            gh = graded_homology(g, workers=cfg.workers)
        if check == "vfactor":
            hfk = divide_v_factor(gh, g.n)  # raises NotDivisible
            out.write(f"PASS vfactor (GH~ {gh.total()} = HFK {hfk.total()} x 2^{g.n - 1})\n")
            continue
        if hfk is None:
            hfk = divide_v_factor(gh, g.n)
        if check == "symmetry":
            if not (check_symmetry(hfk) and check_vanishing(hfk)):
                raise CheckFailed("symmetry: HFK-hat is not symmetric or not supported in |a| <= genus")
            out.write("PASS symmetry\n")
        elif check == "moves":
            _check_moves(g, hfk, cfg, out)
            out.write(f"PASS moves ({cfg.moves} sequences)\n")
        elif check == "oracle":
            from .oracle import dense_homology

            dense = dense_homology(g)
            if dense != dict(gh):
                raise CheckFailed("oracle: dense homology differs from the bucketed pipeline")
            out.write(f"PASS oracle (total {gh.total()})\n")
    return 0


def cmd_library(cfg: CliConfig, out) -> int:
    if cfg.name:
        out.write(serialize(library.builtin(cfg.name)))
        return 0
    for name in library.names():
        g = library.builtin(name)
        out.write(f"{name:<12} n = {g.n}\n")
    return 0


def cmd_oracle(cfg: CliConfig, out) -> int:
    from .oracle import dense_homology

    g = load_grid(cfg)
    _require_knot(g)
    dense = dense_homology(g)
    total = sum(dense.values())
    out.write(f"dense GH~ total dimension: {total}\n")
    out.write(hfk_table(dense) + "\n")
    fast = graded_homology(g, workers=1)
    if dense != dict(fast):
        raise CheckFailed("oracle: dense homology differs from the bucketed pipeline")
    out.write("bucketed pipeline agrees\n")
    return 0


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "library": cmd_library, "oracle": cmd_oracle}


def _error(kind: str, message: str, err) -> None:
    err.write(json.dumps({"error": kind, "message": message}) + "\n")


def run(args: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, UnknownName, ParseError, InvalidGrid, OracleTooLarge) as exc:
        _error(type(exc).__name__, str(exc), err)
        return 2
    except CheckFailed as exc:
        out.write(f"FAIL {exc}\n")
        _error("CheckFailed", str(exc), err)
        return 1
    except (NotAKnot, GridFloerError) as exc:
        _error(type(exc).__name__, str(exc), err)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
