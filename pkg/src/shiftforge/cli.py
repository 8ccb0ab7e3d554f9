"""Command-line surface: compile specs, solve tilings, render, verify.

Exit codes: 0 success, 2 parse/usage error, 3 unsupported input,
4 validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .aperiodic import aperiodicity_evidence, format_evidence, robinson_tileset
from .compilers import sft_to_wang, tm_to_tileset
from .core import Window, validate_tiling
from .errors import (InvalidInput, InvalidSpec, ParseError, ShiftforgeError,
                     UnsupportedSpec)
from .macrotile import BUDGET_EXCEEDED, macro_tiles
from .render import RenderSpec, render
from .solve import (SAT, SearchBudget, domino_semidecide, solve_rectangle,
                    solve_torus)
from .subshift import (BUDGET_EXHAUSTED_CLEAN, CLEAN, DEFAULT_STREAM_BUDGET,
                       VIOLATION, check_sequence, lift_1d)
from .textio import (parse_sft, parse_subshift, parse_tiling, parse_tileset,
                     parse_tm, serialize_compilation, serialize_tileset,
                     serialize_tiling)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_VALIDATION = 4


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_millis=args.budget_ms)


def cmd_compile(args) -> int:
    text = Path(args.input).read_text()
    if args.kind == "sft":
        comp = sft_to_wang(parse_sft(text))
    elif args.kind == "subshift1d":
        comp = sft_to_wang(lift_1d(parse_subshift(text)))
    else:
        comp = tm_to_tileset(parse_tm(text), args.tape_width)
    _emit(serialize_compilation(comp), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    ts, _ = parse_tileset(Path(args.tileset).read_text())
    budget = _budget(args)
    mode = args.mode[0]
    dims = [int(x) for x in args.mode[1:]]
    if mode == "rect":
        if len(dims) != 2:
            raise InvalidInput("rect mode takes width and height")
        r = solve_rectangle(ts, dims[0], dims[1], budget=budget)
        body = serialize_tiling(r.tiling) if r.status == SAT else r.status + "\n"
    elif mode == "torus":
        if len(dims) != 2:
            raise InvalidInput("torus mode takes two periods")
        r = solve_torus(ts, dims[0], dims[1], budget=budget)
        if r.status == SAT:
            t = r.tiling
            body = "SAT\n" + "\n".join(
                " ".join(str(i) for i in row) for row in t.cells
            ) + "\n"
        else:
            body = r.status + "\n"
    elif mode == "domino":
        if len(dims) != 1:
            raise InvalidInput("domino mode takes max_n")
        v = domino_semidecide(ts, dims[0], budget=budget)
        if v.kind == "TILES_PERIODICALLY":
            body = f"TILES_PERIODICALLY {v.p} {v.q}\n"
        elif v.kind == "NO_TILING":
            body = f"NO_TILING {v.n}\n"
        else:
            body = f"UNDETERMINED completed_n={v.completed_n}\n"
    else:
        raise InvalidInput(f"unknown solve mode {mode!r}")
    _emit(body, args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    ts, _ = parse_tileset(Path(args.tileset).read_text())
    tiling = parse_tiling(Path(args.tiling).read_text())
    try:
        if not validate_tiling(ts, tiling):
            raise InvalidInput("tiling does not validate against the tile set")
        data = render(ts, tiling, RenderSpec(args.cell_pixels, args.format))
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    Path(args.out).write_bytes(data)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = parse_subshift(Path(args.spec).read_text())
    artifact = Path(args.artifact).read_text()
    if artifact.lstrip().startswith("window"):
        from .textio import parse_window

        window = parse_window(artifact)
    else:
        if not args.tileset:
            raise InvalidInput("verifying a tiling requires --tileset with decode lines")
        ts, decode = parse_tileset(Path(args.tileset).read_text())
        if decode is None:
            raise InvalidInput("tile-set file has no decode lines")
        tiling = parse_tiling(artifact)
        if not validate_tiling(ts, tiling):
            print("error: tiling does not validate against the tile set",
                  file=sys.stderr)
            return EXIT_VALIDATION
        window = Window.from_rows(
            [tuple(decode[i] for i in row) for row in tiling.cells]
        )
    letters = set(spec.alphabet)
    for row in window.cells:
        for a in row:
            if a not in letters:
                raise InvalidInput(f"letter {a!r} outside the spec's alphabet")
    # lifted semantics: columns constant, every row avoids the word source
    for x in range(window.width):
        for y in range(window.height - 1):
            if window.cells[y][x] != window.cells[y + 1][x]:
                print(f"VIOLATION vertical mismatch at column {x} rows {y},{y + 1}")
                return EXIT_OK
    budget_limited = False
    for y in range(window.height):
        v = check_sequence(spec, "".join(window.cells[y]), budget=args.budget)
        if v.kind == VIOLATION:
            print(f"VIOLATION {v.word} at row {y} position {v.position}")
            return EXIT_OK
        if v.kind == BUDGET_EXHAUSTED_CLEAN:
            budget_limited = True
    print(BUDGET_EXHAUSTED_CLEAN if budget_limited else CLEAN)
    return EXIT_OK


def cmd_robinson(args) -> int:
    rs = robinson_tileset()
    _emit(serialize_tileset(rs.tileset, provenance=rs.tile_roles), args.out)
    return EXIT_OK


def cmd_macro(args) -> int:
    ts, _ = parse_tileset(Path(args.tileset).read_text())
    result = macro_tiles(ts, args.n, budget=_budget(args), max_tiles=args.max_tiles)
    if result == BUDGET_EXCEEDED:
        print(BUDGET_EXCEEDED)
        return EXIT_OK
    print(f"macro tiles: {len(result.blocks)}")
    if args.out:
        Path(args.out).write_text(serialize_tileset(result.tileset))
    if args.map_out:
        lines = []
        for i, block in enumerate(result.blocks):
            flat = ";".join(" ".join(str(c) for c in row) for row in block.cells)
            lines.append(f"macro {i} {flat}")
        Path(args.map_out).write_text("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_evidence(args) -> int:
    if args.tileset:
        ts, _ = parse_tileset(Path(args.tileset).read_text())
    else:
        ts = robinson_tileset().tileset
    report = aperiodicity_evidence(ts, args.max_square, args.max_period,
                                   budget=_budget(args))
    _emit(format_evidence(report), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="shiftforge",
        description="Subshift and Wang-tiling toolkit: compile, solve, render, verify.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget-nodes", type=int, default=10_000_000)
        p.add_argument("--budget-ms", type=int, default=600_000)
        p.add_argument("--out", default=None)

    p = sub.add_parser("compile", help="compile a spec into a tile set")
    p.add_argument("input")
    p.add_argument("--kind", required=True, choices=["sft", "subshift1d", "tm"])
    p.add_argument("--tape-width", type=int, default=8,
                   help="tape cells for --kind tm")
    common(p)
    p.set_defaults(fn=cmd_compile)

    p = sub.add_parser("solve", help="solve rectangle/torus/domino instances")
    p.add_argument("tileset")
    p.add_argument("--mode", nargs="+", required=True,
                   metavar=("rect|torus|domino", "dims"))
    common(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("render", help="render a tiling to PPM or SVG")
    p.add_argument("tileset")
    p.add_argument("tiling")
    p.add_argument("--cell-pixels", type=int, default=16)
    p.add_argument("--format", choices=["ppm", "svg"], default="ppm")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("verify", help="check a window or decoded tiling against a 1D spec")
    p.add_argument("spec")
    p.add_argument("artifact")
    p.add_argument("--tileset", default=None,
                   help="compiled tile-set file with decode lines (for tilings)")
    p.add_argument("--budget", type=int, default=DEFAULT_STREAM_BUDGET)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("robinson", help="built-in aperiodic set operations")
    rsub = p.add_subparsers(dest="robinson_command", required=True)
    pe = rsub.add_parser("export", help="write the set in tile-set format")
    pe.add_argument("--out", default=None)
    pe.set_defaults(fn=cmd_robinson)

    p = sub.add_parser("macro", help="enumerate n x n macro-tiles")
    p.add_argument("tileset")
    p.add_argument("n", type=int)
    p.add_argument("--max-tiles", type=int, default=None)
    p.add_argument("--map-out", default=None,
                   help="sidecar file mapping macro ids to blocks")
    common(p)
    p.set_defaults(fn=cmd_macro)

    p = sub.add_parser("evidence", help="square/torus aperiodicity evidence suite")
    p.add_argument("--tileset", default=None,
                   help="tile-set file (default: the built-in aperiodic set)")
    p.add_argument("--max-square", type=int, default=8)
    p.add_argument("--max-period", type=int, default=4)
    common(p)
    p.set_defaults(fn=cmd_evidence)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InvalidSpec, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ShiftforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
