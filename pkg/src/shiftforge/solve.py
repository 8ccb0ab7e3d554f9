"""Exact tiling solvers.

Backtracking over cells in row-major order (bottom row first) with
arc-consistency propagation of per-cell tile domains, run to fixpoint
after every assignment.  Variable order and ascending tile-index value
order are fixed, so a SAT answer is always the lexicographically least
witness and identical inputs give identical results.

Budgets are counted in search nodes (one node per attempted assignment)
first and wall-clock milliseconds second; node counts are machine
independent, which keeps golden tests stable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

from .core import TileSet, Tiling, TorusTiling
from .errors import InvalidInput

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_millis: int = 600_000

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_millis < 1:
            raise InvalidInput("budget values must be positive")


@dataclass(frozen=True)
class BoundaryConstraint:
    """Optional forced colors on the rectangle's outer edges and forced
    tiles in individual cells.  Sequences run west-to-east (rows) and
    south-to-north (columns)."""

    north: tuple[int, ...] | None = None
    south: tuple[int, ...] | None = None
    east: tuple[int, ...] | None = None
    west: tuple[int, ...] | None = None
    forced_cells: tuple[tuple[int, int, int], ...] = ()  # (x, y, tile index)

    def check_dimensions(self, w: int, h: int) -> None:
        for seq, length, name in (
            (self.north, w, "north"),
            (self.south, w, "south"),
            (self.east, h, "east"),
            (self.west, h, "west"),
        ):
            if seq is not None and len(seq) != length:
                raise InvalidInput(f"{name} boundary sequence has wrong length")
        for x, y, _ in self.forced_cells:
            if not (0 <= x < w and 0 <= y < h):
                raise InvalidInput(f"forced cell ({x}, {y}) outside rectangle")


@dataclass(frozen=True)
class RectResult:
    status: str
    tiling: Tiling | None = None
    nodes: int = 0


@dataclass(frozen=True)
class TorusResult:
    status: str
    tiling: TorusTiling | None = None
    nodes: int = 0


@dataclass(frozen=True)
class CountResult:
    status: str  # SAT-style: "COUNT" when exact, UNKNOWN on budget
    count: int | None = None
    nodes: int = 0


@dataclass(frozen=True)
class DominoVerdict:
    kind: str  # TILES_PERIODICALLY / NO_TILING / UNDETERMINED
    p: int | None = None
    q: int | None = None
    n: int | None = None
    completed_n: int = 0
    nodes: int = 0


class _BudgetExceeded(Exception):
    pass


class _Grid:
    """Shared search engine for rectangles (open edges) and tori (wrap)."""

    def __init__(self, tileset: TileSet, w: int, h: int, wrap: bool,
                 boundary: BoundaryConstraint | None, budget: SearchBudget):
        if w < 1 or h < 1:
            raise InvalidInput("grid dimensions must be positive")
        self.w, self.h, self.wrap = w, h, wrap
        self.tiles = tileset.tiles
        n = len(self.tiles)
        self.n = n
        self.full = (1 << n) - 1
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_millis / 1000.0

        ncolors = len(tileset.colors)
        by_side = {s: [0] * ncolors for s in "nesw"}
        for i, t in enumerate(self.tiles):
            bit = 1 << i
            by_side["n"][t.north] |= bit
            by_side["e"][t.east] |= bit
            by_side["s"][t.south] |= bit
            by_side["w"][t.west] |= bit
        self.by_side = by_side
        # colors of tile i, for aggregating neighbor-compatibility masks
        self.side_color = {
            "n": [t.north for t in self.tiles],
            "e": [t.east for t in self.tiles],
            "s": [t.south for t in self.tiles],
            "w": [t.west for t in self.tiles],
        }
        # memo: (my side, domain) -> mask of tiles allowed on the neighbor
        # across that side (matching opposite side color)
        self._compat_memo: dict[tuple[str, int], int] = {}

        dom = [self.full] * (w * h)
        if boundary is not None:
            boundary.check_dimensions(w, h)
            if boundary.south:
                for x, c in enumerate(boundary.south):
                    dom[x] &= self._side_mask("s", c)
            if boundary.north:
                for x, c in enumerate(boundary.north):
                    dom[(h - 1) * w + x] &= self._side_mask("n", c)
            if boundary.west:
                for y, c in enumerate(boundary.west):
                    dom[y * w] &= self._side_mask("w", c)
            if boundary.east:
                for y, c in enumerate(boundary.east):
                    dom[y * w + w - 1] &= self._side_mask("e", c)
            for x, y, ti in boundary.forced_cells:
                if not 0 <= ti < n:
                    raise InvalidInput(f"forced tile index {ti} out of range")
                dom[y * w + x] &= 1 << ti
        self.init_dom = dom

        # neighbor lists: (cell, my side, opposite side)
        opp = {"n": "s", "e": "w", "s": "n", "w": "e"}
        self.opp = opp
        nbrs: list[list[tuple[int, str]]] = [[] for _ in range(w * h)]
        for y in range(h):
            for x in range(w):
                c = y * w + x
                for side, dx, dy in (("e", 1, 0), ("w", -1, 0), ("n", 0, 1), ("s", 0, -1)):
                    nx, ny = x + dx, y + dy
                    if wrap:
                        nx, ny = nx % w, ny % h
                    elif not (0 <= nx < w and 0 <= ny < h):
                        continue
                    nc = ny * w + nx
                    if nc != c:  # wrap on a period-1 axis self-constrains; handled below
                        nbrs[c].append((nc, side))
        self.nbrs = nbrs
        # self-loop constraints from period-1 wrap: east color must equal west color, etc.
        self.self_mask = self.full
        if wrap:
            if w == 1:
                m = 0
                for i, t in enumerate(self.tiles):
                    if t.east == t.west:
                        m |= 1 << i
                self.self_mask &= m
            if h == 1:
                m = 0
                for i, t in enumerate(self.tiles):
                    if t.north == t.south:
                        m |= 1 << i
                self.self_mask &= m

    def _side_mask(self, side: str, color: int) -> int:
        table = self.by_side[side]
        if not 0 <= color < len(table):
            raise InvalidInput(f"boundary color {color} outside universe")
        return table[color]

    def _compat(self, side: str, dom: int) -> int:
        """Mask of tiles allowed on the neighbor across `side`, given my domain."""
        key = (side, dom)
        m = self._compat_memo.get(key)
        if m is None:
            colors = self.side_color[side]
            table = self.by_side[self.opp[side]]
            seen: set[int] = set()
            m = 0
            d = dom
            while d:
                lsb = d & -d
                i = lsb.bit_length() - 1
                c = colors[i]
                if c not in seen:
                    seen.add(c)
                    m |= table[c]
                d ^= lsb
            self._compat_memo[key] = m
        return m

    def _propagate(self, dom: list[int], dirty: list[int]) -> bool:
        """AC to fixpoint starting from `dirty` cells.  False on wipeout."""
        queue = list(dirty)
        in_queue = set(queue)
        while queue:
            c = queue.pop()
            in_queue.discard(c)
            dc = dom[c]
            if dc == 0:
                return False
            for nc, side in self.nbrs[c]:
                allowed = self._compat(side, dc)
                nd = dom[nc] & allowed
                if nd != dom[nc]:
                    if nd == 0:
                        return False
                    dom[nc] = nd
                    if nc not in in_queue:
                        in_queue.add(nc)
                        queue.append(nc)
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def solutions(self) -> Iterator[list[int]]:
        """Yield all solutions (cell -> tile index) in lexicographic order.

        Raises _BudgetExceeded if the budget runs out mid-search.
        """
        dom = [d & self.self_mask for d in self.init_dom]
        if not self._propagate(dom, list(range(self.w * self.h))):
            return
        yield from self._search(dom, 0)

    def _search(self, dom: list[int], cell: int) -> Iterator[list[int]]:
        total = self.w * self.h
        while cell < total and dom[cell].bit_count() == 1:
            cell += 1
        if cell == total:
            yield [d.bit_length() - 1 for d in dom]
            return
        d = dom[cell]
        while d:
            lsb = d & -d
            d ^= lsb
            self._tick()
            trial = dom.copy()
            trial[cell] = lsb
            if self._propagate(trial, [cell]):
                yield from self._search(trial, cell + 1)

    def cells_to_rows(self, cells: list[int]) -> tuple[tuple[int, ...], ...]:
        w = self.w
        return tuple(tuple(cells[y * w:(y + 1) * w]) for y in range(self.h))


def solve_rectangle(tileset: TileSet, w: int, h: int,
                    boundary: BoundaryConstraint | None = None,
                    budget: SearchBudget = SearchBudget()) -> RectResult:
    """First (lexicographically least) tiling of a w x h rectangle, or UNSAT."""
    g = _Grid(tileset, w, h, wrap=False, boundary=boundary, budget=budget)
    try:
        for sol in g.solutions():
            return RectResult(SAT, Tiling(w, h, g.cells_to_rows(sol)), g.nodes)
    except _BudgetExceeded:
        return RectResult(UNKNOWN, None, g.nodes)
    return RectResult(UNSAT, None, g.nodes)


def count_rectangle(tileset: TileSet, w: int, h: int,
                    boundary: BoundaryConstraint | None = None,
                    budget: SearchBudget = SearchBudget()) -> CountResult:
    """Exact number of valid tilings (exhaustive; intended for small grids)."""
    g = _Grid(tileset, w, h, wrap=False, boundary=boundary, budget=budget)
    count = 0
    try:
        for _ in g.solutions():
            count += 1
    except _BudgetExceeded:
        return CountResult(UNKNOWN, None, g.nodes)
    return CountResult("COUNT", count, g.nodes)


def enumerate_rectangle(tileset: TileSet, w: int, h: int,
                        boundary: BoundaryConstraint | None = None,
                        budget: SearchBudget = SearchBudget(),
                        limit: int | None = None) -> tuple[list[Tiling], bool]:
    """All tilings in lexicographic order.

    Returns (tilings, complete); complete is False when the budget ran out
    or `limit` results were produced before the search finished.
    """
    g = _Grid(tileset, w, h, wrap=False, boundary=boundary, budget=budget)
    out: list[Tiling] = []
    try:
        for sol in g.solutions():
            out.append(Tiling(w, h, g.cells_to_rows(sol)))
            if limit is not None and len(out) >= limit:
                return out, False
    except _BudgetExceeded:
        return out, False
    return out, True


def solve_torus(tileset: TileSet, p: int, q: int,
                budget: SearchBudget = SearchBudget()) -> TorusResult:
    """Least p x q torus tiling or exhaustive UNSAT.  A SAT answer
    certifies a fully periodic tiling of the entire plane."""
    g = _Grid(tileset, p, q, wrap=True, boundary=None, budget=budget)
    try:
        for sol in g.solutions():
            return TorusResult(SAT, TorusTiling(p, q, g.cells_to_rows(sol)), g.nodes)
    except _BudgetExceeded:
        return TorusResult(UNKNOWN, None, g.nodes)
    return TorusResult(UNSAT, None, g.nodes)


def enumerate_torus(tileset: TileSet, p: int, q: int,
                    budget: SearchBudget = SearchBudget(),
                    limit: int | None = None) -> tuple[list[TorusTiling], bool]:
    """All p x q torus tilings in lexicographic order."""
    g = _Grid(tileset, p, q, wrap=True, boundary=None, budget=budget)
    out: list[TorusTiling] = []
    try:
        for sol in g.solutions():
            out.append(TorusTiling(p, q, g.cells_to_rows(sol)))
            if limit is not None and len(out) >= limit:
                return out, False
    except _BudgetExceeded:
        return out, False
    return out, True


def domino_semidecide(tileset: TileSet, max_n: int,
                      budget: SearchBudget = SearchBudget()) -> DominoVerdict:
    """Interleaved semidecision sweep for the domino problem.

    For n = 1..max_n: (a) solve the n x n square; UNSAT there rules out any
    plane tiling (compactness), so answer NO_TILING(n).  (b) try every torus
    (p, q) with p, q <= n not tried before, in lexicographic order; SAT
    certifies a periodic plane tiling.  On tile sets that tile the plane
    only aperiodically the sweep never decides; that is expected.
    """
    if max_n < 1:
        raise InvalidInput("max_n must be positive")
    spent = 0
    deadline = time.monotonic() + budget.max_millis / 1000.0

    def remaining() -> SearchBudget:
        ms = max(1, int((deadline - time.monotonic()) * 1000))
        return SearchBudget(max(1, budget.max_nodes - spent), ms)

    tried: set[tuple[int, int]] = set()
    completed = 0
    for n in range(1, max_n + 1):
        r = solve_rectangle(tileset, n, n, budget=remaining())
        spent += r.nodes
        if r.status == UNKNOWN:
            return DominoVerdict("UNDETERMINED", completed_n=completed, nodes=spent)
        if r.status == UNSAT:
            return DominoVerdict("NO_TILING", n=n, completed_n=completed, nodes=spent)
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if (p, q) in tried:
                    continue
                tried.add((p, q))
                t = solve_torus(tileset, p, q, budget=remaining())
                spent += t.nodes
                if t.status == UNKNOWN:
                    return DominoVerdict("UNDETERMINED", completed_n=completed, nodes=spent)
                if t.status == SAT:
                    return DominoVerdict("TILES_PERIODICALLY", p=p, q=q,
                                         completed_n=completed, nodes=spent)
        completed = n
    return DominoVerdict("UNDETERMINED", completed_n=completed, nodes=spent)
