"""Macro-tiles and structural comparison of tile sets.

An n x n valid block of a tile set behaves like a single tile whose four
sides are the sequences of base colors along its outer edges.  Giving
each distinct border sequence a composite color id turns the set of all
such blocks into an ordinary tile set, so the grouping can be iterated.

Two notions of "one tile set behaving like another" are provided:
``find_simulation`` (an adjacency-preserving map, a homomorphism) and
``check_isomorphism`` (a bijection that preserves and reflects adjacency
on both axes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Color, TileSet, Tile, Tiling
from .errors import InvalidInput
from .solve import SearchBudget, enumerate_rectangle

BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class MacroTileSet:
    """All valid n x n blocks of a base set, as a tile set of their own.

    ``tileset.tiles[i]`` carries composite color ids; ``blocks[i]`` is the
    underlying n x n Tiling of the base set.  Two macro-tiles match along
    an axis iff all n underlying base edges match, because composite ids
    are injective on border sequences.
    """

    base: TileSet
    n: int
    blocks: tuple[Tiling, ...]
    tileset: TileSet

    def border_sequences(self, index: int) -> dict[str, tuple[int, ...]]:
        """The four base-color sequences on block ``index``'s outer edges
        (rows west-to-east, columns south-to-north)."""
        return _borders(self.base, self.blocks[index])


def _borders(base: TileSet, block: Tiling) -> dict[str, tuple[int, ...]]:
    tiles = base.tiles
    n = block.width
    return {
        "north": tuple(tiles[block.cells[n - 1][x]].north for x in range(n)),
        "south": tuple(tiles[block.cells[0][x]].south for x in range(n)),
        "east": tuple(tiles[block.cells[y][n - 1]].east for y in range(n)),
        "west": tuple(tiles[block.cells[y][0]].west for y in range(n)),
    }


def macro_tiles(
    tileset: TileSet,
    n: int,
    budget: SearchBudget = SearchBudget(),
    max_tiles: int | None = None,
) -> MacroTileSet | str:
    """Exhaustively enumerate the valid n x n blocks; BUDGET_EXCEEDED when
    the search budget runs out or more than ``max_tiles`` blocks exist
    (macro-tile counts explode quickly; that is expected)."""
    if n < 1:
        raise InvalidInput("block size must be positive")
    limit = None if max_tiles is None else max_tiles + 1
    blocks, complete = enumerate_rectangle(tileset, n, n, budget=budget, limit=limit)
    if not complete or (max_tiles is not None and len(blocks) > max_tiles):
        return BUDGET_EXCEEDED
    # composite colors: one id per distinct border sequence, per axis
    color_ids: dict[tuple, int] = {}
    all_borders = [_borders(tileset, b) for b in blocks]
    for axis, sides in (("h", ("west", "east")), ("v", ("south", "north"))):
        seqs = sorted({bd[s] for bd in all_borders for s in sides})
        for seq in seqs:
            color_ids[(axis, seq)] = len(color_ids)
    labels = {
        i: f"{axis}:" + ",".join(str(c) for c in seq)
        for (axis, seq), i in color_ids.items()
    }
    macro = tuple(
        Tile(
            north=color_ids[("v", bd["north"])],
            east=color_ids[("h", bd["east"])],
            south=color_ids[("v", bd["south"])],
            west=color_ids[("h", bd["west"])],
        )
        for bd in all_borders
    )
    colors = tuple(Color(i, labels[i]) for i in range(len(color_ids)))
    ts = TileSet(f"{tileset.name}^{n}", colors, macro)
    return MacroTileSet(tileset, n, tuple(blocks), ts)


# --- simulation / isomorphism -------------------------------------------------


@dataclass(frozen=True)
class TileSetMap:
    """A map of tile indices from one set into another."""

    source: TileSet
    target: TileSet
    assignment: tuple[int, ...]


def _adjacency(ts: TileSet) -> tuple[list[list[bool]], list[list[bool]]]:
    """(H, V): H[i][j] iff j may sit directly east of i; V[i][j] iff j may
    sit directly north of i."""
    m = len(ts.tiles)
    H = [[ts.tiles[i].east == ts.tiles[j].west for j in range(m)] for i in range(m)]
    V = [[ts.tiles[i].north == ts.tiles[j].south for j in range(m)] for i in range(m)]
    return H, V


def preserves_adjacency(m: TileSetMap) -> bool:
    """Independent check of the TileSetMap invariant."""
    HS, VS = _adjacency(m.source)
    HT, VT = _adjacency(m.target)
    k = len(m.source.tiles)
    a = m.assignment
    return all(
        (not HS[i][j] or HT[a[i]][a[j]]) and (not VS[i][j] or VT[a[i]][a[j]])
        for i in range(k)
        for j in range(k)
    )


def find_simulation(source: TileSet, target: TileSet) -> TileSetMap | None:
    """Lexicographically least adjacency-preserving map of source tiles
    into target tiles, or None (the search is exhaustive)."""
    if not source.tiles or not target.tiles:
        raise InvalidInput("both tile sets must be nonempty")
    HS, VS = _adjacency(source)
    HT, VT = _adjacency(target)
    m, t = len(source.tiles), len(target.tiles)
    assign: list[int] = []

    def ok(k: int, v: int) -> bool:
        for i in range(k):
            w = assign[i]
            if HS[i][k] and not HT[w][v]:
                return False
            if HS[k][i] and not HT[v][w]:
                return False
            if VS[i][k] and not VT[w][v]:
                return False
            if VS[k][i] and not VT[v][w]:
                return False
        if HS[k][k] and not HT[v][v]:
            return False
        if VS[k][k] and not VT[v][v]:
            return False
        return True

    def search(k: int) -> bool:
        if k == m:
            return True
        for v in range(t):
            if ok(k, v):
                assign.append(v)
                if search(k + 1):
                    return True
                assign.pop()
        return False

    if search(0):
        return TileSetMap(source, target, tuple(assign))
    return None


def check_isomorphism(a: TileSet, b: TileSet) -> TileSetMap | None:
    """Lexicographically least bijection of tiles that preserves and
    reflects adjacency on both axes, or None.  Different sizes give None
    immediately."""
    m = len(a.tiles)
    if m != len(b.tiles):
        return None
    HA, VA = _adjacency(a)
    HB, VB = _adjacency(b)
    assign: list[int] = []
    used = [False] * m

    def ok(k: int, v: int) -> bool:
        if HA[k][k] != HB[v][v] or VA[k][k] != VB[v][v]:
            return False
        for i in range(k):
            w = assign[i]
            if HA[i][k] != HB[w][v] or HA[k][i] != HB[v][w]:
                return False
            if VA[i][k] != VB[w][v] or VA[k][i] != VB[v][w]:
                return False
        return True

    def search(k: int) -> bool:
        if k == m:
            return True
        for v in range(m):
            if not used[v] and ok(k, v):
                used[v] = True
                assign.append(v)
                if search(k + 1):
                    return True
                assign.pop()
                used[v] = False
        return False

    if search(0):
        return TileSetMap(a, b, tuple(assign))
    return None
