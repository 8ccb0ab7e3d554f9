"""Domain types for tiles, patterns and finite tilings.

Conventions used everywhere in this package:

* Grids are stored as tuples of rows, row 0 being the *bottom* row.
  Cell (x, y) is ``cells[y][x]``.
* A tile's sides are named north (top), east, south (bottom), west.
* Two horizontally adjacent tiles match iff east(left) == west(right);
  two vertically adjacent tiles match iff north(bottom) == south(top).
* Colors are small integers local to one tile set; tilings store tile
  indices, not tile values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpec, MalformedInput


@dataclass(frozen=True)
class Color:
    """A side color: a dense integer id plus an optional display label."""

    id: int
    label: str | None = None


@dataclass(frozen=True, order=True)
class Tile:
    north: int
    east: int
    south: int
    west: int

    def sides(self) -> tuple[int, int, int, int]:
        return (self.north, self.east, self.south, self.west)


@dataclass(frozen=True)
class TileSet:
    """A finite set of Wang tiles over a shared color universe."""

    name: str
    colors: tuple[Color, ...]
    tiles: tuple[Tile, ...]

    def __post_init__(self):
        n = len(self.colors)
        ids = [c.id for c in self.colors]
        if ids != list(range(n)):
            raise InvalidSpec(f"tileset {self.name!r}: color ids must be 0..{n - 1}")
        if len(set(self.tiles)) != len(self.tiles):
            raise InvalidSpec(f"tileset {self.name!r}: duplicate tiles")
        for t in self.tiles:
            for c in t.sides():
                if not 0 <= c < n:
                    raise InvalidSpec(
                        f"tileset {self.name!r}: tile {t} references color {c} "
                        f"outside universe of size {n}"
                    )

    def __len__(self) -> int:
        return len(self.tiles)


def make_tileset(
    name: str,
    tiles: list[tuple[int, int, int, int]],
    num_colors: int | None = None,
    labels: dict[int, str] | None = None,
) -> TileSet:
    """Build a TileSet from raw (north, east, south, west) tuples."""
    if num_colors is None:
        num_colors = 1 + max((max(t) for t in tiles), default=-1)
    labels = labels or {}
    colors = tuple(Color(i, labels.get(i)) for i in range(num_colors))
    return TileSet(name, colors, tuple(Tile(*t) for t in tiles))


@dataclass(frozen=True)
class Pattern:
    """A forbidden rectangle of letters; rows are bottom-up."""

    width: int
    height: int
    cells: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise InvalidSpec("pattern dimensions must be positive")
        if len(self.cells) != self.height or any(len(r) != self.width for r in self.cells):
            raise InvalidSpec("pattern grid does not match its declared dimensions")

    @staticmethod
    def from_rows(rows: list[str]) -> "Pattern":
        """Rows given bottom-up, each a string of single-letter cells."""
        cells = tuple(tuple(r) for r in rows)
        return Pattern(len(rows[0]), len(rows), cells)


@dataclass(frozen=True)
class Window:
    """A finite rectangular piece of a configuration; rows bottom-up."""

    width: int
    height: int
    cells: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.height or any(len(r) != self.width for r in self.cells):
            raise InvalidSpec("window grid does not match its declared dimensions")

    @staticmethod
    def from_rows(rows: list[str] | list[tuple[str, ...]]) -> "Window":
        cells = tuple(tuple(r) for r in rows)
        return Window(len(cells[0]), len(cells), cells)


@dataclass(frozen=True)
class SftSpec:
    """A 2D subshift of finite type: alphabet plus forbidden patterns."""

    alphabet: tuple[str, ...]
    forbidden: tuple[Pattern, ...]

    def __post_init__(self):
        if not self.alphabet:
            raise InvalidSpec("alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidSpec("alphabet letters must be distinct")
        letters = set(self.alphabet)
        for p in self.forbidden:
            for row in p.cells:
                for a in row:
                    if a not in letters:
                        raise InvalidSpec(f"pattern letter {a!r} outside alphabet")

    @property
    def window(self) -> int:
        """Smallest k such that every forbidden pattern fits in a k x k square."""
        k = max((max(p.width, p.height) for p in self.forbidden), default=1)
        return max(k, 1)


@dataclass(frozen=True)
class Tiling:
    """A w x h assignment of tile indices; rows bottom-up."""

    width: int
    height: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.height or any(len(r) != self.width for r in self.cells):
            raise InvalidSpec("tiling grid does not match its declared dimensions")

    @staticmethod
    def from_rows(rows: list[list[int]] | list[tuple[int, ...]]) -> "Tiling":
        cells = tuple(tuple(r) for r in rows)
        return Tiling(len(cells[0]), len(cells), cells)


@dataclass(frozen=True)
class TorusTiling:
    """A p x q tiling whose matching constraints wrap around."""

    p: int
    q: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.q or any(len(r) != self.p for r in self.cells):
            raise InvalidSpec("torus grid does not match its declared periods")

    @staticmethod
    def from_rows(rows: list[list[int]] | list[tuple[int, ...]]) -> "TorusTiling":
        cells = tuple(tuple(r) for r in rows)
        return TorusTiling(len(cells[0]), len(cells), cells)


def _check_indices(tileset: TileSet, cells) -> None:
    n = len(tileset.tiles)
    for row in cells:
        for i in row:
            if not 0 <= i < n:
                raise MalformedInput(f"tile index {i} out of range (|tiles| = {n})")


def validate_tiling(tileset: TileSet, t: Tiling) -> bool:
    """True iff every adjacent pair of tiles matches."""
    _check_indices(tileset, t.cells)
    tiles = tileset.tiles
    for y in range(t.height):
        for x in range(t.width):
            here = tiles[t.cells[y][x]]
            if x + 1 < t.width and here.east != tiles[t.cells[y][x + 1]].west:
                return False
            if y + 1 < t.height and here.north != tiles[t.cells[y + 1][x]].south:
                return False
    return True


def validate_torus_tiling(tileset: TileSet, t: TorusTiling) -> bool:
    """True iff every adjacent pair matches, with wraparound indices."""
    _check_indices(tileset, t.cells)
    tiles = tileset.tiles
    for y in range(t.q):
        for x in range(t.p):
            here = tiles[t.cells[y][x]]
            if here.east != tiles[t.cells[y][(x + 1) % t.p]].west:
                return False
            if here.north != tiles[t.cells[(y + 1) % t.q][x]].south:
                return False
    return True


def normalize_tileset(tileset: TileSet) -> TileSet:
    """Canonical form: duplicate tiles dropped, colors renumbered densely
    in increasing order of their old ids, tiles sorted lexicographically
    by (north, east, south, west)."""
    tiles = sorted(set(tileset.tiles))
    used = sorted({c for t in tiles for c in t.sides()})
    remap = {old: new for new, old in enumerate(used)}
    new_tiles = tuple(
        Tile(remap[t.north], remap[t.east], remap[t.south], remap[t.west]) for t in tiles
    )
    new_tiles = tuple(sorted(set(new_tiles)))
    colors = tuple(Color(remap[old], tileset.colors[old].label) for old in used)
    return TileSet(tileset.name, colors, new_tiles)
