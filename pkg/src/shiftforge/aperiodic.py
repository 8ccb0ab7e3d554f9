"""Built-in aperiodic tile set: hierarchical crosses and arms with parity.

The construction flattens the classic nested-squares picture into Wang
colors.  Signals run along every grid line; each edge carries exactly
one arrow with a direction along its axis, a multiplicity (single or
double), and a *side bit*: the transverse direction toward the square
the arrow belongs to.

* A *cross* emits arrows outward on all four edges.  Its facing (one of
  NE/NW/SE/SW) selects which two arms are double: those trace the sides
  of the squares the cross is a corner of; the two back arms are single.
  All four arrows carry the cross's transverse facing as their side bit.
* A *meet* is the midpoint between two consecutive crosses of a line:
  it absorbs two colliding arrow heads of equal multiplicity and equal
  side bit (facing arms give a double-double meet, back arms a
  single-single meet).  Mixed collisions have no tile, which forces the
  facings of consecutive crosses along any line to alternate.
* Across its other axis a meet passes one arrow unchanged — the line of
  the next level crossing there.  At a double-double meet that arrow
  must point *away* from the absorbed side bit: it is the arm of the
  square's center cross exiting through the border's midpoint.  This is
  the rule that glues consecutive levels: a square of side 2^n is forced
  to carry a cross of the next level at its center.
* A 2-color parity component on every edge pins the first level: cells
  at odd-odd positions are crosses, their horizontal and vertical
  neighbors are meets, and the remaining quarter of cells is free to
  take any role, which is where the hierarchy recurses.

The expansion below yields 104 tiles; the count is pinned by a test.
Squares of every tested size admit tilings while no torus does, which is
the machine-checkable shadow of aperiodicity at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TileSet, make_tileset, normalize_tileset
from .errors import InvalidInput
from .solve import SAT, UNKNOWN, UNSAT, SearchBudget, solve_rectangle, solve_torus

ROBINSON_TILE_COUNT = 104

_OPP = {"N": "S", "S": "N", "E": "W", "W": "E"}

# a signal is (direction, multiplicity, side bit); horizontal signals have
# direction in {E, W} and side in {N, S}, vertical ones the other way round


@dataclass(frozen=True)
class RobinsonSet:
    tileset: TileSet
    tile_roles: tuple[str, ...]


def _signal_tiles():
    """All (kind, west, east, south, north, role) signal patterns,
    parity-free.  Arrows on a cross point outward; arrows at a meet
    point inward along the meet's principal axis."""
    out = []
    for fx in ("E", "W"):
        for fy in ("N", "S"):
            west = ("W", "d" if fx == "W" else "s", fy)
            east = ("E", "d" if fx == "E" else "s", fy)
            south = ("S", "d" if fy == "S" else "s", fx)
            north = ("N", "d" if fy == "N" else "s", fx)
            out.append(("cross", west, east, south, north,
                        f"cross facing {fy}{fx}"))
    for mult in ("d", "s"):
        for side in ("N", "S"):
            west = ("E", mult, side)
            east = ("W", mult, side)
            # double heads collide on a square's border: the perpendicular
            # arrow is the center's arm and must exit away from the square
            dirs = (_OPP[side],) if mult == "d" else ("N", "S")
            for dv in dirs:
                for mv in ("d", "s"):
                    for tau in ("E", "W"):
                        v = (dv, mv, tau)
                        out.append(("hmeet", west, east, v, v,
                                    f"h-meet {mult}{mult} side {side}, "
                                    f"passing {mv}{dv}"))
        for side in ("E", "W"):
            south = ("N", mult, side)
            north = ("S", mult, side)
            dirs = (_OPP[side],) if mult == "d" else ("E", "W")
            for dh in dirs:
                for mh in ("d", "s"):
                    for tau in ("N", "S"):
                        h = (dh, mh, tau)
                        out.append(("vmeet", h, h, south, north,
                                    f"v-meet {mult}{mult} side {side}, "
                                    f"passing {mh}{dh}"))
    return out


def robinson_tileset() -> RobinsonSet:
    """Deterministic construction of the nested-squares set as Wang tiles."""
    # which parities may host which role: odd-odd cells are first-level
    # crosses, their vertical neighbors absorb the columns' collisions,
    # their horizontal neighbors the rows'; even-even cells recurse and
    # may take any role
    allowed = {
        "cross": [(1, 1), (0, 0)],
        "vmeet": [(1, 0), (0, 0)],
        "hmeet": [(0, 1), (0, 0)],
    }

    color_ids: dict[tuple, int] = {}

    def cid(key: tuple) -> int:
        if key not in color_ids:
            color_ids[key] = len(color_ids)
        return color_ids[key]

    raw: list[tuple[int, int, int, int]] = []
    roles: list[str] = []
    for kind, w, e, s, n, desc in _signal_tiles():
        for (px, py) in allowed[kind]:
            # every edge carries both cell parities (x-parity flips across
            # vertical edges, y-parity across horizontal ones) plus the
            # signal, pinning a global 2x2 lattice
            west = cid(("h", 1 - px, py, w))
            east = cid(("h", px, py, e))
            south = cid(("v", px, 1 - py, s))
            north = cid(("v", px, py, n))
            raw.append((north, east, south, west))
            roles.append(f"{desc} at parity ({px},{py})")

    labels = {
        i: f"{axis}{px}{py}:{''.join(sig)}"
        for (axis, px, py, sig), i in color_ids.items()
    }
    ts = make_tileset("robinson", raw, num_colors=len(color_ids), labels=labels)
    # normalize_tileset sorts tiles; keep roles aligned by sorting the same way
    order = sorted(range(len(raw)), key=lambda i: ts.tiles[i])
    ts_sorted = normalize_tileset(ts)
    roles_sorted = tuple(roles[i] for i in order)
    return RobinsonSet(ts_sorted, roles_sorted)


@dataclass(frozen=True)
class EvidenceReport:
    """Desk-scale aperiodicity evidence: squares keep tiling while no
    torus does.  A genuine aperiodicity proof is out of scope."""

    largest_sat_square: int
    square_verdicts: tuple[tuple[int, str], ...]
    torus_verdicts: tuple[tuple[int, int, str], ...]
    periodic_found: tuple[int, int] | None
    budget_exhausted: bool

    @property
    def consistent_with_aperiodicity(self) -> bool:
        return self.periodic_found is None and self.largest_sat_square > 0


def aperiodicity_evidence(tileset: TileSet, max_square: int, max_period: int,
                          budget: SearchBudget = SearchBudget()) -> EvidenceReport:
    """Run the square/torus evidence suite against any tile set."""
    if max_square < 1 or max_period < 1:
        raise InvalidInput("bounds must be positive")
    squares = []
    largest = 0
    exhausted = False
    for n in range(1, max_square + 1):
        r = solve_rectangle(tileset, n, n, budget=budget)
        squares.append((n, r.status))
        if r.status == SAT:
            largest = n
        else:
            if r.status != UNSAT:
                exhausted = True
            break  # an UNSAT (or unknown) square rules out larger ones
    tori = []
    periodic = None
    for p in range(1, max_period + 1):
        for q in range(1, max_period + 1):
            r = solve_torus(tileset, p, q, budget=budget)
            tori.append((p, q, r.status))
            if r.status == SAT and periodic is None:
                periodic = (p, q)
            if r.status == UNKNOWN:
                exhausted = True
    return EvidenceReport(largest, tuple(squares), tuple(tori), periodic, exhausted)


def format_evidence(report: EvidenceReport) -> str:
    lines = [f"largest SAT square: {report.largest_sat_square}"]
    for n, st in report.square_verdicts:
        lines.append(f"square {n}x{n}: {st}")
    for p, q, st in report.torus_verdicts:
        lines.append(f"torus {p}x{q}: {st}")
    if report.periodic_found:
        p, q = report.periodic_found
        lines.append(f"verdict: not aperiodic (periodic tiling with periods {p}x{q})")
    elif report.budget_exhausted:
        lines.append("verdict: inconclusive (budget exhausted)")
    else:
        lines.append("verdict: consistent with aperiodicity at tested bounds")
    return "\n".join(lines) + "\n"
