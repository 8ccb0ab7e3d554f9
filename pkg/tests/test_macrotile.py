import pytest

from shiftforge.aperiodic import robinson_tileset
from shiftforge.core import Tile, make_tileset, validate_tiling
from shiftforge.errors import InvalidInput
from shiftforge.macrotile import (BUDGET_EXCEEDED, TileSetMap,
                                  check_isomorphism, find_simulation,
                                  macro_tiles, preserves_adjacency)
from shiftforge.solve import SearchBudget, count_rectangle


def test_single_free_tile_macro():
    ts = make_tileset("one", [(0, 0, 0, 0)])
    m = macro_tiles(ts, 2)
    assert len(m.blocks) == 1
    t = m.tileset.tiles[0]
    # one distinct border sequence per axis
    assert t.north == t.south and t.east == t.west
    assert m.border_sequences(0)["north"] == (0, 0)


def test_two_free_tiles_macro_count():
    ts = make_tileset("two", [(0, 0, 0, 0), (0, 1, 0, 1)])
    # horizontal chaining is restricted, vertical is free
    m = macro_tiles(ts, 2)
    assert len(m.blocks) == count_rectangle(ts, 2, 2).count
    for b in m.blocks:
        assert validate_tiling(ts, b)


def test_macro_blocks_listed_lexicographically():
    ts = make_tileset("free", [(0, 0, 0, 0), (1, 1, 1, 1)])
    m = macro_tiles(ts, 2)
    flats = [sum(b.cells, ()) for b in m.blocks]
    assert flats == sorted(flats)
    assert len(m.blocks) == 2  # colors must agree across the whole block


def test_macro_adjacency_matches_base_edges():
    # macro-tiles match iff all base edges on the shared border match
    ts = robinson_tileset().tileset
    m = macro_tiles(ts, 2, max_tiles=2000)
    assert m != BUDGET_EXCEEDED
    assert len(m.blocks) == count_rectangle(ts, 2, 2).count
    a, b = 0, 1
    ta, tb = m.tileset.tiles[a], m.tileset.tiles[b]
    same = m.border_sequences(a)["east"] == m.border_sequences(b)["west"]
    assert (ta.east == tb.west) == same


def test_macro_budget_and_cap():
    ts = make_tileset("free", [(0, 0, 0, 0), (1, 1, 1, 1)])
    assert macro_tiles(ts, 2, max_tiles=1) == BUDGET_EXCEEDED
    assert macro_tiles(ts, 3, budget=SearchBudget(max_nodes=1)) == BUDGET_EXCEEDED
    with pytest.raises(InvalidInput):
        macro_tiles(ts, 0)


def test_identity_simulation_found():
    ts = make_tileset("t", [(0, 1, 0, 1), (1, 0, 1, 0)])
    m = find_simulation(ts, ts)
    assert m is not None
    assert preserves_adjacency(m)
    # identity is the least adjacency-preserving self-map here
    assert m.assignment == (0, 0) or preserves_adjacency(
        TileSetMap(ts, ts, (0, 1)))


def test_simulation_none_when_target_too_rigid():
    # source tiles self-stack vertically; target tile does not
    src = make_tileset("s", [(0, 0, 0, 0)])
    tgt = make_tileset("t", [(0, 1, 1, 0)])
    assert find_simulation(src, tgt) is None


def test_simulation_requires_nonempty_sets():
    ts = make_tileset("t", [(0, 0, 0, 0)])
    empty = make_tileset("e", [])
    with pytest.raises(InvalidInput):
        find_simulation(ts, empty)


def test_isomorphism_under_color_permutation():
    a = make_tileset("a", [(0, 1, 0, 1), (1, 0, 1, 0)])
    # swap colors 0 <-> 1: same adjacency structure
    b = make_tileset("b", [(1, 0, 1, 0), (0, 1, 0, 1)])
    m = check_isomorphism(a, b)
    assert m is not None
    assert sorted(m.assignment) == [0, 1]
    back = check_isomorphism(b, a)
    assert back is not None


def test_isomorphism_rejects_different_profiles():
    a = make_tileset("a", [(0, 0, 0, 0)])  # self-stacking both axes
    b = make_tileset("b", [(0, 1, 1, 0)])  # no self-adjacency at all
    assert check_isomorphism(a, b) is None
    c = make_tileset("c", [(0, 0, 0, 0), (1, 1, 1, 1)])
    assert check_isomorphism(a, c) is None  # size mismatch


def test_isomorphism_reflects_adjacency_unlike_simulation():
    # a's tiles are never horizontally adjacent (east 0 vs west 1); mapping
    # both onto one free tile is a simulation but not an isomorphism
    a = make_tileset("a", [(0, 0, 0, 1), (1, 0, 1, 1)])
    free = make_tileset("f", [(0, 0, 0, 0), (1, 1, 1, 1)])
    assert find_simulation(a, free) is not None
    assert check_isomorphism(a, free) is None
