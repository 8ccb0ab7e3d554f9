import itertools
import random

import pytest

from oracles import legal_torus_configs, tm_run, torus_config_legal
from shiftforge.compilers import (TileCompilation, TmSpec, decode_row,
                                  legal_blocks, sft_to_wang,
                                  tm_initial_boundary, tm_to_tileset)
from shiftforge.core import Pattern, SftSpec, validate_torus_tiling
from shiftforge.errors import InvalidInput, InvalidSpec
from shiftforge.solve import SAT, UNSAT, count_rectangle, enumerate_torus, solve_rectangle
from shiftforge.subshift import ExplicitWords, Subshift1dSpec, lift_1d

GOLDEN_FREE = SftSpec(("0", "1"), ())


def brute_legal_blocks(spec, kb):
    out = []
    for flat in itertools.product(spec.alphabet, repeat=kb * kb):
        block = tuple(flat[y * kb:(y + 1) * kb] for y in range(kb))
        bad = False
        for p in spec.forbidden:
            for y0 in range(kb - p.height + 1):
                for x0 in range(kb - p.width + 1):
                    if all(block[y0 + dy][x0 + dx] == p.cells[dy][dx]
                           for dy in range(p.height) for dx in range(p.width)):
                        bad = True
        if not bad:
            out.append(block)
    return out


def test_singleton_alphabet_gives_one_tile_all_sides_equal():
    comp = sft_to_wang(SftSpec(("a",), ()))
    assert len(comp.tileset.tiles) == 1
    t = comp.tileset.tiles[0]
    assert t.north == t.east == t.south == t.west
    assert comp.decode == ("a",)


def test_lifted_golden_word_spec_tile_count_matches_block_oracle():
    # lift of the binary spec forbidding "11": tiles = legal 2x2 blocks
    spec = lift_1d(Subshift1dSpec(("0", "1"), ExplicitWords(("11",))))
    comp = sft_to_wang(spec)
    oracle = brute_legal_blocks(spec, 2)
    assert len(comp.tileset.tiles) == len(oracle) == 3


def test_legal_blocks_matches_brute_force():
    rng = random.Random(2)
    for _ in range(20):
        a = tuple("ab"[: rng.randint(1, 2)])
        pats = []
        for _ in range(rng.randint(0, 3)):
            w, h = rng.randint(1, 2), rng.randint(1, 2)
            pats.append(Pattern(w, h, tuple(
                tuple(rng.choice(a) for _ in range(w)) for _ in range(h))))
        spec = SftSpec(a, tuple(pats))
        kb = max(spec.window, 2)
        assert legal_blocks(spec, kb) == brute_legal_blocks(spec, kb)


def test_decode_is_bottom_left_letter():
    spec = SftSpec(("0", "1"), (Pattern.from_rows(["11"]),))
    comp = sft_to_wang(spec)
    for i, prov in enumerate(comp.provenance):
        rows = prov.removeprefix("block ").split("|")
        assert comp.decode[i] == rows[0][0]


def d_image_of_tori(comp, p, q):
    sols, complete = enumerate_torus(comp.tileset, p, q)
    assert complete
    return {
        tuple(tuple(comp.decode[i] for i in row) for row in t.cells)
        for t in sols
    }


def test_torus_correspondence_on_golden_spec():
    spec = lift_1d(Subshift1dSpec(("0", "1"), ExplicitWords(("11",))))
    comp = sft_to_wang(spec)
    for p, q in [(2, 2), (3, 2), (4, 4)]:
        assert d_image_of_tori(comp, p, q) == legal_torus_configs(spec, p, q)


def test_torus_correspondence_free_binary_shift():
    comp = sft_to_wang(GOLDEN_FREE)
    got = d_image_of_tori(comp, 2, 2)
    assert len(got) == 16  # every configuration legal
    for grid in got:
        assert torus_config_legal(GOLDEN_FREE, grid, 2, 2)


# --- Turing machines ----------------------------------------------------------


HALT_NOW = TmSpec(("h",), "h", ("0",), "0", {}, frozenset(["h"]))

INCREMENTER = TmSpec(
    ("q0", "q1"),
    "q0",
    ("0", "1"),
    "0",
    {("q0", "1"): ("q0", "1", "R"), ("q0", "0"): ("q1", "1", "L")},
    frozenset(["q1"]),
)


def test_tm_spec_invariants():
    with pytest.raises(InvalidSpec):
        TmSpec(("a", "a"), "a", ("0",), "0", {}, frozenset())
    with pytest.raises(InvalidSpec):
        TmSpec(("a",), "b", ("0",), "0", {}, frozenset())
    with pytest.raises(InvalidSpec):
        TmSpec(("a",), "a", ("0",), "1", {}, frozenset())
    with pytest.raises(InvalidSpec):
        TmSpec(("a",), "a", ("0",), "0",
               {("a", "0"): ("a", "0", "R")}, frozenset(["a"]))


def test_tape_width_must_be_positive():
    with pytest.raises(InvalidInput):
        tm_to_tileset(HALT_NOW, 0)


def run_and_check(tm, w, n, height, head=0, input_at=0):
    """Solve the forced-bottom-row rectangle and compare each row with the
    reference simulator."""
    comp = tm_to_tileset(tm, n)
    boundary = tm_initial_boundary(tm, comp, w, n, height, head=head,
                                   input_at=input_at)
    configs = tm_run(tm, w, n, head=head, input_at=input_at)
    r = solve_rectangle(comp.tileset, n, height, boundary=boundary)
    return comp, boundary, configs, r


def test_immediate_halt_machine():
    comp, boundary, configs, r = run_and_check(HALT_NOW, "", 3, 1)
    assert r.status == SAT
    assert decode_row(comp, r.tiling, 0) == configs[0] == ("h.0", "0", "0")
    # a halted head admits no row above it
    _, _, _, r2 = run_and_check(HALT_NOW, "", 3, 2)
    assert r2.status == UNSAT


def test_incrementer_rows_decode_to_simulator_configs():
    # q0 scans right over 1s, writes 1 on the first 0, halts moving left:
    # 3 configurations on input "1", then the halt row blocks growth
    comp, boundary, configs, r = run_and_check(INCREMENTER, "1", 4, 3)
    assert r.status == SAT
    assert len(configs) == 3
    for row in range(3):
        assert decode_row(comp, r.tiling, row) == configs[row]
    c = count_rectangle(comp.tileset, 4, 3, boundary=boundary)
    assert c.count == 1
    _, _, _, r4 = run_and_check(INCREMENTER, "1", 4, 4)
    assert r4.status == UNSAT


def test_head_running_off_tape_fails_closed():
    # on "11" with a 2-cell tape the incrementer walks off the right end
    comp = tm_to_tileset(INCREMENTER, 2)
    boundary = tm_initial_boundary(INCREMENTER, comp, "11", 2, 2)
    assert tm_run(INCREMENTER, "11", 2) is None
    assert solve_rectangle(comp.tileset, 2, 2, boundary=boundary).status == UNSAT


def test_boundary_rejects_unreachable_initial_configuration():
    # a 1-cell tape has no tile that can apply the only transition, so the
    # initial head color does not even exist: fail closed at boundary time
    comp = tm_to_tileset(INCREMENTER, 1)
    with pytest.raises(InvalidInput):
        tm_initial_boundary(INCREMENTER, comp, "1", 1, 2)


def test_initial_boundary_validates_input():
    comp = tm_to_tileset(INCREMENTER, 4)
    with pytest.raises(InvalidInput):
        tm_initial_boundary(INCREMENTER, comp, "11111", 4, 2)
    with pytest.raises(InvalidInput):
        tm_initial_boundary(INCREMENTER, comp, "1", 4, 2, head=9)
    with pytest.raises(InvalidInput):
        tm_initial_boundary(INCREMENTER, comp, "x", 4, 2)


def test_compilation_decode_must_be_total():
    comp = tm_to_tileset(HALT_NOW, 2)
    with pytest.raises(InvalidSpec):
        TileCompilation(comp.tileset, comp.decode[:-1], comp.provenance)
