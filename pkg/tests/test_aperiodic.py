import pytest

from shiftforge.aperiodic import (ROBINSON_TILE_COUNT, aperiodicity_evidence,
                                  format_evidence, robinson_tileset)
from shiftforge.core import make_tileset, normalize_tileset, validate_tiling
from shiftforge.errors import InvalidInput
from shiftforge.solve import SAT, UNSAT, solve_rectangle, solve_torus


def test_tile_count_and_normal_form():
    rs = robinson_tileset()
    assert len(rs.tileset.tiles) == ROBINSON_TILE_COUNT
    assert normalize_tileset(rs.tileset) == rs.tileset
    assert len(rs.tile_roles) == ROBINSON_TILE_COUNT


def test_construction_is_deterministic():
    assert robinson_tileset() == robinson_tileset()


def test_roles_stay_aligned_with_tiles():
    rs = robinson_tileset()
    # parity is recoverable from both the role text and the color labels;
    # they must agree tile by tile
    for tile, role in zip(rs.tileset.tiles, rs.tile_roles):
        px, py = role.rsplit("(", 1)[1][:3:2]
        north_label = rs.tileset.colors[tile.north].label
        assert north_label.startswith(f"v{px}{py}:")


def test_squares_tile_up_to_12():
    ts = robinson_tileset().tileset
    for n in (1, 2, 4, 7, 12):
        r = solve_rectangle(ts, n, n)
        assert r.status == SAT
        assert validate_tiling(ts, r.tiling)


def test_no_small_torus():
    ts = robinson_tileset().tileset
    for p in range(1, 5):
        for q in range(1, 5):
            assert solve_torus(ts, p, q).status == UNSAT


def test_evidence_report_on_builtin_set():
    ts = robinson_tileset().tileset
    rep = aperiodicity_evidence(ts, max_square=4, max_period=2)
    assert rep.consistent_with_aperiodicity
    assert rep.largest_sat_square == 4
    assert rep.periodic_found is None
    assert not rep.budget_exhausted
    text = format_evidence(rep)
    assert text.endswith("verdict: consistent with aperiodicity at tested bounds\n")


def test_evidence_flags_periodic_control_set():
    ts = make_tileset("free", [(0, 0, 0, 0)])
    rep = aperiodicity_evidence(ts, max_square=3, max_period=2)
    assert rep.periodic_found == (1, 1)
    assert not rep.consistent_with_aperiodicity
    assert "not aperiodic" in format_evidence(rep)


def test_evidence_rejects_bad_bounds():
    ts = make_tileset("free", [(0, 0, 0, 0)])
    with pytest.raises(InvalidInput):
        aperiodicity_evidence(ts, 0, 2)
