import pytest
from hypothesis import given
from hypothesis import strategies as st

from minelogic import (COVERED, Annotation, Board, GridKind, board_neighbors,
                       neighbors, validate_board)
from minelogic.boards import example_uncertainty
from minelogic.errors import UnknownCoord

coords = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def test_square_neighborhood_is_3x3_ring():
    got = neighbors(GridKind.SQUARE8, (0, 0))
    assert len(got) == 8
    assert set(got) == {(dc, dr) for dc in (-1, 0, 1) for dr in (-1, 0, 1)} - {(0, 0)}


def test_square_excludes_center_includes_diagonals():
    got = neighbors(GridKind.SQUARE8, (5, 5))
    assert (4, 4) in got and (6, 6) in got and (5, 5) not in got


def test_hex_neighborhood_axial_offsets():
    got = neighbors(GridKind.HEX6, (2, 2))
    assert set(got) == {(3, 2), (1, 2), (2, 3), (2, 1), (3, 1), (1, 3)}
    assert len(got) == 6


def test_neighbor_order_is_row_major():
    got = neighbors(GridKind.SQUARE8, (0, 0))
    assert got == sorted(got, key=lambda c: (c[1], c[0]))


@given(coords, st.sampled_from(list(GridKind)))
def test_neighbor_counts(c, grid):
    assert len(neighbors(grid, c)) == (8 if grid is GridKind.SQUARE8 else 6)


@given(coords, coords, st.sampled_from(list(GridKind)))
def test_neighbors_symmetric(c, d, grid):
    assert (d in neighbors(grid, c)) == (c in neighbors(grid, d))


def test_board_neighbors_clips_to_footprint():
    b = Board(GridKind.SQUARE8, {(0, 0): COVERED, (1, 0): COVERED,
                                 (0, 1): COVERED, (1, 1): COVERED})
    assert board_neighbors(b, (0, 0)) == [(1, 0), (0, 1), (1, 1)]


def test_board_neighbors_interior_cell_of_uncertainty_board():
    b = example_uncertainty()
    assert len(board_neighbors(b, (2, 2))) == 8


def test_board_neighbors_isolated_cell():
    b = Board(GridKind.SQUARE8, {(3, 3): COVERED})
    assert board_neighbors(b, (3, 3)) == []


def test_board_neighbors_unknown_coord():
    b = Board(GridKind.SQUARE8, {(0, 0): COVERED})
    with pytest.raises(UnknownCoord):
        board_neighbors(b, (9, 9))


def test_validate_flags_out_of_range_clues():
    sq = Board(GridKind.SQUARE8, {(0, 0): 9})
    assert any(v.severity == "error" for v in validate_board(sq))
    hx = Board(GridKind.HEX6, {(0, 0): 7})
    assert any(v.severity == "error" for v in validate_board(hx))
    ok = Board(GridKind.HEX6, {(0, 0): 6})
    assert not any(v.severity == "error" for v in validate_board(ok))


def test_validate_flags_bad_annotations():
    b = Board(GridKind.SQUARE8, {(0, 0): 1, (1, 0): COVERED},
              (Annotation((0, 0), label="x"),))
    assert any("revealed" in v.message for v in validate_board(b))
    b2 = Board(GridKind.SQUARE8, {(0, 0): COVERED}, (Annotation((5, 5), forced_mine=True),))
    assert any("absent" in v.message for v in validate_board(b2))


def test_validate_warns_on_unsatisfiable_clue():
    b = Board(GridKind.SQUARE8, {(0, 0): 2, (1, 0): COVERED})
    vs = validate_board(b)
    assert vs and all(v.severity == "warning" for v in vs)


def test_uncertainty_board_is_valid():
    assert validate_board(example_uncertainty()) == []
