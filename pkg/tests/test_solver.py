import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minelogic import (CLEAR, COVERED, MINE, Board, Contradiction, GridKind,
                       PartialAssignment, Pin, check_claims, count_solutions,
                       dump_solutions, enumerate_solutions, forced_cells,
                       project_solutions, propagate)
from minelogic.boards import UNCERTAINTY_LABELS, example_uncertainty, label_cell
from minelogic.errors import EmptySolutionSet, LimitExceeded, PinError

from helpers import bits, brute_force_rows

# The published hand enumeration of the uncertainty board, columns B..R then
# A.  Copied verbatim.  Exhaustive enumeration shows the hand table is faulty:
# eight of its rows violate the board's own clues and one valid layout is
# missing, so the true solution count is 23, not 30.
UNCERTAINTY_TABLE = [
    "M..MM..M...M..M...",
    "M..M.M..M..M..M...",
    "M..M.M...M..M.M...",
    "M..M.M....M...M...",
    ".M.M..M....M..M...",
    ".M..M..M...M..M...",
    ".M...M..M..M..M...",
    ".M...M...M..M.M...",
    ".M...M....M...M...",
    "..MM..M....MM..M..",
    "..MM..M....M.M..M.",
    "..MM..M....M.M...M",
    "..MM..M....M..M..M",
    "..M.M..M...MM..M..",
    "..M.M..M...M.M..M.",
    "..M.M..M...M.M...M",
    "..M.M..M...M..M..M",
    "..M..M..M..MM..M..",
    "..M..M..M..M.M..M.",
    "..M..M..M..M.M...M",
    "..M..M..M..M..M..M",
    "..M..M...M..MM..M.",
    "..M..M...M..MM...M",
    "..M..M...M..M.M..M",
    "..M..M....M.MM..M.",
    "..M..M....M.MM...M",
    "..M..M....M.M.M..M",
    "..M..M....M..M..M.",
    "..M..M....M..M...M",
    "..M..M....M...M..M",
]


# Rows of the hand table that contradict the clue layout.  In each, either
# the top-row "1" adjacent to {R, Q, P} sees no mine, or the top-right "2"
# adjacent to {L, M, P, O, N} sees three.
UNCERTAINTY_TABLE_BOGUS = [
    "..MM..M....M.M...M",
    "..M.M..M...M.M...M",
    "..M..M..M..M.M...M",
    "..M..M...M..MM...M",
    "..M..M....M.MM..M.",
    "..M..M....M.MM...M",
    "..M..M....M.M.M..M",
    "..M..M....M..M...M",
]
# A consistent layout (mines at D, G, L, N, Q) the hand table omits.
UNCERTAINTY_TABLE_OMITTED = "..M..M....M.M..M.."


def table_cells(board):
    return [label_cell(board, name) for name in UNCERTAINTY_LABELS]


def test_uncertainty_board_has_23_solutions():
    assert count_solutions(example_uncertainty()) == 23


def test_uncertainty_solutions_match_corrected_table():
    board = example_uncertainty()
    sols = enumerate_solutions(board)
    cells = table_cells(board)
    got = project_solutions(sols, cells)
    want = ({bits(row) for row in UNCERTAINTY_TABLE}
            - {bits(row) for row in UNCERTAINTY_TABLE_BOGUS})
    want.add(bits(UNCERTAINTY_TABLE_OMITTED))
    assert len(got) == 23
    assert got == want


def test_bogus_table_rows_really_violate_a_clue():
    # Pin a full bogus row; the board must admit no solution for it.
    board = example_uncertainty()
    cells = table_cells(board)
    for row in UNCERTAINTY_TABLE_BOGUS:
        pins = [Pin(c, v) for c, v in zip(cells, bits(row))]
        assert count_solutions(board, pins) == 0, row
    pins = [Pin(c, v) for c, v in zip(cells, bits(UNCERTAINTY_TABLE_OMITTED))]
    assert count_solutions(board, pins) == 1


def test_uncertainty_no_cell_is_forced():
    sols = enumerate_solutions(example_uncertainty())
    assert forced_cells(sols) == {}


def test_uncertainty_propagation_decides_nothing():
    board = example_uncertainty()
    result = propagate(board)
    assert isinstance(result, PartialAssignment)
    assert result.decided == {}
    assert len(result.undecided) == 18


def test_propagate_rule_all_clear():
    b = Board(GridKind.SQUARE8,
              {(0, 0): 0, (1, 0): COVERED, (0, 1): COVERED, (1, 1): COVERED})
    res = propagate(b)
    assert res.decided == {(1, 0): CLEAR, (0, 1): CLEAR, (1, 1): CLEAR}


def test_propagate_rule_all_mines():
    b = Board(GridKind.SQUARE8,
              {(0, 0): 3, (1, 0): COVERED, (0, 1): COVERED, (1, 1): COVERED})
    res = propagate(b)
    assert res.decided == {(1, 0): MINE, (0, 1): MINE, (1, 1): MINE}


def test_propagate_detects_contradiction():
    b = Board(GridKind.SQUARE8, {(0, 0): 2, (1, 0): COVERED})
    res = propagate(b)
    assert isinstance(res, Contradiction)


def test_propagate_from_start_assignment():
    b = Board(GridKind.SQUARE8,
              {(0, 0): 1, (1, 0): COVERED, (0, 1): COVERED})
    res = propagate(b, PartialAssignment(decided={(1, 0): MINE}))
    assert res.decided[(0, 1)] is CLEAR


def test_center_clue_one_choose_one_of_eight():
    cells = {(c, r): COVERED for c in range(3) for r in range(3)}
    cells[(1, 1)] = 1
    assert count_solutions(Board(GridKind.SQUARE8, cells)) == 8


def test_empty_board_has_one_solution():
    assert count_solutions(Board(GridKind.SQUARE8, {})) == 1


def test_unsatisfiable_board_has_zero_solutions():
    b = Board(GridKind.SQUARE8, {(0, 0): 2, (1, 0): COVERED})
    assert count_solutions(b) == 0


def test_pins_restrict_solutions():
    board = example_uncertainty()
    b_cell = label_cell(board, "B")
    pinned = enumerate_solutions(board, [Pin(b_cell, MINE)])
    assert 0 < len(pinned) < 30
    allrows = set(enumerate_solutions(board).rows)
    assert set(pinned.rows) <= allrows


def test_pin_mine_forces_paper_deductions():
    # Setting B as a mine forces C, D, A, R, Q clear, P and E mined.
    board = example_uncertainty()
    sols = enumerate_solutions(board, [Pin(label_cell(board, "B"), MINE)])
    forced = forced_cells(sols)
    for name in "CDARQ":
        assert forced[label_cell(board, name)] is CLEAR
    for name in "PE":
        assert forced[label_cell(board, name)] is MINE


def test_pin_on_clue_cell_rejected():
    board = example_uncertainty()
    with pytest.raises(PinError):
        enumerate_solutions(board, [Pin((1, 1), MINE)])


def test_forced_cells_single_zero_clue():
    b = Board(GridKind.SQUARE8, {(0, 0): 0, (1, 0): COVERED, (1, 1): COVERED})
    sols = enumerate_solutions(b)
    assert forced_cells(sols) == {(1, 0): CLEAR, (1, 1): CLEAR}


def test_forced_cells_requires_solutions():
    b = Board(GridKind.SQUARE8, {(0, 0): 2, (1, 0): COVERED})
    with pytest.raises(EmptySolutionSet):
        forced_cells(enumerate_solutions(b))


def test_project_empty_tuple():
    sols = enumerate_solutions(example_uncertainty())
    assert project_solutions(sols, []) == {()}


def test_canonical_order_strictly_increasing():
    sols = enumerate_solutions(example_uncertainty())
    # mine sorts before clear: encode mine=0 so lexicographic == listed order
    keys = [tuple(0 if v else 1 for v in row) for row in sols.rows]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_solution_limit_enforced():
    cells = {(c, 0): COVERED for c in range(10)}
    with pytest.raises(LimitExceeded):
        enumerate_solutions(Board(GridKind.SQUARE8, cells), max_solutions=5)


def test_covered_limit_enforced():
    cells = {(c, 0): COVERED for c in range(10)}
    with pytest.raises(LimitExceeded):
        count_solutions(Board(GridKind.SQUARE8, cells), max_covered=4)


def test_dump_format():
    b = Board(GridKind.SQUARE8, {(0, 0): 1, (1, 0): COVERED, (0, 1): COVERED})
    out = dump_solutions(enumerate_solutions(b))
    lines = out.splitlines()
    assert lines[0] == "cells 1,0 0,1"
    assert set(lines[1:]) == {"M.", ".M"}
    assert lines[1] == "M."  # mine-first canonical order


def test_check_claims_detects_wrong_mine():
    b = Board(GridKind.SQUARE8, {(0, 0): 0, (1, 0): COVERED},
              (__import__("minelogic").Annotation((1, 0), forced_mine=True),))
    report = check_claims(b)
    assert not report.ok


# ---------------------------------------------------------------- oracle ---

coord_st = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def random_boards(draw):
    grid = draw(st.sampled_from(list(GridKind)))
    n_cov = draw(st.integers(0, 10))
    covered = draw(st.lists(coord_st, min_size=n_cov, max_size=n_cov, unique=True))
    n_clue = draw(st.integers(0, 6))
    clue_coords = draw(st.lists(coord_st, min_size=n_clue, max_size=n_clue, unique=True))
    cells = {c: COVERED for c in covered}
    for c in clue_coords:
        if c not in cells:
            cells[c] = draw(st.integers(0, grid.max_clue))
    return Board(grid, cells)


@settings(max_examples=120, deadline=None)
@given(random_boards())
def test_enumeration_matches_brute_force(board):
    cells, want = brute_force_rows(board)
    sols = enumerate_solutions(board)
    assert tuple(cells) == sols.coords
    assert set(sols.rows) == set(want)
    assert len(sols.rows) == len(want)


@settings(max_examples=60, deadline=None)
@given(random_boards(), st.data())
def test_pin_monotonicity(board, data):
    covered = board.covered
    if not covered:
        return
    target = data.draw(st.sampled_from(covered))
    value = data.draw(st.booleans())
    base = set(enumerate_solutions(board).rows)
    pinned = set(enumerate_solutions(board, [Pin(target, value)]).rows)
    assert pinned <= base


@settings(max_examples=60, deadline=None)
@given(random_boards())
def test_propagation_is_sound(board):
    res = propagate(board)
    sols = enumerate_solutions(board)
    if isinstance(res, Contradiction):
        assert len(sols) == 0
        return
    for coord, value in res.decided.items():
        i = sols.coords.index(coord)
        assert all(row[i] == value for row in sols.rows)
