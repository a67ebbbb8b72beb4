import pytest
from hypothesis import given
from hypothesis import strategies as st

from minelogic import (COVERED, Annotation, Board, GridKind, parse_board,
                       serialize_board)
from minelogic.boards import example_uncertainty
from minelogic.errors import ParseError, ValidationError


def test_round_trip_uncertainty_board():
    b = example_uncertainty()
    assert parse_board(serialize_board(b)) == b


def test_parse_single_clue_line():
    b = parse_board("grid square\ncell 3 1 clue 2\n")
    assert b.cells[(3, 1)] == 2


def test_parse_rejects_malformed_cell():
    with pytest.raises(ParseError) as err:
        parse_board("grid square\ncell x y\n")
    assert err.value.line_no == 2


def test_parse_rejects_missing_header():
    with pytest.raises(ParseError):
        parse_board("cell 0 0 covered\n")


def test_parse_rejects_duplicate_cell():
    with pytest.raises(ParseError):
        parse_board("grid hex\ncell 0 0 covered\ncell 0 0 clue 1\n")


def test_parse_rejects_out_of_range_clue():
    with pytest.raises(ValidationError):
        parse_board("grid hex\ncell 0 0 clue 7\n")


def test_comments_and_blank_lines_ignored():
    text = "# header comment\ngrid square\n\ncell 0 0 covered  # trailing\n"
    b = parse_board(text)
    assert b.cells == {(0, 0): COVERED}


def test_serialization_is_sorted_and_stable():
    b = Board(GridKind.SQUARE8, {(1, 1): 3, (0, 0): COVERED, (1, 0): COVERED})
    out = serialize_board(b)
    assert out.index("cell 0 0") < out.index("cell 1 0") < out.index("cell 1 1")
    assert serialize_board(parse_board(out)) == out


@st.composite
def boards(draw):
    grid = draw(st.sampled_from(list(GridKind)))
    n = draw(st.integers(1, 12))
    coords = draw(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
                           min_size=n, max_size=n, unique=True))
    cells = {}
    for c in coords:
        kind = draw(st.integers(-1, grid.max_clue))
        cells[c] = COVERED if kind < 0 else kind
    covered = [c for c, v in cells.items() if v is COVERED]
    annotations = []
    for c in covered:
        if draw(st.booleans()):
            annotations.append(Annotation(c, label=draw(st.sampled_from("xyz")),
                                          polarity=draw(st.sampled_from(["plain", "primed"]))))
        if draw(st.booleans()):
            annotations.append(Annotation(c, forced_mine=True))
    return Board(grid, cells, tuple(annotations))


@given(boards())
def test_round_trip_random_boards(b):
    assert parse_board(serialize_board(b)) == b
