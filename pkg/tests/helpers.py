"""Shared test utilities, most importantly the brute-force solution oracle."""

from itertools import product

from minelogic import Board, board_neighbors


def brute_force_rows(board: Board, pins=()):
    """All satisfying assignments by exhaustive 2^n filtration.

    Deliberately independent of the production solver: no propagation, no
    pruning, just iterate every valuation of the covered cells in canonical
    order (mine sorts before clear) and keep the ones where every clue is met
    exactly.  Only usable for small boards.
    """
    cells = board.covered
    index = {c: i for i, c in enumerate(cells)}
    clue_info = []
    for coord, value in board.clues:
        members = [index[n] for n in board_neighbors(board, coord)
                   if board.cells[n] is None]
        clue_info.append((value, members))
    pinned = {index[p.target]: p.value for p in pins}
    rows = []
    for row in product((True, False), repeat=len(cells)):
        if any(row[i] != v for i, v in pinned.items()):
            continue
        if all(sum(row[m] for m in members) == value for value, members in clue_info):
            rows.append(row)
    return cells, rows


def bits(s: str) -> tuple[bool, ...]:
    """'M.M' -> (True, False, True)."""
    return tuple(ch == "M" for ch in s)
