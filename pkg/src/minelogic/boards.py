"""Small stock boards used by tests, demos and the CLI docs."""

from __future__ import annotations

from .grid import COVERED, Annotation, Board, GridKind

# Column order used by the classic uncertainty table for the board below.
UNCERTAINTY_LABELS = "BCDEFGHIJKLMNOPQRA"


def example_uncertainty() -> Board:
    """A 6x5 cut-out of a 9x9 beginner board where logic alone gets stuck.

    Twelve revealed clues in a 4x3 block, surrounded by a ring of 18 covered
    cells named A..R.  The ring admits exactly 30 consistent mine layouts and
    no ring cell has the same value in all of them.
    """
    clue_rows = {
        1: (2, 1, 1, 1),
        2: (1, 0, 0, 1),
        3: (1, 1, 1, 2),
    }
    cells: dict = {}
    for row, values in clue_rows.items():
        for i, v in enumerate(values):
            cells[(1 + i, row)] = v
    ring = [(c, 0) for c in range(6)] + [(c, 4) for c in range(6)] + \
           [(0, r) for r in (1, 2, 3)] + [(5, r) for r in (1, 2, 3)]
    for coord in ring:
        cells[coord] = COVERED
    names = {
        (0, 0): "E", (1, 0): "F", (2, 0): "G", (3, 0): "H", (4, 0): "I", (5, 0): "J",
        (0, 1): "D", (5, 1): "K",
        (0, 2): "C", (5, 2): "L",
        (0, 3): "B", (5, 3): "M",
        (0, 4): "A", (1, 4): "R", (2, 4): "Q", (3, 4): "P", (4, 4): "O", (5, 4): "N",
    }
    annotations = tuple(Annotation(target=c, label=n) for c, n in names.items())
    return Board(GridKind.SQUARE8, cells, annotations)


def label_cell(board: Board, name: str, polarity: str = "plain"):
    """First cell carrying ``name`` with the given polarity (canonical order)."""
    groups = board.labels()[name]
    return groups[polarity][0]
