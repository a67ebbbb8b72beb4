"""Text format for boards.

Line-oriented UTF-8::

    grid square|hex
    cell <col> <row> clue <n>
    cell <col> <row> covered
    label <col> <row> <name> plain|primed
    mine <col> <row>

``#`` starts a comment.  Serialization emits the header, then cells sorted by
(row, col), then labels, then mines, so output is byte-stable and
``parse_board(serialize_board(b)) == b`` for every valid board.
"""

from __future__ import annotations

from .errors import ParseError, ValidationError
from .grid import COVERED, Annotation, Board, GridKind, validate_board


def serialize_board(b: Board) -> str:
    lines = [f"grid {b.grid.value}"]
    for (col, row), value in sorted(b.cells.items(), key=lambda cv: (cv[0][1], cv[0][0])):
        if value is COVERED:
            lines.append(f"cell {col} {row} covered")
        else:
            lines.append(f"cell {col} {row} clue {value}")
    labeled = [a for a in b.annotations if a.label is not None]
    for a in sorted(labeled, key=Annotation.sort_key):
        col, row = a.target
        lines.append(f"label {col} {row} {a.label} {a.polarity}")
    mined = sorted({a.target for a in b.annotations if a.forced_mine},
                   key=lambda c: (c[1], c[0]))
    for col, row in mined:
        lines.append(f"mine {col} {row}")
    return "\n".join(lines) + "\n"


def _int(tok: str, line_no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line_no, f"expected integer, got {tok!r}") from None


def parse_board(text: str) -> Board:
    grid: GridKind | None = None
    cells: dict = {}
    annotations: list[Annotation] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "grid":
            if grid is not None:
                raise ParseError(line_no, "duplicate grid header")
            if len(parts) != 2 or parts[1] not in ("square", "hex"):
                raise ParseError(line_no, "expected 'grid square' or 'grid hex'")
            grid = GridKind(parts[1])
            continue
        if grid is None:
            raise ParseError(line_no, "grid header must come first")
        if kw == "cell":
            if len(parts) == 4 and parts[3] == "covered":
                coord = (_int(parts[1], line_no), _int(parts[2], line_no))
                value = COVERED
            elif len(parts) == 5 and parts[3] == "clue":
                coord = (_int(parts[1], line_no), _int(parts[2], line_no))
                value = _int(parts[4], line_no)
            else:
                raise ParseError(line_no, f"malformed cell line {line!r}")
            if coord in cells:
                raise ParseError(line_no, f"duplicate cell {coord}")
            cells[coord] = value
        elif kw == "label":
            if len(parts) != 5 or parts[4] not in ("plain", "primed"):
                raise ParseError(line_no, f"malformed label line {line!r}")
            annotations.append(Annotation(
                target=(_int(parts[1], line_no), _int(parts[2], line_no)),
                label=parts[3], polarity=parts[4]))
        elif kw == "mine":
            if len(parts) != 3:
                raise ParseError(line_no, f"malformed mine line {line!r}")
            annotations.append(Annotation(
                target=(_int(parts[1], line_no), _int(parts[2], line_no)),
                forced_mine=True))
        else:
            raise ParseError(line_no, f"unknown keyword {kw!r}")
    if grid is None:
        raise ParseError(1, "missing grid header")
    board = Board(grid, cells, tuple(annotations))
    errors = [v for v in validate_board(board) if v.severity == "error"]
    if errors:
        raise ValidationError("; ".join(f"{v.coord}: {v.message}" for v in errors))
    return board
