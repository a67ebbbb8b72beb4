"""Board data model: grid kinds, coordinates, cells, annotations.

Coordinates are ``(col, row)`` integer pairs.  On the square grid these are
ordinary x/y positions with 8-neighbourhoods.  On the hexagonal grid they are
axial coordinates ``(q, r)`` for a pointy-top lattice: row r shifts half a
cell horizontally per step, so the six neighbours of a cell are the axial
offsets below.  Boards are immutable after construction and all operations
here are pure functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import UnknownCoord

Coord = tuple[int, int]

# Cell payloads: an int is a revealed clue, COVERED marks an unrevealed cell.
COVERED = None
Cell = int | None

_SQUARE_OFFSETS = tuple(
    sorted(((dc, dr) for dc in (-1, 0, 1) for dr in (-1, 0, 1) if (dc, dr) != (0, 0)),
           key=lambda d: (d[1], d[0]))
)
_HEX_OFFSETS = tuple(
    sorted(((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)),
           key=lambda d: (d[1], d[0]))
)


class GridKind(enum.Enum):
    """The two supported lattices."""

    SQUARE8 = "square"
    HEX6 = "hex"

    @property
    def max_clue(self) -> int:
        return 8 if self is GridKind.SQUARE8 else 6

    @property
    def offsets(self) -> tuple[Coord, ...]:
        return _SQUARE_OFFSETS if self is GridKind.SQUARE8 else _HEX_OFFSETS


def neighbors(grid: GridKind, c: Coord) -> list[Coord]:
    """All lattice neighbours of ``c``, ordered by (row, col)."""
    col, row = c
    return [(col + dc, row + dr) for dc, dr in grid.offsets]


@dataclass(frozen=True)
class Annotation:
    """A marker on a covered cell.

    ``label``/``polarity`` tie the cell into a named signal family (the
    primed polarity is the complement carrier).  ``forced_mine`` records the
    claim that the cell is a mine in every consistent assignment; the solver
    verifies such claims, it never assumes them.
    """

    target: Coord
    label: str | None = None
    polarity: str = "plain"  # "plain" | "primed"
    forced_mine: bool = False

    def sort_key(self):
        return (self.target[1], self.target[0], self.label or "", self.polarity)


@dataclass(frozen=True)
class Board:
    """A grid kind plus a finite footprint of cells.

    Coordinates absent from ``cells`` are outside the board and contribute
    zero mines to every adjacent clue.
    """

    grid: GridKind
    cells: dict[Coord, Cell]
    annotations: tuple[Annotation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "annotations",
                           tuple(sorted(self.annotations, key=Annotation.sort_key)))

    def __eq__(self, other):
        if not isinstance(other, Board):
            return NotImplemented
        return (self.grid is other.grid and self.cells == other.cells
                and self.annotations == other.annotations)

    def __hash__(self):
        return hash((self.grid, tuple(sorted(self.cells.items())), self.annotations))

    @property
    def covered(self) -> list[Coord]:
        """Covered coordinates in canonical (row, col) order."""
        return sorted((c for c, v in self.cells.items() if v is COVERED),
                      key=lambda c: (c[1], c[0]))

    @property
    def clues(self) -> list[tuple[Coord, int]]:
        return sorted(((c, v) for c, v in self.cells.items() if v is not COVERED),
                      key=lambda cv: (cv[0][1], cv[0][0]))

    def is_covered(self, c: Coord) -> bool:
        return c in self.cells and self.cells[c] is COVERED

    def forced_mines(self) -> list[Coord]:
        return sorted((a.target for a in self.annotations if a.forced_mine),
                      key=lambda c: (c[1], c[0]))

    def labels(self) -> dict[str, dict[str, list[Coord]]]:
        """name -> {"plain": [...], "primed": [...]} in canonical order."""
        out: dict[str, dict[str, list[Coord]]] = {}
        for a in self.annotations:
            if a.label is None:
                continue
            out.setdefault(a.label, {"plain": [], "primed": []})[a.polarity].append(a.target)
        for groups in out.values():
            for v in groups.values():
                v.sort(key=lambda c: (c[1], c[0]))
        return out


def board_neighbors(b: Board, c: Coord) -> list[Coord]:
    """Neighbours of ``c`` clipped to the board footprint."""
    if c not in b.cells:
        raise UnknownCoord(f"{c} is not on the board")
    return [n for n in neighbors(b.grid, c) if n in b.cells]


@dataclass(frozen=True)
class Violation:
    severity: str  # "error" | "warning"
    coord: Coord | None
    message: str


def validate_board(b: Board) -> list[Violation]:
    """Structural checks; an empty result means the board is well formed.

    Range violations and misplaced annotations are errors.  A clue that
    demands more mines than it has covered neighbours is reported as a
    warning: the board is unsatisfiable but still representable.
    """
    out: list[Violation] = []
    for coord, value in sorted(b.cells.items(), key=lambda cv: (cv[0][1], cv[0][0])):
        if value is COVERED:
            continue
        if not 0 <= value <= b.grid.max_clue:
            out.append(Violation("error", coord,
                                 f"clue {value} out of range 0..{b.grid.max_clue}"))
    for a in b.annotations:
        if a.target not in b.cells:
            out.append(Violation("error", a.target, "annotation on absent cell"))
        elif b.cells[a.target] is not COVERED:
            out.append(Violation("error", a.target, "annotation on revealed cell"))
        if a.polarity not in ("plain", "primed"):
            out.append(Violation("error", a.target, f"bad polarity {a.polarity!r}"))
    for coord, value in b.clues:
        if not 0 <= value <= b.grid.max_clue:
            continue
        live = sum(1 for n in board_neighbors(b, coord) if b.cells[n] is COVERED)
        if value > live:
            out.append(Violation("warning", coord,
                                 f"clue {value} exceeds {live} covered neighbours"))
    return out
