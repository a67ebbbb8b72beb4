"""Gadget datatypes: ports, placements, truth tables."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import GridMismatch
from ..grid import Annotation, Board, Coord, GridKind
from .hexkit import rot60
from .squarekit import rot90


@dataclass(frozen=True)
class Port:
    """A wire endpoint of a gadget.

    ``var_cell`` carries the port's signal (mine = true), ``comp_cell`` its
    complement.  ``direction`` is the outward unit step of the wire axis and
    ``phase`` the var cell's position along it modulo the 3-cell wire period.
    """

    name: str
    role: str  # "input" | "output"
    var_cell: Coord
    comp_cell: Coord
    direction: Coord
    phase: int = 0

    @staticmethod
    def make(name, role, var_cell, comp_cell, direction):
        phase = (var_cell[0] * direction[0] + var_cell[1] * direction[1]) % 3
        return Port(name, role, var_cell, comp_cell, direction, phase)


@dataclass(frozen=True)
class PeriodDescriptor:
    """Where a wire may be stretched: a three-cell slab along an axis.

    Cells with ``lo <= dot(coord, axis) < lo + 3`` form one repeat; extension
    shifts everything past the slab and inserts copies of it.
    """

    axis: Coord
    lo: int


@dataclass(frozen=True)
class Gadget:
    name: str
    grid: GridKind
    footprint: Board
    ports: tuple[Port, ...]
    period: PeriodDescriptor | None = None

    def port(self, name: str) -> Port:
        for p in self.ports:
            if p.name == name:
                return p
        raise KeyError(f"{self.name} has no port {name!r}")


@dataclass(frozen=True)
class Placement:
    """Translation plus a grid rotation (square: 90-degree steps and an
    optional mirror; hex: 60-degree steps)."""

    translation: Coord = (0, 0)
    rotation: int = 0
    mirror: bool = False

    def transform(self, grid: GridKind, coord: Coord) -> Coord:
        c, r = coord
        if grid is GridKind.SQUARE8:
            if self.mirror:
                c = -c
            c, r = rot90((c, r), self.rotation)
        else:
            if self.mirror:
                raise GridMismatch("hex placements do not support mirroring")
            c, r = rot60((c, r), self.rotation)
        return (c + self.translation[0], r + self.translation[1])

    def transform_vector(self, grid: GridKind, vec: Coord) -> Coord:
        base = self.transform(grid, vec)
        zero = self.transform(grid, (0, 0))
        return (base[0] - zero[0], base[1] - zero[1])


@dataclass(frozen=True)
class TruthRow:
    """Expected behaviour for one combination of input values."""

    inputs: tuple[bool, ...]
    outputs: tuple[bool, ...]
    fixed: dict[str, bool] = field(default_factory=dict)
    groups: tuple[tuple[tuple[str, ...], frozenset], ...] = ()


@dataclass(frozen=True)
class TruthTable:
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    rows: tuple[TruthRow, ...]


def cells_to_board(grid: GridKind, cells: dict, labels: dict | None = None) -> Board:
    """Convert a cellspec dict (clue int / "x" / "M") into a Board."""
    board_cells: dict = {}
    annotations: list[Annotation] = []
    for coord, value in cells.items():
        if value == "x" or value == "M":
            board_cells[coord] = None
            if value == "M":
                annotations.append(Annotation(coord, forced_mine=True))
        else:
            board_cells[coord] = int(value)
    for coord, (name, pol) in (labels or {}).items():
        if coord not in board_cells or board_cells[coord] is not None:
            raise ValueError(f"label on non-covered cell {coord}")
        annotations.append(Annotation(coord, label=name, polarity=pol))
    return Board(grid, board_cells, tuple(annotations))
