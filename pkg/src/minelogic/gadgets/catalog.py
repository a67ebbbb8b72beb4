"""Catalog of gadget fixtures.

Each fixture starts from the literal drawing in :mod:`.figures`.  Open wire
stubs (where the drawing trails off) are trimmed back to a clean unit
boundary and sealed: hex wires get the cap terminator (1/2/1-2-1 clue column
plus three forced mines), square wires simply stop after a carrier pair,
dropping the flank clues that would otherwise force the end cell.  All of
this is data entry guarded by tests: every fixture must satisfy its claims
and truth table under exhaustive enumeration.
"""

from __future__ import annotations

from ..errors import UnknownGadget
from ..grid import GridKind
from . import figures, hexkit
from .hexkit import Frame
from .model import Gadget, PeriodDescriptor, Port, cells_to_board

SQ = GridKind.SQUARE8
HX = GridKind.HEX6


def _drop(cells, labels, coords):
    for c in coords:
        del cells[c]
        labels.pop(c, None)


def _externalize_mines(grid, cells, coords):
    """Move scaffold mines outside the footprint.

    The drawings mark some mines that no drawn clue watches; a standalone
    board cannot pin them.  Removing the cell and decrementing its adjacent
    clues encodes the same mine implicitly (absent cells contribute no
    mines), which both preserves every intended assignment and removes the
    slack the unwatchable cell introduced.
    """
    from ..grid import neighbors
    for c in coords:
        if cells.pop(c) != "M":
            raise ValueError(f"{c} is not a scaffold mine")
        for n in neighbors(grid, c):
            if n in cells and isinstance(cells[n], int):
                cells[n] -= 1


def _add_labels(labels, entries):
    for coord, name, pol in entries:
        labels[coord] = (name, pol)


def _gadget(name, grid, cells, labels, ports, period=None):
    board = cells_to_board(grid, cells, labels)
    return Gadget(name, grid, board, tuple(ports), period)


# --------------------------------------------------------------- square ---

def _sq_wire():
    cells, labels = figures.square_wire()
    _drop(cells, labels, [(c, r) for c in (1, 16) for r in (0, 1, 3, 4)])
    ports = [Port.make("in", "input", (1, 2), (3, 2), (-1, 0)),
             Port.make("out", "output", (16, 2), (15, 2), (1, 0))]
    return _gadget("sq_wire", SQ, cells, labels, ports,
                   PeriodDescriptor((1, 0), 4))


def _sq_curve():
    cells, labels = figures.square_curve()
    _drop(cells, labels, [(3, 2), (4, 2), (5, 2)])
    ports = [Port.make("in", "input", (4, 3), (4, 4), (0, -1)),
             Port.make("out", "output", (2, 6), (1, 6), (-1, 0))]
    return _gadget("sq_curve", SQ, cells, labels, ports)


def _sq_splitter():
    cells, labels = figures.square_splitter()
    _drop(cells, labels, [(c, r) for c in (13, 14, 15) for r in (2, 10)])
    ports = [Port.make("in", "input", (12, 6), (11, 6), (-1, 0)),
             Port.make("out_a", "output", (14, 3), (14, 4), (0, -1)),
             Port.make("out_b", "output", (14, 9), (14, 8), (0, 1))]
    return _gadget("sq_splitter", SQ, cells, labels, ports)


def _sq_not():
    cells, labels = figures.square_not()
    ports = [Port.make("in", "input", (2, 2), (1, 2), (-1, 0)),
             Port.make("out", "output", (13, 2), (12, 2), (1, 0))]
    return _gadget("sq_not", SQ, cells, labels, ports)


def _sq_and():
    cells, labels = figures.square_and()
    _drop(cells, labels, [(c, r) for c in (1, 2, 3) for r in (1, 13)])
    _drop(cells, labels, [(22, 6), (22, 7), (22, 8)])
    ports = [Port.make("u", "input", (2, 11), (2, 12), (0, 1)),
             Port.make("v", "input", (2, 3), (2, 2), (0, -1)),
             Port.make("t", "output", (21, 7), (20, 7), (1, 0))]
    return _gadget("sq_and", SQ, cells, labels, ports)


def _sq_or():
    cells, labels = figures.square_or()
    _drop(cells, labels, [(1, r) for r in (4, 5, 6)])
    _drop(cells, labels, [(16, r) for r in (4, 5, 6)])
    _drop(cells, labels, [(c, 10) for c in (5, 6, 7)])
    _externalize_mines(SQ, cells, [(6, 3)])
    ports = [Port.make("v", "input", (3, 5), (2, 5), (-1, 0)),
             Port.make("u", "input", (6, 8), (6, 9), (0, 1)),
             Port.make("r", "output", (15, 5), (14, 5), (1, 0))]
    return _gadget("sq_or", SQ, cells, labels, ports)


# ------------------------------------------------------------------ hex ---

def _hex_wire_units(units: int) -> Gadget:
    cells = hexkit.wire_cells(Frame((0, 2)), units)
    labels = {}
    for comp, var in hexkit.carrier_cells(Frame((0, 2)), units, end_cap=True):
        labels[comp] = ("x", "primed")
        labels[var] = ("x", "plain")
    last_var = (3 * units + 1, 2)
    ports = [Port.make("in", "input", (1, 2), (0, 2), (-1, 0)),
             Port.make("out", "output", last_var, (3 * units, 2), (1, 0))]
    return _gadget("hex_wire", HX, cells, labels, ports,
                   PeriodDescriptor((1, 0), 3))


def _hex_wire():
    return _hex_wire_units(3)


def _hex_wire_legacy():
    cells, labels = figures.hex_wire_ambiguous()
    _drop(cells, labels, [(12, 1), (11, 3)])
    ports = [Port.make("in", "input", (1, 2), (0, 2), (-1, 0)),
             Port.make("out", "output", (11, 2), (10, 2), (1, 0))]
    return _gadget("hex_wire_legacy", HX, cells, labels, ports)


def _hex_not_legacy():
    cells, labels = figures.hex_not_ambiguous()
    _drop(cells, labels, [(2, -3), (3, -5)])
    ports = [Port.make("in", "input", (4, -4), (3, -4), (-1, 0)),
             Port.make("out", "output", (13, -4), (14, -4), (1, 0))]
    return _gadget("hex_not_legacy", HX, cells, labels, ports)


def _hex_curve():
    cells, labels = figures.hex_curve()
    _drop(cells, labels, [(0, 0), (-1, 1), (-1, 2), (-2, 3), (-2, 4)])
    hexkit.stamp(cells, hexkit.START_CAP, Frame((0, 2)),
                 overwrite={(0, 0)})
    hexkit.stamp(cells, hexkit.END_UNIT, Frame((9, -2), 5))
    ports = [Port.make("in", "input", (1, 2), (0, 2), (-1, 0)),
             Port.make("out", "output", (10, -3), (9, -2), (1, -1))]
    return _gadget("hex_curve", HX, cells, labels, ports)


def _hex_splitter():
    cells, labels = figures.hex_splitter()
    _drop(cells, labels, [(0, 0), (-1, 1), (-1, 2), (-2, 3), (-2, 4)])
    hexkit.stamp(cells, hexkit.START_CAP, Frame((0, 2)), overwrite={(0, 0)})
    hexkit.stamp(cells, hexkit.END_UNIT, Frame((9, -3), 5))
    hexkit.stamp(cells, hexkit.END_UNIT, Frame((4, 7), 1))
    ports = [Port.make("in", "input", (1, 2), (0, 2), (-1, 0)),
             Port.make("out_a", "output", (10, -4), (9, -3), (1, -1)),
             Port.make("out_b", "output", (4, 8), (4, 7), (0, 1))]
    return _gadget("hex_splitter", HX, cells, labels, ports)


def _hex_not():
    cells, labels = figures.hex_not()
    _drop(cells, labels, [(0, 0), (-1, 2), (-2, 4)])
    _drop(cells, labels, [(12, 4), (13, 2), (14, 0)])
    hexkit.stamp(cells, hexkit.START_CAP, Frame((0, 2)), overwrite={(0, 0)})
    hexkit.stamp(cells, hexkit.START_CAP, Frame((12, 2), 3),
                 overwrite={(12, 4)})
    ports = [Port.make("in", "input", (1, 2), (0, 2), (-1, 0)),
             Port.make("out", "output", (12, 2), (11, 2), (1, 0))]
    return _gadget("hex_not", HX, cells, labels, ports)


def _hex_phase_changer():
    """Two chained inverters: same value out, wire phase shifted."""
    cells: dict = {}
    hexkit.lay_units(cells, Frame((0, 2)), 2, start_cap=True)
    hexkit.lay_not(cells, Frame((6, 2)))          # stamps unit at (9,2) rot 3
    hexkit.stamp(cells, hexkit.UNIT, Frame((8, 2)))   # same cells, re-read
    hexkit.stamp(cells, hexkit.UNIT, Frame((11, 2)))
    hexkit.lay_not(cells, Frame((14, 2)))         # stamps unit at (17,2) rot 3
    hexkit.lay_units(cells, Frame((20, 2), 3), 1, start_cap=True)
    labels = {}
    for q, pol in [(0, "primed"), (1, "plain"), (3, "primed"), (4, "plain"),
                   (6, "primed"), (8, "plain"), (9, "primed"), (11, "plain"),
                   (12, "primed"), (14, "plain"), (16, "primed"),
                   (17, "plain"), (19, "primed"), (20, "plain")]:
        labels[(q, 2)] = ("x", pol)
    ports = [Port.make("in", "input", (1, 2), (0, 2), (-1, 0)),
             Port.make("out", "output", (20, 2), (19, 2), (1, 0))]
    return _gadget("hex_phase_changer", HX, cells, labels, ports)


# Core scaffold mines the drawings leave unwatched, per gate.
_HEX_GATE_EXTERNAL = {
    "hex_or": [(3, 3), (7, 0), (7, 1), (8, 0), (8, 1), (9, 1), (10, 1),
               (11, 0), (12, -1)],
    "hex_and": [(3, 3), (7, 0), (7, 1), (8, 1), (9, 1), (10, 0), (10, 1),
                (11, -1), (11, 0), (12, -1)],
}


def _hex_gate(name, figure):
    cells, labels = figure()
    # v approach: one more unit leftward, then the cap
    hexkit.stamp(cells, hexkit.UNIT, Frame((-2, 2)))
    hexkit.stamp(cells, hexkit.START_CAP, Frame((-2, 2)), overwrite={(-2, 0)})
    # u approach from the upper left along (1,-1)
    hexkit.lay_units(cells, Frame((-2, 9), 5), 2, start_cap=True,
                     keep={(1, 4), (5, 4)})
    # r exit: end unit to the right
    hexkit.stamp(cells, hexkit.END_UNIT, Frame((19, 2)))
    _externalize_mines(HX, cells, _HEX_GATE_EXTERNAL[name])
    _add_labels(labels, [((-2, 2), "v", "primed"), ((-2, 9), "u", "primed"),
                         ((20, 2), "r", "plain")])
    ports = [Port.make("v", "input", (-1, 2), (-2, 2), (-1, 0)),
             Port.make("u", "input", (-1, 8), (-2, 9), (-1, 1)),
             Port.make("r", "output", (20, 2), (19, 2), (1, 0))]
    return _gadget(name, HX, cells, labels, ports)


def _hex_or():
    return _hex_gate("hex_or", figures.hex_or)


def _hex_and():
    return _hex_gate("hex_and", figures.hex_and)


def _hex_loopback():
    cells, labels = figures.hex_loopback()
    # seal the s wire below (start cap) and above (end unit)
    _drop(cells, labels, [(1, 3), (0, 4), (-1, 4), (-2, 5), (2, 3)])
    hexkit.stamp(cells, hexkit.START_CAP, Frame((0, 5), 1),
                 overwrite={(2, 3)})
    hexkit.stamp(cells, hexkit.END_UNIT, Frame((0, 14), 1), keep={(2, 12)})
    # seal the x wire on the right
    _drop(cells, labels, [(6, 10), (7, 9), (7, 8)])
    hexkit.stamp(cells, hexkit.END_UNIT, Frame((4, 10)), keep={(4, 8)})
    # Only the joint-side cells of each wire carry coherent labels; past the
    # crossing, the two 4-clues let a wire's far half flip with the other
    # wire's compensating, so the tails stay unlabeled.
    for tail in [(1, 10), (2, 10), (4, 10), (5, 10),
                 (0, 11), (0, 12), (0, 14), (0, 15)]:
        labels.pop(tail, None)
    ports = [Port.make("s", "input", (0, 6), (0, 5), (0, -1)),
             Port.make("x", "output", (5, 10), (4, 10), (1, 0))]
    return _gadget("hex_loopback", HX, cells, labels, ports)


_BUILDERS = {
    "sq_wire": _sq_wire,
    "sq_curve": _sq_curve,
    "sq_splitter": _sq_splitter,
    "sq_not": _sq_not,
    "sq_and": _sq_and,
    "sq_or": _sq_or,
    "hex_wire_legacy": _hex_wire_legacy,
    "hex_not_legacy": _hex_not_legacy,
    "hex_wire": _hex_wire,
    "hex_curve": _hex_curve,
    "hex_splitter": _hex_splitter,
    "hex_not": _hex_not,
    "hex_phase_changer": _hex_phase_changer,
    "hex_or": _hex_or,
    "hex_and": _hex_and,
    "hex_loopback": _hex_loopback,
}

CATALOG_NAMES = tuple(_BUILDERS)


def get_gadget(name: str) -> Gadget:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownGadget(f"no gadget named {name!r}") from None
    return builder()
