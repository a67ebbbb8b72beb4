"""Hexagonal wire pattern toolkit.

The distinguishable hex wire repeats a three-cell unit along an axis: a
complement carrier (x'), a value carrier (x), then a 5-clue, wrapped above
and below by forced-mine rows and 1/2/3 clue rows.  One unit, anchored at
its x' cell, looks like this in axial coordinates (q grows along the wire,
r across it)::

        r=-2:   2  1  1
        r=-1:   *  3  *
        r= 0:   x' x  5
        r=+1:   3  *  *
        r=+2:   1  2  1

A wire terminates on the left with a 1/2/1-2-1 clue column plus three forced
mines (the start cap), and on the right by simply omitting the final 5-clue
(the end unit).  All stamps are expressed in a local frame and placed through
``Frame`` transforms: translation plus a multiple-of-60-degree rotation.
Values in stamp dicts are: an int for a clue, "x" for a plain covered cell,
"M" for a covered cell that the surrounding clues force to be a mine.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import OverlapConflict

Cellspec = int | str  # clue value, "x", or "M"

# One wire unit, anchored at the x' carrier.
UNIT = {
    (0, -2): 2, (1, -2): 1, (2, -2): 1,
    (0, -1): "M", (1, -1): 3, (2, -1): "M",
    (0, 0): "x", (1, 0): "x", (2, 0): 5,
    (0, 1): 3, (1, 1): "M", (2, 1): "M",
    (0, 2): 1, (1, 2): 2, (2, 2): 1,
}
UNIT_COMP = (0, 0)   # x' cell
UNIT_VAR = (1, 0)    # x cell

# End of a wire: the final unit simply drops its 5-clue.
END_UNIT = {k: v for k, v in UNIT.items() if k != (2, 0)}

# Start cap, attached immediately before a unit anchored at (0, 0).  The
# unit's own (0,-2) clue drops from 2 to 1 because the cap column replaces
# one of its mines.
START_CAP = {
    (0, -2): 1,
    (-1, -1): 2, (-1, 0): "M", (-2, 0): 1,
    (-2, 1): 2, (-1, 1): "M", (-2, 2): 1, (-1, 2): 1,
}


def rot60(v, k: int):
    """Rotate an axial vector by k * 60 degrees."""
    q, r = v
    for _ in range(k % 6):
        q, r = -r, q + r
    return (q, r)


@dataclass(frozen=True)
class Frame:
    """A placement of local axial coordinates into the world."""

    origin: tuple[int, int] = (0, 0)
    rot: int = 0

    def place(self, local):
        dq, dr = rot60(local, self.rot)
        return (self.origin[0] + dq, self.origin[1] + dr)

    def shifted(self, local_delta):
        """Frame translated by a vector given in local coordinates."""
        return Frame(self.place(local_delta), self.rot)

    @property
    def direction(self):
        """World direction of the local +q axis."""
        return rot60((1, 0), self.rot)


def stamp(cells: dict, template: dict, frame: Frame, *,
          overwrite=(), keep=()):
    """Place ``template`` cells through ``frame`` into ``cells``.

    Existing identical values merge silently.  On disagreement, world
    coordinates in ``overwrite`` take the template value, those in ``keep``
    retain the existing one, anything else raises OverlapConflict.
    """
    for local, value in template.items():
        world = frame.place(local)
        if world in cells and cells[world] != value:
            if world in overwrite:
                pass
            elif world in keep:
                continue
            else:
                raise OverlapConflict(world, cells[world], value)
        cells[world] = value
    return cells


def lay_units(cells: dict, frame: Frame, count: int, *, end_cap=False,
              start_cap=False, overwrite=(), keep=()):
    """Lay ``count`` full units from ``frame``; optionally cap either end.

    With ``end_cap`` an extra 5-less end unit follows the full ones, so the
    carrier finishes on an x cell.  Returns the frame one unit past the last
    full unit (where the end unit sits, or where a continuation attaches).
    """
    for j in range(count):
        stamp(cells, UNIT, frame.shifted((3 * j, 0)), overwrite=overwrite, keep=keep)
    nxt = frame.shifted((3 * count, 0))
    if end_cap:
        stamp(cells, END_UNIT, nxt, overwrite=overwrite, keep=keep)
    if start_cap:  # last: its corner clue overrides the first unit's 2
        stamp(cells, START_CAP, frame, keep=keep,
              overwrite=set(overwrite) | {frame.place((0, -2))})
    return nxt


def carrier_cells(frame: Frame, count: int, *, end_cap=False):
    """(x', x) world pairs of each laid unit, in laying order."""
    pairs = []
    total = count + (1 if end_cap else 0)
    for j in range(total):
        f = frame.shifted((3 * j, 0))
        pairs.append((f.place(UNIT_COMP), f.place(UNIT_VAR)))
    return pairs


def wire_cells(frame: Frame, units: int) -> dict:
    """A complete capped wire: start cap, ``units`` full units, end unit."""
    cells: dict = {}
    lay_units(cells, frame, units, start_cap=True, end_cap=True)
    return cells


# Inverter core, anchored at the absorbed x' cell.  The wire pattern arrives
# from local -q, the carrier continues with a bare 5 and then repeats in the
# opposite reading order.  The two fringe 2-clues replace the 1-clues a plain
# unit would put there (the core adds a mine next to each).
NOT_CORE = {
    (0, 0): "x", (1, 0): 5,
    (0, -2): 2, (0, -1): "M", (0, 1): "M", (0, 2): 2,
    (1, -2): 2, (-1, 2): 2,
}
NOT_CORE_OVERRIDES = ((1, -2), (-1, 2))


def lay_not(cells: dict, core: Frame) -> Frame:
    """Stamp an inverter core plus its mandatory first outgoing unit.

    ``core`` positions the absorbed x' cell.  Returns the frame of the first
    outgoing unit; further continuation units go at that frame translated by
    multiples of ``3 * core.direction`` (world coordinates), keeping its
    rotation.
    """
    out_unit = Frame(core.place((3, 0)), (core.rot + 3) % 6)
    stamp(cells, UNIT, out_unit)
    stamp(cells, NOT_CORE, core,
          overwrite={core.place(l) for l in NOT_CORE_OVERRIDES})
    return out_unit


def translated(frame: Frame, world_delta) -> Frame:
    return Frame((frame.origin[0] + world_delta[0],
                  frame.origin[1] + world_delta[1]), frame.rot)
