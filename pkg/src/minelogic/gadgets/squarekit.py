"""Square wire pattern toolkit.

The square wire's repeat unit is x', x, 1 along the run, flanked by rows of
1-clues.  Anchored at the x' cell::

        y=-1:   1  1  1
        y= 0:   x' x  1
        y=+1:   1  1  1

A run cut at unit boundaries needs no cap cells at all: the leading flank
clues already pair the first x'/x, and the trailing end simply stops after
an x cell, dropping the final carrier clue and its flank column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hexkit import stamp  # same cellspec merge semantics

UNIT = {
    (0, -1): 1, (1, -1): 1, (2, -1): 1,
    (0, 0): "x", (1, 0): "x", (2, 0): 1,
    (0, 1): 1, (1, 1): 1, (2, 1): 1,
}
UNIT_COMP = (0, 0)
UNIT_VAR = (1, 0)

END_UNIT = {k: v for k, v in UNIT.items() if k[0] != 2}


def rot90(v, k: int):
    x, y = v
    for _ in range(k % 4):
        x, y = -y, x
    return (x, y)


@dataclass(frozen=True)
class SqFrame:
    origin: tuple[int, int] = (0, 0)
    rot: int = 0
    mirror: bool = False  # reflect local x before rotating

    def place(self, local):
        x, y = local
        if self.mirror:
            x = -x
        dx, dy = rot90((x, y), self.rot)
        return (self.origin[0] + dx, self.origin[1] + dy)

    def shifted(self, local_delta):
        return SqFrame(self.place(local_delta), self.rot, self.mirror)

    @property
    def direction(self):
        base = (-1, 0) if self.mirror else (1, 0)
        return rot90(base, self.rot)


def lay_units(cells: dict, frame: SqFrame, count: int, *, end_cap=False,
              overwrite=()):
    for j in range(count):
        stamp(cells, UNIT, frame.shifted((3 * j, 0)), overwrite=overwrite)
    nxt = frame.shifted((3 * count, 0))
    if end_cap:
        stamp(cells, END_UNIT, nxt, overwrite=overwrite)
    return nxt


def carrier_cells(frame: SqFrame, count: int, *, end_cap=False):
    pairs = []
    total = count + (1 if end_cap else 0)
    for j in range(total):
        f = frame.shifted((3 * j, 0))
        pairs.append((f.place(UNIT_COMP), f.place(UNIT_VAR)))
    return pairs
