"""Literal cell tables for the gadget drawings.

Each function returns ``(cells, labels)`` where ``cells`` maps a coordinate
to a clue int, ``"x"`` (covered) or ``"M"`` (covered, forced mine), and
``labels`` maps covered coordinates to ``(name, polarity)``.  Square tables
use (col, row) with row growing upward; hex tables use axial (q, r).  The
transcriptions keep the drawings' own cell content verbatim; trimming the
open wire stubs and sealing them with caps happens in the catalog, not here.
"""

from __future__ import annotations


def _put(cells, coord, value):
    if coord in cells and cells[coord] != value:
        raise AssertionError(f"figure transcription clash at {coord}")
    cells[coord] = value


def _fill(cells, value, coords):
    for c in coords:
        _put(cells, c, value)


def _label(cells, labels, coord, name, pol="plain", mine=False):
    _put(cells, coord, "M" if mine else "x")
    labels[coord] = (name, pol)


# --------------------------------------------------------------- square ---

def square_wire():
    """Straight horizontal wire: x / 1 / x' carrier between 1-rows and 0-rows."""
    cells, labels = {}, {}
    for j in (0, 4):
        _fill(cells, 0, [(k, j) for k in range(1, 17)])
    for j in (1, 3):
        _fill(cells, 1, [(k, j) for k in range(1, 17)])
    _fill(cells, 1, [(k, 2) for k in (2, 5, 8, 11, 14)])
    for k in (1, 4, 7, 10, 13, 16):
        _label(cells, labels, (k, 2), "x", "plain")
    for k in (3, 6, 9, 12, 15):
        _label(cells, labels, (k, 2), "x", "primed")
    return cells, labels


def square_curve():
    """Vertical-to-horizontal bend of a wire around a mined elbow."""
    cells, labels = {}, {}
    _fill(cells, 1, [(3, 2), (4, 2), (5, 2)])
    _fill(cells, 1, [(3, 3), (5, 3)])
    _label(cells, labels, (4, 3), "x", "plain")
    _label(cells, labels, (4, 4), "x", "primed")
    cells[(6, 4)] = 1; cells[(3, 4)] = 2; cells[(5, 4)] = 3
    cells[(1, 5)] = 1; cells[(6, 5)] = 1; cells[(2, 5)] = 2; cells[(3, 5)] = 4
    _fill(cells, "M", [(4, 5), (5, 5)])
    _fill(cells, "M", [(3, 6), (4, 6)])
    cells[(6, 6)] = 1; cells[(5, 6)] = 3
    _label(cells, labels, (2, 6), "x", "plain")
    _label(cells, labels, (1, 6), "x", "primed")
    cells[(1, 7)] = 1; cells[(5, 7)] = 1; cells[(2, 7)] = 3; cells[(4, 7)] = 3
    cells[(3, 7)] = "M"
    _fill(cells, 1, [(2, 8), (3, 8), (4, 8)])
    return cells, labels


def square_splitter():
    """T-junction duplicating a horizontal wire into two vertical runs."""
    cells, labels = {}, {}
    _fill(cells, 1, [(13, 2), (14, 2), (15, 2)])
    _fill(cells, 1, [(13, 3), (15, 3)])
    _label(cells, labels, (14, 3), "x", "plain")
    _label(cells, labels, (14, 4), "x", "primed")
    cells[(16, 4)] = 1; cells[(13, 4)] = 2; cells[(15, 4)] = 3
    cells[(11, 5)] = 1; cells[(16, 5)] = 1; cells[(12, 5)] = 2; cells[(13, 5)] = 4
    _fill(cells, "M", [(14, 5), (15, 5)])
    _fill(cells, "M", [(13, 6), (14, 6)])
    cells[(16, 6)] = 2; cells[(15, 6)] = 5
    _label(cells, labels, (12, 6), "x", "plain")
    _label(cells, labels, (11, 6), "x", "primed")
    cells[(11, 7)] = 1; cells[(16, 7)] = 1; cells[(12, 7)] = 2; cells[(13, 7)] = 4
    _fill(cells, "M", [(14, 7), (15, 7)])
    cells[(13, 8)] = 2; cells[(16, 8)] = 1; cells[(15, 8)] = 3
    _label(cells, labels, (14, 8), "x", "primed")
    _label(cells, labels, (14, 9), "x", "plain")
    cells[(13, 9)] = 1; cells[(15, 9)] = 1
    _fill(cells, 1, [(13, 10), (14, 10), (15, 10)])
    return cells, labels


def square_not():
    """Inverter: the carrier role pattern flips across a mined 3/./3 core."""
    cells, labels = {}, {}
    for j in (0, 4):
        _fill(cells, 1, [(k, j) for k in (6, 7, 8)])
    for j in (1, 3):
        _fill(cells, 1, [(k, j) for k in (1, 2, 3, 4, 5, 9, 10, 11, 12, 13)])
        _fill(cells, 2, [(k, j) for k in (6, 8)])
        _put(cells, (7, j), "M")
    _fill(cells, 1, [(3, 2), (11, 2)])
    _fill(cells, 3, [(6, 2), (8, 2)])
    for k in (2, 5, 9, 12):
        _label(cells, labels, (k, 2), "x", "plain")
    for k in (1, 4, 7, 10, 13):
        _label(cells, labels, (k, 2), "x", "primed")
    return cells, labels


def square_and():
    """AND gate: u and v enter vertically, t = u AND v leaves to the right."""
    cells, labels = {}, {}
    for j in (1, 13):
        _fill(cells, 1, [(k, j) for k in (1, 2, 3, 6, 9, 11, 12, 13, 15, 16, 17)])
        _fill(cells, 2, [(k, j) for k in (7, 8)])
    for j in (2, 12):
        _fill(cells, 1, [(k, j) for k in (1, 3, 14, 19)])
        _fill(cells, 2, [(k, j) for k in (6, 10, 13, 15, 18)])
        _fill(cells, 3, [(k, j) for k in (9, 11, 17)])
        _fill(cells, "M", [(k, j) for k in (7, 8, 12, 16)])
    _label(cells, labels, (2, 2), "v", "primed")
    _label(cells, labels, (2, 12), "u", "primed")
    for j in (3, 11):
        _fill(cells, 1, [(k, j) for k in (1, 3, 4)])
        _fill(cells, 2, [(k, j) for k in (5, 19)])
        _fill(cells, 3, [(k, j) for k in (13, 16)])
        _put(cells, (6, j), 4)
        for k in (12, 15):
            _label(cells, labels, (k, j), "t", "primed")
        _label(cells, labels, (14, j), "t", "plain")
        _fill(cells, "M", [(k, j) for k in (7, 17, 18)])
    _label(cells, labels, (8, 3), "r")
    _label(cells, labels, (2, 3), "v")
    for i, k in enumerate((9, 10, 11), start=1):
        _label(cells, labels, (k, 3), f"b{i}")
    _label(cells, labels, (8, 11), "s")
    _label(cells, labels, (2, 11), "u")
    for i, k in enumerate((9, 10, 11), start=1):
        _label(cells, labels, (k, 11), f"a{i}")
    for j in (4, 10):
        _fill(cells, 1, [(k, j) for k in (0, 3, 4, 14, 15)])
        _fill(cells, 2, [(k, j) for k in (1, 2, 10, 13, 16, 19)])
        _fill(cells, 3, [(k, j) for k in (9, 11)])
        _put(cells, (7, j), 4)
        _label(cells, labels, (17, j), "t", "plain")
        _fill(cells, "M", [(k, j) for k in (5, 6, 8, 12, 18)])
    for j in (5, 9):
        _fill(cells, 0, [(k, j) for k in (10, 14, 15)])
        _fill(cells, 1, [(k, j) for k in (8, 9, 11, 12, 13, 16, 19)])
        _fill(cells, 2, [(k, j) for k in (0, 3, 4, 17, 18)])
        _put(cells, (7, j), 3)
        _put(cells, (5, j), 4)
        _put(cells, (1, j), "M")
    _label(cells, labels, (2, 5), "v", "primed")
    _label(cells, labels, (6, 5), "r", "primed")
    _label(cells, labels, (2, 9), "u", "primed")
    _label(cells, labels, (6, 9), "s", "primed")
    for j in (6, 8):
        _fill(cells, 1, [(k, j) for k in list(range(8, 17)) + list(range(18, 23))])
        _fill(cells, 2, [(k, j) for k in (0, 7)])
        _put(cells, (3, j), 3)
        _label(cells, labels, (17, j), "t", "primed")
        _fill(cells, "M", [(k, j) for k in (1, 2)])
    _label(cells, labels, (4, 6), "v")
    _label(cells, labels, (5, 6), "v", "primed")
    _label(cells, labels, (6, 6), "r")
    _label(cells, labels, (4, 8), "u")
    _label(cells, labels, (5, 8), "u", "primed")
    _label(cells, labels, (6, 8), "s")
    for k in (8, 11, 14, 20):
        _label(cells, labels, (k, 7), "t", "primed")
    for k in (7, 10, 13, 16, 18, 21):
        _label(cells, labels, (k, 7), "t", "plain")
    _fill(cells, "M", [(3, 7), (5, 7)])
    _fill(cells, 1, [(k, 7) for k in (9, 12, 15, 19, 22)])
    _fill(cells, 2, [(k, 7) for k in (0, 17)])
    _fill(cells, 4, [(k, 7) for k in (1, 4)])
    _put(cells, (2, 7), 5)
    _put(cells, (6, 7), 4)  # the highlighted coupling clue beside r/s/t
    return cells, labels


def square_or():
    """OR gate: v enters left, u from below, r = u OR v leaves right."""
    cells, labels = {}, {}
    _fill(cells, 1, [(k, 0) for k in (4, 7, 9, 12)])
    _fill(cells, 2, [(k, 0) for k in (5, 6, 10, 11)])
    _fill(cells, "M", [(k, 1) for k in (5, 6, 10, 11)])
    _fill(cells, 2, [(k, 1) for k in (4, 8, 12)])
    _fill(cells, 3, [(k, 1) for k in (7, 9)])
    for i, k in enumerate((7, 8, 9), start=1):
        _label(cells, labels, (k, 2), f"a{i}")
    cells[(13, 2)] = 1; cells[(4, 2)] = 2; cells[(12, 2)] = 3
    _label(cells, labels, (6, 2), "s", "primed")
    _label(cells, labels, (10, 2), "r")
    _fill(cells, "M", [(5, 2), (11, 2)])
    _fill(cells, "M", [(k, 3) for k in (6, 7, 8, 9, 10, 12)])
    cells[(13, 3)] = 1; cells[(4, 3)] = 2
    _fill(cells, 4, [(5, 3), (11, 3)])
    for j in (4, 6):
        _fill(cells, 1, [(k, j) for k in (1, 2, 3, 14, 15, 16)])
        _fill(cells, 2, [(k, j) for k in (4, 13)])
        _put(cells, (10, j), 3)
        _label(cells, labels, (11, j), "r", "primed")
        _fill(cells, "M", [(5, j), (7, j)])
    _label(cells, labels, (6, 4), "s")
    cells[(8, 4)] = 5; cells[(9, 4)] = 4; cells[(12, 4)] = 2
    _label(cells, labels, (6, 6), "u", "primed")
    _fill(cells, 2, [(8, 6), (9, 6)])
    cells[(12, 6)] = 3
    _fill(cells, 1, [(k, 5) for k in (1, 9, 13, 16)])
    cells[(11, 5)] = 2; cells[(4, 5)] = 3; cells[(6, 5)] = 6
    for k in (2, 5):
        _label(cells, labels, (k, 5), "v", "primed")
    _label(cells, labels, (3, 5), "v")
    for k in (7, 10, 12, 15):
        _label(cells, labels, (k, 5), "r")
    for k in (8, 14):
        _label(cells, labels, (k, 5), "r", "primed")
    _fill(cells, 1, [(k, 7) for k in (4, 8, 9, 13)])
    _fill(cells, 2, [(k, 7) for k in (5, 7)])
    cells[(6, 7)] = 3
    _fill(cells, "M", [(k, 7) for k in (10, 11, 12)])
    _fill(cells, 1, [(k, 8) for k in (5, 7, 9, 13)])
    _fill(cells, 2, [(k, 8) for k in (10, 12)])
    cells[(11, 8)] = 3
    _label(cells, labels, (6, 8), "u")
    _label(cells, labels, (6, 9), "u", "primed")
    _fill(cells, 1, [(5, 9), (7, 9)])
    _fill(cells, 1, [(5, 10), (6, 10), (7, 10)])
    return cells, labels


# ------------------------------------------------------------------ hex ---

def hex_wire_ambiguous():
    """The earlier hex wire: plain x'/x alternation with a left terminator.

    Its repeat is two cells and carries no structural marker telling the two
    families apart, which is the weakness the three-cell wire fixes.
    """
    cells, labels = {}, {}

    def at(i, j):  # rows 0..2 use q=i-j, rows 3..4 use q=i-2
        return (i - j, j) if j <= 2 else (i - 2, j)

    for j in (1, 3):
        _fill(cells, 1, [at(i, j) for i in range(3, 14)])
        _fill(cells, 2, [at(i, j) for i in (0, 2)])
    for j in (0, 4):
        _fill(cells, 1, [at(i, j) for i in (0, 1)])
    _fill(cells, "M", [at(1, j) for j in (1, 2, 3)])
    _put(cells, at(0, 2), 1)
    for i in (2, 4, 6, 8, 10, 12):
        _label(cells, labels, at(i, 2), "x", "primed")
    for i in (3, 5, 7, 9, 11, 13):
        _label(cells, labels, at(i, 2), "x", "plain")
    return cells, labels


def hex_not_ambiguous():
    """Inverter on the two-cell hex wire: 5 / x' / 5 between mined runs."""
    cells, labels = {}, {}

    def at(i, j):
        return (i - j, j)  # all rows here use the same offset formula

    row = {-2: lambda i: (i + 2, -2), -3: lambda i: (i + 3, -3),
           -4: lambda i: (i + 4, -4), -5: lambda i: (i + 5, -5),
           -6: lambda i: (i + 6, -6)}
    _fill(cells, 1, [row[-2](i) for i in (3, 7)])
    _fill(cells, 2, [row[-2](i) for i in (4, 5, 6)])
    _fill(cells, 1, [row[-3](i) for i in (-1, 0, 1, 8, 9, 10)])
    _fill(cells, 2, [row[-3](i) for i in (2, 7)])
    _fill(cells, "M", [row[-3](i) for i in (3, 4, 5, 6)])
    _fill(cells, 5, [row[-4](i) for i in (3, 5)])
    for i in (-1, 1, 4, 7, 9):
        _label(cells, labels, row[-4](i), "x", "primed")
    for i in (0, 2, 6, 8, 10):
        _label(cells, labels, row[-4](i), "x", "plain")
    _fill(cells, 1, [row[-5](i) for i in (-2, -1, 0, 7, 8, 9)])
    _fill(cells, 2, [row[-5](i) for i in (1, 6)])
    _fill(cells, "M", [row[-5](i) for i in (2, 3, 4, 5)])
    _fill(cells, 1, [row[-6](i) for i in (1, 5)])
    _fill(cells, 2, [row[-6](i) for i in (2, 3, 4)])
    return cells, labels


def hex_curve():
    """Sixty-degree bend of the three-cell wire."""
    cells, labels = {}, {}

    def at(i, j):
        if 0 <= j <= 2:
            return (i - j, j)
        if j in (3, 4):
            return (i - 2, j)
        if -3 <= j <= -1:
            return (i - j, j)
        if j == -4:
            return (i + 4, j)
        raise ValueError(j)

    cells[at(5, -4)] = 1
    cells[at(6, -4)] = "M"
    cells[at(5, -3)] = 1; cells[at(6, -3)] = 3
    _label(cells, labels, at(7, -3), "x", "plain")
    cells[at(8, -3)] = "M"
    cells[at(9, -2)] = 1; cells[at(5, -2)] = 2; cells[at(8, -2)] = 3
    _label(cells, labels, at(7, -2), "x", "primed")
    cells[at(6, -2)] = "M"
    _fill(cells, 1, [at(5, -1), at(9, -1)])
    cells[at(7, -1)] = 5
    _fill(cells, "M", [at(6, -1), at(8, -1)])
    for j in (0, 4):
        _fill(cells, 1, [at(i, j) for i in (1, 2, 4, 5)])
        _fill(cells, 2, [at(i, j) for i in (0, 3)])
    cells[at(9, 0)] = 2; cells[at(6, 0)] = 3
    _label(cells, labels, at(7, 0), "x", "plain")
    cells[at(8, 0)] = "M"
    cells[at(6, 4)] = 2; cells[at(7, 4)] = 1
    for j in (1, 3):
        _fill(cells, "M", [at(i, j) for i in (0, 1, 3, 4, 6)])
        _fill(cells, 3, [at(i, j) for i in (2, 5)])
    _label(cells, labels, at(7, 1), "x", "primed")
    cells[at(8, 1)] = 3; cells[at(9, 1)] = 1
    cells[at(8, 3)] = 2; cells[at(7, 3)] = "M"
    cells[at(9, 2)] = 1
    _fill(cells, 5, [at(i, 2) for i in (1, 4, 7)])
    for i in (2, 5):
        _label(cells, labels, at(i, 2), "x", "primed")
    for i in (3, 6):
        _label(cells, labels, at(i, 2), "x", "plain")
    cells[at(8, 2)] = "M"
    return cells, labels


def hex_splitter():
    """Two bends merged: one incoming wire, two outgoing wires."""
    cells, labels = {}, {}

    def at(i, j):
        if 0 <= j <= 2:
            return (i - j, j)
        if 3 <= j <= 10:
            return (i - 2, j)
        if -4 <= j <= -1:
            return (i - j, j)
        if j == -5:
            return (i + 5, j)
        raise ValueError(j)

    cells[at(4, -5)] = 1; cells[at(5, -5)] = "M"
    cells[at(4, -4)] = 1; cells[at(5, -4)] = 3
    _label(cells, labels, at(6, -4), "x", "plain")
    cells[at(7, -4)] = "M"
    cells[at(8, -3)] = 1; cells[at(4, -3)] = 2; cells[at(7, -3)] = 3
    _label(cells, labels, at(6, -3), "x", "primed")
    cells[at(5, -3)] = "M"
    _fill(cells, 1, [at(4, -2), at(8, -2)])
    cells[at(6, -2)] = 5
    _fill(cells, "M", [at(5, -2), at(7, -2)])
    cells[at(4, -1)] = 1; cells[at(8, -1)] = 2; cells[at(5, -1)] = 3
    _label(cells, labels, at(6, -1), "x", "plain")
    cells[at(7, -1)] = "M"
    for j in (0, 4):
        _fill(cells, 1, [at(i, j) for i in (1, 2)])
        _fill(cells, 2, [at(i, j) for i in (0, 3, 4)])
    cells[at(8, 0)] = 1; cells[at(7, 0)] = 3
    _label(cells, labels, at(6, 0), "x", "primed")
    cells[at(5, 0)] = "M"
    cells[at(8, 4)] = 1; cells[at(7, 4)] = 3
    _label(cells, labels, at(6, 4), "x", "primed")
    cells[at(5, 4)] = "M"
    for j in (1, 3):
        _fill(cells, "M", [at(i, j) for i in (0, 1, 3, 4, 7)])
        _fill(cells, 3, [at(i, j) for i in (2, 5)])
        _put(cells, at(6, j), 4)
        _put(cells, at(8, j), 1)
    _fill(cells, 5, [at(i, 2) for i in (1, 4)])
    for i in (2, 5):
        _label(cells, labels, at(i, 2), "x", "primed")
    for i in (3, 6):
        _label(cells, labels, at(i, 2), "x", "plain")
    cells[at(7, 2)] = "M"; cells[at(8, 2)] = 3
    cells[at(4, 9)] = 1; cells[at(5, 9)] = "M"
    cells[at(4, 8)] = 1; cells[at(5, 8)] = 3
    _label(cells, labels, at(6, 8), "x", "plain")
    cells[at(7, 8)] = "M"
    cells[at(8, 7)] = 1; cells[at(4, 7)] = 2; cells[at(7, 7)] = 3
    _label(cells, labels, at(6, 7), "x", "primed")
    cells[at(5, 7)] = "M"
    _fill(cells, 1, [at(4, 6), at(8, 6)])
    cells[at(6, 6)] = 5
    _fill(cells, "M", [at(5, 6), at(7, 6)])
    cells[at(4, 5)] = 1; cells[at(8, 5)] = 2; cells[at(5, 5)] = 3
    _label(cells, labels, at(6, 5), "x", "plain")
    cells[at(7, 5)] = "M"
    return cells, labels


def hex_not():
    """Inverter on the three-cell wire: the unit order reverses at a core 5."""
    cells, labels = {}, {}

    def at(i, j):
        return (i - j, j) if 0 <= j <= 2 else (i - 2, j)

    for i in (2, 5, 8, 11, 14):
        _label(cells, labels, at(i, 2), "x", "primed")
    for i in (3, 6, 10, 13):
        _label(cells, labels, at(i, 2), "x", "plain")
    _fill(cells, 5, [at(i, 2) for i in (1, 4, 7, 9, 12, 15)])
    for j in (0, 4):
        _fill(cells, 2, [at(i, j) for i in (0, 3, 6, 7, 8, 11, 14)])
        _fill(cells, 1, [at(i, j) for i in (1, 2, 4, 5, 9, 10, 12, 13)])
    for j in (1, 3):
        _fill(cells, 3, [at(i, j) for i in (2, 5, 10, 13)])
        _fill(cells, "M", [at(i, j) for i in (1, 3, 4, 6, 7, 8, 9, 11, 12, 14)])
    return cells, labels


def _hex_gate_shared(cells, labels):
    """Rows 1..9 are identical in the OR and AND drawings."""

    def at(i, j):
        return (i - j, j) if 0 <= j <= 2 else (i - 2, j)

    _fill(cells, 3, [at(i, 1) for i in (3, 15, 18)])
    _fill(cells, "M", [at(i, 1) for i in (1, 2, 4, 5, 6, 8, 9, 10, 11, 13, 14, 16, 17, 19, 20)])
    _label(cells, labels, at(7, 1), "s")
    _label(cells, labels, at(12, 1), "r", "primed")
    # the two clues inside the r exit each count two forced mines next to
    # the complementary carrier pair they watch
    _put(cells, at(10, 2), 3)
    _put(cells, at(12, 2), 3)
    _put(cells, at(7, 2), 4)
    _fill(cells, 5, [at(i, 2) for i in (2, 5, 14, 17, 20)])
    for i in (1, 4):
        _label(cells, labels, at(i, 2), "v", "plain")
    for i in (3, 6):
        _label(cells, labels, at(i, 2), "v", "primed")
    for i in (8, 11, 13, 16, 19):
        _label(cells, labels, at(i, 2), "r", "plain")
    for i in (9, 15, 18, 21):
        _label(cells, labels, at(i, 2), "r", "primed")
    _put(cells, at(9, 3), "x")  # covered spacer; its clues hold it clear
    _fill(cells, 2, [at(i, 3) for i in (8, 10)])
    _fill(cells, 3, [at(i, 3) for i in (3, 12, 15, 18)])
    _fill(cells, "M", [at(i, 3) for i in (1, 2, 4, 5, 7, 13, 14, 16, 17, 19, 20)])
    _label(cells, labels, at(11, 3), "r", "primed")
    _label(cells, labels, at(6, 3), "u", "primed")
    _fill(cells, 1, [at(i, 4) for i in (0, 2, 9, 14, 15, 17, 18, 20)])
    _fill(cells, 2, [at(i, 4) for i in (1, 3, 7, 12, 13, 16, 19)])
    _put(cells, at(5, 4), 5)
    _fill(cells, "M", [at(i, 4) for i in (4, 6, 10, 11)])
    _fill(cells, 1, [at(i, 5) for i in (2, 9, 11)])
    _fill(cells, 2, [at(i, 5) for i in (6, 10)])
    _put(cells, at(3, 5), 3)
    _label(cells, labels, at(4, 5), "u")
    _put(cells, at(5, 5), "M")
    _put(cells, at(5, 6), 1)
    _put(cells, at(1, 6), 2)
    _put(cells, at(4, 6), 3)
    _label(cells, labels, at(3, 6), "u", "primed")
    _put(cells, at(2, 6), "M")
    _fill(cells, 1, [at(0, 7), at(4, 7)])
    _put(cells, at(2, 7), 5)
    _fill(cells, "M", [at(1, 7), at(3, 7)])
    _put(cells, at(3, 8), 2)
    _put(cells, at(0, 8), 3)
    _label(cells, labels, at(1, 8), "u")
    _put(cells, at(2, 8), "M")
    return at


def hex_or():
    """OR gate: u descends from upper left, v enters left, r leaves right."""
    cells, labels = {}, {}
    at = _hex_gate_shared(cells, labels)

    def low(i, j):  # rows below the carrier use q = i - j
        return (i - j, j)

    _fill(cells, 1, [low(i, -4) for i in (8, 10)])
    _put(cells, low(9, -4), 2)  # sits between the two terminator mines
    _fill(cells, 1, [low(i, -3) for i in (4, 5, 7, 12)])
    _fill(cells, 2, [low(i, -3) for i in (8, 11)])
    _fill(cells, "M", [low(i, -3) for i in (9, 10)])
    _fill(cells, 2, [low(i, -2) for i in (4, 6, 7, 13)])
    _put(cells, low(9, -2), 3)
    _put(cells, low(11, -2), 4)
    _label(cells, labels, low(10, -2), "a6")
    _fill(cells, "M", [low(i, -2) for i in (5, 8, 12)])
    _fill(cells, 1, [low(i, -1) for i in (4, 14)])
    _label(cells, labels, low(6, -1), "s", "primed")
    _label(cells, labels, low(7, -1), "a1")
    _label(cells, labels, low(8, -1), "a2")
    _put(cells, low(9, -1), 4)
    _label(cells, labels, low(10, -1), "a5")
    _label(cells, labels, low(12, -1), "r")
    _fill(cells, "M", [low(i, -1) for i in (5, 11, 13)])
    _fill(cells, 1, [at(i, 0) for i in (0, 2, 3, 15, 17, 18, 20)])
    _fill(cells, 2, [at(i, 0) for i in (1, 4, 16, 19)])
    _fill(cells, 3, [at(i, 0) for i in (5, 14)])
    _put(cells, at(6, 0), 4)
    _put(cells, at(12, 0), 5)
    _label(cells, labels, at(9, 0), "a3")
    _label(cells, labels, at(10, 0), "a4")
    _fill(cells, "M", [at(i, 0) for i in (7, 8, 11, 13)])
    return cells, labels


def hex_and():
    """AND gate: same frame as the OR with the a-ring rearranged."""
    cells, labels = {}, {}
    at = _hex_gate_shared(cells, labels)

    def low(i, j):
        return (i - j, j)

    _fill(cells, 1, [low(i, -4) for i in (7, 8, 9, 10)])
    _fill(cells, 1, [low(i, -3) for i in (4, 5, 12)])
    _fill(cells, 2, [low(i, -3) for i in (7, 11)])
    _put(cells, low(9, -3), 3)
    _fill(cells, "M", [low(i, -3) for i in (8, 10)])
    _fill(cells, 2, [low(i, -2) for i in (4, 13)])
    _fill(cells, 3, [low(i, -2) for i in (6, 8)])
    _put(cells, low(11, -2), 4)
    _label(cells, labels, low(9, -2), "a5")
    _label(cells, labels, low(10, -2), "a6")
    _fill(cells, "M", [low(i, -2) for i in (5, 7, 12)])
    _fill(cells, 1, [low(i, -1) for i in (4, 14)])
    _label(cells, labels, low(6, -1), "s", "primed")
    _label(cells, labels, low(7, -1), "a1")
    _put(cells, low(8, -1), 4)
    _label(cells, labels, low(9, -1), "a4")
    _label(cells, labels, low(12, -1), "r")
    _fill(cells, "M", [low(i, -1) for i in (5, 10, 11, 13)])
    _fill(cells, 1, [at(i, 0) for i in (0, 2, 3, 15, 17, 18, 20)])
    _fill(cells, 2, [at(i, 0) for i in (1, 4, 16, 19)])
    _fill(cells, 3, [at(i, 0) for i in (5, 14)])
    _put(cells, at(6, 0), 4)
    _put(cells, at(12, 0), 5)
    _label(cells, labels, at(8, 0), "a2")
    _label(cells, labels, at(9, 0), "a3")
    _fill(cells, "M", [at(i, 0) for i in (7, 10, 11, 13)])
    return cells, labels


def hex_loopback():
    """An output wire led back past an input wire's starting point.

    The vertical s-wire passes the horizontal x-wire; the 4-clues at the
    joint are satisfied by each wire's own complementary pair, so the two
    signals stay independent.
    """
    cells, labels = {}, {}

    def at(i, j):
        return (i - 2, j + 3)

    _fill(cells, 1, [at(0, j) for j in (3, 4, 6, 7, 9, 10, 12, 13)])
    _fill(cells, 2, [at(0, j) for j in (2, 5, 8, 11)])
    _fill(cells, "M", [at(1, j) for j in (1, 2, 4, 5, 7, 8, 10, 11, 13)])
    _fill(cells, 3, [at(1, j) for j in (3, 6, 9, 12)])
    _fill(cells, 5, [at(2, j) for j in (1, 4, 10)])
    _put(cells, at(2, 7), 4)
    for j in (2, 5, 8, 11):
        _label(cells, labels, at(2, j), "s", "primed")
    for j in (3, 6, 9, 12):
        _label(cells, labels, at(2, j), "s", "plain")
    _fill(cells, "M", [at(3, j) for j in (0, 1, 3, 4, 9, 10, 12)])
    _fill(cells, 3, [at(3, j) for j in (2, 11)])
    _fill(cells, 4, [at(3, j) for j in (5, 8)])
    _label(cells, labels, at(3, 7), "x", "primed")
    _label(cells, labels, at(3, 6), "x", "plain")
    _fill(cells, 1, [at(4, j) for j in (1, 2, 10, 11)])
    _put(cells, at(4, 0), 2)
    _put(cells, at(4, 3), 3)
    _fill(cells, 4, [at(4, j) for j in (6, 9)])
    _fill(cells, "M", [at(4, j) for j in (4, 8)])
    _label(cells, labels, at(4, 5), "x", "primed")
    _label(cells, labels, at(4, 7), "x", "plain")
    _fill(cells, "M", [at(5, j) for j in (4, 5, 6, 8)])
    _put(cells, at(5, 9), 1)
    _put(cells, at(5, 3), 2)
    _put(cells, at(5, 7), 5)
    _fill(cells, 1, [at(6, j) for j in (3, 9)])
    _put(cells, at(6, 4), 2)
    _fill(cells, 3, [at(6, j) for j in (5, 8)])
    _label(cells, labels, at(6, 7), "x", "primed")
    _put(cells, at(6, 6), "M")
    _put(cells, at(7, 5), 1)
    _put(cells, at(7, 9), 2)
    _put(cells, at(7, 6), 3)
    _label(cells, labels, at(7, 7), "x", "plain")
    _put(cells, at(7, 8), "M")
    _fill(cells, "M", [at(8, j) for j in (6, 8)])
    _put(cells, at(8, 5), 1)
    _put(cells, at(8, 7), 5)
    _put(cells, at(9, 5), 2)
    _put(cells, at(9, 6), "M")
    return cells, labels
