"""Exact enumeration of mine assignments consistent with a board's clues.

The search is depth-first over covered cells in canonical (row, col) order,
trying mine before clear, with constraint propagation at every node.  Only
two propagation rules are applied, both local to a single clue:

* a clue whose remaining requirement is zero clears its undecided neighbours;
* a clue whose remaining requirement equals its undecided neighbour count
  mines them all.

Anything beyond that is left to backtracking.  Output order is therefore
lexicographic over the canonical cell order with mine < clear, which keeps
golden files byte-stable.  Everything here is a pure function of its inputs;
no global state, no threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (EmptySolutionSet, LimitExceeded, PinError, UnknownCoord)
from .grid import Board, Coord, board_neighbors

MINE = True
CLEAR = False

DEFAULT_MAX_COVERED = 64
DEFAULT_MAX_SOLUTIONS = 10 ** 6


@dataclass(frozen=True)
class Pin:
    """An externally imposed value on a covered cell."""

    target: Coord
    value: bool  # MINE or CLEAR


@dataclass(frozen=True)
class Assignment:
    """A total mine/clear valuation of a board's covered cells."""

    coords: tuple[Coord, ...]
    mines: tuple[bool, ...]

    def __getitem__(self, coord: Coord) -> bool:
        try:
            return self.mines[self.coords.index(coord)]
        except ValueError:
            raise UnknownCoord(f"{coord} is not a covered cell") from None

    @property
    def values(self) -> dict[Coord, bool]:
        return dict(zip(self.coords, self.mines))


@dataclass
class SolutionSet:
    """All consistent assignments, canonically ordered and duplicate-free."""

    board: Board
    coords: tuple[Coord, ...]
    rows: list[tuple[bool, ...]]

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        for row in self.rows:
            yield Assignment(self.coords, row)

    def __getitem__(self, i) -> Assignment:
        return Assignment(self.coords, self.rows[i])


@dataclass(frozen=True)
class PartialAssignment:
    """Workspace for propagation: decided values plus the undecided frontier."""

    decided: dict[Coord, bool] = field(default_factory=dict)
    undecided: frozenset[Coord] = frozenset()


@dataclass(frozen=True)
class Contradiction:
    """Returned (not raised) when a clue is unsatisfiable."""

    coord: Coord
    reason: str


class _Problem:
    """Indexed view of a board for the search loop."""

    def __init__(self, board: Board):
        self.board = board
        self.cells = board.covered  # canonical order
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.clue_req: list[int] = []
        self.clue_members: list[list[int]] = []
        self.cell_clues: list[list[int]] = [[] for _ in self.cells]
        for coord, value in board.clues:
            members = [self.index[n] for n in board_neighbors(board, coord)
                       if board.cells[n] is None]
            cid = len(self.clue_req)
            self.clue_req.append(value)
            self.clue_members.append(members)
            for m in members:
                self.cell_clues[m].append(cid)
        self.clue_coord = [coord for coord, _ in board.clues]


def _propagate(prob: _Problem, values: list, mines: list, undec: list, trail: list,
               queue: list) -> Coord | None:
    """Run both rules to fixpoint.  Returns a clue coord on contradiction."""
    while queue:
        cid = queue.pop()
        need = prob.clue_req[cid] - mines[cid]
        if need < 0 or need > undec[cid]:
            return prob.clue_coord[cid]
        if undec[cid] == 0:
            continue
        if need == 0 or need == undec[cid]:
            value = (need != 0)
            for m in prob.clue_members[cid]:
                if values[m] is None:
                    bad = _assign(prob, m, value, values, mines, undec, trail, queue)
                    if bad is not None:
                        return bad
    return None


def _assign(prob: _Problem, i: int, value: bool, values: list, mines: list,
            undec: list, trail: list, queue: list) -> Coord | None:
    values[i] = value
    trail.append(i)
    bad = None
    for cid in prob.cell_clues[i]:
        # always finish the counter updates so undo stays exact
        undec[cid] -= 1
        if value:
            mines[cid] += 1
        need = prob.clue_req[cid] - mines[cid]
        if need < 0 or need > undec[cid]:
            if bad is None:
                bad = prob.clue_coord[cid]
        elif need == 0 or need == undec[cid]:
            queue.append(cid)
    return bad


def propagate(board: Board, start: PartialAssignment | None = None
              ) -> PartialAssignment | Contradiction:
    """Fixpoint of the two single-clue rules from ``start``."""
    prob = _Problem(board)
    values: list = [None] * len(prob.cells)
    mines = [0] * len(prob.clue_req)
    undec = [len(m) for m in prob.clue_members]
    trail: list[int] = []
    queue = list(range(len(prob.clue_req)))
    if start is not None:
        for coord, value in sorted(start.decided.items(), key=lambda cv: (cv[0][1], cv[0][0])):
            if coord not in prob.index:
                raise UnknownCoord(f"{coord} is not a covered cell")
            i = prob.index[coord]
            if values[i] is None:
                bad = _assign(prob, i, value, values, mines, undec, trail, queue)
                if bad is not None:
                    return Contradiction(bad, "clue unsatisfiable")
            elif values[i] != value:
                return Contradiction(coord, "conflicting start values")
    bad = _propagate(prob, values, mines, undec, trail, queue)
    if bad is not None:
        return Contradiction(bad, "clue unsatisfiable")
    decided = {prob.cells[i]: v for i, v in enumerate(values) if v is not None}
    undecided = frozenset(prob.cells[i] for i, v in enumerate(values) if v is None)
    return PartialAssignment(decided, undecided)


def _search(prob: _Problem, pins: list[tuple[int, bool]],
            max_solutions, collect) -> int:
    values: list = [None] * len(prob.cells)
    mines = [0] * len(prob.clue_req)
    undec = [len(m) for m in prob.clue_members]
    count = 0

    trail: list[int] = []
    queue = list(range(len(prob.clue_req)))
    for i, value in pins:
        if values[i] is None:
            if _assign(prob, i, value, values, mines, undec, trail, queue) is not None:
                return 0
        elif values[i] != value:
            return 0
    if _propagate(prob, values, mines, undec, trail, queue) is not None:
        return 0

    def undo(mark: int):
        while len(trail) > mark:
            i = trail.pop()
            value = values[i]
            values[i] = None
            for cid in prob.cell_clues[i]:
                undec[cid] += 1
                if value:
                    mines[cid] -= 1

    def dfs(lo: int):
        nonlocal count
        i = lo
        while i < len(values) and values[i] is not None:
            i += 1
        if i == len(values):
            count += 1
            if max_solutions is not None and count > max_solutions:
                raise LimitExceeded(f"more than {max_solutions} solutions")
            if collect is not None:
                collect.append(tuple(values))
            return
        for value in (MINE, CLEAR):
            mark = len(trail)
            queue.clear()
            if (_assign(prob, i, value, values, mines, undec, trail, queue) is None
                    and _propagate(prob, values, mines, undec, trail, queue) is None):
                dfs(i + 1)
            undo(mark)

    dfs(0)
    return count


def _prepare(board: Board, pins) -> tuple[_Problem, list[tuple[int, bool]]]:
    prob = _Problem(board)
    indexed = []
    for pin in pins:
        if not board.is_covered(pin.target):
            raise PinError(f"pin target {pin.target} is not a covered cell")
        indexed.append((prob.index[pin.target], pin.value))
    return prob, indexed


def _check_limits(board: Board, max_covered):
    n = len(board.covered)
    if max_covered is not None and n > max_covered:
        raise LimitExceeded(f"{n} covered cells exceeds limit {max_covered}")


def enumerate_solutions(board: Board, pins=(), *,
                        max_covered=DEFAULT_MAX_COVERED,
                        max_solutions=DEFAULT_MAX_SOLUTIONS) -> SolutionSet:
    """All assignments satisfying every clue and every pin, in canonical order."""
    _check_limits(board, max_covered)
    prob, indexed = _prepare(board, pins)
    rows: list[tuple[bool, ...]] = []
    _search(prob, indexed, max_solutions, rows)
    for row in rows:  # independent recheck, cheap insurance against solver bugs
        _recheck(prob, row)
    return SolutionSet(board, tuple(prob.cells), rows)


def count_solutions(board: Board, pins=(), *,
                    max_covered=DEFAULT_MAX_COVERED,
                    max_solutions=DEFAULT_MAX_SOLUTIONS) -> int:
    """``len(enumerate_solutions(...))`` without retaining the assignments."""
    _check_limits(board, max_covered)
    prob, indexed = _prepare(board, pins)
    return _search(prob, indexed, max_solutions, None)


def _recheck(prob: _Problem, row: tuple[bool, ...]):
    for cid, members in enumerate(prob.clue_members):
        if sum(row[m] for m in members) != prob.clue_req[cid]:
            raise AssertionError(
                f"solver bug: clue at {prob.clue_coord[cid]} violated")


def forced_cells(solutions: SolutionSet) -> dict[Coord, bool]:
    """Covered cells holding the same value in every solution."""
    if not solutions.rows:
        raise EmptySolutionSet("no solutions to intersect")
    first = solutions.rows[0]
    alive = set(range(len(solutions.coords)))
    for row in solutions.rows[1:]:
        alive = {i for i in alive if row[i] == first[i]}
        if not alive:
            break
    return {solutions.coords[i]: first[i] for i in sorted(alive)}


def project_solutions(solutions: SolutionSet, cells) -> set[tuple[bool, ...]]:
    """Distinct restrictions of the solutions to ``cells`` (order-preserving)."""
    idx = []
    for c in cells:
        try:
            idx.append(solutions.coords.index(c))
        except ValueError:
            raise UnknownCoord(f"{c} is not a covered cell") from None
    return {tuple(row[i] for i in idx) for row in solutions.rows}


@dataclass(frozen=True)
class Claim:
    kind: str  # "forced_mine" | "label"
    subject: str
    ok: bool
    detail: str = ""


@dataclass
class ClaimReport:
    claims: list[Claim]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if not c.ok]


def check_claims(board: Board, *, max_covered=DEFAULT_MAX_COVERED,
                 max_solutions=DEFAULT_MAX_SOLUTIONS) -> ClaimReport:
    """Verify annotation claims against the full solution set.

    Forced-mine cells must be mines in every solution.  For each label name,
    every solution must give all plain cells one shared value and all primed
    cells the complement.
    """
    sols = enumerate_solutions(board, max_covered=max_covered,
                               max_solutions=max_solutions)
    if not sols.rows:
        raise EmptySolutionSet("board has no consistent assignment")
    index = {c: i for i, c in enumerate(sols.coords)}
    claims: list[Claim] = []
    for coord in board.forced_mines():
        i = index[coord]
        bad = sum(1 for row in sols.rows if not row[i])
        claims.append(Claim("forced_mine", f"{coord}", bad == 0,
                            "" if bad == 0 else f"clear in {bad}/{len(sols.rows)} solutions"))
    for name, groups in sorted(board.labels().items()):
        plain = [index[c] for c in groups["plain"]]
        primed = [index[c] for c in groups["primed"]]
        bad = 0
        for row in sols.rows:
            vals = {row[i] for i in plain} | {not row[i] for i in primed}
            if len(vals) > 1:
                bad += 1
        claims.append(Claim("label", name, bad == 0,
                            "" if bad == 0 else f"incoherent in {bad}/{len(sols.rows)} solutions"))
    return ClaimReport(claims)


def dump_solutions(solutions: SolutionSet) -> str:
    """Golden-test dump: a coord-order header, then one M/. line per solution."""
    header = "cells " + " ".join(f"{c},{r}" for c, r in solutions.coords)
    lines = [header]
    for row in solutions.rows:
        lines.append("".join("M" if v else "." for v in row))
    return "\n".join(lines) + "\n"
