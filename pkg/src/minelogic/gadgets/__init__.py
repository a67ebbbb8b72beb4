"""Gadget catalog and verification.

Boards that realize circuit elements: wires carrying a Boolean as two
complementary cell families, gates whose solution sets implement AND/OR/NOT,
plus curves, splitters and the loop-back joint.  Fixtures are verified, not
trusted: every catalog entry must pass its claims and reproduce its expected
truth table under exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..boardio import parse_board, serialize_board
from ..errors import (EmptySolutionSet, InconsistentUnderPin, NotPeriodic,
                      OverlapConflict, ParseError)
from ..grid import Annotation, Board, Coord
from ..solver import Pin, enumerate_solutions, project_solutions
from .catalog import CATALOG_NAMES, get_gadget
from .model import (Gadget, PeriodDescriptor, Placement, Port, TruthRow,
                    TruthTable, cells_to_board)
from .tables import EXPECTED

__all__ = [
    "CATALOG_NAMES", "EXPECTED", "Gadget", "PeriodDescriptor", "Placement",
    "Port", "RowResult", "TruthRow", "TruthTable", "VerifyReport",
    "extend_wire", "gadget_from_text", "gadget_to_text", "get_gadget",
    "instantiate", "loopback_independence", "transform_gadget",
    "verify_gadget",
]


# ------------------------------------------------------------ placement ---

def transform_gadget(g: Gadget, p: Placement) -> Gadget:
    """The same gadget re-expressed in world coordinates under ``p``."""
    grid = g.grid
    cells = {p.transform(grid, c): v for c, v in g.footprint.cells.items()}
    annotations = tuple(
        Annotation(p.transform(grid, a.target), a.label, a.polarity, a.forced_mine)
        for a in g.footprint.annotations)
    ports = tuple(
        Port.make(q.name, q.role, p.transform(grid, q.var_cell),
                  p.transform(grid, q.comp_cell),
                  p.transform_vector(grid, q.direction))
        for q in g.ports)
    period = None
    if g.period is not None and p.rotation == 0 and not p.mirror:
        dot = g.period.axis[0] * p.translation[0] + g.period.axis[1] * p.translation[1]
        period = PeriodDescriptor(g.period.axis, g.period.lo + dot)
    return Gadget(g.name, grid, Board(grid, cells, annotations), ports, period)


def instantiate(g: Gadget, p: Placement, into: Board) -> Board:
    """Merge the placed gadget into ``into``; identical overlaps unify."""
    placed = transform_gadget(g, p)
    if into.grid is not g.grid:
        raise OverlapConflict((0, 0), into.grid, g.grid)
    cells = dict(into.cells)
    for coord, value in placed.footprint.cells.items():
        if coord in cells and cells[coord] != value:
            raise OverlapConflict(coord, cells[coord], value)
        cells[coord] = value
    annotations = set(into.annotations) | set(placed.footprint.annotations)
    return Board(g.grid, cells, tuple(annotations))


# ------------------------------------------------------------ extension ---

def extend_wire(g: Gadget, periods: int) -> Gadget:
    """Lengthen a periodic wire by ``periods`` repeats of its 3-cell slab."""
    if g.period is None:
        raise NotPeriodic(f"{g.name} has no period descriptor")
    if periods < 0:
        raise ValueError("periods must be nonnegative")
    if periods == 0:
        return g
    ax, lo = g.period.axis, g.period.lo
    hi = lo + 3

    def proj(c: Coord) -> int:
        return c[0] * ax[0] + c[1] * ax[1]

    def shift(c: Coord, k: int) -> Coord:
        return (c[0] + 3 * k * ax[0], c[1] + 3 * k * ax[1])

    def move(c: Coord) -> Coord:
        return shift(c, periods) if proj(c) >= hi else c

    cells = {}
    annotations = []
    for coord, value in g.footprint.cells.items():
        cells[move(coord)] = value
        if lo <= proj(coord) < hi:
            for j in range(1, periods + 1):
                cells[shift(coord, j)] = value
    for a in g.footprint.annotations:
        annotations.append(Annotation(move(a.target), a.label, a.polarity, a.forced_mine))
        if lo <= proj(a.target) < hi:
            for j in range(1, periods + 1):
                annotations.append(Annotation(shift(a.target, j), a.label,
                                              a.polarity, a.forced_mine))
    ports = tuple(
        Port.make(q.name, q.role, move(q.var_cell), move(q.comp_cell), q.direction)
        for q in g.ports)
    board = Board(g.grid, cells, tuple(annotations))
    return Gadget(g.name, g.grid, board, ports, g.period)


# ---------------------------------------------------------- truth tables ---

@dataclass(frozen=True)
class RowResult:
    inputs: tuple[bool, ...]
    ok: bool
    detail: str = ""
    observed_outputs: frozenset = frozenset()


@dataclass
class VerifyReport:
    gadget: str
    rows: list[RowResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def summary(self) -> str:
        lines = [f"{self.gadget}: {'PASS' if self.ok else 'FAIL'}"]
        for r in self.rows:
            mark = "ok " if r.ok else "FAIL"
            ins = ",".join("T" if v else "F" for v in r.inputs)
            lines.append(f"  [{mark}] inputs {ins}" + (f": {r.detail}" if r.detail else ""))
        return "\n".join(lines)


def _label_cell(board: Board, name: str) -> Coord:
    groups = board.labels().get(name)
    if not groups or not groups["plain"]:
        raise KeyError(f"no plain cell labelled {name!r}")
    return groups["plain"][0]


def verify_gadget(g: Gadget, expected: TruthTable) -> VerifyReport:
    """Pin each input row, enumerate, and compare against the expected table.

    Inputs are driven by pinning each input port's var cell to mine iff the
    value is true and its complement cell to the opposite.  Expected rows
    give the output port values, exact values for named internal cells, and
    admissible projection sets for ambiguous internal groups.
    """
    report = VerifyReport(g.name)
    in_ports = [g.port(n) for n in expected.inputs]
    out_ports = [g.port(n) for n in expected.outputs]
    board = g.footprint
    for row in expected.rows:
        pins = []
        for port, value in zip(in_ports, row.inputs):
            pins.append(Pin(port.var_cell, value))
            pins.append(Pin(port.comp_cell, not value))
        sols = enumerate_solutions(board, pins, max_covered=None)
        if not len(sols):
            report.rows.append(RowResult(row.inputs, False,
                                         "no solutions under input pins"))
            continue
        problems = []
        out_proj = project_solutions(sols, [p.var_cell for p in out_ports])
        if out_proj != {row.outputs}:
            problems.append(f"outputs {sorted(out_proj)} != {row.outputs}")
        for name, value in sorted(row.fixed.items()):
            proj = project_solutions(sols, [_label_cell(board, name)])
            if proj != {(value,)}:
                problems.append(f"{name} not fixed to {value}")
        for names, admissible in row.groups:
            proj = project_solutions(sols, [_label_cell(board, n) for n in names])
            if proj != admissible:
                problems.append(f"group {names}: {sorted(proj)} != {sorted(admissible)}")
        report.rows.append(RowResult(row.inputs, not problems, "; ".join(problems),
                                     frozenset(out_proj)))
    return report


def loopback_independence(g: Gadget, a: Port, b: Port):
    """Joint support of two ports' signal cells over the unpinned fixture."""
    sols = enumerate_solutions(g.footprint, max_covered=None)
    if not len(sols):
        raise EmptySolutionSet(f"{g.name} has no solutions")
    pairs = project_solutions(sols, [a.var_cell, b.var_cell])
    return {
        "gadget": g.name,
        "ports": (a.name, b.name),
        "pairs": pairs,
        "independent": len(pairs) == 4,
    }


# --------------------------------------------------------------- file IO ---

def gadget_to_text(g: Gadget) -> str:
    """Board text plus ``port`` stanzas (and the period as a comment)."""
    out = [f"# gadget {g.name}", serialize_board(g.footprint).rstrip("\n")]
    for p in g.ports:
        out.append(
            f"port {p.role} {p.var_cell[0]} {p.var_cell[1]} "
            f"{p.comp_cell[0]} {p.comp_cell[1]} "
            f"{p.direction[0]} {p.direction[1]} {p.phase}  # {p.name}")
    if g.period is not None:
        out.append(f"# period {g.period.axis[0]} {g.period.axis[1]} {g.period.lo}")
    return "\n".join(out) + "\n"


def gadget_from_text(text: str, name: str = "gadget") -> Gadget:
    board_lines, ports, period = [], [], None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("# gadget "):
            name = stripped.split(None, 2)[2]
            continue
        if stripped.startswith("# period "):
            parts = stripped.split()
            period = PeriodDescriptor((int(parts[2]), int(parts[3])), int(parts[4]))
            continue
        if stripped.startswith("port "):
            body, _, comment = raw.partition("#")
            parts = body.split()
            if len(parts) != 8 or parts[1] not in ("input", "output"):
                raise ParseError(line_no, f"malformed port line {raw!r}")
            pname = comment.strip() or f"port{len(ports)}"
            v = tuple(int(x) for x in parts[2:8])
            ports.append(Port(pname, parts[1], (v[0], v[1]), (v[2], v[3]),
                              (v[4], v[5]), int(parts[7])))
            continue
        board_lines.append(raw)
    board = parse_board("\n".join(board_lines) + "\n")
    return Gadget(name, board.grid, board, tuple(ports), period)


def write_fixture_files(directory) -> list:
    """Regenerate the stored .board files from the in-code catalog."""
    import pathlib

    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in CATALOG_NAMES:
        path = directory / f"{name}.board"
        path.write_text(gadget_to_text(get_gadget(name)))
        written.append(path)
    return written


def fixture_dir():
    import pathlib

    return pathlib.Path(__file__).parent / "data"
