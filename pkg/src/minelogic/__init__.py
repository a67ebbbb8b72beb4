"""Minesweeper boards as logic circuits.

A library for modelling square and hexagonal Minesweeper boards, enumerating
every mine assignment consistent with the revealed clues, verifying
logic-gate gadgets against their truth tables, and compiling small Boolean
circuits into boards whose solution sets realize the circuit's function.
"""

from .grid import (COVERED, Annotation, Board, Coord, GridKind, Violation,
                   board_neighbors, neighbors, validate_board)
from .boardio import parse_board, serialize_board
from .solver import (CLEAR, MINE, Assignment, Claim, ClaimReport,
                     Contradiction, PartialAssignment, Pin, SolutionSet,
                     check_claims, count_solutions, dump_solutions,
                     enumerate_solutions, forced_cells, project_solutions,
                     propagate)
from . import errors

__all__ = [
    "COVERED", "CLEAR", "MINE",
    "Annotation", "Assignment", "Board", "Claim", "ClaimReport",
    "Contradiction", "Coord", "GridKind", "PartialAssignment", "Pin",
    "SolutionSet", "Violation",
    "board_neighbors", "check_claims", "count_solutions", "dump_solutions",
    "enumerate_solutions", "errors", "forced_cells", "neighbors",
    "parse_board", "project_solutions", "propagate", "serialize_board",
    "validate_board",
]

__version__ = "0.1.0"
