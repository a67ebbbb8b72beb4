"""Exception types shared across the package."""


class MinelogicError(Exception):
    """Base class for all package errors."""


class UnknownCoord(MinelogicError):
    """A coordinate was not part of the board footprint."""


class ParseError(MinelogicError):
    """Malformed input text; carries the offending line number."""

    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class ValidationError(MinelogicError):
    """A board failed structural validation."""


class PinError(MinelogicError):
    """A pin targeted a cell that is not covered."""


class EmptySolutionSet(MinelogicError):
    """An operation required at least one consistent assignment."""


class LimitExceeded(MinelogicError):
    """Enumeration exceeded a configured cell or solution budget."""


class UnknownGadget(MinelogicError):
    """No catalog entry under the requested name."""


class OverlapConflict(MinelogicError):
    """Two placed fragments disagreed about a shared coordinate."""

    def __init__(self, coord, ours, theirs):
        super().__init__(f"conflict at {coord}: {ours!r} vs {theirs!r}")
        self.coord = coord


class NotPeriodic(MinelogicError):
    """extend_wire was called on a gadget without a period descriptor."""


class InconsistentUnderPin(MinelogicError):
    """Pinning an input row left the board with no solutions."""


class UnknownNet(MinelogicError):
    """A netlist referenced an undeclared net."""


class CycleError(MinelogicError):
    """The gate graph contained a combinational cycle."""


class ArityError(MinelogicError):
    """A gate was given the wrong number of operands."""


class RoutingFailure(MinelogicError):
    """The layout engine could not realize a connection."""


class GridMismatch(MinelogicError):
    """An operation required a different grid kind."""
