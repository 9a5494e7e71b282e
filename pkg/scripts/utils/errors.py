"""
Error Types

Every failure the toolkit reports is a ZKScoutError subclass. Each class
carries the process exit code the CLI uses for it:

    2  malformed input (parse / format errors)
    3  precondition violated (e.g. NotElliptic on a hyperbolic complex)
    4  internal consistency failure (must be unreachable)
"""

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class ZKScoutError(Exception):
    exit_code = EXIT_PRECONDITION


# Input / parse errors

class InputFormatError(ZKScoutError):
    exit_code = EXIT_PARSE


class VertexOutOfRange(ZKScoutError):
    exit_code = EXIT_PARSE

    def __init__(self, vertex, m: int):
        self.vertex = vertex
        self.m = m
        super().__init__(f"vertex {vertex!r} is not in 1..{m}")


class GhostVertex(ZKScoutError):
    exit_code = EXIT_PARSE

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(
            f"vertex {vertex} lies in no facet (pass --allow-ghost-vertices to admit it)"
        )


# Precondition errors

class EmptyIndexSet(ZKScoutError):
    pass


class BoundaryOfPoint(ZKScoutError):
    pass


class NotSimplyConnectedAssumptionViolated(ZKScoutError):
    def __init__(self, ghosts):
        self.ghosts = tuple(ghosts)
        super().__init__(
            f"ghost vertices {list(self.ghosts)} give S^1 factors; Z_K is not simply connected"
        )


class NotElliptic(ZKScoutError):
    pass


class NotHyperbolic(ZKScoutError):
    pass


class CensusTooLarge(ZKScoutError):
    pass


class ParameterOutOfRange(ZKScoutError):
    pass


class AssertionRequired(ZKScoutError):
    pass


class InexactDivision(ZKScoutError):
    pass


class NonUnitConstantTerm(ZKScoutError):
    pass


class BoundaryRootUnresolved(ZKScoutError):
    pass


# Internal errors

class ReconstructionMismatch(ZKScoutError):
    exit_code = EXIT_INTERNAL


def all_error_types() -> list[type]:
    """Every concrete error class, in definition order."""
    found = []
    pending = [ZKScoutError]
    while pending:
        cls = pending.pop(0)
        for sub in cls.__subclasses__():
            if sub not in found:
                found.append(sub)
                pending.append(sub)
    return found
