"""Exception types raised by transitepi.

Parsers raise ParseError subclasses that carry enough location information
(file, line) to point at the offending input; everything else derives from
TransitEpiError so callers can catch the whole family.
"""


class TransitEpiError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TransitEpiError):
    """Base class for input-data errors. Always carries a human-readable location."""

    def __init__(self, message, *, file=None, line=None):
        self.file = file
        self.line = line
        loc = ""
        if file is not None:
            loc += str(file)
        if line is not None:
            loc += f":{line}"
        if loc:
            message = f"{loc}: {message}"
        super().__init__(message)


class MissingColumn(ParseError):
    def __init__(self, name, *, file=None):
        self.column = name
        super().__init__(f"required column {name!r} not found in header", file=file)


class MalformedRow(ParseError):
    def __init__(self, line, reason, *, file=None):
        self.reason = reason
        super().__init__(f"malformed row: {reason}", file=file, line=line)


class OverlappingActivities(ParseError):
    def __init__(self, person_id, *, file=None):
        self.person_id = person_id
        super().__init__(f"overlapping activities for person {person_id!r}", file=file)


class MissingFile(ParseError):
    def __init__(self, name, *, directory=None):
        self.name = name
        where = f" in {directory}" if directory else ""
        super().__init__(f"required file {name!r} not found{where}")


class DanglingReference(ParseError):
    def __init__(self, kind, ref_id, *, file=None, line=None):
        self.kind = kind
        self.ref_id = ref_id
        super().__init__(f"reference to unknown {kind} {ref_id!r}", file=file, line=line)


class NonMonotonicTimes(ParseError):
    def __init__(self, trip_id, *, file=None, line=None):
        self.trip_id = trip_id
        super().__init__(f"stop times for trip {trip_id!r} do not strictly increase",
                         file=file, line=line)


class InvalidScale(TransitEpiError):
    """Synthetic-population scale parameters are unusable."""


class UnknownPerson(TransitEpiError):
    def __init__(self, person_id):
        self.person_id = person_id
        super().__init__(f"contact event references unknown person {person_id!r}")


class EmptyPopulation(TransitEpiError):
    """An operation that averages over persons received zero of them."""


class InvalidHorizon(TransitEpiError):
    """Simulation horizon must be at least one day."""


class ZeroNonBusDegree(TransitEpiError):
    """Degree ratio undefined: the non-transit layer has zero mean degree."""


class ZeroMeanDegree(TransitEpiError):
    """Outbreak size undefined: the effective mean degree is zero."""


class DegenerateDegrees(TransitEpiError):
    """No giant component is possible at any transmissibility for this degree sequence."""


class UnreachableR0(TransitEpiError):
    def __init__(self, r0_target, message):
        self.r0_target = r0_target
        super().__init__(message)


class ConfigError(TransitEpiError):
    """Invalid scenario or command-line configuration."""
