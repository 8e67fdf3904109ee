"""Exception types shared across the package."""


class PscError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class InvalidInput(PscError, ValueError):
    pass


class ResourceLimit(PscError):
    """A computation exceeded its configured effort or enumeration cap."""


class UnsupportedFamily(PscError):
    pass


class ParseError(PscError, ValueError):
    pass


class InvariantViolation(PscError, ValueError):
    pass


class MissingFixture(PscError, LookupError):
    pass
