"""Exception types shared across the package."""


class HGKError(Exception):
    """Base class for all package errors."""


class ValidationError(HGKError, ValueError):
    """An input object violates its structural invariants."""


class SizeCapError(HGKError):
    """An exhaustive routine was asked to run above its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class ParseError(HGKError, ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        loc = ""
        if path is not None:
            loc += f"{path}:"
        if line is not None:
            loc += f"{line}:"
        super().__init__(f"{loc} {message}".strip())
        self.line = line
        self.path = path


class NotChordalError(HGKError, ValueError):
    """Graph has no perfect elimination ordering; ``witness`` is a chordless cycle."""

    def __init__(self, witness):
        super().__init__(f"graph is not chordal; chordless cycle {list(witness)}")
        self.witness = tuple(witness)


class DisconnectedError(HGKError, ValueError):
    """Operation requires a connected graph."""

    def __init__(self, components):
        super().__init__(f"graph has {len(components)} components")
        self.components = components
