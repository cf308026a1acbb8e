"""Exception hierarchy shared across the package.

Every error carries the process exit code the CLI maps it to:
1 = verification/coherence failure, 2 = syntax/usage, 3 = enumeration
budget exceeded, 4 = domain violation (structurally valid input outside
an operation's domain).
"""


class FlatstirError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class SyntaxFormatError(FlatstirError):
    """Malformed textual input (word, partition, b-file, CSV, cache JSON)."""

    exit_code = 2


class WordSyntaxError(SyntaxFormatError):
    pass


class PartitionSyntaxError(SyntaxFormatError):
    pass


class BFileFormatError(SyntaxFormatError):
    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class TableFormatError(SyntaxFormatError):
    pass


class BudgetExceededError(FlatstirError):
    """Projected enumeration size exceeds the configured object cap."""

    exit_code = 3

    def __init__(self, projected: int, cap: int, what: str = "enumeration"):
        self.projected = projected
        self.cap = cap
        super().__init__(
            f"{what} would visit {projected} objects, exceeding the budget of {cap}"
        )


class DomainError(FlatstirError):
    """Well-formed value outside the domain of the requested operation."""

    exit_code = 4


class NotStirlingError(DomainError):
    pass


class NotFlattenedError(DomainError):
    pass


class NotCanonicalError(DomainError):
    """Partition fails canonical-form validation; carries the diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        detail = "; ".join(d.message for d in self.diagnostics)
        super().__init__(f"partition is not in canonical form: {detail}")


class NotTypeBError(DomainError):
    """Block family violates one of the five defining conditions."""

    def __init__(self, condition: int, message: str):
        self.condition = condition
        super().__init__(f"not a type B set partition (condition {condition}): {message}")


class SeriesPrecisionError(FlatstirError):
    """Series evaluation could not be certified to round to an integer."""

    exit_code = 1


class CacheCoherenceError(FlatstirError):
    """A cached count disagrees with its re-derivation."""

    exit_code = 1

    def __init__(self, entry_key, cached, derived):
        self.entry_key = entry_key
        self.cached = cached
        self.derived = derived
        super().__init__(
            f"cache entry {entry_key} holds {cached} but re-derivation gives {derived}"
        )
