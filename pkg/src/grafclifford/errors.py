"""Exception hierarchy shared by the kernel, the expression language and the CLI."""


class GrafError(Exception):
    """Base class for every error raised by this package."""


class UsageError(GrafError, ValueError):
    """Bad arguments: index out of range, mismatched signatures, size budgets."""


class SignatureMismatch(UsageError):
    pass


class UnsupportedInput(GrafError):
    """The requested product is not defined for the given grade combination."""


class UnsupportedSignature(GrafError):
    """The construction does not exist (over the reals) for this signature."""


class ParseError(UsageError):
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
