"""Exception types shared by the library and the command line front end."""


class UsageError(ValueError):
    """Raised when an operation is called outside its preconditions."""


class CapacityError(RuntimeError):
    """Raised when an enumeration would exceed the caller's cap.

    The exact number of items that would have been produced is kept on
    ``count`` so the caller can decide whether to retry with a larger cap.
    """

    def __init__(self, count: int, cap: int, what: str = "solutions"):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} {what} exceed the cap of {cap}")


class ParseError(UsageError):
    def __init__(self, message: str, line: int, column: int, text: str = ""):
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")
