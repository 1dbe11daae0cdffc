"""Exception types raised across the package."""


class NotInLanguage(ValueError):
    """A word has no factorization over the requested alphabet."""

    def __init__(self, word: str, position: int):
        self.word = word
        self.position = position
        super().__init__(f"{word!r} does not factorize: no letter matches at index {position}")


class ConstantTermNonzero(ValueError):
    pass


class VertexNotInGraph(KeyError):
    pass


class Unreachable(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


class UnknownId(KeyError):
    pass


class ResourceLimit(ValueError):
    """Requested size exceeds a configured enumeration cap."""
