"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Base class for every error raised on mathematically invalid input.

    The CLI maps these to exit code 1.
    """


class IdentityWord(DomainError):
    pass


class UnknownGenerator(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at offset {position}: {message}")
        self.position = position


class ZeroElement(DomainError):
    pass


class NotHomogeneous(DomainError):
    pass


class NonpositiveDegree(DomainError):
    pass


class NotInT(DomainError):
    pass


class SplitUnavailable(DomainError):
    pass


class NotMember(DomainError):
    pass


class DegenerateSpan(DomainError):
    pass


class RankDeficient(DomainError):
    pass


class ScalarInput(DomainError):
    pass


class NotInBasisSpan(DomainError):
    pass


class VanishingWeighting(DomainError):
    pass


class TruncationMismatch(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class ProportionalityFailure(DomainError):
    """Two centralizer elements of equal degree with non-proportional leading parts.

    Homogeneous commuting elements of equal nonzero degree are always
    proportional, so this is never expected; seeing it means a bug.
    """
