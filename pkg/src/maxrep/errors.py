"""Exception hierarchy shared by every maxrep module."""


class MaxrepError(ValueError):
    pass


class ConstraintNotCommon(MaxrepError):
    def __init__(self, host_index, message=None):
        self.host_index = host_index
        super().__init__(message or f"constraint is not a subsequence of host {host_index}")


class GapOutOfRange(MaxrepError):
    pass


class SymbolTooRare(MaxrepError):
    pass


class AnchorMismatch(MaxrepError):
    pass


class PipelineInvariantViolated(MaxrepError):
    pass


class TooFewOccurrences(MaxrepError):
    pass


class MalformedTuple(MaxrepError):
    pass


class NotKRepeating(MaxrepError):
    pass


class SymbolNotInSeed(MaxrepError):
    pass


class EmptySeed(MaxrepError):
    pass


class InvalidK(MaxrepError):
    pass


class InstanceTooLarge(MaxrepError):
    pass
