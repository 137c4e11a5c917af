class VolterraError(ValueError):
    """Base class for every domain error raised by the Models package."""


class InvalidParams(VolterraError):
    pass


class InvalidSeries(VolterraError):
    pass


class ZeroConstantTerm(VolterraError):
    pass


class NonzeroConstantTerm(VolterraError):
    pass


class ConstantTermNotOne(VolterraError):
    pass


class RadiusTooLarge(VolterraError):
    pass


class TruncationUnreliable(VolterraError):
    pass


class UnsupportedSpec(VolterraError):
    pass


class MembershipCheckFailed(VolterraError):
    pass


class PoleAtEvaluationPoint(VolterraError):
    pass


class NoPositiveStart(VolterraError):
    pass


class HypothesisViolatedAtOrigin(VolterraError):
    pass
