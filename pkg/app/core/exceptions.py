"""Domain errors raised by the ordlab library and surfaced by the CLI"""


class OrdlabError(ValueError):
    """Base class for every domain error; `code` is the stable error name"""

    @property
    def code(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        detail = super().__str__()
        return f"{self.code}: {detail}" if detail else self.code


# dist_core
class NegativeEntry(OrdlabError):
    pass


class NotNormalized(OrdlabError):
    pass


class NonFiniteScore(OrdlabError):
    pass


class LengthMismatch(OrdlabError):
    pass


# majorization
class ZeroReference(OrdlabError):
    pass


class IrrationalReference(OrdlabError):
    pass


class StepBudgetExceeded(OrdlabError):
    pass


class SolverScaleExceeded(OrdlabError):
    pass


# poset_lab
class IndexOutOfRange(OrdlabError):
    pass


class NotARepresentation(OrdlabError):
    pass


class RadixOutOfRange(OrdlabError):
    pass


class NotMonotone(OrdlabError):
    pass


class NotAntisymmetric(OrdlabError):
    pass


class EmptySequence(OrdlabError):
    pass


class ScaleExceeded(OrdlabError):
    pass


class InvalidRealizer(OrdlabError):
    pass


class EmptySubset(OrdlabError):
    pass


# maxent
class TargetOutOfRange(OrdlabError):
    pass


class DegenerateTarget(OrdlabError):
    pass


class InfeasibleBound(OrdlabError):
    pass


class EmptyFeasibleSet(OrdlabError):
    pass


# fluct_lab
class NotIrreducible(OrdlabError):
    pass


class NotStationary(OrdlabError):
    pass


class ZeroInitialMass(OrdlabError):
    pass


class BadPathLength(OrdlabError):
    pass


class HypothesisViolated(OrdlabError):
    pass


class ZeroTargetMass(OrdlabError):
    pass


class EmptySamples(OrdlabError):
    pass


class TooFewSamples(OrdlabError):
    pass


class ParameterOutOfRange(OrdlabError):
    pass


# domain_lab
class NotDirected(OrdlabError):
    pass


class NoSignChange(OrdlabError):
    pass


class AlphabetMismatch(OrdlabError):
    pass


class EmptyInterval(OrdlabError):
    pass


class NotWayBelow(OrdlabError):
    pass


# cli_io
class ParseError(OrdlabError):
    """Malformed input file; `location` names the line or field"""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class MissingInput(OrdlabError):
    pass


class UnknownFlag(OrdlabError):
    pass
