"""Exception types raised across the toolkit."""


class CfkitError(Exception):
    """Base class for all cfkit domain errors."""


class OutOfRangeError(CfkitError, ValueError):
    """A numeric input lies outside its documented range."""


class JointBoundViolationError(CfkitError, ValueError):
    """Joint degree outside the admissible interval for its (u, v) pair."""


class EmptyRangeError(CfkitError, ValueError):
    """A derived interval came out empty (defensive; unreachable for valid inputs)."""


class OutOfEpsilonRangeError(CfkitError, ValueError):
    """Perturbation size outside the admissible epsilon interval."""


class DegenerateDenominatorError(CfkitError, ArithmeticError):
    """Score normalizer collapsed to zero; signals corrupted inputs."""


class BadItemCountError(CfkitError, ValueError):
    """Questionnaire does not contain exactly seven items."""


class ItemOutOfRangeError(CfkitError, ValueError):
    """Questionnaire item outside the 0..10 integer scale."""


class EmptyFeasibleRegionError(CfkitError, ValueError):
    """Solver feasible interval is empty (defensive; unreachable for valid inputs)."""
