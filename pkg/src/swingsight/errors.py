"""Exception taxonomy shared across the package.

Every error raised by library code derives from SwingsightError so callers
(CLI, HTTP facade) can map failures to exit codes / status codes by name.
"""

from __future__ import annotations


class SwingsightError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


# ---------------------------------------------------------------- motion data

class MalformedHeader(SwingsightError):
    """Swing file header line is missing or does not match the format."""


class UnknownMarkerColumn(SwingsightError):
    """Column header names a marker not in the skeleton config, or is misplaced."""


class RowArityMismatch(SwingsightError):
    """Data row does not have exactly 1 + 3 * marker_count cells."""


class NonFiniteCoordinate(SwingsightError):
    """A coordinate cell is present but not a finite decimal number."""


class EmptyBody(SwingsightError):
    """Swing file has headers but no data rows."""


class InfeasibleParams(SwingsightError):
    """Synthesis parameters cannot embed the requested swing geometry."""


# ---------------------------------------------------------- feature extraction

class InsufficientFrames(SwingsightError):
    """Swing too short for the region-of-interest search."""


class RequiredMarkerMissing(SwingsightError):
    """A marker needed by a feature is absent in the frames that matter."""


class NoLocalMinimum(SwingsightError):
    """Wrist height has no interior local minimum before peak hand speed."""


class DegenerateFeet(SwingsightError):
    """Shoe-tip markers coincide in the ground plane; stance line undefined."""


class ZeroTransverseDisplacement(SwingsightError):
    """Wrist does not move in the ground plane over the rise window."""


class ZeroHipWidth(SwingsightError):
    """Hip markers coincide in the ground plane; width ratio undefined."""


class EmptyDimension(SwingsightError):
    """Normalizer fit received a dimension with no values."""


class NonFiniteInput(SwingsightError):
    """Normalizer fit received NaN or infinity."""


class ArityMismatch(SwingsightError):
    """Vector length does not match the expected dimensionality."""


class UnknownRule(SwingsightError):
    """rule_id is not one of the supported coaching rules."""


# -------------------------------------------------------------------- learner

class EmptyData(SwingsightError):
    """Training requires at least one labelled example."""


class EmptyModel(SwingsightError):
    """Classification requires at least one rule node."""


class MalformedModelFile(SwingsightError):
    """Model file does not parse as the documented text format."""


class VersionMismatch(SwingsightError):
    """Model file was written by an incompatible format version."""


class ConflictingDuplicate(UserWarning):
    """Identical training vectors carry different labels.

    Reported as a warning: training continues and the first-seen label keeps
    its node.
    """


# ----------------------------------------------------------------- evaluation

class LengthMismatch(SwingsightError):
    """Prediction and truth sequences differ in length."""


class EmptyInput(SwingsightError):
    """Accuracy over zero examples is undefined."""


class TooFewExamples(SwingsightError):
    """Leave-one-out needs at least two labelled examples."""


# -------------------------------------------------------------- orchestration

class MissingModel(SwingsightError):
    """A positively weighted rule has no trained model."""


class AllWeightsZero(SwingsightError):
    """Weighted overall score is undefined when every weight is zero."""


class EmptyOutcomes(SwingsightError):
    """Cue list requires at least one assessed rule outcome."""


class EmptySession(SwingsightError):
    """Session report requires at least one assessment."""


# -------------------------------------------------------------------- service

class UnknownId(SwingsightError):
    """No stored object with the requested identifier."""


class StoreConflict(SwingsightError):
    """Write refers to an unknown rule or clashes with stored state."""
