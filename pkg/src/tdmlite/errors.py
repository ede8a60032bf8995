"""Exception types shared across the library."""


class TdmError(Exception):
    """Base class for all library errors."""


# -- tensor / autodiff --------------------------------------------------------

class ShapeMismatch(TdmError):
    pass


class UnsupportedKind(TdmError):
    pass


class NotScalar(TdmError):
    pass


class DisconnectedGraph(TdmError):
    pass


class NonFiniteValue(TdmError):
    pass


# -- data ---------------------------------------------------------------------

class InvalidSpec(TdmError):
    pass


class InsufficientClasses(TdmError):
    pass


class InsufficientImages(TdmError):
    pass


class DegeneratePartition(TdmError):
    pass


# -- backbone -----------------------------------------------------------------

class InvalidPlan(TdmError):
    pass


# -- attention ----------------------------------------------------------------

class EmptySupport(TdmError):
    pass


class SingleClass(TdmError):
    pass


class InsufficientInstances(TdmError):
    pass


# -- metric head --------------------------------------------------------------

class ZeroVector(TdmError):
    pass


class LabelOutOfRange(TdmError):
    pass


# -- harness ------------------------------------------------------------------

class NonFiniteLoss(TdmError):
    pass


class InsufficientSamples(TdmError):
    pass


class ToleranceExceeded(TdmError):
    pass


class ConfigError(TdmError):
    pass


# -- checkpoint format --------------------------------------------------------

class BadMagic(TdmError):
    pass


class UnsupportedVersion(TdmError):
    pass


class ManifestMismatch(TdmError):
    pass


class TruncatedPayload(TdmError):
    pass
