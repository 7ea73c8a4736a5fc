from typing import Any
from vstutils import exceptions


class NTException(exceptions.VSTUtilsException):
    _default_message = "{}"

    def __init__(self, *args, witness: Any = None):
        self.witness = witness
        super().__init__(self._default_message.format(*args))


class InvalidParameter(NTException):
    status = exceptions.status.HTTP_400_BAD_REQUEST


class ReflexivityViolation(InvalidParameter):
    _default_message = "Relation is not reflexive at {}."


class AntisymmetryViolation(InvalidParameter):
    _default_message = "Relation is not antisymmetric at {}."


class TransitivityViolation(InvalidParameter):
    _default_message = "Relation is not transitive at {}."


class CapExceeded(InvalidParameter):
    _default_message = "{} = {} exceeds the limit {}."


class NotT0(InvalidParameter):
    _default_message = "Points {} are not distinguished by open sets."


class NotATopology(InvalidParameter):
    _default_message = "Open sets are not closed under {}."


class NotOpen(InvalidParameter):
    _default_message = "Point set {} is not an upper set."


class NotClosed(InvalidParameter):
    _default_message = "Point set {} is not a lower set."


class EmptySet(InvalidParameter):
    _default_message = "Irreducibility is not defined for the empty set."


class EmptyModel(InvalidParameter):
    _default_message = "Model must have at least one point."


class EmptyFamily(InvalidParameter):
    _default_message = "Open family has no generators."


class EmptyClosedSet(InvalidParameter):
    _default_message = "Closed set must be nonempty."


class NotDirected(InvalidParameter):
    _default_message = "Rings {} have no upper bound in the list."


class SizeMismatch(InvalidParameter):
    _default_message = "Matrix sizes {} and {} differ."


class DegenerateFamily(InvalidParameter):
    _default_message = "Parameter interval ({}, {}) is empty."


class UnknownMember(InvalidParameter):
    _default_message = "Member {} is not in the model."


class AlreadyCovered(InvalidParameter):
    _default_message = "Prime {} is already covered by member {}."


class UnknownBackend(InvalidParameter):
    _default_message = "{} is not registered. {}"


class DepthExceeded(InvalidParameter):
    _default_message = "Depth {} exceeds the limit {}."


class OracleViolation(NTException):
    _default_message = "Refinement oracle broke its contract: {}."


class ImplicationViolation(NTException):
    _default_message = "{} violations found, first: {}."


class PatternViolation(NTException):
    _default_message = "Pattern ring is invalid: {}."


class UnsupportedDescriptor(NTException, exceptions.NotApplicable):
    _default_message = "Descriptor is not supported: {}."
