"""Exception types shared across the twin."""


class TwinError(Exception):
    """Base class for all library errors."""


class ValidationError(TwinError):
    """A parameter set or command violates a named invariant."""


class DomainError(TwinError):
    """An input is outside the mathematical domain of an operation."""


class InvalidChannel(TwinError):
    """Channel index outside 0..3."""


class BoundaryAngle(TwinError):
    """Direction angle too close to a cardinal direction for blend-mode actuation."""


class EmptyInput(TwinError):
    """An operation that needs data received none."""


class RangeExceeded(TwinError):
    """A motor rotation target falls outside the servo range.

    Carries the offending motor as (segment, channel), both 0-based, and the
    overshoot in radians (positive past psi_max, negative below zero).
    """

    def __init__(self, segment: int, channel: int, overshoot: float, message: str | None = None):
        self.segment = segment
        self.channel = channel
        self.overshoot = overshoot
        if message is None:
            # Messages number segments from 1 (segment 1 nearest the base).
            message = (
                f"motor (segment {segment + 1}, channel {channel}) exceeds servo "
                f"range by {overshoot:.6f} rad"
            )
        super().__init__(message)


class DegeneratePulleyWarning(UserWarning):
    """A pulley radius of zero was produced (zero cumulative pull)."""
