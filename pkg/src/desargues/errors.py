"""Exception types shared across the package."""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class RingMismatchError(GeometryError, TypeError):
    """Operands belong to different coordinate rings."""


class OrderUnavailableError(GeometryError):
    """An order query was made on a ring that carries no order."""


class NotEnumerableError(GeometryError):
    """Enumeration was requested on an infinite model."""


class DegenerateJoinError(GeometryError):
    """A line was requested through two identical points."""


class NotOnLineError(GeometryError):
    """A point required to lie on a line does not."""


class NotOnSourceError(NotOnLineError):
    """A projected point is not on the projection's source line."""


class InvalidProjectionError(GeometryError):
    """The direction of a parallel projection is parallel to source or target."""


class InvalidConfigurationError(GeometryError):
    """A Desargues configuration violates one of its hypotheses."""

    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(f"invalid configuration: {clause}")


class DegenerateHexagonError(GeometryError):
    """A Pappus cross-join pair is parallel, so an intersection is missing."""


class HypothesisNotMetError(GeometryError):
    """The premises of the affine Pappus condition do not hold."""


class ConstructionDegenerateError(GeometryError):
    """A step of a point construction produced no unique meet."""

    def __init__(self, step: str, detail: str = ""):
        self.step = step
        msg = f"construction degenerate at {step}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class SuiteModelMismatchError(GeometryError):
    """A verification suite cannot run on the requested model or mode."""


class NotPlottableError(GeometryError):
    """A trace over a ring without plane coordinates was sent to the renderer."""
