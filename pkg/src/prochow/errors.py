"""Exception types raised by the library.

Every domain error derives from :class:`ToricError`, so callers can catch
the whole family at once while tests can pin the precise failure.
"""


class ToricError(Exception):
    """Base class for all domain errors."""


# ---------------------------------------------------------------- lattice


class ZeroVector(ToricError):
    """A nonzero lattice vector was required."""


# ---------------------------------------------------------------- fans


class FanError(ToricError):
    """Base class for fan construction and validation failures."""


class NotPrimitiveRay(FanError):
    """A ray generator is zero, non-primitive, or repeated."""


class NotStronglyConvex(FanError):
    """A cone contains a line."""


class NotExtremeRay(FanError):
    """A listed generator is not an extreme ray of its cone."""


class BadIntersection(FanError):
    """Two cones of a purported fan do not meet in a common face."""


class UnusedRay(FanError):
    """A listed ray appears in no cone."""


class RayOutsideSupport(FanError):
    """Subdivision ray lies outside the support of the fan."""


class RayAlreadyPresent(FanError):
    """Subdivision ray is already a ray of the fan."""


class RankTooHigh(FanError):
    """Operation only implemented for lattice rank <= 2."""


class Incompatible(FanError):
    """A cone of the source has no image cone under a lattice map."""

    def __init__(self, cone, message=""):
        self.cone = cone
        super().__init__(message or f"no target cone contains the image of {cone}")


class ConeNotInFan(ToricError):
    """A cone was used with a fan it does not belong to."""


class FanMismatch(ToricError):
    """Two objects live on different fans."""


# ---------------------------------------------------------------- pushforward


class NotOrbitRepresentable(ToricError):
    """The pushforward leaves the span of torus-orbit classes."""

    def __init__(self, cone, message=""):
        self.cone = cone
        super().__init__(message or f"image of the orbit of {cone} is not a union of orbits")


class NotProper(ToricError):
    """Cycle pushforward requested along an unsupported (non-proper) map."""


# ---------------------------------------------------------------- chow / csm


class BadDimension(ToricError):
    """Chow dimension out of range."""


class NotComplete(ToricError):
    """Operation requires a complete fan."""


class NotSmooth(ToricError):
    """Operation requires a smooth fan."""


class BadGrade(ToricError):
    """Cycle is not homogeneous of an admissible dimension."""


class NotSameFunction(ToricError):
    """Two decompositions do not expand to the same constructible function."""


# ---------------------------------------------------------------- diagrams


class DiagramError(ToricError):
    """Base class for completion-diagram validation failures."""


class NodeNotComplete(DiagramError):
    """A diagram node fan is not complete."""


class BaseNotSubfan(DiagramError):
    """The base fan is not a subfan of a diagram node."""


class EdgeNotRefinement(DiagramError):
    """A diagram edge is not a same-lattice refinement."""


class ConeNotInBase(DiagramError):
    """A cone was expected to belong to the diagram's base fan."""


# ---------------------------------------------------------------- file formats


class ParseError(ToricError):
    """Positioned error while reading one of the text formats."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = source or "<input>"
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
