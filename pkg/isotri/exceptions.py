class IsotriException(Exception):
    """Base class for all isotri exceptions."""


class DegenerateTriangle(IsotriException):
    """The three points are collinear (or coincide) within tolerance."""


class NotScalene(IsotriException):
    """A construction that needs a < b < c received equal sides."""


class NoInteriorMinimum(IsotriException):
    """A one dimensional search found the objective monotone on its bracket."""


class InvalidPose(IsotriException):
    """Support lines of a pose do not bound a triangle."""


class ClosedFormMismatch(IsotriException):
    """A closed form disagrees with its numeric counterpart."""


class InputError(IsotriException):
    """Command line input could not be turned into a triangle."""
