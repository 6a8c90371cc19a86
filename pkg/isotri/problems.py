"""The four optimization problems."""
import enum


class Problem(str, enum.Enum):
    """Which optimal isosceles triangle to compute."""

    MIN_AREA_CONTAINER = "min-area-container"
    MIN_PERIM_CONTAINER = "min-perim-container"
    MAX_AREA_EMBEDDED = "max-area-embedded"
    MAX_PERIM_EMBEDDED = "max-perim-embedded"

    @property
    def metric(self) -> str:
        """Name of the objective, area or perimeter."""
        if self in (Problem.MIN_AREA_CONTAINER, Problem.MAX_AREA_EMBEDDED):
            return "area"
        return "perimeter"

    @property
    def maximize(self) -> bool:
        return self in (Problem.MAX_AREA_EMBEDDED, Problem.MAX_PERIM_EMBEDDED)

    @property
    def container(self) -> bool:
        return not self.maximize
