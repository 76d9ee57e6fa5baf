"""Small reference datasets: the eye/hair colour surveys."""

from .interval_table import IntervalTable
from .multivalued import MultiValuedVariable, parse_observations

EYES_HAIR_ROWS = ("black-e", "brown-e", "green-e", "blue-e")
EYES_HAIR_COLS = ("black-h", "brown-h", "red-h", "blond-h")
EYES_HAIR_CELLS = (
    ((60, 60), (119, 123), (20, 28), (4, 7)),
    ((15, 15), (50, 58), (14, 20), (5, 11)),
    ((5, 5), (24, 26), (10, 12), (11, 12)),
    ((20, 20), (70, 84), (16, 17), (90, 100)),
)


def eyes_hair_table() -> IntervalTable:
    """Interval table of eye colour by hair colour for 592 women."""
    return IntervalTable.from_cells(EYES_HAIR_CELLS, EYES_HAIR_ROWS, EYES_HAIR_COLS)


def five_individuals(vocabulary_order: bool = True) -> tuple[MultiValuedVariable, MultiValuedVariable]:
    """Five individuals with ambiguous eye (first) and hair (third) colour.

    With ``vocabulary_order`` the modalities are green, blue, brown and
    blond, black; otherwise they are sorted.
    """
    eyes = [{"green", "blue"}, {"brown"}, {"green"}, {"brown"}, {"green"}]
    hair = [{"black"}, {"black"}, {"blond", "black"}, {"blond"}, {"blond"}]
    xv = ("green", "blue", "brown") if vocabulary_order else None
    yv = ("blond", "black") if vocabulary_order else None
    return (
        parse_observations(eyes, xv, name="eyes"),
        parse_observations(hair, yv, name="hair"),
    )
