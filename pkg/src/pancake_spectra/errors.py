"""Exception types shared across the package."""

from __future__ import annotations


class CapacityError(RuntimeError):
    """A computation was refused because the instance exceeds a configured cap."""


class NumericError(RuntimeError):
    """An iterative numeric routine failed to reach its accuracy target."""


class NotEquitableError(ValueError):
    """A vertex partition failed the constant-neighbour-count test.

    Carries the offending cell pair and two witness vertices whose
    neighbour counts into ``other_cell`` disagree.
    """

    def __init__(self, cell: int, other_cell: int, witness_a: int, witness_b: int,
                 count_a: int, count_b: int) -> None:
        self.cell = cell
        self.other_cell = other_cell
        self.witness_a = witness_a
        self.witness_b = witness_b
        self.count_a = count_a
        self.count_b = count_b
        super().__init__(
            f"partition is not equitable on cell pair ({cell}, {other_cell}): "
            f"vertex {witness_a} has {count_a} neighbours in cell {other_cell} "
            f"but vertex {witness_b} has {count_b}"
        )
