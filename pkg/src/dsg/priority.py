"""Transformation priorities: an infinite class above every finite number."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class PriorityValue:
    infinite: bool = False
    number: int = 0

    @classmethod
    def inf(cls) -> "PriorityValue":
        return cls(True, 0)

    @classmethod
    def of(cls, number: int) -> "PriorityValue":
        return cls(False, int(number))

    def __lt__(self, other: "PriorityValue") -> bool:
        if not isinstance(other, PriorityValue):
            return NotImplemented
        return (self.infinite, self.number) < (other.infinite, other.number)

    @property
    def positive(self) -> bool:
        return self.infinite or self.number > 0

    @property
    def negative(self) -> bool:
        return not self.infinite and self.number < 0

    def __repr__(self) -> str:
        return "inf" if self.infinite else str(self.number)


INF = PriorityValue.inf()
