"""Message field encodings and the per-message bit budget.

Every field costs ceil(log2(range)) bits; a fixed 8-bit header tags the
message kind. The widths below are a convention of this simulator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

HEADER_BITS = 8


def width(upper: int) -> int:
    """Bits needed to encode integers in [0, upper]."""
    return max(1, math.ceil(math.log2(upper + 1)))


def bit_budget(n_total: int) -> int:
    return 64 + 8 * math.ceil(math.log2(max(2, n_total)))


@dataclass(frozen=True)
class Encoding:
    max_id: int
    time: int
    height: int
    n_total: int

    @property
    def id_bits(self) -> int:
        return width(self.max_id)

    @property
    def time_bits(self) -> int:
        return width(self.time)

    @property
    def level_bits(self) -> int:
        return width(self.height)

    @property
    def rank_bits(self) -> int:
        return width(self.n_total)

    @property
    def priority_bits(self) -> int:
        # class flag + sign + magnitude up to (max group id + 1) * t
        return 2 + width((self.max_id + 1) * self.time)

    def message_bits(self, kind: str) -> int:
        i, ts, lv, rk, pr = (self.id_bits, self.time_bits, self.level_bits,
                             self.rank_bits, self.priority_bits)
        fields = {
            "route": 2 * i + lv,
            "deliver": 2 * i,
            # one level of u's and v's state: level, timestamps, group ids,
            # membership bits, group bases
            "notify": lv + 2 * ts + 2 * i + 2 + 2 * lv,
            "skiplist": lv + i,
            "ranked": pr + 2 * rk + i,
            "median": pr + i,
            "count": 4 * rk,
            "bit": i + 1,
            "gid": i,
            "glower": 2 * lv + 3 * i,
        }
        return HEADER_BITS + fields[kind]

    def max_bits(self, kinds) -> int:
        return max((self.message_bits(k) for k in kinds), default=0)
