import math
from dataclasses import dataclass
from typing import Tuple, Union

INF = math.inf

Length = Union[int, float]

PROFILE_INDICES = ('00', '01', '10', '11')


def format_length(value: Length) -> Union[int, str]:
    """Serialize a length; infinity becomes the literal 'inf'."""
    return 'inf' if value == INF else int(value)


def parse_length(value) -> Length:
    if value in ('inf', 'Infinity', None):
        return INF
    return int(value)


@dataclass(frozen=True)
class GirthProfile:
    """Shortest closed-walk lengths g_ij, i = parity of negative edges, j = parity of length."""

    g00: Length = INF
    g01: Length = INF
    g10: Length = INF
    g11: Length = INF

    def value(self, index: str) -> Length:
        return getattr(self, f'g{index}')

    @property
    def negative_girth(self) -> Length:
        return min(self.g10, self.g11)

    def as_tuple(self) -> Tuple[Length, Length, Length, Length]:
        return self.g00, self.g01, self.g10, self.g11

    def dominates(self, other: 'GirthProfile') -> bool:
        """Componentwise self >= other, infinity compared as maximal."""
        return all(a >= b for a, b in zip(self.as_tuple(), other.as_tuple()))

    @classmethod
    def of_negative_cycle(cls, k: int) -> 'GirthProfile':
        """Profile of C_{-k}: its only non-trivial type is (1, k mod 2)."""
        if k % 2:
            return cls(g00=2, g11=k)
        return cls(g00=2, g10=k)

    def to_dict(self) -> dict:
        return {f'g{index}': format_length(self.value(index)) for index in PROFILE_INDICES}

    @classmethod
    def from_dict(cls, data: dict) -> 'GirthProfile':
        return cls(**{f'g{index}': parse_length(data.get(f'g{index}')) for index in PROFILE_INDICES})

    def __str__(self) -> str:
        return '(' + ', '.join(str(format_length(v)) for v in self.as_tuple()) + ')'
