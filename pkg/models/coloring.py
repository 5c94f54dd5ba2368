from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def circular_distance(a: int, b: int, p: int) -> int:
    d = (a - b) % p
    return min(d, p - d)


@dataclass(frozen=True)
class CircularColoring:
    """Points on Z_p; point i sits at position i/q on a circle of circumference p/q.

    p and q share a factor only when the witness needs half-grid points
    (see DESIGN.md); `circumference` is always reduced.
    """

    p: int
    q: int
    points: Tuple[int, ...]

    @property
    def circumference(self) -> Fraction:
        return Fraction(self.p, self.q)

    def reduced(self) -> 'CircularColoring':
        """Divide p, q and every point by common factors where the grid allows it."""
        p, q, points = self.p, self.q, self.points
        for factor in range(2, q + 1):
            while p % factor == 0 and q % factor == 0 and all(x % factor == 0 for x in points):
                p, q = p // factor, q // factor
                points = tuple(x // factor for x in points)
        return CircularColoring(p, q, points)

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'q': self.q,
            'circumference': format_fraction(self.circumference),
            'points': list(self.points)
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CircularColoring':
        return cls(
            p=int(data.get('p', 0)),
            q=int(data.get('q', 1)),
            points=tuple(int(x) for x in data.get('points', []))
        )


@dataclass(frozen=True)
class CircularChromaticResult:
    value: Fraction
    coloring: CircularColoring

    def to_dict(self) -> dict:
        return {
            'chi_c': format_fraction(self.value),
            'coloring': self.coloring.to_dict()
        }


@dataclass(frozen=True)
class DescentResult:
    """Coloring of the contracted Cayley graph; `guaranteed` holds when r < 4."""

    coloring: CircularColoring
    valid: bool
    guaranteed: bool
    diagnostic: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            'coloring': self.coloring.to_dict(),
            'valid': self.valid,
            'guaranteed': self.guaranteed,
            'diagnostic': self.diagnostic
        }
