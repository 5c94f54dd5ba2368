from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from utils.errors import InvalidGenerator, InvalidSubset, MethodNotApplicable, NegativeLoopForbidden


def unit(i: int) -> int:
    """Standard basis vector e_i (1-indexed) as a bitvector."""
    return 1 << (i - 1)


def all_ones(k: int) -> int:
    """The all-one vector J of Z_2^k."""
    return (1 << k) - 1


@dataclass(frozen=True)
class CayleySpec:
    """Signed Cayley graph (Z_2^dim, S+, S-); 0 in S+ puts a positive loop at every vertex."""

    dim: int
    splus: FrozenSet[int] = frozenset()
    sminus: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'splus', frozenset(self.splus))
        object.__setattr__(self, 'sminus', frozenset(self.sminus))
        if self.dim < 0:
            raise InvalidGenerator(f"Dimension must be non-negative, got {self.dim}")
        bound = 1 << self.dim
        for s in self.splus | self.sminus:
            if not 0 <= s < bound:
                raise InvalidGenerator(f"Generator {s} is not in Z_2^{self.dim}")
        if 0 in self.sminus:
            raise NegativeLoopForbidden("0 in S- would put a negative loop at every vertex")

    @classmethod
    def spc(cls, k: int) -> 'CayleySpec':
        return cls(k, frozenset(unit(i) for i in range(1, k + 1)), frozenset([all_ones(k)]))

    @classmethod
    def spc_loop(cls, k: int) -> 'CayleySpec':
        return cls(k, frozenset([0] + [unit(i) for i in range(1, k + 1)]), frozenset([all_ones(k)]))

    @property
    def order(self) -> int:
        return 1 << self.dim

    def to_dict(self) -> dict:
        return {
            'dim': self.dim,
            'splus': sorted(self.splus),
            'sminus': sorted(self.sminus)
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CayleySpec':
        return cls(
            dim=int(data.get('dim', 0)),
            splus=frozenset(int(s) for s in data.get('splus', [])),
            sminus=frozenset(int(s) for s in data.get('sminus', []))
        )


@dataclass(frozen=True)
class PosetVertex:
    """Unordered pair {A, complement of A} over the ground set {0..k}.

    Stored as the lexicographically-least member, comparing characteristic
    vectors as integers with element k as the top bit; that member never
    contains k, so its characteristic vector is also the Z_2^k label.
    """

    k: int
    subset: FrozenSet[int]

    @classmethod
    def from_subset(cls, subset: Iterable[int], k: int) -> 'PosetVertex':
        members = frozenset(subset)
        if any(not 0 <= a <= k for a in members):
            raise InvalidSubset(f"Subset {sorted(members)} is not inside the ground set 0..{k}")
        if k in members:
            members = frozenset(range(k + 1)) - members
        return cls(k, members)

    @classmethod
    def from_label(cls, label: int, k: int) -> 'PosetVertex':
        return cls(k, frozenset(i for i in range(k) if label >> i & 1))

    @property
    def label(self) -> int:
        return sum(1 << a for a in self.subset)

    @property
    def complement(self) -> FrozenSet[int]:
        return frozenset(range(self.k + 1)) - self.subset

    @property
    def members(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        return self.subset, self.complement

    def to_dict(self) -> dict:
        return {'k': self.k, 'subset': sorted(self.subset)}


SPC_METHODS = ('projection', 'augmented', 'cayley', 'power', 'poset', 'edc', 'product')


@dataclass(frozen=True)
class SpcMethod:
    """One of the equivalent SPC(k) constructions; product carries its split a + b."""

    kind: str = 'cayley'
    split: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.kind not in SPC_METHODS:
            raise MethodNotApplicable(f"Unknown construction method: {self.kind}")
        if self.split is not None:
            if self.kind != 'product':
                raise MethodNotApplicable("Only the product method takes a split")
            a, b = self.split
            if a < 1 or b < 1:
                raise MethodNotApplicable(f"Product split needs a, b >= 1, got {a}+{b}")

    @classmethod
    def parse(cls, text: str) -> 'SpcMethod':
        """Parse 'cayley', 'product' or 'product:2+3'."""
        name, _, split = text.strip().lower().partition(':')
        if name == 'product' and split:
            a, _, b = split.partition('+')
            return cls('product', (int(a), int(b)))
        return cls(name)

    def __str__(self) -> str:
        if self.split:
            return f"{self.kind}:{self.split[0]}+{self.split[1]}"
        return self.kind


@dataclass(frozen=True)
class PcDistance:
    """Distance between two vertices of PC(k) and the shortest path length of each sign."""

    distance: int
    positive: int
    negative: int

    def to_dict(self) -> dict:
        return {
            'distance': self.distance,
            'positive_path': self.positive,
            'negative_path': self.negative
        }
