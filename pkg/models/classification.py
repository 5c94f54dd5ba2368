from dataclasses import dataclass


@dataclass(frozen=True)
class Classification:
    """Switching-invariant class flags of a signed graph."""

    balanced: bool
    antibalanced: bool
    signed_bipartite: bool
    planar: bool

    def to_dict(self) -> dict:
        return {
            'balanced': self.balanced,
            'antibalanced': self.antibalanced,
            'signed_bipartite': self.signed_bipartite,
            'planar': self.planar
        }
