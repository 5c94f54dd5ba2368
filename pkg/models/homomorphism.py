from dataclasses import dataclass, field
from typing import Optional, Tuple

from .girth import Length, format_length, parse_length
from .signed_graph import Switching


@dataclass(frozen=True)
class Homomorphism:
    """Switch the source at `switching`, then map vertex v to vmap[v] preserving signs."""

    switching: Switching
    vmap: Tuple[Optional[int], ...]

    def image(self, v: int) -> int:
        return self.vmap[v]

    def to_dict(self) -> dict:
        return {
            'switching': self.switching.to_dict(),
            'vmap': list(self.vmap)
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Homomorphism':
        return cls(
            switching=Switching.from_dict(data.get('switching', {})),
            vmap=tuple(data.get('vmap', []))
        )


@dataclass(frozen=True)
class NoHomCertificate:
    """g_ij(source) < g_ij(target) for the given index, which rules out a homomorphism."""

    index: str
    source_value: Length
    target_value: Length

    def to_dict(self) -> dict:
        return {
            'index': self.index,
            'source_value': format_length(self.source_value),
            'target_value': format_length(self.target_value)
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'NoHomCertificate':
        return cls(
            index=data.get('index', ''),
            source_value=parse_length(data.get('source_value')),
            target_value=parse_length(data.get('target_value'))
        )


@dataclass
class HomSearchResult:
    """Outcome of a decided homomorphism question."""

    homomorphism: Optional[Homomorphism] = None
    certificate: Optional[NoHomCertificate] = None
    nodes: int = 0

    @property
    def exists(self) -> bool:
        return self.homomorphism is not None

    def to_dict(self) -> dict:
        if self.homomorphism is not None:
            status = 'found'
        elif self.certificate is not None:
            status = 'certificate'
        else:
            status = 'none'
        return {
            'status': status,
            'homomorphism': self.homomorphism.to_dict() if self.homomorphism else None,
            'certificate': self.certificate.to_dict() if self.certificate else None,
            'nodes': self.nodes
        }


@dataclass(frozen=True)
class InducedEmbedding:
    """Host vertices realising SPC(order) as an induced subgraph.

    vertices[x] is the host vertex playing label x of spc(order, cayley);
    switching (over labels) turns the relabelled induced subgraph into it exactly.
    """

    order: int
    vertices: Tuple[int, ...]
    switching: Switching = field(default_factory=Switching)
    generators: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {
            'order': self.order,
            'vertices': list(self.vertices),
            'switching': self.switching.to_dict(),
            'generators': list(self.generators)
        }
