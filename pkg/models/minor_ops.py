from dataclasses import dataclass
from typing import Union

from .signed_graph import Switching


@dataclass(frozen=True)
class DeleteVertex:
    vertex: int

    def to_dict(self) -> dict:
        return {'kind': 'delete_vertex', 'vertex': self.vertex}


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int
    sign: str

    def to_dict(self) -> dict:
        return {'kind': 'delete_edge', 'u': self.u, 'v': self.v, 'sign': self.sign}


@dataclass(frozen=True)
class Switch:
    switching: Switching

    def to_dict(self) -> dict:
        return {'kind': 'switch', 'switching': self.switching.to_dict()}


@dataclass(frozen=True)
class ContractPositiveEdge:
    """Merge the endpoints of an existing positive non-loop edge."""

    u: int
    v: int

    def to_dict(self) -> dict:
        return {'kind': 'contract', 'u': self.u, 'v': self.v}


SignedMinorOp = Union[DeleteVertex, DeleteEdge, Switch, ContractPositiveEdge]


def minor_op_from_dict(data: dict) -> SignedMinorOp:
    kind = data.get('kind')
    if kind == 'delete_vertex':
        return DeleteVertex(int(data['vertex']))
    if kind == 'delete_edge':
        return DeleteEdge(int(data['u']), int(data['v']), data['sign'])
    if kind == 'switch':
        return Switch(Switching.from_dict(data.get('switching', {})))
    if kind == 'contract':
        return ContractPositiveEdge(int(data['u']), int(data['v']))
    raise ValueError(f"Unknown minor operation: {kind}")
