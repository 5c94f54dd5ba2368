import hashlib
from datetime import datetime
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from models import NEGATIVE, POSITIVE, SignedGraph
from utils.config_manager import get_config
from utils.errors import SGraphParseError, SignedGraphError

FIXTURE_ROOT = Path(__file__).resolve().parent.parent / 'fixtures'

SIGN_ALIASES = {'+': POSITIVE, '-': NEGATIVE, '−': NEGATIVE}


def parse_sgraph(text: str) -> SignedGraph:
    """Parse sgraph text: 'p sgraph <n>' header, 'e <u> <v> <sign>' edges, '#' comments."""
    n: Optional[int] = None
    edges: List[Tuple[int, int, str]] = []
    seen = set()

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()

        if fields[0] == 'p':
            if n is not None:
                raise SGraphParseError("Duplicate header", line_number)
            if len(fields) != 3 or fields[1] != 'sgraph':
                raise SGraphParseError(f"Expected 'p sgraph <n>', got {line!r}", line_number)
            n = _parse_int(fields[2], line_number)
            if n < 0:
                raise SGraphParseError("Vertex count must be non-negative", line_number)
            continue

        if fields[0] != 'e':
            raise SGraphParseError(f"Unknown line type {fields[0]!r}", line_number)
        if n is None:
            raise SGraphParseError("Edge line before the 'p sgraph' header", line_number)
        if len(fields) != 4:
            raise SGraphParseError(f"Expected 'e <u> <v> <sign>', got {line!r}", line_number)

        u = _parse_int(fields[1], line_number)
        v = _parse_int(fields[2], line_number)
        sign = SIGN_ALIASES.get(fields[3])
        if sign is None:
            raise SGraphParseError(f"Unknown sign {fields[3]!r}", line_number)
        if not (0 <= u < n and 0 <= v < n):
            raise SGraphParseError(f"Vertex out of range 0..{n - 1}", line_number)
        if u > v:
            u, v = v, u
        if u == v and sign == NEGATIVE:
            raise SGraphParseError(f"Negative loop at vertex {u}", line_number)
        if (u, v, sign) in seen:
            raise SGraphParseError(f"Duplicate edge ({u}, {v}, {sign})", line_number)
        seen.add((u, v, sign))
        edges.append((u, v, sign))

    if n is None:
        raise SGraphParseError("Missing 'p sgraph <n>' header")
    return SignedGraph(n, tuple(edges))


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise SGraphParseError(f"Expected an integer, got {token!r}", line_number)


def write_sgraph(graph: SignedGraph, comments: Iterable[str] = ()) -> str:
    """Canonical serialization; edges are already sorted by the model."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"p sgraph {graph.n}")
    lines.extend(f"e {u} {v} {s}" for u, v, s in graph.edges)
    return '\n'.join(lines) + '\n'


def write_dot(graph: SignedGraph, name: str = 'G') -> str:
    """DOT export; negative edges are dashed."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(graph.n))
    for u, v, sign in graph.edges:
        style = ' [style=dashed]' if sign == NEGATIVE else ''
        lines.append(f"  {u} -- {v}{style};")
    lines.append('}')
    return '\n'.join(lines) + '\n'


def digest(*graphs: SignedGraph) -> str:
    """sha256 over the canonical serializations of the inputs."""
    h = hashlib.sha256()
    for graph in graphs:
        h.update(write_sgraph(graph).encode('utf-8'))
    return h.hexdigest()


class FileManager:
    """Reads and writes sgraph files, fixtures and report exports."""

    def __init__(self, export_dir: Optional[str] = None, fixture_root: Optional[Path] = None):
        if export_dir is None:
            export_dir = get_config().get('export_dir')
        self.export_dir = Path(export_dir)
        self.fixture_root = Path(fixture_root) if fixture_root else FIXTURE_ROOT

    def read_graph(self, filepath: str) -> SignedGraph:
        path = Path(filepath)
        try:
            text = path.read_text(encoding='utf-8')
        except OSError as e:
            raise SignedGraphError(f"Cannot read {filepath}: {e}")
        return parse_sgraph(text)

    def write_graph(self, graph: SignedGraph, filepath: str, comments: Iterable[str] = ()) -> str:
        path = Path(filepath)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(write_sgraph(graph, comments), encoding='utf-8')
        return str(path)

    def list_fixtures(self, category: str) -> List[Path]:
        """Fixture files of a category, sorted by name."""
        category_dir = self.fixture_root / category
        if not category_dir.exists():
            return []
        return sorted(category_dir.glob('*.sg'))

    def load_fixtures(self, category: str) -> List[Tuple[str, SignedGraph]]:
        return [(path.stem, self.read_graph(str(path))) for path in self.list_fixtures(category)]

    def get_export_path(self, suite: str, extension: str = '.json') -> Path:
        """Timestamped default path for a suite export."""
        self.export_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        return self.export_dir / f"{suite}_{timestamp}{extension}"
