"""
Edge-list text format.

    n
    u v [w]
    ...

The first non-blank line holds the node count; every following line is an edge with
an optional weight (default 1). Lines starting with '#' are comments.
"""

from __future__ import annotations

from pathlib import Path

from src.graph.core import Graph
from src.utils.errors import GraphParseError


def _format_weight(w: float) -> str:
    # repr() is the shortest round-trip form; integral weights print without ".0"
    if float(w).is_integer():
        return str(int(w))
    return repr(float(w))


def load_graph(text: str) -> Graph:
    """
    Parse an edge-list document.

    Raises:
        GraphParseError: Naming the offending line for bad counts, out-of-range
            ids, self-loops, non-positive weights or duplicate edges
    """
    n: int | None = None
    edges: list[tuple[int, int, float]] = []
    seen: dict[tuple[int, int], int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()

        if n is None:
            if len(fields) != 1:
                raise GraphParseError("expected node count on first line", line_number)
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphParseError(f"invalid node count {fields[0]!r}", line_number)
            if n < 0:
                raise GraphParseError(f"negative node count {n}", line_number)
            continue

        if len(fields) not in (2, 3):
            raise GraphParseError("expected 'u v' or 'u v w'", line_number)
        try:
            u, v = int(fields[0]), int(fields[1])
            w = float(fields[2]) if len(fields) == 3 else 1.0
        except ValueError:
            raise GraphParseError(f"malformed edge {line!r}", line_number)

        if u < 0 or v < 0 or u >= n or v >= n:
            raise GraphParseError(f"node id out of range for n={n}", line_number)
        if u == v:
            raise GraphParseError(f"self-loop on node {u}", line_number)
        if not w > 0:
            raise GraphParseError(f"non-positive weight {w}", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(
                f"duplicate edge {key} (first seen on line {seen[key]})", line_number
            )
        seen[key] = line_number
        edges.append((key[0], key[1], w))

    if n is None:
        raise GraphParseError("empty document: missing node count")

    edges.sort(key=lambda e: (e[0], e[1]))
    return Graph(n=n, edges=tuple(edges))


def dump_graph(g: Graph) -> str:
    """Serialize a graph in the edge-list format accepted by load_graph."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v} {_format_weight(w)}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return load_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dump_graph(g), encoding="utf-8")
