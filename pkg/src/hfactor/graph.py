"""Simple undirected graphs with the counting primitives the rest of the
package is built on: components, odd components, cross-edge counts, induced
subgraphs and joins.

Vertices are contiguous integers 0..n-1.  Edges are unordered pairs stored
as (u, v) with u < v, sorted lexicographically; the position of an edge in
``Graph.edges`` is its *edge index*, which subgraph searches use for
deterministic tie-breaking.  Graphs are immutable and safe to share across
threads.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property

VertexSet = tuple[int, ...]


def canon_vertex_set(members) -> VertexSet:
    """Canonical form of a vertex set: sorted ascending, no duplicates."""
    return tuple(sorted(set(members)))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    Construct through :func:`build` (or the generators below), which
    validate and normalize the edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def incident_edge_indices(self, v: int) -> tuple[int, ...]:
        return tuple(
            i for i, (a, b) in enumerate(self.edges) if a == v or b == v
        )


def build(n: int, edges) -> Graph:
    """Validate and build a graph on vertices 0..n-1.

    Rejects self-loops, duplicate edges (in either orientation) and
    endpoints outside [0, n).
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    norm: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        norm.append((u, v))
    norm.sort()
    return Graph(n, tuple(norm))


def complete(k: int) -> Graph:
    """Complete graph K_k."""
    if k < 0:
        raise ValueError(f"order must be nonnegative, got {k}")
    return Graph(k, tuple((u, v) for u in range(k) for v in range(u + 1, k)))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between the two parts.

    g1 keeps its labels, g2's labels shift up by g1.n.
    """
    off = g1.n
    edges = list(g1.edges)
    edges += [(u + off, v + off) for u, v in g2.edges]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return build(g1.n + g2.n, edges)


def components(g: Graph, removed=()) -> tuple[VertexSet, ...]:
    """Connected components of G - removed, each sorted ascending, ordered
    by smallest member."""
    removed_set = set(canon_vertex_set(removed))
    for v in removed_set:
        if not (0 <= v < g.n):
            raise ValueError(f"removed vertex {v} out of range")
    seen: set[int] = set()
    comps: list[VertexSet] = []
    for start in range(g.n):
        if start in removed_set or start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if w not in removed_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def odd_components(g: Graph, removed=()) -> int:
    """Number of components of G - removed with an odd number of vertices."""
    return sum(1 for c in components(g, removed) if len(c) % 2 == 1)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def cross_edges(g: Graph, s, t) -> int:
    """Number of edges with one end in S and the other in T.

    S and T must be disjoint subsets of the vertex set.
    """
    s_set = set(canon_vertex_set(s))
    t_set = set(canon_vertex_set(t))
    for v in s_set | t_set:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    if s_set & t_set:
        raise ValueError(f"S and T overlap: {sorted(s_set & t_set)}")
    return sum(
        1
        for u, v in g.edges
        if (u in s_set and v in t_set) or (u in t_set and v in s_set)
    )


def induced(g: Graph, s) -> tuple[Graph, VertexSet]:
    """Induced subgraph G[S] on relabeled vertices 0..|S|-1.

    Returns (subgraph, back_map) where back_map[i] is the original label of
    new vertex i; back_map is sorted ascending.
    """
    members = canon_vertex_set(s)
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(members)}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    ]
    return build(len(members), edges), members


# --- serialization ---------------------------------------------------------
#
# Text form:  first line "n m", then m lines "u v".
# JSON form:  {"n": int, "edges": [[u, v], ...]}.
# Both are accepted everywhere a graph is read.


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def parse_graph_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("graph text must start with 'n m'")
    try:
        vals = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in graph text: {exc}") from None
    n, m = vals[0], vals[1]
    if len(vals) != 2 + 2 * m:
        raise ValueError(
            f"expected {m} edges ({2 * m} endpoints), got {len(vals) - 2} values"
        )
    edges = [(vals[2 + 2 * i], vals[3 + 2 * i]) for i in range(m)]
    return build(n, edges)


def parse_graph_json(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('graph JSON must be {"n": int, "edges": [[u,v],...]}')
    return build(int(data["n"]), [tuple(e) for e in data["edges"]])


def parse_graph(text: str) -> Graph:
    """Autodetect text vs JSON graph format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def graph_hash(g: Graph) -> str:
    """Stable content hash of a graph (sha256 of its canonical text form)."""
    return hashlib.sha256(graph_to_text(g).encode()).hexdigest()
