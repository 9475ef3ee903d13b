"""Simple connected undirected graphs and the families built from them.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` is validated on
construction (no loops, no multi-edges, connected) and never mutated
afterwards, so instances can be shared freely between threads.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    EmptySpec,
    InvalidSize,
    LoopEdge,
    UnknownSpec,
    UnknownVertex,
)

__all__ = [
    "Graph",
    "StarTypeSpec",
    "from_edge_list",
    "isolated",
    "star",
    "complete",
    "cycle",
    "path",
    "compose_star_type",
    "subdivide",
    "universal_vertices",
    "generate_preferential_attachment",
    "is_dominating_set",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected undirected graph.

    Attributes
    ----------
    vertex_count : int
    edges : tuple of (int, int)
        Each edge once, as ``(i, j)`` with ``i < j``, sorted lexicographically.
    neighbors : tuple of tuple of int
        Sorted neighbor list per vertex.
    labels : tuple of int, optional
        Original vertex ids when the graph was relabeled on input.
    origin : tuple, optional
        Per-vertex provenance after subdivision: ``None`` for original
        vertices, ``((a, b), t)`` for the ``t``-th vertex inserted on edge ``a-b``.
    """

    vertex_count: int
    edges: tuple
    neighbors: tuple = field(repr=False)
    labels: Optional[tuple] = field(default=None, repr=False, compare=False)
    origin: Optional[tuple] = field(default=None, repr=False, compare=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple:
        return tuple(len(nb) for nb in self.neighbors)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.neighbors[v])

    def check_vertex(self, v) -> None:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.vertex_count:
            raise UnknownVertex(v)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count))
        if self.edges:
            i, j = np.array(self.edges).T
            a[i, j] = 1.0
            a[j, i] = 1.0
        return a

    def to_edge_list(self) -> list:
        return list(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def __len__(self):
        return self.vertex_count


def _build(n: int, pairs: Iterable, labels=None, origin=None) -> Graph:
    if n < 1:
        raise InvalidSize("a graph needs at least one vertex")
    nbrs = [set() for _ in range(n)]
    seen = set()
    for a, b in pairs:
        a, b = int(a), int(b)
        if a == b:
            raise LoopEdge(a)
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise DuplicateEdge(e)
        seen.add(e)
        nbrs[a].add(b)
        nbrs[b].add(a)

    # BFS from 0; report the lowest-numbered unreachable vertex
    reached = [False] * n
    reached[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if not reached[w]:
                reached[w] = True
                queue.append(w)
    if not all(reached):
        raise Disconnected(reached.index(False))

    g = Graph(
        vertex_count=n,
        edges=tuple(sorted(seen)),
        neighbors=tuple(tuple(sorted(nb)) for nb in nbrs),
        labels=tuple(labels) if labels is not None else None,
        origin=tuple(origin) if origin is not None else None,
    )
    assert sum(g.degrees) == 2 * g.edge_count
    return g


def from_edge_list(pairs: Sequence) -> Graph:
    """Build a graph from ``(u, v)`` pairs.

    Vertex ids are relabeled to ``0..n-1`` in increasing order when they are
    not already dense; the original ids are kept in ``Graph.labels``.

    >>> from_edge_list([(0, 1), (1, 2)]).degrees
    (1, 2, 1)
    """
    pairs = [(int(a), int(b)) for a, b in pairs]
    if not pairs:
        raise InvalidSize("edge list is empty")
    seen = set()
    for a, b in pairs:
        if a == b:
            raise LoopEdge(a)
        e = (min(a, b), max(a, b))
        if e in seen:
            raise DuplicateEdge(e)
        seen.add(e)
    ids = sorted({v for e in pairs for v in e})
    if ids == list(range(len(ids))):
        return _build(len(ids), pairs)
    index = {v: k for k, v in enumerate(ids)}
    try:
        return _build(len(ids), [(index[a], index[b]) for a, b in pairs], labels=ids)
    except Disconnected as exc:
        raise Disconnected(ids[exc.vertex]) from None


def isolated() -> Graph:
    """The single-vertex graph, used as a star-type component."""
    return _build(1, [])


def star(m: int) -> Graph:
    """Star with center 0 and leaves ``1..m``."""
    if m < 1:
        raise InvalidSize(f"star needs m >= 1, got {m}")
    return _build(m + 1, [(0, i) for i in range(1, m + 1)])


def complete(n: int) -> Graph:
    if n < 2:
        raise InvalidSize(f"complete graph needs n >= 2, got {n}")
    return _build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"cycle needs n >= 3, got {n}")
    return _build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidSize(f"path needs n >= 2, got {n}")
    return _build(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class StarTypeSpec:
    """Components of a star-type graph; the external vertex is implied.

    The composed graph puts the external vertex at id 0 and lays the
    components out consecutively from id 1.
    """

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def sum_vertices(self) -> int:
        """Total component vertices; equals the degree of the external vertex."""
        return sum(c.vertex_count for c in self.components)

    @property
    def sum_edges(self) -> int:
        return sum(c.edge_count for c in self.components)

    @property
    def vertex_count(self) -> int:
        return 1 + self.sum_vertices

    @property
    def edge_count(self) -> int:
        return self.sum_vertices + self.sum_edges

    def offsets(self) -> list:
        """First composed-graph id of each component."""
        out, k = [], 1
        for c in self.components:
            out.append(k)
            k += c.vertex_count
        return out


def compose_star_type(spec: StarTypeSpec):
    """Join a new vertex to every vertex of every component.

    Returns ``(graph, u)`` where ``u`` is the external vertex (always 0).
    """
    if not spec.components:
        raise EmptySpec("star-type composition needs at least one component")
    pairs = []
    for off, comp in zip(spec.offsets(), spec.components):
        pairs.extend((0, off + v) for v in range(comp.vertex_count))
        pairs.extend((off + a, off + b) for a, b in comp.edges)
    g = _build(spec.vertex_count, pairs)
    assert g.degree(0) == g.vertex_count - 1
    return g, 0


def subdivide(g: Graph, n: int, scope: str = "all", spec: Optional[StarTypeSpec] = None) -> Graph:
    """Replace edges by paths carrying ``n`` new interior vertices.

    Parameters
    ----------
    g : Graph
    n : int
        Number of vertices inserted per edge; 0 returns ``g`` unchanged.
    scope : {"all", "component"}
        ``"component"`` subdivides only edges inside the components of the
        star-type composition described by ``spec``; edges at the external
        vertex are kept.
    spec : StarTypeSpec, optional
        Required when ``scope="component"``; ``g`` must be its composition.

    Notes
    -----
    Edges are processed in lexicographic order.  The vertices inserted on
    edge ``a-b`` (``a < b``) are numbered consecutively after all earlier
    insertions and run from the ``a`` end to the ``b`` end.
    """
    if n < 0:
        raise InvalidSize(f"subdivision order must be >= 0, got {n}")
    if scope == "component":
        if spec is None:
            raise UnknownSpec("component scope requires the star-type spec")
        if g.vertex_count != spec.vertex_count or g.edge_count != spec.edge_count or g.degree(0) != g.vertex_count - 1:
            raise UnknownSpec("graph is not the composition of the given spec")
        targets = [e for e in g.edges if e[0] != 0]
    elif scope == "all":
        targets = list(g.edges)
    else:
        raise ValueError(f"unknown scope {scope!r}")

    if n == 0:
        return g

    old_origin = g.origin or (None,) * g.vertex_count
    origin = list(old_origin)
    target_set = set(targets)
    pairs = [e for e in g.edges if e not in target_set]
    nxt = g.vertex_count
    for a, b in targets:
        chain = [a] + list(range(nxt, nxt + n)) + [b]
        origin.extend(((a, b), t) for t in range(1, n + 1))
        nxt += n
        pairs.extend(zip(chain[:-1], chain[1:]))
    return _build(nxt, pairs, labels=None, origin=origin)


def universal_vertices(g: Graph) -> list:
    full = g.vertex_count - 1
    return [v for v, d in enumerate(g.degrees) if d == full]


def generate_preferential_attachment(n: int, m_attach: int, seed: int) -> Graph:
    """Barabasi-Albert graph grown from a clique on ``m_attach + 1`` vertices.

    Edge count is exactly ``C(m+1, 2) + m (n - m - 1)``.
    """
    if not (n > m_attach >= 1):
        raise InvalidSize(f"need n > m_attach >= 1, got n={n}, m_attach={m_attach}")
    seed_graph = nx.complete_graph(m_attach + 1)
    if n == m_attach + 1:
        h = seed_graph
    else:
        h = nx.barabasi_albert_graph(n, m_attach, seed=seed, initial_graph=seed_graph)
    return _build(n, h.edges())


def is_dominating_set(g: Graph, s: Iterable) -> bool:
    """True iff every vertex outside ``s`` has a neighbor in ``s``."""
    s = set(s)
    for v in s:
        g.check_vertex(v)
    return all(v in s or any(w in s for w in g.neighbors[v]) for v in range(g.vertex_count))
