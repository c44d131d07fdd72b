"""Simple undirected graphs and the structural predicates the algorithm needs.

Vertices are the dense integers ``0 .. n-1``.  An edge is stored as a sorted
pair ``(u, v)`` with ``u < v``.  Graphs are immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    DuplicateEdge,
    EmptySet,
    IdCollision,
    LoopEdge,
    NotOuterplanar,
    NotTwoConnected,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def edge_list(self) -> str:
        lines = [f"n {self.n}"] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edge_pairs`` and return the simple graph they describe."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for u, v in edge_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        e = edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) repeated")
        seen.add(e)
    return Graph(n, frozenset(seen))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph renumbered by ascending old id; also returns new -> old."""
    old = tuple(sorted(set(vertices)))
    new_of = {v: i for i, v in enumerate(old)}
    es = frozenset(
        edge(new_of[u], new_of[v]) for u, v in g.edges if u in new_of and v in new_of
    )
    return Graph(len(old), es), old


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    return Graph(g.n, frozenset(edge(perm[u], perm[v]) for u, v in g.edges))


def cut(g: Graph, x: Iterable[int]) -> frozenset[Edge]:
    """The edge cut around ``x``: edges with exactly one endpoint in ``x``."""
    xs = set(x)
    return frozenset(e for e in g.edges if (e[0] in xs) != (e[1] in xs))


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(induced_subgraph(g, comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_bipartite(g: Graph) -> Optional[tuple[int, ...]]:
    """Return a 0/1 colouring if ``g`` has no odd cycle, else ``None``."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return tuple(colour)


def blocks(g: Graph) -> list[frozenset[Edge]]:
    """Edge sets of the biconnected components (iterative Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    clock = 0
    estack: list[Edge] = []
    out: list[frozenset[Edge]] = []
    for s in range(g.n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(g.adj[s]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    a, b = estack.pop()
                    block.append(edge(a, b))
                    if (a, b) == (p, v):
                        break
                out.append(frozenset(block))
    return out


def articulation_points(g: Graph) -> set[int]:
    count = [0] * g.n
    for block in blocks(g):
        for v in {x for e in block for x in e}:
            count[v] += 1
    return {v for v in range(g.n) if count[v] > 1}


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


@dataclass(frozen=True)
class OuterCycle:
    """Cyclic vertex order of the outer face of a 2-connected outerplanar graph."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def edges(self) -> frozenset[Edge]:
        k = len(self.order)
        return frozenset(edge(self.order[i], self.order[(i + 1) % k]) for i in range(k))


def chords_cross(a: Edge, b: Edge, pos: dict[int, int]) -> bool:
    i, j = sorted((pos[a[0]], pos[a[1]]))
    k, l = sorted((pos[b[0]], pos[b[1]]))
    return i < k < j < l or k < i < l < j


def _chords_noncrossing(chords: Iterable[Edge], pos: dict[int, int]) -> bool:
    spans = sorted(
        (min(pos[u], pos[v]), -max(pos[u], pos[v])) for u, v in chords
    )
    open_spans: list[int] = []
    for i, neg_j in spans:
        j = -neg_j
        while open_spans and open_spans[-1] <= i:
            open_spans.pop()
        if open_spans and j > open_spans[-1]:
            return False
        open_spans.append(j)
    return True


def outer_cycle(g: Graph) -> OuterCycle:
    """Recover the Hamiltonian outer cycle of a 2-connected outerplanar graph.

    Degree-2 vertices are suppressed one at a time (their two neighbours get
    joined) until a triangle remains; re-inserting them in reverse order
    rebuilds the cycle.  The candidate is then checked against ``g``.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    if g.m > 2 * g.n - 3:
        raise NotOuterplanar(f"{g.m} edges exceed the outerplanar bound {2 * g.n - 3}")

    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    ready = {v for v in range(g.n) if len(nbrs[v]) == 2}
    removed: list[tuple[int, int, int]] = []
    while len(nbrs) > 3:
        ready = {v for v in ready if v in nbrs and len(nbrs[v]) == 2}
        if not ready:
            raise NotOuterplanar("no degree-2 vertex left to suppress")
        v = min(ready)
        ready.discard(v)
        u, w = sorted(nbrs.pop(v))
        nbrs[u].discard(v)
        nbrs[w].discard(v)
        nbrs[u].add(w)
        nbrs[w].add(u)
        removed.append((v, u, w))
        for x in (u, w):
            if len(nbrs[x]) == 2:
                ready.add(x)

    a, b, c = sorted(nbrs)
    if not (b in nbrs[a] and c in nbrs[a] and c in nbrs[b]):
        raise NotOuterplanar("reduction did not end in a triangle")
    nxt = {a: b, b: c, c: a}
    for v, u, w in reversed(removed):
        if nxt[u] == w:
            nxt[u], nxt[v] = v, w
        elif nxt[w] == u:
            nxt[w], nxt[v] = v, u
        else:
            raise NotOuterplanar("suppressed path does not sit on the outer cycle")

    start = 0
    order = [start]
    while len(order) < g.n:
        order.append(nxt[order[-1]])
    if order[-1] < order[1]:
        order = [start] + order[:0:-1]
    cycle = OuterCycle(tuple(order))

    cyc_edges = cycle.edges()
    if not cyc_edges <= g.edges:
        raise NotOuterplanar("recovered cycle uses a non-edge")
    if not _chords_noncrossing(g.edges - cyc_edges, cycle.positions()):
        raise NotOuterplanar("chords cross")
    return cycle


def is_outerplanar(g: Graph) -> bool:
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    for block in blocks(g):
        verts = {x for e in block for x in e}
        if len(verts) <= 2:
            continue
        sub, old = induced_subgraph(g, verts)
        try:
            outer_cycle(sub)
        except (NotOuterplanar, NotTwoConnected):
            return False
    return True


def contract(g: Graph, x: Iterable[int], c: Optional[int] = None) -> tuple[Graph, dict[int, int]]:
    """Identify the vertex set ``x`` into a single fresh vertex.

    Loops and parallel edges are dropped.  The result is renumbered densely:
    vertices outside ``x`` keep their relative order and the contracted vertex
    takes the last id.  Returns the graph and the old -> new vertex map.
    """
    xs = set(x)
    if not xs:
        raise EmptySet("cannot contract an empty vertex set")
    bad = [v for v in xs if not 0 <= v < g.n]
    if bad:
        raise VertexOutOfRange(f"vertices {sorted(bad)} not in graph")
    if c is not None and 0 <= c < g.n:
        raise IdCollision(f"contracted id {c} already names a vertex")
    mapping: dict[int, int] = {}
    for v in range(g.n):
        if v not in xs:
            mapping[v] = len(mapping)
    new_c = g.n - len(xs)
    for v in xs:
        mapping[v] = new_c
    es = frozenset(
        edge(mapping[u], mapping[v]) for u, v in g.edges if mapping[u] != mapping[v]
    )
    return Graph(new_c + 1, es), mapping
