"""Maximum matchings, perfect-matching enumeration and the cover graph."""

from __future__ import annotations

from collections import deque
from typing import Iterator, Optional, Sequence

from .errors import CapExceeded, NoPerfectMatching
from .graph import Edge, Graph, connected_components, edge

Matching = frozenset  # frozenset[Edge]


def _augmenting_path(adj: Sequence[Sequence[int]], mate: list[int], root: int,
                     alive: Optional[Sequence[bool]] = None) -> int:
    """Edmonds search from the free vertex ``root``.

    Grows an alternating tree, shrinking odd cycles into blossoms.  On success
    the matching in ``mate`` is augmented in place and the other free endpoint
    is returned; otherwise returns -1 and ``mate`` is untouched.
    """
    n = len(adj)
    base = list(range(n))
    parent = [-1] * n
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if alive is not None and not alive[to]:
                continue
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    end = to
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return end
                used[mate[to]] = True
                queue.append(mate[to])
    return -1


def _maximum_mate(g: Graph) -> list[int]:
    mate = [-1] * g.n
    for u, v in sorted(g.edges):
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u
    for v in range(g.n):
        if mate[v] == -1:
            _augmenting_path(g.adj, mate, v)
    return mate


def _to_matching(mate: list[int]) -> Matching:
    return frozenset(edge(v, w) for v, w in enumerate(mate) if w > v)


def maximum_matching(g: Graph) -> Matching:
    return _to_matching(_maximum_mate(g))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * len(maximum_matching(g)) == g.n


def is_perfect_matching(g: Graph, m: Matching) -> bool:
    if not m <= g.edges:
        return False
    covered = [v for e in m for v in e]
    return len(covered) == len(set(covered)) == g.n


def enumerate_perfect_matchings(g: Graph, cap: Optional[int] = None) -> Iterator[Matching]:
    """Yield every perfect matching of ``g`` exactly once.

    Branches on the lowest unmatched vertex, trying its neighbours in
    ascending order.  With ``cap`` set, raises CapExceeded instead of
    yielding a ``cap + 1``-th matching.
    """
    if g.n % 2:
        return
    matched = [False] * g.n
    chosen: list[Edge] = []
    yielded = 0

    def search(start: int) -> Iterator[Matching]:
        nonlocal yielded
        v = start
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            if cap is not None and yielded >= cap:
                raise CapExceeded(f"more than {cap} perfect matchings")
            yielded += 1
            yield frozenset(chosen)
            return
        matched[v] = True
        for w in g.adj[v]:
            if matched[w]:
                continue
            matched[w] = True
            chosen.append(edge(v, w))
            yield from search(v + 1)
            chosen.pop()
            matched[w] = False
        matched[v] = False

    yield from search(0)


def count_perfect_matchings(g: Graph) -> int:
    return sum(1 for _ in enumerate_perfect_matchings(g))


def cover_graph(g: Graph) -> Graph:
    """Spanning subgraph of the edges that lie in at least one perfect matching.

    For a fixed perfect matching M and an edge uv outside it, uv is usable iff
    the two vertices left exposed after deleting u and v can be re-joined by
    one augmenting path; that is a single Edmonds search per edge.
    """
    mate = _maximum_mate(g)
    if g.n % 2 or any(w == -1 for w in mate):
        raise NoPerfectMatching("graph has no perfect matching")
    keep = set(_to_matching(mate))
    for u, v in g.edges:
        if mate[u] == v:
            continue
        trial = list(mate)
        a, b = trial[u], trial[v]
        trial[a] = trial[b] = -1
        trial[u] = trial[v] = -1
        alive = [True] * g.n
        alive[u] = alive[v] = False
        if _augmenting_path(g.adj, trial, a, alive) == b:
            keep.add((u, v))
    return Graph(g.n, frozenset(keep))


def is_matching_covered(g: Graph) -> bool:
    if g.n < 4 or g.n % 2 or len(connected_components(g)) != 1:
        return False
    try:
        return cover_graph(g).edges == g.edges
    except NoPerfectMatching:
        return False
