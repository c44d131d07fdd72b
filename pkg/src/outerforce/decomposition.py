"""Tight cut decomposition of matching covered outerplanar graphs.

Every such graph splits into copies of C4.  A degree-2 vertex ``v`` with
neighbours ``u`` and ``w`` gives the tight cut around ``{u, v, w}`` (``v`` is
matched to ``u`` or ``w`` in every perfect matching); contracting the far side
leaves a C4 and contracting ``{u, v, w}`` leaves a smaller graph of the same
kind, so the procedure repeats until a C4 remains.

Tree nodes are numbered in creation order.  A tree edge ``(a, b)`` with
``a < b`` carries the cut whose stored shore is the union of the bags on
``a``'s side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .errors import (
    BraceNotC4,
    DecompositionError,
    NotExactlyTwoCycleEdges,
    NotMatchingCovered,
    UnknownPseudoVertex,
)
from .graph import Edge, Graph, OuterCycle, contract, cut, edge, outer_cycle
from .matching import Matching, enumerate_perfect_matchings, is_matching_covered


@dataclass(frozen=True)
class OrderedCut:
    shore: frozenset[int]
    cut_edges: tuple[Edge, ...]
    _pos: dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_pos", {e: i + 1 for i, e in enumerate(self.cut_edges)})

    def __len__(self) -> int:
        return len(self.cut_edges)

    def __contains__(self, e: object) -> bool:
        return e in self._pos

    def index(self, e: Edge) -> int:
        """1-based position of ``e`` in the order."""
        return self._pos[e]

    def interval(self, a: int, b: int) -> frozenset[Edge]:
        return frozenset(self.cut_edges[a - 1:b])

    def is_contiguous(self, edges: Iterable[Edge]) -> bool:
        idx = sorted(self._pos[e] for e in edges)
        return not idx or idx[-1] - idx[0] + 1 == len(idx)


def cut_order(g: Graph, outer: OuterCycle, x: Iterable[int]) -> OrderedCut:
    """Order the edges of the cut around ``x`` along the outer cycle.

    Removing the two cycle edges of the cut splits the cycle into a path
    inside ``x`` and a path outside; both are walked starting from the first
    cycle edge, and cut edges are sorted by where they meet the two paths.
    The first cycle edge is the one whose endpoint in ``x`` has the smaller id.
    """
    xs = frozenset(x)
    order = outer.order
    k = len(order)
    crossing = [i for i in range(k) if (order[i] in xs) != (order[(i + 1) % k] in xs)]
    if len(crossing) != 2:
        raise NotExactlyTwoCycleEdges(
            f"outer cycle crosses the cut {len(crossing)} times, expected 2"
        )

    def ends(i: int) -> tuple[int, int]:
        a, b = order[i], order[(i + 1) % k]
        return (a, b) if a in xs else (b, a)

    first = min(crossing, key=ends)
    # step direction that stays inside xs when leaving the first cycle edge
    inward = -1 if order[first] in xs else 1
    x_start, y_start = ends(first)
    pos = outer.positions()

    def walk(start: int, step: int, inside: bool) -> dict[int, int]:
        rank = {}
        i = pos[start]
        while (order[i] in xs) == inside and order[i] not in rank:
            rank[order[i]] = len(rank)
            i = (i + step) % k
        return rank

    rank_x = walk(x_start, inward, True)
    rank_y = walk(y_start, -inward, False)

    def key(e: Edge) -> tuple[int, int]:
        a, b = e
        if a not in xs:
            a, b = b, a
        return rank_x[a], rank_y[b]

    return OrderedCut(xs, tuple(sorted(cut(g, xs), key=key)))


@dataclass(frozen=True)
class ContractionContext:
    """A contraction of ``g`` together with what each new vertex stands for."""

    graph: Graph
    origin: dict[int, frozenset[int]]

    def image(self) -> dict[int, int]:
        return {v: new for new, olds in self.origin.items() for v in olds}


def contract_shores(g: Graph, shores: Iterable[Iterable[int]]) -> ContractionContext:
    """Contract each of several pairwise disjoint shores into its own vertex."""
    cur = g
    origin = {v: frozenset([v]) for v in range(g.n)}
    for shore in shores:
        shore = frozenset(shore)
        here = {new for new, olds in origin.items() if olds & shore}
        cur, mapping = contract(cur, here)
        merged: dict[int, frozenset[int]] = {}
        for old, olds in origin.items():
            merged[mapping[old]] = merged.get(mapping[old], frozenset()) | olds
        origin = merged
    return ContractionContext(cur, origin)


def corresponding_edges(g: Graph, ctx: ContractionContext,
                        item: Union[Edge, Iterable[Edge]]) -> frozenset[Edge]:
    """Edges of ``g`` standing behind an edge (or edge set) of the contraction.

    An edge between two contracted vertices corresponds to every edge of ``g``
    joining the vertex sets they represent; a real vertex represents itself.
    """
    if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], int):
        items: Iterable[Edge] = [item]
    else:
        items = item
    out: set[Edge] = set()
    for a, b in items:
        for p in (a, b):
            if p not in ctx.origin:
                raise UnknownPseudoVertex(p)
        sa, sb = ctx.origin[a], ctx.origin[b]
        if len(sa) > len(sb):
            sa, sb = sb, sa
        for u in sa:
            out.update(edge(u, w) for w in g.adj[u] if w in sb)
    return frozenset(out)


def project_matching(ctx: ContractionContext, m: Iterable[Edge]) -> Matching:
    """The matching of the contraction whose corresponding edges contain ``m``."""
    img = ctx.image()
    return frozenset(
        edge(img[u], img[v]) for u, v in m if img[u] != img[v]
    )


@dataclass(frozen=True)
class TightCutDecomposition:
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]
    cuts: dict[tuple[int, int], OrderedCut]
    outer: Optional[OuterCycle]

    @property
    def node_count(self) -> int:
        return len(self.bags)

    @property
    def single_node(self) -> bool:
        return not self.tree_edges

    def neighbors(self, v: int) -> list[int]:
        out = [b for a, b in self.tree_edges if a == v]
        out += [a for a, b in self.tree_edges if b == v]
        return sorted(out)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def leaves(self) -> list[int]:
        return [v for v in range(self.node_count) if self.degree(v) == 1]

    def cut_between(self, a: int, b: int) -> OrderedCut:
        return self.cuts[(min(a, b), max(a, b))]

    def side(self, a: int, b: int) -> frozenset[int]:
        """Union of the bags on ``a``'s side of the tree edge ``ab``."""
        seen = {a, b}
        stack = [a]
        out: set[int] = set()
        while stack:
            v = stack.pop()
            out |= self.bags[v]
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(out)


def tight_cut_decomposition(g: Graph) -> TightCutDecomposition:
    if not is_matching_covered(g):
        raise NotMatchingCovered("graph is not matching covered")
    outer = outer_cycle(g)

    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    origin = {v: frozenset([v]) for v in range(g.n)}
    node_of: dict[int, int] = {}
    bags: list[frozenset[int]] = []
    links: list[tuple[int, int]] = []
    fresh = g.n

    def new_node(members: Iterable[int]) -> int:
        node = len(bags)
        bags.append(frozenset(x for x in members if x < g.n))
        links.extend((node_of[x], node) for x in members if x >= g.n)
        return node

    while len(nbrs) > 4:
        ready = [v for v in nbrs if len(nbrs[v]) == 2]
        if not ready:
            raise DecompositionError("no degree-2 vertex in an outerplanar contraction")
        v = min(ready)
        u, w = sorted(nbrs[v])
        members = (u, v, w)
        node = new_node(members)
        outside = (nbrs[u] | nbrs[w]) - set(members)
        for x in members:
            for y in nbrs.pop(x):
                if y in nbrs:
                    nbrs[y].discard(x)
        nbrs[fresh] = outside
        for y in outside:
            nbrs[y].add(fresh)
        origin[fresh] = origin[u] | origin[v] | origin[w]
        node_of[fresh] = node
        fresh += 1

    if any(len(s) != 2 for s in nbrs.values()) or len(nbrs) != 4:
        raise BraceNotC4(f"final contraction is not C4: {nbrs}")
    new_node(sorted(nbrs))

    tree_edges = tuple(sorted(links))
    partial = TightCutDecomposition(tuple(bags), tree_edges, {}, outer)
    cuts = {(a, b): cut_order(g, outer, partial.side(a, b)) for a, b in tree_edges}
    return TightCutDecomposition(tuple(bags), tree_edges, cuts, outer)


def brace_of(d: TightCutDecomposition, g: Graph, v: int) -> tuple[Graph, dict[Edge, frozenset[Edge]]]:
    """Contract every shore hanging off tree node ``v``; the result must be C4.

    Returns the brace and, for each of its edges, the corresponding edges of ``g``.
    """
    if not 0 <= v < d.node_count:
        raise KeyError(v)
    ctx = contract_shores(g, [d.side(u, v) for u in d.neighbors(v)])
    br = ctx.graph
    if br.n != 4 or br.m != 4 or any(br.degree(x) != 2 for x in range(4)):
        raise BraceNotC4(f"brace of node {v} has {br.n} vertices and {br.m} edges")
    return br, {e: corresponding_edges(g, ctx, e) for e in br.sorted_edges()}


def verify_tight(g: Graph, x: Iterable[int]) -> bool:
    c = cut(g, x)
    return all(len(c & m) == 1 for m in enumerate_perfect_matchings(g))


def laminar(x: frozenset[int], y: frozenset[int], universe: frozenset[int]) -> bool:
    xs = (x, universe - x)
    ys = (y, universe - y)
    return any(a <= b or b <= a for a in xs for b in ys)
