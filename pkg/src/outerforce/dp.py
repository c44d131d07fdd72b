"""Forcing spectrum by dynamic programming over the tight cut decomposition.

The table holds entries ``(node, e, a, b, x)``: some perfect matching of the
part of the graph below ``node`` uses the edge ``e`` of the node's cut, its
canonical partial forcing set has ``x`` edges, and the cut edges it leaves
not forced out are exactly the positions ``a..b`` of the cut order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterable, Optional

from .decomposition import OrderedCut, TightCutDecomposition, cut_order, tight_cut_decomposition
from .errors import (
    BadBraceStructure,
    EmptyRootTable,
    EmptySpectrum,
    EmptyW,
    IntervalViolation,
    NoPerfectMatching,
    NotMatchingCovered,
    NotOuterplanar,
    SingleNodeTree,
)
from .graph import Edge, Graph, connected_components, is_outerplanar
from .matching import Matching, cover_graph, has_perfect_matching, is_matching_covered


class Spectrum(frozenset):
    """A finite set of forcing numbers."""

    @property
    def minimum(self) -> int:
        return min(self)

    @property
    def maximum(self) -> int:
        return max(self)

    def sorted(self) -> list[int]:
        return sorted(self)

    def __repr__(self) -> str:
        return f"Spectrum({self.sorted()})"


@dataclass(frozen=True)
class RootedDecomposition:
    base: TightCutDecomposition
    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    shores: dict[int, frozenset[int]]
    orders: dict[int, OrderedCut]
    root_child: int
    w: int

    def postorder(self) -> list[int]:
        out: list[int] = []
        stack = [(self.root, False)]
        while stack:
            v, expanded = stack.pop()
            if expanded:
                out.append(v)
                continue
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))
        return out


def root_decomposition(d: TightCutDecomposition, g: Graph) -> RootedDecomposition:
    if d.single_node:
        raise SingleNodeTree("decomposition has a single node and no cuts")
    root = min(d.leaves(), key=lambda v: min(d.bags[v]))
    parent: dict[int, int] = {}
    children: dict[int, tuple[int, ...]] = {}
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        kids = tuple(u for u in d.neighbors(v) if u not in seen)
        children[v] = kids
        for u in kids:
            seen.add(u)
            parent[u] = v
            stack.append(u)

    shores = {v: d.side(v, p) for v, p in parent.items()}
    (child,) = children[root]
    touching = {x for e in d.cut_between(root, child).cut_edges for x in e}
    (w,) = [x for x in d.bags[root] if x not in touching]
    shores[root] = frozenset(range(g.n)) - {w}
    orders = {v: cut_order(g, d.outer, x) for v, x in shores.items()}
    return RootedDecomposition(d, root, parent, children, shores, orders, child, w)


class DPTable:
    """Sparse boolean table; only entries set to 1 are stored."""

    def __init__(self) -> None:
        self._rows: dict[tuple[int, Edge], set[tuple[int, int, int]]] = defaultdict(set)
        self.done: set[int] = set()

    def set(self, node: int, e: Edge, a: int, b: int, x: int) -> None:
        self._rows[(node, e)].add((a, b, x))

    def lookup(self, node: int, e: Edge) -> set[tuple[int, int, int]]:
        return self._rows.get((node, e), set())

    def entries(self) -> list[tuple[int, Edge, int, int, int]]:
        return sorted(
            (node, e, a, b, x) for (node, e), rows in self._rows.items() for a, b, x in rows
        )

    def for_node(self, node: int) -> list[tuple[Edge, int, int, int]]:
        return [(e, a, b, x) for v, e, a, b, x in self.entries() if v == node]

    def __len__(self) -> int:
        return sum(len(r) for r in self._rows.values())


@dataclass(frozen=True)
class NodeMatchings:
    sets: tuple[frozenset[Edge], ...]
    labeling: tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge], frozenset[Edge]]
    pairs: tuple[Matching, ...]


def node_matchings(g: Graph, rd: RootedDecomposition, v: int) -> NodeMatchings:
    """The four edge sets standing for the vertices of the node's C4 brace and
    every 2-edge matching of ``g`` that realises a perfect matching of it."""
    d = rd.base
    sets = [frozenset(d.cut_between(v, u).cut_edges) for u in d.neighbors(v)]
    sets += [frozenset((min(u, x), max(u, x)) for x in g.adj[u]) for u in sorted(d.bags[v])]
    if len(sets) != 4 or len(set(sets)) != 4:
        raise BadBraceStructure(f"node {v} does not contribute four distinct edge sets")

    labelings = [
        p for p in permutations(sets)
        if not (p[0] & p[2]) and not (p[1] & p[3])
    ]
    if not labelings:
        raise BadBraceStructure(f"node {v} admits no valid labelling")
    A, B, C, D = min(labelings, key=lambda p: tuple(tuple(sorted(s)) for s in p))

    pairs = set()
    for left, right in ((A & B, C & D), (A & D, B & C)):
        for e1 in left:
            for e2 in right:
                if not set(e1) & set(e2):
                    pairs.add(frozenset((e1, e2)))
    ordered = tuple(sorted(pairs, key=lambda m: sorted(m)))
    return NodeMatchings(tuple(sets), (A, B, C, D), ordered)


def _sumset(parts: Iterable[Iterable[int]]) -> set[int]:
    out = {0}
    for part in parts:
        out = {s + x for s in out for x in part}
    return out


def _edge_in(m: Matching, order: OrderedCut) -> Edge:
    hit = [e for e in m if e in order]
    if len(hit) != 1:
        raise BadBraceStructure(f"matching {sorted(m)} meets a cut in {len(hit)} edges")
    return hit[0]


def process_node(g: Graph, rd: RootedDecomposition, v: int, table: DPTable) -> DPTable:
    kids = rd.children[v]
    missing = [c for c in kids if c not in table.done]
    if missing:
        raise RuntimeError(f"node {v} processed before children {missing}")
    pairs = node_matchings(g, rd, v).pairs
    own = rd.orders[v]
    kid_orders = [rd.orders[c] for c in kids]

    # per candidate matching: its edge on the node's cut and its position in each child cut
    own_edge = {m: _edge_in(m, own) for m in pairs}
    kid_pos = {m: tuple(o.index(_edge_in(m, o)) for o in kid_orders) for m in pairs}

    for m in pairs:
        e_v = own_edge[m]
        (f_v,) = m - {e_v}
        if not kids:
            table.set(v, e_v, 1, len(own), 0)
            continue

        options = []
        for c, o in zip(kids, kid_orders):
            by_interval: dict[tuple[int, int], set[int]] = defaultdict(set)
            for a, b, x in table.lookup(c, _edge_in(m, o)):
                by_interval[(a, b)].add(x)
            options.append(sorted(by_interval.items()))

        for combo in product(*options):
            bounds = [iv for iv, _ in combo]
            W = [
                mp for mp in pairs
                if all(a <= p <= b for (a, b), p in zip(bounds, kid_pos[mp]))
            ]
            W_e = [mp for mp in W if e_v in mp]
            W_f = [mp for mp in W if f_v in mp]
            if m not in W or m not in W_e or m not in W_f:
                raise EmptyW(f"node {v}: matching {sorted(m)} missing from its own candidate sets")
            if len(W_e) == 1:
                forced, source = 0, W
            else:
                forced, source = 1, W_f
            idx = sorted({own.index(own_edge[mp]) for mp in source})
            a, b = idx[0], idx[-1]
            if b - a + 1 != len(idx):
                raise IntervalViolation(f"node {v}: open cut positions {idx} not contiguous")
            for x in _sumset(costs for _, costs in combo):
                table.set(v, e_v, a, b, x + forced)
    table.done.add(v)
    return table


def extract_spectrum(table: DPTable, rd: RootedDecomposition) -> Spectrum:
    rows = table.for_node(rd.root)
    if not rows:
        raise EmptyRootTable("no table entries at the root")
    return Spectrum(x + 1 - (a == b) for _, a, b, x in rows)


@dataclass
class DPRun:
    decomposition: TightCutDecomposition
    rooted: Optional[RootedDecomposition]
    table: DPTable
    spectrum: Spectrum


def run_dp(g: Graph) -> DPRun:
    """Full pipeline on a matching covered outerplanar graph, keeping internals."""
    if not is_outerplanar(g):
        raise NotOuterplanar("graph is not outerplanar")
    if not is_matching_covered(g):
        raise NotMatchingCovered("graph is not matching covered")
    d = tight_cut_decomposition(g)
    table = DPTable()
    if d.single_node:
        # only C4 decomposes to a single node; each of its two matchings is forced by one edge
        return DPRun(d, None, table, Spectrum({1}))
    rd = root_decomposition(d, g)
    for v in rd.postorder():
        process_node(g, rd, v, table)
    return DPRun(d, rd, table, extract_spectrum(table, rd))


def forcing_spectrum_dp(g: Graph) -> Spectrum:
    return run_dp(g).spectrum


def combine_spectra(specs: Iterable[Iterable[int]]) -> Spectrum:
    specs = [set(s) for s in specs]
    if any(not s for s in specs):
        raise EmptySpectrum("cannot combine an empty spectrum")
    return Spectrum(_sumset(specs))


@dataclass(frozen=True)
class ComponentResult:
    vertices: tuple[int, ...]
    spectrum: Spectrum
    method: str


def component_spectra(g: Graph,
                      solver: Callable[[Graph], Spectrum] = forcing_spectrum_dp,
                      method: str = "dp",
                      require_outerplanar: bool = True) -> list[ComponentResult]:
    """Spectra of the connected components of the cover graph of ``g``."""
    if not has_perfect_matching(g):
        raise NoPerfectMatching("graph has no perfect matching")
    out = []
    for comp, old in connected_components(cover_graph(g)):
        if comp.n == 2:
            out.append(ComponentResult(old, Spectrum({0}), "trivial"))
            continue
        if require_outerplanar and not is_outerplanar(comp):
            raise NotOuterplanar(f"cover component on {list(old)} is not outerplanar")
        out.append(ComponentResult(old, solver(comp), method))
    return out


def forcing_spectrum(g: Graph) -> Spectrum:
    return combine_spectra(r.spectrum for r in component_spectra(g))
