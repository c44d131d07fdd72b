"""Structural and oracle checks run by ``outerforce check`` and the tests.

Each check returns ``(name, ok, detail)``.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, Optional

from .decomposition import (
    TightCutDecomposition,
    brace_of,
    cut_order,
    laminar,
    tight_cut_decomposition,
)
from .dp import forcing_spectrum, root_decomposition, run_dp
from .graph import Graph, connected_components, is_bipartite, is_outerplanar, is_two_connected
from .matching import Matching, cover_graph, is_matching_covered
from .oracle import (
    all_perfect_matchings,
    anti_forcing_numbers,
    forcing_numbers,
    forcing_spectrum_bf,
    open_edges,
)

Result = tuple[str, bool, str]


def check_cover_reductions(g: Graph) -> Result:
    """Forcing and anti-forcing numbers agree on ``g`` and its cover graph."""
    cov = cover_graph(g)
    forc, forc_cov = forcing_numbers(g), forcing_numbers(cov)
    anti, anti_cov = anti_forcing_numbers(g), anti_forcing_numbers(cov)
    if forc.keys() != forc_cov.keys():
        return "cover-reduction", False, "perfect matchings differ"
    for pm in sorted(forc, key=sorted):
        if forc[pm] != forc_cov[pm] or anti[pm] != anti_cov[pm]:
            return ("cover-reduction", False,
                    f"matching {sorted(pm)}: forc {forc[pm]}/{forc_cov[pm]} aforc {anti[pm]}/{anti_cov[pm]}")
    return "cover-reduction", True, f"{len(forc)} perfect matchings"


def check_cover_components(g: Graph) -> Result:
    bad = []
    for comp, old in connected_components(cover_graph(g)):
        if comp.n < 4:
            continue
        if not is_matching_covered(comp):
            bad.append(f"{list(old)} not matching covered")
        if not is_two_connected(comp):
            bad.append(f"{list(old)} not 2-connected")
        if is_outerplanar(g) and is_bipartite(comp) is None:
            bad.append(f"{list(old)} not bipartite")
    return "cover-components", not bad, "; ".join(bad) or "ok"


def decomposition_problems(g: Graph, d: TightCutDecomposition,
                           pms: Optional[list[Matching]] = None) -> list[str]:
    """Everything that is wrong with ``d`` as a tight cut decomposition of ``g``."""
    if pms is None:
        pms = all_perfect_matchings(g)
    out = []
    universe = frozenset(range(g.n))
    seen = [v for bag in d.bags for v in bag]
    if sorted(seen) != list(range(g.n)):
        out.append("bags do not partition the vertices")
    if d.node_count != len(d.tree_edges) + 1:
        out.append("tree edge count is not node count minus one")
    for v in range(d.node_count):
        if d.degree(v) > 4:
            out.append(f"node {v} has degree {d.degree(v)}")
        try:
            brace_of(d, g, v)
        except Exception as exc:  # any failure here is a finding
            out.append(f"node {v}: {exc}")
    shores = []
    for (a, b), c in d.cuts.items():
        if c.shore != d.side(a, b):
            out.append(f"cut {a}-{b} shore disagrees with the tree")
        if len(c.shore) % 2 == 0:
            out.append(f"cut {a}-{b} has an even shore")
        if any(len(set(c.cut_edges) & pm) != 1 for pm in pms):
            out.append(f"cut {a}-{b} is not tight")
        if sorted(c.index(e) for e in c.cut_edges) != list(range(1, len(c) + 1)):
            out.append(f"cut {a}-{b} index is not a bijection")
        shores.append(c.shore)
    for x, y in combinations(shores, 2):
        if not laminar(x, y, universe):
            out.append("two cuts are not laminar")
    if not d.single_node:
        rd = root_decomposition(d, g)
        for v in range(d.node_count):
            if v != rd.root and not rd.children[v] and len(d.bags[v]) != 3:
                out.append(f"leaf {v} has bag size {len(d.bags[v])}")
            if v != rd.root and rd.shores[v] & d.bags[rd.root]:
                out.append(f"shore of node {v} meets the root bag")
    return out


def interval_samples(g: Graph, d: TightCutDecomposition, pms: list[Matching],
                     limit: int, rng: random.Random) -> Iterator[tuple[frozenset[int], Matching, frozenset]]:
    """``(shore, matching, F)`` triples with ``F`` inside the matching and the shore.

    Enumerates every triple when there are at most ``limit``; otherwise draws
    ``limit`` of them.
    """
    universe = frozenset(range(g.n))
    shores = sorted({s for c in d.cuts.values() for s in (c.shore, universe - c.shore)}, key=sorted)
    pools = []
    for x in shores:
        for pm in pms:
            inside = sorted(e for e in pm if e[0] in x and e[1] in x)
            pools.append((x, pm, inside))
    total = sum(2 ** len(inside) for _, _, inside in pools)
    if total <= limit:
        for x, pm, inside in pools:
            for size in range(len(inside) + 1):
                for f in combinations(inside, size):
                    yield x, pm, frozenset(f)
        return
    for _ in range(limit):
        x, pm, inside = rng.choice(pools)
        yield x, pm, frozenset(e for e in inside if rng.random() < 0.5)


def check_interval_property(g: Graph, d: TightCutDecomposition, limit: int = 2000,
                         seed: int = 0) -> Result:
    """Open cut edges form an interval, and there are few distinct open sets."""
    if d.single_node:
        return "interval-property", True, "no non-trivial cuts"
    pms = all_perfect_matchings(g)
    rng = random.Random(seed)
    orders = {}
    open_sets: dict[frozenset[int], set[frozenset]] = {}
    count = 0
    for x, pm, f in interval_samples(g, d, pms, limit, rng):
        if x not in orders:
            orders[x] = cut_order(g, d.outer, x)
        z = open_edges(g, x, f, pms)
        if not orders[x].is_contiguous(z):
            return "interval-property", False, f"shore {sorted(x)}, F {sorted(f)}: open set not contiguous"
        open_sets.setdefault(x, set()).add(z)
        count += 1
    for x, sets in open_sets.items():
        p = len(orders[x])
        if len(sets) > p * (p + 1) // 2 + p:
            return "interval-property", False, f"shore {sorted(x)}: {len(sets)} distinct open sets"
    return "interval-property", True, f"{count} samples"


def run_checks(g: Graph) -> list[Result]:
    """Every check that applies to ``g`` (which must have a perfect matching)."""
    results = [("outerplanar", is_outerplanar(g), "")]
    results.append(check_cover_reductions(g))
    results.append(check_cover_components(g))
    if not results[0][1]:
        return results
    for comp, old in connected_components(cover_graph(g)):
        if comp.n < 4:
            continue
        label = ",".join(map(str, old))
        d = tight_cut_decomposition(comp)
        problems = decomposition_problems(comp, d)
        results.append((f"decomposition[{label}]", not problems, "; ".join(problems) or f"{d.node_count} nodes"))
        name, ok, detail = check_interval_property(comp, d)
        results.append((f"{name}[{label}]", ok, detail))
        dp, bf = run_dp(comp).spectrum, forcing_spectrum_bf(comp)
        results.append((f"dp-vs-oracle[{label}]", dp == bf, f"dp {dp.sorted()} oracle {bf.sorted()}"))
    total, bf = forcing_spectrum(g), forcing_spectrum_bf(g)
    results.append(("pipeline-vs-oracle", total == bf, f"pipeline {total.sorted()} oracle {bf.sorted()}"))
    return results
