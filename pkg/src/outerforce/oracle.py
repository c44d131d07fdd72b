"""Exhaustive ground truth for forcing and anti-forcing numbers, plus the
graph generators used by the test corpus.

Everything here works from the full list of perfect matchings and shares no
code with the decomposition or the dynamic program.
"""

from __future__ import annotations

import enum
import random
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    CapExceeded,
    GenerationFailed,
    InfeasibleF,
    NoPerfectMatching,
    NotPerfectMatching,
    OracleTooLarge,
)
from .graph import Edge, Graph, build_graph, chords_cross, connected_components, cut, edge, induced_subgraph
from .matching import Matching, cover_graph, enumerate_perfect_matchings, is_matching_covered, is_perfect_matching
from .dp import Spectrum

MAX_VERTICES = 24
MAX_MATCHINGS = 2 ** 20


class EdgeStatus(enum.Enum):
    FORCED_IN = "forced-in"
    FORCED_OUT = "forced-out"
    OPEN = "open"


def all_perfect_matchings(g: Graph) -> list[Matching]:
    if g.n > MAX_VERTICES:
        raise OracleTooLarge(f"{g.n} vertices exceed the oracle limit of {MAX_VERTICES}")
    try:
        return list(enumerate_perfect_matchings(g, cap=MAX_MATCHINGS))
    except CapExceeded as exc:
        raise OracleTooLarge(str(exc)) from exc


def _check_pm(g: Graph, m: Iterable[Edge]) -> Matching:
    m = frozenset(edge(*e) for e in m)
    if not is_perfect_matching(g, m):
        raise NotPerfectMatching(f"{sorted(m)} is not a perfect matching")
    return m


def is_forcing_set(g: Graph, m: Iterable[Edge], f: Iterable[Edge]) -> bool:
    """``f`` forces ``m`` iff ``m`` is the only perfect matching containing ``f``."""
    m = frozenset(m)
    f = frozenset(edge(*e) for e in f)
    found = 0
    for pm in enumerate_perfect_matchings(g):
        if f <= pm:
            found += 1
            if found > 1:
                return False
    return found == 1 and f <= m


def is_forcing_set_by_deletion(g: Graph, m: Iterable[Edge], f: Iterable[Edge]) -> bool:
    """``m`` minus ``f`` is the unique perfect matching of ``g`` minus the ends of ``f``."""
    m = frozenset(m)
    f = frozenset(edge(*e) for e in f)
    if not f <= m:
        return False
    covered = {v for e in f for v in e}
    rest, old = induced_subgraph(g, set(range(g.n)) - covered)
    pms = []
    for pm in enumerate_perfect_matchings(rest):
        pms.append(frozenset(edge(old[a], old[b]) for a, b in pm))
        if len(pms) > 1:
            return False
    return pms == [m - f]


class _Masks:
    """Perfect matchings of one graph as bitmasks over its sorted edge list."""

    def __init__(self, g: Graph, pms: Optional[list[Matching]] = None):
        self.edges = g.sorted_edges()
        self.bit = {e: 1 << i for i, e in enumerate(self.edges)}
        if pms is None:
            pms = all_perfect_matchings(g)
        self.pms = pms
        self.masks = [self.mask(pm) for pm in pms]

    def mask(self, es: Iterable[Edge]) -> int:
        out = 0
        for e in es:
            out |= self.bit[e]
        return out


def _forcing_number(masks: _Masks, m: Matching) -> int:
    mm = masks.mask(m)
    others = [p for p in masks.masks if p != mm]
    edges = sorted(m)
    for size in range(len(edges) + 1):
        for f in combinations(edges, size):
            fm = masks.mask(f)
            if not any(p & fm == fm for p in others):
                return size
    raise AssertionError("the whole matching always forces itself")


def forcing_number_bf(g: Graph, m: Iterable[Edge]) -> int:
    """Smallest ``F`` inside ``m`` such that no other perfect matching contains ``F``."""
    m = _check_pm(g, m)
    return _forcing_number(_Masks(g), m)


def forcing_numbers(g: Graph) -> dict[Matching, int]:
    masks = _Masks(g)
    return {pm: _forcing_number(masks, pm) for pm in masks.pms}


def forcing_spectrum_bf(g: Graph) -> Spectrum:
    numbers = forcing_numbers(g)
    if not numbers:
        raise NoPerfectMatching("graph has no perfect matching")
    return Spectrum(numbers.values())


def _min_hitting_set(sets: list[int]) -> int:
    """Smallest number of bits meeting every mask, by iterative deepening."""

    def minimal(sets: list[int]) -> list[int]:
        # a set containing another is hit whenever the smaller one is
        kept: list[int] = []
        for s in sorted(set(sets), key=lambda s: (bin(s).count("1"), s)):
            if not any(t & s == t for t in kept):
                kept.append(s)
        return kept

    def packing(sets: tuple[int, ...]) -> int:
        used, count = 0, 0
        for s in sets:
            if not s & used:
                used |= s
                count += 1
        return count

    failed: set[tuple[tuple[int, ...], int]] = set()

    def hit(sets: tuple[int, ...], budget: int) -> bool:
        # dropping sets keeps the family free of nested pairs, so no re-filtering
        if not sets:
            return True
        if (sets, budget) in failed or packing(sets) > budget:
            return False
        rest = sets[0]
        while rest:
            low = rest & -rest
            rest ^= low
            if hit(tuple(s for s in sets if not s & low), budget - 1):
                return True
        failed.add((sets, budget))
        return False

    family = tuple(minimal(sets))
    size = packing(family)
    while not hit(family, size):
        size += 1
    return size


def _anti_forcing_number(masks: _Masks, m: Matching) -> int:
    mm = masks.mask(m)
    return _min_hitting_set([p & ~mm for p in masks.masks if p != mm])


def anti_forcing_number_bf(g: Graph, m: Iterable[Edge]) -> int:
    """Fewest non-matching edges whose deletion leaves ``m`` as the only perfect matching.

    Every other perfect matching must lose one of its edges outside ``m``, so
    this is a minimum hitting set over those edge sets, searched by size.
    """
    m = _check_pm(g, m)
    return _anti_forcing_number(_Masks(g), m)


def anti_forcing_numbers(g: Graph) -> dict[Matching, int]:
    masks = _Masks(g)
    return {pm: _anti_forcing_number(masks, pm) for pm in masks.pms}


def anti_forcing_spectrum_bf(g: Graph) -> Spectrum:
    numbers = anti_forcing_numbers(g)
    if not numbers:
        raise NoPerfectMatching("graph has no perfect matching")
    return Spectrum(numbers.values())


def edge_status(g: Graph, f: Iterable[Edge], e: Edge,
                pms: Optional[list[Matching]] = None) -> EdgeStatus:
    f = frozenset(edge(*x) for x in f)
    e = edge(*e)
    if pms is None:
        pms = all_perfect_matchings(g)
    holding = [pm for pm in pms if f <= pm]
    if not holding:
        raise InfeasibleF("no perfect matching contains the given edges")
    hits = sum(1 for pm in holding if e in pm)
    if hits == len(holding):
        return EdgeStatus.FORCED_IN
    if hits == 0:
        return EdgeStatus.FORCED_OUT
    return EdgeStatus.OPEN


def open_edges(g: Graph, x: Iterable[int], f: Iterable[Edge],
               pms: Optional[list[Matching]] = None) -> frozenset[Edge]:
    """Cut edges around ``x`` that some perfect matching containing ``f`` uses."""
    if pms is None:
        pms = all_perfect_matchings(g)
    f = frozenset(edge(*e) for e in f)
    c = cut(g, x)
    return frozenset(
        e for e in c if edge_status(g, f, e, pms) is not EdgeStatus.FORCED_OUT
    )


def ladder(k: int) -> Graph:
    """2 x k grid; ``u_i`` is vertex ``i - 1`` and ``v_i`` is vertex ``k + i - 1``."""
    if k < 1:
        raise ValueError("ladder length must be positive")
    es = [(i, i + 1) for i in range(k - 1)]
    es += [(k + i, k + i + 1) for i in range(k - 1)]
    es += [(i, k + i) for i in range(k)]
    return build_graph(2 * k, es)


def cycle_with_chords(n: int, chords: Iterable[Edge]) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] + list(chords))


def random_mc_outerplanar(target_n: int, seed: int, attempts: int = 50) -> Graph:
    """Matching covered outerplanar graph on at most ``target_n`` vertices.

    An even cycle gets random non-crossing chords; the largest component of
    its cover graph with at least four vertices is kept.  Deterministic in
    ``(target_n, seed)``.
    """
    if target_n < 4 or target_n % 2:
        raise ValueError("target_n must be an even integer >= 4")
    rng = random.Random(f"{target_n}:{seed}")
    n = target_n
    pos = {v: v for v in range(n)}
    for _ in range(attempts):
        chords: list[Edge] = []
        for _ in range(rng.randint(0, 2 * n)):
            a, b = sorted(rng.sample(range(n), 2))
            # even-distance chords close odd cycles and rarely survive the cover graph
            if (b - a) % 2 == 0 and rng.random() < 0.8:
                continue
            if b - a in (1, n - 1) or (a, b) in chords:
                continue
            if any(chords_cross((a, b), c, pos) for c in chords):
                continue
            chords.append((a, b))
        g = cover_graph(cycle_with_chords(n, chords))
        parts = [(comp.n, comp) for comp, _ in connected_components(g) if comp.n >= 4]
        if not parts:
            continue
        best = max(parts, key=lambda p: p[0])[1]
        if is_matching_covered(best):
            return best
    raise GenerationFailed(f"no matching covered graph after {attempts} attempts")
