import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from outerforce.errors import GenerationFailed, InfeasibleF, NoPerfectMatching, NotPerfectMatching, OracleTooLarge
from outerforce.graph import build_graph, cut, is_outerplanar
from outerforce.matching import cover_graph, enumerate_perfect_matchings, has_perfect_matching, is_matching_covered
from outerforce.oracle import (
    EdgeStatus,
    _min_hitting_set,
    all_perfect_matchings,
    anti_forcing_number_bf,
    anti_forcing_numbers,
    anti_forcing_spectrum_bf,
    edge_status,
    forcing_number_bf,
    forcing_numbers,
    forcing_spectrum_bf,
    is_forcing_set,
    is_forcing_set_by_deletion,
    ladder,
    open_edges,
    random_mc_outerplanar,
)

from corpus import random_gnp_with_pm

K2 = build_graph(2, [(0, 1)])
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
PAW = build_graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
RUNGS4 = frozenset((i, i + 4) for i in range(4))


@st.composite
def graphs_with_pm(draw, max_n=10):
    # a seeded generator: the retry loop needs genuinely varying draws
    seed = draw(st.integers(0, 2 ** 32))
    return random_gnp_with_pm(random.Random(seed), max_n)


def naive_anti_forcing(g, m):
    others = [pm for pm in enumerate_perfect_matchings(g) if pm != m]
    free = sorted(g.edges - m)
    for size in range(len(free) + 1):
        for s in itertools.combinations(free, size):
            if all(pm & set(s) for pm in others):
                return size


class TestForcingNumber:
    def test_examples(self):
        assert forcing_number_bf(K2, {(0, 1)}) == 0
        assert forcing_number_bf(C4, {(0, 1), (2, 3)}) == 1
        assert forcing_number_bf(C4, {(0, 3), (1, 2)}) == 1
        assert forcing_number_bf(ladder(4), RUNGS4) == 2

    def test_not_perfect(self):
        with pytest.raises(NotPerfectMatching):
            forcing_number_bf(C4, {(0, 1)})

    def test_spectra(self):
        assert forcing_spectrum_bf(C4) == {1}
        assert forcing_spectrum_bf(ladder(4)) == {1, 2}
        assert forcing_spectrum_bf(PAW) == {0}
        with pytest.raises(NoPerfectMatching):
            forcing_spectrum_bf(build_graph(3, [(0, 1), (1, 2), (2, 0)]))

    def test_ladder4_minimum_attained_by_outer_rungs(self):
        # u1v1, u4v4 and both middle horizontals
        m = frozenset({(0, 4), (3, 7), (1, 2), (5, 6)})
        assert forcing_number_bf(ladder(4), m) == 1

    @settings(max_examples=60)
    @given(graphs_with_pm())
    def test_both_forcing_characterisations_agree(self, g):
        for m in list(enumerate_perfect_matchings(g))[:6]:
            for size in range(len(m) + 1):
                for f in itertools.combinations(sorted(m), size):
                    assert is_forcing_set(g, m, f) == is_forcing_set_by_deletion(g, m, f)

    @settings(max_examples=60)
    @given(graphs_with_pm())
    def test_minimum_is_a_forcing_set_and_nothing_smaller_is(self, g):
        for m in list(enumerate_perfect_matchings(g))[:4]:
            k = forcing_number_bf(g, m)
            subsets = lambda s: itertools.combinations(sorted(m), s)
            assert any(is_forcing_set(g, m, f) for f in subsets(k))
            if k:
                assert not any(is_forcing_set(g, m, f) for f in subsets(k - 1))

    @settings(max_examples=60)
    @given(graphs_with_pm())
    def test_spectrum_minimum(self, g):
        spec = forcing_spectrum_bf(g)
        unique = len(all_perfect_matchings(g)) == 1
        assert (min(spec) == 0) == unique


class TestAntiForcing:
    def test_examples(self):
        assert anti_forcing_number_bf(K2, {(0, 1)}) == 0
        assert anti_forcing_number_bf(C4, {(0, 1), (2, 3)}) == 1
        assert anti_forcing_number_bf(PAW, {(0, 1), (2, 3)}) == 0
        assert anti_forcing_spectrum_bf(C4) == {1}
        assert anti_forcing_spectrum_bf(K2) == {0}

    def test_ladder4_cover_invariance(self):
        g = ladder(4)
        assert anti_forcing_spectrum_bf(g) == anti_forcing_spectrum_bf(cover_graph(g))

    @settings(max_examples=80, deadline=None)
    @given(graphs_with_pm(max_n=8))
    def test_against_naive_search(self, g):
        for m, value in anti_forcing_numbers(g).items():
            assert value == naive_anti_forcing(g, m)

    @given(st.lists(st.integers(1, 2 ** 8 - 1), max_size=8))
    def test_hitting_set(self, sets):
        best = next(
            size for size in range(9)
            if any(all(s & sum(1 << b for b in pick) for s in sets)
                   for pick in itertools.combinations(range(8), size))
        )
        assert _min_hitting_set(sets) == best


class TestCoverReduction:
    @settings(max_examples=80, deadline=None)
    @given(graphs_with_pm(max_n=8))
    def test_numbers_unchanged(self, g):
        cov = cover_graph(g)
        assert forcing_numbers(g) == forcing_numbers(cov)
        assert anti_forcing_numbers(g) == anti_forcing_numbers(cov)


class TestEdgeStatus:
    def test_c4(self):
        assert edge_status(C4, {(0, 1)}, (2, 3)) is EdgeStatus.FORCED_IN
        assert edge_status(C4, {(0, 1)}, (1, 2)) is EdgeStatus.FORCED_OUT
        assert all(edge_status(C4, set(), e) is EdgeStatus.OPEN for e in C4.edges)

    def test_infeasible(self):
        with pytest.raises(InfeasibleF):
            edge_status(C4, {(0, 1), (1, 2)}, (2, 3))

    def test_open_edges(self):
        g = ladder(4)
        x = {0, 4, 1}
        assert open_edges(g, x, set()) == cut(g, x)
        # fixing the rung u1v1 leaves u2 to be matched across the cut
        assert open_edges(g, x, {(0, 4)}) == {(1, 2), (1, 5)}


class TestGenerators:
    def test_ladder(self):
        two = ladder(2)
        assert (two.n, two.m) == (4, 4) and all(two.degree(v) == 2 for v in range(4))
        g = ladder(4)
        assert (g.n, g.m) == (8, 10)
        assert len(all_perfect_matchings(ladder(6))) == 13
        with pytest.raises(ValueError):
            ladder(0)

    def test_random_mc_outerplanar(self):
        for n in (4, 8, 12, 16):
            for seed in range(10):
                g = random_mc_outerplanar(n, seed)
                assert g == random_mc_outerplanar(n, seed)
                assert g.n <= n and g.m <= 2 * g.n - 3
                assert is_outerplanar(g) and has_perfect_matching(g) and is_matching_covered(g)

    def test_random_bad_size(self):
        with pytest.raises(ValueError):
            random_mc_outerplanar(7, 0)

    def test_generation_failed(self):
        with pytest.raises(GenerationFailed):
            random_mc_outerplanar(12, 0, attempts=0)

    def test_size_guard(self):
        with pytest.raises(OracleTooLarge):
            all_perfect_matchings(ladder(13))
