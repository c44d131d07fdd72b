"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (shown even under output
capture).  Run on its own with ``pytest tests/test_acceptance.py``.
"""

import math
import random
import re
import statistics
import subprocess
import sys
import time

import pytest

from outerforce.checks import check_cover_reductions, decomposition_problems
from outerforce.decomposition import cut_order, tight_cut_decomposition
from outerforce.dp import forcing_spectrum, forcing_spectrum_dp
from outerforce.graph import build_graph, connected_components, is_connected, is_outerplanar
from outerforce.matching import count_perfect_matchings, cover_graph, is_matching_covered
from outerforce.oracle import all_perfect_matchings, forcing_spectrum_bf, ladder, open_edges

from corpus import mc_corpus, polygon_graphs, random_gnp_with_pm, random_outerplanar_with_pm


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
        assert ok, detail
    return emit


def spectrum_for(g):
    # matching covered inputs go straight to the DP; the rest through the cover-graph pipeline
    return forcing_spectrum_dp(g) if is_matching_covered(g) else forcing_spectrum(g)


def test_exhaustive_equivalence(verdict):
    counts, mismatches, mc = {}, [], 0
    for n, dedup in ((4, True), (6, True), (8, True), (10, False)):
        graphs = polygon_graphs(n, dedup=dedup)
        counts[n] = len(graphs)
        for g in graphs:
            mc += is_matching_covered(g)
            if spectrum_for(g) != forcing_spectrum_bf(g):
                mismatches.append(sorted(g.edges))
    detail = f"graphs per n {counts}, {mc} matching covered, {len(mismatches)} mismatches"
    verdict(1, "DP equals oracle on every dissected 4/6/8/10-gon", not mismatches, detail)


def test_pipeline_equivalence(verdict):
    rng = random.Random(20240601)
    mismatches, non_mc, split, dp_parts = 0, 0, 0, 0
    for _ in range(500):
        g = random_outerplanar_with_pm(rng, 12)
        assert is_outerplanar(g)
        cov = cover_graph(g)
        non_mc += not is_matching_covered(g)
        split += not is_connected(cov)
        dp_parts += sum(comp.n >= 4 for comp, _ in connected_components(cov))
        mismatches += forcing_spectrum(g) != forcing_spectrum_bf(g)
    ok = mismatches == 0 and non_mc > 0 and split > 0
    detail = (f"500 graphs, {non_mc} not matching covered, {split} with split cover graph, "
              f"{dp_parts} components solved by DP, {mismatches} mismatches")
    verdict(2, "pipeline equals oracle on random outerplanar graphs", ok, detail)


def test_known_values(verdict):
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    paw = build_graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    two_c4 = build_graph(8, list(c4.edges) + [(a + 4, b + 4) for a, b in c4.edges])
    cases = [("C4", c4, {1}), ("ladder(4)", ladder(4), {1, 2}), ("ab,bc,cd,bd", paw, {0}), ("2 x C4", two_c4, {2})]
    bad = []
    for name, g, expected in cases:
        oracle = forcing_spectrum_bf(g)
        got = forcing_spectrum(g)
        if not (oracle == expected == got):
            bad.append(f"{name}: pipeline {got.sorted()} oracle {oracle.sorted()}")
    verdict(3, "known spectra", not bad, "; ".join(bad) or f"{len(cases)} graphs match")


def test_ladder_bound(verdict):
    bad = []
    for k in range(2, 21, 2):
        count = count_perfect_matchings(ladder(k))
        if count < 2 ** (k // 2) or (count == 2 ** (k // 2)) != (k == 2):
            bad.append(f"k={k}: {count}")
    verdict(4, "ladder matching count bound", not bad, "; ".join(bad) or "even k in 2..20, equality only at k=2")


def test_interval_property_fuzz(verdict):
    rng = random.Random(5)
    pool = []
    for g in mc_corpus():
        d = tight_cut_decomposition(g)
        if d.single_node:
            continue
        universe = frozenset(range(g.n))
        shores = [s for c in d.cuts.values() for s in (c.shore, universe - c.shore)]
        pool.append((g, d, shores, all_perfect_matchings(g)))
    bad = 0
    for _ in range(1000):
        g, d, shores, pms = rng.choice(pool)
        x = rng.choice(shores)
        m = rng.choice(pms)
        f = [e for e in sorted(m) if e[0] in x and e[1] in x and rng.random() < 0.5]
        if not cut_order(g, d.outer, x).is_contiguous(open_edges(g, x, f, pms)):
            bad += 1
    verdict(5, "open cut edges form an interval", bad == 0, f"1000 tuples over {len(pool)} graphs, {bad} violations")


def test_decomposition_structure(verdict):
    corpus = mc_corpus()
    bad = []
    for g in corpus:
        problems = decomposition_problems(g, tight_cut_decomposition(g))
        if problems:
            bad.append(f"{sorted(g.edges)}: {problems[0]}")
    verdict(6, "tight, C4 braces, degree <= 4, leaf bags of 3", not bad,
            "; ".join(bad[:3]) or f"{len(corpus)} corpus graphs")


def test_cover_reductions(verdict):
    rng = random.Random(1)
    bad, pms = [], 0
    for _ in range(500):
        g = random_gnp_with_pm(rng, 12)
        name, ok, detail = check_cover_reductions(g)
        pms += len(all_perfect_matchings(g))
        if not ok:
            bad.append(detail)
    verdict(7, "Forc and AForc unchanged by the cover graph", not bad,
            "; ".join(bad[:3]) or f"500 graphs, {pms} perfect matchings")


def test_polynomial_scaling(verdict):
    ks = [10, 20, 40, 80, 100]
    times = []
    for k in ks:
        start = time.perf_counter()
        forcing_spectrum_dp(ladder(k))
        times.append(time.perf_counter() - start)
    fit = statistics.linear_regression([math.log(2 * k) for k in ks], [math.log(t) for t in times])
    ok = max(times) < 10 and fit.slope < 6
    detail = ", ".join(f"k={k} {t:.3f}s" for k, t in zip(ks, times)) + f", log-log slope {fit.slope:.2f}"
    verdict(8, "ladder DP under 10 s with slope < 6", ok, detail)


def test_cli_determinism(verdict, tmp_path):
    l6 = tmp_path / "l6.txt"
    l6.write_text(ladder(6).edge_list())
    mixed = tmp_path / "mixed.txt"
    mixed.write_text("0 1\n1 2\n2 3\n1 3\n4 5\n5 6\n6 7\n7 4\n4 6\n")
    commands = [
        ["spectrum", str(l6), "--no-timing"],
        ["spectrum", str(l6), "--method", "both", "--format", "text", "--no-timing"],
        ["spectrum", str(mixed), "--method", "bf", "--no-timing"],
        ["cover", str(mixed)],
        ["decompose", str(l6), "--dot", "-"],
        ["check", str(l6)],
        ["gen", "--kind", "ladder", "--k", "7"],
        ["gen", "--kind", "random", "--n", "14", "--seed", "3"],
        ["bench", "--kind", "ladder", "--max-k", "30", "--no-timing"],
    ]
    # with timing left on, only the elapsed field may differ
    timed = [
        ["spectrum", str(l6)],
        ["spectrum", str(l6), "--format", "text"],
        ["bench", "--kind", "ladder", "--max-k", "30"],
    ]

    def run(cmd):
        return subprocess.run([sys.executable, "-m", "outerforce", *cmd], capture_output=True)

    def mask(out):
        out = re.sub(rb'"elapsed_ms": \d+', b'"elapsed_ms": 0', out)
        out = re.sub(rb"elapsed: \d+ ms", b"elapsed: 0 ms", out)
        return re.sub(rb"(?m) \d+$", b" 0", out)

    bad = []
    for cmd in commands:
        a, b = run(cmd), run(cmd)
        if a.returncode != 0 or a.stdout != b.stdout or a.stderr != b.stderr:
            bad.append(" ".join(cmd))
    for cmd in timed:
        a, b = run(cmd), run(cmd)
        if a.returncode != 0 or mask(a.stdout) != mask(b.stdout):
            bad.append(" ".join(cmd) + " (timed)")
    verdict(9, "CLI output byte-identical across runs", not bad,
            f"{len(commands)} commands byte-identical, {len(timed)} timed commands identical outside timings"
            + (f"; differing: {bad}" if bad else ""))
