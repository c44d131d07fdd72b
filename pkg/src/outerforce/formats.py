"""Edge-list input, spectrum reports and DOT export."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional

from .decomposition import OrderedCut, TightCutDecomposition
from .dp import ComponentResult, Spectrum, combine_spectra, component_spectra, forcing_spectrum_dp
from .errors import DuplicateEdge, LoopEdge, ParseError
from .graph import Graph, edge
from .oracle import forcing_spectrum_bf


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional leading ``n <count>`` header.

    Blank lines and lines starting with ``#`` are skipped.  Without a header
    the vertex count is one more than the largest id.
    """
    declared: Optional[int] = None
    edges: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared is not None:
                raise ParseError("second 'n' header", lineno)
            if edges:
                raise ParseError("'n' header after edges", lineno)
            if len(tokens) != 2:
                raise ParseError("expected 'n <count>'", lineno)
            declared = _nonneg(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex ids, got {len(tokens)} tokens", lineno)
        u, v = _nonneg(tokens[0], lineno), _nonneg(tokens[1], lineno)
        if u == v:
            raise LoopEdge(f"line {lineno}: loop at vertex {u}")
        e = edge(u, v)
        if e in edges:
            raise DuplicateEdge(f"line {lineno}: edge ({u}, {v}) repeats line {edges[e]}")
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v)} outside 0..{declared - 1}", lineno)
        edges[e] = lineno
    n = declared if declared is not None else 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, frozenset(edges))


def _nonneg(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value {value}", lineno)
    return value


@dataclass
class SpectrumReport:
    n: int
    m: int
    components: list[ComponentResult]
    spectrum: Spectrum
    elapsed_ms: int

    @property
    def min_forcing(self) -> int:
        return self.spectrum.minimum

    @property
    def max_forcing(self) -> int:
        return self.spectrum.maximum


def spectrum_report(g: Graph, method: str = "dp", timing: bool = True) -> tuple[SpectrumReport, Optional[str]]:
    """Compute the spectrum of ``g`` component by component.

    With ``method="both"`` the DP result is cross-checked against the oracle
    on the whole input graph; the second return value describes a mismatch.
    """
    start = time.perf_counter()
    if method == "bf":
        comps = component_spectra(g, forcing_spectrum_bf, "bf", require_outerplanar=False)
    else:
        comps = component_spectra(g, forcing_spectrum_dp, "dp")
    spectrum = combine_spectra(c.spectrum for c in comps)
    mismatch = None
    if method == "both":
        oracle = forcing_spectrum_bf(g)
        if oracle != spectrum:
            mismatch = f"dp spectrum {spectrum.sorted()} != oracle spectrum {oracle.sorted()}"
    elapsed = round((time.perf_counter() - start) * 1000) if timing else 0
    return SpectrumReport(g.n, g.m, comps, spectrum, elapsed), mismatch


def report_json(report: SpectrumReport) -> str:
    doc = {
        "n": report.n,
        "m": report.m,
        "components": [
            {"vertices": sorted(c.vertices), "spectrum": c.spectrum.sorted(), "method": c.method}
            for c in report.components
        ],
        "spectrum": report.spectrum.sorted(),
        "min_forcing": report.min_forcing,
        "max_forcing": report.max_forcing,
        "elapsed_ms": report.elapsed_ms,
    }
    return json.dumps(doc, indent=2) + "\n"


def _braced(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def report_text(report: SpectrumReport) -> str:
    rows = [("component", "method", "spectrum")]
    rows += [
        (",".join(map(str, sorted(c.vertices))), c.method, _braced(c.spectrum.sorted()))
        for c in report.components
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(2)]
    lines = [f"graph: n={report.n} m={report.m}"]
    lines += [f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]}" for r in rows]
    lines += [
        f"spectrum: {_braced(report.spectrum.sorted())}",
        f"forcing number: {report.min_forcing}",
        f"maximum forcing number: {report.max_forcing}",
        f"elapsed: {report.elapsed_ms} ms",
    ]
    return "\n".join(lines) + "\n"


def emit_spectrum_report(report: SpectrumReport, fmt: str = "json") -> str:
    if fmt == "json":
        return report_json(report)
    if fmt == "text":
        return report_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def _cut_label(c: OrderedCut) -> str:
    return " ".join(f"{i}:({u},{v})" for i, (u, v) in enumerate(c.cut_edges, start=1))


def _bag_label(bag) -> str:
    return "{" + ",".join(str(v) for v in sorted(bag)) + "}"


def export_decomposition_dot(d: TightCutDecomposition, g: Graph) -> str:
    lines = ["graph decomposition {", "  node [shape=box];"]
    for v, bag in enumerate(d.bags):
        lines.append(f'  t{v} [label="{_bag_label(bag)}"];')
    for a, b in d.tree_edges:
        lines.append(f'  t{a} -- t{b} [label="{_cut_label(d.cuts[(a, b)])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def decomposition_text(d: TightCutDecomposition) -> str:
    lines = [f"nodes {d.node_count}"]
    lines += [f"node {v} bag {_bag_label(bag)}" for v, bag in enumerate(d.bags)]
    for a, b in d.tree_edges:
        c = d.cuts[(a, b)]
        lines.append(f"cut {a}-{b} shore {_bag_label(c.shore)} edges {_cut_label(c)}")
    return "\n".join(lines) + "\n"
