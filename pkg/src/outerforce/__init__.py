"""Forcing spectra of outerplanar graphs.

The spectrum is computed by dynamic programming over the tight cut
decomposition of each cover-graph component; an exhaustive oracle over all
perfect matchings is included for cross-checking.
"""

from .decomposition import OrderedCut, TightCutDecomposition, cut_order, tight_cut_decomposition
from .dp import Spectrum, combine_spectra, forcing_spectrum, forcing_spectrum_dp, run_dp
from .errors import OuterforceError
from .formats import emit_spectrum_report, export_decomposition_dot, parse_edge_list, spectrum_report
from .graph import Graph, build_graph, is_outerplanar, outer_cycle
from .matching import cover_graph, enumerate_perfect_matchings, is_matching_covered, maximum_matching
from .oracle import (
    anti_forcing_number_bf,
    anti_forcing_spectrum_bf,
    forcing_number_bf,
    forcing_spectrum_bf,
    ladder,
)

__all__ = [
    "Graph", "OrderedCut", "OuterforceError", "Spectrum", "TightCutDecomposition",
    "anti_forcing_number_bf", "anti_forcing_spectrum_bf", "build_graph", "combine_spectra",
    "cover_graph", "cut_order", "emit_spectrum_report", "enumerate_perfect_matchings",
    "export_decomposition_dot", "forcing_number_bf", "forcing_spectrum", "forcing_spectrum_bf",
    "forcing_spectrum_dp", "is_matching_covered", "is_outerplanar", "ladder", "maximum_matching",
    "outer_cycle", "parse_edge_list", "run_dp", "spectrum_report", "tight_cut_decomposition",
]
