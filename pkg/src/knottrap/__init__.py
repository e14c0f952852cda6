"""Exact Alexander-polynomial and signature checks for alternating links."""

from .conjectures import fox_milnor, hm_check, is_trapezoidal, ratio_scan, stable_length
from .diagram import (BraidWord, LinkDiagram, braid_closure, connected_sum, diagram_predicates,
                      mirror, parse_braid, parse_pd, seifert_circles)
from .harness import CensusOptions, LinkReport, load_census, run_census
from .invariants import alexander_burau, alexander_pd, conway_skein, signature
from .lorentzian import is_lorentzian, is_m_convex, refinement_validate
from .polyalg import CoeffSeq, LaurentPoly, MultiPoly, normalize_alexander, signature_exact
from .structure import decompose_murasugi, is_twist_concentrated, twist_regions

__version__ = "0.1.0"

__all__ = [
    "fox_milnor", "hm_check", "is_trapezoidal", "ratio_scan", "stable_length",
    "BraidWord", "LinkDiagram", "braid_closure", "connected_sum", "diagram_predicates", "mirror",
    "parse_braid", "parse_pd", "seifert_circles",
    "CensusOptions", "LinkReport", "load_census", "run_census",
    "alexander_burau", "alexander_pd", "conway_skein", "signature",
    "is_lorentzian", "is_m_convex", "refinement_validate",
    "CoeffSeq", "LaurentPoly", "MultiPoly", "normalize_alexander", "signature_exact",
    "decompose_murasugi", "is_twist_concentrated", "twist_regions",
]
