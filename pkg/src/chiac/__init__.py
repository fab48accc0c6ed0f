"""chiac: exact desk-scale combinatorics of the chi_ac poset-colouring invariant.

For a pattern poset F with more than one element, chi_ac(F) is the least
number of colours with which every finite poset P (|P| > 1) can be coloured
so that every maximal F-free subset of P with more than one element receives
at least two colours.  This package computes the finite pieces exactly:
maximal F-free families, exact minimum colour counts, the known constructive
colourings with their hypothesis tests, and exhaustive catalogue sweeps.
"""

from .catalogue import (
    CLAIMS,
    FOUR_ELEMENT_NAMES,
    THREE_ELEMENT_NAMES,
    UNLABELLED_POSET_COUNTS,
    Claim,
    PosetCatalogue,
    ResolveError,
    ResultCache,
    SweepReport,
    generate_all,
    generate_all_by_minimal_extension,
    min_colours_cached,
    named_poset,
    paper_table,
    registry_names,
    resolve_poset,
    search_lower_bound_witness,
    unboundedness_check,
    unboundedness_grid,
    verify_paper,
    verify_theorem3,
    verify_upper_bound,
)
from .colouring import (
    ChromaticResult,
    Colouring,
    HypothesisError,
    HypothesisReport,
    TheoremBound,
    chi_ac_upper_from_theorems,
    hypothesis_report,
    is_valid,
    min_colours,
    minimals_colouring,
    theorem3_colouring,
    theorem3_dual_colouring,
)
from .embedding import enumerate_copies, find_embedding, is_F_free
from .families import FreeFamily, maximal_F_free, maximal_antichains, maximal_chains
from .poset import (
    CycleError,
    Poset,
    PosetParseError,
    antichain,
    chain,
    fence,
    format_poset,
    load_poset,
    parse_poset,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "Claim",
    "ChromaticResult",
    "Colouring",
    "CycleError",
    "FOUR_ELEMENT_NAMES",
    "FreeFamily",
    "HypothesisError",
    "HypothesisReport",
    "Poset",
    "PosetCatalogue",
    "PosetParseError",
    "ResolveError",
    "ResultCache",
    "SweepReport",
    "THREE_ELEMENT_NAMES",
    "TheoremBound",
    "UNLABELLED_POSET_COUNTS",
    "antichain",
    "chain",
    "chi_ac_upper_from_theorems",
    "enumerate_copies",
    "fence",
    "find_embedding",
    "format_poset",
    "generate_all",
    "generate_all_by_minimal_extension",
    "hypothesis_report",
    "is_F_free",
    "is_valid",
    "load_poset",
    "maximal_F_free",
    "maximal_antichains",
    "maximal_chains",
    "min_colours",
    "min_colours_cached",
    "minimals_colouring",
    "named_poset",
    "paper_table",
    "parse_poset",
    "registry_names",
    "resolve_poset",
    "search_lower_bound_witness",
    "theorem3_colouring",
    "theorem3_dual_colouring",
    "unboundedness_check",
    "unboundedness_grid",
    "verify_paper",
    "verify_theorem3",
    "verify_upper_bound",
    "__version__",
]
