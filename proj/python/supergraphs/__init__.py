"""Power, enhanced power and commuting super graphs of finite groups.

Thin wrapper over the C++ library: explicit groups and their nine super
graphs, order spectra of S_n / A_n and the diameter-3 witness search.
"""

from ._supergraphs import (
    DEFAULT_BUDGET,
    SPECTRUM_CAP,
    BudgetExceeded,
    Graph,
    Group,
    HypothesisViolation,
    OrderSpectrum,
    alternating,
    build,
    catalog_labels,
    components,
    cyclic,
    diameter,
    dihedral,
    direct_product,
    dominant_vertices,
    find_t_prime,
    group,
    is_valid_witness,
    minimal_support,
    predict_connectivity,
    prime_window_count,
    quaternion,
    reduced,
    scan,
    scan_csv,
    search_witness,
    spectrum,
    spectrum_of,
    symmetric,
    to_dot,
    verify_completeness,
    verify_equality,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
