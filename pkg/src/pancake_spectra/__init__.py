"""Flip graphs of coloured permutations and their spectra.

A coloured permutation carries a colour in Z_m on each letter of a
permutation of n letters; prefix reversals flip an initial block and
shift its colours.  This package builds the resulting flip graphs,
their letter-1 equitable partition and block-circulant quotient matrix,
computes spectra by direct, decomposed, and closed-form routes, and
verifies the spectral-gap and eigenvalue-multiplicity bounds those
structures imply.
"""

from .coloured_permutations import (
    ColouredPermutation,
    GroupParams,
    compose,
    identity_element,
    permutation_rank,
    permutation_unrank,
    prefix_reversal,
    rank,
    substring_reversal,
    unrank,
    validate_element,
)
from .cayley_graph import (
    CayleyGraph,
    DEFAULT_VERTEX_CAP,
    adjacency_matrix,
    build_graph,
    edge_list_text,
    generators,
    is_connected,
    sparse_adjacency,
    write_edge_list,
)
from .equitable_partition import (
    Partition,
    StructuralBlocks,
    build_partition,
    cell_index,
    quotient_blocks,
    quotient_csv,
    quotient_empirical,
    quotient_formula,
    structural_blocks,
    trivial_partition,
)
from .quotient_spectra import (
    CosineCoefficient,
    RealSpectrum,
    block_circulant_spectrum,
    cluster_multiplicities,
    cosine_coefficients,
    gsw_spectrum,
    interlaces,
    is_sub_multiset,
    max_spectral_difference,
    mod4_guaranteed_sublist,
    spectra_match,
    submatrix_gap_bound,
    symmetric_spectrum,
)
from .exact_nullity import integer_nullity, integer_rank
from .spectral_verification import (
    Conjecture2Scan,
    ConjectureRecord,
    DEFAULT_DENSE_CAP,
    DEFAULT_EXACT_CAP,
    GapReport,
    MultiplicityCase,
    MultiplicityReport,
    TrendRow,
    conjecture2_scan,
    exact_integer_multiplicity,
    full_spectrum,
    gap_trend,
    numeric_multiplicity,
    top_two_eigenvalues,
    verify_gap,
    verify_multiplicity,
    verify_quotient_containment,
    verify_quotient_structure,
)
from .errors import CapacityError, NotEquitableError, NumericError

__version__ = "0.1.0"
