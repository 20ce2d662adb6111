"""spinsym: exact Dirac spectra on equal-rank compact spin symmetric spaces.

The square of the first eigenvalue of the Dirac operator of a spin pair
G/K (equal rank, Killing metric) is ``2 min_w |w.delta_G - delta_K|^2 +
n/8``; this package computes it in exact rational arithmetic, verifies it
against independent brute-force oracles, and scans the low spectrum.
"""

from .errors import (
    CapExceededError,
    DimensionMismatchError,
    InconsistentCharacterError,
    InvalidRankError,
    InvalidSubsystemError,
    NoNoncompactError,
    NotARootError,
    NotClosedError,
    NotDominantError,
    NotGradedError,
    NotIntegralError,
    NotSimpleListError,
    NotSpinError,
    SpinsymError,
)
from .rootsystem import (
    RootSystem,
    SimpleType,
    Weight,
    build_root_system,
    coroot_pairing,
    dominance_leq,
    is_dominant,
    killing_inner_product,
    positive_root_count,
    simple_system,
    weyl_dimension,
    weyl_group_order,
)
from .weyl import (
    KostantSet,
    WeylElement,
    apply,
    dominant_representative,
    enumerate_kostant_set,
    full_orbit,
    full_weyl_group,
    identity_element,
    reflect,
    reflection_element,
)
from .symmspace import (
    CatalogEntry,
    SymmetricPair,
    build_pair,
    catalog,
    catalog_entry,
    check_spin,
    parse_pair_document,
    spin_obstruction,
    strange_formula_check,
)
from .dirac import (
    SpectrumLine,
    SpinComponent,
    branching_multiplicity,
    casimir_eigenvalue,
    check_lemma1,
    decompose_into_k_irreps,
    first_eigenvalue_squared,
    first_eigenvalue_squared_remark,
    freudenthal_multiplicities,
    kostant_set,
    select_w0,
    spectrum_below,
    spin_decomposition,
    spin_weights_bruteforce,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"
