"""Monotone Boolean functions by profile.

Truth tables in reverse colex order, minimal-term antichains, profile
vectors with a complete generator, canonical forms under variable renaming,
and a profile-by-profile counting engine that reproduces the known class
counts R(n) and Dedekind numbers D(n) at desk scale.
"""

from .classlist import ProfileClassList
from .enumeration import (
    KNOWN_CLASS_COUNTS,
    KNOWN_DEDEKIND,
    ComputationInterrupted,
    CountOptions,
    CountsReport,
    ProfileCount,
    build_class_list,
    count_all,
    count_asymmetric,
    count_by_minterms,
    count_profile,
    extend_profile,
    korshunov_estimate,
    lower_bound_R,
    seed_profile,
)
from .oracle import brute_classes, brute_min_shadow, brute_monotone_tables
from .profiles import (
    Profile,
    complement_profile,
    format_profile,
    generate_profiles,
    parse_profile,
    profile_feasible,
    profile_generation_state,
    profile_of,
    profiles_as_tuples,
    reverse_dual_profile,
    shadow_bound,
    strip_singleton,
)
from .store import (
    ResultsDB,
    ResultsMismatchError,
    StoreDimensionError,
    StoreError,
    StoreValidationError,
    StoreVersionError,
    load_profile_list,
    save_profile_list,
)
from .symmetry import (
    ClassRecord,
    VariablePermutation,
    apply_permutation,
    canonical_form,
    is_asymmetric,
)
from .truthtable import (
    MinimalTermSet,
    TruthTable,
    from_minimal_terms,
    is_monotone,
    pack,
    to_minimal_terms,
    unpack,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
