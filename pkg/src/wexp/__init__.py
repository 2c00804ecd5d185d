"""Finite-group engine for exponential-subgroup predicates.

Conventions: permutations act on 1-based points; composition is "apply
left, then right"; all group constructions and enumerations are
deterministic, so reports and certificates are reproducible.
"""

__version__ = "0.1.0"

from .caps import DEFAULT_CAPS, Caps, OverCapError
from .constructors import (
    make_agl,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_psl2,
    make_symmetric,
)
from .fields import FiniteField
from .groupfile import GroupFileError, load_group_file, parse_group_file
from .lattice import (
    SubgroupClass,
    SubgroupLattice,
    all_subgroup_classes,
    is_same_class,
    subgroup_from_generators,
)
from .perm import Permutation, PermGroup
from .predicates import (
    FALSE,
    TRUE,
    UNKNOWN,
    PredicateReport,
    PslClassification,
    density_series,
    exponential_subgroup_classes,
    find_wexp_witness,
    is_exp_simple_definitional,
    is_exp_simple_quotient,
    is_exp_trivial,
    is_exponential,
    is_minimal_wexp_nonsolvable,
    is_weakly_exponential,
    is_wexp_solvable,
    psl2_wexp_classifier,
    psl_chainsaw,
    survey_psl2,
    wexp_prime_density,
)
from .report import Report, verify_report
from .structure import (
    ClassTable,
    ElementTable,
    are_conjugate,
    centralizer_members,
    core_of,
    element_table,
    exponent,
    group_derived_subgroup,
    group_is_nilpotent,
    group_is_solvable,
    is_solvable_members,
    normal_closure,
    normal_subgroups,
    normalizer_of_set,
    quotient_action,
    quotient_exponent,
    subgroup_closure,
    sylow_members,
)

__all__ = [name for name in dir() if not name.startswith("_")]
