"""Finite permutation groups, subgroup embedding properties and Omega-norms."""

__version__ = "0.1.0"

from .perm import (FiniteGroup, GroupError, OrderCapExceeded, Permutation, compose, conjugate,
                   element_order, group_from_generators, inverse)
from .subgroups import (CentralSeries, LatticeCapExceeded, Subgroup, all_subgroups, center,
                        centralizer, conjugate_subgroup, derived_series, hypercenter, is_normal,
                        is_solvable, is_subnormal, is_T_group, lattice_cap_scope,
                        maximal_abelian_subgroups,
                        normal_closure, normalizer, subgroup_closure, sylow_subgroups,
                        upper_central_series)
from .embedding import (PropertyClassification, classify, is_h_subgroup, is_ne_subgroup,
                        is_pronormal, is_self_centralizing, is_self_normalizing,
                        is_weakly_normal, satisfies_subnormalizer_condition)
from .norms import (OmegaClass, baer_norm, omega_norm, omega_p_norm, sc_intersection, sylow_norm,
                    sylow_p_norm)
from .catalog import builtin, direct_product, load_group_file
