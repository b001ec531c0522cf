from .tables import CumulantTable, MomentTable, ProfileTable, canonical_profile, profiles_up_to
from .classical import classical_cumulants, classical_moments
from .moments import (free_moments_p1, free_moments_p1_closed, higher_moments_bruteforce, higher_moments_treeformula,
                      moments_via_factorized, moment_of_permutation)
from .analytic import (higher_moments_analytic, method_p_limit, moment_of_profile, moment_table, moment_series,
                       MOMENT_METHODS)
from .inversion import (higher_cumulants_from_moments, higher_cumulants_cmss, cumulant_of_profile, cumulant_table,
                        check_split_lemma, check_multiplicativity, cumulant_defect, roundtrip_defect, INVERSION_METHODS)

__all__ = [
    'CumulantTable',
    'MomentTable',
    'ProfileTable',
    'canonical_profile',
    'profiles_up_to',
    'classical_cumulants',
    'classical_moments',
    'free_moments_p1',
    'free_moments_p1_closed',
    'higher_moments_bruteforce',
    'higher_moments_treeformula',
    'higher_moments_analytic',
    'moments_via_factorized',
    'moment_of_permutation',
    'moment_of_profile',
    'moment_table',
    'moment_series',
    'MOMENT_METHODS',
    'method_p_limit',
    'higher_cumulants_from_moments',
    'higher_cumulants_cmss',
    'cumulant_of_profile',
    'cumulant_table',
    'check_split_lemma',
    'check_multiplicativity',
    'cumulant_defect',
    'roundtrip_defect',
    'INVERSION_METHODS',
]
