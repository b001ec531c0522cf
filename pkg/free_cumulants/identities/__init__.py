from .functional import (YRing, tree_sum, tree_term, to_x_variables, functional_moments, h_weight, pole_weight,
                         tilde_weight, simplification_weight, c2c2_families, c2c2_family, split_hat, FUNCTIONAL_ROUTES,
                         MAX_FUNCTIONAL_P)
from .registry import (Comparison, Identity, IdentityReport, REGISTRY, MODES, DEFAULT_SEED, identity_names,
                       get_identity, first_mismatch, dump_side, verify, verify_all, exit_status, C2C2_ORIGIN, C2C2_TAGS)

__all__ = [
    'YRing',
    'tree_sum',
    'tree_term',
    'to_x_variables',
    'functional_moments',
    'h_weight',
    'pole_weight',
    'tilde_weight',
    'simplification_weight',
    'c2c2_families',
    'c2c2_family',
    'split_hat',
    'FUNCTIONAL_ROUTES',
    'MAX_FUNCTIONAL_P',
    'Comparison',
    'Identity',
    'IdentityReport',
    'REGISTRY',
    'MODES',
    'DEFAULT_SEED',
    'identity_names',
    'get_identity',
    'first_mismatch',
    'dump_side',
    'verify',
    'verify_all',
    'exit_status',
    'C2C2_ORIGIN',
    'C2C2_TAGS',
]
