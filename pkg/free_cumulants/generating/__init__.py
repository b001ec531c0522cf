from .coefficients import tilde_kappa, ns_kappa, bar_kappa, h_coefficient, correction_shapes
from .builders import (build_C, build_hatC, build_hatC_pi, build_tildeC2, build_tildeC3, build_tildeC,
                       build_barC, build_H, h_summands, HSummand, shape_kind, pair_block_shape, c2_ring,
                       double_pole_kernel, embed, theta_all, exponent_vectors, compare_routes,
                       TILDE_C2_ROUTES, TILDE_C3_ROUTES, BAR_ROUTES)

__all__ = [
    'tilde_kappa',
    'ns_kappa',
    'bar_kappa',
    'h_coefficient',
    'correction_shapes',
    'build_C',
    'build_hatC',
    'build_hatC_pi',
    'build_tildeC2',
    'build_tildeC3',
    'build_tildeC',
    'build_barC',
    'build_H',
    'h_summands',
    'HSummand',
    'shape_kind',
    'pair_block_shape',
    'c2_ring',
    'double_pole_kernel',
    'embed',
    'theta_all',
    'exponent_vectors',
    'compare_routes',
    'TILDE_C2_ROUTES',
    'TILDE_C3_ROUTES',
    'BAR_ROUTES',
]
