from .kappa import KappaPoly, kappa_value, symbol, ZERO, ONE
from .multiseries import MultiSeries, default_variables
from .poles import DifferenceFraction
from .operators import (D_operator, TensorState, univariate_coefficients, x_of_y, dx_dy, dy_dx,
                        first_order_moments, y_of_x, specialize_kappa)

__all__ = [
    'KappaPoly',
    'kappa_value',
    'symbol',
    'ZERO',
    'ONE',
    'MultiSeries',
    'default_variables',
    'DifferenceFraction',
    'D_operator',
    'TensorState',
    'univariate_coefficients',
    'x_of_y',
    'dx_dy',
    'dy_dx',
    'first_order_moments',
    'y_of_x',
    'specialize_kappa',
]
