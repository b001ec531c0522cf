from .gamma import (gamma_closed, monotone_hurwitz, constellation_count, gamma_l, gamma_l_direct,
                    gamma_one_block, mobius_mu, minimal_length, minimal_l, partitions_above)
from .weingarten import (LaurentSeriesInInverseN, weingarten_series, weingarten_oracle,
                         weingarten_oracle_series, explicit_weingarten_check, weingarten_table)
from .kernel import big_gamma, big_gamma_tree

__all__ = [
    'gamma_closed',
    'monotone_hurwitz',
    'constellation_count',
    'gamma_l',
    'gamma_l_direct',
    'gamma_one_block',
    'mobius_mu',
    'minimal_length',
    'minimal_l',
    'partitions_above',
    'LaurentSeriesInInverseN',
    'weingarten_series',
    'weingarten_oracle',
    'weingarten_oracle_series',
    'explicit_weingarten_check',
    'weingarten_table',
    'big_gamma',
    'big_gamma_tree',
]
