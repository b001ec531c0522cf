"""
Classical moment-cumulant conversion by Möbius inversion on the lattice of
set partitions.
"""
import math
from typing import List, Sequence, TypeVar

from ..combinatorics import enumerate_set_partitions
from ..exceptions import check_size

T = TypeVar('T')

MAX_CLASSICAL_N = 10


def _block_product(values: Sequence[T], blocks) -> T:
    out = None
    for block in blocks:
        factor = values[len(block) - 1]
        out = factor if out is None else out * factor
    return out


def classical_cumulants(moments: Sequence[T], limit: int = MAX_CLASSICAL_N) -> List[T]:
    """
    ``k_n = sum_pi (-1)^(#pi - 1) (#pi - 1)! prod_{G in pi} m_|G|``.
    :param moments: m_1, ..., m_n (numbers, KappaPoly or sympy expressions)
    :param limit: size guard on n
    :return: k_1, ..., k_n
    """
    check_size('n', len(moments), limit)
    out = []
    for n in range(1, len(moments) + 1):
        total = 0
        for pi in enumerate_set_partitions(n):
            k = len(pi)
            total = total + _block_product(moments, pi.blocks) * ((-1) ** (k - 1) * math.factorial(k - 1))
        out.append(total)
    return out


def classical_moments(cumulants: Sequence[T], limit: int = MAX_CLASSICAL_N) -> List[T]:
    """
    ``m_n = sum_pi prod_{G in pi} k_|G|``, the inverse of :func:`classical_cumulants`.
    :param cumulants: k_1, ..., k_n
    :param limit: size guard on n
    :return: m_1, ..., m_n
    """
    check_size('n', len(cumulants), limit)
    out = []
    for n in range(1, len(cumulants) + 1):
        total = 0
        for pi in enumerate_set_partitions(n):
            total = total + _block_product(cumulants, pi.blocks)
        out.append(total)
    return out
