from . import combinatorics
from . import maps
from . import hurwitz
from . import series
from . import generating
from . import cumulants
from . import identities

from ._version import __version__
from .exceptions import FreeCumulantsError

__all__ = [
    'combinatorics',
    'maps',
    'hurwitz',
    'series',
    'generating',
    'cumulants',
    'identities',
    'FreeCumulantsError',
    '__version__',
]
