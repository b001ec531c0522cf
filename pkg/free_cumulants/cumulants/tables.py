"""
Tables of cumulants and moments indexed by profiles.

A profile is a weakly decreasing tuple of positive integers; both tables
are symmetric in the profile entries, so lookups canonicalise first.
JSON form::

    {"kind": "cumulants", "entries": [{"profile": [2, 1], "value": "3*k[2]*k[1] + k[2,1]"}]}

CSV form has one row per monomial, columns ``profile``, ``monomial``, ``value``.
"""
import json
import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from ..combinatorics import Permutation, SetPartition, integer_partitions
from ..exceptions import MissingEntryError
from ..series import KappaPoly
from ..series.kappa import format_monomial

logger = logging.getLogger(__name__)

Profile = Tuple[int, ...]
Value = Union[KappaPoly, Fraction, int]

CSV_COLUMNS = ['profile', 'monomial', 'value']


def canonical_profile(parts: Iterable[int]) -> Profile:
    """
    :param parts: positive integers in any order
    :return: the same multiset sorted decreasingly
    """
    profile = tuple(sorted((int(a) for a in parts), reverse=True))
    if not profile or profile[-1] < 1:
        raise ValueError(f"profiles are nonempty lists of positive integers, got {profile}")
    return profile


def profiles_up_to(max_n: int, max_p: Optional[int] = None) -> Iterator[Profile]:
    """All profiles with |lambda| <= max_n (and at most ``max_p`` parts), by size then parts."""
    for n in range(1, max_n + 1):
        for lam in integer_partitions(n):
            if max_p is None or len(lam) <= max_p:
                yield lam.parts


def _format_profile(profile: Profile) -> str:
    return ','.join(str(a) for a in profile)


def _parse_profile(text) -> Profile:
    if isinstance(text, (list, tuple)):
        return canonical_profile(text)
    return canonical_profile(int(t) for t in str(text).replace('+', ',').split(',') if t.strip())


class ProfileTable:
    """
    Mapping profile -> :class:`KappaPoly`; numbers are stored as constant polynomials.
    """
    kind = 'table'

    def __init__(self, entries: Optional[Mapping[Sequence[int], Value]] = None):
        self.entries: Dict[Profile, KappaPoly] = {}
        for profile, value in (entries or {}).items():
            self[profile] = value

    def __getitem__(self, profile: Sequence[int]) -> KappaPoly:
        return self.entries[canonical_profile(profile)]

    def __setitem__(self, profile: Sequence[int], value: Value):
        self.entries[canonical_profile(profile)] = KappaPoly.lift(value)

    def __contains__(self, profile: Sequence[int]) -> bool:
        return canonical_profile(profile) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Profile]:
        return iter(self.profiles())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProfileTable):
            return NotImplemented
        return self.kind == other.kind and self.entries == other.entries

    def profiles(self) -> Sequence[Profile]:
        return sorted(self.entries, key=lambda lam: (sum(lam), len(lam), tuple(-a for a in lam)))

    def get(self, profile: Sequence[int], default: Optional[KappaPoly] = None) -> Optional[KappaPoly]:
        return self.entries.get(canonical_profile(profile), default)

    def specialize(self, seed: int, orders: Optional[Iterable[int]] = None) -> 'ProfileTable':
        """Replace the cumulant symbols of every entry by seeded rationals."""
        orders = None if orders is None else tuple(orders)
        return type(self)({lam: v.specialize(seed, orders) for lam, v in self.entries.items()})

    # serialisation

    def to_json(self) -> Dict[str, object]:
        return {
            'kind': self.kind,
            'entries': [{'profile': list(lam), 'value': str(self.entries[lam])} for lam in self.profiles()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> 'ProfileTable':
        """
        :param data: the dictionary written by :meth:`to_json`; ``kind`` is optional
        :return: table of this class
        """
        kind = data.get('kind', cls.kind)
        if kind != cls.kind:
            raise ValueError(f"expected a table of {cls.kind}, got {kind}")
        table = cls()
        for entry in data['entries']:
            table[_parse_profile(entry['profile'])] = KappaPoly.parse(str(entry['value']))
        return table

    @classmethod
    def loads(cls, text: str) -> 'ProfileTable':
        return cls.from_json(json.loads(text))

    def to_frame(self) -> pd.DataFrame:
        """One row per (profile, monomial); the constant monomial is the empty string."""
        rows = []
        for lam in self.profiles():
            value = self.entries[lam]
            for monomial, c in sorted(value.terms.items()):
                rows.append({'profile': _format_profile(lam), 'monomial': format_monomial(monomial), 'value': str(c)})
            if not value:
                rows.append({'profile': _format_profile(lam), 'monomial': '', 'value': '0'})
        return pd.DataFrame(rows, columns=CSV_COLUMNS)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> 'ProfileTable':
        table = cls()
        for row in frame.fillna('').itertuples(index=False):
            lam = _parse_profile(row.profile)
            monomial = str(row.monomial).strip()
            term = KappaPoly.parse(monomial) if monomial else KappaPoly.constant(1)
            table.entries[lam] = table.entries.get(lam, KappaPoly()) + term * Fraction(str(row.value))
        return table

    def to_csv(self, path_or_buffer=None) -> Optional[str]:
        return self.to_frame().to_csv(path_or_buffer, index=False)

    @classmethod
    def read_csv(cls, path_or_buffer) -> 'ProfileTable':
        return cls.from_frame(pd.read_csv(path_or_buffer, dtype=str, keep_default_na=False))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} profiles)"


class CumulantTable(ProfileTable):
    """Cumulants k[lambda_1, ..., lambda_p], symbolic or specialised."""
    kind = 'cumulants'

    @classmethod
    def symbolic(cls, max_n: int, max_p: Optional[int] = None) -> 'CumulantTable':
        """Every entry is its own symbol ``k[lambda]``."""
        return cls({lam: KappaPoly.kappa(*lam) for lam in profiles_up_to(max_n, max_p)})

    def value(self, cycle_sizes: Sequence[int]) -> KappaPoly:
        """The cumulant indexed by ``cycle_sizes``; missing profiles stay symbolic."""
        return self.get(cycle_sizes, KappaPoly.kappa(*cycle_sizes))

    def evaluate(self, poly: KappaPoly) -> KappaPoly:
        """Replace every cumulant symbol of ``poly`` that has an entry in the table."""
        return poly.substitute(self.entries.get)


class MomentTable(ProfileTable):
    """Moments phi_p(b^lambda_1, ..., b^lambda_p) and their multiplicative extension."""
    kind = 'moments'

    def phi(self, pi: SetPartition, sigma: Permutation) -> KappaPoly:
        """
        ``phi(pi, sigma) = prod_{G in pi} phi(1, sigma|_G)``, each factor read
        from the table at the cycle type of ``sigma`` restricted to G.
        :param pi: partition coarser than the cycles of ``sigma``
        :param sigma: permutation
        :return: KappaPoly
        """
        value = KappaPoly.constant(1)
        for block in pi.blocks:
            lam = sigma.restrict(block).cycle_type.parts
            if lam not in self.entries:
                raise MissingEntryError(f"no moment for profile {_format_profile(lam)}")
            value = value * self.entries[lam]
        return value

