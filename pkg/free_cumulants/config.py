"""
Run configuration built from the command line.
"""
import argparse
from dataclasses import dataclass
from typing import Optional

from .exceptions import ConfigError, check_size
from .generating.builders import MAX_SPECIALIZED_DEPTH, MAX_SYMBOLIC_DEPTH

MAX_TABLE_N = 7
FORMATS = ('plain', 'json', 'csv')
MODES = ('symbolic', 'specialized')


@dataclass(frozen=True)
class Config:
    """
    Validated options shared by every subcommand.
    :param command: subcommand name
    :param depth: truncation of generating series
    :param mode: ``'symbolic'`` or ``'specialized'``
    :param seed: specialisation seed, required exactly in specialized mode
    :param output_format: ``'plain'``, ``'json'`` or ``'csv'``
    :param out: output path, stdout when None
    :param max_n: bound on |lambda| for table-like output
    :param verbosity: 0 warnings, 1 info, 2 debug
    """
    command: str
    depth: Optional[int] = None
    mode: str = 'symbolic'
    seed: Optional[int] = None
    output_format: str = 'plain'
    out: Optional[str] = None
    max_n: Optional[int] = None
    verbosity: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if self.mode == 'specialized' and self.seed is None:
            raise ConfigError("--mode specialized needs --seed")
        if self.mode == 'symbolic' and self.seed is not None:
            raise ConfigError("--seed only applies to --mode specialized")
        if self.depth is not None:
            if self.depth < 1:
                raise ConfigError(f"depth must be positive, got {self.depth}")
            check_size('depth', self.depth, MAX_SPECIALIZED_DEPTH if self.specialized else MAX_SYMBOLIC_DEPTH)
        if self.max_n is not None:
            if self.max_n < 1:
                raise ConfigError(f"--max-n must be positive, got {self.max_n}")
            check_size('max_n', self.max_n, MAX_TABLE_N)

    @property
    def specialized(self) -> bool:
        return self.mode == 'specialized'

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> 'Config':
        output_format = 'plain'
        if getattr(args, 'json', False):
            output_format = 'json'
        if getattr(args, 'csv', False):
            if output_format == 'json':
                raise ConfigError("--json and --csv are exclusive")
            output_format = 'csv'
        seed = getattr(args, 'seed', None)
        mode = getattr(args, 'mode', None) or ('specialized' if seed is not None else 'symbolic')
        return cls(command=args.command,
                   depth=getattr(args, 'depth', None),
                   mode=mode,
                   seed=seed,
                   output_format=output_format,
                   out=getattr(args, 'out', None),
                   max_n=getattr(args, 'max_n', None),
                   verbosity=getattr(args, 'verbose', 0) or 0)
