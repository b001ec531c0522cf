import argparse
import unittest

from free_cumulants.config import Config, MAX_TABLE_N
from free_cumulants.exceptions import ConfigError, SizeGuardError


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        config = Config('ns')
        self.assertEqual(config.mode, 'symbolic')
        self.assertEqual(config.output_format, 'plain')
        self.assertFalse(config.specialized)
        self.assertTrue(Config('verify', depth=10, mode='specialized', seed=1).specialized)

    def test_mode_and_seed(self):
        with self.assertRaises(ConfigError):
            Config('verify', mode='specialized')
        with self.assertRaises(ConfigError):
            Config('verify', seed=3)
        with self.assertRaises(ConfigError):
            Config('verify', mode='numeric')
        with self.assertRaises(ConfigError):
            Config('verify', output_format='xml')

    def test_depth(self):
        with self.assertRaises(ConfigError):
            Config('verify', depth=0)
        with self.assertRaises(SizeGuardError):
            Config('verify', depth=9)
        Config('verify', depth=9, mode='specialized', seed=2)
        with self.assertRaises(SizeGuardError):
            Config('verify', depth=11, mode='specialized', seed=2)

    def test_max_n(self):
        Config('tables', max_n=MAX_TABLE_N)
        with self.assertRaises(SizeGuardError):
            Config('tables', max_n=MAX_TABLE_N + 1)
        with self.assertRaises(ConfigError):
            Config('tables', max_n=0)

    def test_from_namespace(self):
        config = Config.from_namespace(argparse.Namespace(command='verify', depth=4, seed=7, json=True, verbose=2))
        self.assertEqual(config.mode, 'specialized')
        self.assertEqual(config.output_format, 'json')
        self.assertEqual(config.verbosity, 2)

        config = Config.from_namespace(argparse.Namespace(command='trees', csv=True))
        self.assertEqual(config.output_format, 'csv')
        self.assertIsNone(config.depth)
        with self.assertRaises(ConfigError):
            Config.from_namespace(argparse.Namespace(command='trees', json=True, csv=True))


if __name__ == '__main__':
    unittest.main()
