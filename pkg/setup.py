#! /usr/bin/env python
"""Higher-order free cumulants, moments and the combinatorics behind them."""

import codecs
import os

from setuptools import find_packages, setup

# get __version__ from _version.py
ver_file = os.path.join('free_cumulants', '_version.py')
with open(ver_file) as f:
    exec(f.read())

DISTNAME = 'free_cumulants'
DESCRIPTION = 'Free cumulants of all orders: maps, monotone Hurwitz numbers and functional relations.'
with codecs.open('README.rst') as f:
    LONG_DESCRIPTION = f.read()
MAINTAINER = 'free_cumulants developers'
LICENSE = 'Apache 2.0'
VERSION = __version__
INSTALL_REQUIRES = ['numpy', 'pandas', 'sympy']
CLASSIFIERS = ['Intended Audience :: Science/Research',
               'Intended Audience :: Developers',
               'License :: OSI Approved',
               'Programming Language :: Python',
               'Topic :: Scientific/Engineering :: Mathematics',
               'Operating System :: POSIX',
               'Operating System :: Unix',
               'Operating System :: MacOS',
               'Programming Language :: Python :: 3.8',
               'Programming Language :: Python :: 3.9',
               'Programming Language :: Python :: 3.10']
EXTRAS_REQUIRE = {
    'tests': [
        'pytest',
        'pytest-cov',
        'hypothesis'],
    'docs': [
        'sphinx',
        'sphinx_rtd_theme',
        'numpydoc',
    ]
}

setup(name=DISTNAME,
      maintainer=MAINTAINER,
      description=DESCRIPTION,
      license=LICENSE,
      version=VERSION,
      long_description=LONG_DESCRIPTION,
      long_description_content_type='text/x-rst',
      zip_safe=False,  # the package can run out of an .egg file
      classifiers=CLASSIFIERS,
      packages=find_packages(exclude=['tests', 'tests.*']),
      python_requires='>=3.8',
      install_requires=INSTALL_REQUIRES,
      extras_require=EXTRAS_REQUIRE,
      entry_points={'console_scripts': ['free-cumulants=free_cumulants.cli:main']})
