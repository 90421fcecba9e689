#! /usr/bin/env python
"""High-precision analytic continuation of the half-integer polylogarithm,
its resurgent residual and the exact polynomial sequence behind it."""

import os
import codecs

from setuptools import setup, find_packages


version_file = os.path.join("gpolylog", "_version.py")
with open(version_file) as f:
    exec(f.read())

with open("requirements.txt") as f:
    requirements = f.read().splitlines()

DISTNAME = "gpolylog"
DESCRIPTION = "Arbitrary-precision evaluation of G(z) = sum sqrt(n) z^n, " \
              "its resurgent residual and asymptotic constants."
with codecs.open("README.rst", encoding="utf-8-sig") as f:
    LONG_DESCRIPTION = f.read()
LONG_DESCRIPTION_TYPE = "text/x-rst"
LICENSE = "GNU AGPLv3"
VERSION = __version__  # noqa
CLASSIFIERS = ["Intended Audience :: Science/Research",
               "Intended Audience :: Developers",
               "License :: OSI Approved",
               "Programming Language :: Python",
               "Topic :: Scientific/Engineering :: Mathematics",
               "Operating System :: POSIX",
               "Operating System :: Unix",
               "Operating System :: MacOS",
               "Programming Language :: Python :: 3.9",
               "Programming Language :: Python :: 3.10",
               "Programming Language :: Python :: 3.11",
               "Programming Language :: Python :: 3.12"]
KEYWORDS = "polylogarithm, Hurwitz zeta, Euler-Maclaurin, resurgence, " \
           "optimal truncation, rational reconstruction, multiprecision"
INSTALL_REQUIRES = requirements
EXTRAS_REQUIRE = {"tests": ["pytest",
                            "pytest-cov",
                            "flake8",
                            "hypothesis",
                            "scipy"],
                  "doc": ["sphinx",
                          "sphinx_rtd_theme",
                          "numpydoc"]}


def combine_requirements(base_keys):
    return list(set(k for v in base_keys for k in EXTRAS_REQUIRE[v]))


EXTRAS_REQUIRE["dev"] = combine_requirements(list(EXTRAS_REQUIRE))


setup(name=DISTNAME,
      description=DESCRIPTION,
      license=LICENSE,
      version=VERSION,
      long_description=LONG_DESCRIPTION,
      long_description_content_type=LONG_DESCRIPTION_TYPE,
      zip_safe=False,
      classifiers=CLASSIFIERS,
      packages=find_packages(),
      keywords=KEYWORDS,
      python_requires=">=3.9",
      install_requires=INSTALL_REQUIRES,
      extras_require=EXTRAS_REQUIRE,
      entry_points={"console_scripts": ["gpolylog = gpolylog.cli:main"]})
