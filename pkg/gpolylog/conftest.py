"""Fixtures shared by the test suites."""
# License: GNU AGPLv3

import pytest

from gpolylog.fitlab import FitConfig, fit_constants


@pytest.fixture(scope='session')
def default_fit():
    """Constant terms P_0(0), ..., P_12(0) recovered on the default grid."""
    return fit_constants(FitConfig(), n_jobs=-1)
