"""Tests for validation functions."""
# License: GNU AGPLv3

from fractions import Fraction
from numbers import Integral

import pytest

from gpolylog.utils import Interval, validate_params, check_integer_grid


def test_validate_params():
    """These tests should fail because either the type of parameters[
    parameter_name] is incorrect, or because parameter not in references[
    parameter_name]['in']."""
    references = {'par1': {'type': int, 'in': [0, 1]}}
    parameters = {'par1': 0.5}

    with pytest.raises(TypeError):
        validate_params(parameters, references)

    parameters = {'par1': 2}
    with pytest.raises(ValueError):
        validate_params(parameters, references)

    parameters = {'par0': 1}
    with pytest.raises(KeyError):
        validate_params(parameters, references)


def test_validate_params_list():
    references = {
        'digits': {'type': list,
                   'of': {'type': int,
                          'in': Interval(30, float('inf'), closed='left')}}
        }
    validate_params({'digits': [30, 60]}, references)

    with pytest.raises(ValueError, match=r"digits\[1\]"):
        validate_params({'digits': [30, 20]}, references)


def test_validate_params_tuple_of_types():
    references = {
        'K': {'type': (type(None), list, int),
              'in': Interval(0, float('inf'), closed='left'),
              'of': {'type': Integral,
                     'in': Interval(0, float('inf'), closed='left')}}
        }
    validate_params({'K': None}, references)
    validate_params({'K': 3}, references)
    validate_params({'K': [0, 1]}, references)

    with pytest.raises(ValueError):
        validate_params({'K': [0, -1]}, references)


def test_validate_params_nested_dict():
    references = {'window': {'type': dict,
                             'of': {'k_lo': {'type': int},
                                    'k_hi': {'type': int}}}}
    validate_params({'window': {'k_lo': 1, 'k_hi': 30}}, references)

    with pytest.raises(KeyError, match="in `window`"):
        validate_params({'window': {'k_mid': 1}}, references)


def test_validate_params_other():
    def even(value):
        if value % 2:
            raise ValueError("Must be even.")

    references = {'u': {'type': int, 'other': even}}
    validate_params({'u': 402}, references)
    with pytest.raises(ValueError, match="even"):
        validate_params({'u': 401}, references)


def test_validate_params_exclude():
    references = {'digits': {'type': int}}
    validate_params({'digits': 50, 'n_jobs': -1}, references,
                    exclude=['n_jobs'])


def test_interval_membership_exact_types():
    interval = Interval(Fraction(1, 2), 1, closed='right')
    assert Fraction(1, 2) not in interval
    assert Fraction(3, 4) in interval
    assert 1 in interval
    assert 'a' not in interval
    assert str(interval) == '(1/2, 1]'


def test_interval_rejects_bad_construction():
    with pytest.raises(ValueError):
        Interval(1, 0, closed='both')
    with pytest.raises(ValueError):
        Interval(0, 1, closed='nowhere')
    with pytest.raises(TypeError):
        Interval(0, 1, closed='both') in Interval(0, 2, closed='both')


@pytest.mark.parametrize("values, parity, expected",
                         [([402, 404, 600], 'even', [402, 404, 600]),
                          ((401, 403), 'odd', [401, 403]),
                          (range(3), None, [0, 1, 2])])
def test_check_integer_grid(values, parity, expected):
    assert check_integer_grid(values, parity=parity) == expected


@pytest.mark.parametrize("values, parity, error",
                         [([], None, ValueError),
                          ([2, 2], None, ValueError),
                          ([2, 5], 'even', ValueError),
                          ([2.0, 4.0], None, TypeError)])
def test_check_integer_grid_errors(values, parity, error):
    with pytest.raises(error):
        check_integer_grid(values, parity=parity)
