"""Testing for the assembly and serialisation of polynomial tables."""
# License: GNU AGPLv3

from fractions import Fraction as F

import pytest

from gpolylog.exceptions import SmoothnessError, MissingConstantsError
from gpolylog.polyengine import RationalPolynomial, PolyTable, assemble, \
    denominator_ratio, check_smoothness, is_smooth, read_constants, \
    write_constants, read_table, write_table, delta_table, BUILTIN_CONSTANTS

PRINTED = [
    RationalPolynomial([F(-2, 3), 1]),
    RationalPolynomial([F(47, 2160), F(7, 24), -1, F(2, 3)]),
    RationalPolynomial([F(-433, 24192), F(-73, 1920), F(1, 3), F(-1, 36),
                        F(-2, 3), F(2, 5)]),
    RationalPolynomial([F(28583, 2488320), F(-106619, 2903040),
                        F(-223, 1152), F(433, 1728), F(31, 72), F(-5, 12),
                        F(-2, 9), F(4, 21)])
    ]


def test_assemble_printed_polynomials():
    table = assemble(3, BUILTIN_CONSTANTS)
    assert table.K == 3
    assert table.polys == PRINTED


def test_assemble_single():
    table = assemble(0, [F(-2, 3)])
    assert table.polys == PRINTED[:1]


def test_printed_polynomials_satisfy_difference_equation():
    for P, delta in zip(PRINTED, delta_table(3)):
        assert P.shift(1) - P == delta


def test_table_invariants():
    table = assemble(8)
    for k, (delta, F_k) in enumerate(zip(table.deltas, table.antidiffs)):
        assert F_k.degree == 2 * k + 1
        assert F_k(0) == 0
        assert F_k.shift(1) - F_k == delta
        assert F_k.leading_coefficient > 0


def test_assemble_rejects_rough_constant():
    with pytest.raises(SmoothnessError, match="7") as excinfo:
        assemble(1, [F(-2, 3), F(1, 7)])
    assert excinfo.value.k == 1
    assert excinfo.value.prime == 7


def test_smoothness_error_names_largest_prime():
    with pytest.raises(SmoothnessError) as excinfo:
        check_smoothness(RationalPolynomial([F(1, 7 * 11 * 13)]), 1)
    assert excinfo.value.prime == 13


def test_assemble_wrong_length():
    with pytest.raises(ValueError, match="needed"):
        assemble(2, BUILTIN_CONSTANTS)


def test_missing_constants():
    with pytest.raises(MissingConstantsError):
        assemble(2).polys


@pytest.mark.parametrize("n, bound, expected",
                         [(2903040, 9, True), (24192, 7, True),
                          (2 * 11, 7, False), (1, 3, True),
                          (113 * 1009, 111, False)])
def test_is_smooth(n, bound, expected):
    assert is_smooth(n, bound) is expected


def test_check_smoothness_accepts_printed():
    for k, P in enumerate(PRINTED):
        check_smoothness(P, k)


def test_denominator_ratio():
    assert denominator_ratio(BUILTIN_CONSTANTS) == \
        [F(2160, 3), F(24192, 2160), F(2488320, 24192)]


def test_table_text_round_trip(tmp_path):
    table = assemble(3, BUILTIN_CONSTANTS)
    path = tmp_path / "polys.txt"
    write_table(table, path)
    restored = read_table(path)
    assert restored == table
    assert PolyTable.from_text(table.to_text()).polys == PRINTED


def test_constants_file(tmp_path):
    path = tmp_path / "constants.txt"
    write_constants(BUILTIN_CONSTANTS, path)
    assert path.read_text().splitlines()[1] == "1 47/2160"
    assert read_constants(path) == list(BUILTIN_CONSTANTS)
    assert read_constants(path, K=1) == list(BUILTIN_CONSTANTS[:2])
    with pytest.raises(MissingConstantsError):
        read_constants(path, K=4)
