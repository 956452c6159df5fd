"""
Tests for line-bundle cohomology on F_e.
"""
import pytest

from schemas.lattice import CohTable, DivisorClass
from services.cohomology import h0, h1_on_base, is_ulrich_line_bundle, line_bundle_cohomology
from services.lattice import canonical_class, euler_char

BOX = range(-12, 13)


def D(a, b, e):
    return DivisorClass(a=a, b=b, e=e)


@pytest.mark.parametrize("d,expected", [
    (D(5, 3, 0), (24, 0, 0)),
    (D(-1, 7, 0), (0, 0, 0)),
    (D(-1, 7, 2), (0, 0, 0)),
    (D(1, 0, 2), (1, 1, 0)),
    (D(-3, -4, 1), (0, 0, 3)),
])
def test_examples(d, expected):
    assert line_bundle_cohomology(d).as_tuple() == expected


def test_table_rejects_bad_euler():
    with pytest.raises(ValueError):
        CohTable(h0=1, h1=0, h2=0, chi=2)


@pytest.mark.parametrize("e", [0, 1, 2, 3])
def test_serre_duality_and_euler(e):
    k = canonical_class(e)
    for a in BOX:
        for b in BOX:
            d = D(a, b, e)
            t = line_bundle_cohomology(d)
            assert line_bundle_cohomology(k - d).as_tuple() == t.reversed()
            assert t.h0 - t.h1 + t.h2 == euler_char(d)


@pytest.mark.parametrize("e", [0, 1, 2, 3])
def test_h1_against_base_oracle(e):
    for a in BOX:
        for b in BOX:
            d = D(a, b, e)
            assert line_bundle_cohomology(d).h1 == h1_on_base(d)


@pytest.mark.parametrize("e", [0, 1, 3])
def test_h0_monotone_in_b(e):
    for a in range(0, 8):
        values = [h0(D(a, b, e)) for b in BOX]
        assert values == sorted(values)


def test_ulrich_line_bundles_on_f0():
    h = D(3, 4, 0)
    assert is_ulrich_line_bundle(D(5, 3, 0), h)
    assert is_ulrich_line_bundle(D(2, 7, 0), h)
    assert not is_ulrich_line_bundle(D(0, 0, 0), h)


def test_ulrich_h0_is_degree():
    # an Ulrich line bundle has h^0 = H^2
    assert h0(D(5, 3, 0)) == 24
    assert h0(D(2, 7, 0)) == 24
