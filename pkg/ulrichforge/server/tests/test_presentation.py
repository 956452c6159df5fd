"""
Tests for configuration checks and the cokernel presentation of H_r.
"""
import pytest

from schemas.lattice import DivisorClass
from schemas.presentation import ScrollConfig
from services import lattice
from services.presentation import (
    K_RANGE, FormMatrix, build_presentation, c1_target, k_range, sample_phi, validate_config,
)
from utils.errors import ConfigError, UnsupportedError
from utils.seeding import make_rng


def grid(r_values=range(2, 9)):
    for e in range(3):
        for b in range(3 * e + 2, 3 * e + 9):
            lo, _ = k_range(e, b)
            for r in r_values:
                yield ScrollConfig(e=e, b=b, k=lo, r=r)


def test_valid_config_classes():
    v = validate_config(1, 5, 5, 2)
    assert v.a_class.pair() == (2, 3)
    assert v.b_class.pair() == (1, 2)
    assert v.a_class + v.b_class == lattice.polarization(1, 5)
    assert v.k_range == (5, 5)


def test_boundary_k_is_rejected():
    with pytest.raises(ConfigError) as exc:
        validate_config(1, 5, 4, 2)
    assert exc.value.inequality == K_RANGE
    assert K_RANGE in str(exc.value)
    with pytest.raises(ConfigError):
        validate_config(1, 5, 9, 2)


def test_rank_one_line_config():
    assert validate_config(0, 2, 3, 1).config.k == 3


def test_empty_range_message():
    with pytest.raises(ConfigError, match="3e\\+2"):
        validate_config(2, 7, 6, 2)


def test_k_range_nonempty_iff_b_bound():
    for e in range(5):
        for b in range(31):
            lo, hi = k_range(e, b)
            assert (lo <= hi) == (b >= 3 * e + 2)


@pytest.mark.parametrize("r,e,b,expected", [(2, 1, 5, (7, 12)), (3, 0, 4, (12, 13)), (5, 1, 5, (19, 29))])
def test_c1_target(r, e, b, expected):
    k = k_range(e, b)[0]
    assert c1_target(ScrollConfig(e=e, b=b, k=k, r=r)).pair() == expected


def test_c1_target_needs_rank_two():
    with pytest.raises(UnsupportedError):
        c1_target(ScrollConfig(e=0, b=2, k=3, r=1))


@pytest.mark.parametrize("cfg,expected", [
    ((1, 5, 5, 2), (4, 3, 3)),
    ((0, 4, 5, 3), (7, 4, 6)),
    ((0, 2, 3, 2), (3, 2, 3)),
])
def test_presentation_coefficients(cfg, expected):
    e, b, k, r = cfg
    p = build_presentation(ScrollConfig(e=e, b=b, k=k, r=r))
    assert (p.gamma, p.delta, p.tau) == expected
    assert p.delta + p.tau - p.gamma == r


def test_presentation_over_grid():
    for config in grid():
        p = build_presentation(config)
        assert min(p.gamma, p.delta, p.tau) > 0
        assert p.delta + p.tau - p.gamma == config.r
        assert p.c1 == c1_target(config)


def test_whitney_c2_matches_ulrich_riemann_roch():
    for config in grid():
        p = build_presentation(config)
        h = lattice.polarization(config.e, config.b)
        k = lattice.canonical_class(config.e)
        c1 = p.c1
        rr = (lattice.intersect(c1, c1) - lattice.intersect(c1, k)) // 2 + config.r \
            - config.r * lattice.intersect(h, h)
        assert p.c2 == rr


def test_known_c2():
    assert build_presentation(ScrollConfig(e=0, b=4, k=5, r=3)).c2 == 112


def test_rank_one_has_no_presentation():
    with pytest.raises(UnsupportedError):
        build_presentation(ScrollConfig(e=0, b=2, k=3, r=1))


def test_sample_phi_shape_and_degrees(fp):
    p = build_presentation(ScrollConfig(e=1, b=5, k=5, r=2))
    phi = sample_phi(p, fp, make_rng(42), seed=42)
    assert phi.shape == (6, 4)
    assert phi.entry_degree(0) == DivisorClass(a=0, b=1, e=1)
    assert phi.entry_degree(5) == DivisorClass(a=1, b=1, e=1)
    assert all(len(f.coefficients()) == 2 for f in phi.entries[0])


def test_sample_phi_is_deterministic(fp):
    p = build_presentation(ScrollConfig(e=1, b=5, k=5, r=2))
    one = sample_phi(p, fp, make_rng(42))
    two = sample_phi(p, fp, make_rng(42))
    assert all(f == g for r1, r2 in zip(one.entries, two.entries) for f, g in zip(r1, r2))


def test_form_matrix_checks_degrees(fp):
    p = build_presentation(ScrollConfig(e=1, b=5, k=5, r=2))
    zero = FormMatrix.zero(p, fp)
    entries = [list(row) for row in zero.entries]
    entries[0], entries[5] = entries[5], entries[0]
    with pytest.raises(ValueError):
        FormMatrix(p, entries, fp)
