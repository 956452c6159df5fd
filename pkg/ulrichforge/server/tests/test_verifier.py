"""
Tests for local freeness, twisted cohomology, ext groups and full verification.
"""
import pytest

from schemas.presentation import ScrollConfig
from services.cox import Form, monomial_basis, sample_torus_point
from services.moduli import paper_dimension
from services.presentation import FormMatrix, build_presentation, k_range
from services.verifier import (
    TORUS_STREAM, _end_a_columns, certify_locally_free, coefficient_matrix, ext_dims, h0_map, h2_map,
    h2_map_is_square, line_search_report, search_line_bundles, sign, twisted_cohomology_of_coker,
    verify_config, verify_ulrich,
)
from services.xla import ExactMatrix, rank
from utils.canonical import verify_fingerprint
from utils.errors import UnsupportedError
from utils.seeding import make_rng, stream_rng


def config(e, b, k, r):
    return ScrollConfig(e=e, b=b, k=k, r=r)


def test_general_phi_is_locally_free(make_phi):
    phi = make_phi(1, 5, 5, 2)
    verdict = certify_locally_free(phi, trials=8, rng=make_rng(1))
    assert verdict.status == "certified"
    assert verdict.expected_rank == 4


def test_zero_phi_is_not_locally_free(fp):
    phi = FormMatrix.zero(build_presentation(config(1, 5, 5, 2)), fp)
    verdict = certify_locally_free(phi, trials=3, rng=make_rng(1))
    assert verdict.status == "failed"
    assert verdict.rank == 0
    assert verdict.point is not None


def test_repeated_column_is_not_locally_free(make_phi):
    phi = make_phi(1, 5, 5, 2)
    for row in phi.entries:
        row[1] = row[0]
    verdict = certify_locally_free(phi, trials=4, rng=make_rng(3))
    assert verdict.status == "failed"
    assert verdict.rank <= phi.presentation.gamma - 1


def test_j1_table_is_zero(make_phi):
    assert twisted_cohomology_of_coker(make_phi(0, 4, 5, 2), 1).is_zero()


def test_j2_general_map_is_full_rank(make_phi):
    phi = make_phi(0, 4, 5, 2)
    m = h2_map(phi)
    assert m.shape == (60, 60)
    assert twisted_cohomology_of_coker(phi, 2).is_zero()


def test_j2_zero_map(fp):
    phi = FormMatrix.zero(build_presentation(config(0, 4, 5, 2)), fp)
    assert twisted_cohomology_of_coker(phi, 2).as_tuple() == (0, 60, 60)


def test_unsupported_twist(make_phi):
    with pytest.raises(UnsupportedError):
        twisted_cohomology_of_coker(make_phi(0, 4, 5, 2), 3)


def test_h2_map_is_square_over_grid():
    for e in range(3):
        for b in range(3 * e + 2, 3 * e + 9):
            for r in range(2, 9):
                assert h2_map_is_square(build_presentation(config(e, b, k_range(e, b)[0], r)))


def test_verify_rank_two_on_f1():
    report = verify_config(config(1, 5, 5, 2), seed=42)
    assert report.ulrich
    assert report.locally_free.status == "certified"
    assert report.c1 == (7, 12)
    assert report.h0 == 42
    assert (report.ext.hom, report.ext.ext1, report.ext.ext2) == (1, 18, 0)
    assert report.c2_consistent and report.c1_degree_match and report.euler_ok
    assert report.passed


def test_verify_rank_three_on_f0():
    report = verify_config(config(0, 4, 5, 3), seed=7)
    assert report.ulrich
    assert report.c1 == (12, 13)
    assert report.h0 == 72
    assert (report.ext.hom, report.ext.ext1, report.ext.ext2) == (1, 40, 0)


def test_ext_euler_identity(make_phi):
    ext = ext_dims(make_phi(1, 5, 5, 2))
    assert (ext.hom_ab, ext.end_a, ext.end_b) == (60, 16, 27)
    assert ext.hom - ext.ext1 + ext.ext2 == ext.end_a + ext.end_b - ext.hom_ab


def test_zero_phi_fails(fp):
    phi = FormMatrix.zero(build_presentation(config(1, 5, 5, 2)), fp)
    report = verify_ulrich(phi, make_rng(1), trials=2, with_ext=False)
    assert not report.ulrich
    assert report.locally_free.status == "failed"
    assert report.euler_ok
    assert not report.passed


def test_rational_field_agrees(qq):
    report = verify_config(config(1, 5, 5, 2), seed=42, field=qq, with_ext=False)
    assert report.field == "q"
    assert report.ulrich and report.h0_match


def test_report_fingerprint_roundtrip():
    report = verify_config(config(0, 2, 3, 2), seed=3, with_ext=False)
    body = report.model_copy(update={"fingerprint": None, "timings_ms": None})
    assert verify_fingerprint(body, report.fingerprint)
    assert sign(report).fingerprint == report.fingerprint
    tampered = body.model_copy(update={"h0": report.h0 + 1})
    assert not verify_fingerprint(tampered, report.fingerprint)


def test_same_seed_same_report():
    a = verify_config(config(0, 2, 3, 2), seed=11, with_ext=False)
    b = verify_config(config(0, 2, 3, 2), seed=11, with_ext=False)
    assert a.fingerprint == b.fingerprint


def test_attempts_are_recorded():
    report = verify_config(config(0, 2, 3, 2), seed=5, with_ext=False)
    assert report.attempts[0].seed == 5
    assert report.attempts[-1].reason is None


@pytest.mark.parametrize("b", range(2, 9))
def test_line_search_on_f0(b):
    found = sorted(d.pair() for d in search_line_bundles(0, b, 20))
    assert found == sorted([(5, b - 1), (2, 2 * b - 1)])


@pytest.mark.parametrize("e,b", [(1, 5), (1, 8), (2, 8), (2, 11)])
def test_no_ulrich_line_bundles_for_positive_e(e, b):
    report = line_search_report(e, b, 20)
    assert report.classes == []
    assert report.match


@pytest.mark.slow
def test_acceptance_grid():
    resamples = runs = 0
    for e in range(3):
        for b in range(3 * e + 2, 3 * e + 9):
            lo, hi = k_range(e, b)
            for k in range(lo, hi + 1):
                for r in range(2, 7):
                    for seed in range(3):
                        report = verify_config(config(e, b, k, r), seed=seed)
                        runs += 1
                        resamples += len(report.attempts) - 1
                        assert report.passed, report.config
                        ext = report.ext
                        assert (ext.hom, ext.ext2) == (1, 0), report.config
                        assert ext.ext1 == paper_dimension(r, e, b), report.config
    assert resamples * 20 <= runs


@pytest.mark.parametrize("e,b,k,r", [(0, 2, 3, 5), (1, 5, 5, 5), (0, 2, 3, 7)])
def test_odd_rank_ext1_is_reconciled_dimension(e, b, k, r):
    report = verify_config(config(e, b, k, r), seed=1)
    assert report.passed
    assert (report.ext.hom, report.ext.ext2) == (1, 0)
    assert report.ext.ext1 == paper_dimension(r, e, b)


def _reduce(phi, field):
    entries = [[Form(f.degree, dict(f.terms), field) for f in row] for row in phi.entries]
    return FormMatrix(phi.presentation, entries, field, seed=phi.seed)


@pytest.mark.parametrize("e,b,k,r", [(1, 5, 5, 2), (0, 4, 5, 3)])
def test_rational_ranks_match_reduction_mod_p(make_phi, qq, fp, e, b, k, r):
    phi_q = make_phi(e, b, k, r, field=qq, seed=5)
    phi_p = _reduce(phi_q, fp)
    for build in (h2_map, h0_map):
        m_q, m_p = build(phi_q), build(phi_p)
        assert m_q.reduce_mod(fp.prime) == m_p
        assert rank(m_q) == rank(m_p)
    ranks_q, ranks_p = {}, {}
    assert ext_dims(phi_q, ranks_q) == ext_dims(phi_p, ranks_p)
    assert ranks_q == ranks_p


def test_end_a_rank_from_coefficient_matrix(make_phi):
    phi = make_phi(1, 5, 5, 2)
    ext = ext_dims(phi)
    gamma = phi.presentation.gamma
    assert ext.rank_end_a == gamma * rank(coefficient_matrix(phi))
    sizes = [len(monomial_basis(phi.entry_degree(i))) for i in range(len(phi.entries))]
    offsets, pos = {}, 0
    for i in range(len(phi.entries)):
        for col in range(gamma):
            offsets[(i, col)] = pos
            pos += sizes[i]
    cols = _end_a_columns(phi, offsets, sizes, pos)
    assert ext.rank_end_a == rank(ExactMatrix.from_rows(list(zip(*cols)), phi.field))


def test_end_a_rank_of_repeated_column(make_phi):
    phi = make_phi(1, 5, 5, 2)
    for row in phi.entries:
        row[1] = row[0]
    gamma = phi.presentation.gamma
    assert ext_dims(phi).rank_end_a == gamma * (gamma - 1)


def test_explicit_zero_is_not_replaced_by_default(make_phi):
    with pytest.raises(ValueError):
        search_line_bundles(0, 4, box=0)
    with pytest.raises(ValueError):
        line_search_report(0, 4, box=0)
    with pytest.raises(ValueError):
        certify_locally_free(make_phi(1, 5, 5, 2), trials=0)
    with pytest.raises(ValueError):
        verify_config(config(0, 2, 3, 2), seed=1, max_resamples=0, with_ext=False)


def test_torus_points_use_their_own_stream(make_phi, fp):
    phi = make_phi(1, 5, 5, 2, seed=42)
    for row in phi.entries:
        row[1] = row[0]
    verdict = certify_locally_free(phi, trials=2)
    assert verdict.status == "failed"
    assert verdict.point == sample_torus_point(fp, stream_rng(42, TORUS_STREAM))
    assert verdict.point != sample_torus_point(fp, make_rng(42))
    assert certify_locally_free(phi, trials=2).point == verdict.point
