import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from symca.classic_ca import (
    chi2_col_distance,
    chi2_row_distance,
    column_profiles,
    correspondence_analysis,
    row_profiles,
    supplementary_projection,
    total_inertia,
)
from symca.errors import AnalysisError, SymCAError
from symca.interval_table import CenterTable, centers

ALG = 1e-10
EXACT = 1e-12

tables = arrays(
    float,
    st.tuples(st.integers(2, 5), st.integers(2, 5)),
    elements=st.integers(1, 50).map(float),
)


@pytest.fixture
def eyes_hair_ca(eyes_hair):
    return correspondence_analysis(centers(eyes_hair))


def test_independence_table():
    ca = correspondence_analysis(CenterTable.from_array([[1, 1], [1, 1]]))
    assert ca.n_axes == 1
    assert ca.eigenvalues[0] == pytest.approx(0, abs=EXACT)
    np.testing.assert_allclose(ca.row_coords, 0, atol=EXACT)
    np.testing.assert_allclose(ca.col_coords, 0, atol=EXACT)
    assert total_inertia(CenterTable.from_array([[1, 1], [1, 1]])) == 0


def test_diagonal_table():
    # chi2 = 4 * (2-1)^2 / 1 ... = 4 over N = 4
    k = CenterTable.from_array([[2, 0], [0, 2]])
    ca = correspondence_analysis(k)
    assert ca.eigenvalues[0] == pytest.approx(1.0, abs=ALG)
    assert total_inertia(k) == pytest.approx(1.0, abs=EXACT)


def test_eyes_hair_identities(eyes_hair_ca, eyes_hair):
    ca = eyes_hair_ca
    assert ca.n_axes == 3
    assert ca.eigenvalues.sum() == pytest.approx(total_inertia(centers(eyes_hair)), abs=ALG)
    assert np.all(np.diff(ca.eigenvalues) <= 0)
    assert np.all(ca.eigenvalues >= 0) and np.all(ca.eigenvalues <= 1 + ALG)
    assert ca.row_margins.sum() == pytest.approx(1, abs=EXACT)
    assert ca.col_margins.sum() == pytest.approx(1, abs=EXACT)
    np.testing.assert_allclose(ca.inertia_share.sum(), 1, atol=ALG)


def test_eigenvectors_of_the_product_matrices(eyes_hair_ca):
    ca = eyes_hair_ca
    f, r, c = ca.rel_freq, ca.row_margins, ca.col_margins
    S = f.T @ np.diag(1 / r) @ f @ np.diag(1 / c)
    T = f @ np.diag(1 / c) @ f.T @ np.diag(1 / r)
    for a in range(ca.n_axes):
        u, v, lam = ca.col_axis_vectors[a], ca.row_axis_vectors[a], ca.eigenvalues[a]
        np.testing.assert_allclose(S @ u, lam * u, atol=ALG)
        np.testing.assert_allclose(T @ v, lam * v, atol=ALG)
        assert u @ (u / c) == pytest.approx(1, abs=ALG)
        assert v @ (v / r) == pytest.approx(1, abs=ALG)
        lead = np.argmax(np.abs(u))
        assert u[lead] > 0
    # the discarded trivial eigenvalue: margins are eigenvectors with eigenvalue 1
    np.testing.assert_allclose(S @ c, c, atol=ALG)


def test_transition_formulas(eyes_hair_ca):
    ca = eyes_hair_ca
    ratio = ca.rel_freq / np.outer(ca.row_margins, ca.col_margins)
    np.testing.assert_allclose(ca.row_coords, ca.col_axis_vectors @ ratio.T, atol=ALG)
    np.testing.assert_allclose(ca.col_coords, ca.row_axis_vectors @ ratio, atol=ALG)
    np.testing.assert_allclose(ca.row_coords, ca.solver_row_coords, atol=ALG)
    np.testing.assert_allclose(ca.col_coords, ca.solver_col_coords, atol=ALG)


def test_weighted_moments(eyes_hair_ca):
    ca = eyes_hair_ca
    np.testing.assert_allclose(ca.row_coords @ ca.row_margins, 0, atol=ALG)
    np.testing.assert_allclose(ca.col_coords @ ca.col_margins, 0, atol=ALG)
    np.testing.assert_allclose(ca.row_coords**2 @ ca.row_margins, ca.eigenvalues, atol=ALG)
    np.testing.assert_allclose(ca.col_coords**2 @ ca.col_margins, ca.eigenvalues, atol=ALG)


def test_distances_preserved_at_full_rank(eyes_hair_ca, eyes_hair):
    ca = eyes_hair_ca
    k = centers(eyes_hair)
    for i in range(4):
        for j in range(4):
            d = chi2_row_distance(k, i, j)
            assert d == pytest.approx(np.sum((ca.row_coords[:, i] - ca.row_coords[:, j]) ** 2), abs=1e-8)
            d = chi2_col_distance(k, i, j)
            assert d == pytest.approx(np.sum((ca.col_coords[:, i] - ca.col_coords[:, j]) ** 2), abs=1e-8)
            assert chi2_row_distance(ca, i, j) == pytest.approx(chi2_row_distance(k, i, j), abs=EXACT)


def test_distance_basics(eyes_hair):
    k = centers(eyes_hair)
    dup = CenterTable.from_array(np.vstack([k.values, k.values[1]]))
    assert chi2_row_distance(dup, 1, 4) == 0
    assert chi2_row_distance(k, 0, 2) == chi2_row_distance(k, 2, 0)
    assert chi2_col_distance(k, 1, 3) == pytest.approx(chi2_row_distance(k.transpose(), 1, 3), abs=EXACT)
    dupc = CenterTable.from_array(np.hstack([k.values, k.values[:, [2]]]))
    assert chi2_col_distance(dupc, 2, 4) == 0
    with pytest.raises(IndexError):
        chi2_row_distance(k, 0, 4)


class TestProfiles:
    def test_black_eyes_row(self, eyes_hair):
        prof = row_profiles(centers(eyes_hair))
        np.testing.assert_allclose(prof[0], np.array([60, 121, 24, 5.5]) / 210.5, atol=EXACT)

    def test_black_hair_column(self, eyes_hair):
        prof = column_profiles(centers(eyes_hair))
        np.testing.assert_allclose(prof[0], [0.60, 0.15, 0.05, 0.20], atol=EXACT)

    def test_uniform_and_one_hot(self):
        np.testing.assert_array_equal(row_profiles(CenterTable.from_array(np.full((3, 4), 2.0))), 0.25)
        np.testing.assert_array_equal(row_profiles(CenterTable.from_array([[0, 5, 0]])), [[0, 1, 0]])

    def test_zero_row(self):
        with pytest.raises(AnalysisError, match="zero row sum"):
            row_profiles(CenterTable.from_array([[1, 1], [0, 0]]))

    @given(tables)
    def test_sums(self, k):
        t = CenterTable.from_array(k)
        np.testing.assert_allclose(row_profiles(t).sum(axis=1), 1, atol=EXACT)
        np.testing.assert_allclose(column_profiles(t).sum(axis=1), 1, atol=EXACT)
        np.testing.assert_array_equal(column_profiles(t), row_profiles(t.transpose()))


def test_errors():
    with pytest.raises(AnalysisError, match="zero row margin"):
        correspondence_analysis(CenterTable.from_array([[1, 2], [0, 0]]))
    with pytest.raises(AnalysisError, match="no non-trivial axes"):
        correspondence_analysis(CenterTable.from_array([[1, 2, 3]]))
    with pytest.raises(SymCAError):
        correspondence_analysis(CenterTable.from_array([[1, 2], [3, 4]]), n_axes=0)


def test_axis_truncation(eyes_hair):
    ca = correspondence_analysis(centers(eyes_hair), n_axes=2)
    full = correspondence_analysis(centers(eyes_hair))
    assert ca.n_axes == 2
    np.testing.assert_allclose(ca.eigenvalues, full.eigenvalues[:2], atol=EXACT)
    np.testing.assert_allclose(ca.inertia_share, full.inertia_share[:2], atol=EXACT)
    assert correspondence_analysis(centers(eyes_hair), n_axes=10).n_axes == 3


class TestSupplementary:
    def test_reproduces_coordinates(self, eyes_hair_ca):
        ca = eyes_hair_ca
        for a in range(ca.n_axes):
            for j in range(ca.p):
                z = supplementary_projection(ca.rel_freq[:, j], ca, j, a, "column")
                assert z == pytest.approx(ca.col_coords[a, j], abs=ALG)
            for i in range(ca.n):
                z = supplementary_projection(ca.rel_freq[i], ca, i, a, "row")
                assert z == pytest.approx(ca.row_coords[a, i], abs=ALG)

    def test_zero_vector(self, eyes_hair_ca):
        assert supplementary_projection(np.zeros(4), eyes_hair_ca, 0, 0, "column") == 0

    def test_errors(self, eyes_hair_ca):
        with pytest.raises(SymCAError):
            supplementary_projection(np.zeros(3), eyes_hair_ca, 0, 0, "column")
        with pytest.raises(SymCAError, match="not retained"):
            supplementary_projection(np.zeros(4), eyes_hair_ca, 0, 3, "row")
        with pytest.raises(SymCAError):
            supplementary_projection(np.zeros(4), eyes_hair_ca, 0, 0, "diagonal")


def _gap_ok(ca, rel=1e-3):
    lam = ca.eigenvalues
    if lam[0] < 1e-6:
        return False
    gaps = np.abs(np.diff(np.concatenate([lam, [0.0]])))
    return bool(np.all(gaps > rel * lam[0]))


def _lead_unambiguous(u, rel=1e-6):
    a = np.sort(np.abs(u))[::-1]
    return len(a) < 2 or a[0] - a[1] > rel


@given(tables, st.floats(0.01, 100))
def test_scale_invariance(k, s):
    ca = correspondence_analysis(CenterTable.from_array(k))
    cs = correspondence_analysis(CenterTable.from_array(k * s))
    assume(_gap_ok(ca))
    assume(all(_lead_unambiguous(u) for u in ca.col_axis_vectors))
    np.testing.assert_allclose(cs.eigenvalues, ca.eigenvalues, atol=EXACT)
    np.testing.assert_allclose(cs.row_coords, ca.row_coords, atol=EXACT)
    np.testing.assert_allclose(cs.col_coords, ca.col_coords, atol=EXACT)


@given(tables, st.randoms(use_true_random=False))
def test_row_permutation(k, rnd):
    perm = list(range(k.shape[0]))
    rnd.shuffle(perm)
    ca = correspondence_analysis(CenterTable.from_array(k))
    cp = correspondence_analysis(CenterTable.from_array(k[perm]))
    assume(_gap_ok(ca))
    assume(all(_lead_unambiguous(u) for u in ca.col_axis_vectors))
    np.testing.assert_allclose(cp.eigenvalues, ca.eigenvalues, atol=EXACT)
    np.testing.assert_allclose(cp.row_coords, ca.row_coords[:, perm], atol=EXACT)
    np.testing.assert_allclose(cp.col_coords, ca.col_coords, atol=EXACT)


@given(tables)
def test_inertia_oracle(k):
    t = CenterTable.from_array(k)
    ca = correspondence_analysis(t)
    assert ca.eigenvalues.sum() == pytest.approx(total_inertia(t), abs=ALG)
    assert np.all(ca.eigenvalues <= 1 + ALG)
    assert ca.n_axes == min(k.shape) - 1
