import cmath

import numpy as np
import pytest

from webfoam.adhm import (
    AdhmError,
    DEGENERATE_ALPHA_POINT,
    DEGENERATE_BETA_POINT,
    TOL_RANK,
    adhm_operators,
    adhm_residuals,
    binomial_series,
    build_rep,
    chern_nu,
    chern_series,
    find_intertwiners,
    homogeneous_operators,
    homogeneous_rank_scan,
    min_singular_values,
    on_quadric,
    quadric_point,
    scalar_solution,
    series_mul,
)


@pytest.fixture(scope="module")
def rep3():
    return build_rep(3)


@pytest.fixture(scope="module")
def inter3(rep3):
    return find_intertwiners(rep3)


class TestRepresentation:
    def test_displayed_matrices(self, rep3):
        w = cmath.exp(2j * cmath.pi / 3)
        assert np.allclose(rep3.rho_g, np.diag([w, 1, w ** -1]), atol=1e-12)
        assert np.allclose(rep3.rho_h, [[0, 1, 0], [0, 0, 1], [1, 0, 0]], atol=1e-12)
        assert np.allclose(rep3.rho_gamma, w * np.eye(3), atol=1e-12)

    def test_order_three(self, rep3):
        for m in (rep3.rho_g, rep3.rho_h):
            assert np.max(np.abs(np.linalg.matrix_power(m, 3) - np.eye(3))) < 1e-12

    def test_commutator(self, rep3):
        comm = (
            rep3.rho_g
            @ rep3.rho_h
            @ np.linalg.inv(rep3.rho_g)
            @ np.linalg.inv(rep3.rho_h)
        )
        assert np.max(np.abs(comm - rep3.rho_gamma)) < 1e-12

    def test_even_rank(self):
        rep = build_rep(2)
        # the determinant-one lift squares to minus the identity
        assert abs(rep.epsilon ** 2 + 1) < 1e-12
        assert np.max(np.abs(np.linalg.matrix_power(rep.rho_g, 2) + np.eye(2))) < 1e-12
        for m in (rep.rho_g, rep.rho_h):
            assert abs(np.linalg.det(m) - 1) < 1e-12

    def test_general_ranks(self):
        for n in (4, 5, 6, 7, 8):
            rep = build_rep(n)
            comm = (
                rep.rho_g
                @ rep.rho_h
                @ np.linalg.inv(rep.rho_g)
                @ np.linalg.inv(rep.rho_h)
            )
            assert np.max(np.abs(comm - rep.zeta * np.eye(n))) < 1e-10

    def test_rank_one_rejected(self):
        with pytest.raises(AdhmError):
            build_rep(1)


class TestIntertwiners:
    def test_defining_property(self, rep3, inter3):
        f1, f2, _, _ = inter3
        pairs = [
            (f1, {"g": rep3.zeta, "h": rep3.zeta}),
            (f2, {"g": rep3.zeta ** -1, "h": 1.0}),
        ]
        for f, chi in pairs:
            for name, gen in (("g", rep3.rho_g), ("h", rep3.rho_h)):
                defect = np.max(np.abs(f @ gen - chi[name] * gen @ f))
                assert defect < 1e-12, name

    def test_unitary(self, inter3):
        for m in inter3[:3]:
            assert np.max(np.abs(m @ m.conj().T - np.eye(3))) < 1e-12

    def test_commutator_scalar_times_unitary(self, inter3):
        f1, f2, _, _ = inter3
        bracket = f1 @ f2 - f2 @ f1
        svs = np.linalg.svd(bracket, compute_uv=False)
        assert svs[0] > 1e-6
        assert np.max(np.abs(svs - svs[0])) < 1e-12

    def test_normalization_scalar(self, inter3):
        _, _, s, c = inter3
        # for rank 3 the commutator has operator norm sqrt(3)
        assert abs(abs(c) - 1 / np.sqrt(3)) < 1e-12
        assert c.real < 0 and abs(c.imag) < 1e-12


class TestScalarSolution:
    def test_unit_point(self, inter3):
        d = scalar_solution(inter3, 1, 1)
        assert abs(d.a - d.b) < 1e-12
        res = adhm_residuals(d)
        assert res["complex"] < 1e-12 and res["moment"] < 1e-12

    def test_first_equation_exact(self, inter3):
        d = scalar_solution(inter3, 2 + 1j, -0.5 + 0.25j)
        assert abs(d.t1 * d.t2 + d.C * d.a * d.b) < 1e-12

    def test_moduli_magnitudes(self, inter3):
        d = scalar_solution(inter3, 3, -4j)
        assert abs(abs(d.a) - abs(d.b)) < 1e-12
        # |a| = (|t1 t2| / |C|)^(1/2), forced by the unitary normalization
        assert abs(abs(d.a) - (12 / abs(d.C)) ** 0.5) < 1e-10

    def test_scaling_homogeneity(self, inter3):
        d1 = scalar_solution(inter3, 1 + 1j, 2)
        lam = 3.5
        d2 = scalar_solution(inter3, lam * (1 + 1j), lam * 2)
        assert abs(d2.a - lam * d1.a) < 1e-10
        assert abs(d2.b - lam * d1.b) < 1e-10

    def test_uhlenbeck_boundary(self, inter3):
        d = scalar_solution(inter3, 1.5, 0)
        assert d.uhlenbeck and d.a == 0 and d.b == 0
        res = adhm_residuals(d)
        assert res["complex"] < 1e-12 and res["moment"] < 1e-12

    def test_both_zero_rejected(self, inter3):
        with pytest.raises(AdhmError):
            scalar_solution(inter3, 0, 0)


class TestOperators:
    def test_shapes(self, inter3):
        d = scalar_solution(inter3, 1, 1)
        alpha, beta = adhm_operators(d, (0.3, -0.7j))
        assert alpha.shape == (9, 3)
        assert beta.shape == (3, 9)

    def test_complex_equation_all_z(self, inter3):
        d = scalar_solution(inter3, 1 - 2j, 0.7)
        rng = np.random.default_rng(1)
        for _ in range(100):
            z = (complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
            alpha, beta = adhm_operators(d, z)
            assert np.max(np.abs(beta @ alpha)) < 1e-10

    def test_grid_residuals_and_ranks(self, inter3):
        rng = np.random.default_rng(2)
        mags = [10.0 ** (k / 3 - 1.5) for k in range(10)]
        for m1 in mags[:5]:
            for m2 in mags[:5]:
                t1 = m1 * np.exp(2j * np.pi * rng.uniform())
                t2 = m2 * np.exp(2j * np.pi * rng.uniform())
                d = scalar_solution(inter3, t1, t2)
                res = adhm_residuals(d)
                scale = max(1.0, abs(t1 * t2))
                assert res["complex"] / scale < 1e-10
                assert res["moment"] / scale < 1e-10
                for _ in range(3):
                    z = (complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
                    sa, sb = min_singular_values(d, z)
                    assert sa > TOL_RANK and sb > TOL_RANK


class TestHomogeneousFamily:
    def test_generic_full_rank(self, inter3):
        pts = [
            quadric_point(inter3, 1 + 0.5j, -2),
            quadric_point(inter3, 0.1, 0.1, a=3),
            quadric_point(inter3, -1j, 2 + 2j, a=0.25),
        ]
        report = homogeneous_rank_scan(inter3, pts)
        assert report["alpha_full_rank"] and report["beta_full_rank"]

    def test_alpha_degenerates_only_b(self, inter3):
        alpha, beta = homogeneous_operators(inter3, DEGENERATE_ALPHA_POINT)
        assert np.linalg.svd(alpha, compute_uv=False)[-1] < 1e-14
        assert np.linalg.svd(beta, compute_uv=False)[-1] > TOL_RANK

    def test_beta_degenerates_only_a(self, inter3):
        alpha, beta = homogeneous_operators(inter3, DEGENERATE_BETA_POINT)
        assert np.linalg.svd(beta, compute_uv=False)[-1] < 1e-14
        assert np.linalg.svd(alpha, compute_uv=False)[-1] > TOL_RANK

    def test_degenerate_points_on_quadric(self, inter3):
        assert on_quadric(inter3, DEGENERATE_ALPHA_POINT)
        assert on_quadric(inter3, DEGENERATE_BETA_POINT)

    def test_off_quadric_rejected(self, inter3):
        with pytest.raises(AdhmError):
            homogeneous_rank_scan(inter3, [(1, 1, 1, 1, 1)])


class TestChern:
    def test_nu_is_rank(self):
        for n in range(1, 9):
            nu, parity = chern_nu(n)
            assert nu == n
            assert parity == n % 2

    def test_nu3_odd(self):
        assert chern_nu(3) == (3, 1)

    def test_series_identity_exact(self):
        for n in (1, 2, 3, 5, 8):
            order = 9
            prod = series_mul(binomial_series(n, order), chern_series(n, order), order)
            assert prod == [1] + [0] * order

    def test_geometric_series(self):
        assert chern_series(1, 5) == [1, 1, 1, 1, 1, 1]

    def test_order_bound(self):
        with pytest.raises(AdhmError):
            chern_nu(3, order=2)
