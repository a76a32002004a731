"""Spin-1/2 construction against hand-computed oracles.

The frozen numbers come from evaluating the closed forms at m = 1, p = z:
E = sqrt(2), boost factors a_pm = (E + m +- |p|) / sqrt(2 m (E + m)).
"""

import math

import numpy as np
import pytest

from selfconj import halfspin, linalg
from selfconj.halfspin import DN, UP, FourMomentum, PhaseConvention

A_PLUS = 1.5537739740300374
A_MINUS = 0.6435942529055826

P_Z = FourMomentum(1.0, 1.0)  # unit momentum along +z
GRID = [
    FourMomentum(m, mag, th, ph)
    for m in (1.0, 0.5)
    for mag in (0.5, 2.0)
    for th, ph in ((0.0, 0.0), (math.pi / 2, 0.0), (1.1, 2.3), (2.7, 4.0))
]


def test_momentum_validation():
    with pytest.raises(ValueError):
        FourMomentum(-1.0, 1.0)
    with pytest.raises(ValueError):
        FourMomentum(1.0, -0.5)
    with pytest.raises(ValueError):
        FourMomentum(1.0, 1.0, theta=4.0)
    # rest momentum forgets the direction
    p = FourMomentum(1.0, 0.0, theta=2.0, phi=1.0)
    assert p.theta == 0.0 and p.phi == 0.0
    assert FourMomentum(1.0, 1.0).reflected().theta == pytest.approx(math.pi)


def test_helicity_spinors_pinned_values():
    rt = 1 / math.sqrt(2)
    assert np.allclose(halfspin.helicity_eigenspinor(math.pi / 2, 0.0, UP), [rt, rt])
    assert np.allclose(halfspin.helicity_eigenspinor(math.pi / 2, 0.0, DN), [-rt, rt])
    assert np.allclose(halfspin.helicity_eigenspinor(0.0, 0.0, UP), [1, 0])
    with pytest.raises(ValueError):
        halfspin.helicity_eigenspinor(0.0, 0.0, 0)


def test_wigner_property_of_theta():
    for th, ph in ((0.3, 1.2), (2.0, 5.1)):
        cp = halfspin.helicity_eigenspinor(th, ph, UP)
        cm = halfspin.helicity_eigenspinor(th, ph, DN)
        assert np.allclose(halfspin.THETA @ np.conjugate(cp), cm)
        assert np.allclose(halfspin.THETA @ np.conjugate(cm), -cp)


def test_boost_factors_at_unit_momentum():
    lam_r, lam_l = halfspin.boost_ops(P_Z)
    chi = halfspin.helicity_eigenspinor(0.0, 0.0, UP)
    assert np.allclose(lam_r @ chi, A_PLUS * chi, atol=1e-14)
    assert np.allclose(lam_l @ chi, A_MINUS * chi, atol=1e-14)
    with pytest.raises(ValueError):
        halfspin.boost_ops(FourMomentum(0.0, 1.0))


def test_lambda_up_at_unit_momentum():
    b = halfspin.build_spinor_basis(P_Z)
    want = np.array([0.0, 1j * A_MINUS, A_MINUS, 0.0])
    assert np.allclose(b.lam_s[UP], want, atol=1e-14)


def test_rest_rows_default_convention():
    b = halfspin.build_spinor_basis(FourMomentum(1.0, 0.0))
    assert np.allclose(b.lam_s[UP], [0, 1j, 1, 0], atol=1e-14)
    assert np.allclose(b.lam_s[DN], [-1j, 0, 0, 1], atol=1e-14)
    assert np.allclose(b.lam_a[UP], [0, -1j, 1, 0], atol=1e-14)
    assert np.allclose(b.rho_s[UP], [1, 0, 0, -1j], atol=1e-14)
    assert np.allclose(b.rho_a[UP], [1, 0, 0, 1j], atol=1e-14)


def test_rest_basis_validation():
    with pytest.raises(ValueError):
        halfspin.build_spinor_basis(P_Z, rest_basis="diag")


def test_conjugation_eigenvalues_across_grid():
    c = halfspin.charge_conjugation_op()
    assert c.square_sign() == +1
    for p in GRID:
        b = halfspin.build_spinor_basis(p)
        for name, psi, sign in b.charge_family():
            assert np.linalg.norm(c(psi) - sign * psi) < 1e-12, name


def test_conjugation_square_free_of_global_phase():
    for thetac in (0.0, 0.9, math.pi / 2, 2.2):
        c = halfspin.charge_conjugation_op(PhaseConvention(thetac=thetac))
        assert linalg.max_abs(c.squared().matrix - np.eye(4)) < 1e-15


def test_rest_phase_convention_scales():
    conv = PhaseConvention(theta1=0.3, theta2=0.0, norm=2.0)
    b = halfspin.build_spinor_basis(FourMomentum(1.0, 0.0), conv)
    assert np.allclose(b.phi_l[UP], 2.0 * np.exp(0.3j) * np.array([1, 0]))


def test_dirac_v_is_chirality_image():
    b = halfspin.build_spinor_basis(P_Z)
    for h in (UP, DN):
        assert np.allclose(b.dirac_v(h), halfspin.GAMMA5 @ b.dirac_u(h))


def test_dynamical_residuals_zero_and_selftest():
    for p in GRID:
        r = halfspin.dynamical_residuals(p)
        assert max(r.values()) < 1e-12
    # deliberately flipped third sign must miss by exactly 2 m ||rho^S||
    p = FourMomentum(1.0, 1.0, 1.1, 0.4)
    b = halfspin.build_spinor_basis(p)
    expect = 2 * p.mass * max(
        np.linalg.norm(b.rho_s[UP]), np.linalg.norm(b.rho_s[DN])
    )
    flipped = halfspin.dynamical_residuals(p, flip_third_sign=True)["r3"]
    assert flipped == pytest.approx(expect, rel=1e-12)


def test_connection_exact_at_default_convention():
    rest = halfspin.connection_check(FourMomentum(1.0, 0.0))
    assert rest.raw_residual < 1e-15
    for p in GRID:
        rep = halfspin.connection_check(p)
        assert rep.raw_residual < 1e-12
        assert rep.aligned_residual < 1e-12
        assert np.allclose(rep.phases, np.ones(4), atol=1e-12)


def test_connection_matrix_is_frozen():
    m = 0.5 * np.array(
        [
            [1, 1j, -1, 1j],
            [-1j, 1, -1j, -1],
            [1, -1j, -1, -1j],
            [1j, 1, 1j, -1],
        ]
    )
    assert np.array_equal(halfspin.CONNECTION, m)


def test_gram_matrix_rest_oracle_and_invariance():
    want = np.array(
        [
            [0, -2j, 0, 0],
            [2j, 0, 0, 0],
            [0, 0, 0, 2j],
            [0, 0, -2j, 0],
        ]
    )
    g0 = halfspin.biorthonormality_gram(FourMomentum(1.0, 0.0))
    assert np.allclose(g0, want, atol=1e-14)
    for p in GRID[::3]:
        g = halfspin.biorthonormality_gram(p)
        assert np.allclose(g, want * p.mass, atol=1e-12)


def test_gram_phase_dependence():
    p = FourMomentum(1.0, 1.0)
    for t1, t2 in ((0.3, 0.4), (1.0, 0.57), (0.0, math.pi / 2)):
        g = halfspin.biorthonormality_gram(p, PhaseConvention(t1, t2))
        assert g[0, 1] == pytest.approx(-2j * math.cos(t1 + t2), abs=1e-12)
        assert g[1, 0] == pytest.approx(+2j * math.cos(t1 + t2), abs=1e-12)
        assert g[2, 3] == pytest.approx(+2j * math.cos(t1 + t2), abs=1e-12)
        assert linalg.max_abs(np.diag(g)) < 1e-12


def test_helicity_eigen_and_noneigen_split():
    for p in GRID:
        if p.pmag == 0:
            continue
        ops = halfspin.discrete_ops(p.nhat)
        b = halfspin.build_spinor_basis(p)
        for h in (UP, DN):
            u = b.dirac_u(h)
            assert np.linalg.norm(ops.helicity @ u - 0.5 * h * u) < 1e-12
            lam = b.lam_s[h]
            _, resid = linalg.eigen_residual(ops.helicity, lam)
            # exact split: equal weight on both helicity halves
            assert resid == pytest.approx(0.5 * np.linalg.norm(lam), rel=1e-12)


def test_chiral_helicity_eigenvalues():
    p = FourMomentum(1.0, 1.0, 1.1, 2.3)
    ops = halfspin.discrete_ops(p.nhat)
    b = halfspin.build_spinor_basis(p)
    for h in (UP, DN):
        for fam, sgn in ((b.lam_s, +1), (b.lam_a, +1), (b.rho_s, -1), (b.rho_a, -1)):
            psi = fam[h]
            assert np.linalg.norm(
                ops.chiral_helicity @ psi - sgn * 0.5 * h * psi
            ) < 1e-12


def test_gauge_transforms_preserve_status():
    c = halfspin.charge_conjugation_op()
    b = halfspin.build_spinor_basis(FourMomentum(1.0, 2.0, 0.7, 0.0))
    for alpha in (0.3, 1.7):
        gl, gr = halfspin.gauge_lambda(alpha), halfspin.gauge_rho(alpha)
        for name, psi, sign in b.charge_family():
            img = (gl if name.startswith("lam") else gr) @ psi
            assert np.linalg.norm(c(img) - sign * img) < 1e-12


def test_xi_conjugates_the_boosts():
    for p in GRID:
        if p.mass <= 0 or p.pmag == 0:
            continue
        xi = halfspin.xi_matrix(p.phi)
        lam_r, lam_l = halfspin.boost_ops(p)
        for lam in (lam_r, lam_l):
            assert np.allclose(xi @ lam @ np.linalg.inv(xi), np.conjugate(lam))


def test_xi_alias_residuals_default_convention():
    for p in GRID:
        out = halfspin.xi_alias_residuals(p)
        assert max(out.values()) < 1e-12


def test_w_group_table_is_quaternionic():
    table = halfspin.w_group_table()
    want = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (-1, 3), (1, 3): (1, 2),
        (2, 0): (1, 2), (2, 1): (1, 3), (2, 2): (-1, 0), (2, 3): (-1, 1),
        (3, 0): (1, 3), (3, 1): (-1, 2), (3, 2): (1, 1), (3, 3): (-1, 0),
    }
    assert table == want


def test_massless_scan_closed_form():
    rows = halfspin.massless_scan([1e-2, 1e-4, 1e-6, 1e-8], pmag=1.0)
    for row in rows:
        m = row["mass"]
        e = math.hypot(m, 1.0)
        assert row["ratio"] == pytest.approx(2 * m * (e + m) / (e + m + 1.0) ** 2, rel=1e-9)
        assert row["lam_s_dn_norm"] == pytest.approx((e + m + 1.0) / math.sqrt(e + m), rel=1e-9)
    assert rows[-1]["ratio"] == pytest.approx(5.0e-9, rel=1e-3)
    assert rows[-1]["lam_s_dn_norm"] == pytest.approx(2.0, rel=1e-6)


def test_massless_scan_rejects_bad_input():
    with pytest.raises(ValueError):
        halfspin.massless_scan([1e-2], pmag=1.0, rest_basis="sigma_z")
    with pytest.raises(ValueError):
        halfspin.massless_scan([], pmag=1.0)
    with pytest.raises(ValueError):
        halfspin.massless_scan([0.0], pmag=1.0)


def test_fgm_tensor_forms():
    sig, til = halfspin.fgm_tensors()
    for i in range(3):
        assert np.array_equal(sig[(0, i + 1)], 1j * halfspin.SIGMA[i])
        assert np.array_equal(til[(0, i + 1)], -1j * halfspin.SIGMA[i])
    assert np.array_equal(sig[(1, 2)], halfspin.SIGMA[2])
    assert np.array_equal(til[(1, 2)], halfspin.SIGMA[2])
    assert linalg.max_abs(sig[(0, 0)]) == 0.0


def test_fgm_residuals_free_field():
    for p in GRID:
        r = halfspin.fgm_residuals(p)
        assert r["right"] < 1e-12 and r["left"] < 1e-12


def test_fgm_residuals_coupled_and_errors():
    f = np.zeros((4, 4))
    f[0, 1], f[1, 0] = 1.0, -1.0
    out = halfspin.fgm_residuals(P_Z, g=0.3, fmunu=f, x=[0.5, 0.2, 0.0, 0.0])
    assert out["right"] >= 0.0 and out["left"] >= 0.0
    with pytest.raises(ValueError):
        halfspin.fgm_residuals(P_Z, fmunu=np.ones((4, 4)))
    with pytest.raises(ValueError):
        halfspin.fgm_residuals(P_Z, fmunu=f, x=[1.0, 0.0])


def test_discrete_ops_validation():
    with pytest.raises(ValueError):
        halfspin.discrete_ops([0.0, 0.0, 2.0])
    with pytest.raises(ValueError):
        halfspin.direction_angles([1.0, 1.0, 1.0])
