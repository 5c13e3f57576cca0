import math

import numpy as np
import pytest

from itofrft.kernels import (
    TransformParams,
    bergman_kernel,
    frft_kernel,
    gram_kernel,
    mehler_closed,
    mehler_series,
)
from itofrft.spectral import gamma_norm


class TestTransformParams:
    def test_accepts_open_disk(self):
        TransformParams(1.0, 0.5j, -0.99)

    @pytest.mark.parametrize("nu,u,v", [(0.0, 0.1, 0.1), (1.0, 1.0, 0.1), (1.0, 0.1, 1.0j)])
    def test_rejects_boundary(self, nu, u, v):
        with pytest.raises(ValueError):
            TransformParams(nu, u, v)


class TestMehler:
    def test_degenerate_parameters(self):
        p = TransformParams(1.0, 0.0, 0.0)
        assert mehler_closed(p, 1.0 + 2.0j, -3.0) == pytest.approx(1.0)
        assert mehler_series(p, 1.0 + 2.0j, -3.0, trunc=5) == pytest.approx(1.0 / math.pi)

    def test_symmetric_in_z_w(self):
        p = TransformParams(1.3, 0.4, 0.2 + 0.3j)
        z, w = 0.7 - 0.2j, -0.5 + 0.9j
        assert mehler_closed(p, z, w) == pytest.approx(mehler_closed(p, w, z), rel=1e-14)

    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.0])
    def test_series_converges_to_closed(self, nu):
        p = TransformParams(nu, 0.45, -0.3j)
        zs = np.array([0.2 + 0.1j, -0.8, 1.1j])
        closed = mehler_closed(p, zs, np.conj(zs))
        series = mehler_series(p, zs, np.conj(zs), trunc=70)
        np.testing.assert_allclose(series, nu / math.pi * closed, rtol=1e-10)

    def test_series_rejects_negative_trunc(self):
        with pytest.raises(ValueError):
            mehler_series(TransformParams(1.0, 0.1, 0.1), 0.0, 0.0, trunc=-1)


class TestFrftKernel:
    def test_degenerate_parameters(self):
        p = TransformParams(2.0, 0.0, 0.0)
        assert frft_kernel(p, 1.0j, 5.0) == pytest.approx(2.0 / math.pi)

    def test_relation_to_mehler(self):
        p = TransformParams(1.5, 0.3 + 0.1j, -0.4)
        zeta, xi = 0.6 - 1.1j, 0.9 + 0.4j
        assert frft_kernel(p, zeta, xi) == pytest.approx(
            p.nu / math.pi * mehler_closed(p, np.conj(zeta), xi), rel=1e-14
        )

    def test_hermitian_under_parameter_swap(self):
        # swapping u <-> v conjugates the kernel for real nu, real parameters
        zeta, xi = 0.5 + 0.7j, -0.3 + 0.2j
        a = frft_kernel(TransformParams(1.0, 0.4, 0.25), zeta, xi)
        b = frft_kernel(TransformParams(1.0, 0.25, 0.4), zeta, xi)
        assert a == pytest.approx(np.conj(b), rel=1e-14)

    def test_overflow_guard(self):
        p = TransformParams(1.0, 0.9, 0.0)
        with pytest.raises(OverflowError):
            frft_kernel(p, 30.0, 30.0)


class TestBergmanKernel:
    def test_diagonal_at_origin(self):
        assert bergman_kernel(0.0, 0.0, (0, 0), (0, 0)) == pytest.approx(1.0 / math.pi**2)
        assert bergman_kernel(1.0, 2.0, (0, 0), (0, 0)) == pytest.approx(6.0 / math.pi**2)

    def test_closed_form(self):
        val = bergman_kernel(0.0, 0.0, (0.5, 0.0), (0.5, 0.0))
        assert val == pytest.approx(1.0 / (math.pi**2 * 0.75**2 * 1.0))

    def test_hermitian(self):
        a = (0.2 + 0.1j, -0.3j)
        b = (0.4, 0.1 - 0.2j)
        k1 = bergman_kernel(1.2, 0.7, a, b)
        k2 = bergman_kernel(1.2, 0.7, b, a)
        assert k1 == pytest.approx(np.conj(k2), rel=1e-14)

    def test_matches_monomial_expansion(self):
        alpha, beta = 1.0, 0.5
        a = (0.3, 0.2 - 0.1j)
        b = (0.25 + 0.15j, -0.3)
        total = sum(
            (a[0] * np.conj(b[0])) ** m * (a[1] * np.conj(b[1])) ** n
            / gamma_norm(alpha, beta, m, n)
            for m in range(60)
            for n in range(60)
        )
        assert bergman_kernel(alpha, beta, a, b) == pytest.approx(total, rel=1e-12)

    def test_rejects_boundary_points(self):
        with pytest.raises(ValueError):
            bergman_kernel(0.0, 0.0, (1.0, 0.0), (0.0, 0.0))


class TestGramKernel:
    def test_rank_one_truncation(self):
        # |psi00(w)|^2 = psi00(z) conj(psi00(zeta)) = nu/pi, so the trunc=0
        # kernel is (nu/pi)^2 gamma_00 everywhere
        nu, alpha, beta = 1.0, 1.0, 1.0
        want = (nu / math.pi) ** 2 * gamma_norm(alpha, beta, 0, 0)
        got = gram_kernel(nu, alpha, beta, 0.4 + 0.2j, -0.6j, 0.9, trunc=0)
        assert got == pytest.approx(want, rel=1e-14)

    def test_hermitian(self):
        k1 = gram_kernel(1.0, 1.0, 0.5, 1.0, 0.3 + 0.2j, -0.7j, trunc=8)
        k2 = gram_kernel(1.0, 1.0, 0.5, 1.0, -0.7j, 0.3 + 0.2j, trunc=8)
        assert k1 == pytest.approx(np.conj(k2), rel=1e-13)

    def test_rejects_negative_trunc(self):
        with pytest.raises(ValueError):
            gram_kernel(1.0, 1.0, 1.0, 0.0, 0.0, 0.0, trunc=-2)
