import math

import numpy as np
import pytest

from atomwall import specfun
from atomwall.specfun import Ci, EvalPolicy, H0, H0rr, aux_F, aux_Gcal, geom_G, geom_G_array, si

import oracles

EULER_GAMMA = 0.577215664901532860606512090082

# mpmath references (50 digits, rounded here to double precision)
SI_REF = {
    0.5: -1.0776889087518299301,
    1.0: -0.62471325642771360429,
    2.0: 0.034616650007798229345,
    4.0: 0.18740681215415643887,
    10.0: 0.0875512674239774301,
    30.0: -0.0040397867645455082476,
    100.0: -0.008570859905840325879,
}
CI_REF = {
    0.5: -0.17778407880661290134,
    1.0: 0.33740392290096813466,
    2.0: 0.4229808287748649957,
    4.0: -0.14098169788693041164,
    10.0: -0.045456433004455372635,
    30.0: -0.033032417282071143779,
    100.0: -0.0051488251426104921444,
}
F_REF = {
    0.5: 0.86052676572615856228,
    1.0: 0.62144962423581335764,
    2.0: 0.39902098859418384689,
    4.0: 0.22919256802452697974,
    10.0: 0.098191035010170168733,
    100.0: 0.0099980023928399618249,
}
GCAL_REF = {
    0.5: -0.67269179286854911156,
    1.0: -0.34337796155642703283,
    2.0: -0.14454530303733242046,
    10.0: -0.0094885390163548074071,
}
H0_REF = {
    1e-4: -3.1414926535927820971,
    1e-3: -3.1405926558114761169,
    0.01: -3.1315941112220793894,
    0.1: -3.0423146911169292783,
    0.3: -2.8528209312231516236,
    1.0: -2.3082055473486674233,
    3.0: -1.4316251521416328542,
    5.0: -1.0116783909735985025,
    10.0: -0.56704934933041961226,
    30.0: -0.19855782805936035597,
    40.0: -0.14938454304422982214,
    100.0: -0.059960100285979573601,
    300.0: -0.019998518933096521309,
    1000.0: -0.0059999600010079481644,
}


class TestSi:
    def test_at_zero(self):
        assert si(0.0) == pytest.approx(-math.pi / 2.0, rel=1e-15)

    @pytest.mark.parametrize("x,ref", sorted(SI_REF.items()))
    def test_frozen_values(self, x, ref):
        assert si(x) == pytest.approx(ref, rel=5e-14)

    def test_large_x_leading_asymptote(self):
        assert abs(si(100.0) + math.cos(100.0) / 100.0) < 1e-3

    def test_vanishes_at_infinity(self):
        assert abs(si(1e6)) < 2e-6

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            si(-0.1)

    def test_against_scipy_grid(self):
        for x in np.geomspace(1e-3, 500.0, 120):
            assert si(float(x)) == pytest.approx(oracles.si_ref(float(x)), rel=2e-12, abs=1e-14)


class TestCi:
    def test_small_x_log_form(self):
        x = 1e-8
        assert abs(Ci(x) - EULER_GAMMA - math.log(x)) < 1e-15

    @pytest.mark.parametrize("x,ref", sorted(CI_REF.items()))
    def test_frozen_values(self, x, ref):
        assert Ci(x) == pytest.approx(ref, rel=5e-14)

    def test_large_x_leading_asymptote(self):
        assert abs(Ci(100.0) - math.sin(100.0) / 100.0) < 1e-3

    def test_domain_error(self):
        with pytest.raises(ValueError):
            Ci(0.0)
        with pytest.raises(ValueError):
            Ci(-1.0)

    def test_against_scipy_grid(self):
        for x in np.geomspace(1e-3, 500.0, 120):
            assert Ci(float(x)) == pytest.approx(oracles.ci_ref(float(x)), rel=2e-12, abs=1e-14)


class TestAuxF:
    def test_at_zero(self):
        assert aux_F(0.0) == pytest.approx(math.pi / 2.0, rel=1e-15)

    @pytest.mark.parametrize("x,ref", sorted(F_REF.items()))
    def test_frozen_values(self, x, ref):
        assert aux_F(x) == pytest.approx(ref, rel=5e-14)

    def test_composition_identity(self):
        for x in (0.3, 1.7, 5.0, 20.0):
            assert aux_F(x) == pytest.approx(Ci(x) * math.sin(x) - si(x) * math.cos(x), rel=1e-12)

    def test_asymptote(self):
        # x*aux_F -> 1, approach is -2/x^2
        assert abs(1e3 * aux_F(1e3) - 1.0) < 3e-2
        assert 1e3 * aux_F(1e3) - 1.0 == pytest.approx(-2e-6, rel=1e-2)


class TestAuxGcal:
    def test_log_divergence_at_zero(self):
        x = 1e-8
        assert abs(aux_Gcal(x) - math.log(x) - EULER_GAMMA) < 1e-7

    @pytest.mark.parametrize("x,ref", sorted(GCAL_REF.items()))
    def test_frozen_values(self, x, ref):
        assert aux_Gcal(x) == pytest.approx(ref, rel=5e-14)

    @pytest.mark.parametrize("x", [0.5, 2.0, 10.0])
    def test_is_derivative_of_aux_f(self, x):
        h = 1e-5
        fd = (aux_F(x + h) - aux_F(x - h)) / (2.0 * h)
        assert fd == pytest.approx(aux_Gcal(x), rel=1e-6)

    def test_asymptote(self):
        assert abs(1e3**2 * aux_Gcal(1e3) + 1.0) < 5e-2

    def test_domain_error(self):
        with pytest.raises(ValueError):
            aux_Gcal(0.0)


class TestGeomG:
    def test_contact_limit(self):
        # G -> 1/3 with quadratic correction -x^2/10
        assert geom_G(0.0) == pytest.approx(1.0 / 3.0, rel=1e-15)
        assert geom_G(1e-4) == pytest.approx(1.0 / 3.0, abs=1.05e-9)
        assert geom_G(1e-4) == pytest.approx(0.3333333323333333, rel=1e-14)

    def test_exact_at_pi(self):
        assert geom_G(math.pi) == pytest.approx(-2.0 / math.pi**2, rel=1e-14)

    def test_large_x(self):
        x = 1e3
        assert abs(geom_G(x) - math.sin(x) / x) < 1e-5

    def test_array_matches_scalar(self):
        xs = np.concatenate([np.geomspace(1e-6, 0.49, 20), np.geomspace(0.51, 1e3, 40)])
        arr = geom_G_array(xs)
        for x, v in zip(xs, arr):
            assert v == pytest.approx(geom_G(float(x)), rel=1e-15, abs=1e-18)

    def test_series_matches_direct_at_crossover(self):
        # series branch just below x = 0.5 and direct branch just above both
        # match the reference evaluation
        assert geom_G(0.499) == pytest.approx(oracles.geom_g_ref(0.499), rel=1e-12)
        assert geom_G(0.501) == pytest.approx(oracles.geom_g_ref(0.501), rel=1e-12)


class TestH0rr:
    def test_exact_values(self):
        assert H0rr(0.0) == pytest.approx(-math.pi, rel=1e-15)
        assert H0rr(math.pi / 2.0) == pytest.approx(-math.pi**2 / 2.0, rel=1e-14)
        assert H0rr(math.pi) == pytest.approx(math.pi - math.pi**3 / 2.0, rel=1e-14)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            H0rr(-1.0)


class TestH0:
    @pytest.mark.parametrize("x,ref", sorted(H0_REF.items()))
    def test_frozen_values(self, x, ref):
        assert H0(x) == pytest.approx(ref, rel=1e-12)

    def test_contact_limit_with_linear_term(self):
        # H0 -> -pi with a *linear* correction +x (slope 1 - x^2 aux_Gcal -> 1)
        x = 1e-4
        assert H0(x) + math.pi == pytest.approx(x, rel=1e-7)
        assert abs(H0(x) + math.pi - x) < 1e-11

    def test_large_x_asymptote(self):
        # x*H0 -> -6, next term +40/x^2
        x = 1e3
        assert abs(x * H0(x) + 6.0) / 6.0 < 1e-3
        assert x * H0(x) + 6.0 == pytest.approx(40.0 / x**2, rel=1e-3)

    def test_fr_part_small_at_contact(self):
        x = 1e-3
        assert abs(H0(x) - H0rr(x)) / abs(H0(x)) < 1e-3

    def test_domain_error(self):
        with pytest.raises(ValueError):
            H0(0.0)

    def test_branch_seams(self):
        # series | composition seam at 0.2 and composition | asymptotic at 50:
        # both sides of each seam match the reference composition (the series
        # truncation just below 0.2 is ~1e-12 relative, inside the 1e-11
        # continuity budget)
        assert H0(0.1999999) == pytest.approx(oracles.h0_ref(0.1999999), rel=1e-11)
        assert H0(0.2000001) == pytest.approx(oracles.h0_ref(0.2000001), rel=1e-12)
        assert H0(49.999) == pytest.approx(oracles.h0_ref(49.999), rel=1e-11)
        assert H0(50.001) == pytest.approx(oracles.h0_ref(50.001), rel=1e-11)


class TestEvalPolicy:
    def test_validation(self):
        with pytest.raises(ValueError):
            EvalPolicy(small_x_crossover=0.0)
        with pytest.raises(ValueError):
            EvalPolicy(target_rel_err=1e-5)
        with pytest.raises(ValueError):
            EvalPolicy(target_rel_err=0.0)

    def test_crossover_continuity(self):
        # series branch (crossover pushed up) and continued-fraction branch
        # (crossover pulled down) agree within 10x the accuracy target
        lo = EvalPolicy(small_x_crossover=3.0)
        hi = EvalPolicy(small_x_crossover=6.0)
        for x in (3.5, 4.0, 4.5, 5.5):
            for fn in (si, Ci, aux_F, aux_Gcal):
                a = fn(x, policy=lo)   # CF branch
                b = fn(x, policy=hi)   # series branch
                assert a == pytest.approx(b, rel=10.0 * lo.target_rel_err)


class TestDerivativeIdentities:
    def test_si_ci_derivatives(self):
        # d si/dx = sin x/x, d Ci/dx = cos x/x by central differences
        for x in np.geomspace(0.1, 50.0, 25):
            x = float(x)
            h = 1e-6 * max(1.0, x)
            dsi = oracles.central_diff(si, x, h)
            dci = oracles.central_diff(Ci, x, h)
            if abs(math.sin(x) / x) > 1e-3:
                assert dsi == pytest.approx(math.sin(x) / x, rel=1e-6)
            if abs(math.cos(x) / x) > 1e-3:
                assert dci == pytest.approx(math.cos(x) / x, rel=1e-6)

    def test_gcal_is_derivative_on_log_grid(self):
        for x in np.geomspace(1e-2, 1e2, 30):
            x = float(x)
            h = 1e-6 * max(1.0, x)
            fd = oracles.central_diff(aux_F, x, h)
            g = aux_Gcal(x)
            if abs(g) > 1e-3:  # skip near zeros of the derivative
                assert fd == pytest.approx(g, rel=1e-6)


class TestBackendParity:
    def test_pure_python_matches_selected_backend(self):
        from atomwall import _kernels_py

        rng = np.random.default_rng(7)
        xs = 10.0 ** rng.uniform(-4, 3, 60)
        for x in xs:
            x = float(x)
            assert _kernels_py.h0(x) == pytest.approx(H0(x), rel=2e-13)
            assert _kernels_py.si(x) == pytest.approx(si(x), rel=2e-13, abs=1e-15)
            assert _kernels_py.ci(x) == pytest.approx(Ci(x), rel=2e-13, abs=1e-15)
            assert _kernels_py.geom_g(x) == pytest.approx(geom_G(x), rel=2e-13, abs=1e-16)
        us = rng.uniform(0.01, 5.0, 200)
        a = _kernels_py.thermal_integrand(us, 3.0, 0.7)
        from atomwall._backend import kernels
        b = kernels.thermal_integrand(us, 3.0, 0.7)
        np.testing.assert_allclose(a, b, rtol=5e-14)
