import math

import numpy as np
import pytest

from atomwall.specfun import H0, H0rr
from atomwall.vacuum import (
    asymptotic_cp,
    asymptotic_lvdw,
    asymptotic_resonant,
    ground_energy_rate,
    resonance_extremum,
    spontaneous_rate_ratio,
    v0fr,
    v0rr,
    vacuum_breakdown,
    vacuum_potentials,
)

import oracles

# extremum positions of ve located with mpmath root-finding on the exact form
EXTREMA_REF = {
    (5, "max"): 31.3200352658, (5, "min"): 28.1677060010,
    (6, "max"): 37.6193052451, (6, "min"): 34.4704199165,
    (7, "max"): 43.9139441719, (7, "min"): 40.7670740597,
    (8, "max"): 50.2057033460, (8, "min"): 47.0601142647,
}


class TestV0rr:
    def test_contact_is_london(self):
        x0 = 1e-3
        assert v0rr(x0) == pytest.approx(-1.0 / x0**3, rel=1e-4)

    def test_exact_at_two_pi(self):
        # sin(2 pi) = 0, cos(2 pi) = 1: H0rr = -pi (1 - 2 pi^2)
        x0 = 2.0 * math.pi
        assert v0rr(x0) == pytest.approx((2.0 * math.pi**2 - 1.0) / (8.0 * math.pi**3), rel=1e-13)

    @pytest.mark.parametrize("n", [200, 201, 202])
    def test_large_x0_oscillation(self, n):
        # v0rr ~ cos(x0)/(2 x0) at integer multiples of pi (|cos| = 1 there;
        # the approximation is meaningless at the cosine zeros in between)
        x0 = n * math.pi
        assert v0rr(x0) == pytest.approx(math.cos(x0) / (2.0 * x0), rel=0.02)

    def test_domain(self):
        with pytest.raises(ValueError):
            v0rr(0.0)


class TestV0fr:
    def test_negligible_at_contact(self):
        x0 = 1e-3
        assert abs(v0fr(x0)) / abs(v0rr(x0)) < 1e-2

    def test_vg_identity(self):
        for x0 in (0.1, 1.0, 7.0, 120.0):
            r = vacuum_potentials(x0)
            assert r.vg == pytest.approx(H0(x0) / (math.pi * x0**3), rel=1e-14)

    def test_large_x0_ground_state(self):
        x0 = 1e3
        r = vacuum_potentials(x0)
        assert r.vg == pytest.approx(-6.0 / (math.pi * x0**4), rel=5e-3)


class TestVacuumPotentials:
    def test_sum_rule_random_grid(self):
        rng = np.random.default_rng(12345)
        xs = 10.0 ** rng.uniform(-3, 3, 10000)
        worst = 0.0
        for x0 in xs:
            r = vacuum_potentials(float(x0))
            scale = max(abs(r.vg), abs(r.ve), abs(2.0 * r.v0rr))
            worst = max(worst, abs((r.vg + r.ve) - 2.0 * r.v0rr) / scale)
        assert worst < 1e-13

    def test_contact_states_coincide(self):
        r = vacuum_potentials(1e-3)
        assert r.vg == pytest.approx(-1e9, rel=0.01)
        assert r.ve == pytest.approx(-1e9, rel=0.01)

    def test_large_distance_states(self):
        x0 = 1e3
        r = vacuum_potentials(x0)
        assert r.vg == pytest.approx(-6.0 / (math.pi * x0**4), rel=0.01)
        amp = 1.0 / x0  # oscillation amplitude of ve out there
        assert abs(r.ve - asymptotic_resonant(x0)) < 0.01 * amp

    def test_ground_state_attractive_over_observed_range(self):
        for x0 in np.geomspace(1e-2, 1e2, 200):
            assert vacuum_potentials(float(x0)).vg < 0.0

    def test_quadrature_oracle(self):
        # independent scipy evaluation of the regulated frequency integral
        for x0 in (0.3, 1.0, 3.0, 10.0):
            got = vacuum_potentials(x0).vg
            ref = oracles.vg_vacuum_ref(x0)
            assert got == pytest.approx(ref, rel=1e-6)

    def test_breakdown_view(self):
        b = vacuum_breakdown(2.0, "ground")
        r = vacuum_potentials(2.0)
        assert b.total() == pytest.approx(r.vg, rel=1e-15)
        assert b.v_thermal == 0.0


class TestAsymptoticForms:
    def test_lvdw_values(self):
        assert asymptotic_lvdw(2.0) == -0.125
        assert asymptotic_lvdw(1.0) == -1.0

    def test_lvdw_ratio_at_contact(self):
        x0 = 1e-3
        assert vacuum_potentials(x0).vg / asymptotic_lvdw(x0) == pytest.approx(1.0, abs=0.01)

    def test_lvdw_window(self):
        # the relative error of the London form is ~ x0/pi, so the 1% window
        # closes at x0 ~ 0.031
        for x0 in (0.005, 0.01, 0.03):
            assert abs(vacuum_potentials(x0).vg / asymptotic_lvdw(x0) - 1.0) < 0.01
        assert abs(vacuum_potentials(0.05).vg / asymptotic_lvdw(0.05) - 1.0) > 0.01

    def test_cp_value(self):
        assert asymptotic_cp(1.0) == pytest.approx(-6.0 / math.pi, rel=1e-15)

    def test_cp_window(self):
        for x0 in (50.0001, 100.0, 1e3):
            assert abs(vacuum_potentials(x0).vg / asymptotic_cp(x0) - 1.0) < 0.01

    def test_cp_ratio_limit(self):
        x0 = 1e3
        assert vacuum_potentials(x0).vg / asymptotic_cp(x0) == pytest.approx(1.0, abs=2e-3)

    def test_cp_vs_lvdw_power_counting(self):
        for x0 in (0.5, 3.0, 40.0):
            assert asymptotic_cp(x0) / asymptotic_lvdw(x0) == pytest.approx(6.0 / (math.pi * x0), rel=1e-14)

    def test_resonant_matches_ve(self):
        x0 = 1e3
        amp = 1.0 / x0
        assert abs(vacuum_potentials(x0).ve - asymptotic_resonant(x0)) < 0.01 * amp


class TestResonanceGeometry:
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_extrema_near_standing_wave_condition(self, n):
        # positions drift below 2 pi n by O(1/x0); tolerance 2 pi/40
        for kind, target in (("max", 2 * math.pi * n), ("min", 2 * math.pi * (n - 0.5))):
            x_star = resonance_extremum(n, kind)
            assert abs(x_star - target) < 2.0 * math.pi / 40.0

    @pytest.mark.parametrize("n,kind", sorted(EXTREMA_REF))
    def test_against_frozen_positions(self, n, kind):
        # golden-section to x-tolerance 4 pi/1000 ~ 0.0126
        assert resonance_extremum(n, kind) == pytest.approx(EXTREMA_REF[(n, kind)], abs=0.013)

    def test_max_is_local_max(self):
        def ve(x):
            return (2.0 * H0rr(x) - H0(x)) / (math.pi * x**3)

        x_star = resonance_extremum(5, "max")
        assert ve(x_star) > ve(x_star - 0.3) and ve(x_star) > ve(x_star + 0.3)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            resonance_extremum(0, "max")
        with pytest.raises(ValueError):
            resonance_extremum(3, "saddle")


class TestSpontaneousEmission:
    def test_contact_limit(self):
        assert spontaneous_rate_ratio(1e-4) == pytest.approx(2.0 / 3.0, abs=1e-6)

    def test_free_space_limit(self):
        assert spontaneous_rate_ratio(1e3) == pytest.approx(1.0, abs=1e-2)

    def test_free_space_rate_at_extrema(self):
        # at the standing-wave points the emission is the free-space one
        x0 = 2.0 * math.pi * 10.0
        assert abs(spontaneous_rate_ratio(x0) - 1.0) < 0.02

    def test_range_bounds(self):
        for x0 in np.geomspace(1e-3, 1e3, 400):
            r = spontaneous_rate_ratio(float(x0))
            assert 0.0 < r <= 2.0

    def test_gamma_ratio_in_result(self):
        r = vacuum_potentials(3.0)
        assert r.gamma_ratio == pytest.approx(spontaneous_rate_ratio(3.0), rel=1e-15)


class TestGroundEnergyRate:
    def test_identically_zero(self):
        assert ground_energy_rate() == 0.0
        # no distance or temperature dependence to depend on: repeated calls
        # return the same exact zero
        assert ground_energy_rate() == 0.0
        assert ground_energy_rate() == 0.0
