import math

import numpy as np
import pytest

from atomwall.constants import C_LIGHT, EV, HBAR
from atomwall.core_types import (
    AtomSpec,
    PotentialBreakdown,
    ReducedPoint,
    SweepTable,
    atom_from_physical,
    denormalize,
    from_physical,
    thermal_wavelength,
)


class TestAtomSpec:
    def test_derived_quantities_exact(self):
        atom = atom_from_physical(lambda0_um=0.6, alpha0_A3=5.0)
        assert atom.omega0 == C_LIGHT * atom.k0
        assert atom.lambda0 * atom.k0 == pytest.approx(2.0 * math.pi, rel=1e-15)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            AtomSpec(k0=-1.0, alpha0=1e-30)
        with pytest.raises(ValueError):
            AtomSpec(k0=1e7, alpha0=0.0)
        with pytest.raises(ValueError):
            atom_from_physical(0.0, 5.0)
        with pytest.raises(ValueError):
            atom_from_physical(0.6, -2.0)


class TestFromPhysical:
    def test_room_temperature_thermal_length(self):
        # lambda_T = hbar c/(kB T): 7.6329 um at 300 K, i.e. within a fraction
        # of a percent of the conventional 7.63 um room-temperature figure
        assert thermal_wavelength(300.0) == pytest.approx(7.63e-6, rel=0.02)
        assert thermal_wavelength(300.0) == pytest.approx(7.632948397e-6, rel=1e-9)
        # mpmath 50-digit reference at 293 K (the 7.63 um figure needs 300 K)
        assert thermal_wavelength(293.0) == pytest.approx(7.815305526e-6, rel=1e-9)

    def test_x0_definition(self):
        # z = lambda0/(4 pi)  ->  x0 = 1 for any wavelength
        for lam in (0.2, 0.6, 10.0):
            _, pt = from_physical(lam, 3.0, z_um=lam / (4.0 * math.pi), T_K=0.0)
            assert pt.x0 == pytest.approx(1.0, rel=1e-14)
            assert pt.theta == 0.0

    def test_theta_from_temperature(self):
        # lambda0 = 0.6 um and k0 lambda_T = 5 (T = 4795.92 K) give theta = 0.4
        atom, pt = from_physical(0.6, 3.0, z_um=1.0, T_K=4795.922922)
        assert atom.k0 * thermal_wavelength(4795.922922) == pytest.approx(5.0, rel=1e-9)
        assert pt.theta == pytest.approx(0.4, rel=1e-9)

    def test_eta_relation(self):
        _, pt = from_physical(0.6, 3.0, z_um=2.5, T_K=300.0)
        assert pt.eta * pt.x0 * pt.theta == pytest.approx(2.0, rel=1e-14)

    def test_roundtrip_z(self):
        atom, pt = from_physical(0.78, 4.2, z_um=3.7, T_K=77.0)
        z_back = pt.x0 / (2.0 * atom.k0)
        assert z_back == pytest.approx(3.7e-6, rel=1e-12)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            from_physical(0.6, 3.0, z_um=0.0)
        with pytest.raises(ValueError):
            from_physical(0.6, 3.0, z_um=1.0, T_K=-1.0)


class TestReducedPoint:
    def test_vacuum_point(self):
        pt = ReducedPoint(x0=2.0)
        assert pt.theta == 0.0 and pt.eta is None

    def test_thermal_point_fills_eta(self):
        pt = ReducedPoint(x0=4.0, theta=0.5)
        assert pt.eta == pytest.approx(1.0, rel=1e-15)
        assert pt.z_over_lambda_t == pytest.approx(0.5, rel=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError):
            ReducedPoint(x0=0.0)
        with pytest.raises(ValueError):
            ReducedPoint(x0=1.0, theta=-0.1)
        with pytest.raises(ValueError):
            ReducedPoint(x0=1.0, theta=0.0, eta=3.0)


class TestDenormalize:
    def test_zero(self):
        atom = atom_from_physical(0.6, 5.0)
        assert denormalize(0.0, atom) == 0.0

    def test_unit_value_synthetic_atom(self):
        # alpha0 k0^3 = 1 makes the energy unit exactly hbar omega0
        k0 = 1.0e7
        atom = AtomSpec(k0=k0, alpha0=1.0 / k0**3)
        assert denormalize(1.0, atom) == pytest.approx(HBAR * C_LIGHT * k0, rel=1e-15)

    @pytest.mark.parametrize("x0", [0.5, 2.0, 17.0])
    def test_london_normalization_identity(self, x0):
        # -1/x0^3 in hbar c alpha0 k0^4 units equals -hbar omega0 alpha0/(8 z^3)
        atom = atom_from_physical(0.6, 5.0)
        z = x0 / (2.0 * atom.k0)
        lhs = denormalize(-1.0 / x0**3, atom)
        rhs = -HBAR * atom.omega0 * atom.alpha0 / (8.0 * z**3)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_ev_unit(self):
        atom = atom_from_physical(0.6, 5.0)
        assert denormalize(2.0, atom, "eV") == pytest.approx(denormalize(2.0, atom) / EV, rel=1e-15)
        with pytest.raises(ValueError):
            denormalize(1.0, atom, "erg")


class TestPotentialBreakdown:
    def test_state_totals(self):
        g = PotentialBreakdown(v_rr=-2.0, v_fr_vac=0.5, v_thermal=0.25, state="ground")
        e = PotentialBreakdown(v_rr=-2.0, v_fr_vac=0.5, v_thermal=0.25, state="excited")
        assert g.total() == pytest.approx(-1.25)
        assert e.total() == pytest.approx(-2.75)
        assert g.total() + e.total() == pytest.approx(2.0 * g.v_rr, rel=1e-15)

    def test_thermal_average_needs_theta(self):
        avg = PotentialBreakdown(v_rr=-2.0, v_fr_vac=0.5, v_thermal=0.25, state="thermal_average")
        with pytest.raises(ValueError):
            avg.total()
        got = avg.total(theta=1.0)
        assert got == pytest.approx(-2.0 + math.tanh(1.0) * 0.75, rel=1e-15)

    def test_rejects_unknown_state(self):
        with pytest.raises(ValueError):
            PotentialBreakdown(0.0, 0.0, 0.0, state="superposition")


class TestSweepTable:
    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            SweepTable(("x", "y"), ((1.0, 0.0), (1.0, 1.0)))
        with pytest.raises(ValueError):
            SweepTable(("x", "y"), ((2.0, 0.0), (1.0, 1.0)))

    def test_row_width_enforced(self):
        with pytest.raises(ValueError):
            SweepTable(("x", "y"), ((1.0,),))

    def test_good_table(self):
        t = SweepTable(("x", "y"), ((1.0, 0.0), (2.0, 1.0)), comments=("note",))
        assert len(t) == 2 and t.columns == ("x", "y")
