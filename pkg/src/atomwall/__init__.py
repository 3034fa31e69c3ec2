"""Dispersive potentials of a two-level atom near a perfectly conducting wall.

Vacuum (van der Waals and resonant) and thermal contributions, their
radiation-reaction / field-fluctuation decomposition, the modified
spontaneous-emission rate, and the closed-form asymptotic regimes, all as
functions of the two dimensionless controls x0 = 2 k0 z and
theta = 2 kB T/(hbar omega0).  Potentials are normalized by
hbar*c*alpha0*k0^4.

The scalar special-function kernels run on a compiled extension when it is
available (`atomwall.specfun.BACKEND_NAME` tells which backend is live;
ATOMWALL_PURE_PYTHON=1 forces the pure fallback).
"""
from .core_types import (
    AtomSpec,
    PotentialBreakdown,
    ReducedPoint,
    SweepTable,
    atom_from_physical,
    denormalize,
    from_physical,
    thermal_wavelength,
)
from .quadrature import (
    IntegralResult,
    QuadratureError,
    QuadratureSpec,
    abel_extrapolate,
    adaptive_semi_infinite,
    apm_identity,
    pv_integrate,
)
from .specfun import (
    BACKEND_NAME,
    DEFAULT_POLICY,
    Ci,
    EvalPolicy,
    H0,
    H0rr,
    aux_F,
    aux_Gcal,
    geom_G,
    si,
)
from .thermal import (
    BernoulliTable,
    ThermalResult,
    bose_occupation,
    delta_T_terms,
    lifshitz,
    p_ground,
    thermal_potentials,
    v_average,
    v_average_lowT,
    v_closed,
    v_T_quadrature,
    v_T_smallz,
)
from .vacuum import (
    VacuumResult,
    asymptotic_cp,
    asymptotic_lvdw,
    asymptotic_resonant,
    ground_energy_rate,
    resonance_extremum,
    spontaneous_rate_ratio,
    v0fr,
    v0rr,
    vacuum_potentials,
)

__version__ = "0.1.0"

__all__ = [
    "AtomSpec", "ReducedPoint", "PotentialBreakdown", "SweepTable",
    "atom_from_physical", "from_physical", "denormalize", "thermal_wavelength",
    "EvalPolicy", "DEFAULT_POLICY", "BACKEND_NAME",
    "si", "Ci", "aux_F", "aux_Gcal", "geom_G", "H0", "H0rr",
    "QuadratureSpec", "IntegralResult", "QuadratureError",
    "adaptive_semi_infinite", "pv_integrate", "apm_identity", "abel_extrapolate",
    "VacuumResult", "v0rr", "v0fr", "vacuum_potentials",
    "asymptotic_lvdw", "asymptotic_cp", "asymptotic_resonant",
    "spontaneous_rate_ratio", "ground_energy_rate", "resonance_extremum",
    "ThermalResult", "BernoulliTable", "bose_occupation",
    "v_T_quadrature", "v_T_smallz", "lifshitz", "delta_T_terms", "v_closed",
    "p_ground", "v_average", "v_average_lowT", "thermal_potentials",
    "__version__",
]
