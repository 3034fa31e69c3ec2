"""Physical and mathematical constants.

CODATA 2018 values, SI units.  All model formulas are dimensionless; these
constants appear only at the physical-input / physical-output boundary.
"""

HBAR = 1.054571817e-34        # reduced Planck constant [J s]
C_LIGHT = 299792458.0         # speed of light [m/s] (exact)
K_BOLTZMANN = 1.380649e-23    # Boltzmann constant [J/K] (exact)
EV = 1.602176634e-19          # electron volt [J] (exact)

# Euler-Mascheroni constant, 30 significant digits
EULER_GAMMA = 0.577215664901532860606512090082

# unit conversions used at the CLI boundary
MICRON = 1e-6                 # [m]
ANGSTROM3 = 1e-30             # [m^3], polarizability volume (Gaussian convention)
