"""Physical constants (CODATA 2018), SI units."""

HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23      # J / K
C = 2.99792458e8        # m / s
