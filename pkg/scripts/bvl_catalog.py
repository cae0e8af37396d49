#!/usr/bin/env python3
"""Bohr-van Leeuwen consistency report for the standard material catalog.

For each dielectric model the classical (hbar -> 0) limit of the magnetic
field correlator outside a slab and of the transverse TE cavity stress must
vanish; models whose zero-frequency permittivity diverges like 1/omega^2
(plasma-like) or the ideal metal violate the theorem.

Usage:
    python3 scripts/bvl_catalog.py [--d 1e-6] [--T 300] [--z 1e-7]
"""

import argparse

from casimir_bvl import bvl, materials as M

CATALOG = [
    ("insulator(3.0)", M.insulator(3.0)),
    ("drude(1.37e16, 5.32e13)", M.drude(1.37e16, 5.32e13)),
    ("plasma(1.37e16)", M.plasma(1.37e16)),
    ("gplasma(1.37e16 + osc)", M.generalized_plasma(
        1.37e16, (M.Oscillator(2e31, 3e15, 1e14),))),
    ("ideal metal", M.ideal_metal()),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=float, default=1e-6, help="gap, m")
    ap.add_argument("--T", type=float, default=300.0, help="temperature, K")
    ap.add_argument("--z", type=float, default=1e-7, help="probe height, m")
    args = ap.parse_args(argv)

    print(f"{'model':>26} {'class':>22} {'|B|/|B_ideal|':>14} "
          f"{'e-exponent':>11} {'TE_cl [Pa]':>13} {'verdict':>8}")
    for name, model in CATALOG:
        rep = bvl.bvl_verdict(model, args.d, args.T, args.z)
        print(f"{name:>26} {rep.model_class.name:>22} "
              f"{rep.b_correlator_norm:14.4e} {rep.e_limit_exponent:11.3f} "
              f"{rep.cavity_classical_te:13.4e} {rep.verdict.value:>8}")


if __name__ == "__main__":
    main()
