"""Reflection phase and efficiency of the default hypersurface cell over (f, mu_c).

Writes a long-format CSV (f_THz, mu_c_eV, efficiency, phase_deg) to stdout
or --out, and reports the phase coverage at the design frequency.
"""
import argparse
import sys

import numpy as np

from thzkit.hypersurface import DEFAULT_CELL, gamma_from_sigma, phase_coverage
from thzkit.materials import graphene_sigma_intra
from thzkit.quantities import CONST


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="CSV path (default stdout)")
    ap.add_argument("--theta", type=float, default=0.0, help="incidence angle, degrees")
    ap.add_argument("--pol", default="TM", choices=("TE", "TM"))
    args = ap.parse_args()

    cell = DEFAULT_CELL
    theta = np.radians(args.theta)
    freqs = np.linspace(0.5e12, 1.5e12, 101)
    mus = np.arange(0.1, 1.0 + 1e-9, 0.02)
    sink = open(args.out, "w") if args.out else sys.stdout
    sink.write("f_THz,mu_c_eV,efficiency,phase_deg\n")
    for mu in mus:
        sigma = graphene_sigma_intra(freqs, cell.with_mu_c(mu * CONST.e).graphene)
        g = gamma_from_sigma(freqs, sigma, cell.slab_thickness, cell.slab_rel_permittivity, theta, args.pol)
        for f, gi in zip(freqs, g):
            sink.write(f"{f / 1e12:.4f},{mu:.2f},{abs(gi) ** 2:.6f},{np.degrees(np.angle(gi)):.3f}\n")
    if args.out:
        sink.close()
    cov = phase_coverage(1e12, cell, mus * CONST.e, theta, args.pol)
    print(f"phase coverage at 1 THz: {cov:.1f} deg", file=sys.stderr)


if __name__ == "__main__":
    main()
