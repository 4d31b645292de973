"""Exact vs quasi-static graphene plasmon dispersion for a few chemical potentials."""
import numpy as np

from thzkit.errors import ModeNotBoundError
from thzkit.materials import GrapheneParams, graphene_sigma_intra
from thzkit.plasmonics import AIR_SIO2, spp_exact, spp_quasistatic
from thzkit.quantities import CONST


def main():
    freqs = np.array([0.5, 1, 2, 3, 5, 8]) * 1e12
    print("mu_c_eV,f_THz,confinement_exact,confinement_qs,lambda_spp_um,prop_length_um")
    for mu in (0.1, 0.3, 0.6):
        p = GrapheneParams(mu_c=mu * CONST.e, tau=1e-12)
        for f in freqs:
            s = graphene_sigma_intra(f, p)
            ex = spp_exact(f, s, AIR_SIO2)
            try:
                qs = f"{spp_quasistatic(f, s, AIR_SIO2).confinement:.4f}"
            except ModeNotBoundError:
                qs = "unbound"  # quasi-static index below the substrate light line
            print(f"{mu},{f / 1e12:g},{ex.confinement:.4f},{qs},"
                  f"{ex.lambda_spp * 1e6:.3f},{ex.prop_length * 1e6:.3f}")


if __name__ == "__main__":
    main()
