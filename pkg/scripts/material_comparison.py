"""Dipole resonance of graphene, CNT-film and copper antennas.

Compares resonant lengths at a fixed frequency and resonant frequencies at
a fixed length, then prints the shipped full-wave reference rows beside them.
"""
import argparse

from thzkit.antenna import AntennaSpec, fem_reference_rows, resonant_frequency, resonant_length
from thzkit.materials import CntParams, CopperParams, GrapheneParams
from thzkit.plasmonics import DielectricEnvironment

MATERIALS = {"graphene": GrapheneParams(), "cnt": CntParams(), "copper": CopperParams()}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--f", type=float, default=1.0, help="design frequency, THz")
    ap.add_argument("--length", type=float, default=71.0, help="fixed dipole length, um")
    ap.add_argument("--eps2", type=float, default=3.9, help="substrate permittivity")
    args = ap.parse_args()
    env = DielectricEnvironment(1.0, args.eps2)
    lam0 = 299792458.0 / (args.f * 1e12)

    print(f"resonant length at {args.f:g} THz")
    for name, mat in MATERIALS.items():
        length = resonant_length(args.f * 1e12, mat, env)
        print(f"  {name:9s} {length * 1e6:7.1f} um   lambda0/{lam0 / length:.2f}")

    print(f"resonant frequency at L = {args.length:g} um")
    for name, mat in MATERIALS.items():
        r = resonant_frequency(AntennaSpec(mat, args.length * 1e-6, env))
        print(f"  {name:9s} {r.f_r / 1e12:7.3f} THz  miniaturization {r.miniaturization:.2f}")

    print("full-wave reference (not computed here)")
    for row in fem_reference_rows():
        if row["study"] != "gate_tuning":
            print(f"  {row['study']:15s} {row['material']:9s} L={row['length_um']:>4s} um "
                  f"f_r={row['f_r_THz']} THz D={row['directivity_dBi']} dBi")


if __name__ == "__main__":
    main()
