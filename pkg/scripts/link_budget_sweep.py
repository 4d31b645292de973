"""Path loss vs distance at a few carrier frequencies.

Uses the synthetic absorption table shipped with the package unless
--absorption points at a real ``f_hz,k_per_m`` file.
"""
import argparse
from importlib import resources

import numpy as np

from thzkit.linkbudget import AbsorptionTable, absorption_loss_db, spreading_loss_db


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--absorption", help="absorption CSV (f_hz,k_per_m)")
    ap.add_argument("--freqs", default="0.3,0.557,1.0,3.0", help="comma-separated THz values")
    args = ap.parse_args()
    if args.absorption:
        table = AbsorptionTable.from_csv(args.absorption)
    else:
        text = resources.files("thzkit").joinpath("data/absorption_example.csv").read_text()
        table = AbsorptionTable.parse_csv(text)
    distances = np.array([0.1, 1.0, 10.0, 100.0])
    print("f_THz," + ",".join(f"A_s@{d:g}m,A_ma@{d:g}m" for d in distances))
    for f_thz in (float(x) for x in args.freqs.split(",")):
        f = f_thz * 1e12
        cells = []
        for d in distances:
            cells += [f"{spreading_loss_db(f, d):.2f}", f"{absorption_loss_db(f, d, table):.3f}"]
        print(f"{f_thz:g}," + ",".join(cells))


if __name__ == "__main__":
    main()
