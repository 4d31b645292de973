"""Gate bias -> carrier density -> chemical potential for the fitted SiO2 stack.

Prints the model next to the published bias table and the relative errors.
"""
from thzkit.gating import BIAS_TABLE_ROWS, BIAS_TABLE_STACK, fit_cox, operating_point


def main():
    stack = BIAS_TABLE_STACK
    print(f"fitted cox = {fit_cox():.5e} F/m^2  ->  t_ox = {stack.oxide_thickness * 1e9:.2f} nm (eps_r 3.9)")
    print(f"{'Vg':>6} {'n model':>11} {'n ref':>9} {'E model':>8} {'E ref':>6} {'mu model':>9} {'mu ref':>6}")
    for vg, n_ref, e_ref, mu_ref in BIAS_TABLE_ROWS:
        op = operating_point(vg, stack)
        print(f"{vg:6.1f} {op.n_per_cm2:11.4e} {n_ref:9.2e} {op.e_field_mv_per_cm:8.3f} {e_ref:6.2f} "
              f"{op.mu_c_ev:9.4f} {mu_ref:6.2f}")


if __name__ == "__main__":
    main()
