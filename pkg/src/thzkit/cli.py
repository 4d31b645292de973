"""``thzkit`` command-line front end.

Exit status: 0 on success, 1 on model/domain errors, 2 on usage errors.
Every command computes all rows before printing anything, so a failure
never leaves a partial table on stdout.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import replace
from importlib import resources

import numpy as np

from . import __version__
from .antenna import (
    AntennaSpec,
    dipole_directivity,
    resonant_frequency,
    resonant_length,
    tuning_curve,
)
from .errors import ThzkitError, UsageError
from .gating import STACK_PRESETS, GateStack, SIO2_EPS_R, operating_point
from .hypersurface import CELL_PRESETS, phase_coverage, reflection
from .linkbudget import (
    AbsorptionTable,
    LinkParams,
    absorption_loss_db,
    received_power_dbm,
    spreading_loss_db,
)
from .materials import (
    CntParams,
    CopperParams,
    GrapheneParams,
    cnt_impedance_per_length,
    cnt_sigma_intra,
    copper_drude_sigma,
    copper_skin_depth,
    copper_wave_impedance,
    graphene_sigma_intra,
    graphene_surface_impedance,
)
from .plasmonics import DielectricEnvironment, spp_exact, spp_quasistatic
from .quantities import CONST, load_config, parse_si
from .sweep import OutputRecord, parse_sweep

GRAPHENE_VALID_MAX_F = 10e12


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _q(unit):
    """argparse ``type=`` converting ``"<number><unit>"`` to SI."""

    def conv(text):
        try:
            return parse_si(text, default_unit=unit)
        except ThzkitError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    conv.__name__ = unit or "number"
    return conv


def _num(text):
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _list(unit):
    conv = _q(unit)

    def parse(text):
        return [conv(tok) for tok in text.split(",") if tok.strip()]

    return parse


# ------------------------------------------------------------ configuration

def _presets(args):
    cfg = load_config(getattr(args, "config", None))
    g = GrapheneParams()
    g = replace(
        g,
        mu_c=cfg.get("graphene.mu_c", g.mu_c),
        tau=cfg.get("graphene.tau", g.tau),
        temp=cfg.get("graphene.temp", g.temp),
    )
    c = CntParams()
    c = replace(
        c,
        radius=cfg.get("cnt.radius", c.radius),
        vf=cfg.get("cnt.vf", c.vf),
        tau=cfg.get("cnt.tau", c.tau),
    )
    cu = CopperParams(
        sigma0=cfg.get("copper.sigma0", CopperParams().sigma0),
        tau=cfg.get("copper.tau", CopperParams().tau),
    )
    env = DielectricEnvironment(cfg.get("env.eps1", 1.0), cfg.get("env.eps2", 3.9))
    return cfg, g, c, cu, env


def _graphene(args, base: GrapheneParams) -> GrapheneParams:
    return replace(
        base,
        mu_c=base.mu_c if args.mu_c is None else args.mu_c,
        tau=base.tau if args.tau is None else args.tau,
        temp=base.temp if args.temp is None else args.temp,
    )


def _cnt(args, base: CntParams) -> CntParams:
    return replace(
        base,
        radius=base.radius if args.radius is None else args.radius,
        vf=base.vf if args.vf is None else args.vf,
        tau=base.tau if args.tau is None else args.tau,
    )


def _copper(args, base: CopperParams) -> CopperParams:
    return CopperParams(
        sigma0=base.sigma0 if args.sigma0 is None else args.sigma0,
        tau=base.tau if args.tau is None else args.tau,
    )


def _env(args, base: DielectricEnvironment) -> DielectricEnvironment:
    return DielectricEnvironment(
        base.eps1 if args.eps1 is None else args.eps1,
        base.eps2 if args.eps2 is None else args.eps2,
    )


def _stack(args, cfg) -> GateStack:
    vf = args.vf if getattr(args, "vf", None) is not None else cfg.get("graphene.vf", 1.0e6)
    eps_r = args.eps_r if args.eps_r is not None else cfg.get("gate.eps_r", SIO2_EPS_R)
    if args.cox is not None:
        return GateStack.from_cox(args.cox, eps_r, vf)
    if args.thickness is not None:
        return GateStack.from_oxide(args.thickness, eps_r, vf)
    if "gate.cox" in cfg:
        return GateStack.from_cox(cfg["gate.cox"], eps_r, vf)
    if "gate.thickness" in cfg:
        return GateStack.from_oxide(cfg["gate.thickness"], eps_r, vf)
    return replace(STACK_PRESETS[args.stack], vf=vf)


def _freqs(args, default_sweep=None):
    if args.f_sweep is not None:
        return parse_sweep(args.f_sweep, "f", default_unit="THz").values()
    if args.f is not None:
        return np.array([args.f])
    if default_sweep is not None:
        return parse_sweep(default_sweep, "f", default_unit="THz").values()
    raise UsageError("give --f or --f-sweep")


def _vgs(args):
    if args.vg_sweep is not None:
        return parse_sweep(args.vg_sweep, "vg", default_unit="V").values()
    if args.vg is not None:
        return np.array(args.vg)
    raise UsageError("give --vg or --vg-sweep")


def _warn_graphene_range(freqs, err):
    if np.any(np.asarray(freqs) > GRAPHENE_VALID_MAX_F):
        print("warning: graphene intraband model is not validated above 10 THz "
              "(interband conductivity ignored)", file=err)


# ----------------------------------------------------------------- commands

def cmd_material(args, err):
    cfg, g0, c0, cu0, _ = _presets(args)
    freqs = _freqs(args)
    mat = args.material
    meta = {"command": f"material {args.quantity}", "material": mat}
    if mat == "graphene":
        p = _graphene(args, g0)
        meta.update(mu_c_J=p.mu_c, tau_s=p.tau, temp_K=p.temp)
        _warn_graphene_range(freqs, err)
    elif mat == "cnt":
        p = _cnt(args, c0)
        meta.update(radius_m=p.radius, vf_m_per_s=p.vf, tau_s=p.tau)
    else:
        p = _copper(args, cu0)
        meta.update(sigma0_S_per_m=p.sigma0, tau_s=p.tau)

    if args.quantity == "sigma":
        fn = {"graphene": graphene_sigma_intra, "cnt": cnt_sigma_intra, "copper": copper_drude_sigma}[mat]
        unit = "S_per_m" if mat == "copper" else "S"
        rec = OutputRecord(["f_THz", f"re_sigma_{unit}", f"im_sigma_{unit}"], meta=meta)
        for f in freqs:
            s = complex(fn(f, p))
            rec.add(f / 1e12, s.real, s.imag)
    elif args.quantity == "impedance":
        fn = {"graphene": graphene_surface_impedance, "cnt": cnt_impedance_per_length,
              "copper": copper_wave_impedance}[mat]
        unit = {"graphene": "ohm_per_sq", "cnt": "ohm_per_m", "copper": "ohm"}[mat]
        rec = OutputRecord(["f_THz", f"re_z_{unit}", f"im_z_{unit}"], meta=meta)
        for f in freqs:
            z = complex(fn(f, p).z)
            rec.add(f / 1e12, z.real, z.imag)
    else:
        if mat != "copper":
            raise UsageError("skin-depth is defined for --material copper only")
        rec = OutputRecord(["f_THz", "skin_depth_nm"], meta=meta)
        for f in freqs:
            rec.add(f / 1e12, copper_skin_depth(f, p) * 1e9)
    return rec


def cmd_spp(args, err):
    _, g0, _, _, env0 = _presets(args)
    p = _graphene(args, g0)
    env = _env(args, env0)
    freqs = _freqs(args)
    _warn_graphene_range(freqs, err)
    solver = spp_exact if args.model == "exact" else spp_quasistatic
    rec = OutputRecord(
        ["f_THz", "re_kspp", "im_kspp", "lambda_spp_um", "confinement", "prop_length_um"],
        meta={"command": "spp", "model": args.model, "mu_c_J": p.mu_c, "tau_s": p.tau,
              "temp_K": p.temp, "eps1": env.eps1, "eps2": env.eps2},
    )
    for f in freqs:
        m = solver(float(f), graphene_sigma_intra(float(f), p), env)
        rec.add(f / 1e12, m.k_spp.real, m.k_spp.imag, m.lambda_spp * 1e6, m.confinement,
                m.prop_length * 1e6)
    return rec


def cmd_tune(args, err):
    cfg, *_ = _presets(args)
    stack = _stack(args, cfg)
    rec = OutputRecord(
        ["vg_V", "n_per_cm2", "E_MV_per_cm", "mu_c_eV"],
        meta={"command": "tune", "cox_F_per_m2": stack.cox, "vf_m_per_s": stack.vf,
              "oxide_thickness_m": stack.oxide_thickness if stack.oxide_thickness else "none"},
    )
    for vg in _vgs(args):
        op = operating_point(float(vg), stack)
        field = op.e_field_mv_per_cm if op.e_field is not None else math.nan
        rec.add(op.vg, op.n_per_cm2, field, op.mu_c_ev)
    return rec


def _antenna_material(args, g0, c0, cu0):
    if args.material == "graphene":
        return _graphene(args, g0)
    if args.material == "cnt":
        return _cnt(args, c0)
    return _copper(args, cu0)


def cmd_antenna(args, err):
    cfg, g0, c0, cu0, env0 = _presets(args)
    action = args.action
    if action == "reference":
        text = resources.files("thzkit").joinpath("data/fem_reference.csv").read_text(encoding="utf-8")
        return text
    if action == "directivity":
        if args.keff_l is None:
            raise UsageError("give --keff-l")
        d = dipole_directivity(1.0, args.keff_l)
        rec = OutputRecord(["keff_l", "directivity_dBi", "directivity_linear"],
                           meta={"command": "antenna directivity"})
        rec.add(args.keff_l, d, 10 ** (d / 10))
        return rec
    env = _env(args, env0)
    if action == "tune":
        if args.length is None:
            raise UsageError("give --length")
        stack = _stack(args, cfg)
        g = _graphene(args, g0)
        curve = tuning_curve(args.length, stack, _vgs(args), env, tau=g.tau, temp=g.temp)
        rec = OutputRecord(["vg_V", "mu_c_eV", "f_r_THz"],
                           meta={"command": "antenna tune", "length_m": args.length,
                                 "cox_F_per_m2": stack.cox, "vf_m_per_s": stack.vf,
                                 "tau_s": g.tau, "temp_K": g.temp, "eps1": env.eps1, "eps2": env.eps2})
        for pt in curve:
            rec.add(pt.vg, pt.mu_c / CONST.e, pt.f_r / 1e12)
        return rec
    mat = _antenna_material(args, g0, c0, cu0)
    meta = {"command": f"antenna {action}", "material": args.material, "eps1": env.eps1,
            "eps2": env.eps2, "mode_order": args.mode_order, "cnt_layout": args.cnt_layout,
            "copper_model": args.copper_model}
    if action == "length":
        freqs = _freqs(args)
        rec = OutputRecord(["f_THz", "length_um", "miniaturization"], meta=meta)
        for f in freqs:
            length = resonant_length(float(f), mat, env, args.mode_order, args.cnt_layout,
                                     args.copper_model)
            rec.add(f / 1e12, length * 1e6, CONST.c0 / f / length)
        return rec
    if args.length is None:
        raise UsageError("give --length")
    spec = AntennaSpec(mat, args.length, env, args.mode_order, args.cnt_layout,
                       copper_model=args.copper_model)
    r = resonant_frequency(spec)
    meta["length_m"] = args.length
    rec = OutputRecord(["length_um", "f_r_THz", "lambda_eff_um", "miniaturization"], meta=meta)
    rec.add(args.length * 1e6, r.f_r / 1e12, r.lambda_eff * 1e6, r.miniaturization)
    return rec


def cmd_link(args, err):
    if args.absorption_file:
        table = AbsorptionTable.from_csv(args.absorption_file)
    else:
        table = AbsorptionTable.transparent()
    if args.d_sweep is not None:
        distances = parse_sweep(args.d_sweep, "d", default_unit="m").values()
    elif args.d is not None:
        distances = [args.d]
    else:
        raise UsageError("give --d or --d-sweep")
    rec = OutputRecord(
        ["f_Hz", "d_m", "spreading_loss_dB", "absorption_loss_dB", "total_path_loss_dB",
         "received_power_dBm"],
        meta={"command": "link", "f_Hz": args.f, "ptx_dBm": args.ptx, "gt_dBi": args.gt,
              "gr_dBi": args.gr, "absorption_file": args.absorption_file or "none"},
    )
    for d in distances:
        link = LinkParams(args.f, float(d), args.ptx, args.gt, args.gr)
        a_s = float(spreading_loss_db(link.f, link.d))
        a_ma = float(absorption_loss_db(link.f, link.d, table))
        rec.add(link.f, link.d, a_s, a_ma, a_s + a_ma, received_power_dbm(link, table))
    if args.out is None:
        args.out = "csv" if args.d_sweep is not None else "json"
    return rec


def cmd_hsf(args, err):
    cell = CELL_PRESETS[args.preset]
    g = cell.graphene
    g = replace(g, mu_c=g.mu_c if args.mu_c is None else args.mu_c,
                tau=g.tau if args.tau is None else args.tau)
    cell = replace(
        cell,
        graphene=g,
        slab_thickness=cell.slab_thickness if args.thickness is None else args.thickness,
        slab_rel_permittivity=cell.slab_rel_permittivity if args.eps_r is None else args.eps_r,
        fill_factor=cell.fill_factor if args.fill is None else args.fill,
    )
    meta = {"command": f"hsf {args.action}", "preset": args.preset,
            "slab_thickness_m": cell.slab_thickness, "eps_r": cell.slab_rel_permittivity,
            "fill_factor": cell.fill_factor, "tau_s": g.tau, "theta_rad": args.theta, "pol": args.pol}
    if args.action == "coverage":
        f = args.f if args.f is not None else 1e12
        sweep = parse_sweep(args.mu_c_sweep, "mu_c", default_unit="eV")
        mus = sweep.values()
        cov = phase_coverage(f, cell, mus, args.theta, args.pol)
        meta.update(mu_c_start_J=sweep.start, mu_c_stop_J=sweep.stop)
        rec = OutputRecord(["f_THz", "theta_deg", "n_bias", "coverage_deg"], meta=meta)
        rec.add(f / 1e12, math.degrees(args.theta), len(mus), cov)
        return rec
    meta["mu_c_J"] = g.mu_c
    freqs = _freqs(args, default_sweep="0.5:1.5:0.005THz")
    rec = OutputRecord(["f_THz", "re_gamma", "im_gamma", "efficiency", "phase_deg"], meta=meta)
    for f in freqs:
        s = reflection(float(f), cell, args.theta, args.pol)
        rec.add(f / 1e12, s.gamma.real, s.gamma.imag, s.efficiency, s.phase_deg)
    return rec


# ------------------------------------------------------------------ parsers

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="key=value config file (default: $THZKIT_CONFIG)")
    common.add_argument("--out", choices=("csv", "json"), default=None)

    freq = _Parser(add_help=False)
    freq.add_argument("--f", type=_q("THz"), help="single frequency, e.g. 1THz")
    freq.add_argument("--f-sweep", help="start:stop:step<unit> or start:stop/count<unit>")

    graphene = _Parser(add_help=False)
    graphene.add_argument("--mu-c", type=_q("eV"), help="chemical potential, e.g. 0.3eV")
    graphene.add_argument("--tau", type=_q("ps"), help="relaxation time, e.g. 1ps")
    graphene.add_argument("--temp", type=_q("K"), help="temperature, e.g. 300K")

    tube = _Parser(add_help=False)
    tube.add_argument("--radius", type=_q("nm"))
    tube.add_argument("--vf", type=_q("m/s"))
    tube.add_argument("--sigma0", type=_q("S/m"))

    env = _Parser(add_help=False)
    env.add_argument("--eps1", type=_num)
    env.add_argument("--eps2", type=_num)

    gate = _Parser(add_help=False)
    gate.add_argument("--stack", choices=sorted(STACK_PRESETS), default="table2")
    gate.add_argument("--cox", type=_q("F/m²"))
    gate.add_argument("--thickness", type=_q("nm"), help="oxide thickness")
    gate.add_argument("--eps-r", type=_num, help="oxide relative permittivity")
    gate.add_argument("--vg", type=_list("V"), help="comma-separated gate voltages")
    gate.add_argument("--vg-sweep", help="start:stop:step, volts")

    root = _Parser(prog="thzkit", description=__doc__.splitlines()[0])
    root.add_argument("--version", action="version", version=f"thzkit {__version__}")
    sub = root.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("material", parents=[common, freq, graphene, tube], help="conductivity/impedance")
    p.add_argument("quantity", choices=("sigma", "impedance", "skin-depth"))
    p.add_argument("--material", choices=("graphene", "cnt", "copper"), default="graphene")
    p.set_defaults(func=cmd_material)

    p = sub.add_parser("spp", parents=[common, freq, graphene, env], help="graphene SPP dispersion")
    p.add_argument("--model", choices=("exact", "quasistatic"), default="exact")
    p.set_defaults(func=cmd_spp)

    p = sub.add_parser("tune", parents=[common, gate], help="gate voltage -> chemical potential")
    p.set_defaults(func=cmd_tune, vf=None)

    p = sub.add_parser("antenna", parents=[common, freq, graphene, tube, env, gate],
                       help="dipole resonance, tuning, directivity")
    p.add_argument("action", choices=("resonance", "length", "tune", "directivity", "reference"))
    p.add_argument("--material", choices=("graphene", "cnt", "copper"), default="graphene")
    p.add_argument("--length", type=_q("μm"))
    p.add_argument("--mode-order", type=int, default=1)
    p.add_argument("--cnt-layout", choices=("film", "wire"), default="film")
    p.add_argument("--copper-model", choices=("free", "averaged"), default="free")
    p.add_argument("--keff-l", type=_num, help="electrical length k_eff*L in radians")
    p.set_defaults(func=cmd_antenna)

    p = sub.add_parser("link", parents=[common], help="THz path loss and received power")
    p.add_argument("--f", type=_q("THz"), required=True)
    p.add_argument("--d", type=_q("m"))
    p.add_argument("--d-sweep")
    p.add_argument("--absorption-file")
    p.add_argument("--ptx", type=_q("dBm"), default=0.0)
    p.add_argument("--gt", type=_q("dBi"), default=0.0)
    p.add_argument("--gr", type=_q("dBi"), default=0.0)
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("hsf", parents=[common, freq], help="graphene hypersurface reflection")
    p.add_argument("action", nargs="?", choices=("sweep", "coverage"), default="sweep")
    p.add_argument("--preset", choices=sorted(CELL_PRESETS), default="fig4")
    p.add_argument("--theta", type=_q("deg"), default=0.0)
    p.add_argument("--pol", choices=("TE", "TM"), default="TM")
    p.add_argument("--mu-c", type=_q("eV"))
    p.add_argument("--tau", type=_q("ps"))
    p.add_argument("--thickness", type=_q("μm"))
    p.add_argument("--eps-r", type=_num)
    p.add_argument("--fill", type=_num)
    p.add_argument("--mu-c-sweep", default="0.1:1.0:0.02eV")
    p.set_defaults(func=cmd_hsf)
    return root


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    if not argv:
        err.write(parser.format_usage())
        return 2
    try:
        args = parser.parse_args(argv)
        result = args.func(args, err)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ThzkitError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except FileNotFoundError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    if isinstance(result, str):
        out.write(result)
    elif args.out == "json":
        out.write(result.to_json(__version__))
    else:
        out.write(result.to_csv(__version__))
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
