"""Command-line front end: every simulation as a subcommand.

Usage: donorspin <command> [options]

Parameters resolve in three layers: built-in defaults, then the JSON config
file section named after the command (--config file.json), then explicit
flags.  Every run writes its fully-resolved parameter set (including the
seed) into the JSON report, so re-running from that record reproduces the
output byte for byte.

Grids use start:stop:count syntax, and scalar values accept SI-suffixed
quantities such as 70uT, 2.9um, 50ms, 4uW.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

import argparse
import json
import os
import re
import sys

import numpy as np

from . import cavity, coherence, optics, spincore

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


class ConfigError(ValueError):
    pass


class NumericalFailure(RuntimeError):
    pass


_SI_PREFIX = {"p": 1e-12, "n": 1e-9, "u": 1e-6, "m": 1e-3,
              "k": 1e3, "M": 1e6, "G": 1e9}
_UNITS = ("T", "W", "s", "Hz", "m", "D")


def parse_quantity(text):
    """Parse '70uT', '2.9um', '1.5e-3', '50ms' ... into a float (SI base units)."""
    if isinstance(text, (int, float)):
        return float(text)
    s = str(text).strip()
    if s.lower() in ("inf", "infinity"):
        return float("inf")
    m = re.fullmatch(r"([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)\s*([pnumkMG]?)(%s)?" % "|".join(_UNITS), s)
    if not m:
        raise ConfigError(f"cannot parse quantity {text!r}")
    value = float(m.group(1))
    prefix = m.group(2)
    # bare 'm' with no unit is the metre, not the milli prefix
    if prefix and not m.group(3):
        if prefix == "m":
            return value
        raise ConfigError(f"SI prefix without unit in {text!r}")
    if prefix:
        value *= _SI_PREFIX[prefix]
    return value


def parse_grid(text):
    """start:stop:count grid specification (endpoints may carry SI suffixes)."""
    if isinstance(text, (list, tuple, np.ndarray)):
        return np.asarray([parse_quantity(v) for v in text])
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be start:stop:count, got {text!r}")
    start, stop = parse_quantity(parts[0]), parse_quantity(parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise ConfigError(f"grid count must be an integer in {text!r}") from None
    if count < 2 or not stop > start:
        raise ConfigError(f"grid needs stop > start and count >= 2: {text!r}")
    return np.linspace(start, stop, count)


def parse_int_list(text):
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    try:
        return [int(v) for v in str(text).split(",")]
    except ValueError:
        raise ConfigError(f"expected comma-separated integers, got {text!r}") from None


def parse_pair_list(text):
    """'S0-T0,S0-T+' -> [('S0','T0'), ('S0','T+')]."""
    if isinstance(text, (list, tuple)) and all(isinstance(v, (list, tuple)) for v in text):
        return [(str(a), str(b)) for a, b in text]
    pairs = []
    for item in str(text).split(","):
        bits = item.split("-", 1)
        if len(bits) != 2 or not bits[0] or not bits[1]:
            raise ConfigError(f"pair must be written a-b, got {item!r}")
        pairs.append((bits[0], bits[1]))
    return pairs


def _spin_system(params):
    name = params["isotope"]
    if name not in spincore.SPIN_PRESETS:
        raise ConfigError(
            f"unknown isotope {name!r}; preset table has {sorted(spincore.SPIN_PRESETS)}")
    base = spincore.SPIN_PRESETS[name]
    overrides = {k: params[k] for k in ("g_e", "g_n", "A") if params.get(k) is not None}
    if params.get("I") is not None:
        overrides["I"] = params["I"]
    if overrides:
        kw = {"g_e": base.g_e, "g_n": base.g_n, "I": base.I, "A": base.A}
        kw.update(overrides)
        return spincore.SpinSystem(**kw)
    return base


def _apply_worker_cap():
    cap = os.environ.get("DONORSPIN_MAX_WORKERS")
    if cap:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, cap)


# ---------------------------------------------------------------------------
# option tables: name -> (parser, default, help)

_COMMON_SPIN = {
    "isotope": (str, "77Se", "preset isotope name"),
    "g_e": (parse_quantity, None, "override electron g-factor"),
    "g_n": (parse_quantity, None, "override nuclear g-factor"),
    "A": (parse_quantity, None, "override hyperfine constant (Hz)"),
    "I": (parse_quantity, None, "override nuclear spin quantum number"),
}

_OPTIONS = {
    "breit-rabi": {
        **_COMMON_SPIN,
        "bmin": (parse_quantity, 0.0, "sweep start field (T)"),
        "bmax": (parse_quantity, 200e-6, "sweep end field (T)"),
        "points": (int, 201, "number of field points"),
        "pairs": (parse_pair_list, [("S0", "T-"), ("S0", "T0"), ("S0", "T+")],
                  "transition label pairs, e.g. S0-T0,S0-T+"),
        "out": (str, "breit_rabi.csv", "output CSV path"),
    },
    "clock-find": {
        **_COMMON_SPIN,
        "pair": (parse_pair_list, [("S0", "T0")], "transition pair"),
        "bmin": (parse_quantity, 0.0, "search range start (T)"),
        "bmax": (parse_quantity, 1e-3, "search range end (T)"),
        "scan-points": (int, 257, "derivative scan grid size"),
        "report": (str, "clock.json", "output JSON path"),
    },
    "pulse": {
        "f0": (parse_quantity, 1.66e9, "qubit frequency (Hz)"),
        "omega-r": (parse_quantity, 2 * np.pi * 1e3, "Rabi angular frequency (rad/s)"),
        "amplitude": (parse_quantity, 1.0, "drive amplitude (rabi)"),
        "t1": (parse_quantity, float("inf"), "longitudinal relaxation time (s)"),
        "t2": (parse_quantity, float("inf"), "intrinsic coherence time (s)"),
        "stretch": (parse_quantity, 1.0, "intrinsic decay exponent"),
        "detuning": (parse_quantity, 0.0, "Ramsey detuning (Hz)"),
        "sigma-qs": (parse_quantity, 0.0, "quasi-static detuning spread (rad/s)"),
        "alpha": (parse_quantity, 1.0, "power-law noise exponent"),
        "s0": (parse_quantity, 0.0, "power-law spectral amplitude"),
        "taus": (parse_grid, np.linspace(1e-3, 1.0, 41), "delay/duration grid (s), start:stop:count"),
        "thetas": (parse_grid, np.linspace(0.0, 2 * np.pi, 41), "tip-angle grid (rad)"),
        "n": (parse_int_list, [1, 2, 4, 8], "CPMG pulse counts"),
        "trajectories": (int, 2000, "Monte-Carlo trajectory count"),
        "seed": (int, 0, "RNG seed"),
        "out": (str, "pulse.csv", "output CSV path"),
        "report": (str, "pulse.json", "fit report JSON path"),
    },
    "polarize": {
        "power": (parse_quantity, 4e-6, "pump power (W)"),
        "ref-power": (parse_quantity, 4e-6, "calibration reference power (W)"),
        "time-constant": (parse_quantity, 50e-3, "depletion time constant at ref power (s)"),
        "branch-back": (parse_quantity, 0.0, "branch-back probability"),
        "pumped": (str, "triplet", "pumped manifold: singlet|triplet"),
        "times": (parse_grid, np.linspace(0.0, 0.5, 101), "time grid (s)"),
        "out": (str, "polarize.csv", "output CSV path"),
        "report": (str, "polarize.json", "report JSON path"),
    },
    "spectrum": {
        "center": (parse_quantity, 3446.0, "line center (cm^-1)"),
        "fwhm": (parse_quantity, 0.007, "Lorentzian FWHM (cm^-1)"),
        "lines": (str, None, "JSON file with a line table (overrides center/fwhm)"),
        "p-singlet": (parse_quantity, 0.5, "singlet population"),
        "grid": (parse_grid, None, "wavenumber grid (cm^-1); default center +- 0.1"),
        "lambda0": (parse_quantity, 2.9e-6, "cavity resonance wavelength (m)"),
        "q": (parse_quantity, 1e5, "cavity quality factor"),
        "v-rel": (parse_quantity, 0.1, "mode volume in (lambda/n)^3"),
        "index": (parse_quantity, 3.45, "refractive index"),
        "dipole": (parse_quantity, 1.3, "transition dipole (Debye)"),
        "gamma": (parse_quantity, 2 * np.pi * 209.8547206e6, "emitter linewidth (rad/s)"),
        "b-field": (parse_quantity, 0.0, "magnetic field (T)"),
        "delta-tune": (parse_quantity, 0.0, "excited-state tuning (rad/s)"),
        "spin": (str, "coupled", "spin state: coupled|uncoupled"),
        "span": (parse_quantity, 6.0, "cavity scan half-span in units of g"),
        "points": (int, 2001, "cavity scan grid size"),
        "out": (str, "spectrum.csv", "output CSV path"),
    },
    "readout": {
        "ton": (parse_quantity, 0.01, "transmission, coupled spin"),
        "toff": (parse_quantity, 0.9, "transmission, uncoupled spin"),
        "photons": (parse_quantity, 100.0, "mean incident photon number"),
        "t1spin": (parse_quantity, float("inf"), "spin T1 (s)"),
        "window": (parse_quantity, 0.0, "integration window (s)"),
        "report": (str, "readout.json", "output JSON path"),
    },
    "straggle": {
        "sigma": (parse_quantity, 80e-9, "implantation straggle std (m)"),
        "halfwidth": (parse_quantity, 425e-9, "mode half-width lambda/2n (m)"),
        "profile": (str, "cosine", "mode profile: cosine|gaussian"),
        "samples": (int, 100_000, "Monte-Carlo sample count"),
        "seed": (int, 0, "RNG seed"),
        "report": (str, "straggle.json", "output JSON path"),
    },
    "plot": {
        "csv": (str, None, "input CSV (breit-rabi, trace, or spectrum schema)"),
        "csv2": (str, None, "optional second CSV to overlay"),
        "kind": (str, "auto", "plot kind: auto|breit-rabi|trace|spectrum|cavity"),
        "out": (str, "plot.svg", "output vector-graphics path"),
    },
}

_PULSE_KINDS = ("rabi", "ramsey", "hahn", "cpmg", "t1", "tipangle")
_SPECTRUM_KINDS = ("absorption", "cavity")


def _resolve(command, args, extra_key=None):
    """defaults <- config-file section <- CLI flags; reject unknown file keys."""
    table = _OPTIONS[command]
    params = {k: default for k, (_, default, _) in table.items()}
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config file: {e}") from None
        section = cfg.get(command, {})
        if not isinstance(section, dict):
            raise ConfigError(f"config section {command!r} must be an object")
        for key, value in section.items():
            if key not in table:
                raise ConfigError(f"unknown config key {key!r} in section {command!r}")
            parser = table[key][0]
            params[key] = parser(value)
    for key in table:
        flag = key.replace("-", "_")
        value = getattr(args, flag, None)
        if value is not None:
            params[key] = table[key][0](value)
    if extra_key is not None:
        params[extra_key[0]] = extra_key[1]
    return params


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return "inf" if np.isposinf(v) else v
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _write_report(path, command, params, results):
    record = {"command": command, "resolved_config": _jsonable(params),
              "results": _jsonable(results)}
    with open(path, "w") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# command implementations


def cmd_breit_rabi(args):
    p = _resolve("breit-rabi", args)
    sys_ = _spin_system(p)
    grid, freqs = spincore.field_sweep(sys_, p["bmin"], p["bmax"], p["points"], p["pairs"])
    spincore.sweep_to_csv(p["out"], grid, freqs, p["pairs"])
    print(f"wrote {p['out']} ({p['points']} rows)")


def cmd_clock_find(args):
    p = _resolve("clock-find", args)
    sys_ = _spin_system(p)
    pair = p["pair"][0]
    points = spincore.find_clock_transition(sys_, pair, (p["bmin"], p["bmax"]),
                                            n_scan=p["scan-points"])
    results = [{"B_cl_T": c.B_cl, "f_Hz": c.f, "dfdB_Hz_per_T": c.d1,
                "d2fdB2_Hz_per_T2": c.d2, "fd_step_T": c.fd_step} for c in points]
    _write_report(p["report"], "clock-find", p, {"clock_points": results})
    print(f"found {len(points)} clock point(s); wrote {p['report']}")


def _pulse_noise(p):
    return coherence.NoiseModel(sigma_qs=p["sigma-qs"], alpha=p["alpha"], S0=p["s0"],
                                seed=p["seed"])


def cmd_pulse(args):
    p = _resolve("pulse", args, extra_key=("kind", args.kind))
    t2 = p["t2"]
    if np.isinf(t2) and np.isfinite(p["t1"]):
        t2 = 2.0 * p["t1"]  # Markovian ceiling when only T1 is configured
    qubit = coherence.QubitModel(f0=p["f0"], omega_R=p["omega-r"], T1=p["t1"],
                                 T2_intr=t2, stretch=p["stretch"])
    noise = _pulse_noise(p)
    kind = p["kind"]
    fit = None
    extra = {}
    if kind == "rabi":
        trace = coherence.rabi_experiment(qubit, p["amplitude"], p["taus"], noise,
                                          n_trajectories=p["trajectories"])
    elif kind == "ramsey":
        trace = coherence.ramsey_experiment(qubit, 2 * np.pi * p["detuning"], p["taus"],
                                            noise, n_trajectories=p["trajectories"])
        fit = coherence.fit_decay(trace, "gaussian_sinusoid")
    elif kind == "hahn":
        trace, fit = coherence.hahn_echo_experiment(qubit, p["taus"], noise,
                                                    n_trajectories=p["trajectories"])
    elif kind == "cpmg":
        res = coherence.cpmg_experiment(qubit, p["n"], p["taus"], noise,
                                        n_trajectories=p["trajectories"])
        trace = res["traces"][p["n"][0]]
        extra = {"T2_per_N": {str(k): v for k, v in res["T2"].items()},
                 "scaling_exponent": res["scaling_exponent"]}
        fit = res["fits"][p["n"][0]]
    elif kind == "t1":
        trace = coherence.t1_experiment(qubit, p["taus"])
    elif kind == "tipangle":
        trace = coherence.refocusing_angle_scan(qubit, p["thetas"])
    else:
        raise ConfigError(f"unknown pulse experiment {kind!r}; choose from {_PULSE_KINDS}")
    if fit is not None and not fit.converged:
        raise NumericalFailure(f"fit did not converge: {fit.params}")
    trace.to_csv(p["out"])
    results = {"fit": fit.to_json_dict(seed=p["seed"]) if fit else None, **extra}
    _write_report(p["report"], f"pulse {kind}", p, results)
    print(f"wrote {p['out']} and {p['report']}")


def cmd_polarize(args):
    p = _resolve("polarize", args)
    if p["pumped"] not in ("singlet", "triplet"):
        raise ConfigError("pumped must be 'singlet' or 'triplet'")
    pump = optics.PumpModel.calibrated(p["power"], p["time-constant"], p["ref-power"],
                                       branch_back=p["branch-back"])
    t, ps, pt = optics.hyperpolarize(pump, p["pumped"], p["times"])
    with open(p["out"], "w") as fh:
        fh.write("t_s,p_singlet,p_triplet\n")
        for row in zip(t, ps, pt):
            fh.write(",".join(f"{v:.17e}" for v in row) + "\n")
    _write_report(p["report"], "polarize", p,
                  {"time_constant_s": pump.time_constant,
                   "final_polarization": float(max(ps[-1], pt[-1]))})
    print(f"wrote {p['out']} and {p['report']}")


def _load_lines(p):
    if p["lines"]:
        try:
            with open(p["lines"]) as fh:
                table = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read line table: {e}") from None
        try:
            return [optics.OpticalLine(**entry) for entry in table]
        except (TypeError, ValueError) as e:
            raise ConfigError(f"bad line table entry: {e}") from None
    return [optics.OpticalLine(center=p["center"], fwhm=p["fwhm"], ground_state="singlet"),
            optics.OpticalLine(center=p["center"] + 10 * p["fwhm"], fwhm=p["fwhm"],
                               ground_state="triplet")]


def cmd_spectrum(args):
    p = _resolve("spectrum", args, extra_key=("kind", args.kind))
    kind = p["kind"]
    if kind == "absorption":
        lines = _load_lines(p)
        pops = optics.PopulationState(p["p-singlet"], 1.0 - p["p-singlet"])
        grid = p["grid"]
        if grid is None:
            centers = [ln.center for ln in lines]
            grid = np.linspace(min(centers) - 0.1, max(centers) + 0.1, 4001)
        absorb = optics.absorption_spectrum(lines, pops, grid)
        optics.spectrum_to_csv(p["out"], grid, absorb)
    elif kind == "cavity":
        if p["spin"] not in ("coupled", "uncoupled"):
            raise ConfigError("spin must be 'coupled' or 'uncoupled'")
        cav = cavity.CavityMode(lambda0=p["lambda0"], Q=p["q"], V_rel=p["v-rel"],
                                n=p["index"])
        em = cavity.Emitter(d=p["dipole"], omega_a=cav.omega_c, gamma=p["gamma"])
        system = cavity.CoupledSystem(cavity=cav, emitter=em, B=p["b-field"],
                                      delta_tune=p["delta-tune"])
        g = system.g
        w = np.linspace(cav.omega_c - p["span"] * g, cav.omega_c + p["span"] * g,
                        p["points"])
        T, R = cavity.transmission_spectrum(system, p["spin"], w)
        with open(p["out"], "w") as fh:
            fh.write("omega_Hz,T,R\n")
            for row in zip(w / (2 * np.pi), T, R):
                fh.write(",".join(f"{v:.17e}" for v in row) + "\n")
    else:
        raise ConfigError(f"unknown spectrum kind {kind!r}; choose from {_SPECTRUM_KINDS}")
    print(f"wrote {p['out']}")


def cmd_readout(args):
    p = _resolve("readout", args)
    res = cavity.readout_fidelity(p["ton"], p["toff"], p["photons"],
                                  T1_spin=p["t1spin"], window=p["window"])
    _write_report(p["report"], "readout", p, res)
    print(f"fidelity {res['fidelity']:.6f}; wrote {p['report']}")


def cmd_straggle(args):
    p = _resolve("straggle", args)
    placement = cavity.StragglePlacement(p["sigma"], p["halfwidth"], profile=p["profile"])
    res = cavity.coupling_variation(placement, n_samples=p["samples"], seed=p["seed"])
    _write_report(p["report"], "straggle", p, res)
    print(f"std/mean {res['std_over_mean']:.4f}; wrote {p['report']}")


def _read_csv(path):
    try:
        with open(path) as fh:
            header = fh.readline().strip().split(",")
            data = np.loadtxt(fh, delimiter=",", ndmin=2)
    except (OSError, ValueError) as e:
        raise ConfigError(f"cannot read CSV {path!r}: {e}") from None
    if data.size == 0 or data.shape[1] != len(header):
        raise ConfigError(f"CSV {path!r} malformed: header/data mismatch")
    return header, data


def cmd_plot(args):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    p = _resolve("plot", args)
    if not p["csv"]:
        raise ConfigError("plot requires --csv")
    header, data = _read_csv(p["csv"])
    kind = p["kind"]
    if kind == "auto":
        if header[0] == "B_T":
            kind = "breit-rabi"
        elif header[0] == "omega_Hz":
            kind = "cavity"
        elif header[0] == "wavenumber_cm1":
            kind = "spectrum"
        else:
            kind = "trace"
    fig, ax = plt.subplots(figsize=(6, 4))
    if kind == "breit-rabi":
        for j, name in enumerate(header[1:], start=1):
            ax.plot(data[:, 0] * 1e6, data[:, j] / 1e6, label=name)
        ax.set_xlabel("B (uT)")
        ax.set_ylabel("frequency (MHz)")
        ax.legend()
    elif kind == "cavity":
        ax.plot(data[:, 0] / 1e9, data[:, 1], label="|t|^2")
        ax.plot(data[:, 0] / 1e9, data[:, 2], label="|r|^2")
        if p["csv2"]:
            _, d2 = _read_csv(p["csv2"])
            ax.plot(d2[:, 0] / 1e9, d2[:, 1], "--", label="|t|^2 (overlay)")
        ax.set_xlabel("probe frequency (GHz)")
        ax.set_ylabel("response")
        ax.legend()
    elif kind == "spectrum":
        ax.plot(data[:, 0], data[:, 1])
        ax.set_xlabel("wavenumber (cm^-1)")
        ax.set_ylabel("absorbance")
    elif kind == "trace":
        if data.shape[1] >= 3:
            ax.errorbar(data[:, 0], data[:, 1], yerr=data[:, 2], fmt=".-", capsize=2)
        else:
            ax.plot(data[:, 0], data[:, 1], ".-")
        ax.set_xlabel(header[0])
        ax.set_ylabel(header[1] if len(header) > 1 else "y")
    else:
        raise ConfigError(f"unknown plot kind {kind!r}")
    fig.tight_layout()
    fig.savefig(p["out"])
    plt.close(fig)
    print(f"wrote {p['out']}")


# ---------------------------------------------------------------------------
# argument wiring


def _add_options(sub, command):
    sub.add_argument("--config", help="JSON config file with per-command sections")
    for key, (_, default, help_text) in _OPTIONS[command].items():
        sub.add_argument(f"--{key}", dest=key.replace("-", "_"), default=None,
                         help=f"{help_text} (default: {default})")


def build_parser():
    parser = argparse.ArgumentParser(prog="donorspin",
                                     description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("breit-rabi", help="transition frequencies vs field (CSV)")
    _add_options(s, "breit-rabi")
    s.set_defaults(func=cmd_breit_rabi)

    s = subs.add_parser("clock-find", help="locate df/dB = 0 points (JSON)")
    _add_options(s, "clock-find")
    s.set_defaults(func=cmd_clock_find)

    s = subs.add_parser("pulse", help="pulsed coherence experiments (CSV + JSON)")
    s.add_argument("kind", choices=_PULSE_KINDS)
    _add_options(s, "pulse")
    s.set_defaults(func=cmd_pulse)

    s = subs.add_parser("polarize", help="optical hyperpolarization dynamics (CSV + JSON)")
    _add_options(s, "polarize")
    s.set_defaults(func=cmd_polarize)

    s = subs.add_parser("spectrum", help="absorption or cavity spectra (CSV)")
    s.add_argument("kind", choices=_SPECTRUM_KINDS)
    _add_options(s, "spectrum")
    s.set_defaults(func=cmd_spectrum)

    s = subs.add_parser("readout", help="photon-counting readout fidelity (JSON)")
    _add_options(s, "readout")
    s.set_defaults(func=cmd_readout)

    s = subs.add_parser("straggle", help="coupling-variation statistics (JSON)")
    _add_options(s, "straggle")
    s.set_defaults(func=cmd_straggle)

    s = subs.add_parser("plot", help="render a CSV as a static vector plot")
    _add_options(s, "plot")
    s.set_defaults(func=cmd_plot)

    return parser


def main(argv=None):
    _apply_worker_cap()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalFailure, np.linalg.LinAlgError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
