"""Command-line interface.

Subcommands: generate, decompose, compare, spectrum, pca, atmospheric.
Every command reads an optional JSON config (--config) which individual
flags override, writes CSV/JSON artifacts into --out, and is fully
deterministic for a fixed config and seed. Exit codes: 0 success,
2 invalid arguments or config (including missing files and unwritable
output directories), 3 malformed input CSV, 4 numeric failure.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace

import numpy as np

from .compare import compare_strategies, single_sift_projections
from .errors import (FormatError, NumericError, ResidualSignal,
                     ValidationError)
from .pca import (GroupingCutoffs, autocovariance, eigen_decompose, embed,
                  group_components, select_delta)
from .presets import PRESET_NAMES, build_signal, get_preset
from .sifting import SiftConfig, collect_sift_iterates, decompose
from .signals import (NoiseSpec, Signal, ToneSpec, add_noise, detrend_mean,
                      generate_multitone, load_csv, save_csv)
from .spectral import fit_filter_alphas, fit_spectral_slope, periodogram
from .validation import require

__all__ = ["ExperimentConfig", "main"]

_SIFT_KEYS = (
    ("strategy", "strategy"),
    ("epsilon", "epsilon"),
    ("norm", "norm"),
    ("max_iter", "max_sift_iterations"),
    ("max_imfs", "max_imfs"),
    ("boundary", "boundary"),
    ("epsilon_mode", "epsilon_mode"),
    ("refine_extrema", "refine_extrema"),
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Resolved run description: exactly one signal source (preset, CSV
    path, or explicit tone list), the sifting setup, the output
    directory (verified writable before any compute), and the remaining
    per-command options."""

    command: str
    out_dir: str
    preset: object
    input_path: str
    tones: tuple
    t0: float
    dt: float
    n: int
    noise_sigma: float
    seed: int
    sift: SiftConfig
    options: dict


def _load_config_file(path):
    if path is None:
        return {}
    if not os.path.isfile(path):
        raise ValidationError(f"config file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise ValidationError(
            f"config file {path} must contain a JSON object")
    return data


def _merged_options(args):
    """Config-file values overridden by any explicitly given CLI flags."""
    cfg = _load_config_file(getattr(args, "config", None))
    for key in ("preset", "input", "out", "strategy", "epsilon", "max_iter",
                "boundary", "seed", "band", "delta", "n_copies", "m1", "m2",
                "waves", "single_sift", "include_hybrid"):
        value = getattr(args, key, None)
        if value is not None and value is not False:
            cfg[key] = value
    return cfg


def _parse_tones(raw):
    require(isinstance(raw, (list, tuple)), "tones must be a list")
    tones = []
    for item in raw:
        if isinstance(item, dict):
            tones.append(ToneSpec(float(item["amplitude"]),
                                  float(item["omega"]),
                                  float(item.get("phase", 0.0))))
        else:
            require(isinstance(item, (list, tuple)) and len(item) in (2, 3),
                    f"tone entries need [amplitude, omega(, phase)], "
                    f"got {item!r}")
            tones.append(ToneSpec(*[float(v) for v in item]))
    return tuple(tones)


def _prepare_out(cfg):
    out_dir = str(cfg.get("out", "."))
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as exc:
        raise ValidationError(
            f"cannot create output directory {out_dir}: {exc}")
    require(os.access(out_dir, os.W_OK),
            f"output directory is not writable: {out_dir}")
    return out_dir


def _sift_from(cfg, preset):
    base = preset.sift if preset is not None else SiftConfig()
    overrides = {field: cfg[key] for key, field in _SIFT_KEYS
                 if cfg.get(key) is not None}
    return replace(base, **overrides)


def _build_config(command, args, sources=("preset", "input", "tones")):
    cfg = _merged_options(args)
    preset = None
    given = [name for name in sources if cfg.get(name) is not None]
    require(len(given) == 1,
            f"exactly one signal source required "
            f"({' / '.join(sources)}), got {len(given)}")
    if given[0] == "preset":
        preset = get_preset(str(cfg["preset"]))
    tones = _parse_tones(cfg["tones"]) if given[0] == "tones" else None
    return ExperimentConfig(
        command=command,
        out_dir=_prepare_out(cfg),
        preset=preset,
        input_path=cfg.get("input") if given[0] == "input" else None,
        tones=tones,
        t0=float(cfg.get("t0", 0.0)),
        dt=float(cfg.get("dt", 1.0)),
        n=int(cfg["n"]) if cfg.get("n") is not None else None,
        noise_sigma=float(cfg.get("noise_sigma", 0.0)),
        seed=int(cfg.get("seed", 0)),
        sift=_sift_from(cfg, preset),
        options=cfg,
    )


def _materialize(config):
    """Produce (signal, generator tone omegas or None) from the source."""
    if config.preset is not None:
        preset = config.preset
        return build_signal(preset), [t.omega for t in preset.tones]
    if config.input_path is not None:
        path = config.input_path
        if not os.path.isfile(path):
            raise ValidationError(f"input file not found: {path}")
        raw = config.options.get("tones")
        known = ([t.omega for t in _parse_tones(raw)]
                 if raw is not None else None)
        return load_csv(path), known
    require(len(config.tones) > 0, "empty tone list")
    require(config.n is not None, "n (sample count) is required for a "
            "tone-spec source")
    signal = generate_multitone(config.tones, config.t0, config.dt, config.n)
    if config.noise_sigma > 0.0:
        signal = add_noise(signal, NoiseSpec(config.noise_sigma, config.seed))
    return signal, [t.omega for t in config.tones]


def _plain(value):
    """Recursively convert numpy containers/scalars for JSON output."""
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {key: _plain(v) for key, v in value.items()}
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _write_json(path, payload):
    payload = dict(payload)
    payload["schema"] = 1
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(_plain(payload), handle, sort_keys=True, indent=2)
        handle.write("\n")
    return path


def _write_rows(path, header, rows):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(header + "\n")
        for row in rows:
            handle.write(",".join("%.17g" % float(v) if isinstance(
                v, (float, np.floating)) else str(v) for v in row) + "\n")
    return path


def _alpha_trace(signal, sift):
    """High-pass filter parameters fitted to the first extraction's
    consecutive iterates; empty when the signal cannot be sifted."""
    try:
        iterates = collect_sift_iterates(signal, sift)
    except ResidualSignal:
        return []
    if len(iterates) < 2:
        return []
    return [fit.alpha for fit in fit_filter_alphas(iterates)]


def cmd_generate(config):
    signal, _ = _materialize(config)
    name = (config.preset.name if config.preset is not None
            else str(config.options.get("name", "signal")))
    path = os.path.join(config.out_dir, f"{name}.csv")
    save_csv(signal, path)
    print(f"wrote {len(signal)} samples to {path} "
          f"(t0={signal.t0:g}, dt={signal.dt:g})")
    return 0


def cmd_decompose(config):
    signal, _ = _materialize(config)
    result = decompose(signal, config.sift)
    width = max(2, len(str(len(result.imfs))))
    imf_entries = []
    for k, (imf, trace) in enumerate(zip(result.imfs, result.traces), 1):
        path = os.path.join(config.out_dir, f"imf_{k:0{width}d}.csv")
        save_csv(signal.with_samples(imf.samples), path)
        spectrum = periodogram(signal.with_samples(imf.samples))
        imf_entries.append({
            "index": k,
            "file": os.path.basename(path),
            "iterations": imf.iterations_used,
            "converged": imf.converged,
            "peak_omega": spectrum.peak_omega(),
            "trace": list(trace),
        })
    residual_path = os.path.join(config.out_dir, "residual.csv")
    save_csv(result.residual, residual_path)
    summary_path = _write_json(
        os.path.join(config.out_dir, "summary.json"),
        {
            "command": "decompose",
            "strategy": config.sift.strategy,
            "epsilon": config.sift.epsilon,
            "boundary": config.sift.boundary,
            "n_imfs": len(result.imfs),
            "imfs": imf_entries,
            "alpha_trace": _alpha_trace(signal, config.sift),
            "residual_rms": float(np.sqrt(np.mean(
                result.residual.samples ** 2))),
        })
    print(f"extracted {len(result.imfs)} IMFs "
          f"({config.sift.strategy}); summary: {summary_path}")
    return 0


def cmd_spectrum(config):
    signal, _ = _materialize(config)
    spectrum = periodogram(signal)
    csv_path = _write_rows(
        os.path.join(config.out_dir, "spectrum.csv"), "omega,power",
        zip(spectrum.omegas, spectrum.power))
    summary_path = _write_json(
        os.path.join(config.out_dir, "spectrum.json"),
        {
            "command": "spectrum",
            "n_bins": len(spectrum.power),
            "bin_width": spectrum.bin_width,
            "peak_omega": spectrum.peak_omega(),
            "energy": spectrum.energy(),
        })
    print(f"peak at omega={spectrum.peak_omega():.6g}; "
          f"wrote {csv_path} and {summary_path}")
    return 0


def cmd_compare(config):
    signal, tone_omegas = _materialize(config)
    opts = config.options
    payload = {"command": "compare",
               "tones": tone_omegas if tone_omegas is not None else []}
    if opts.get("single_sift"):
        if config.preset is not None and config.preset.probe_omegas:
            probes = config.preset.probe_omegas
            period = config.preset.period
        else:
            raw = opts.get("probes")
            require(raw is not None and opts.get("period") is not None,
                    "single-sift mode needs probe frequencies and a period "
                    "(preset eq3.1 provides them)")
            probes = tuple(float(v) for v in raw)
            period = float(opts["period"])
        pairs = single_sift_projections(signal, probes, period,
                                        boundary=config.sift.boundary)
        payload["projections"] = [{
            "strategy": pair.strategy,
            "fast_omega": pair.fast.omega,
            "fast_amplitude": pair.fast.amplitude,
            "slow_omega": pair.slow.omega,
            "slow_amplitude": pair.slow.amplitude,
            "ratio": pair.ratio,
        } for pair in pairs]
        payload["strategies"] = [
            {"strategy": pair.strategy, "mode": "single-sift"}
            for pair in pairs]
        for pair in pairs:
            print(f"{pair.strategy}: fast={pair.fast.amplitude:.8f} "
                  f"slow={pair.slow.amplitude:.8f} ratio={pair.ratio:.4f}")
    else:
        strategies = ["classical", "midpoint"]
        if opts.get("include_hybrid") or opts.get("strategy") == "hybrid":
            strategies.append("hybrid")
        report = compare_strategies(signal, config.sift, tone_omegas,
                                    strategies)
        payload["strategies"] = [{
            "strategy": entry.strategy,
            "total_iterations": entry.total_iterations,
            "imfs": [{
                "iterations": s.iterations,
                "converged": s.converged,
                "peak_omega": s.peak_omega,
                "peak_omegas": list(s.peak_omegas),
                "ghost_omegas": list(s.ghost_omegas),
            } for s in entry.imfs],
        } for entry in report.results]
        for entry in report.results:
            counts = ", ".join(str(s.iterations) for s in entry.imfs)
            print(f"{entry.strategy}: iterations per IMF [{counts}]")
    path = _write_json(os.path.join(config.out_dir, "compare.json"), payload)
    print(f"wrote {path}")
    return 0


def cmd_pca(config):
    signal, _ = _materialize(config)
    opts = config.options
    delta = opts.get("delta")
    delta = int(delta) if delta is not None else select_delta(signal)
    n_copies = int(opts.get("n_copies", 16))
    embedding = embed(signal, delta, n_copies)
    model = eigen_decompose(autocovariance(embedding))
    eig_path = _write_rows(
        os.path.join(config.out_dir, "eigenvalues.csv"), "index,eigenvalue",
        [(k, v) for k, v in enumerate(model.eigenvalues)])
    summary = {
        "command": "pca",
        "delta": delta,
        "n_copies": n_copies,
        "effective_length": embedding.effective_length,
        "trace": float(np.trace(model.r)),
        "eigenvalues": list(model.eigenvalues),
    }
    m1, m2 = opts.get("m1"), opts.get("m2")
    require((m1 is None) == (m2 is None),
            "m1 and m2 must be given together")
    if m1 is not None:
        cutoffs = GroupingCutoffs(int(m1), int(m2))
        require(cutoffs.m2 < n_copies,
                f"m2 must be < n_copies={n_copies}, got {cutoffs.m2}")
        groups = group_components(embedding, model, cutoffs)
        times = signal.times[:embedding.effective_length]
        for label, series in zip(("mean_flow", "waves", "residual"), groups):
            grouped = Signal(series, float(times[0]), signal.dt)
            save_csv(grouped, os.path.join(config.out_dir, f"{label}.csv"))
        summary["m1"] = cutoffs.m1
        summary["m2"] = cutoffs.m2
    summary_path = _write_json(
        os.path.join(config.out_dir, "pca.json"), summary)
    print(f"delta={delta}, n={n_copies}; wrote {eig_path} and "
          f"{summary_path}")
    return 0


def cmd_atmospheric(config):
    signal, _ = _materialize(config)
    opts = config.options
    band = opts.get("band")
    require(band is not None and len(band) == 2,
            "band is required: two frequencies [omega_min, omega_max]")
    detrended, mean = detrend_mean(signal)
    result = decompose(detrended, config.sift)
    wave_indices = [int(v) for v in (opts.get("waves") or [])]
    for index in wave_indices:
        require(1 <= index <= len(result.imfs),
                f"wave IMF index {index} out of range "
                f"(decomposition produced {len(result.imfs)} IMFs)")
    turbulent = detrended.samples.copy()
    for index in wave_indices:
        turbulent -= result.imfs[index - 1].samples
    residual_signal = detrended.with_samples(turbulent)
    spectrum = periodogram(residual_signal)
    fit = fit_spectral_slope(spectrum, float(band[0]), float(band[1]))
    save_csv(residual_signal,
             os.path.join(config.out_dir, "turbulent.csv"))
    summary_path = _write_json(
        os.path.join(config.out_dir, "atmospheric.json"),
        {
            "command": "atmospheric",
            "mean_removed": mean,
            "n_imfs": len(result.imfs),
            "wave_imfs": wave_indices,
            "band": [float(band[0]), float(band[1])],
            "slope": fit.slope,
            "r_squared": fit.r_squared,
            "bins_used": fit.bins_used,
        })
    print(f"slope={fit.slope:.4f} (r^2={fit.r_squared:.4f}) over "
          f"band [{band[0]:g}, {band[1]:g}]; wrote {summary_path}")
    return 0


def _int_list(text):
    return [int(part) for part in text.split(",") if part.strip()]


def _add_common(parser):
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--out", help="output directory (default .)")
    parser.add_argument("--preset", choices=PRESET_NAMES,
                        help="named benchmark signal")
    parser.add_argument("--input", help="input signal CSV (time,value)")
    parser.add_argument("--strategy",
                        choices=("classical", "midpoint", "hybrid"))
    parser.add_argument("--epsilon", type=float,
                        help="sifting convergence threshold")
    parser.add_argument("--max-iter", dest="max_iter", type=int,
                        help="sifting iteration cap per IMF")
    parser.add_argument("--boundary", choices=("mirror", "periodic"))
    parser.add_argument("--seed", type=int, help="noise generator seed")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="modesift",
        description="Signal decomposition by envelope-mean or midpoint "
                    "sifting, with spectral and delay-PCA analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    specs = {
        "generate": ("write a signal CSV from a preset or tone config",
                     cmd_generate),
        "decompose": ("extract IMFs and write per-IMF CSVs plus a JSON "
                      "summary", cmd_decompose),
        "compare": ("run several sifting strategies on one signal",
                    cmd_compare),
        "spectrum": ("write the periodogram of a signal", cmd_spectrum),
        "pca": ("delay-embedded principal component analysis", cmd_pca),
        "atmospheric": ("detrend, decompose, subtract wave IMFs, and fit "
                        "the residual spectral slope", cmd_atmospheric),
    }
    parsers = {}
    for name, (help_text, handler) in specs.items():
        sp = sub.add_parser(name, help=help_text)
        _add_common(sp)
        sp.set_defaults(handler=handler)
        parsers[name] = sp

    parsers["compare"].add_argument(
        "--single-sift", dest="single_sift", action="store_true",
        default=None, help="one sifting pass per strategy, report "
        "two-tone projection amplitudes")
    parsers["compare"].add_argument(
        "--include-hybrid", dest="include_hybrid", action="store_true",
        default=None)
    parsers["pca"].add_argument("--delta", type=int, help="embedding lag")
    parsers["pca"].add_argument("--n-copies", dest="n_copies", type=int,
                                help="number of delayed copies")
    parsers["pca"].add_argument("--m1", type=int,
                                help="last mean-flow component index")
    parsers["pca"].add_argument("--m2", type=int,
                                help="last wave component index")
    parsers["atmospheric"].add_argument(
        "--band", type=float, nargs=2, metavar=("OMEGA_MIN", "OMEGA_MAX"),
        help="slope-fit frequency band")
    parsers["atmospheric"].add_argument(
        "--waves", type=_int_list,
        help="comma-separated 1-based IMF indices to subtract")
    return parser


_SOURCES = {
    "generate": ("preset", "tones"),
    "decompose": ("preset", "input", "tones"),
    "compare": ("preset", "input", "tones"),
    "spectrum": ("preset", "input", "tones"),
    "pca": ("preset", "input", "tones"),
    "atmospheric": ("preset", "input", "tones"),
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _build_config(args.command, args, _SOURCES[args.command])
        return args.handler(config)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
