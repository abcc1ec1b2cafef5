"""Command-line front end: parameter sweeps, figure presets, critical points.

Subcommands::

    diamondchain sweep --axis T --lo 0.01 --hi 4 --points 400 --B 1.0 \
        --Delta 1.0 --J0 1.0 --alpha 0 --eta -0.5 --gamma -0.6 --Omega 0.8 \
        --obs C,Cl1,FA --out fig2_B1.csv
    diamondchain preset fig10 --outdir data/
    diamondchain critical --kind fidelity_T --B 1.0 --alpha 0.5 ...

The energy unit is J = 1 (all couplings are entered as ratios to J).
Host columns are always computed with the distortions zeroed, whatever
the distortion flags say. CSV output uses 17 significant digits and is
byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .correlations import coherence_l1, concurrence_x
from .density import impurity_density
from .errors import (
    InvalidRange,
    NoCrossingFound,
    NonPositiveTemperature,
    NonPositiveTemperatureAxis,
    UnknownPreset,
)
from .spectra import ChainParams
from .teleport import CLASSICAL_FIDELITY, InputState, average_fidelity, concurrence_out

__all__ = ["SweepSpec", "run_sweep", "preset", "PRESET_NAMES", "find_critical", "main"]

AXES = ("T", "B", "Delta", "alpha", "eta", "gamma", "Omega", "J0")

_RHO_FIELDS = ("r11", "r22", "r33", "r44", "r23")

# Canonical observable tokens and the per-token CSV columns they expand to.
_OBSERVABLE_COLUMNS = {
    "C_imp": ("C_imp",),
    "C_host": ("C_host",),
    "Cl1_imp": ("Cl1_imp",),
    "Cl1_host": ("Cl1_host",),
    "FA_imp": ("FA_imp",),
    "FA_host": ("FA_host",),
    "Cout_imp": ("Cout_imp",),
    "Cout_host": ("Cout_host",),
    "rho_elements": tuple(
        f"{f}_{side}" for side in ("imp", "host") for f in _RHO_FIELDS
    ),
}

_SHORTHAND = {
    "C": ("C_imp", "C_host"),
    "Cl1": ("Cl1_imp", "Cl1_host"),
    "FA": ("FA_imp", "FA_host"),
    "Cout": ("Cout_imp", "Cout_host"),
    "rho": ("rho_elements",),
}

# Concurrence counts as vanished below this; mirrors the bisection target.
_C_FLOOR = 1e-9
_BISECT_TOL = 1e-6
_SCAN_POINTS = 2048
_T_SEARCH_MAX = 50.0
_B_SEARCH_MAX = 20.0
# Captions go as low as T = 0.002; below this the sweep warns (beta-range flag).
_T_FLAG = 0.01


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: axis variable, range, fixed parameters, output columns."""

    axis: str
    lo: float
    hi: float
    points: int
    fixed: ChainParams
    observables: tuple
    theta: float = 0.5 * np.pi
    phi: float = 0.0


def expand_observables(tokens) -> tuple:
    """Normalise --obs tokens (shorthand or explicit) to canonical names."""
    out = []
    for token in tokens:
        token = token.strip()
        if token in _SHORTHAND:
            out.extend(_SHORTHAND[token])
        elif token in _OBSERVABLE_COLUMNS:
            out.append(token)
        else:
            raise InvalidRange(f"unknown observable {token!r}")
    return tuple(dict.fromkeys(out))  # dedupe, keep order


def _validate(spec: SweepSpec):
    if spec.axis not in AXES:
        raise InvalidRange(f"axis must be one of {AXES}, got {spec.axis!r}")
    if not spec.lo < spec.hi:
        raise InvalidRange(f"need lo < hi, got [{spec.lo}, {spec.hi}]")
    if spec.points < 2:
        raise InvalidRange(f"need at least 2 points, got {spec.points}")
    if spec.axis == "T" and spec.lo <= 0.0:
        raise NonPositiveTemperatureAxis(f"temperature axis must stay > 0, got lo={spec.lo}")
    if not spec.observables:
        raise InvalidRange("no observables requested")
    expand_observables(spec.observables)  # raises on unknown names


def _columns(spec: SweepSpec):
    cols = [spec.axis]
    for token in expand_observables(spec.observables):
        cols.extend(_OBSERVABLE_COLUMNS[token])
    return cols


def _row(spec: SweepSpec, value: float):
    p_imp = replace(spec.fixed, **{spec.axis: value})
    rho_imp = impurity_density(p_imp)
    rho_host = impurity_density(p_imp.without_distortion())
    state = InputState(spec.theta, spec.phi)
    rho = {"imp": rho_imp, "host": rho_host}
    cells = [value]
    for token in expand_observables(spec.observables):
        if token == "rho_elements":
            for side in ("imp", "host"):
                cells.extend(getattr(rho[side], f) for f in _RHO_FIELDS)
            continue
        name, side = token.split("_")
        target = rho[side]
        if name == "C":
            cells.append(concurrence_x(target))
        elif name == "Cl1":
            cells.append(coherence_l1(target))
        elif name == "FA":
            cells.append(average_fidelity(target))
        else:  # Cout
            cells.append(concurrence_out(target, state))
    return cells


def run_sweep(spec: SweepSpec, jobs: int = 1) -> str:
    """Evaluate the sweep and return the CSV text (header + one row per point)."""
    _validate(spec)
    values = np.linspace(spec.lo, spec.hi, spec.points)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row, [spec] * len(values), values.tolist()))
    else:
        rows = [_row(spec, v) for v in values.tolist()]
    lines = [",".join(_columns(spec))]
    lines.extend(",".join(f"{cell:.17g}" for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _preset_table():
    fig2d = dict(alpha=0.0, eta=-0.5, gamma=-0.6, Omega=0.8)
    fig3d = dict(fig2d, alpha=0.5)
    fig5ad = dict(alpha=0.0, eta=-1.0, gamma=-0.8, Omega=0.8)
    fig5bd = dict(fig5ad, alpha=0.5)

    def t_sweep(obs, delta, dist, b_values):
        fixed = ChainParams(Delta=delta, J0=1.0, T=1.0, **dist)
        return {
            "axis": "T",
            "lo": 0.01,
            "hi": 4.0,
            "fixed": fixed,
            "obs": obs,
            "curves": [("B", b) for b in b_values],
        }

    def b_sweep(obs, delta, dist, t_values):
        fixed = ChainParams(Delta=delta, J0=1.0, T=1.0, **dist)
        return {
            "axis": "B",
            "lo": 0.0,
            "hi": 4.0,
            "fixed": fixed,
            "obs": obs,
            "curves": [("T", t) for t in t_values],
        }

    both_b = (1.0, 2.0)
    return {
        "fig2": t_sweep(("C",), 1.0, fig2d, both_b),
        "fig3": t_sweep(("C",), 1.0, fig3d, both_b),
        "fig5a": t_sweep(("C",), 1.3, fig5ad, both_b),
        "fig5b": t_sweep(("C",), 1.3, fig5bd, both_b),
        "fig6a": b_sweep(("C",), 1.0, fig2d, (0.002, 0.4)),
        "fig6b": b_sweep(("C",), 1.3, fig2d, (0.2, 0.4)),
        "fig7": t_sweep(("Cl1",), 1.0, fig2d, both_b),
        "fig8": t_sweep(("Cl1",), 1.0, fig3d, both_b),
        "fig9a": t_sweep(("Cl1",), 1.3, fig5ad, both_b),
        "fig9b": t_sweep(("Cl1",), 1.3, fig5bd, both_b),
        "fig10": t_sweep(("FA",), 1.0, fig2d, both_b),
        "fig11": t_sweep(("FA",), 1.0, fig3d, both_b),
        "fig12a": t_sweep(("FA",), 1.3, fig5ad, both_b),
        "fig12b": t_sweep(("FA",), 1.3, fig5bd, both_b),
    }


_PRESETS = _preset_table()
PRESET_NAMES = tuple(sorted(_PRESETS))


def preset(name: str, points: int = 400, curve_values=None):
    """Sweeps of one figure preset as a list of (file stem, SweepSpec).

    Each captioned curve family (one magnetic field, or one temperature
    for field sweeps) becomes its own CSV. ``curve_values`` overrides the
    captioned values of the curve variable.
    """
    try:
        entry = _PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {PRESET_NAMES}") from None
    curves = entry["curves"]
    if curve_values is not None:
        var = curves[0][0]
        curves = [(var, float(v)) for v in curve_values]
    out = []
    for var, value in curves:
        spec = SweepSpec(
            axis=entry["axis"],
            lo=entry["lo"],
            hi=entry["hi"],
            points=points,
            fixed=replace(entry["fixed"], **{var: value}),
            observables=entry["obs"],
        )
        out.append((f"{name}_{var}{value:g}", spec))
    return out


def _last_crossing(func, grid):
    """Largest x in ``grid`` where func crosses from > 0 to <= 0, bisected."""
    values = np.array([func(x) for x in grid])
    above = np.nonzero(values > 0.0)[0]
    if len(above) == 0:
        raise NoCrossingFound("observable never exceeds its threshold on the search grid")
    if above[-1] == len(grid) - 1:
        raise NoCrossingFound("observable still above threshold at the end of the search window")
    lo, hi = grid[above[-1]], grid[above[-1] + 1]
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if func(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return float(0.5 * (lo + hi))


def find_critical(kind: str, p: ChainParams) -> float:
    """Threshold crossing of one observable, located by bisection.

    kind = 'entanglement_T': temperature above which the impurity-dimer
    concurrence of ``p`` is zero (searched up to T = 50).
    kind = 'fidelity_T': temperature where the average fidelity drops
    through 2/3.
    kind = 'critical_B': field at fixed p.T above which the concurrence is
    zero (searched up to B = 20). Pass a distortion-free ``p`` for host values.
    """
    if kind == "entanglement_T":
        grid = np.linspace(0.01, _T_SEARCH_MAX, _SCAN_POINTS)
        func = lambda t: concurrence_x(impurity_density(replace(p, T=t))) - _C_FLOOR
    elif kind == "fidelity_T":
        grid = np.linspace(0.01, _T_SEARCH_MAX, _SCAN_POINTS)
        func = lambda t: average_fidelity(impurity_density(replace(p, T=t))) - CLASSICAL_FIDELITY
    elif kind == "critical_B":
        grid = np.linspace(0.0, _B_SEARCH_MAX, _SCAN_POINTS)
        func = lambda b: concurrence_x(impurity_density(replace(p, B=b))) - _C_FLOOR
    else:
        raise InvalidRange(f"unknown critical kind {kind!r}")
    return _last_crossing(func, grid)


# ---------------------------------------------------------------- CLI glue


def _add_param_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--Delta", type=float, default=1.0, help="host anisotropy (J=1 units)")
    parser.add_argument("--J0", type=float, default=1.0, help="Ising nodal coupling")
    parser.add_argument("--B", type=float, default=0.0, help="magnetic field")
    parser.add_argument("--T", type=float, default=1.0, help="temperature (fixed value when not the axis)")
    parser.add_argument("--alpha", type=float, default=0.0, help="XY distortion of the impurity dimer")
    parser.add_argument("--eta", type=float, default=0.0, help="distortion of the J1 Ising leg")
    parser.add_argument("--gamma", type=float, default=0.0, help="distortion of the J2 Ising leg")
    parser.add_argument("--Omega", type=float, default=0.0, help="anisotropy distortion of the impurity dimer")


def _params_from_args(args) -> ChainParams:
    return ChainParams(
        J=1.0, Delta=args.Delta, J0=args.J0, B=args.B, T=args.T,
        alpha=args.alpha, eta=args.eta, gamma=args.gamma, Omega=args.Omega,
    )


def _read_config(path: str) -> dict:
    values = {}
    with open(path) as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidRange(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key] = value
    return values


def _apply_config(subparser: argparse.ArgumentParser, argv):
    """Load --config key=value defaults into the subcommand; flags still win."""
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config")
    known, _ = probe.parse_known_args(argv)
    if known.config is None:
        return
    raw = _read_config(known.config)
    actions = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, value in raw.items():
        if key not in actions:
            raise InvalidRange(f"unknown config key {key!r}")
        action = actions[key]
        defaults[key] = action.type(value) if action.type else value
        action.required = False
    subparser.set_defaults(**defaults)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="diamondchain",
        description="Thermal correlations and teleportation sweeps for the "
        "Ising-XXZ diamond chain with one distorted plaquette (J = 1 units).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="sweep one axis and write a CSV")
    sweep.add_argument("--axis", choices=AXES, required=True)
    sweep.add_argument("--lo", type=float, required=True)
    sweep.add_argument("--hi", type=float, required=True)
    sweep.add_argument("--points", type=int, default=400)
    _add_param_flags(sweep)
    sweep.add_argument(
        "--obs", default="C",
        help="comma list; shorthands C, Cl1, FA, Cout expand to _imp/_host "
        "columns, rho to all density elements; explicit names like FA_imp also work",
    )
    sweep.add_argument("--theta", type=float, default=0.5 * np.pi,
                       help="input-state polar angle for Cout columns")
    sweep.add_argument("--phi", type=float, default=0.0,
                       help="input-state azimuth for Cout columns")
    sweep.add_argument("--out", default="-", help="output CSV path ('-' = stdout)")
    sweep.add_argument("--jobs", type=int, default=1, help="parallel workers for sweep points")
    sweep.add_argument("--config", help="key=value file; flags override file values")

    pre = sub.add_parser("preset", help="write the CSVs of one figure preset")
    pre.add_argument("name", help=f"one of {', '.join(PRESET_NAMES)}")
    pre.add_argument("--outdir", default=".")
    pre.add_argument("--points", type=int, default=400)
    pre.add_argument("--curves", default=None,
                     help="comma list overriding the captioned per-curve values "
                     "(B for temperature sweeps, T for field sweeps)")
    pre.add_argument("--jobs", type=int, default=1)

    crit = sub.add_parser("critical", help="bisect a threshold crossing")
    crit.add_argument("--kind", choices=("entanglement_T", "fidelity_T", "critical_B"),
                      required=True)
    _add_param_flags(crit)
    crit.add_argument("--host", action="store_true",
                      help="zero the distortions (host model) before searching")
    crit.add_argument("--config", help="key=value file; flags override file values")
    return parser, {"sweep": sweep, "preset": pre, "critical": crit}


def _warn_low_temperature(spec: SweepSpec):
    t_min = min(spec.lo, spec.hi) if spec.axis == "T" else spec.fixed.T
    if t_min < _T_FLAG:
        print(
            f"note: sweep touches T={t_min:g} < {_T_FLAG}; beta > {1 / _T_FLAG:g} "
            "is outside the routinely exercised range",
            file=sys.stderr,
        )


def _cmd_sweep(args) -> int:
    spec = SweepSpec(
        axis=args.axis, lo=args.lo, hi=args.hi, points=args.points,
        fixed=_params_from_args(args),
        observables=tuple(args.obs.split(",")),
        theta=args.theta, phi=args.phi,
    )
    _warn_low_temperature(spec)
    csv = run_sweep(spec, jobs=args.jobs)
    if args.out == "-":
        sys.stdout.write(csv)
    else:
        with open(args.out, "w") as handle:
            handle.write(csv)
    return 0


def _cmd_preset(args) -> int:
    curve_values = None
    if args.curves is not None:
        curve_values = [float(v) for v in args.curves.split(",")]
    from pathlib import Path

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for stem, spec in preset(args.name, points=args.points, curve_values=curve_values):
        _warn_low_temperature(spec)
        path = outdir / f"{stem}.csv"
        with open(path, "w") as handle:
            handle.write(run_sweep(spec, jobs=args.jobs))
        print(path)
    return 0


def _cmd_critical(args) -> int:
    p = _params_from_args(args)
    if args.host:
        p = p.without_distortion()
    value = find_critical(args.kind, p)
    print(f"{value:.17g}")
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subparsers = _build_parser()
    try:
        if argv and argv[0] in subparsers:
            _apply_config(subparsers[argv[0]], argv[1:])
        args = parser.parse_args(argv)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "preset":
            return _cmd_preset(args)
        return _cmd_critical(args)
    except (InvalidRange, UnknownPreset, NoCrossingFound, NonPositiveTemperature, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
