"""Command-line front end.

    atomwall vacuum   --grid-min 1e-2 --grid-max 1e2 --points 200 --log
    atomwall thermal  --theta 0.5 [--quadrature]
    atomwall average  --x0 10
    atomwall emission
    atomwall figure1
    atomwall figure2
    atomwall check

Sweeps write deterministic CSV (or JSON) tables: `#`-prefixed comment lines
naming the normalization and the formulas, a header row, then data rows in
scientific notation with 17 significant digits.  All quantities are
dimensionless unless --si adds physical columns (requires --lambda0-um and
--alpha0-A3).

Exit codes: 0 success, 1 usage error, 2 numerical non-convergence,
3 check-suite failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import selfcheck, thermal, vacuum
from .constants import EV
from .core_types import AtomSpec, SweepTable, atom_from_physical, denormalize, thermal_wavelength
from .quadrature import QuadratureError
from .specfun import BACKEND_NAME

__all__ = ["main", "RunConfig", "run_vacuum", "run_thermal", "run_average",
           "run_emission", "run_figure1", "run_figure2", "run_check"]

_UNITS_NOTE = "potentials in units of hbar*c*alpha0*k0^4; x0 = 2*k0*z; theta = 2*kB*T/(hbar*omega0)"


@dataclass
class RunConfig:
    command: str
    grid_min: float | None = None
    grid_max: float | None = None
    points: int = 200
    log: bool | None = None           # None = per-command default
    theta: float | None = None
    temp_k: float | None = None
    lambda0_um: float | None = None
    alpha0_a3: float | None = None
    x0: float = 10.0                  # fixed distance for theta sweeps
    si: bool = False
    out: str | None = None
    fmt: str = "csv"
    normalization: str = "hck4"       # hck4 | lvdw_ratio
    quadrature: bool = False
    max_subdivisions: int = 60000

    def __post_init__(self):
        if self.points < 2:
            raise ValueError("points must be >= 2")
        if self.grid_min is not None and self.grid_max is not None:
            if not (self.grid_min < self.grid_max):
                raise ValueError("grid-min must be < grid-max")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.normalization not in ("hck4", "lvdw_ratio"):
            raise ValueError("normalization must be hck4 or lvdw_ratio")

    def atom(self) -> AtomSpec | None:
        if self.lambda0_um is None or self.alpha0_a3 is None:
            return None
        return atom_from_physical(self.lambda0_um, self.alpha0_a3)

    def resolve_theta(self) -> float:
        """Exactly one of --theta / --temp-K must determine the temperature."""
        if (self.theta is None) == (self.temp_k is None):
            raise ValueError("specify exactly one of --theta or --temp-K")
        if self.theta is not None:
            if self.theta < 0:
                raise ValueError("theta must be >= 0")
            return self.theta
        atom = self.atom()
        if atom is None:
            raise ValueError("--temp-K needs --lambda0-um and --alpha0-A3")
        if self.temp_k < 0:
            raise ValueError("temperature must be >= 0")
        if self.temp_k == 0:
            return 0.0
        return 2.0 / (atom.k0 * thermal_wavelength(self.temp_k))

    def grid(self, default_min: float, default_max: float, default_log: bool) -> np.ndarray:
        lo = self.grid_min if self.grid_min is not None else default_min
        hi = self.grid_max if self.grid_max is not None else default_max
        if not (0 < lo < hi):
            raise ValueError(f"invalid grid [{lo}, {hi}]")
        use_log = self.log if self.log is not None else default_log
        if use_log:
            return np.geomspace(lo, hi, self.points)
        return np.linspace(lo, hi, self.points)


def _norm_factor(norm: str, x0: float) -> float:
    # lvdw_ratio presents potentials relative to -hbar*omega0*alpha0/(8 z^3)
    return -(x0**3) if norm == "lvdw_ratio" else 1.0


def _si_comment(atom: AtomSpec) -> list[str]:
    return [
        f"atom: lambda0 = {atom.lambda0 / 1e-6:.6g} um, alpha0 = {atom.alpha0 / 1e-30:.6g} A^3",
        f"energy unit hbar*c*alpha0*k0^4 = {denormalize(1.0, atom, 'eV'):.10e} eV",
        f"free-space emission rate Gamma_free = 2*c*alpha0*k0^4 = {atom.gamma_free:.10e} 1/s"
        f" (lifetime {1.0 / atom.gamma_free:.10e} s)",
    ]


def run_vacuum(config: RunConfig) -> SweepTable:
    """x0 sweep of the vacuum potentials and the emission ratio."""
    xs = config.grid(1e-2, 1e2, default_log=True)
    norm = config.normalization
    columns = ["x0", "v0rr", "v0fr", "vg", "ve", "gamma_ratio"]
    comments = [
        _UNITS_NOTE,
        "v0rr = H0rr(x0)/(pi x0^3); v0fr = [H0(x0)-H0rr(x0)]/(pi x0^3); vg = v0rr+v0fr; ve = v0rr-v0fr",
        "gamma_ratio = Gamma_spt/Gamma_free = 1 - G(x0), in units of 2*c*alpha0*k0^4",
    ]
    if norm == "lvdw_ratio":
        comments.append("potential columns multiplied by -x0^3 (ratio to the London form)")
    atom = config.atom()
    if config.si:
        if atom is None:
            raise ValueError("--si needs --lambda0-um and --alpha0-A3")
        columns += ["z_um", "vg_eV", "ve_eV"]
        comments += _si_comment(atom)
    rows = []
    for x0 in xs:
        r = vacuum.vacuum_potentials(float(x0))
        c = _norm_factor(norm, r.x0)
        row = [r.x0, c * r.v0rr, c * r.v0fr, c * r.vg, c * r.ve, r.gamma_ratio]
        if config.si:
            z = r.x0 / (2.0 * atom.k0)
            row += [z / 1e-6, denormalize(r.vg, atom, "eV"), denormalize(r.ve, atom, "eV")]
        rows.append(tuple(row))
    return SweepTable(tuple(columns), tuple(rows), _UNITS_NOTE, tuple(comments))


def run_emission(config: RunConfig) -> SweepTable:
    """x0 sweep of the spontaneous-emission modification."""
    xs = config.grid(1e-2, 1e2, default_log=True)
    columns = ["x0", "gamma_ratio"]
    comments = [
        "gamma_ratio = Gamma_spt(z)/Gamma_free = 1 - G(2 k0 z); Gamma_free = 2*c*alpha0*k0^4",
    ]
    atom = config.atom()
    if config.si:
        if atom is None:
            raise ValueError("--si needs --lambda0-um and --alpha0-A3")
        columns += ["z_um", "gamma_per_s", "lifetime_s"]
        comments += _si_comment(atom)
    rows = []
    for x0 in xs:
        g = vacuum.spontaneous_rate_ratio(float(x0))
        row = [float(x0), g]
        if config.si:
            rate = g * atom.gamma_free
            row += [float(x0) / (2.0 * atom.k0) / 1e-6, rate, 1.0 / rate]
        rows.append(tuple(row))
    return SweepTable(tuple(columns), tuple(rows), _UNITS_NOTE, tuple(comments))


def run_thermal(config: RunConfig) -> SweepTable:
    """x0 sweep at fixed temperature."""
    theta = config.resolve_theta()
    xs = config.grid(1e-1, 1e2, default_log=True)
    method = "quadrature" if config.quadrature else "closed"
    columns = ["x0", "theta", "v_T", "v_ground", "v_excited", "v_average", "p_ground"]
    comments = [
        _UNITS_NOTE,
        "v_ground = vg + v_T; v_excited = ve - v_T; v_average = -theta*tanh(1/theta)/x0^3",
        f"v_T from the {'principal-value quadrature' if config.quadrature else 'closed form -theta/x0^3 - 2 v0rr/(e^(2/theta)-1) minus vg (valid z >= lambda_T)'}",
    ]
    if config.normalization == "lvdw_ratio":
        comments.append("potential columns multiplied by -x0^3 (ratio to the London form)")
    atom = config.atom()
    if config.si:
        if atom is None:
            raise ValueError("--si needs --lambda0-um and --alpha0-A3")
        columns += ["z_um", "v_ground_eV", "v_average_eV"]
        comments += _si_comment(atom)
    rows = []
    for x0 in xs:
        r = thermal.thermal_potentials(float(x0), theta, method=method,
                                       max_subdivisions=config.max_subdivisions)
        c = _norm_factor(config.normalization, r.x0)
        row = [r.x0, theta, c * r.v_T, c * r.v_ground, c * r.v_excited, c * r.v_average, r.p_ground]
        if config.si:
            row += [r.x0 / (2.0 * atom.k0) / 1e-6,
                    denormalize(r.v_ground, atom, "eV"),
                    denormalize(r.v_average, atom, "eV")]
        rows.append(tuple(row))
    return SweepTable(tuple(columns), tuple(rows), _UNITS_NOTE, tuple(comments))


def run_average(config: RunConfig) -> SweepTable:
    """theta sweep of the averaged potential at fixed x0 (valid z >= lambda_T)."""
    ts = config.grid(0.02, 20.0, default_log=True)
    x0 = config.x0
    if not x0 > 0:
        raise ValueError("x0 must be > 0")
    columns = ["theta", "v_average", "v_ground_closed", "lifshitz", "p_ground"]
    comments = [
        _UNITS_NOTE,
        f"fixed x0 = {x0!r}; assumes z >= lambda_T",
        "v_average = -theta*tanh(1/theta)/x0^3; v_ground_closed = -theta/x0^3 - 2 v0rr/(e^(2/theta)-1); lifshitz = -theta/x0^3",
    ]
    rows = []
    for th in ts:
        th = float(th)
        rows.append((
            th,
            thermal.v_average(x0, th),
            thermal.v_closed(x0, th),
            thermal.lifshitz(x0, th),
            thermal.p_ground(th),
        ))
    return SweepTable(tuple(columns), tuple(rows), _UNITS_NOTE, tuple(comments))


def run_figure1(config: RunConfig) -> SweepTable:
    """Vacuum potentials and emission rate against z/lambda0 (log grid)."""
    zs = config.grid(0.01, 3.0, default_log=True)  # z in units of lambda0
    columns = ["z_over_lambda0", "x0", "v0rr", "v0fr", "vg", "ve", "gamma_ratio"]
    comments = [
        _UNITS_NOTE,
        "x0 = 4 pi z/lambda0; potentials in hbar*c*alpha0*k0^4, emission rate in 2*c*alpha0*k0^4",
    ]
    rows = []
    for z in zs:
        x0 = 4.0 * math.pi * float(z)
        r = vacuum.vacuum_potentials(x0)
        rows.append((float(z), x0, r.v0rr, r.v0fr, r.vg, r.ve, r.gamma_ratio))
    return SweepTable(tuple(columns), tuple(rows), _UNITS_NOTE, tuple(comments))


def run_figure2(config: RunConfig) -> SweepTable:
    """Averaged vs Lifshitz potential against theta, in London normalization.

    Both curves are multiplied by -x0^3 (i.e. divided by the magnitude of the
    London form -hbar*omega0*alpha0/(8z^3)); the assumption z > lambda_T is
    inherited from the closed forms."""
    ts = config.grid(0.02, 20.0, default_log=True)
    columns = ["theta", "v_mean_norm", "v_lif_norm", "rel_error"]
    comments = [
        "normalized by -hbar*omega0*alpha0/(8 z^3): v_mean_norm = theta*tanh(1/theta), v_lif_norm = theta",
        "rel_error = 1 - tanh(1/theta) = |v_mean - v_lif|/v_lif; assumes z > lambda_T",
    ]
    rows = []
    for th in ts:
        th = float(th)
        rows.append((th, th * math.tanh(1.0 / th), th, 1.0 - math.tanh(1.0 / th)))
    return SweepTable(tuple(columns), tuple(rows), _UNITS_NOTE, tuple(comments))


def run_check(config: RunConfig, stream=None) -> int:
    """Run the self-check suite; returns the number of failures."""
    stream = stream or sys.stdout
    results = selfcheck.run_all()
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += 0 if r.passed else 1
        print(f"[{status}] {r.name:24s} {r.detail}  ({r.seconds:.2f}s)", file=stream)
    total = sum(r.seconds for r in results)
    print(f"{len(results) - failures}/{len(results)} checks passed in {total:.1f}s "
          f"(kernel backend: {BACKEND_NAME})", file=stream)
    return failures


# ---------------------------------------------------------------------------
# table emission
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.16e}"  # 17 significant digits, locale-free


def table_to_csv(table: SweepTable) -> str:
    lines = [f"# {c}" for c in table.comments]
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def table_to_json(table: SweepTable) -> str:
    doc = {
        "comments": list(table.comments),
        "units": table.units_note,
        "columns": list(table.columns),
        "rows": [list(row) for row in table.rows],
    }
    return json.dumps(doc, indent=1) + "\n"


def emit(table: SweepTable, config: RunConfig) -> None:
    text = table_to_csv(table) if config.fmt == "csv" else table_to_json(table)
    if config.out:
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(
        prog="atomwall",
        description="Dispersive potentials of a two-level atom near a perfectly "
                    "conducting wall: vacuum, resonant and thermal contributions.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, hlp in [
        ("vacuum", "sweep the vacuum potentials over x0 = 2 k0 z"),
        ("thermal", "sweep the finite-temperature potentials over x0"),
        ("average", "sweep the thermally averaged potential over theta at fixed x0"),
        ("emission", "sweep the spontaneous-emission rate ratio over x0"),
        ("figure1", "vacuum potentials and emission rate vs z/lambda0"),
        ("figure2", "averaged vs Lifshitz potential vs theta (London normalization)"),
        ("check", "run the self-check / oracle suite"),
    ]:
        q = sub.add_parser(name, help=hlp)
        q.add_argument("--config", type=str, default=None,
                       help="JSON file with defaults for any flag (flags win)")
        q.add_argument("--grid-min", type=float, default=None)
        q.add_argument("--grid-max", type=float, default=None)
        q.add_argument("--points", type=int, default=None)
        grp = q.add_mutually_exclusive_group()
        grp.add_argument("--log", dest="log", action="store_true", default=None,
                         help="logarithmic grid (default for most sweeps)")
        grp.add_argument("--linear", dest="log", action="store_false",
                         help="linear grid")
        q.add_argument("--theta", type=float, default=None,
                       help="normalized temperature 2 kB T/(hbar omega0)")
        q.add_argument("--temp-K", dest="temp_k", type=float, default=None,
                       help="temperature in Kelvin (needs --lambda0-um)")
        q.add_argument("--lambda0-um", dest="lambda0_um", type=float, default=None,
                       help="transition wavelength in microns")
        q.add_argument("--alpha0-A3", dest="alpha0_a3", type=float, default=None,
                       help="static polarizability in cubic Angstroms")
        q.add_argument("--x0", type=float, default=None,
                       help="fixed x0 for theta sweeps (default 10)")
        q.add_argument("--si", action="store_true", default=None,
                       help="add physical columns (eV, um, 1/s)")
        q.add_argument("--out", type=str, default=None, help="output path (default stdout)")
        q.add_argument("--format", dest="fmt", choices=["csv", "json"], default=None)
        q.add_argument("--normalization", choices=["hck4", "lvdw_ratio"], default=None,
                       help="hck4: hbar*c*alpha0*k0^4 units; lvdw_ratio: ratio to the London form")
        q.add_argument("--quadrature", action="store_true", default=None,
                       help="thermal: evaluate v_T by principal-value quadrature")
        q.add_argument("--max-subdivisions", dest="max_subdivisions", type=int, default=None)
    return p


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge precedence: explicit flags > config-file values > defaults."""
    field_names = {f.name for f in fields(RunConfig)}
    values: dict = {}
    if getattr(args, "config", None):
        file_values = json.loads(Path(args.config).read_text())
        unknown = set(file_values) - field_names
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        values.update(file_values)
    for name in field_names:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    values["command"] = args.command
    return RunConfig(**values)


_RUNNERS = {
    "vacuum": run_vacuum,
    "thermal": run_thermal,
    "average": run_average,
    "emission": run_emission,
    "figure1": run_figure1,
    "figure2": run_figure2,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
    except (ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"atomwall: error: {exc}", file=sys.stderr)
        return 1
    if config.command == "check":
        failures = run_check(config)
        return 3 if failures else 0
    try:
        table = _RUNNERS[config.command](config)
    except QuadratureError as exc:
        print(f"atomwall: numerical non-convergence: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"atomwall: error: {exc}", file=sys.stderr)
        return 1
    emit(table, config)
    return 0


if __name__ == "__main__":
    sys.exit(main())
