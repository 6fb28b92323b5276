"""Command-line front end: evaluator access and machine-readable curves.

Subcommands mirror the library surface: ``pdf``, ``cdf``, ``outage`` and
``ber`` sweep a grid and emit one row per point, ``hfun`` evaluates a
single function of the H family, ``validate`` compares simulation against
the analytic CDF.  Output is CSV (default) or JSON ``{meta, rows}``, to
stdout or to ``--out``.  Grid points are evaluated concurrently; the
``GAMMASUM_THREADS`` environment variable caps the worker count.  Exit
codes: 0 success, 2 numerical non-convergence, 3 invalid input.
"""

import argparse
import concurrent.futures
import csv
import dataclasses
import io
import json
import os
import sys
from dataclasses import dataclass

import numpy as np
import yaml

from .errors import (
    DomainError,
    GammaSumError,
    InconsistentCoefficients,
    NoConvergence,
    ParseError,
    PoleError,
)
from .foxh import HFamilySpec, HKind, eval_h
from .mellin import ContourSpec
from .montecarlo import SimConfig, sample_sum
from .mrc import MODULATIONS, ber, modulation_by_name
from .sums import BranchParams, cdf, cdf_eval, pdf_eval
from .montecarlo import empirical_cdf_distance

_COMMANDS = ("pdf", "cdf", "outage", "ber", "hfun", "validate")
_FORMATS = ("csv", "json")
_GRID_UNITS = ("linear_y", "snr_db")
_CONTOUR_FIELDS = ("anchor", "height", "bend_depth", "rel_tol", "abs_tol", "max_refinements")
_KINDS = {"g": HKind.MEIJER_G, "h": HKind.FOX_H, "hbar": HKind.FOX_HBAR, "hhat": HKind.EXT_HHAT}


@dataclass(frozen=True)
class JobSpec:
    """Validated description of one CLI run."""

    command: str
    m: tuple[float, ...] = ()
    omega: tuple[float, ...] | None = None
    modulations: tuple[str, ...] | None = None
    grid: tuple[float, float, int] = (0.1, 10.0, 50)
    grid_unit: str = "linear_y"
    output: str | None = None
    format: str = "csv"
    seed: int | None = None
    samples: int = 1_000_000
    force_general: bool = False
    contour: tuple[tuple[str, float], ...] | None = None
    hfun: tuple[tuple[str, object], ...] | None = None

    def validate(self) -> None:
        if self.command not in _COMMANDS:
            raise ParseError(f"command: unknown command {self.command!r}, expected one of {_COMMANDS}")
        if self.format not in _FORMATS:
            raise ParseError(f"format: expected one of {_FORMATS}, got {self.format!r}")
        if self.grid_unit not in _GRID_UNITS:
            raise ParseError(f"grid_unit: expected one of {_GRID_UNITS}, got {self.grid_unit!r}")
        start, stop, points = self.grid
        if points < 2:
            raise ParseError(f"grid.points: need at least 2 grid points, got {points}")
        if not start < stop:
            raise ParseError(f"grid: start {start} must be below stop {stop}")
        if self.command != "hfun":
            if not self.m:
                raise ParseError("m: at least one fading figure is required")
            if any(v <= 0 for v in self.m):
                raise ParseError(f"m: fading figures must be positive, got {list(self.m)}")
            if self.omega is not None:
                if any(v <= 0 for v in self.omega):
                    raise ParseError(f"omega: mean powers must be positive, got {list(self.omega)}")
                if len(self.omega) != len(self.m):
                    raise ParseError(
                        f"omega: got {len(self.omega)} entries for {len(self.m)} branches"
                    )
        if self.command in ("pdf", "cdf", "outage", "validate") and self.omega is None:
            raise ParseError(f"omega: the {self.command} command requires mean powers")
        if self.command == "ber":
            if not self.modulations:
                raise ParseError("modulation: the ber command requires at least one scheme")
            for name in self.modulations:
                if name.upper() not in MODULATIONS:
                    raise ParseError(
                        f"modulation: unknown scheme {name!r}; known schemes: "
                        f"{', '.join(sorted(MODULATIONS))}"
                    )
        if self.command == "validate":
            if self.seed is None:
                raise ParseError("seed: the validate command requires a seed")
            if self.samples < 1:
                raise ParseError(f"samples: must be positive, got {self.samples}")
        if self.command == "hfun" and not self.hfun:
            raise ParseError("hfun: missing function parameters")
        if self.contour is not None:
            for key, _ in self.contour:
                if key not in _CONTOUR_FIELDS:
                    raise ParseError(
                        f"contour.{key}: unknown field, expected one of {_CONTOUR_FIELDS}"
                    )

    def contour_spec(self) -> ContourSpec | None:
        if not self.contour:
            return None
        kwargs = dict(self.contour)
        if "max_refinements" in kwargs:
            kwargs["max_refinements"] = int(kwargs["max_refinements"])
        return ContourSpec(**kwargs)

    def branches(self, omega=None) -> BranchParams:
        om = omega if omega is not None else self.omega
        return BranchParams.from_lists(self.m, om)


def job_to_config(job: JobSpec) -> dict:
    """Plain-dict form of a JobSpec, suitable for YAML serialization."""
    d = {"command": job.command}
    if job.m:
        d["m"] = list(job.m)
    if job.omega is not None:
        d["omega"] = list(job.omega)
    if job.modulations is not None:
        d["modulation"] = list(job.modulations)
    d["grid"] = {"start": job.grid[0], "stop": job.grid[1], "points": job.grid[2]}
    d["grid_unit"] = job.grid_unit
    d["format"] = job.format
    if job.output is not None:
        d["output"] = job.output
    if job.seed is not None:
        d["seed"] = job.seed
    if job.samples != 1_000_000:
        d["samples"] = job.samples
    if job.force_general:
        d["force_general"] = True
    if job.contour:
        d["contour"] = {k: v for k, v in job.contour}
    if job.hfun:
        d["hfun"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in job.hfun}
    return d


def write_config(job: JobSpec, path: str) -> None:
    with open(path, "w") as fh:
        yaml.safe_dump(job_to_config(job), fh, sort_keys=True)


def _require(data: dict, allowed: set[str], where: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise ParseError(f"{where}: unknown field(s) {sorted(unknown)}")


def job_from_config(data: dict) -> JobSpec:
    if not isinstance(data, dict):
        raise ParseError("config: top level must be a mapping")
    _require(
        data,
        {
            "command", "m", "omega", "modulation", "grid", "grid_unit", "format",
            "output", "seed", "samples", "force_general", "contour", "hfun",
        },
        "config",
    )
    if "command" not in data:
        raise ParseError("command: missing required field")
    grid = (0.1, 10.0, 50)
    if "grid" in data:
        g = data["grid"]
        _require(g, {"start", "stop", "points"}, "grid")
        try:
            grid = (float(g["start"]), float(g["stop"]), int(g["points"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"grid: needs numeric start/stop/points ({exc})") from None
    contour = None
    if "contour" in data:
        if not isinstance(data["contour"], dict):
            raise ParseError("contour: must be a mapping of ContourSpec fields")
        contour = tuple(sorted((str(k), float(v)) for k, v in data["contour"].items()))
    hfun = None
    if "hfun" in data:
        if not isinstance(data["hfun"], dict):
            raise ParseError("hfun: must be a mapping")
        hfun = tuple(
            sorted(
                (str(k), tuple(v) if isinstance(v, list) else v)
                for k, v in data["hfun"].items()
            )
        )

    def _floats(key):
        if key not in data:
            return None
        try:
            out = tuple(float(v) for v in data[key])
        except (TypeError, ValueError):
            raise ParseError(f"{key}: must be a list of numbers") from None
        if any(v <= 0 for v in out):
            raise ParseError(f"{key}: entries must be positive, got {list(out)}")
        return out

    job = JobSpec(
        command=str(data["command"]),
        m=_floats("m") or (),
        omega=_floats("omega"),
        modulations=tuple(str(v) for v in data["modulation"]) if "modulation" in data else None,
        grid=grid,
        grid_unit=str(data.get("grid_unit", "snr_db" if data["command"] == "ber" else "linear_y")),
        output=data.get("output"),
        format=str(data.get("format", "csv")),
        seed=int(data["seed"]) if "seed" in data else None,
        samples=int(data.get("samples", 1_000_000)),
        force_general=bool(data.get("force_general", False)),
        contour=contour,
        hfun=hfun,
    )
    job.validate()
    return job


def parse_config(path: str) -> JobSpec:
    """Load a YAML job description, filling documented defaults."""
    try:
        with open(path) as fh:
            data = yaml.safe_load(fh)
    except OSError as exc:
        raise ParseError(f"config: cannot read {path}: {exc}") from None
    except yaml.YAMLError as exc:
        raise ParseError(f"config: malformed YAML in {path}: {exc}") from None
    return job_from_config(data)


def _max_workers() -> int:
    env = os.environ.get("GAMMASUM_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ParseError(f"GAMMASUM_THREADS: expected an integer, got {env!r}") from None
        if n < 1:
            raise ParseError(f"GAMMASUM_THREADS: must be >= 1, got {n}")
        return n
    return min(8, os.cpu_count() or 1)


def _grid_points(job: JobSpec) -> np.ndarray:
    start, stop, points = job.grid
    return np.linspace(start, stop, points)


def _map_ordered(fn, items):
    with concurrent.futures.ThreadPoolExecutor(max_workers=_max_workers()) as pool:
        return list(pool.map(fn, items))


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(job: JobSpec, header: list[str], rows: list[tuple], meta: dict, trailer: str | None = None) -> None:
    if job.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
        if trailer:
            text += trailer + "\n"
    else:
        doc = {"meta": meta, "rows": [dict(zip(header, row)) for row in rows]}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if job.output:
        with open(job.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_density(job: JobSpec) -> None:
    params = job.branches()
    contour = job.contour_spec()
    evaluator = pdf_eval if job.command == "pdf" else cdf_eval

    def one(y: float):
        res = evaluator(params, float(y), force_general=job.force_general, contour=contour)
        return (float(y), res.value, res.est_abs_error)

    rows = _map_ordered(one, _grid_points(job))
    name = "y_th" if job.command == "outage" else "y"
    _emit(job, [name, "value", "est_abs_error"], rows, _meta(job))


def _run_ber(job: JobSpec) -> None:
    mods = [modulation_by_name(name) for name in job.modulations]
    profile = np.asarray(job.omega if job.omega is not None else [1.0] * len(job.m))

    def one(snr_db: float):
        omegas = profile * 10.0 ** (float(snr_db) / 10.0)
        params = job.branches(omega=omegas)
        return (float(snr_db), *[ber(params, mod) for mod in mods])

    rows = _map_ordered(one, _grid_points(job))
    header = ["snr_db"] + [f"ber_{m.name.lower()}" for m in mods]
    _emit(job, header, rows, _meta(job))


def _run_hfun(job: JobSpec) -> None:
    h = dict(job.hfun)
    _require(h, {"kind", "m", "n", "upper", "lower", "z"}, "hfun")
    try:
        kind = _KINDS[str(h.get("kind", "hhat")).lower()]
    except KeyError:
        raise ParseError(
            f"hfun.kind: unknown kind {h.get('kind')!r}, expected one of {sorted(_KINDS)}"
        ) from None
    try:
        spec = HFamilySpec(
            kind=kind,
            m=int(h["m"]),
            n=int(h["n"]),
            upper=tuple(tuple(float(x) for x in t) for t in h.get("upper", ())),
            lower=tuple(tuple(float(x) for x in t) for t in h.get("lower", ())),
            argument=float(h["z"]),
        )
    except KeyError as exc:
        raise ParseError(f"hfun.{exc.args[0]}: missing required field") from None
    res = eval_h(spec, job.contour_spec())
    _emit(job, ["z", "value", "est_abs_error"],
          [(spec.argument, res.value, res.est_abs_error)], _meta(job))


def _run_validate(job: JobSpec) -> None:
    params = job.branches()
    cfg = SimConfig(n_samples=job.samples, seed=job.seed)
    ys = np.sort(sample_sum(params, cfg))
    n = len(ys)
    grid = _grid_points(job)
    empirical = np.searchsorted(ys, grid, side="right") / n
    analytic = [cdf(params, float(g)) if g >= 0 else 0.0 for g in grid]
    rows = [
        (float(g), float(e), float(a), float(abs(e - a)))
        for g, e, a in zip(grid, empirical, analytic)
    ]
    ks, _ = empirical_cdf_distance(params, cfg)
    meta = _meta(job)
    meta["ks"] = ks
    meta["n_samples"] = n
    _emit(job, ["y", "empirical", "analytic", "abs_diff"], rows, meta,
          trailer=f"# ks={ks!r} n={n}")


def _meta(job: JobSpec) -> dict:
    meta = {"command": job.command}
    if job.m:
        meta["m"] = list(job.m)
    if job.omega is not None:
        meta["omega"] = list(job.omega)
    if job.modulations:
        meta["modulation"] = list(job.modulations)
    if job.seed is not None:
        meta["seed"] = job.seed
    return meta


def run(job: JobSpec) -> int:
    """Execute a validated job; map failures onto documented exit codes."""
    try:
        job.validate()
        if job.command in ("pdf", "cdf", "outage"):
            _run_density(job)
        elif job.command == "ber":
            _run_ber(job)
        elif job.command == "hfun":
            _run_hfun(job)
        else:
            _run_validate(job)
    except NoConvergence as exc:
        print(f"gammasum: numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ParseError, DomainError, PoleError, InconsistentCoefficients, ValueError) as exc:
        print(f"gammasum: invalid input: {exc}", file=sys.stderr)
        return 3
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _csv_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ParseError(f"expected a comma-separated number list, got {text!r}") from None


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError(f"grid: expected start:stop:points, got {text!r}")
    try:
        return (float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError:
        raise ParseError(f"grid: expected numeric start:stop:points, got {text!r}") from None


def _parse_triplets(text: str) -> tuple[tuple[float, ...], ...]:
    if not text:
        return ()
    out = []
    for part in text.split(";"):
        vals = _csv_floats(part)
        if len(vals) != 3:
            raise ParseError(f"parameter triplet needs 3 numbers, got {part!r}")
        out.append(vals)
    return tuple(out)


def _build_parser() -> _Parser:
    parser = _Parser(prog="gammasum", description=__doc__)
    parser.add_argument("--config", help="YAML job file; replaces all other flags")
    sub = parser.add_subparsers(dest="command")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", dest="output")
    common.add_argument("--format", choices=_FORMATS, default="csv")
    for field in ("rel-tol", "abs-tol", "height", "anchor", "bend-depth"):
        common.add_argument(f"--{field}", type=float, dest=field.replace("-", "_"))
    common.add_argument("--max-refinements", type=int, dest="max_refinements")

    chan = argparse.ArgumentParser(add_help=False)
    chan.add_argument("--m", required=True, type=_csv_floats)
    chan.add_argument("--omega", type=_csv_floats)

    for name in ("pdf", "cdf", "outage"):
        p = sub.add_parser(name, parents=[common, chan])
        p.add_argument("--grid", required=True, type=_parse_grid)
        p.add_argument("--force-general", action="store_true")

    p = sub.add_parser("ber", parents=[common, chan])
    p.add_argument("--mod", required=True, help="comma-separated scheme names")
    p.add_argument("--snr", required=True, type=_parse_grid, help="SNR sweep in dB, start:stop:points")

    p = sub.add_parser("hfun", parents=[common])
    p.add_argument("--kind", default="hhat", choices=sorted(_KINDS))
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--p", type=int, default=None, help="informational; must match --upper length")
    p.add_argument("--q", type=int, default=None, help="informational; must match --lower length")
    p.add_argument("--upper", default="", help='triplets "alpha,A,a;..."')
    p.add_argument("--lower", default="", help='triplets "beta,B,b;..."')
    p.add_argument("--z", required=True, type=float)

    p = sub.add_parser("validate", parents=[common, chan])
    p.add_argument("--grid", required=True, type=_parse_grid)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--samples", type=int, default=1_000_000)
    return parser


def _contour_tuple(ns) -> tuple[tuple[str, float], ...] | None:
    fields = {}
    for key in _CONTOUR_FIELDS:
        val = getattr(ns, key, None)
        if val is not None:
            fields[key] = float(val)
    return tuple(sorted(fields.items())) or None


def _job_from_args(ns) -> JobSpec:
    if ns.command is None:
        raise ParseError("a subcommand or --config is required")
    if ns.command == "hfun":
        upper = _parse_triplets(ns.upper)
        lower = _parse_triplets(ns.lower)
        if ns.p is not None and ns.p != len(upper):
            raise ParseError(f"hfun: --p {ns.p} does not match {len(upper)} upper triplets")
        if ns.q is not None and ns.q != len(lower):
            raise ParseError(f"hfun: --q {ns.q} does not match {len(lower)} lower triplets")
        hfun = tuple(sorted({
            "kind": ns.kind, "m": ns.m, "n": ns.n,
            "upper": upper, "lower": lower, "z": ns.z,
        }.items()))
        job = JobSpec(command="hfun", output=ns.output, format=ns.format,
                      contour=_contour_tuple(ns), hfun=hfun)
    elif ns.command == "ber":
        job = JobSpec(
            command="ber", m=ns.m, omega=ns.omega,
            modulations=tuple(v.strip() for v in ns.mod.split(",") if v.strip()),
            grid=ns.snr, grid_unit="snr_db", output=ns.output, format=ns.format,
            contour=_contour_tuple(ns),
        )
    else:
        job = JobSpec(
            command=ns.command, m=ns.m, omega=ns.omega, grid=ns.grid,
            grid_unit="linear_y", output=ns.output, format=ns.format,
            seed=getattr(ns, "seed", None),
            samples=getattr(ns, "samples", 1_000_000),
            force_general=getattr(ns, "force_general", False),
            contour=_contour_tuple(ns),
        )
    job.validate()
    return job


def main(argv=None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
        job = parse_config(ns.config) if ns.config else _job_from_args(ns)
    except ParseError as exc:
        print(f"gammasum: invalid input: {exc}", file=sys.stderr)
        return 3
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
