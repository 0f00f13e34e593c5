"""Command-line front end.

Subcommands::

    entropy    entropy of a probability vector or gridded pdf, swept over alpha
    generate   seeded synthetic series (gaussian, stable)
    dea        diffusion entropy curve + scaling fits, or --figure1 closed forms
    pathway    eval | verify  closed-form operator images / quadrature check
    kinetics   exp | ml | pathway | mixture-check  relaxation curves

CSV output has a header row and floats with 15 significant digits; fit
summaries are JSON. Every run is described by a :class:`RunConfig`, which
can be saved with ``--save-config`` and replayed with ``--config``.
Exit status: 0 on success, 1 when a verification gate fails, 2 on parse or
validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import dea, entropy, kinetics, pathway_operator as po
from .errors import DataError, ParameterError, PathwayEntropyError
from .special_functions import BesselParams

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
MIXTURE_GATE = 1e-6


# -- config -------------------------------------------------------------------


@dataclass
class RunConfig:
    """Everything that determines one CLI run.

    ``params`` holds the command-specific options (all JSON scalars or
    lists); ``output``/``summary`` are file paths or ``None`` for stdout.
    """

    command: str
    action: Optional[str] = None
    params: Dict[str, Any] = field(default_factory=dict)
    output: Optional[str] = None
    summary: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = json.loads(text)
        unknown = set(data) - {"command", "action", "params", "output", "summary"}
        if unknown:
            raise DataError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


# -- formatting and parsing -----------------------------------------------------


def fmt(v) -> str:
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    if isinstance(v, str):
        return v
    return format(float(v), ".15g")


def write_csv(header: Sequence[str], rows, path: Optional[str]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    _emit(buf.getvalue(), path)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def parse_numeric_csv(text: str, name: str = "input") -> List[List[float]]:
    """Rows of floats; a non-numeric first row is treated as a header.

    Blank lines and ``#`` comments are skipped. Errors name the line.
    """
    rows: List[List[float]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cells = [c.strip() for c in line.split(",")]
        try:
            values = [float(c) for c in cells]
        except ValueError:
            if lineno == _first_content_line(text) and not any(_is_number(c) for c in cells):
                continue  # header
            raise DataError(f"{name}:{lineno}: cannot parse {line!r} as numbers") from None
        if not all(math.isfinite(v) for v in values):
            raise DataError(f"{name}:{lineno}: non-finite value in {line!r}")
        rows.append(values)
    if not rows:
        raise DataError(f"{name}: no numeric data")
    return rows


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _first_content_line(text: str) -> int:
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            return lineno
    return 0


def read_series(path: str) -> np.ndarray:
    """Single-column series (multi-column files use the last column)."""
    rows = parse_numeric_csv(_read_text(path), path)
    return np.array([r[-1] for r in rows], dtype=float)


def read_distribution(path: str) -> np.ndarray:
    rows = parse_numeric_csv(_read_text(path), path)
    return np.array([v for r in rows for v in r], dtype=float)


def read_pdf(path: str) -> entropy.SampledPdf:
    """Two-column ``x, f`` file on a uniform grid."""
    rows = parse_numeric_csv(_read_text(path), path)
    if any(len(r) != 2 for r in rows):
        raise DataError(f"{path}: pdf files need exactly two columns (x, f)")
    x = np.array([r[0] for r in rows])
    f = np.array([r[1] for r in rows])
    if x.size < 2:
        raise DataError(f"{path}: pdf needs at least two grid points")
    dx = np.diff(x)
    if np.any(dx <= 0) or np.ptp(dx) > 1e-6 * dx.mean():
        raise DataError(f"{path}: x column must be a uniform ascending grid")
    return entropy.SampledPdf(float(x[0]), float(dx.mean()), f)


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _t_grid(p: Dict[str, Any]) -> np.ndarray:
    if p.get("t"):
        return np.asarray(p["t"], dtype=float)
    lo, hi, n = p["t_min"], p["t_max"], int(p["count"])
    if not (0 < lo < hi and n >= 2):
        raise ParameterError("need 0 < t_min < t_max and count >= 2")
    space = np.geomspace if p.get("log_grid") else np.linspace
    return space(lo, hi, n)


# -- commands -------------------------------------------------------------------


def cmd_entropy(cfg: RunConfig) -> int:
    p = cfg.params
    kind, alphas = p["kind"], p["alpha"] or [1.0]
    if p.get("pdf"):
        data = read_pdf(p["input"])
        if kind not in entropy.CONTINUOUS_KINDS:
            raise ParameterError(f"kind {kind!r} is not available for densities; use {entropy.CONTINUOUS_KINDS}")
        func = lambda a: entropy.continuous_entropy(kind, a, data)  # noqa: E731
    else:
        data = entropy.DiscreteDistribution(read_distribution(p["input"]))
        func = lambda a: entropy.discrete_entropy(kind, a, data)  # noqa: E731
    rows = [(kind, a, func(a)) for a in alphas]
    write_csv(("kind", "alpha", "entropy"), rows, cfg.output)
    return EXIT_OK


def cmd_generate(cfg: RunConfig) -> int:
    p = cfg.params
    xi = dea.generate(cfg.action, int(p["n"]), int(p["seed"]), D=p["D"], index=p["index"])
    write_csv(("xi",), ((v,) for v in xi), cfg.output)
    return EXIT_OK


FIGURE1_ALPHAS = (0.8, 1.0, 1.2)


def cmd_dea(cfg: RunConfig) -> int:
    p = cfg.params
    if p.get("figure1"):
        kind = p["figure1"]
        t = _t_grid(p)
        rows = [[ti] + [entropy.gaussian_entropy_closed(kind, a, ti) for a in FIGURE1_ALPHAS] for ti in t]
        write_csv(["t"] + [f"S_alpha_{a}" for a in FIGURE1_ALPHAS], rows, cfg.output)
        return EXIT_OK

    if p.get("input"):
        xi = read_series(p["input"])
        source = {"input": p["input"]}
    elif p.get("generate"):
        if p.get("seed") is None:
            raise ParameterError("--seed is required with --generate")
        xi = dea.generate(p["generate"], int(p["n"]), int(p["seed"]), D=p["D"], index=p["index"])
        source = {"generator": p["generate"], "n": int(p["n"]), "seed": int(p["seed"])}
    else:
        raise ParameterError("give --input FILE or --generate KIND")

    as_int = lambda v: None if v is None else int(v)  # noqa: E731
    t_grid = dea.default_t_grid(xi.size, as_int(p.get("t_min")), as_int(p.get("t_max")), int(p["count"]))
    indicator = dea.Indicator(p["indicator"], p["alpha"])
    curve = dea.entropy_curve(xi, indicator, t_grid, p.get("bin_width"), p["bin_rule"])
    write_csv(("t", "S"), zip(curve.t.astype(int), curve.S), cfg.output)

    fit = dea.fit_delta(curve)
    summary: Dict[str, Any] = {
        "source": source,
        "indicator": {"kind": indicator.kind, "alpha": indicator.alpha},
        "bin_width": curve.bin_width,
        "scaling_fit": asdict(fit),
    }
    try:
        summary["nonstationary_fit"] = asdict(dea.fit_nonstationary(curve))
    except DataError as exc:
        summary["nonstationary_fit"] = {"error": str(exc)}
    H, h_rms = dea.variance_scaling(xi, t_grid)
    summary["hurst"] = {"H": H, "residual_rms": h_rms}
    summary["classification"] = dea.classify(H, fit.delta).value
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if cfg.summary:
        _emit(text, cfg.summary)
    else:
        sys.stderr.write(text)
    return EXIT_OK


def cmd_pathway_eval(cfg: RunConfig) -> int:
    p = cfg.params
    kind = cfg.action
    x = p["x"]
    if kind == "rl-cos":
        value = po.rl_cos(p["eta"], x)
    else:
        params = po.PathwayParams(p["eta"], p["alpha"], p["a"])
        if kind == "power":
            value = po.pathway_power(params, p["rho"], x)
        elif kind == "bessel":
            value = po.pathway_bessel(params, p["rho"], BesselParams(p["p"], p["b"], p["c"]), x).value
        elif kind in po.TRIG_KINDS:
            value = po.pathway_trig(kind, params, p["rho"], p["c"], x).value
        else:
            raise ParameterError(f"unknown image kind {kind!r}")
    write_csv(("kind", "x", "value"), [(kind, x, value)], cfg.output)
    return EXIT_OK


VERIFY_GROUPS = {
    "power": ("power",),
    "bessel": ("bessel",),
    "trig": po.TRIG_KINDS,
    "all": ("power", "bessel") + po.TRIG_KINDS,
    **{k: (k,) for k in po.TRIG_KINDS},
}


def cmd_pathway_verify(cfg: RunConfig) -> int:
    p = cfg.params
    kinds = VERIFY_GROUPS[p["group"]]
    gate = p["gate"]
    results = [po.cross_check(k, gate=gate) for k in kinds]
    rows = [(r["kind"], r["points"], r["max_abs"], r["max_rel"], r["failures"], "PASS" if r["passed"] else "FAIL")
            for r in results]
    write_csv(("kind", "points", "max_abs", "max_rel", "failures", "status"), rows, cfg.output)
    ok = all(r["passed"] for r in results)
    worst = max(r["max_abs"] for r in results)
    sys.stderr.write(f"{'PASS' if ok else 'FAIL'}: max discrepancy {worst:.3e} (gate {gate:g})\n")
    return EXIT_OK if ok else EXIT_FAIL


def _kinetics_params(p) -> kinetics.KineticsParams:
    return kinetics.KineticsParams(p["N0"], p["c"], p["nu"], p["mu"], p["b"], p["alpha"])


MIXTURE_T = (0.25, 0.5, 1.0, 2.0)
MIXTURE_MU = (1.0, 2.0)
MIXTURE_NU = (0.5, 1.0)
MIXTURE_ALPHA = (1.5, 2.0)


def mixture_check(literal: bool = False):
    """Rows ``(t, mu, nu, alpha, mixture, closed, |diff|)`` over the acceptance grid."""
    rows = []
    for mu in MIXTURE_MU:
        for nu in MIXTURE_NU:
            for alpha in MIXTURE_ALPHA:
                kp = kinetics.KineticsParams(nu=nu, mu=mu, alpha_k=alpha)
                for t in MIXTURE_T:
                    mix = kinetics.mixture_integral(kp, t, literal=literal)
                    closed = kinetics.unconditional_density(kp, t)
                    rows.append((t, mu, nu, alpha, mix, closed, abs(mix - closed)))
    return rows


def cmd_kinetics(cfg: RunConfig) -> int:
    p = cfg.params
    law = cfg.action
    if law == "mixture-check":
        rows = mixture_check(p.get("literal", False))
        write_csv(("t", "mu", "nu", "alpha", "mixture", "closed", "abs_diff"), rows, cfg.output)
        worst = max(r[-1] for r in rows)
        ok = worst <= MIXTURE_GATE
        sys.stderr.write(f"{'PASS' if ok else 'FAIL'}: max deviation {worst:.3e} (gate {MIXTURE_GATE:g})\n")
        return EXIT_OK if ok else EXIT_FAIL
    t = _t_grid(p)
    if law == "exp":
        N = [kinetics.exponential_decay(p["N0"], p["c"], ti) for ti in t]
    elif law == "ml":
        N = [kinetics.ml_decay(p["N0"], p["c"], p["nu"], ti) for ti in t]
    elif law == "pathway":
        kp = _kinetics_params(p)
        if np.any(t <= 0):
            raise ParameterError("pathway law needs t > 0")
        N = kinetics.unconditional_density(kp, t)
    else:
        raise ParameterError(f"unknown law {law!r}")
    write_csv(("t", "N"), zip(t, np.atleast_1d(N)), cfg.output)
    return EXIT_OK


def dispatch(cfg: RunConfig) -> int:
    if cfg.command == "entropy":
        return cmd_entropy(cfg)
    if cfg.command == "generate":
        return cmd_generate(cfg)
    if cfg.command == "dea":
        return cmd_dea(cfg)
    if cfg.command == "pathway":
        return cmd_pathway_eval(cfg) if cfg.params.get("mode") == "eval" else cmd_pathway_verify(cfg)
    if cfg.command == "kinetics":
        return cmd_kinetics(cfg)
    raise ParameterError(f"unknown command {cfg.command!r}")


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="replay a saved RunConfig JSON (other arguments ignored)")
    common.add_argument("--save-config", default=argparse.SUPPRESS,
                        help="write the RunConfig of this run to a JSON file")
    parser = argparse.ArgumentParser(prog="pathway-entropy", description=__doc__.split("\n\n")[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command")

    def add(subparsers, name, **kw):
        return subparsers.add_parser(name, parents=[common], **kw)

    def out(p, summary=False):
        p.add_argument("-o", "--output", help="CSV output file (default stdout)")
        if summary:
            p.add_argument("--summary", help="JSON summary file (default stderr)")

    e = add(sub, "entropy", help="entropy of a distribution or gridded pdf")
    e.add_argument("input", help="CSV file or - for stdin")
    e.add_argument("--kind", required=True, choices=entropy.DISCRETE_KINDS)
    e.add_argument("--alpha", type=_float_list, default=[1.0], help="alpha value(s), comma-separated")
    e.add_argument("--pdf", action="store_true", help="input is a two-column (x, f) density")
    out(e)

    g = add(sub, "generate", help="seeded synthetic series")
    g.add_argument("kind", choices=("gaussian", "stable"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--D", type=float, default=0.5, help="gaussian diffusion constant (variance 2D)")
    g.add_argument("--index", type=float, default=1.5, help="stable index in (1, 2)")
    out(g)

    d = add(sub, "dea", help="diffusion entropy analysis")
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="series CSV file or - for stdin")
    src.add_argument("--generate", choices=("gaussian", "stable"), help="analyse a seeded synthetic series")
    src.add_argument("--figure1", choices=("tsallis", "mathai"),
                     help="emit the closed-form Gaussian entropy curves for alpha in 0.8, 1.0, 1.2")
    d.add_argument("--n", type=int, default=65536)
    d.add_argument("--seed", type=int)
    d.add_argument("--D", type=float, default=0.5)
    d.add_argument("--index", type=float, default=1.5)
    d.add_argument("--indicator", default="shannon", choices=("shannon", "tsallis", "mathai", "mathai_extensive"))
    d.add_argument("--alpha", type=float, default=1.0)
    d.add_argument("--t-min", type=float, default=None)
    d.add_argument("--t-max", type=float, default=None)
    d.add_argument("--count", type=int, default=25)
    d.add_argument("--bin-rule", default="iqr_min", choices=("iqr_min", "std_max"))
    d.add_argument("--bin-width", type=float)
    out(d, summary=True)

    pw = add(sub, "pathway", help="pathway operator images")
    pws = pw.add_subparsers(dest="mode", required=True)
    ev = add(pws, "eval", help="closed-form image value")
    ev.add_argument("kind", choices=("power", "bessel", "rl-cos") + po.TRIG_KINDS)
    ev.add_argument("--eta", type=float, required=True)
    ev.add_argument("--alpha", type=float, default=0.0)
    ev.add_argument("--a", type=float, default=1.0)
    ev.add_argument("--rho", type=float, default=1.0)
    ev.add_argument("--x", type=float, required=True)
    ev.add_argument("--c", type=float, default=1.0, help="trig frequency or Bessel c")
    ev.add_argument("--p", type=float, default=0.0, help="Bessel order")
    ev.add_argument("--b", type=float, default=1.0, help="Bessel b")
    out(ev)
    vf = add(pws, "verify", help="closed form vs quadrature over the default grid")
    vf.add_argument("group", choices=tuple(VERIFY_GROUPS))
    vf.add_argument("--gate", type=float, default=po.GATE)
    out(vf)

    k = add(sub, "kinetics", help="relaxation curves")
    k.add_argument("law", choices=("exp", "ml", "pathway", "mixture-check"))
    k.add_argument("--N0", type=float, default=1.0)
    k.add_argument("--c", type=float, default=1.0)
    k.add_argument("--nu", type=float, default=1.0)
    k.add_argument("--mu", type=float, default=1.0)
    k.add_argument("--b", type=float, default=1.0)
    k.add_argument("--alpha", type=float, default=2.0, help="pathway alpha > 1")
    k.add_argument("--t", type=_float_list, help="explicit comma-separated t values")
    k.add_argument("--t-min", type=float, default=0.1)
    k.add_argument("--t-max", type=float, default=10.0)
    k.add_argument("--count", type=int, default=50)
    k.add_argument("--log-grid", action="store_true", help="geometric instead of linear t spacing")
    k.add_argument("--literal", action="store_true", help="mixture-check with the paper's literal nu index")
    out(k)
    return parser


_ACTION_KEYS = {"generate": "kind", "pathway": "kind", "kinetics": "law"}
_DROP = {"config", "save_config", "command", "output", "summary"}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    params = {k: v for k, v in vars(ns).items() if k not in _DROP}
    action = None
    key = _ACTION_KEYS.get(ns.command)
    if ns.command == "pathway":
        action = params.pop("kind", None) if ns.mode == "eval" else None
        if ns.mode == "verify":
            params["group"] = params.get("group")
    elif key:
        action = params.pop(key)
    if ns.command == "dea" and params.get("figure1"):
        params["t_min"] = 1.0 if params.get("t_min") is None else params["t_min"]
        params["t_max"] = 10.0 if params.get("t_max") is None else params["t_max"]
    return RunConfig(ns.command, action, params, getattr(ns, "output", None), getattr(ns, "summary", None))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    config, save_config = getattr(ns, "config", None), getattr(ns, "save_config", None)
    try:
        if config:
            cfg = RunConfig.from_json(_read_text(config))
        elif ns.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_ERROR
        else:
            cfg = config_from_args(ns)
        if save_config:
            _emit(cfg.to_json() + "\n", save_config)
        return dispatch(cfg)
    except (PathwayEntropyError, ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
