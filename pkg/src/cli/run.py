"""
Command-line front end.

Commands: ml-eval, density, subordinate, diffusion, bs-price, verify.
Tables are written as CSV (first line a '# fracevo ...' comment with the
settings, then the header, floats with 17 significant digits) or JSON.
verify always writes a JSON report.

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure (or a failed
verification check, or a row with converged=False), 4 I/O failure. A table with
non-converged rows is still written before exiting 3.
"""

import argparse
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import numpy as np
import pandas as pd
from scipy.special import erfcx, ndtr

from .. import __version__
from ..errors import NonConvergenceError, NumericalError
from ..models.blackscholes import (
    OptionSpec,
    bs_price,
    frac_bs_price,
    frac_bs_residual,
    to_transformed,
)
from ..models.diffusion import frac_heat_kernel_values, frac_kernel_mellin_closed, mass_check, tabulate_frac_kernel
from ..models.subordination import SubordinationRequest, subordinate, subordination_nodes
from ..numerics.quadrature import QuadratureSpec, Scheme
from ..numerics.transforms import (
    TimeFunction,
    check_lemma1,
    check_lemma2,
    mellin,
    mellin_from_laplace,
    riemann_liouville,
)
from ..special.mittag_leffler import (
    MLParams,
    SeriesConfig,
    ml_density,
    ml_density_generalized,
    ml_density_values,
    ml_generalized,
    ml_standard,
    ml_standard_values,
)

logger = logging.getLogger(__name__)

COMMANDS = ("ml-eval", "density", "subordinate", "diffusion", "bs-price", "verify")
FORMATS = ("csv", "json")
SUITES = ("lemmas", "special", "subordination", "diffusion", "blackscholes")
SOLUTIONS = ("exp", "const")

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL, EXIT_IO = 0, 2, 3, 4
# grid points may overshoot stop by this fraction of a step (rounding only)
_GRID_SLACK = 1e-9

_SETTING_KEYS = ("scheme", "panels", "nodes_per_panel", "tail_cutoff", "abs_tol", "rel_tol", "max_terms")

# Defaults per command; a JSON --config file and then explicit flags override them.
_DEFAULTS: dict[str, dict[str, Any]] = {
    "ml-eval": {"alpha": None, "beta": 1.0, "z_grid": None},
    "density": {"alpha": None, "beta": 1.0, "z_grid": None},
    "subordinate": {"alpha": None, "solution": "exp", "lam": 1.0, "t_grid": None, "form": "lemma3"},
    "diffusion": {"alpha": 1.0, "r_grid": None, "t_grid": None, "n": 1},
    "bs-price": {
        "alpha": 1.0, "spot_grid": None, "strike": None, "rate": None, "sigma": None, "expiry": None, "t": 0.0,
    },
    "verify": {"alpha": 0.5, "suite": "all"},
}
_SETTING_DEFAULTS = {
    "scheme": Scheme.GAUSS_LEGENDRE_PANELS.value,
    "panels": 64,
    "nodes_per_panel": 16,
    "tail_cutoff": 40.0,
    "abs_tol": 1e-10,
    "rel_tol": 1e-14,
    "max_terms": 500,
}


@dataclass(frozen=True)
class RunConfig:
    """One command with its merged parameters and output choices."""

    command: str
    params: dict = field(default_factory=dict)
    output_path: Optional[Path] = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"command must be one of {COMMANDS}; got {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}; got {self.format!r}")


def parse_grid(spec: str) -> list[float]:
    """
    Parse 'start:stop:step' (never past stop; a last point within rounding of stop is snapped to it) or 'a,b,c'.

    Returns a strictly increasing list of finite floats; raises ValueError otherwise.
    """
    text = str(spec).strip()
    if not text:
        raise ValueError("grid spec is empty")
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise ValueError
            start, stop, step = (float(p) for p in parts)
        else:
            values = [float(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed grid spec {spec!r}; expected 'start:stop:step' or 'a,b,c'") from None

    if ":" in text:
        if not all(math.isfinite(v) for v in (start, stop, step)):
            raise ValueError(f"grid spec {spec!r} has non-finite entries")
        if step <= 0:
            raise ValueError(f"grid step must be positive; got {step}")
        if start > stop:
            raise ValueError(f"grid start {start} exceeds stop {stop}")
        count = int(math.floor((stop - start) / step + _GRID_SLACK)) + 1
        values = [start + k * step for k in range(count)]
        if abs(values[-1] - stop) <= _GRID_SLACK * step:
            values[-1] = stop
    return _as_grid(values, spec)


def _as_grid(values, source) -> list[float]:
    if isinstance(values, str):
        return parse_grid(values)
    if isinstance(values, (int, float)):
        values = [values]
    values = [float(v) for v in values]
    if not values or not all(math.isfinite(v) for v in values):
        raise ValueError(f"grid {source!r} must be a non-empty list of finite numbers")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"grid {source!r} must be strictly increasing")
    return values


def _require(params: dict, *names: str) -> None:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise ValueError(f"missing required parameter(s): {', '.join('--' + n.replace('_', '-') for n in missing)}")


def _settings(params: dict) -> tuple[QuadratureSpec, SeriesConfig]:
    quad = QuadratureSpec(
        scheme=params["scheme"],
        panels=int(params["panels"]),
        nodes_per_panel=int(params["nodes_per_panel"]),
        tail_cutoff=float(params["tail_cutoff"]),
        abs_tol=float(params["abs_tol"]),
    )
    return quad, SeriesConfig(rel_tol=float(params["rel_tol"]), max_terms=int(params["max_terms"]))


def _ml_eval(params: dict, quad: QuadratureSpec, cfg: SeriesConfig) -> pd.DataFrame:
    _require(params, "alpha", "z_grid")
    ml = MLParams(float(params["alpha"]), float(params["beta"]))
    rows = []
    for z in _as_grid(params["z_grid"], "z"):
        result = ml_generalized(ml, z, cfg)
        rows.append({"alpha": ml.alpha, "beta": ml.beta, "z": z, "value": result.value,
                     "terms_used": result.terms_used, "converged": result.converged, "method": result.method})
    return pd.DataFrame(rows)


def _density(params: dict, quad: QuadratureSpec, cfg: SeriesConfig) -> pd.DataFrame:
    _require(params, "alpha", "z_grid")
    ml = MLParams(float(params["alpha"]), float(params["beta"]))
    rows = []
    for z in _as_grid(params["z_grid"], "z"):
        if ml.beta == 1.0 and ml.alpha < 1.0:
            result = ml_density(ml.alpha, z, cfg)
        else:
            result = ml_density_generalized(ml, z, cfg)
        rows.append({"alpha": ml.alpha, "beta": ml.beta, "z": z, "value": result.value,
                     "terms_used": result.terms_used, "converged": result.converged, "method": result.method})
    return pd.DataFrame(rows)


def _builtin_solution(name: str, lam: float) -> TimeFunction:
    if name == "exp":
        return TimeFunction(lambda t: np.exp(-lam * np.asarray(t, dtype=float)), label=f"exp(-{lam:g} t)")
    if name == "const":
        return TimeFunction(lambda t: np.ones_like(np.asarray(t, dtype=float)), label="1")
    raise ValueError(f"solution must be one of {SOLUTIONS}; got {name!r}")


def _subordinate(params: dict, quad: QuadratureSpec, cfg: SeriesConfig) -> pd.DataFrame:
    _require(params, "alpha", "t_grid")
    lam = float(params["lam"])
    solution = _builtin_solution(params["solution"], lam)
    rows = []
    for t in _as_grid(params["t_grid"], "t"):
        request = SubordinationRequest(solution, float(params["alpha"]), t, quad, params["form"], cfg)
        result = subordinate(request)
        rows.append({"solution": params["solution"], "lam": lam, "alpha": request.alpha, "t": t,
                     "value": result.value, "mass_used": result.density_mass_used})
    return pd.DataFrame(rows)


def _diffusion(params: dict, quad: QuadratureSpec, cfg: SeriesConfig) -> pd.DataFrame:
    _require(params, "r_grid", "t_grid")
    return tabulate_frac_kernel(
        _as_grid(params["r_grid"], "r"), _as_grid(params["t_grid"], "t"),
        int(params["n"]), float(params["alpha"]), quad,
    )


def _bs_price(params: dict, quad: QuadratureSpec, cfg: SeriesConfig) -> pd.DataFrame:
    _require(params, "spot_grid", "strike", "rate", "sigma", "expiry")
    alpha, t = float(params["alpha"]), float(params["t"])
    rows = []
    for spot in _as_grid(params["spot_grid"], "spot"):
        opt = OptionSpec(spot, float(params["strike"]), float(params["rate"]), float(params["sigma"]),
                         float(params["expiry"]))
        coords = to_transformed(opt, t)
        result = frac_bs_price(spot, opt.strike, alpha, coords.tau, coords.lambda0, quad)
        rows.append({"spot": spot, "strike": opt.strike, "rate": opt.rate, "sigma": opt.sigma,
                     "expiry": opt.expiry, "t": t, "tau": coords.tau, "lambda0": coords.lambda0,
                     "alpha": alpha, "value": result.value, "mass_used": result.density_mass_used})
    return pd.DataFrame(rows)


def _check(name: str, value: float, threshold: float) -> dict:
    value = float(value)
    return {"name": name, "value": value, "threshold": threshold, "passed": bool(value < threshold)}


def _scalar_pair(alpha: float) -> tuple[TimeFunction, TimeFunction]:
    u = TimeFunction(lambda t: np.exp(-np.asarray(t, dtype=float)), label="exp(-t)")
    u_alpha = TimeFunction(
        lambda t: ml_standard_values(alpha, np.asarray(t, dtype=float) ** alpha), label=f"E_{alpha:g}(-t^{alpha:g})"
    )
    return u, u_alpha


def _suite_lemmas(alpha: float, quad: QuadratureSpec, cfg: SeriesConfig) -> list[dict]:
    u, u_alpha = _scalar_pair(alpha)
    ramp = TimeFunction(lambda t: np.asarray(t, dtype=float), label="t")
    rl_expected = math.gamma(2.0) / math.gamma(2.0 + alpha)
    return [
        _check("laplace_identity", check_lemma1(u, u_alpha, alpha, [1.0, 2.0], quad), 1e-6),
        _check("mellin_identity", check_lemma2(u, u_alpha, alpha, None, quad), 1e-5),
        _check("mellin_laplace_consistency", abs(mellin(u, 0.5, quad) - mellin_from_laplace(u, 0.5, quad)), 1e-6),
        _check("riemann_liouville_power_rule", abs(riemann_liouville(ramp, alpha, 1.0, quad) - rl_expected), 1e-8),
    ]


def _suite_special(alpha: float, quad: QuadratureSpec, cfg: SeriesConfig) -> list[dict]:
    z = np.linspace(0.0, 6.0, 61)
    half_density = np.max(np.abs(ml_density_values(0.5, z, cfg) - np.exp(-(z**2) / 4.0) / math.sqrt(math.pi)))
    x = np.linspace(0.0, 4.0, 41)
    half_ml = np.max(np.abs(ml_standard_values(0.5, x, cfg) - erfcx(x)))
    checks = [
        _check("half_order_density_closed_form", half_density, 1e-10),
        _check("half_order_mittag_leffler_erfc", half_ml, 1e-9),
    ]
    if alpha < 1.0:
        nodes, weights = subordination_nodes(alpha, quad, cfg)
        laplace_gap = max(abs(weights @ np.exp(-p * nodes) - ml_standard(alpha, p, cfg).value)
                          for p in (0.5, 1.0, 2.0))
        checks += [
            _check("density_normalization", abs(weights.sum() - 1.0), 1e-8),
            _check("density_laplace_property", laplace_gap, 1e-8),
        ]
    return checks


def _suite_subordination(alpha: float, quad: QuadratureSpec, cfg: SeriesConfig) -> list[dict]:
    worst = 0.0
    for lam in (0.5, 1.0, 2.0):
        solution = _builtin_solution("exp", lam)
        for t in (0.25, 1.0, 4.0):
            value = subordinate(SubordinationRequest(solution, alpha, t, quad)).value
            worst = max(worst, abs(value - ml_standard(alpha, lam * t**alpha, cfg).value))
    solution = _builtin_solution("exp", 1.0)
    lemma3 = subordinate(SubordinationRequest(solution, alpha, 1.0, quad)).value
    theorem1 = subordinate(SubordinationRequest(solution, alpha, 1.0, quad, form="theorem1")).value
    return [
        _check("scalar_evolution_oracle", worst, 1e-7),
        _check("form_equivalence", abs(lemma3 - theorem1), 2.0 * quad.abs_tol),
    ]


def _suite_diffusion(alpha: float, quad: QuadratureSpec, cfg: SeriesConfig) -> list[dict]:
    s = 0.25 * alpha
    kernel = TimeFunction(lambda t: frac_heat_kernel_values(1.0, t, 1, alpha, quad), label="G_alpha(1, t)")
    closed = frac_kernel_mellin_closed(1.0, s, 1, alpha)
    return [
        _check("kernel_mass", abs(mass_check(1.0, 1, alpha, quad) - 1.0), 1e-6),
        _check("kernel_mellin_cross_check", abs(mellin(kernel, s, quad) / closed - 1.0), 1e-4),
    ]


def _textbook_call(spot: float, strike: float, rate: float, sigma: float, remaining: float) -> float:
    d1 = (math.log(spot / strike) + (rate + 0.5 * sigma**2) * remaining) / (sigma * math.sqrt(remaining))
    d2 = d1 - sigma * math.sqrt(remaining)
    return float(spot * ndtr(d1) - strike * math.exp(-rate * remaining) * ndtr(d2))


def _suite_blackscholes(alpha: float, quad: QuadratureSpec, cfg: SeriesConfig) -> list[dict]:
    opt = OptionSpec(100.0, 100.0, 0.02, 0.2, 1.0)
    transformed = bs_price(opt.spot, opt.strike, to_transformed(opt, 0.0))
    textbook = _textbook_call(opt.spot, opt.strike, opt.rate, opt.sigma, opt.expiry)
    threshold = 1e-5 if alpha == 1.0 else 1e-3
    residual = frac_bs_residual(120.0, 100.0, alpha, [0.05, 0.1], 1.0, quad)
    return [
        _check("parameterization_consistency", abs(transformed - textbook), 1e-10),
        _check("integral_equation_residual", residual, threshold),
    ]


_SUITE_RUNNERS = {
    "lemmas": _suite_lemmas,
    "special": _suite_special,
    "subordination": _suite_subordination,
    "diffusion": _suite_diffusion,
    "blackscholes": _suite_blackscholes,
}


def verify(suite: str, alpha: float, quad: QuadratureSpec, cfg: SeriesConfig) -> dict:
    """Run one suite (or 'all') and return the report dictionary."""
    if suite not in SUITES + ("all",):
        raise ValueError(f"suite must be one of {SUITES + ('all',)}; got {suite!r}")
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1; got {alpha}")
    checks = []
    for name in SUITES if suite == "all" else (suite,):
        for check in _SUITE_RUNNERS[name](alpha, quad, cfg):
            checks.append({"suite": name, **check})
            logger.info("%s/%s: %.3e (threshold %.0e) %s", name, check["name"], check["value"],
                        check["threshold"], "ok" if check["passed"] else "FAILED")
    return {
        "command": "verify",
        "version": __version__,
        "suite": suite,
        "alpha": alpha,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }


_TABLE_COMMANDS = {
    "ml-eval": _ml_eval,
    "density": _density,
    "subordinate": _subordinate,
    "diffusion": _diffusion,
    "bs-price": _bs_price,
}


def _header(config: RunConfig, settings: dict) -> str:
    described = " ".join(f"{k}={settings[k]}" for k in _SETTING_KEYS)
    return f"# fracevo {config.command} {__version__} {described}"


def _render(config: RunConfig, payload, settings: dict) -> str:
    if isinstance(payload, dict):
        return json.dumps(payload, indent=2) + "\n"
    if config.format == "json":
        document = {"command": config.command, "version": __version__, "settings": settings,
                    "rows": payload.to_dict(orient="records")}
        return json.dumps(document, indent=2, default=_json_default) + "\n"
    buffer = io.StringIO()
    buffer.write(_header(config, settings) + "\n")
    payload.to_csv(buffer, index=False, float_format="%.17g", lineterminator="\n")
    return buffer.getvalue()


def _json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


def _write(text: str, output_path: Optional[Path]) -> None:
    if output_path is None:
        sys.stdout.write(text)
        return
    Path(output_path).parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    logger.info("Written: %s", output_path)


def _error_record(code: int, exc: BaseException) -> None:
    record = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(record) + "\n")


def run(config: RunConfig) -> int:
    """
    Execute one command and write its artifact.

    Returns the exit code; failures also write a one-line JSON error record
    to standard error.
    """
    params = {**_SETTING_DEFAULTS, **_DEFAULTS[config.command], **config.params}
    try:
        quad, cfg = _settings(params)
        settings = {k: params[k] if k != "scheme" else quad.scheme.value for k in _SETTING_KEYS}
        if config.command == "verify":
            payload = verify(str(params["suite"]), float(params["alpha"]), quad, cfg)
        else:
            payload = _TABLE_COMMANDS[config.command](params, quad, cfg)
        _write(_render(config, payload, settings), config.output_path)
    except NumericalError as exc:
        _error_record(EXIT_NUMERICAL, exc)
        return EXIT_NUMERICAL
    except (ValueError, TypeError) as exc:
        _error_record(EXIT_INVALID, exc)
        return EXIT_INVALID
    except OSError as exc:
        _error_record(EXIT_IO, exc)
        return EXIT_IO

    if config.command == "verify" and not payload["passed"]:
        failed = [c["name"] for c in payload["checks"] if not c["passed"]]
        _error_record(EXIT_NUMERICAL, NumericalError(f"verification checks failed: {', '.join(failed)}"))
        return EXIT_NUMERICAL
    if "converged" in getattr(payload, "columns", ()) and not payload["converged"].all():
        bad = payload.loc[~payload["converged"].astype(bool), "z"].tolist()
        _error_record(EXIT_NUMERICAL, NonConvergenceError(f"series did not converge at z={bad}"))
        return EXIT_NUMERICAL
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="Output path (default: standard output).")
    parser.add_argument("--format", choices=FORMATS, default=None, help="Table format (default: csv).")
    parser.add_argument("--config", type=Path, default=None, help="JSON file with parameters; flags override it.")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")
    parser.add_argument("--scheme", choices=[s.value for s in Scheme], default=None, help="Quadrature scheme.")
    parser.add_argument("--panels", type=int, default=None, help="Quadrature panels (default: 64).")
    parser.add_argument("--nodes-per-panel", type=int, default=None, dest="nodes_per_panel",
                        help="Gauss-Legendre nodes per panel (default: 16).")
    parser.add_argument("--tail-cutoff", type=float, default=None, dest="tail_cutoff",
                        help="Half-line truncation (default: 40).")
    parser.add_argument("--abs-tol", type=float, default=None, dest="abs_tol", help="Absolute tolerance (default: 1e-10).")
    parser.add_argument("--rel-tol", type=float, default=None, dest="rel_tol",
                        help="Series truncation tolerance (default: 1e-14).")
    parser.add_argument("--max-terms", type=int, default=None, dest="max_terms", help="Series term cap (default: 500).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracevo",
        description="Mittag-Leffler functions, subordination, fractional heat kernels and option prices.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("ml-eval", "Generalized Mittag-Leffler function F_ab(z)."),
                            ("density", "Form factor f_a(z) or f_ab(z).")):
        p = commands.add_parser(name, help=help_text)
        p.add_argument("--alpha", type=float, default=None, help="Order alpha in (0, 1].")
        p.add_argument("--beta", type=float, default=None, help="Second parameter beta >= alpha (default: 1).")
        p.add_argument("--z", "--z-grid", dest="z_grid", default=None, help="Argument grid, 'a:b:step' or 'a,b,c'.")
        _add_common(p)

    p = commands.add_parser("subordinate", help="Fractional extension of a built-in scalar solution.")
    p.add_argument("--alpha", type=float, default=None, help="Order alpha in (0, 1].")
    p.add_argument("--solution", choices=SOLUTIONS, default=None, help="exp: exp(-lam t); const: 1 (default: exp).")
    p.add_argument("--lam", type=float, default=None, help="Decay rate of the exp solution (default: 1).")
    p.add_argument("--t-grid", dest="t_grid", default=None, help="Time grid.")
    p.add_argument("--form", choices=["lemma3", "theorem1"], default=None, help="Integral form (default: lemma3).")
    _add_common(p)

    p = commands.add_parser("diffusion", help="Tabulate the fractional heat kernel G_alpha(r, t).")
    p.add_argument("--alpha", type=float, default=None, help="Order alpha in (0, 1] (default: 1).")
    p.add_argument("--r-grid", dest="r_grid", default=None, help="Radial distance grid.")
    p.add_argument("--t-grid", dest="t_grid", default=None, help="Time grid.")
    p.add_argument("--n", type=int, default=None, help="Spatial dimension 1..10 (default: 1).")
    _add_common(p)

    p = commands.add_parser("bs-price", help="Fractional Black-Scholes call prices.")
    p.add_argument("--spot", "--spot-grid", dest="spot_grid", default=None, help="Spot price or spot grid.")
    p.add_argument("--strike", type=float, default=None)
    p.add_argument("--rate", type=float, default=None)
    p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--expiry", type=float, default=None)
    p.add_argument("--t", type=float, default=None, help="Calendar time t <= expiry (default: 0).")
    p.add_argument("--alpha", type=float, default=None, help="Order alpha in (0, 1] (default: 1).")
    _add_common(p)

    p = commands.add_parser("verify", help="Run verification suites and write a JSON report.")
    p.add_argument("--suite", choices=SUITES + ("all",), default=None, help="Suite to run (default: all).")
    p.add_argument("--alpha", type=float, default=None, help="Order alpha in (0, 1] (default: 0.5).")
    _add_common(p)
    return parser


def _load_config_file(path: Path) -> dict:
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must hold a JSON object")
    for key, value in data.items():
        items = value if isinstance(value, list) else [value]
        if not all(v is None or isinstance(v, (str, int, float)) for v in items):
            raise ValueError(f"config file {path}: {key!r} must be a number, a string or a list of numbers")
    return {str(k).lstrip("-").replace("-", "_"): v for k, v in data.items()}


def config_from_args(argv: Optional[list[str]] = None) -> tuple[RunConfig, bool]:
    """Parse argv into a RunConfig; returns (config, verbose)."""
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    verbose = args.pop("verbose")
    config_path = args.pop("config")
    file_params = _load_config_file(config_path) if config_path is not None else {}
    flags = {k: v for k, v in args.items() if v is not None}
    merged = {**file_params, **flags}
    output_path = merged.pop("out", None)
    fmt = merged.pop("format", "csv")
    return RunConfig(command, merged, Path(output_path) if output_path else None, fmt), verbose


def main(argv: Optional[list[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    try:
        config, verbose = config_from_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except OSError as exc:
        _error_record(EXIT_IO, exc)
        return EXIT_IO
    except (ValueError, TypeError) as exc:
        _error_record(EXIT_INVALID, exc)
        return EXIT_INVALID
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return run(config)
