"""Command-line front end.

Machine-readable JSON goes to stdout, a one-line human summary to stderr.
Exit status: 0 for success or a true verdict, 1 for a false verdict or a
failed check, 2 for usage and validation problems.  Rationals print as
"p/q" everywhere; only the slope-law and power-law reports carry floats,
together with their working precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .commute import boundary_checks, classify_triviality, commutes, halve, reduce_fully
from .conjugacy import (
    RESIDUAL_DIGITS,
    conjugate_map,
    conjugate_plmap,
    dyadic_density_demo,
    fit_conjugacy,
    power_law_check,
    slope_law_residual,
)
from .core import PLMap, format_rational
from .errors import EmptyWindowError, PLError, ValidationError
from .formats import (
    parse_plmap,
    parse_unimodal,
    plmap_to_dict,
    plmap_to_json,
    points_to_csv,
    points_to_svg,
    sample_points,
)
from .unimodal import UnimodalMap, density_report, mu_grid, tent, xi

FORMATS = ("json", "csv", "svg-points")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: subcommand, input paths, integer knobs, tolerance,
    output destination and format."""

    subcommand: str
    kind: str | None = None
    g_path: str | None = None
    psi_path: str | None = None
    map_path: str | None = None
    h_path: str | None = None
    of_path: str | None = None
    depth: int | None = None
    n: int | None = None
    t: int | None = None
    k: int | None = None
    pmax: int | None = None
    samples: int | None = None
    tolerance: float = 1e-9
    output: str | None = None
    format: str = "json"
    threads: int = 1

    def __post_init__(self) -> None:
        for name in ("depth", "n", "t", "k", "pmax"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValidationError(f"--{name} must be >= 1, got {value}")
        if self.tolerance <= 0:
            raise ValidationError(f"--tolerance must be positive, got {self.tolerance}")
        if self.threads < 1:
            raise ValidationError(f"--threads must be >= 1, got {self.threads}")
        if self.format not in FORMATS:
            raise ValidationError(f"--format must be one of {', '.join(FORMATS)}")


def _read(path: str | None, flag: str) -> str:
    if path is None:
        raise ValidationError(f"missing required option {flag}")
    p = Path(path)
    if not p.is_file():
        raise ValidationError(f"{flag}: no such file: {path}")
    return p.read_text()


def _load_unimodal(path: str | None, flag: str) -> UnimodalMap:
    return parse_unimodal(_read(path, flag))


def _load_plmap(path: str | None, flag: str) -> PLMap:
    return parse_plmap(_read(path, flag))


def _write_map(m: PLMap, path: str | None) -> None:
    if path is not None:
        Path(path).write_text(plmap_to_json(m))


def _map_report(m: PLMap, cfg: RunConfig, summary: str) -> tuple[dict, str, int]:
    _write_map(m, cfg.output)
    return plmap_to_dict(m), summary, 0


def _run_make(cfg: RunConfig) -> tuple[dict, str, int]:
    if cfg.kind == "tent":
        return _map_report(tent(), cfg, "tent map")
    if cfg.kind == "xi":
        if cfg.t is None:
            raise ValidationError("make xi requires --t")
        return _map_report(xi(cfg.t), cfg, f"{cfg.t}-lap sawtooth")
    if cfg.kind == "conjugate":
        h = _load_plmap(cfg.h_path, "--h")
        base = _load_plmap(cfg.of_path, "--of") if cfg.of_path else tent()
        try:
            result: PLMap = conjugate_map(UnimodalMap.from_plmap(base), h)
            shape = "unimodal"
        except ValidationError:
            result = conjugate_plmap(base, h)
            shape = "piecewise-linear"
        return _map_report(result, cfg, f"conjugated {shape} map")
    raise ValidationError(f"unknown make target {cfg.kind!r}")


def _run_check_commute(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    psi = _load_plmap(cfg.psi_path, "--psi")
    verdict = commutes(g, psi)
    return (
        {"commutes": verdict},
        "maps commute" if verdict else "maps do not commute",
        0 if verdict else 1,
    )


def _run_classify(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    psi = _load_plmap(cfg.psi_path, "--psi")
    cls = classify_triviality(g, psi)
    return cls.to_dict(), f"commutator is {cls.kind}", 0


def _run_boundary(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    psi = _load_plmap(cfg.psi_path, "--psi")
    report = boundary_checks(g, psi)
    ok = report.all_passed
    return (
        report.to_dict(),
        "all boundary checks passed" if ok else "boundary check FAILED",
        0 if ok else 1,
    )


def _run_halve(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    psi = _load_plmap(cfg.psi_path, "--psi")
    out = halve(g, psi)
    return _map_report(out, cfg, f"halved to {out.laps()} laps")


def _run_reduce(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    psi = _load_plmap(cfg.psi_path, "--psi")
    out = reduce_fully(g, psi)
    return _map_report(out, cfg, f"reduced to {out.laps()} laps")


def _run_mu(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    if cfg.n is None:
        raise ValidationError("mu requires --n")
    grid = mu_grid(g, cfg.n, threads=cfg.threads)
    return (
        {"depth": grid.depth, "points": [format_rational(p) for p in grid.points]},
        f"{len(grid.points)} grid points at depth {grid.depth}",
        0,
    )


def _run_density(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    depth = cfg.depth if cfg.depth is not None else 8
    gaps = density_report(g, depth, threads=cfg.threads)
    # each refinement can at best halve the max gap; treat a cut to <= 3/4
    # as shrinking, anything weaker as stalling
    if len(gaps) < 2:
        verdict = "inconclusive"
    elif 4 * gaps[-1] <= 3 * gaps[-2]:
        verdict = "gaps-shrinking"
    else:
        verdict = "gaps-stalled"
    report = {
        "depth": depth,
        "max_gaps": [format_rational(q) for q in gaps],
        "heuristic_verdict": verdict,
        "basis": "finite-depth evidence",
    }
    return report, f"{verdict} (finite-depth evidence, depth {depth})", 0


def _run_fit(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    if cfg.depth is None:
        raise ValidationError("fit-conjugacy requires --depth")
    fit = fit_conjugacy(g, cfg.depth)
    spread = None
    if fit.stabilized and cfg.depth >= 3:
        try:
            law = power_law_check(g, cfg.depth, cfg.tolerance)
            spread = law.max_relative_spread
        except EmptyWindowError:
            spread = None
    _write_map(fit.interpolant, cfg.output)
    report = {
        "depth": fit.depth,
        "stabilized": fit.stabilized,
        "alpha": fit.alpha,
        "omega": fit.omega,
        "max_omega_spread": spread,
        "interpolant": plmap_to_dict(fit.interpolant),
    }
    summary = "fit stabilized" if fit.stabilized else "fit did not stabilize"
    return report, summary, 0 if fit.stabilized else 1


def _run_slope_law(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    psi = _load_plmap(cfg.psi_path, "--psi")
    if cfg.t is None:
        raise ValidationError("slope-law requires --t")
    residual = slope_law_residual(g, psi, cfg.t)
    ok = residual <= cfg.tolerance
    report = {
        "residual": residual,
        "tolerance": cfg.tolerance,
        "within_tolerance": ok,
        "precision_digits": RESIDUAL_DIGITS,
    }
    return report, f"slope-law residual {residual!r}", 0 if ok else 1


def _run_power_law(cfg: RunConfig) -> tuple[dict, str, int]:
    g = _load_unimodal(cfg.g_path, "--g")
    if cfg.depth is None:
        raise ValidationError("power-law requires --depth")
    report = power_law_check(g, cfg.depth, cfg.tolerance)
    doc = report.to_dict()
    doc["precision_digits"] = RESIDUAL_DIGITS
    if not report.applicable:
        return doc, "power law not applicable: no valid fit", 1
    ok = bool(report.within_tolerance)
    return doc, f"omega spread {report.max_relative_spread!r}", 0 if ok else 1


def _run_dyadic(cfg: RunConfig) -> tuple[dict, str, int]:
    for name in ("k", "n", "t", "pmax"):
        if getattr(cfg, name) is None:
            raise ValidationError(f"dyadic-density requires --{name}")
    gaps = dyadic_density_demo(cfg.k, cfg.n, cfg.t, cfg.pmax)
    window = [format_rational(q) for q in
              (Fraction(1, 2 ** cfg.n), Fraction(1, 2 ** (cfg.n - 1)))]
    report = {
        "window": window,
        "gaps": [format_rational(q) for q in gaps],
    }
    return report, f"final max gap {format_rational(gaps[-1])}", 0


def _run_emit(cfg: RunConfig) -> tuple[dict, str, int]:
    m = _load_plmap(cfg.map_path, "--map")
    if cfg.samples is None or cfg.samples < 2:
        raise ValidationError("emit requires --samples >= 2")
    if cfg.output is None:
        raise ValidationError("emit requires -o/--output")
    if cfg.format == "csv":
        body = points_to_csv(m, cfg.samples)
        rows = body.count("\n") - 1
    elif cfg.format == "svg-points":
        body = points_to_svg(m, cfg.samples)
        rows = len(sample_points(m, cfg.samples))
    else:
        pts = sample_points(m, cfg.samples)
        body = json.dumps(
            {"points": [[format_rational(x), format_rational(y)] for x, y in pts]},
            indent=2,
        ) + "\n"
        rows = len(pts)
    Path(cfg.output).write_text(body)
    return (
        {"path": cfg.output, "rows": rows, "format": cfg.format},
        f"wrote {rows} points to {cfg.output}",
        0,
    )


_HANDLERS = {
    "make": _run_make,
    "check-commute": _run_check_commute,
    "classify": _run_classify,
    "boundary-checks": _run_boundary,
    "halve": _run_halve,
    "reduce": _run_reduce,
    "mu": _run_mu,
    "density": _run_density,
    "fit-conjugacy": _run_fit,
    "slope-law": _run_slope_law,
    "power-law": _run_power_law,
    "dyadic-density": _run_dyadic,
    "emit": _run_emit,
}


def run(cfg: RunConfig) -> int:
    """Dispatch a parsed configuration; returns the process exit status."""
    try:
        report, summary, status = _HANDLERS[cfg.subcommand](cfg)
    except PLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)
    return status


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="plmaps",
        description="Exact piecewise-linear interval map toolkit",
    )
    top.add_argument("--threads", type=int, default=1,
                     help="worker threads for per-level grid inversions")
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("make", help="construct tent, sawtooth, or conjugated maps")
    p.add_argument("kind", choices=("tent", "xi", "conjugate"))
    p.add_argument("--t", type=int, help="sawtooth lap count")
    p.add_argument("--h", dest="h_path", help="conjugating homeomorphism file")
    p.add_argument("--of", dest="of_path", help="map to conjugate (default: tent)")
    p.add_argument("-o", "--output", help="write the map to this path")

    for name, help_text in (
        ("check-commute", "test psi o g = g o psi exactly"),
        ("classify", "classify a commutator as constant/iterate/nontrivial"),
        ("boundary-checks", "boundary behaviour report for a commutator"),
        ("halve", "halve the lap count of a commutator"),
        ("reduce", "halve repeatedly until the lap count is odd"),
        ("slope-law", "residual of the slope law at 0"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--g", dest="g_path", required=True, help="unimodal map file")
        p.add_argument("--psi", dest="psi_path", required=True, help="commutator file")
        if name in ("halve", "reduce"):
            p.add_argument("-o", "--output", help="write the result map to this path")
        if name == "slope-law":
            p.add_argument("--t", type=int, required=True, help="expected lap count")
            p.add_argument("--tolerance", type=float, default=1e-9)

    p = sub.add_parser("mu", help="zero pre-image grid at a depth")
    p.add_argument("--g", dest="g_path", required=True)
    p.add_argument("--n", type=int, required=True, help="grid depth")

    p = sub.add_parser("density", help="max-gap evidence for pre-image density")
    p.add_argument("--g", dest="g_path", required=True)
    p.add_argument("--depth", type=int, default=8)

    p = sub.add_parser("fit-conjugacy", help="fit a conjugacy from matched grids")
    p.add_argument("--g", dest="g_path", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("-o", "--output", help="write the interpolant to this path")

    p = sub.add_parser("power-law", help="power-law profile of the fitted conjugacy")
    p.add_argument("--g", dest="g_path", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=1e-9)

    p = sub.add_parser("dyadic-density", help="folded multiples in a dyadic window")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)

    p = sub.add_parser("emit", help="sample a map to CSV/SVG/JSON points")
    p.add_argument("--map", dest="map_path", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("-o", "--output", required=True)

    return top


def main(argv: list[str] | None = None) -> int:
    ns = _parser().parse_args(argv)
    fields = (
        "subcommand", "kind", "g_path", "psi_path", "map_path", "h_path",
        "of_path", "depth", "n", "t", "k", "pmax", "samples", "tolerance",
        "output", "format", "threads",
    )
    kwargs = {f: getattr(ns, f) for f in fields if hasattr(ns, f)}
    try:
        cfg = RunConfig(**kwargs)
    except PLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


def entrypoint() -> None:
    sys.exit(main())
