"""Command-line front end: simulate | project | prob | census | report.

Every command that emits files writes them under ``--out`` together with a
``manifest.json`` recording the resolved configuration; re-running with that
configuration reproduces all attempt-count outputs byte-identically (timing
columns excluded, or zeroed up front with ``--no-timing``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, data
from .analysis import (
    CensusReport,
    TimeBreakdown,
    build_projection_table,
    convert_time,
    corpus_census,
    expected_attempts,
    fit_growth_model,
    log10_series,
    success_probability,
)
from .model import (
    Alphabet,
    GrowthModel,
    ProjectionTable,
    TargetText,
    alphabet_preset,
    read_measurement_csv,
)
from .scaled import ScaledDecimal
from .simulate import DEFAULT_ATTEMPT_BUDGET, ExperimentConfig, measure_throughput, run_experiment

SUMMARY_DIGITS = 3  # headline values match the published 3-significant-figure style


@dataclass
class RunManifest:
    """What a command did: resolved configuration plus every file it wrote."""

    command: str
    config: dict
    version: str = __version__
    outputs: list[str] = field(default_factory=list)

    def write(self, out_dir: Path) -> Path:
        path = out_dir / "manifest.json"
        if "manifest.json" not in self.outputs:
            self.outputs.append("manifest.json")
        payload = {
            "command": self.command,
            "version": self.version,
            "config": self.config,
            "outputs": sorted(self.outputs),
        }
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return path


def _parse_alphabet(spec: str) -> Alphabet:
    """A preset name (``letters``, ``letters+space``) or explicit symbols."""
    try:
        return alphabet_preset(spec)
    except ValueError:
        return Alphabet(spec)


def _write(out_dir: Path, name: str, text: str, manifest: RunManifest) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(text)
    manifest.outputs.append(name)


def _paper_style(x: ScaledDecimal) -> str:
    """Comma-decimal 3-significant-figure table style, e.g. ``2,68E+69``."""
    if x.mantissa == 0:
        return "0,00E+00"
    mantissa, exponent = x.to_string(3).split("e")
    return f"{mantissa.replace('.', ',')}E{int(exponent):+03d}"


def _series_csv(pairs: list[tuple[int, float]], column: str) -> str:
    lines = [f"prefix_len,{column}"]
    lines += [f"{n},{repr(value)}" for n, value in pairs]
    return "\n".join(lines) + "\n"


def _breakdown_lines(breakdown: TimeBreakdown, digits: int = SUMMARY_DIGITS) -> list[str]:
    fmt = lambda x: x.to_string(digits)  # noqa: E731
    return [
        f"estimated seconds: {fmt(breakdown.seconds)}",
        f"estimated hours:   {fmt(breakdown.hours)}",
        f"estimated years:   {fmt(breakdown.years)} (year = {breakdown.year_length_seconds:g} s)",
        f"universe ages:     {fmt(breakdown.universe_age_ratio)} "
        f"(universe age = {breakdown.universe_age_years:g} years)",
    ]


def _emit_projection(
    table: ProjectionTable,
    model: GrowthModel,
    out_dir: Path,
    manifest: RunManifest,
    paper_style: bool,
) -> list[str]:
    """Write projection CSV/JSON and the plot series; return printable lines."""
    fmt = _paper_style if paper_style else str
    _write(out_dir, "projection.csv", table.to_csv(fmt), manifest)
    _write(
        out_dir,
        "projection.json",
        json.dumps(table.to_json_rows(fmt), indent=2) + "\n",
        manifest,
    )
    attempts_pairs, seconds_pairs = log10_series(table)
    _write(out_dir, "attempts_log10.csv", _series_csv(attempts_pairs, "log10_attempts"), manifest)
    _write(out_dir, "seconds_log10.csv", _series_csv(seconds_pairs, "log10_seconds"), manifest)

    final = table.final
    breakdown = convert_time(final.seconds)
    lines = [
        f"growth factors: attempts {model.attempts_growth_factor:.3f}, "
        f"time {model.time_growth_factor:.3f}",
        f"final row ({final.prefix_len} characters, {final.region}): "
        f"attempts {final.attempts.to_string(SUMMARY_DIGITS)}",
        *_breakdown_lines(breakdown),
    ]
    return lines


# -- simulate ---------------------------------------------------------------


def cmd_simulate(args) -> int:
    alphabet = _parse_alphabet(args.alphabet)
    config = ExperimentConfig(
        target=TargetText(args.target),
        alphabet=alphabet,
        max_prefix_length=args.max_prefix,
        iterations=args.iterations,
        seed=args.seed,
        attempt_budget=args.budget,
        worker_count=args.workers,
        auto_extend_alphabet=args.extend_alphabet,
    )
    table = run_experiment(config)

    out_dir = Path(args.out)
    manifest = RunManifest(
        command="simulate",
        config={
            "target": args.target,
            "alphabet": alphabet.symbols,
            "max_prefix": args.max_prefix,
            "iterations": args.iterations,
            "seed": args.seed,
            "budget": args.budget,
            "workers": args.workers,
            "no_timing": args.no_timing,
            "extend_alphabet": args.extend_alphabet,
        },
    )
    csv_text = table.to_csv(include_timing=not args.no_timing)
    _write(out_dir, "measurements.csv", csv_text, manifest)
    manifest.write(out_dir)

    for line in csv_text.splitlines():
        if line.startswith("test,") or line.startswith("average,"):
            print(line)
    incomplete = table.incomplete_cells()
    if incomplete:
        print(f"budget exhausted in {len(incomplete)} cell(s): {incomplete}", file=sys.stderr)
    return 0


# -- project ----------------------------------------------------------------


def _parse_float_list(text: str) -> list[float]:
    values = [float(part) for part in text.split(",") if part.strip()]
    if not values:
        raise ValueError(f"expected a comma-separated list of numbers, got {text!r}")
    return values


def cmd_project(args) -> int:
    if args.measurements is not None:
        csv_text = Path(args.measurements).read_text()
        _, attempts_base, times_base = read_measurement_csv(csv_text)
        source = str(args.measurements)
    else:
        attempts_base = _parse_float_list(args.attempts)
        times_base = _parse_float_list(args.times)
        source = "lists"
    model = fit_growth_model(attempts_base, times_base)
    table = build_projection_table(model, TargetText(args.target))

    out_dir = Path(args.out)
    manifest = RunManifest(
        command="project",
        config={
            "target": args.target,
            "attempts_base": attempts_base,
            "times_base": times_base,
            "source": source,
            "paper_style": args.paper_style,
        },
    )
    lines = _emit_projection(table, model, out_dir, manifest, args.paper_style)
    manifest.write(out_dir)
    print("\n".join(lines))
    return 0


# -- prob ---------------------------------------------------------------------


def cmd_prob(args) -> int:
    if args.alphabet_size < 1 or args.length < 1:
        raise ValueError("--alphabet-size and --length must be positive")
    probability = success_probability(args.alphabet_size, args.length)
    attempts = expected_attempts(args.alphabet_size, args.length)
    lines = [
        f"alphabet size: {args.alphabet_size}",
        f"text length: {args.length}",
        f"success probability: {probability}",
        f"expected attempts: {attempts}",
    ]
    print("\n".join(lines))
    if args.out is not None:
        out_dir = Path(args.out)
        manifest = RunManifest(
            command="prob",
            config={"alphabet_size": args.alphabet_size, "length": args.length},
        )
        _write(out_dir, "prob.txt", "\n".join(lines) + "\n", manifest)
        manifest.write(out_dir)
    return 0


# -- census -------------------------------------------------------------------


def _census_lines(report: CensusReport, source: str) -> list[str]:
    return [f"census of {source}:"] + ["  " + line for line in report.lines()]


def cmd_census(args) -> int:
    if args.bundled_hamlet:
        text = data.hamlet_soliloquy()
        source = "bundled soliloquy"
    else:
        text = Path(args.file).read_text()
        source = str(args.file)
    report = corpus_census(text)
    lines = _census_lines(report, source)
    print("\n".join(lines))
    if args.out is not None:
        out_dir = Path(args.out)
        manifest = RunManifest(
            command="census",
            config={
                "source": "bundled-hamlet" if args.bundled_hamlet else str(args.file),
                "expected_count": report.expected_count,
            },
        )
        _write(out_dir, "census.txt", "\n".join(lines) + "\n", manifest)
        manifest.write(out_dir)
    return 0


# -- report -------------------------------------------------------------------


def cmd_report(args) -> int:
    out_dir = Path(args.out)
    alphabet = _parse_alphabet(args.alphabet)
    summary: list[str] = []

    manifest = RunManifest(
        command="report",
        config={
            "target": args.target,
            "alphabet": alphabet.symbols,
            "use_paper_data": args.use_paper_data,
            "max_prefix": args.max_prefix,
            "iterations": args.iterations,
            "seed": args.seed,
            "budget": args.budget,
            "workers": args.workers,
            "no_timing": args.no_timing,
            "paper_style": args.paper_style,
            "extend_alphabet": args.extend_alphabet,
        },
    )

    if args.use_paper_data:
        published = data.published_averages()
        attempts_base = [float(v) for v in published["attempts"]]
        times_base = [float(v) for v in published["seconds"]]
        summary.append("base data: published per-prefix averages (ten trials, prefixes 1..5)")
    else:
        config = ExperimentConfig(
            target=TargetText(args.target),
            alphabet=alphabet,
            max_prefix_length=args.max_prefix,
            iterations=args.iterations,
            seed=args.seed,
            attempt_budget=args.budget,
            worker_count=args.workers,
            auto_extend_alphabet=args.extend_alphabet,
        )
        table = run_experiment(config)
        _write(
            out_dir,
            "measurements.csv",
            table.to_csv(include_timing=not args.no_timing),
            manifest,
        )
        attempts_base = list(table.attempts_averages)
        times_base = list(table.time_averages)
        summary.append(
            f"base data: fresh simulation, seed {args.seed}, "
            f"{args.iterations} iterations, prefixes 1..{args.max_prefix}"
        )
        incomplete = table.incomplete_cells()
        if incomplete:
            summary.append(f"budget exhausted in cells: {incomplete}")

    target = TargetText(args.target)
    model = fit_growth_model(attempts_base, times_base)
    projection = build_projection_table(model, target)
    summary.append(f"projection target: {target.text!r} ({target.length} characters)")
    summary += _emit_projection(projection, model, out_dir, manifest, args.paper_style)

    summary.append(
        "for reference, the published study quotes 9.32e55 years and 6.75e45 "
        "universe ages for this seconds value; neither follows from any "
        "standard year length, so both are reported verbatim, not reproduced."
    )

    for n in (target.length, data.PUBLISHED_SOLILOQUY_LENGTH):
        p = success_probability(args.prob_alphabet_size, n)
        summary.append(
            f"success probability ({args.prob_alphabet_size} symbols, {n} chars): "
            f"{p.to_string(SUMMARY_DIGITS)}"
        )

    if not args.use_paper_data:
        rate = measure_throughput(alphabet, args.max_prefix, duration_seconds=0.2)
        implied = projection.final.attempts / rate
        summary.append(
            f"measured throughput: {rate:.3e} candidates/s at length {args.max_prefix}; "
            f"throughput-implied seconds for the full target: {implied.to_string(SUMMARY_DIGITS)}"
        )

    summary += _census_lines(corpus_census(data.hamlet_soliloquy()), "bundled soliloquy")

    text = "\n".join(summary) + "\n"
    _write(out_dir, "summary.txt", text, manifest)
    manifest.write(out_dir)
    print(text, end="")
    return 0


# -- parser -------------------------------------------------------------------


def _add_simulation_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--target", default=data.HAMLET_PHRASE, help="target text")
    parser.add_argument(
        "--alphabet",
        default="letters+space",
        help="preset name (letters, letters+space) or explicit symbols",
    )
    parser.add_argument("--max-prefix", type=int, default=5, help="longest prefix to trial")
    parser.add_argument("--iterations", type=int, default=10, help="trials per prefix length")
    parser.add_argument("--seed", type=int, default=42, help="experiment seed")
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_ATTEMPT_BUDGET,
        help="attempt cap per trial (0 disables the cap)",
    )
    parser.add_argument("--workers", type=int, default=1, help="concurrent trial workers")
    parser.add_argument(
        "--no-timing",
        action="store_true",
        help="zero the elapsed column for byte-stable output",
    )
    parser.add_argument(
        "--extend-alphabet",
        action="store_true",
        help="auto-extend the alphabet with target characters it lacks",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monkeytyper",
        description="Random-typing trials, growth-factor projections, and exact odds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sim = commands.add_parser("simulate", help="run the prefix-trial experiment matrix")
    _add_simulation_flags(sim)
    sim.add_argument("--out", default="out", help="output directory")
    sim.set_defaults(func=cmd_simulate)

    proj = commands.add_parser("project", help="fit growth factors and extrapolate")
    proj.add_argument("--measurements", help="measurements CSV to read base averages from")
    proj.add_argument("--attempts", help="comma-separated attempts base list")
    proj.add_argument("--times", help="comma-separated seconds base list")
    proj.add_argument("--target", default=data.HAMLET_PHRASE, help="target text")
    proj.add_argument(
        "--paper-style",
        action="store_true",
        help="format numbers like the published tables (3 digits, comma decimal)",
    )
    proj.add_argument("--out", default="out", help="output directory")
    proj.set_defaults(func=cmd_project)

    prob = commands.add_parser("prob", help="exact success probability and expected attempts")
    prob.add_argument("--alphabet-size", type=int, required=True)
    prob.add_argument("--length", type=int, required=True)
    prob.add_argument("--out", help="optionally write prob.txt and a manifest here")
    prob.set_defaults(func=cmd_prob)

    census = commands.add_parser("census", help="character census under several normalizations")
    group = census.add_mutually_exclusive_group(required=True)
    group.add_argument("--file", help="text file to count")
    group.add_argument(
        "--bundled-hamlet",
        action="store_true",
        help="count the bundled 1,520-character soliloquy",
    )
    census.add_argument("--out", help="optionally write census.txt and a manifest here")
    census.set_defaults(func=cmd_census)

    report = commands.add_parser("report", help="full pipeline: simulate, project, prob, census")
    _add_simulation_flags(report)
    report.add_argument(
        "--use-paper-data",
        action="store_true",
        help="project from the bundled published averages instead of simulating",
    )
    report.add_argument(
        "--paper-style",
        action="store_true",
        help="format numbers like the published tables (3 digits, comma decimal)",
    )
    report.add_argument(
        "--prob-alphabet-size",
        type=int,
        default=52,
        help="alphabet size for the probability lines",
    )
    report.add_argument("--out", default="out", help="output directory")
    report.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) == 0:
        args.budget = None
    if args.command == "project" and args.measurements is None:
        if args.attempts is None or args.times is None:
            parser.error("project needs --measurements or both --attempts and --times")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
