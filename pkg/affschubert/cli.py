"""
cli.py
------
Command-line interface for the affschubert toolkit.

Entry point: ``affschubert``

Commands
--------
* ``classify``    — labels and palindromy verdict for one λ.
* ``diagnose``    — palindromy rules, named moves and Hasse pattern for one λ.
* ``enumerate``   — per-level counts against the Bott series, or one row per λ.
* ``hasse``       — DOT cover graph up to a given ℓ^S.
* ``cpos``        — closed parabolic orbits.
* ``chains``      — chains up to a given ℓ^S with their cup sequences.
* ``series``      — Bott series prefix and fork statistics.
* ``spiral``      — spiral classes of affine A_n against Gaussian binomials.
* ``verify``      — full brute-force agreement sweep.
* ``cache-clear`` — delete the verdict cache.

Exit codes: 0 success, 1 usage error, 2 resource limit, 3 verification mismatch.
"""

from __future__ import annotations

import json
import logging
import os
import sys
from typing import Any, Callable, Dict, Optional

import click

from affschubert import __version__
from affschubert.core.config import CACHE_ENV_VAR, DEFAULT_CONFIG, SchubertConfig
from affschubert.core.errors import OracleCapExceeded, ResourceLimit, SchubertError
from affschubert.core.result_schema import ClassificationVerdict, VerificationReport
from affschubert.core.store import VerdictCache
from affschubert.lie.rootsys import RootSystem, build_root_system
from affschubert.lie.weyl import CorootElement
from affschubert.order.bruhat import BruhatEngine
from affschubert.order.series import bott_prefix, fork_stats, q_binomial
from affschubert.render.hasse import hasse_dot
from affschubert.render.tables import (
    chains_frame,
    cpos_frame,
    levels_frame,
    render_frame,
    series_frame,
    spiral_frame,
    verdicts_frame,
)
from affschubert.schubert.chains import enumerate_chains
from affschubert.schubert.cpo import enumerate_cpos
from affschubert.schubert.diagnostics import PalindromyReport, palindromy_report
from affschubert.schubert.engine import ClassificationEngine
from affschubert.schubert.spiral import FAMILIES, PLAIN, spiral_lambda
from affschubert.verify.checks import run_verification

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_MISMATCH = 3

TYPE_CHOICE = click.Choice(["A", "B", "C", "D", "E", "F", "G"], case_sensitive=False)


# ---------------------------------------------------------------------------
# Group plumbing
# ---------------------------------------------------------------------------

class SchubertGroup(click.Group):
    """Maps usage errors to exit 1 and resource limits to exit 2."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise
        except (ResourceLimit, OracleCapExceeded) as exc:
            click.echo(click.style(f"\n✗  Resource limit: {exc}", fg="red"), err=True)
            sys.exit(EXIT_RESOURCE)
        except SchubertError as exc:
            click.echo(click.style(f"\n✗  {exc}", fg="red"), err=True)
            sys.exit(EXIT_USAGE)


def _state(ctx: click.Context) -> Dict[str, Any]:
    return ctx.ensure_object(dict)


def _config(ctx: click.Context) -> SchubertConfig:
    return _state(ctx).get("config", DEFAULT_CONFIG)


def _cache_path(ctx: click.Context, flag: Optional[str]) -> Optional[str]:
    # $SCHUBERT_CACHE > --cache-path > config file
    return os.environ.get(CACHE_ENV_VAR) or flag or _config(ctx).cache_path


def _bruhat(ctx: click.Context) -> BruhatEngine:
    state = _state(ctx)
    if "bruhat" not in state:
        state["bruhat"] = BruhatEngine(_config(ctx))
    return state["bruhat"]


def _root_system(type_label: str, rank: int) -> RootSystem:
    try:
        return build_root_system(type_label.upper(), rank)
    except SchubertError as exc:
        raise click.UsageError(str(exc)) from exc


def _element(rs: RootSystem, text: Optional[str]) -> CorootElement:
    if not text:
        raise click.UsageError("This command needs --lambda.")
    try:
        return CorootElement.parse(rs, text)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _check_max_len(max_len: int, minimum: int = 0) -> None:
    if max_len < minimum:
        raise click.UsageError(f"--max-len must be >= {minimum}, got {max_len}")


def _emit(text: str) -> None:
    click.echo(text, nl=not text.endswith("\n"))


def _system_options(func: Callable) -> Callable:
    func = click.option("--rank", required=True, type=int, help="Rank n.")(func)
    func = click.option(
        "--type", "type_label", required=True, type=TYPE_CHOICE, help="Lie type."
    )(func)
    return func


def _format_option(choices, default: str) -> Callable:
    return click.option(
        "--format", "fmt",
        type=click.Choice(list(choices), case_sensitive=False),
        default=default, show_default=True,
        help="Output format.",
    )


def _max_len_option(func: Callable) -> Callable:
    return click.option("--max-len", required=True, type=int, help="Largest ℓ^S included.")(func)


# ---------------------------------------------------------------------------
# CLI group
# ---------------------------------------------------------------------------

@click.group(cls=SchubertGroup)
@click.version_option(version=__version__, prog_name="affschubert", message="%(prog)s %(version)s")
@click.option("--verbose", is_flag=True, default=False, help="Log at DEBUG to standard error.")
@click.option(
    "--config", "config_path", type=click.Path(dir_okay=False),
    help="YAML file with SchubertConfig overrides.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, config_path: Optional[str]):
    """affschubert — Schubert varieties in affine Grassmannians."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    config = DEFAULT_CONFIG
    if config_path:
        try:
            config = SchubertConfig.from_yaml(config_path)
        except (FileNotFoundError, ValueError, TypeError) as exc:
            click.echo(click.style(f"\n✗  Config error: {exc}", fg="red"), err=True)
            sys.exit(EXIT_USAGE)
    _state(ctx)["config"] = config.with_env_overrides()


# ---------------------------------------------------------------------------
# classify / diagnose
# ---------------------------------------------------------------------------

@cli.command()
@_system_options
@click.option("--lambda", "lam_text", help="λ in fundamental-coweight coordinates, e.g. 3,0,-1.")
@_format_option(["json", "text", "csv"], "json")
@click.option(
    "--brute-force/--no-brute-force", default=True, show_default=True,
    help="Also compute |X_λ|(t) and check it against the labels.",
)
@click.option(
    "--cache-path",
    type=click.Path(dir_okay=False),
    help="JSON-lines verdict cache; $SCHUBERT_CACHE takes precedence.",
)
@click.pass_context
def classify(
    ctx: click.Context,
    type_label: str,
    rank: int,
    lam_text: Optional[str],
    fmt: str,
    brute_force: bool,
    cache_path: Optional[str],
):
    """Classify the Schubert variety X_λ."""
    rs = _root_system(type_label, rank)
    lam = _element(rs, lam_text)
    path = _cache_path(ctx, cache_path)
    cache = VerdictCache(path) if path else None

    verdict = cache.get(rs.type_label, rs.rank, lam.coords) if cache else None
    if verdict is None or (brute_force and verdict.poincare is None):
        engine = ClassificationEngine(_config(ctx), bruhat=_bruhat(ctx))
        verdict = engine.classify(lam, cross_check=brute_force)
        if cache:
            cache.put(verdict)
    else:
        logger.debug("Verdict for %s %s served from %s", rs.name, lam, cache.path)

    if fmt == "json":
        click.echo(verdict.to_json())
    elif fmt == "csv":
        _emit(render_frame(verdicts_frame([verdict]), "csv"))
    else:
        _print_verdict(rs, verdict)

    if not verdict.consistent:
        sys.exit(EXIT_MISMATCH)


@cli.command()
@_system_options
@click.option("--lambda", "lam_text", help="λ in fundamental-coweight coordinates.")
@_format_option(["json", "text"], "json")
@click.pass_context
def diagnose(ctx: click.Context, type_label: str, rank: int, lam_text: Optional[str], fmt: str):
    """Palindromy rules, named moves and local Hasse pattern of λ."""
    rs = _root_system(type_label, rank)
    lam = _element(rs, lam_text)
    report = palindromy_report(lam, _bruhat(ctx))
    if fmt == "json":
        click.echo(report.to_json())
    else:
        _print_diagnostics(rs, report)


# ---------------------------------------------------------------------------
# enumerate / hasse
# ---------------------------------------------------------------------------

@cli.command("enumerate")
@_system_options
@_max_len_option
@_format_option(["text", "csv", "json"], "text")
@click.option(
    "--elements", is_flag=True, default=False,
    help="One row per λ (lambda, lengthS, palindromic, labels, dim) instead of level counts.",
)
@click.pass_context
def enumerate_cmd(
    ctx: click.Context, type_label: str, rank: int, max_len: int, fmt: str, elements: bool
):
    """List Q∨ level by level up to --max-len."""
    _check_max_len(max_len)
    rs = _root_system(type_label, rank)
    bruhat = _bruhat(ctx)
    levels = bruhat.enumerate_levels(rs, max_len)
    if elements:
        engine = ClassificationEngine(_config(ctx), bruhat=bruhat)
        members = [lam for k in sorted(levels) for lam in levels[k]]
        df = verdicts_frame(engine.classify_many(members))
    else:
        df = levels_frame(levels, bott_prefix(rs, max_len))
    _emit(render_frame(df, fmt))


@cli.command()
@_system_options
@_max_len_option
@_format_option(["dot"], "dot")
@click.pass_context
def hasse(ctx: click.Context, type_label: str, rank: int, max_len: int, fmt: str):
    """DOT Hasse diagram: circles are palindromic, double circles closed orbits."""
    _check_max_len(max_len)
    rs = _root_system(type_label, rank)
    _emit(hasse_dot(rs, max_len, _bruhat(ctx)))


# ---------------------------------------------------------------------------
# cpos / chains / series / spiral
# ---------------------------------------------------------------------------

@cli.command()
@_system_options
@_format_option(["text", "csv", "json"], "text")
@click.pass_context
def cpos(ctx: click.Context, type_label: str, rank: int, fmt: str):
    """Closed parabolic orbits: I, N(I), dim, |A_I| and top λ_I."""
    rs = _root_system(type_label, rank)
    _emit(render_frame(cpos_frame(enumerate_cpos(rs, _bruhat(ctx))), fmt))


@cli.command()
@_system_options
@_max_len_option
@_format_option(["text", "csv", "json"], "text")
@click.pass_context
def chains(ctx: click.Context, type_label: str, rank: int, max_len: int, fmt: str):
    """Chains up to --max-len with cup sequences and duality tests."""
    _check_max_len(max_len, minimum=1)
    rs = _root_system(type_label, rank)
    _emit(render_frame(chains_frame(enumerate_chains(rs, max_len, _bruhat(ctx))), fmt))


@cli.command()
@_system_options
@_max_len_option
@_format_option(["text", "csv", "json"], "text")
def series(type_label: str, rank: int, max_len: int, fmt: str):
    """Bott series prefix through --max-len, with k_G and a_{k_G}."""
    _check_max_len(max_len)
    rs = _root_system(type_label, rank)
    stats = fork_stats(rs)
    _emit(render_frame(series_frame(bott_prefix(rs, max_len), stats), fmt))
    if fmt == "text":
        click.echo(f"k_G = {stats.k_G}  a = {stats.a if stats.a is not None else '-'}")


@cli.command()
@click.option("--rank", required=True, type=int, help="n for affine A_n.")
@click.option("--max-k", default=3, show_default=True, type=int, help="Largest k.")
@click.option(
    "--family", type=click.Choice(list(FAMILIES)), default=PLAIN, show_default=True,
    help="Spiral family.",
)
@_format_option(["text", "csv", "json"], "text")
@click.pass_context
def spiral(ctx: click.Context, rank: int, max_k: int, family: str, fmt: str):
    """Spiral classes λ_{n,k} against the Gaussian binomial [n+k choose n]."""
    if max_k < 1:
        raise click.UsageError(f"--max-k must be >= 1, got {max_k}")
    _root_system("A", rank)
    bruhat = _bruhat(ctx)
    rows = []
    for k in range(1, max_k + 1):
        lam = spiral_lambda(rank, k, family)
        poly = bruhat.poincare_polynomial(lam)
        expected = q_binomial(rank + k, rank)
        rows.append(
            {
                "n": rank,
                "k": k,
                "family": family,
                "lambda": str(lam),
                "poincare": poly.digits(),
                "q_binomial": expected.digits(),
                "match": poly == expected,
            }
        )
    _emit(render_frame(spiral_frame(rows), fmt))
    if not all(row["match"] for row in rows):
        sys.exit(EXIT_MISMATCH)


# ---------------------------------------------------------------------------
# verify / cache-clear
# ---------------------------------------------------------------------------

@cli.command()
@_system_options
@_max_len_option
@_format_option(["text", "json"], "text")
@click.pass_context
def verify(ctx: click.Context, type_label: str, rank: int, max_len: int, fmt: str):
    """Run every brute-force agreement check; exit 3 on any mismatch."""
    _check_max_len(max_len)
    rs = _root_system(type_label, rank)
    report = run_verification(rs, max_len, _config(ctx))
    if fmt == "json":
        click.echo(report.to_json())
    else:
        _print_verification(rs, report)
    if not report.passed:
        sys.exit(EXIT_MISMATCH)


@cli.command("cache-clear")
@click.option(
    "--cache-path",
    type=click.Path(dir_okay=False),
    help="JSON-lines verdict cache; $SCHUBERT_CACHE takes precedence.",
)
@click.pass_context
def cache_clear(ctx: click.Context, cache_path: Optional[str]):
    """Delete the verdict cache."""
    cache = VerdictCache(_cache_path(ctx, cache_path))
    if cache.clear():
        click.echo(f"Removed {cache.path}")
    else:
        click.echo(f"No cache at {cache.path}")


# ---------------------------------------------------------------------------
# Text renderers
# ---------------------------------------------------------------------------

def _divider() -> str:
    return click.style("─" * 60, fg="bright_black")


def _heading(text: str) -> None:
    divider = _divider()
    click.echo(f"\n{divider}")
    click.echo(click.style(f"  {text}", bold=True, fg="bright_white"))
    click.echo(divider)


def _yes_no(flag: Optional[bool]) -> str:
    if flag is None:
        return "-"
    return click.style("yes", fg="green") if flag else click.style("no", fg="yellow")


def _print_verdict(rs: RootSystem, verdict: ClassificationVerdict) -> None:
    """Render a classification verdict."""
    _heading(f"X_λ IN {rs.name}")
    click.echo(f"  λ           : ({','.join(str(c) for c in verdict.coords)})")
    click.echo(f"  dim         : {verdict.dim}")
    click.echo(f"  labels      : {', '.join(verdict.labels) or '-'}")
    click.echo(f"  palindromic : {_yes_no(verdict.palindromic)}")
    click.echo(f"  smooth      : {_yes_no(verdict.smooth)}")
    if verdict.poincare is not None:
        click.echo(f"  |X_λ|(t)    : {verdict.poincare}")
    if not verdict.consistent:
        click.echo(click.style("  ✗  Labels disagree with |X_λ|(t)", fg="red", bold=True))
    click.echo(f"{_divider()}\n")


def _print_diagnostics(rs: RootSystem, report: PalindromyReport) -> None:
    """Render a palindromy report."""
    _heading(f"PALINDROMY DIAGNOSTICS {rs.name} {report.lam}")
    data = report.to_dict()
    click.echo(f"  negative nodes : {', '.join(data['negative_nodes']) or '-'}")
    for key in ("rule1", "rule2", "rule3", "overweight", "forks_too_soon", "pd_necessary"):
        click.echo(f"  {key:<14} : {_yes_no(data[key])}")
    click.echo(f"  hasse pattern  : {data['hasse_pattern'] or '-'}")
    click.echo(f"  palindromic    : {_yes_no(data['palindromic'])}")
    if report.moves:
        click.echo("  moves:")
        for move in data["moves"]:
            click.echo(f"    - {json.dumps(move, sort_keys=True)}")
    click.echo(f"{_divider()}\n")


def _print_verification(rs: RootSystem, report: VerificationReport) -> None:
    """Render a verification report."""
    _heading(f"VERIFICATION {rs.name} ℓ^S ≤ {report.max_len}")
    for check in report.checks:
        status = (
            click.style("PASS", fg="green", bold=True)
            if check.passed
            else click.style("FAIL", fg="red", bold=True)
        )
        click.echo(
            f"  {check.check_id:<16} {status}  {check.checked:>8} checked  {check.description}"
        )
        for mismatch in check.mismatches:
            click.echo(f"      - {mismatch}")
    click.echo(f"  config hash: {click.style(report.config_hash[:16], fg='bright_black')}…")
    click.echo(f"{_divider()}\n")


if __name__ == "__main__":  # pragma: no cover
    cli()
