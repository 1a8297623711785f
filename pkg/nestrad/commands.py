import json
import logging
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import Any

import click
import pandas as pd

from nestrad import __version__
from nestrad.algebra.element import RadicalElement, power
from nestrad.algebra.numeric import eval_numeric
from nestrad.config import DEFAULT_PRECISION, MAX_PRECISION, PRECISION_ENV_VAR
from nestrad.corpus.corpus import (
    DEFAULT_CORPUS,
    CorpusEntry,
    entry_record,
    load_corpus,
    run_corpus,
)
from nestrad.corpus.report import RunReport
from nestrad.discovery.coeff import coeff_scan, parse_template, template_expansion
from nestrad.discovery.denest import denest_scan
from nestrad.discovery.dioph import dioph_scan
from nestrad.discovery.domain import SearchDomain
from nestrad.discovery.power import power_scan
from nestrad.discovery.quotient_scan import quotient_scan
from nestrad.errors import NestradError, ParseError
from nestrad.identity.engine import interestingness, verify_record
from nestrad.identity.families import (
    cross_identity,
    equivalence_chain,
    geom_ascending,
    geom_descending,
    geom_limit,
)
from nestrad.identity.records import IdentityRecord, Status, side_terms
from nestrad.parser.lower import NestedClaim, lower_text, parse_element
from nestrad.parser.printer import print_canonical, print_latex, print_latex_claim

logger = logging.getLogger("nestrad")

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_CORPUS = 3

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def configure_logging(ctx: click.Context, param: click.Parameter, verbose: int) -> int:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logger.setLevel(level)
    # bind a fresh handler to the current stderr on every invocation
    logger.handlers.clear()
    ch = logging.StreamHandler()
    ch.setLevel(level)
    ch.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(ch)
    return verbose


def common_options(fn: Callable) -> Callable:
    """-v/--verbose and --json on every command."""
    fn = click.option(
        "-v",
        "--verbose",
        "verbose",
        help="log INFO messages, DEBUG with -vv",
        count=True,
        expose_value=False,
        is_eager=True,
        callback=configure_logging,
    )(fn)
    return click.option(
        "--json",
        "as_json",
        help="print JSON instead of text",
        default=False,
        is_flag=True,
    )(fn)


precision_option = click.option(
    "-p",
    "--precision",
    "precision",
    help=f"working precision in bits (env {PRECISION_ENV_VAR})",
    default=DEFAULT_PRECISION,
    envvar=PRECISION_ENV_VAR,
    show_default=True,
    type=click.IntRange(32, MAX_PRECISION),
)

workers_option = click.option(
    "-w",
    "--workers",
    "workers",
    help="worker processes",
    default=1,
    type=click.IntRange(1),
)


def input_errors(fn: Callable) -> Callable:
    """Report library input errors on stderr and exit with code 2."""

    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as e:
            click.echo(f"Error: {e}\n{e.pointer()}", err=True)
        except (NestradError, ZeroDivisionError) as e:
            click.echo(f"Error: {e}", err=True)
        raise SystemExit(EXIT_INPUT)

    return wrapper


def echo_json(data: Any) -> None:
    click.echo(json.dumps(data, indent=2, default=str))


def record_to_dict(record: IdentityRecord) -> dict[str, Any]:
    data: dict[str, Any] = {
        "id": record.id,
        "status": str(record.status),
        "lhs": record.lhs_text,
        "rhs": record.rhs_text,
        "lhs_terms": side_terms(record.claim),
        "rhs_terms": side_terms(record.rhs),
        "interesting": False,
        "note": record.note,
    }
    if record.status == Status.VERIFIED:
        data["interesting"] = interestingness(record).interesting
    return data


def echo_record(record: IdentityRecord, as_json: bool) -> None:
    data = record_to_dict(record)
    if as_json:
        echo_json(data)
        return
    click.echo(str(record))
    click.echo(
        f"terms: {data['lhs_terms']} under the root, {data['rhs_terms']} on the right"
        + (" (interesting)" if data["interesting"] else "")
    )
    if record.note:
        click.echo(f"note: {record.note}")


def status_exit(status: Status) -> int:
    return EXIT_OK if status == Status.VERIFIED else EXIT_REFUTED


def echo_table(rows: list[dict[str, Any]], columns: list[str]) -> None:
    click.echo(pd.DataFrame.from_records(rows, columns=columns).to_string(index=False))


@click.group()
def main():
    pass


@click.group()
def search():
    pass


@main.command()
@common_options
@click.argument("lhs")
@click.argument("rhs")
@input_errors
def verify(lhs: str, rhs: str, as_json: bool) -> None:
    """Decide LHS = RHS exactly."""
    record = verify_record(entry_record(CorpusEntry("cli", lhs, rhs, "verified")))
    echo_record(record, as_json)
    raise SystemExit(status_exit(record.status))


@main.command()
@common_options
@click.argument("lhs")
@click.argument("rhs")
@input_errors
def interesting(lhs: str, rhs: str, as_json: bool) -> None:
    """Term counts of a verified identity."""
    record = verify_record(entry_record(CorpusEntry("cli", lhs, rhs, "verified")))
    if record.status != Status.VERIFIED:
        click.echo(f"Identity is {record.status}, not verified-exact", err=True)
        raise SystemExit(EXIT_REFUTED)
    score = interestingness(record)
    if as_json:
        echo_json(
            {
                "lhs_terms": score.lhs_terms,
                "rhs_terms": score.rhs_terms,
                "interesting": score.interesting,
            }
        )
    else:
        verdict = "interesting" if score.interesting else "not interesting"
        click.echo(
            f"{score.lhs_terms} terms under the root, {score.rhs_terms} on the right: "
            f"{verdict}"
        )


@main.command()
@common_options
@precision_option
@workers_option
@click.option(
    "--progress/--no-progress",
    help="show a progress bar",
    default=True,
)
@click.argument(
    "path",
    default=DEFAULT_CORPUS,
    type=click.Path(exists=True, dir_okay=False),
)
def corpus(
    path: str, precision: int, workers: int, progress: bool, as_json: bool
) -> None:
    """Verify every identity of a JSON Lines corpus against its expected status."""
    entries, errors = load_corpus(Path(path))
    results = run_corpus(
        entries,
        workers=workers,
        progress=progress and not as_json,
        precision_bits=precision,
    )
    report = RunReport(results, __version__, precision, [str(e) for e in errors])
    click.echo(report.to_json() if as_json else str(report))
    if errors and not as_json:
        for error in errors:
            click.echo(f"Error: {error}", err=True)
    if errors:
        raise SystemExit(EXIT_CORPUS)
    raise SystemExit(EXIT_OK if report.ok else EXIT_REFUTED)


@main.command("pow")
@common_options
@click.argument("expr")
@click.argument("n", type=int)
@input_errors
def pow_(expr: str, n: int, as_json: bool) -> None:
    """Canonical form of EXPR^N."""
    result = power(parse_element(expr), n)
    if as_json:
        echo_json({"n": n, "result": print_canonical(result), "terms": len(result)})
    else:
        click.echo(print_canonical(result))


@main.command("eval")
@common_options
@precision_option
@click.argument("expr")
@input_errors
def eval_(expr: str, precision: int, as_json: bool) -> None:
    """Certified numeric value of EXPR."""
    value = eval_numeric(parse_element(expr), precision)
    if as_json:
        echo_json(
            {
                "midpoint": str(value.to_mpf()),
                "radius": float(value.radius),
                "precision": precision,
            }
        )
    else:
        click.echo(str(value))


@main.command()
@common_options
@click.argument("expr")
@input_errors
def latex(expr: str, as_json: bool) -> None:
    """LaTeX rendering of an element or a nested root."""
    lowered = lower_text(expr)
    if isinstance(lowered, RadicalElement):
        text = print_latex(lowered)
    else:
        text = print_latex_claim(lowered)
    click.echo(json.dumps({"latex": text}) if as_json else text)


@main.command()
@common_options
@click.option(
    "--unscaled",
    help="drop the 9^(-1/3) scale factor",
    default=False,
    is_flag=True,
)
@click.argument("family", type=click.Choice(["asc", "desc", "limit"]))
@click.argument("m", type=int, default=1)
@input_errors
def geom(family: str, m: int, unscaled: bool, as_json: bool) -> None:
    """Geometric series identities with ratio -2^(1/3)."""
    if family == "asc":
        record = geom_ascending(m, scaled=not unscaled)
    elif family == "desc":
        record = geom_descending(m, scaled=not unscaled)
    else:
        record = geom_limit()
    echo_record(record, as_json)
    raise SystemExit(status_exit(record.status))


@main.command()
@common_options
@click.argument("expr")
@click.argument("degrees", nargs=-1, type=int, required=True)
@input_errors
def chain(expr: str, degrees: tuple[int, ...], as_json: bool) -> None:
    """root(n, EXPR^n) = EXPR for each degree, and equal roots of consecutive degrees."""
    records = equivalence_chain(parse_element(expr), list(degrees))
    records += [cross_identity(a, b) for a, b in zip(records, records[1:])]
    if as_json:
        echo_json([record_to_dict(r) for r in records])
    else:
        for record in records:
            click.echo(str(record))
    verified = all(r.status == Status.VERIFIED for r in records)
    raise SystemExit(EXIT_OK if verified else EXIT_REFUTED)


@search.command("search-pow")
@common_options
@click.option(
    "--expect",
    "expected",
    help="degree reported elsewhere for this scan (repeatable)",
    multiple=True,
    type=int,
)
@click.argument("expr")
@click.argument("n_min", type=int)
@click.argument("n_max", type=int)
@click.argument("max_terms", type=int)
@input_errors
def search_pow(
    expr: str,
    n_min: int,
    n_max: int,
    max_terms: int,
    expected: tuple[int, ...],
    as_json: bool,
) -> None:
    """Powers of EXPR in [N_MIN, N_MAX] with at most MAX_TERMS terms."""
    result = power_scan(parse_element(expr), n_min, n_max, max_terms, expected)
    rows = [
        {"n": hit.n, "radicand": print_canonical(hit.radicand), "terms": hit.term_count}
        for hit in result.hits
    ]
    if as_json:
        echo_json({"hits": rows, "note": result.count_note})
        return
    echo_table(rows, ["n", "radicand", "terms"])
    if result.count_note:
        click.echo(f"note: {result.count_note}")


@search.command("search-coeff")
@common_options
@workers_option
@click.option(
    "-n",
    "--power",
    "exponent",
    help="exponent applied to the template",
    default=2,
    type=click.IntRange(1),
)
@click.option(
    "--vanish",
    help="monomial whose coefficient must vanish (repeatable)",
    multiple=True,
)
@click.option(
    "-r",
    "--range",
    "bound",
    help="integer coefficient range [-R, R]",
    default=10,
    type=click.IntRange(0),
)
@click.option(
    "--expand",
    help="print the symbolic expansion first",
    default=False,
    is_flag=True,
)
@click.argument("addends", nargs=-1, required=True)
@input_errors
def search_coeff(
    addends: tuple[str, ...],
    exponent: int,
    vanish: tuple[str, ...],
    bound: int,
    expand: bool,
    workers: int,
    as_json: bool,
) -> None:
    """Coefficients of ADDENDS ("?*" marks a free slot) that cancel the VANISH terms."""
    template = parse_template(addends, exponent, vanish)
    if expand and not as_json:
        for monomial, coefficient in template_expansion(template).items():
            click.echo(f"{monomial}: {coefficient}")
    hits = coeff_scan(template, SearchDomain.integers(bound), workers)
    names = list(template.names().values())
    rows = []
    for assignment, record in hits:
        assert isinstance(record.claim, NestedClaim)
        row: dict[str, Any] = {name: str(v) for name, v in zip(names, assignment)}
        row["radicand"] = print_canonical(record.claim.radicand)
        row["status"] = str(record.status)
        rows.append(row)
    if as_json:
        echo_json(rows)
    else:
        echo_table(rows, [*names, "radicand", "status"])


@search.command("search-quotient")
@common_options
@click.argument("n", type=int)
@click.argument("m", type=int)
@click.argument("b_max", type=int)
@click.argument("c_max", type=int)
@input_errors
def search_quotient(n: int, m: int, b_max: int, c_max: int, as_json: bool) -> None:
    """Forms root(N, (x + y r)/(x - y r)) = (z + w r)/(z - w r) with r = root(M, b)."""
    result = quotient_scan(n, m, b_max, c_max)
    if as_json:
        forms = [
            {"x": str(f.x), "y": str(f.y), "z": str(f.z), "w": str(f.w), "b": f.b}
            for f in result.forms
        ]
        echo_json(
            {"forms": forms, "examined": result.examined, "skipped": result.skipped}
        )
        return
    for form in result.forms:
        click.echo(str(form))
    click.echo(
        f"{len(result.forms)} forms, {result.examined} candidates examined, "
        f"{result.skipped} skipped"
    )


@search.command()
@common_options
@click.option(
    "--fourth-power-free/--any-base",
    help="only keep bases without a fourth power factor",
    default=True,
)
@click.argument("b_max", type=int)
@click.argument("c_max", type=int)
@input_errors
def dioph(b_max: int, c_max: int, fourth_power_free: bool, as_json: bool) -> None:
    """Solutions of b w^4 = 5 z^4 with coprime z, w."""
    solutions = dioph_scan(b_max, c_max, fourth_power_free)
    if as_json:
        echo_json([{"b": b, "z": z, "w": w} for b, z, w in solutions])
    else:
        for b, z, w in solutions:
            click.echo(f"b={b} z={z} w={w}")


def parse_extra(
    ctx: click.Context, param: click.Parameter, value: tuple[str, ...]
) -> dict[int, int]:
    extra = {}
    for item in value:
        try:
            prime, degree = item.split(":")
            extra[int(prime)] = int(degree)
        except ValueError:
            raise click.BadParameter(f"expected PRIME:DEGREE, got {item!r}") from None
    return extra


@search.command()
@common_options
@workers_option
@click.option(
    "-s",
    "--support",
    help="largest number of terms",
    default=3,
    type=click.IntRange(1, 4),
)
@click.option(
    "-r",
    "--range",
    "bound",
    help="numerator range [-R, R]",
    default=3,
    type=click.IntRange(0),
)
@click.option(
    "-d",
    "--denominator",
    help="coefficients are k / DENOMINATOR",
    default=1,
    type=click.IntRange(1),
)
@click.option(
    "-e",
    "--extra",
    help="PRIME:DEGREE added to the field of EXPR (repeatable)",
    multiple=True,
    callback=parse_extra,
)
@click.option(
    "--no-prefilter",
    "no_prefilter",
    help="check every candidate exactly",
    default=False,
    is_flag=True,
)
@click.argument("expr")
@click.argument("n", type=int)
@input_errors
def denest(
    expr: str,
    n: int,
    support: int,
    bound: int,
    denominator: int,
    extra: dict[int, int],
    no_prefilter: bool,
    workers: int,
    as_json: bool,
) -> None:
    """Sparse elements s with s^N = EXPR."""
    domain = SearchDomain.multiples(bound, denominator)
    found = denest_scan(
        parse_element(expr),
        n,
        support,
        domain,
        extra=extra,
        prefilter=not no_prefilter,
        workers=workers,
    )
    texts = [print_canonical(s) for s in found]
    if as_json:
        echo_json(texts)
    elif texts:
        click.echo("\n".join(texts))
    else:
        click.echo(f"no denesting with coefficients {domain}")


cli = click.CommandCollection(sources=[main, search])
