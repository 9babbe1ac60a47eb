import functools
import sys

import click
from pydantic import ValidationError

from src.census.service import census, census_bound, census_table
from src.construct.models import LabeledPair, SpineDesignation
from src.construct.service import (
    cantor_relation,
    ordinal_relation,
    points_of,
    product_relation_lex,
    product_relation_main,
    rigid_linear_order,
)
from src.core.models import Permutation, Relation, VertexMap
from src.core.service import (
    check_bound,
    cycle_decomposition,
    is_hereditarily_rigid,
    is_irreflexive,
    is_rigid,
    is_strongly_rigid,
)
from src.cli.relation_file import read_relation_file, serialize_relation, to_dot
from src.exceptions import InvalidArgumentError, RigidityError
from src.fraenkel.service import verify_lemma
from src.logs.logger import get_logger, set_level

logger = get_logger("cli")

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def handle_errors(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except RigidityError as e:
            logger.info(f"{command.__name__} failed: {e}")
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_ERROR)
    return wrapper


def describe_permutation(p: Permutation) -> str:
    moved = [c for c in cycle_decomposition(p) if len(c) > 1]
    if len(moved) == 1 and len(moved[0]) == 2:
        return f"swap {moved[0][0]} {moved[0][1]}"
    return "permutation " + " ".join(map(str, p.images))


def describe_map(f: VertexMap) -> str:
    return "map " + " ".join(map(str, f.images))


def _int_list(value: str | None) -> tuple[int, ...]:
    if not value:
        return ()
    try:
        return tuple(int(x) for x in value.split(","))
    except ValueError:
        raise InvalidArgumentError(f"expected comma separated integers, got {value!r}")


def _pairs(value: str) -> list[LabeledPair]:
    pairs = []
    for item in value.split(","):
        bits, _, label = item.partition(":")
        if not (label.isascii() and label.isdigit()):
            raise InvalidArgumentError(f"expected <bits>:<label>, got {item!r}")
        pairs.append(LabeledPair(point=points_of([bits])[0], label=int(label)))
    return pairs


def _spine(z_star: int, chain: str | None) -> SpineDesignation:
    try:
        return SpineDesignation(z_star=z_star, z_chain=_int_list(chain))
    except ValidationError as e:
        raise InvalidArgumentError(e.errors()[0]["msg"].removeprefix("Value error, ")) from e


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log search details at DEBUG level.")
def cli(verbose: bool):
    """Rigidity of finite binary relations."""
    if verbose:
        set_level("DEBUG")


# -------- check --------

@cli.command()
@click.argument("input_path", metavar="INPUT", type=click.Path(dir_okay=False))
@click.option("--mode", type=click.Choice(["rigid", "strong", "hereditary", "irreflexive"]),
              default="rigid", show_default=True)
@click.option("--max-n", type=int, default=None, help="Override the search bound for this mode.")
@handle_errors
def check(input_path: str, mode: str, max_n: int | None):
    """Decide a rigidity property of the relation in INPUT."""
    r = read_relation_file(input_path).relation

    if mode == "rigid":
        verdict = is_rigid(r, max_n=max_n)
        lines = ["RIGID"] if verdict.positive else ["NOT RIGID", f"witness: {describe_permutation(verdict.witness)}"]
    elif mode == "strong":
        verdict = is_strongly_rigid(r, max_n=max_n)
        lines = (["STRONGLY RIGID"] if verdict.positive
                 else ["NOT STRONGLY RIGID", f"witness: {describe_map(verdict.witness)}"])
    elif mode == "hereditary":
        verdict = is_hereditarily_rigid(r, max_n=max_n)
        lines = (["HEREDITARILY RIGID"] if verdict.positive else [
            "NOT HEREDITARILY RIGID",
            "witness subset: " + " ".join(map(str, verdict.witness_subset)),
            f"witness: {describe_permutation(verdict.witness_perm)}",
        ])
    else:
        loops = [u for u, v in r.edges if u == v]
        positive = is_irreflexive(r)
        lines = ["IRREFLEXIVE"] if positive else ["NOT IRREFLEXIVE", f"witness: loop at {loops[0]}"]
        click.echo("\n".join(lines))
        sys.exit(EXIT_POSITIVE if positive else EXIT_NEGATIVE)

    click.echo("\n".join(lines))
    sys.exit(EXIT_POSITIVE if verdict.positive else EXIT_NEGATIVE)


# -------- build --------

@cli.group()
def build():
    """Build one of the rigid-relation constructions."""


def build_options(command):
    command = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                           help="Write here instead of standard output.")(command)
    command = click.option("--verify", is_flag=True, help="Exit 1 unless the result is rigid.")(command)
    command = click.option("--dot", is_flag=True, help="Emit Graphviz DOT instead of the relation format.")(command)
    return click.option("--max-n", type=int, default=None, help="Search bound used by --verify.")(command)


def emit(r: Relation, output: str | None, verify: bool, dot: bool, max_n: int | None):
    """Write r once it has passed --verify; a failed check writes nothing."""
    if verify:
        verdict = is_rigid(r, max_n=max_n)
        if not verdict.positive:
            click.echo(f"NOT RIGID: witness {describe_permutation(verdict.witness)}", err=True)
            sys.exit(EXIT_NEGATIVE)
    text = to_dot(r) if dot else serialize_relation(r)
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


@build.command("linorder")
@click.argument("n", type=int)
@build_options
@handle_errors
def build_linorder(n: int, **options):
    """Linear order i < j on N vertices."""
    emit(rigid_linear_order(n), **options)


@build.command("ordinal")
@click.argument("gamma", type=int)
@build_options
@handle_errors
def build_ordinal(gamma: int, **options):
    """The ordinal GAMMA with its order."""
    emit(ordinal_relation(gamma), **options)


@build.command("cantor")
@click.option("--points", required=True, help="Comma separated bit strings, e.g. 00,01,10,11.")
@click.option("--zstar", type=int, required=True)
@click.option("--chain", default="", help="Comma separated carrier indices z_0,z_1,...")
@build_options
@handle_errors
def build_cantor(points: str, zstar: int, chain: str, **options):
    """Rigid relation on a set of binary strings with a designated spine."""
    emit(cantor_relation(points_of(points.split(",")), _spine(zstar, chain)), **options)


@build.command("product-main")
@click.option("--pairs", required=True, help="Comma separated <bits>:<label> items.")
@click.option("--base", "base_path", required=True, type=click.Path(dir_okay=False))
@click.option("--zstar", type=int, required=True)
@click.option("--chain", default="")
@click.option("--unsafe", is_flag=True, help="Skip the base hypothesis checks.")
@build_options
@handle_errors
def build_product_main(pairs: str, base_path: str, zstar: int, chain: str, unsafe: bool, **options):
    """Rigid relation on labeled strings with a spine, over a base relation."""
    base = read_relation_file(base_path).relation
    r = product_relation_main(_pairs(pairs), base, _spine(zstar, chain), check_hypothesis=not unsafe)
    emit(r, **options)


@build.command("product-lex")
@click.option("--pairs", required=True, help="Comma separated <bits>:<label> items.")
@click.option("--base", "base_path", required=True, type=click.Path(dir_okay=False))
@click.option("--unsafe", is_flag=True, help="Skip the base hypothesis checks.")
@build_options
@handle_errors
def build_product_lex(pairs: str, base_path: str, unsafe: bool, **options):
    """Lexicographic product of the string order with a base relation."""
    base = read_relation_file(base_path).relation
    emit(product_relation_lex(_pairs(pairs), base, check_hypothesis=not unsafe), **options)


# -------- fraenkel --------

@cli.command()
@click.argument("atoms", type=int)
@click.option("--max-support", type=int, default=None, help="Largest support size (default atoms - 2).")
@click.option("--threads", type=int, default=None, help="Worker processes (default WORKERS).")
@click.option("--max-n", type=int, default=None)
@handle_errors
def fraenkel(atoms: int, max_support: int | None, threads: int | None, max_n: int | None):
    """Verify the swap lemma for every supported relation on ATOMS atoms."""
    report = verify_lemma(atoms, max_support=max_support, max_n=max_n, workers=threads)
    if not report.applicable:
        click.echo(f"NOT APPLICABLE: {atoms} atom(s) admit no swap outside a support")
        sys.exit(EXIT_POSITIVE)

    for s in report.supports:
        support = "{" + ",".join(map(str, s.support)) + "}"
        click.echo(f"support {support}: {s.orbit_classes} orbit classes, {s.relations} relations checked, "
                   f"witness swap {s.witness[0]} {s.witness[1]}")
    click.echo(f"relations checked: {report.relations_checked}")
    if report.all_non_rigid:
        click.echo("ALL NON-RIGID")
        sys.exit(EXIT_POSITIVE)
    click.echo(f"FAILURES: {report.failure_count}")
    sys.exit(EXIT_NEGATIVE)


# -------- census --------

@cli.command("census")
@click.argument("max_vertices", metavar="MAX_N", type=int)
@click.option("--isomorph-rejection", is_flag=True, help="Count one canonical relation per isomorphism class.")
@click.option("--threads", type=int, default=None, help="Worker processes (default WORKERS).")
@click.option("--max-n", type=int, default=None, help="Override the census bound.")
@handle_errors
def census_command(max_vertices: int, isomorph_rejection: bool, threads: int | None, max_n: int | None):
    """TSV census of rigidity types for n = 0..MAX_N."""
    if max_vertices < 0:
        raise InvalidArgumentError("MAX_N must be non-negative")
    check_bound("census", max_vertices, census_bound(isomorph_rejection, max_n))
    rows = [
        census(n, isomorph_rejection=isomorph_rejection, max_n=max_n, workers=threads)
        for n in range(max_vertices + 1)
    ]
    click.echo(census_table(rows), nl=False)
