from __future__ import annotations

import functools
from pathlib import Path
from typing import Annotated, Callable, Optional, TypeVar

import typer
from pydantic import BaseModel, ValidationError

from app.common.exceptions import AntimagicError, InternalInvariantError, ParseError
from app.config.logging import logger
from app.schemas.construction_schemas import PartsDescriptor
from app.schemas.graph_schemas import Family, FamilySpec, GraphPayload
from app.schemas.labeling_schemas import LabeledGraphPayload
from app.schemas.solver_schemas import SolveStatus
from app.schemas.theorem_schemas import CaseStatus
from app.services.constructions.bipartite import bipartite_regular_labeling
from app.services.constructions.cycle import cycle_labeling
from app.services.constructions.lexicographic import lex_labeling
from app.services.constructions.tripartite import tripartite_labeling, validate_tripartite
from app.services.graph.families import generate
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.lemmas import complement, delete_extreme_edge
from app.services.labeling.matrix import LabelingMatrix, from_matrix, to_matrix
from app.services.labeling.verifier import verify
from app.services.magic_service import grid_text, magic_square, shifted_block
from app.services.solver.exact import chi_la_exact
from app.services.solver.oracle import naive_chi_la
from app.services.theorem_suite import run_suite


EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

cli = typer.Typer(
    name="antimagic",
    help="Construct, verify and compute local antimagic labelings.",
    no_args_is_help=True,
    add_completion=False,
)
label_cli = typer.Typer(help="Run a labeling construction.", no_args_is_help=True)
cli.add_typer(label_cli, name="label")

Model = TypeVar("Model", bound=BaseModel)
F = TypeVar("F", bound=Callable[..., None])


def _handle_errors(command: F) -> F:
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except InternalInvariantError as exc:
            logger.error("cli_check_failed", command=command.__name__, error=str(exc))
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(EXIT_CHECK_FAILED)
        except AntimagicError as exc:
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(EXIT_USAGE)

    return wrapper  # type: ignore[return-value]


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}:byte {exc.start}", "invalid UTF-8") from None
    except OSError as exc:
        raise ParseError(str(path), exc.strerror or str(exc)) from None


def _read_model(path: Path, model: type[Model]) -> Model:
    try:
        return model.model_validate_json(_read_text(path))
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise ParseError(f"{path}:{location}", first["msg"]) from None


def _read_graph(path: Path) -> Graph:
    return Graph.from_payload(_read_model(path, GraphPayload))


def _read_labeled(path: Path) -> EdgeLabeling:
    payload = _read_model(path, LabeledGraphPayload)
    if len(payload.labels) != len(payload.edges):
        raise ParseError(
            f"{path}:labels", f"expected {len(payload.edges)} labels, got {len(payload.labels)}"
        )
    g = Graph.from_edges(payload.p, payload.edges)
    # labels follow the file's edge order, which need not be canonical
    return EdgeLabeling.from_mapping(g, dict(zip(payload.edges, payload.labels)))


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        typer.echo(text, nl=not text.endswith("\n"))
        return
    try:
        output.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(output), exc.strerror or str(exc)) from None


def _emit_labeling(f: EdgeLabeling, emit_matrix: bool, output: Optional[Path]) -> None:
    if emit_matrix:
        _emit(to_matrix(f.graph, f).to_text(), output)
        return
    report = verify(f.graph, f)
    payload = f.to_labeled_payload(proper=report.is_local_antimagic)
    _emit(payload.model_dump_json(indent=2) + "\n", output)


OutputOption = Annotated[Optional[Path], typer.Option("--output", "-o", help="Write here instead of stdout")]
MatrixOption = Annotated[bool, typer.Option("--emit-matrix", help="Print the labeling matrix text")]


@cli.command()
@_handle_errors
def gen(
    family: Annotated[Family, typer.Option(help="Graph family")],
    n: Annotated[int, typer.Option(help="Order-like parameter")],
    m: Annotated[Optional[int], typer.Option(help="Second parameter (complete_bipartite, g_mn)")] = None,
    dot: Annotated[bool, typer.Option("--dot", help="Emit DOT instead of JSON")] = False,
    output: OutputOption = None,
) -> None:
    """Generate a named graph."""
    g = generate(FamilySpec(family=family, n=n, m=m))
    _emit(g.to_dot() if dot else g.to_payload().model_dump_json() + "\n", output)


@label_cli.command("cycle")
@_handle_errors
def label_cycle(
    n: Annotated[int, typer.Option(help="Cycle length")],
    emit_matrix: MatrixOption = False,
    output: OutputOption = None,
) -> None:
    """Three-color labeling of C_n."""
    _emit_labeling(cycle_labeling(n), emit_matrix, output)


@label_cli.command("bipartite")
@_handle_errors
def label_bipartite(
    graph: Annotated[Path, typer.Option(help="Graph JSON")],
    start_edge: Annotated[Optional[int], typer.Option(help="Edge index traversed first")] = None,
    emit_matrix: MatrixOption = False,
    output: OutputOption = None,
) -> None:
    """Euler-tour labeling of a connected even-regular bipartite graph."""
    _emit_labeling(bipartite_regular_labeling(_read_graph(graph), start_edge), emit_matrix, output)


@label_cli.command("tripartite")
@_handle_errors
def label_tripartite(
    graph: Annotated[Path, typer.Option(help="Graph JSON")],
    parts: Annotated[Path, typer.Option(help='Parts JSON {"w": .., "V2": [..], "V3": [..]}')],
    emit_matrix: MatrixOption = False,
    output: OutputOption = None,
) -> None:
    """Euler-tour labeling of a hub-anchored tripartite graph."""
    structure = validate_tripartite(_read_graph(graph), _read_model(parts, PartsDescriptor))
    _emit_labeling(tripartite_labeling(structure), emit_matrix, output)


@label_cli.command("lex")
@_handle_errors
def label_lex(
    base: Annotated[Path, typer.Option(help="Labeled graph JSON of G")],
    n: Annotated[int, typer.Option(help="Blow-up order of O_n")],
    emit_matrix: MatrixOption = False,
    output: OutputOption = None,
) -> None:
    """Block labeling of G[O_n] from a labeling of G."""
    f = _read_labeled(base)
    _emit_labeling(lex_labeling(f.graph, f, n), emit_matrix, output)


@label_cli.command("complement")
@_handle_errors
def label_complement(
    input: Annotated[Path, typer.Option("--input", help="Labeled graph JSON")],
    emit_matrix: MatrixOption = False,
    output: OutputOption = None,
) -> None:
    """Replace every label l by q + 1 - l."""
    f = _read_labeled(input)
    _emit_labeling(complement(f.graph, f), emit_matrix, output)


@label_cli.command("delete-edge")
@_handle_errors
def label_delete_edge(
    input: Annotated[Path, typer.Option("--input", help="Labeled graph JSON")],
    edge: Annotated[Optional[int], typer.Option(help="Edge index; defaults to the edge labeled q")] = None,
    emit_matrix: MatrixOption = False,
    output: OutputOption = None,
) -> None:
    """Labeling of G - e for an edge carrying label 1 or q."""
    f = _read_labeled(input)
    result = delete_extreme_edge(f.graph, f, f.edge_with_label(f.q) if edge is None else edge)
    if result.construction_failed:
        typer.echo("warning: no deletion recipe gave a proper labeling", err=True)
    _emit_labeling(result.labeling, emit_matrix, output)
    if result.construction_failed:
        raise typer.Exit(EXIT_CHECK_FAILED)


@cli.command("verify")
@_handle_errors
def verify_command(
    input: Annotated[Optional[Path], typer.Option("--input", help="Labeled graph JSON")] = None,
    matrix: Annotated[Optional[Path], typer.Option(help="Labeling matrix text")] = None,
) -> None:
    """Check a labeling and print its report."""
    if (input is None) == (matrix is None):
        typer.echo("error: pass exactly one of --input or --matrix", err=True)
        raise typer.Exit(EXIT_USAGE)
    if input is not None:
        f = _read_labeled(input)
        g = f.graph
    else:
        g, f = from_matrix(LabelingMatrix.from_text(_read_text(matrix)))
    report = verify(g, f)
    typer.echo(report.model_dump_json(indent=2))
    if not report.is_local_antimagic:
        raise typer.Exit(EXIT_CHECK_FAILED)


@cli.command()
@_handle_errors
def solve(
    graph: Annotated[Path, typer.Option(help="Graph JSON")],
    budget: Annotated[Optional[int], typer.Option(min=1, help="Search node limit")] = None,
    oracle: Annotated[bool, typer.Option("--oracle", help="Use the pruning-free enumeration")] = False,
    workers: Annotated[Optional[int], typer.Option(min=1, help="Processes for root branches")] = None,
) -> None:
    """Exact local antimagic chromatic number of a small graph."""
    g = _read_graph(graph)
    result = naive_chi_la(g) if oracle else chi_la_exact(g, budget=budget, workers=workers)
    typer.echo(result.to_response().model_dump_json(indent=2))
    if result.status == SolveStatus.BUDGET_EXCEEDED:
        raise typer.Exit(EXIT_CHECK_FAILED)


@cli.command()
@_handle_errors
def magic(
    n: Annotated[int, typer.Option(help="Order, at least 3")],
    block: Annotated[Optional[int], typer.Option(help="Print the shifted block Omega_i")] = None,
    q: Annotated[Optional[int], typer.Option(help="Number of blocks (defaults to --block)")] = None,
) -> None:
    """Print a magic square or one of its shifted blocks."""
    omega = magic_square(n)
    if block is None:
        typer.echo(omega.to_text(), nl=False)
    else:
        typer.echo(grid_text(shifted_block(omega, block, q if q is not None else block)), nl=False)


@cli.command()
def theorems(
    filter: Annotated[Optional[str], typer.Option("--filter", help="Case id prefix")] = None,
    workers: Annotated[Optional[int], typer.Option(min=1, help="Processes")] = None,
    json: Annotated[bool, typer.Option("--json", help="Print the full report as JSON")] = False,
) -> None:
    """Replay every desk-scale claim; exits 1 when a case fails."""
    report = run_suite(filter, workers)
    if json:
        typer.echo(report.model_dump_json(indent=2))
    else:
        for outcome in report.outcomes:
            line = f"{outcome.status.value:<10} {outcome.id}  ({outcome.seconds:.3f}s)"
            if outcome.status != CaseStatus.PASSED and outcome.detail:
                line += f"  {outcome.detail}"
            typer.echo(line)
        typer.echo(
            f"{report.passed} passed, {report.failed} failed, {report.diagnostics} diagnostic"
        )
    if not report.outcomes:
        typer.echo(f"error: no case matches {filter!r}", err=True)
        raise typer.Exit(EXIT_USAGE)
    if not report.ok:
        raise typer.Exit(EXIT_CHECK_FAILED)


if __name__ == "__main__":
    cli()
