"""Batch command line front end.

Every verb reads fuzzy soft set documents from files, calls the library and
writes a JSON document (or a scalar printed with 4 decimals) to standard
output or ``--out``. Exit status is 0 on success, 1 on domain errors such as
undefined cells or mismatched labels, and 2 on usage errors.
"""

import enum
import functools
import json
import logging
import re
from pathlib import Path
from typing import Annotated, Optional

import typer

from .analysis import (
    MappingSpec,
    analyze_sequence,
    check_continuity,
    check_isometry,
    check_uniform_continuity,
    image,
    is_number_preserving,
    preimage,
)
from .arith import apply
from .classify import classify as classify_set
from .core import FuzzySoftError, dump, load, parse, read_json, soft_point
from .database.mappings.db_mappings import MAPPINGS, mapping_path
from .database.sets.db_sets import SETS
from .metric import check_metric_axioms, closed_sphere, diameter, distance, open_sphere, point_set_distance
from .propcheck import PropositionChecker, dumps, get

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="fuzzysoft",
    help="Fuzzy soft sets and fuzzy soft numbers: classification, arithmetic, distances and claim checking.",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

ExistingFile = Annotated[Path, typer.Argument(exists=True, dir_okay=False, readable=True)]
ExistingDir = Annotated[Path, typer.Argument(exists=True, file_okay=False)]
OutOption = Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the document to this file.")]


class Operation(str, enum.Enum):
    add = "add"
    sub = "sub"
    mul = "mul"
    div = "div"


def handles_errors(func):
    """Map library errors to exit status 1 and bad input to exit status 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except FuzzySoftError as err:
            typer.echo(f"error: {err}", err=True)
            raise typer.Exit(1) from err
        except (OSError, ValueError) as err:
            typer.echo(f"usage error: {err}", err=True)
            raise typer.Exit(2) from err

    return wrapper


def emit(document, out=None):
    text = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info("wrote %s", out)


def emit_scalar(value, out=None):
    text = f"{value:.4f}"
    if out is None:
        typer.echo(text)
    else:
        out.write_text(text + "\n", encoding="utf-8")


def _natural_key(path):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", path.stem)]


def read_collection(directory):
    """Named sets stored as ``*.json`` in ``directory``, in natural file name order.

    Mapping documents found in the directory are skipped.
    """
    names, sets = [], []
    for path in sorted(directory.glob("*.json"), key=_natural_key):
        document = read_json(path)
        if isinstance(document, dict) and "p" in document and "q" in document:
            logger.info("skipping mapping document %s", path.name)
            continue
        names.append(path.stem)
        sets.append(parse(document))
    logger.info("read %d sets from %s", len(sets), directory)
    return names, sets


def read_mapping(path):
    return MappingSpec.from_document(read_json(path))


@app.callback()
def configure(
    verbose: Annotated[int, typer.Option("--verbose", "-v", count=True,
                                         help="-v for progress, -vv for debugging output.")] = 0,
):
    """Fuzzy soft sets and fuzzy soft numbers."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("fuzzysoft").setLevel(level)


@app.command()
@handles_errors
def classify(path: ExistingFile, out: OutOption = None):
    """Convex, concave, normalized and fuzzy soft number verdicts with witnesses."""
    emit(classify_set(load(path)).to_document(), out)


@app.command()
@handles_errors
def arith(
    first: ExistingFile,
    second: ExistingFile,
    op: Annotated[Operation, typer.Option("--op", help="Operation to apply.")],
    out: OutOption = None,
):
    """Cell-wise sum, difference, product or quotient with the definedness mask."""
    emit(apply(op.value, load(first), load(second)).to_document(), out)


@app.command()
@handles_errors
def dist(
    first: ExistingFile,
    second: ExistingFile,
    point: Annotated[Optional[str], typer.Option(
        "--point", help="Use the soft point of this parameter of the first set.")] = None,
    out: OutOption = None,
):
    """Distance between two sets, or between a soft point and a set."""
    F, G = load(first), load(second)
    value = distance(F, G) if point is None else point_set_distance(soft_point(F, point), G)
    emit_scalar(value, out)


@app.command()
@handles_errors
def diam(path: ExistingFile, out: OutOption = None):
    """Largest distance between two parameter rows of a set."""
    emit_scalar(diameter(load(path)), out)


@app.command()
@handles_errors
def sphere(
    center: ExistingFile,
    directory: ExistingDir,
    radius: Annotated[float, typer.Option("--radius", "-r", help="Radius in (0, 1).")],
    closed: Annotated[bool, typer.Option("--closed", help="Closed instead of open sphere.")] = False,
    out: OutOption = None,
):
    """Members of a directory of sets within a radius of the center."""
    names, sets = read_collection(directory)
    C = load(center)
    members = (closed_sphere if closed else open_sphere)(C, radius, sets)
    emit({"center": center.stem, "radius": radius, "closed": closed,
          "members": [name for name, G in zip(names, sets, strict=True) if G in members]}, out)


@app.command()
@handles_errors
def axioms(directory: ExistingDir, out: OutOption = None):
    """Metric axioms over every set stored in a directory."""
    names, sets = read_collection(directory)
    emit(check_metric_axioms(sets).to_document(names), out)


@app.command(name="map")
@handles_errors
def map_(
    spec: Annotated[Path, typer.Option("--spec", exists=True, dir_okay=False,
                                       help="Mapping document with p and q tables.")],
    image_of: Annotated[Optional[Path], typer.Option("--image", exists=True, dir_okay=False)] = None,
    preimage_of: Annotated[Optional[Path], typer.Option("--preimage", exists=True, dir_okay=False)] = None,
    check_number: Annotated[Optional[list[Path]], typer.Option(
        "--check-number", exists=True, dir_okay=False,
        help="Check that the images of these fuzzy soft numbers are numbers (repeatable).")] = None,
    isometry: Annotated[Optional[Path], typer.Option(
        "--isometry", exists=True, file_okay=False, help="Check distances over a directory of sets.")] = None,
    continuity: Annotated[Optional[Path], typer.Option(
        "--continuity", exists=True, file_okay=False, help="Check continuity over a directory of sets.")] = None,
    uniform: Annotated[Optional[Path], typer.Option(
        "--uniform", exists=True, file_okay=False,
        help="Check uniform continuity over a directory of sets.")] = None,
    eps: Annotated[Optional[list[float]], typer.Option("--eps", help="Epsilon (repeatable).")] = None,
    out: OutOption = None,
):
    """Mapping flags, images, preimages and mapping checks."""
    f = read_mapping(spec)
    epsilons = eps or [0.05, 0.1, 0.2]
    document = {"mapping": f.flags()}
    if image_of is not None:
        document["image"] = image(f, load(image_of)).to_document()
    if preimage_of is not None:
        document["preimage"] = preimage(f, load(preimage_of)).to_document()
    if check_number:
        document["number_preserving"] = is_number_preserving(f, [load(p) for p in check_number]).to_document()
    if isometry is not None:
        document["isometry"] = check_isometry(f, read_collection(isometry)[1]).to_document()
    if continuity is not None:
        document["continuity"] = check_continuity(f, read_collection(continuity)[1], epsilons).to_document()
    if uniform is not None:
        document["uniform_continuity"] = check_uniform_continuity(
            f, read_collection(uniform)[1], epsilons).to_document()
    emit(document, out)


@app.command()
@handles_errors
def seq(
    prefix: Annotated[Path, typer.Option("--prefix", exists=True, file_okay=False,
                                         help="Directory holding the sequence members in name order.")],
    limit: Annotated[Optional[Path], typer.Option("--limit", exists=True, dir_okay=False,
                                                  help="Candidate limit.")] = None,
    eps: Annotated[float, typer.Option("--eps", help="Tolerance of the verdicts.")] = 0.05,
    out: OutOption = None,
):
    """Boundedness, Cauchy and convergence verdicts on a finite prefix."""
    _, members = read_collection(prefix)
    candidate = load(limit) if limit is not None else None
    emit(analyze_sequence(members, candidate, eps).to_document(), out)


@app.command()
@handles_errors
def propcheck(
    seed: Annotated[Optional[int], typer.Option("--seed", min=0,
                                                help="Base seed; defaults to FUZZYSOFT_SEED or 0.")] = None,
    budget: Annotated[int, typer.Option("--budget", min=1, help="Random trials per claim.")] = 1000,
    workers: Annotated[int, typer.Option("--workers", min=1, help="Claims checked concurrently.")] = 1,
    only: Annotated[Optional[list[str]], typer.Option("--only", help="Check only this claim id (repeatable).")] = None,
    out: OutOption = None,
):
    """Check every cataloged claim and write the errata report.

    Exits with status 1 when some outcome differs from its expected label.
    """
    checker = PropositionChecker(budget=budget, workers=workers)
    if seed is not None:
        checker.seed = seed
    try:
        specs = [get(claim) for claim in only] if only else None
    except KeyError as err:
        raise typer.BadParameter(err.args[0], param_hint="--only") from None
    report = checker.run_all(specs)
    text = dumps(report)
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
    if not report["matched"]:
        raise typer.Exit(1)


@app.command()
@handles_errors
def fixtures(outdir: Annotated[Path, typer.Argument(file_okay=False)]):
    """Write every named set and mapping of the worked examples to a directory."""
    outdir.mkdir(parents=True, exist_ok=True)
    for name, F in SETS.items():
        dump(F, outdir / f"{name}.json")
    for name in MAPPINGS:
        (outdir / f"{name}.json").write_bytes(Path(mapping_path(name)).read_bytes())
    logger.info("wrote %d fixtures to %s", len(SETS) + len(MAPPINGS), outdir)


def main(argv=None):
    """Run the command line with ``argv`` and return the exit status."""
    try:
        app(args=argv, prog_name="fuzzysoft")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
