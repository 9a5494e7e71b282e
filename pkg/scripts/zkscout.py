"""
ZKScout - Command Line

Reads a simplicial complex (or a rational function) as JSON from a file or
standard input and reports on the moment-angle complex Z_K:

    classify     elliptic / hyperbolic verdict and the L Z_K growth verdict
    decompose    join decomposition and sphere product of an elliptic K
    series       Hilbert-Poincare series of Z_K, its loop spaces, DJ(K), ...
    witness      wedge retract certificate of a hyperbolic K
    census M     every complex on M vertices with its verdict, as NDJSON
    expand       power-series coefficients of {"num": [...], "den": [...]}
    bound-check  the dimension bound behind the wedge retract

Exit codes: 0 success, 2 malformed input, 3 precondition violated,
4 internal consistency failure.
"""

import argparse
import sys
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterator, Optional, TextIO

# Add scripts directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from certificates.decomposition import (
    is_product_of_simplices_polytope,
    join_decompose,
    moment_angle_type,
)
from certificates.witness import hilton_milnor_bound, wedge_retract_witness
from complexes.census import census
from complexes.nonface import classify, descent_chain, minimal_witness_subset
from complexes.simplicial import SimplicialComplex
from series import spaces
from series.rational import RationalFunction, expand
from utils.config import DEFAULT_EXPAND_DEGREE, MAX_CENSUS_M, OUTPUT_FORMATS, SPACES, Settings
from utils.deduplication import face_key
from utils.errors import CensusTooLarge, InputFormatError, ParameterOutOfRange, ZKScoutError
from utils.log import configure_logging, get_logger
from utils.serialization import (
    census_record,
    complex_to_dict,
    decomposition_to_dict,
    dumps,
    growth_to_dict,
    loads,
    parse_complex,
    parse_rational,
    rational_to_dict,
    sphere_product_to_dict,
    witness_to_dict,
)

logger = get_logger("cli")

# Subcommands whose report is a certificate default to JSON
JSON_BY_DEFAULT = ("decompose", "witness", "census")

SERIES_BY_SPACE = {
    "zk": lambda K: spaces.zk_series(moment_angle_type(K)),
    "omega-zk": lambda K: spaces.loop_zk_series(moment_angle_type(K)),
    "loop-zk": lambda K: spaces.free_loop_zk_series(moment_angle_type(K)),
    "dj": spaces.face_ring_series,
    "omega-dj": spaces.loop_dj_series,
    "loop-dj-bound": spaces.free_loop_dj_upper_series,
    "loop-cp-power": lambda K: spaces.free_loop_cp_infty_power_series(K.m),
    "pi-zk": lambda K: spaces.rational_homotopy_series(moment_angle_type(K)),
}


@dataclass(frozen=True)
class Request:
    subcommand: str
    settings: Settings
    complex: Optional[SimplicialComplex] = None
    rational: Optional[RationalFunction] = None
    space: str = "zk"
    expand_degree: Optional[int] = None
    census_m: Optional[int] = None
    polytopal_sphere: bool = False
    triple: Optional[tuple[int, int, int]] = None
    sweep: Optional[int] = None

    @property
    def as_json(self) -> bool:
        return self.settings.output_format == "json"


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected N >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", metavar="PATH|-", help="JSON input file, '-' for stdin")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="report format")
    common.add_argument("--allow-ghost-vertices", action="store_true",
                        help="accept vertices in no facet (classification then refuses K)")
    common.add_argument("--max-census-m", type=int, default=MAX_CENSUS_M, metavar="M",
                        help=f"census size cap, at most {MAX_CENSUS_M}")
    common.add_argument("--verbose", action="store_true", help="progress on stderr")
    common.add_argument("--debug", action="store_true", help="debug output on stderr")

    parser = argparse.ArgumentParser(
        prog="zkscout",
        description="Rational ellipticity of moment-angle complexes",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("classify", parents=[common], help="elliptic or hyperbolic")

    decompose = sub.add_parser("decompose", parents=[common], help="join decomposition of an elliptic K")
    decompose.add_argument("--polytopal-sphere", action="store_true",
                           help="assert K is a polytopal sphere and test for a product of simplices")

    series_cmd = sub.add_parser("series", parents=[common], help="Hilbert-Poincare series")
    series_cmd.add_argument("--space", choices=SPACES, default="zk")
    series_cmd.add_argument("--expand", type=_nonnegative, default=None, metavar="N")

    sub.add_parser("witness", parents=[common], help="wedge retract of a hyperbolic K")

    census_cmd = sub.add_parser("census", parents=[common], help="all complexes on M vertices")
    census_cmd.add_argument("m", type=int, metavar="M")

    expand_cmd = sub.add_parser("expand", parents=[common], help="expand a rational function")
    expand_cmd.add_argument("--expand", type=_nonnegative, default=DEFAULT_EXPAND_DEGREE, metavar="N")

    bound = sub.add_parser("bound-check", parents=[common], help="check the wedge dimension bound")
    bound.add_argument("--k", type=int)
    bound.add_argument("--t", type=int)
    bound.add_argument("--r", type=int)
    bound.add_argument("--sweep", type=int, metavar="N", help="check every 1 <= k, t, r <= N")

    return parser


def _read_input(path: str, stdin: TextIO) -> str:
    try:
        if path == "-":
            return stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise InputFormatError(f"{path} is not valid UTF-8: {exc.reason} at byte {exc.start}") from exc


def build_request(args: argparse.Namespace, stdin: TextIO) -> Request:
    if args.max_census_m > MAX_CENSUS_M:
        raise CensusTooLarge(f"--max-census-m is capped at {MAX_CENSUS_M}, got {args.max_census_m}")
    if args.max_census_m < 1:
        raise ParameterOutOfRange(f"--max-census-m must be >= 1, got {args.max_census_m}")

    output_format = args.format or ("json" if args.subcommand in JSON_BY_DEFAULT else "text")
    settings = Settings(
        allow_ghost_vertices=args.allow_ghost_vertices,
        max_census_m=args.max_census_m,
        output_format=output_format,
    )

    if args.subcommand == "census":
        return Request(subcommand="census", settings=settings, census_m=args.m)

    if args.subcommand == "bound-check":
        triple = (args.k, args.t, args.r)
        if args.sweep is None and None in triple:
            raise InputFormatError("bound-check needs --k, --t and --r, or --sweep N")
        return Request(
            subcommand="bound-check",
            settings=settings,
            triple=None if None in triple else triple,
            sweep=args.sweep,
        )

    data = loads(_read_input(args.input, stdin))

    if args.subcommand == "expand":
        return Request(
            subcommand="expand",
            settings=settings,
            rational=parse_rational(data),
            expand_degree=args.expand,
        )

    K = parse_complex(data, allow_ghost_vertices=settings.allow_ghost_vertices)
    return Request(
        subcommand=args.subcommand,
        settings=settings,
        complex=K,
        space=getattr(args, "space", "zk"),
        expand_degree=getattr(args, "expand", None),
        polytopal_sphere=getattr(args, "polytopal_sphere", False),
    )


# Reports

def _faces(faces) -> list[list[int]]:
    return [list(face_key(f)) for f in faces]


def _classify(request: Request) -> Iterator[str]:
    K = request.complex
    verdict = classify(K)
    loop_growth = spaces.loop_zk_growth(K)

    if verdict.is_elliptic:
        sp = moment_angle_type(K)
        summary = f"elliptic; Z_K ≃ {sp.homotopy_type()}"
    else:
        witness = wedge_retract_witness(K)
        summary = f"hyperbolic; Z_K retracts onto {witness}"

    if not request.as_json:
        yield f"{summary}; L Z_K growth: {loop_growth.kind.value}"
        return

    report = {
        "complex": complex_to_dict(K),
        "verdict": verdict.kind.value,
        "reason": verdict.reason,
        "mnfs": _faces(verdict.profile.mnfs),
    }
    if verdict.is_elliptic:
        report["moment_angle"] = sphere_product_to_dict(sp)
    else:
        report["witness"] = witness_to_dict(witness)
    report["loop_zk_growth"] = growth_to_dict(loop_growth)
    report["hochschild"] = growth_to_dict(spaces.hochschild_growth_verdict(K))
    yield dumps(report)


def _decompose(request: Request) -> Iterator[str]:
    K = request.complex
    decomposition = join_decompose(K)
    sp = moment_angle_type(K)
    polytope = None
    if request.polytopal_sphere:
        polytope = is_product_of_simplices_polytope(K, user_asserts_polytopal_sphere=True)

    if request.as_json:
        report = decomposition_to_dict(decomposition)
        report["moment_angle"] = sphere_product_to_dict(sp)
        if polytope is not None:
            report["product_of_simplices"] = polytope
        yield dumps(report)
        return

    parts = []
    if decomposition.simplex_vertices:
        parts.append(f"simplex{list(face_key(decomposition.simplex_vertices))}")
    parts.extend(f"boundary{list(face_key(f))}" for f in decomposition.boundary_factors)
    yield f"K = {' * '.join(parts) or 'empty'}"
    yield f"Z_K = {sp}"
    if polytope is not None:
        yield f"dual polytope is a product of simplices: {'yes' if polytope else 'no'}"


def _series_lines(f: RationalFunction, degree: Optional[int], request: Request, extra: dict) -> Iterator[str]:
    coefficients = expand(f, degree) if degree is not None else None
    if request.as_json:
        report = dict(extra)
        report["series"] = rational_to_dict(f)
        if coefficients is not None:
            report["expansion"] = coefficients
        yield dumps(report)
        return
    yield f.factored()
    if coefficients is not None:
        yield ",".join(map(str, coefficients))


def _series(request: Request) -> Iterator[str]:
    f = SERIES_BY_SPACE[request.space](request.complex)
    logger.info("series %s of %s", request.space, request.complex)
    yield from _series_lines(f, request.expand_degree, request, {"space": request.space})


def _expand(request: Request) -> Iterator[str]:
    yield from _series_lines(request.rational, request.expand_degree, request, {})


def _witness(request: Request) -> Iterator[str]:
    K = request.complex
    witness = wedge_retract_witness(K)
    minimal = minimal_witness_subset(K)
    descent = descent_chain(K)

    if request.as_json:
        report = witness_to_dict(witness)
        report["minimal_subset"] = list(face_key(minimal))
        report["descent"] = _faces(descent)
        yield dumps(report)
        return

    yield f"{witness} retracts off Z_K (rational)"
    yield f"I = {list(face_key(witness.I))}, J = {list(face_key(witness.J))}, (k, t, r) = ({witness.k}, {witness.t}, {witness.r})"
    yield f"bound: {witness.bound.lhs} < {witness.bound.rhs}"
    yield f"minimal subset: {list(face_key(minimal))}"


def _census(request: Request) -> Iterator[str]:
    for K, verdict in census(request.census_m, request.settings.max_census_m):
        yield dumps(census_record(K, verdict), compact=True)


def _bound_check(request: Request) -> Iterator[str]:
    if request.triple is not None:
        k, t, r = request.triple
        bound = hilton_milnor_bound(k, t, r)
        if request.as_json:
            yield dumps({"k": k, "t": t, "r": r, "lhs": bound.lhs, "rhs": bound.rhs, "ok": bound.ok})
        else:
            yield f"{bound.lhs} < {bound.rhs}: {'ok' if bound.ok else 'FAILED'}"
        return

    n = request.sweep
    if n < 1:
        raise ParameterOutOfRange(f"--sweep needs N >= 1, got {n}")
    failures = [
        [k, t, r]
        for k, t, r in product(range(1, n + 1), repeat=3)
        if not hilton_milnor_bound(k, t, r).ok
    ]
    if request.as_json:
        yield dumps({"sweep": n, "checked": n**3, "failures": failures})
    else:
        yield f"checked {n**3} triples, {len(failures)} failure(s)"


HANDLERS = {
    "classify": _classify,
    "decompose": _decompose,
    "series": _series,
    "witness": _witness,
    "census": _census,
    "expand": _expand,
    "bound-check": _bound_check,
}


def run(
    argv: Optional[list[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one command and return its exit code; never raises ZKScoutError."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging(verbose=args.verbose, debug=args.debug, stream=stderr)

    try:
        request = build_request(args, stdin)
        for line in HANDLERS[request.subcommand](request):
            stdout.write(line + "\n")
    except ZKScoutError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
