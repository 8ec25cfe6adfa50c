"""
Command-line entry point.

Every subcommand prints one JSON object on stdout. Exit codes: 0 on success,
1 when a check finds violations (or no witness), 2 on usage or input errors.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from alphaperm.concavity.hessian import hessian_nsd_check
from alphaperm.concavity.quotient import QuotientSpec
from alphaperm.concavity.scan import midpoint_concavity_scan
from alphaperm.config.config import EnvSettings, get_global_config, load_config, set_global_config
from alphaperm.config.model import WitnessExhaustion
from alphaperm.core.base_config import RunConfig
from alphaperm.core.base_report import to_jsonable
from alphaperm.enums.field_e import ScalarField
from alphaperm.enums.permanent_e import PermanentMethod
from alphaperm.enums.quotient_e import QuotientMode
from alphaperm.hyperbolic.instance import certify_hyperbolic, cone_member
from alphaperm.hyperbolic.matrix_forms import mixed_discriminant
from alphaperm.hyperbolic.polarization import partial_polarization, polarized_form
from alphaperm.numeric.linalg import is_psd_exact, sylvester_check
from alphaperm.numeric.matrix import RMatrix
from alphaperm.numeric.scalar import parse_rational
from alphaperm.permanent.alpha import Alpha
from alphaperm.permanent.dilation import dilate
from alphaperm.permanent.multi_index import MultiIndex
from alphaperm.permanent.permanent import det_alpha, per, per_alpha
from alphaperm.series.macmahon import macmahon_verify
from alphaperm.series.sparse_poly import SparsePoly
from alphaperm.utils.exceptions.base import AlphaPermException, handle_errors
from alphaperm.utils.exceptions.codec import ParseError
from alphaperm.utils.exceptions.hyperbolic import NotHyperbolicError
from alphaperm.utils.logger import Logger
from alphaperm.witness.nonnegativity import nonnegativity_scan
from alphaperm.witness.search import find_witness, save_witness
from alphaperm.witness.sets import classify_alpha

logger = Logger.get_logger("cli")

Result = Tuple[Dict[str, Any], bool]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# input parsing

def read_json(path: str) -> Any:
    """JSON from a file, or from stdin for "-" """
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}", path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e.msg}", path)


def parse_matrix(data: Any) -> RMatrix:
    """Matrix object {"rows", "cols", "entries"} or a bare list of rows"""
    if isinstance(data, list):
        return RMatrix(data).detect_structure()
    return RMatrix.from_dict(data).detect_structure()


def parse_vector(text: str) -> List[Any]:
    """Comma-separated rationals, e.g. "1,2/3,-1" """
    return [parse_rational(p) for p in text.split(",") if p.strip()]


def parse_vectors(text: str) -> List[List[Any]]:
    """Semicolon-separated vectors, e.g. "1,0;1,1" """
    return [parse_vector(v) for v in text.split(";") if v.strip()]


def _matrix_arg(path: str) -> RMatrix:
    return parse_matrix(read_json(path))


def _poly_arg(path: str) -> SparsePoly:
    return SparsePoly.from_dict(read_json(path))


def _matrices_arg(path: str) -> List[RMatrix]:
    data = read_json(path)
    if not isinstance(data, list):
        raise ParseError("expected a JSON list of matrices", path)
    return [parse_matrix(m) for m in data]


# subcommands

def cmd_per(args, run: RunConfig) -> Result:
    A = _matrix_arg(args.matrix)
    return {"value": to_jsonable(per(A, PermanentMethod(args.method)))}, True


def cmd_alpha_per(args, run: RunConfig) -> Result:
    value = per_alpha(_matrix_arg(args.matrix), args.alpha)
    return {"alpha": args.alpha, "value": to_jsonable(value)}, True


def cmd_alpha_det(args, run: RunConfig) -> Result:
    value = det_alpha(_matrix_arg(args.matrix), args.alpha)
    return {"alpha": args.alpha, "value": to_jsonable(value)}, True


def cmd_dilate(args, run: RunConfig) -> Result:
    n = MultiIndex.parse(args.index)
    return {"index": list(n), "matrix": dilate(_matrix_arg(args.matrix), n).to_dict()}, True


def cmd_psd_check(args, run: RunConfig) -> Result:
    return {"psd": is_psd_exact(_matrix_arg(args.matrix))}, True


def cmd_sylvester(args, run: RunConfig) -> Result:
    holds = sylvester_check(_matrix_arg(args.a), _matrix_arg(args.b))
    return {"holds": holds}, holds


def cmd_macmahon_verify(args, run: RunConfig) -> Result:
    report = macmahon_verify(_matrix_arg(args.matrix), args.alpha, run.degree, identity=args.identity)
    return report.to_dict(), report.passed


def _certified(args, run: RunConfig):
    h = _poly_arg(args.poly)
    return certify_hyperbolic(h, parse_vector(args.direction), trials=run.trials, seed=run.seed)


def cmd_hyperbolic_certify(args, run: RunConfig) -> Result:
    try:
        instance = _certified(args, run)
    except NotHyperbolicError as e:
        return {"hyperbolic": False, "counterexample": to_jsonable(e.counterexample)}, False
    return {"hyperbolic": True, "instance": instance.to_dict()}, True


def cmd_cone_member(args, run: RunConfig) -> Result:
    instance = _certified(args, run)
    return {"member": cone_member(instance, parse_vector(args.point))}, True


def cmd_mixed_disc(args, run: RunConfig) -> Result:
    return {"value": to_jsonable(mixed_discriminant(_matrices_arg(args.matrices)))}, True


def cmd_polarize(args, run: RunConfig) -> Result:
    h = _poly_arg(args.poly)
    vectors = parse_vectors(args.vectors)
    if len(vectors) == h.degree:
        return {"value": to_jsonable(polarized_form(h, vectors))}, True
    return {"polynomial": partial_polarization(h, vectors).to_dict()}, True


def _quotient_spec(args, run: RunConfig) -> QuotientSpec:
    mode = QuotientMode(args.mode)
    if mode == QuotientMode.BAPAT:
        return QuotientSpec.bapat(parse_vectors(args.fixed))
    if mode == QuotientMode.MIXED_DISCRIMINANT:
        return QuotientSpec.mixed_discriminant(_matrices_arg(args.matrices), trials=run.trials, seed=run.seed)
    return QuotientSpec.hyperbolic(_certified(args, run), parse_vectors(args.fixed))


def cmd_concavity_scan(args, run: RunConfig) -> Result:
    report = midpoint_concavity_scan(_quotient_spec(args, run), run.samples, seed=run.seed)
    return report.to_dict(), report.passed


def cmd_hessian_check(args, run: RunConfig) -> Result:
    report = hessian_nsd_check(_quotient_spec(args, run), points=args.points, tol=run.tol, seed=run.seed)
    return report.to_dict(), report.passed


def cmd_classify_alpha(args, run: RunConfig) -> Result:
    return classify_alpha(args.alpha, args.field).to_dict(), True


def cmd_nonneg_scan(args, run: RunConfig) -> Result:
    report = nonnegativity_scan(args.alpha, args.field, args.max_size, run.samples, seed=run.seed)
    return report.to_dict(), report.passed


def cmd_find_witness(args, run: RunConfig) -> Result:
    y = parse_vector(args.y) if args.y else None
    result = find_witness(args.alpha, args.field, max_degree=run.degree, y=y, seed=run.seed,
                          retries=args.retries, max_multiple=args.multiple)
    if isinstance(result, WitnessExhaustion):
        return result.to_dict(), False
    if args.save:
        save_witness(result, args.save)
    return result.to_dict(), True


# parser

def _alpha(text: str) -> str:
    try:
        return str(Alpha.of(text))
    except ParseError as e:
        raise argparse.ArgumentTypeError(e.message)


def _add_seeded(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="Seed of every random stream (default: 0).")


def _add_instance(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--poly", required=required, help="Polynomial JSON: {\"nvars\", \"terms\": [{\"exp\", \"coef\"}]}.")
    p.add_argument("--direction", required=required, help="Hyperbolic direction e, e.g. \"1,0,0\".")
    p.add_argument("--trials", type=int, default=None, help="Random lines in the certification.")


def _add_quotient(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=[m.value for m in QuotientMode], default=QuotientMode.BAPAT.value)
    p.add_argument("--fixed", help="b_0;b_1;...;b_k (bapat and hyperbolic modes).")
    p.add_argument("--matrices", help="JSON list of positive definite A_0..A_k (mixed-discriminant mode).")
    _add_instance(p, required=False)
    _add_seeded(p)


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], Result]] = {
    "per": cmd_per,
    "alpha-per": cmd_alpha_per,
    "alpha-det": cmd_alpha_det,
    "dilate": cmd_dilate,
    "psd-check": cmd_psd_check,
    "sylvester": cmd_sylvester,
    "macmahon-verify": cmd_macmahon_verify,
    "hyperbolic-certify": cmd_hyperbolic_certify,
    "cone-member": cmd_cone_member,
    "mixed-disc": cmd_mixed_disc,
    "polarize": cmd_polarize,
    "concavity-scan": cmd_concavity_scan,
    "hessian-check": cmd_hessian_check,
    "classify-alpha": cmd_classify_alpha,
    "nonneg-scan": cmd_nonneg_scan,
    "find-witness": cmd_find_witness,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaperm",
        description="Exact alpha-permanents, MacMahon expansions, hyperbolic polynomials and alpha-witnesses."
    )
    parser.add_argument("--config", default=None, help="YAML config overlaid on the defaults ($ALPHAPERM_CONFIG).")
    parser.add_argument("--output", default=None, help="Also write the JSON result to this file.")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("per", "alpha-per", "alpha-det", "dilate", "psd-check"):
        p = sub.add_parser(name)
        p.add_argument("--matrix", required=True, help="Matrix JSON file, \"-\" for stdin.")
        if name == "per":
            p.add_argument("--method", choices=[m.value for m in PermanentMethod], default=PermanentMethod.RYSER.value)
        if name in ("alpha-per", "alpha-det"):
            p.add_argument("--alpha", type=_alpha, required=True)
        if name == "dilate":
            p.add_argument("--index", required=True, help="Multi-index, e.g. \"1,0,2\".")

    p = sub.add_parser("sylvester")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("macmahon-verify")
    p.add_argument("--matrix", required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--degree", type=int, default=None, help="Truncation degree D.")
    p.add_argument("--identity", choices=["per", "det"], default="per")

    for name in ("hyperbolic-certify", "cone-member"):
        p = sub.add_parser(name)
        _add_instance(p)
        _add_seeded(p)
        if name == "cone-member":
            p.add_argument("--point", required=True)

    p = sub.add_parser("mixed-disc")
    p.add_argument("--matrices", required=True)

    p = sub.add_parser("polarize")
    p.add_argument("--poly", required=True)
    p.add_argument("--vectors", required=True, help="v_1;v_2;... (d vectors give the value, fewer a polynomial).")

    p = sub.add_parser("concavity-scan")
    _add_quotient(p)
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("hessian-check")
    _add_quotient(p)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("classify-alpha")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--field", choices=[f.value for f in ScalarField], default=ScalarField.REAL.value)

    p = sub.add_parser("nonneg-scan")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--field", choices=[f.value for f in ScalarField], default=ScalarField.REAL.value)
    p.add_argument("--max-size", type=int, default=5, dest="max_size")
    p.add_argument("--samples", type=int, default=100)
    _add_seeded(p)

    p = sub.add_parser("find-witness")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--field", choices=[f.value for f in ScalarField], default=ScalarField.REAL.value)
    p.add_argument("--degree", type=int, default=None, help="Degree budget D.")
    p.add_argument("--retries", type=int, default=None)
    p.add_argument("--multiple", type=int, default=None, help="Largest concentrated-index multiple N (0 disables).")
    p.add_argument("--y", default=None, help="First weight vector (default: all ones).")
    p.add_argument("--save", default=None, help="Write the witness JSON here.")
    _add_seeded(p)
    return parser


def _run_config(args) -> RunConfig:
    return RunConfig(
        seed=getattr(args, "seed", 0),
        degree=getattr(args, "degree", None),
        trials=getattr(args, "trials", None),
        samples=getattr(args, "samples", None),
        tol=getattr(args, "tol", None),
        input_path=getattr(args, "matrix", None) or getattr(args, "poly", None),
        output_path=args.output,
    )


def emit(data: Dict[str, Any], output: Optional[Path] = None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if output is not None:
        output.write_text(text, encoding="utf-8")
    sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        if args.config or EnvSettings().config:
            set_global_config(load_config(args.config))
        log = get_global_config().log
        Logger.configure(level=args.log_level or log.log_level, json_format=log.json_format,
                         log_dir=str(log.log_dir) if log.log_dir else None, backup_count=log.backup_count)
        run = _run_config(args)
        data, ok = handle_errors(COMMANDS[args.command])(args, run)
    except (AlphaPermException, ValidationError) as e:
        error = e.to_dict() if isinstance(e, AlphaPermException) else {
            "error": "ValidationError", "message": str(e), "details": {}}
        logger.error("command failed", context={"command": args.command, **error})
        emit(error)
        return EXIT_USAGE

    emit(data, run.output_path)
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
