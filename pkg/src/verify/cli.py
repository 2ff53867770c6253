"""
Command-line interface for Submodel Lab.

    python -m src.verify.cli eval samples/c2.mdl samples/group.fml
    python -m src.verify.cli theta --le 2 samples/chain3.mdl samples/no_minimal.fml
    python -m src.verify.cli sieve --budget 3 --max-size 4 samples/group.fml --json

Exit codes: 0 verified or true, 1 refuted or false, 2 exhausted without a
decision, 3 usage error.
"""
import argparse
import json
import sys
from dataclasses import asdict
from typing import List, Optional, Sequence

from config.settings import get_settings

from ..config.logging_config import get_logger
from ..logic.classification import classify
from ..logic.errors import LogicError
from ..logic.operations import alpha_normalize, flatten
from ..logic.syntax import Formula, Signature
from ..modal.builders import (
    Theory,
    build_t_phi,
    build_theta_eq,
    build_theta_le,
    build_theta_lt,
    relativize,
)
from ..modal.operators import (
    theta_eq_sem,
    theta_gen_sem,
    theta_le_sem,
    theta_lt_sem,
    theta_sem,
    theta_star_witness,
    theta_witness,
)
from ..models.finite_model import FiniteModel
from ..models.semantics import evaluate
from ..parsing.documents import DocumentKind, load_document
from ..parsing.formula_parser import infer_signature, parse_formula, parse_formulas
from ..parsing.model_parser import parse_model
from ..parsing.render import render_formula, render_model
from ..parsing.signature_parser import parse_signature
from ..transforms.monadic import build_theta_monadic, normalize_monadic
from ..transforms.normal_forms import nnf
from ..transforms.relativization import expand_bounded_quantifiers, relativize_one_param
from .demos import DEMOS, DemoConfig, run_demo
from .harness import check_equiv, theta_star_membership, witness_bound_scan
from .report import Counterexample, Report, Verdict
from .sieve import universal_consequence_sieve

logger = get_logger(__name__)

USAGE_ERROR = 3


class UsageError(Exception):
    """Raised by the parser instead of exiting."""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ----------------------------------------------------------------------
# Input loading


def _text(path: str, kind: DocumentKind) -> str:
    return load_document(path, kind).text


def _signature(args, formula_paths: Sequence[str] = (), model_path: Optional[str] = None) -> Signature:
    """--sig when given, otherwise inferred from the formula files and the model."""
    if args.sig:
        return parse_signature(_text(args.sig, DocumentKind.SIGNATURE))
    signature = Signature()
    for path in formula_paths:
        signature = signature.union(infer_signature(_text(path, DocumentKind.FORMULA)))
    if model_path is not None:
        try:
            declared = parse_model(_text(model_path, DocumentKind.MODEL)).signature
        except LogicError:
            logger.debug("model signature not inferable", path=model_path)
        else:
            signature = signature.union(declared)
    return signature


def _formula(path: str, signature: Signature) -> Formula:
    return parse_formula(_text(path, DocumentKind.FORMULA), signature)


def _model(path: str, signature: Signature) -> FiniteModel:
    return parse_model(_text(path, DocumentKind.MODEL), signature)


def _background(args, signature: Signature) -> Optional[Theory]:
    if not getattr(args, "background", None):
        return None
    sentences = parse_formulas(_text(args.background, DocumentKind.FORMULA), signature)
    return Theory(tuple(sentences), signature)


# ----------------------------------------------------------------------
# Output


def _emit_report(report: Report, args) -> int:
    output = get_settings().output
    if args.json:
        print(report.to_json(timing=args.timing or output.timing, indent=output.json_indent))
    else:
        print(f"{report.claim_id}: {report.verdict.value}")
        for key in sorted(report.details):
            print(f"  {key}: {report.details[key]}")
        if report.counterexample is not None:
            print("counterexample:")
            print(report.counterexample.model.rstrip())
            if report.counterexample.witness:
                print(f"witness: {report.counterexample.witness}")
    return report.exit_code


def _emit_truth(claim_id: str, value: bool, model: FiniteModel, formula: Formula,
                args, details=None, witness: Optional[str] = None) -> int:
    if not args.json:
        print("true" if value else "false")
        if witness:
            print(witness)
        return 0 if value else 1
    report = Report(
        claim_id=claim_id,
        verdict=Verdict.VERIFIED if value else Verdict.REFUTED,
        counterexample=None if value else Counterexample.of(model, formula, witness="false"),
        details=details or {},
    )
    return _emit_report(report, args)


def _emit_formula(formula: Formula, args) -> int:
    text = render_formula(formula)
    print(json.dumps({"formula": text}) if args.json else text)
    return 0


# ----------------------------------------------------------------------
# Commands


def cmd_eval(args) -> int:
    signature = _signature(args, [args.formula], args.model)
    model, formula = _model(args.model, signature), _formula(args.formula, signature)
    return _emit_truth("eval", evaluate(model, formula), model, formula, args)


def cmd_theta(args) -> int:
    signature = _signature(args, [args.formula], args.model)
    model, formula = _model(args.model, signature), _formula(args.formula, signature)
    if args.le is not None:
        claim, value = "theta-le", theta_le_sem(model, formula, args.le)
        witness = theta_witness(model, formula, lambda size: size <= args.le) if value else None
    elif args.eq is not None:
        claim, value = "theta-eq", theta_eq_sem(model, formula, args.eq)
        witness = theta_witness(model, formula, lambda size: size == args.eq) if value else None
    elif args.lt is not None:
        claim, value = "theta-lt", theta_lt_sem(model, formula, args.lt)
        witness = theta_witness(model, formula, lambda size: size < args.lt) if value else None
    elif args.gen is not None:
        claim, value, witness = "theta-gen", theta_gen_sem(model, formula, args.gen), None
    else:
        claim, value = "theta", theta_sem(model, formula)
        witness = theta_witness(model, formula) if value else None
    details = {"witness": sorted(witness)} if witness is not None else {}
    shown = f"witness: {sorted(witness)}" if witness is not None else None
    return _emit_truth(claim, value, model, formula, args, details, shown)


def cmd_theta_star(args) -> int:
    signature = _signature(args, [args.formula], args.model)
    model, formula = _model(args.model, signature), _formula(args.formula, signature)
    bound = args.bound if args.bound is not None else model.size + get_settings().search.extension_slack
    extension = theta_star_witness(model, formula, bound)
    details = {"bound": bound}
    shown = None
    if extension is not None:
        details["extension"] = render_model(extension)
        shown = render_model(extension).rstrip()
    return _emit_truth("theta-star", extension is not None, model, formula, args, details, shown)


def cmd_build_theta(args) -> int:
    signature = _signature(args, [args.formula])
    formula = _formula(args.formula, signature)
    if args.monadic:
        return _emit_formula(build_theta_monadic(formula, signature), args)
    if args.theory:
        theory = build_t_phi(formula, args.n, signature)
        texts = [render_formula(s) for s in theory]
        print(json.dumps({"theory": texts}) if args.json else "\n".join(texts))
        return 0
    builder = build_theta_eq if args.eq else build_theta_lt if args.lt else build_theta_le
    result = builder(formula, args.n, signature)
    if args.expand:
        result = expand_bounded_quantifiers(result)
    return _emit_formula(result, args)


def cmd_relativize(args) -> int:
    signature = _signature(args, [args.formula])
    formula = _formula(args.formula, signature)
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    if args.one_param:
        return _emit_formula(relativize_one_param(formula, variables), args)
    return _emit_formula(relativize(formula, variables), args)


NORMAL_FORMS = {
    "monadic": normalize_monadic,
    "nnf": nnf,
    "flat": flatten,
    "alpha": alpha_normalize,
}


def cmd_normalize(args) -> int:
    signature = _signature(args, [args.formula])
    return _emit_formula(NORMAL_FORMS[args.form](_formula(args.formula, signature)), args)


def cmd_classify(args) -> int:
    signature = _signature(args, [args.formula])
    record = asdict(classify(_formula(args.formula, signature)))
    if args.json:
        print(json.dumps(record, sort_keys=True, indent=get_settings().output.json_indent))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")
    return 0


def cmd_equiv(args) -> int:
    signature = _signature(args, [args.first, args.second])
    report = check_equiv(
        _formula(args.first, signature), _formula(args.second, signature),
        signature, args.max_size, jobs=args.jobs,
    )
    return _emit_report(report, args)


def cmd_witness_scan(args) -> int:
    signature = _signature(args, [args.formula])
    _, report = witness_bound_scan(_formula(args.formula, signature), signature,
                                   args.max_size, jobs=args.jobs,
                                   count_classes_up_to=args.classes_up_to)
    return _emit_report(report, args)


def cmd_sieve(args) -> int:
    paths = [args.formula] + ([args.background] if args.background else [])
    signature = _signature(args, paths)
    sieve = universal_consequence_sieve(
        _formula(args.formula, signature), signature, args.budget, args.max_size,
        background=_background(args, signature), max_literals=args.max_literals,
        model_limit=args.model_limit, jobs=args.jobs,
    )
    return _emit_report(sieve.report, args)


def cmd_membership(args) -> int:
    paths = [args.formula] + ([args.background] if args.background else [])
    signature = _signature(args, paths, args.model)
    model = _model(args.model, signature)
    report = theta_star_membership(
        model, _formula(args.formula, signature), args.bound, args.budget, args.max_size,
        background=_background(args, signature), jobs=args.jobs,
    )
    return _emit_report(report, args)


def cmd_demo(args) -> int:
    return _emit_report(run_demo(args.name, DemoConfig(jobs=args.jobs)), args)


# ----------------------------------------------------------------------
# Parser


def build_parser() -> ArgumentParser:
    search = get_settings().search
    sieve = get_settings().sieve

    common = ArgumentParser(add_help=False)
    common.add_argument("--sig", help="signature file (.sig); inferred when omitted")
    common.add_argument("--json", action="store_true", help="print a machine-readable report")
    common.add_argument("--jobs", type=int, default=search.jobs, help="worker processes")
    common.add_argument("--timing", action="store_true", help="include runtime_ms in JSON")

    parser = ArgumentParser(prog="submodel-lab", description="Submodel and extension modalities over finite models")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = commands.add_parser("eval", parents=[common], help="evaluate a sentence in a model")
    p.add_argument("model")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_eval)

    p = commands.add_parser("theta", parents=[common], help="does some submodel satisfy the sentence")
    bounds = p.add_mutually_exclusive_group()
    bounds.add_argument("--le", type=int, metavar="N")
    bounds.add_argument("--eq", type=int, metavar="N")
    bounds.add_argument("--lt", type=int, metavar="N")
    bounds.add_argument("--gen", type=int, metavar="N")
    p.add_argument("model")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_theta)

    p = commands.add_parser("theta-star", parents=[common], help="does some extension satisfy the sentence")
    p.add_argument("--bound", type=int, metavar="K",
                   help=f"extension size bound (default: model size + {search.extension_slack})")
    p.add_argument("model")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_theta_star)

    p = commands.add_parser("build-theta", parents=[common], help="print the θ sentence of a formula")
    p.add_argument("--n", type=int, default=1)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--eq", action="store_true", help="exact cardinality n")
    kind.add_argument("--lt", action="store_true", help="cardinality below n")
    kind.add_argument("--monadic", action="store_true", help="equality-free monadic θ")
    kind.add_argument("--theory", action="store_true", help="members of T_φ up to n")
    p.add_argument("--expand", action="store_true", help="expand bounded quantifiers")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_build_theta)

    p = commands.add_parser("relativize", parents=[common], help="relativize to a tuple of variables")
    p.add_argument("--vars", required=True, help="comma-separated, e.g. x0,x1")
    p.add_argument("--one-param", action="store_true", help="one-parameter relativization")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_relativize)

    p = commands.add_parser("normalize", parents=[common], help="rewrite into a normal form")
    p.add_argument("--form", choices=sorted(NORMAL_FORMS), default="monadic")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_normalize)

    p = commands.add_parser("classify", parents=[common], help="syntactic class record")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_classify)

    p = commands.add_parser("equiv", parents=[common], help="compare two sentences on small models")
    p.add_argument("--max-size", type=int, default=search.max_size)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_equiv)

    p = commands.add_parser("witness-scan", parents=[common], help="empirical submodel witness bound")
    p.add_argument("--max-size", type=int, default=search.max_size)
    p.add_argument("--classes-up-to", type=int, default=search.class_count_max_size, metavar="N",
                   help="count isomorphism classes of models up to size N")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_witness_scan)

    p = commands.add_parser("sieve", parents=[common], help="universal consequences within a budget")
    p.add_argument("--budget", type=int, default=sieve.budget)
    p.add_argument("--max-size", type=int, default=sieve.max_size)
    p.add_argument("--max-literals", type=int, default=sieve.max_literals)
    p.add_argument("--model-limit", type=int, default=sieve.model_limit)
    p.add_argument("--background", help="background theory (.fml)")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_sieve)

    p = commands.add_parser("membership", parents=[common], help="cross-check θ* against the sieve")
    p.add_argument("--bound", type=int, required=True, metavar="K")
    p.add_argument("--budget", type=int, default=sieve.budget)
    p.add_argument("--max-size", type=int, default=sieve.max_size)
    p.add_argument("--background", help="background theory (.fml)")
    p.add_argument("model")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_membership)

    p = commands.add_parser("demo", parents=[common], help="run a scripted demonstration")
    p.add_argument("name", choices=sorted(DEMOS) + ["all"])
    p.set_defaults(handler=cmd_demo)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    try:
        return args.handler(args)
    except LogicError as exc:
        logger.warning("Command failed", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
