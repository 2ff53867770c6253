"""
Bounded claim checks.

Every check enumerates all models up to a size bound and reports a
verdict at those bounds; counterexamples are the least failing model in
(size, table order).
"""
import time
from typing import Dict, List, Optional, Tuple

from ..logic.errors import TransformError
from ..logic.operations import require_sentence
from ..logic.syntax import Formula, Signature, conjunction
from ..modal.builders import Theory
from ..modal.operators import theta_star_sem, theta_witness
from ..models.canonical import count_isomorphism_classes
from ..models.finite_model import FiniteModel
from ..models.model_finder import enumerate_models
from ..models.semantics import evaluate
from ..parsing.render import render_model
from ..transforms.witness_bound import ea_witness_bound
from .report import Counterexample, Parameters, Report, Verdict, conclude
from .sieve import universal_consequence_sieve


def _least(models: List[FiniteModel]) -> FiniteModel:
    return min(models, key=FiniteModel.sort_key)


def _truth(value: bool) -> str:
    return "true" if value else "false"


def check_equiv(
    phi: Formula,
    chi: Formula,
    signature: Signature,
    max_size: int,
    jobs: int = 1,
    claim_id: str = "equiv",
) -> Report:
    """Verified iff ``phi`` and ``chi`` agree on every model of size <= max_size."""
    started = time.perf_counter()
    require_sentence(phi)
    require_sentence(chi)
    parameters = Parameters(size_bound=max_size)
    checked = 0

    for size in range(1, max_size + 1):
        failing = []
        for model in enumerate_models(signature, size, jobs=jobs):
            checked += 1
            if evaluate(model, phi) != evaluate(model, chi):
                failing.append(model)
        if failing:
            model = _least(failing)
            left, right = evaluate(model, phi), evaluate(model, chi)
            return conclude(
                claim_id, Verdict.REFUTED, parameters, started,
                counterexample=Counterexample.of(
                    model, phi, witness=f"first={_truth(left)} second={_truth(right)}"
                ),
                details={"models_checked": checked},
            )
    return conclude(claim_id, Verdict.VERIFIED, parameters, started,
                    details={"models_checked": checked})


def witness_bound_scan(
    phi: Formula,
    signature: Signature,
    max_size: int,
    jobs: int = 1,
    count_classes_up_to: int = 0,
) -> Tuple[int, Report]:
    """
    Least k such that every model of ``phi`` up to max_size has a
    submodel of size <= k satisfying ``phi``.

    When the sentence is an ∃∀-combination over a relational signature,
    an empirical k above the witness bound refutes the claim.

    Models of sizes up to ``count_classes_up_to`` are also counted up to
    isomorphism.
    """
    started = time.perf_counter()
    require_sentence(phi)
    parameters = Parameters(size_bound=max_size)

    bound = 0
    hardest: Optional[FiniteModel] = None
    unwitnessed: Optional[FiniteModel] = None
    checked = 0
    classes: Dict[str, int] = {}
    for size in range(1, max_size + 1):
        models = enumerate_models(signature, size, prune=phi, jobs=jobs)
        if size <= count_classes_up_to:
            models = list(models)
            classes[str(size)] = count_isomorphism_classes(models)
        for model in models:
            checked += 1
            witness = theta_witness(model, phi)
            width = len(witness)
            if width > bound:
                bound, hardest = width, model
            if size == max_size and width == size and unwitnessed is None:
                unwitnessed = model

    details = {"empirical_bound": bound, "models": checked}
    if classes:
        details["isomorphism_classes_by_size"] = classes
    try:
        expected = ea_witness_bound(phi)
    except TransformError:
        expected = None
    if expected is not None:
        details["ea_witness_bound"] = expected

    if expected is not None and signature.is_relational and bound > expected:
        return bound, conclude(
            "witness-scan", Verdict.REFUTED, parameters, started,
            counterexample=Counterexample.of(hardest, phi, witness=f"least witness size {bound}"),
            details=details,
        )
    if unwitnessed is not None and bound >= max_size:
        details["unwitnessed_model"] = render_model(unwitnessed)
        return bound, conclude("witness-scan", Verdict.EXHAUSTED, parameters, started,
                               details=details)
    return bound, conclude("witness-scan", Verdict.VERIFIED, parameters, started, details=details)


def theta_star_membership(
    model: FiniteModel,
    phi: Formula,
    bound: int,
    budget: int,
    max_size: int,
    background: Optional[Theory] = None,
    jobs: int = 1,
) -> Report:
    """
    Cross-check θ*_{≤k}(phi) against the sieve's universal consequences.

    If some extension within k satisfies phi, every retained clause holds
    in that extension and so in ``model``. The converse is recorded as
    evidence only.
    """
    started = time.perf_counter()
    parameters = Parameters(size_bound=max_size, extension_bound=bound, budget=budget)
    target = conjunction((phi,) + (background.sentences if background else ()))
    theta = theta_star_sem(model, target, bound)
    sieve = universal_consequence_sieve(
        phi, model.signature, budget, max_size, background=background, jobs=jobs
    )
    failing = sieve.theory.failing(model)
    details = {
        "theta_star": theta,
        "sieve_satisfied": not failing,
        "failing_members": [str(sieve.theory.sentences[i]) for i in failing],
        "retained": len(sieve.theory),
        "converse_gap": (not theta) and not failing,
    }

    if theta and failing:
        if bound <= max_size and sieve.complete:
            member = sieve.theory.sentences[failing[0]]
            return conclude(
                "theta-star", Verdict.REFUTED, parameters, started,
                counterexample=Counterexample.of(model, member, witness="extension exists"),
                details=details,
            )
        return conclude("theta-star", Verdict.EXHAUSTED, parameters, started, details=details)
    if not sieve.complete:
        return conclude("theta-star", Verdict.EXHAUSTED, parameters, started, details=details)
    return conclude("theta-star", Verdict.VERIFIED, parameters, started, details=details)
