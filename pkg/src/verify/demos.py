"""
Scripted finite-scale demonstrations.

Each demo checks one phenomenon exhaustively at small sizes and returns a
Report. Sizes come from ``DemoSettings``.
"""
import time
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from config.settings import get_settings

from ..logic.classification import classify
from ..logic.errors import SearchError
from ..logic.syntax import Formula, conjunction
from ..modal.builders import build_t_phi
from ..modal.operators import theta_le_sem, theta_sem, theta_star_sem
from ..models.cayley import (
    all_tables,
    cayley_table,
    identity_element,
    is_associative,
    is_cancellative,
    is_commutative,
    is_group_table,
)
from ..models.finite_model import FiniteModel, model_from_rows
from ..models.model_finder import enumerate_models
from ..models.parallel import run_ordered
from ..models.semantics import evaluate
from . import corpus
from .report import Counterexample, Parameters, Report, Verdict, conclude, worst

DemoFn = Callable[["DemoConfig"], Report]


class DemoConfig:
    """Demo sizes plus the worker count for model searches."""

    def __init__(self, sizes=None, jobs: int = 1):
        self.sizes = sizes if sizes is not None else get_settings().demo
        self.jobs = jobs


def _table_model(signature_name: str, table: np.ndarray, constants=None) -> FiniteModel:
    return model_from_rows(
        corpus.signature(signature_name),
        table.shape[0],
        tables={"mul": table.tolist()},
        constants=constants,
    )


def _latin_squares(size: int, jobs: int) -> Iterator[np.ndarray]:
    prune = conjunction(corpus.cancellation_laws("groupoid"))
    for model in enumerate_models(corpus.signature("groupoid"), size, prune, jobs):
        yield cayley_table(model)


def _refuted(claim: str, parameters: Parameters, started: float, model: FiniteModel,
             formula: Optional[Formula], witness: str, details: Dict) -> Report:
    return conclude(claim, Verdict.REFUTED, parameters, started,
                    counterexample=Counterexample.of(model, formula, witness), details=details)


# ----------------------------------------------------------------------
# Extension demos


def maltsev(config: DemoConfig) -> Report:
    """
    Quasi-identities necessary for group embeddability hold in every group
    table and separate a non-embeddable small table.
    """
    started = time.perf_counter()
    sizes = config.sizes
    parameters = Parameters(size_bound=max(sizes.maltsev_max_size, sizes.maltsev_group_size))
    laws = corpus.quasi_identities()

    group_tables = 0
    for n in range(1, sizes.maltsev_group_size + 1):
        for table in all_tables(n):
            if not is_group_table(table):
                continue
            group_tables += 1
            model = _table_model("groupoid", table)
            for law in laws:
                if not evaluate(model, law.formula):
                    return _refuted("demo:maltsev", parameters, started, model, law.formula,
                                    f"group table fails {law.name}", {"group_tables": group_tables})

    checked = 0
    separated = 0
    exhibit = None
    for n in range(1, sizes.maltsev_max_size + 1):
        for table in all_tables(n):
            checked += 1
            model = _table_model("groupoid", table)
            failing = [law.name for law in laws if not evaluate(model, law.formula)]
            if failing:
                separated += 1
                if exhibit is None:
                    exhibit = (table, failing)

    details = {"group_tables": group_tables, "tables_checked": checked, "separated": separated}
    if exhibit is None:
        return conclude("demo:maltsev", Verdict.EXHAUSTED, parameters, started, details=details)
    table, failing = exhibit
    details["exhibit"] = {
        "table": table.tolist(),
        "failing": failing,
        "cancellative": is_cancellative(table),
    }
    return conclude("demo:maltsev", Verdict.VERIFIED, parameters, started, details=details)


def _extension_equivalence(
    claim: str,
    models: Iterator[Tuple[FiniteModel, bool]],
    axioms: Formula,
    parameters: Parameters,
    started: float,
) -> Tuple[Optional[Report], Dict[str, int]]:
    counts: Dict[str, int] = {}
    for model, expected in models:
        key = str(model.size)
        counts[key] = counts.get(key, 0) + 1
        if theta_star_sem(model, axioms, model.size) != expected:
            report = _refuted(claim, parameters, started, model, axioms,
                              f"oracle says {'true' if expected else 'false'}", {"checked": counts})
            return report, counts
    return None, counts


def quasigroup(config: DemoConfig) -> Report:
    """θ*_{≤|A|}(quasigroup axioms) holds exactly on cancellative tables."""
    started = time.perf_counter()
    limit = config.sizes.quasigroup_max_size
    parameters = Parameters(size_bound=limit, extension_bound=limit)
    cancellative: Dict[str, int] = {}

    def stream():
        for n in range(1, limit + 1):
            for table in all_tables(n):
                expected = is_cancellative(table)
                if expected:
                    cancellative[str(n)] = cancellative.get(str(n), 0) + 1
                yield _table_model("groupoid", table), expected

    failure, counts = _extension_equivalence(
        "demo:quasigroup", stream(), corpus.quasigroup_axioms(), parameters, started
    )
    if failure is not None:
        return failure
    finder_count = sum(1 for _ in _latin_squares(limit, config.jobs))
    details = {
        "tables_by_size": counts,
        "cancellative_by_size": cancellative,
        "finder_cancellative": finder_count,
    }
    if finder_count != cancellative.get(str(limit), 0):
        raise SearchError("pruned search and raw enumeration disagree on cancellative tables")
    return conclude("demo:quasigroup", Verdict.VERIFIED, parameters, started, details=details)


def abelian(config: DemoConfig) -> Report:
    """θ*_{≤|A|}(abelian group axioms) ⇔ associative, commutative and cancellative."""
    started = time.perf_counter()
    sizes = config.sizes
    parameters = Parameters(size_bound=sizes.abelian_latin_size,
                            extension_bound=sizes.abelian_latin_size)

    def oracle(table):
        return is_associative(table) and is_commutative(table) and is_cancellative(table)

    def stream():
        for n in range(1, sizes.abelian_raw_max_size + 1):
            for table in all_tables(n):
                yield _table_model("groupoid", table), oracle(table)
        # cancellation is necessary on both sides, so only Latin squares remain
        for n in range(sizes.abelian_raw_max_size + 1, sizes.abelian_latin_size + 1):
            for table in _latin_squares(n, config.jobs):
                yield _table_model("groupoid", table), oracle(table)

    failure, counts = _extension_equivalence(
        "demo:abelian", stream(), corpus.abelian_group_axioms(), parameters, started
    )
    if failure is not None:
        return failure
    return conclude("demo:abelian", Verdict.VERIFIED, parameters, started,
                    details={"tables_by_size": counts})


def group_extension(config: DemoConfig) -> Report:
    """θ*_{≤|A|}(group axioms) holds exactly on group tables with e the identity."""
    started = time.perf_counter()
    sizes = config.sizes
    parameters = Parameters(size_bound=sizes.group_latin_size,
                            extension_bound=sizes.group_latin_size)

    def labelled(table):
        for e in range(table.shape[0]):
            expected = is_group_table(table) and identity_element(table) == e
            yield _table_model("group", table, {"e": e}), expected

    def stream():
        for n in range(1, sizes.group_raw_max_size + 1):
            for table in all_tables(n):
                yield from labelled(table)
        for n in range(sizes.group_raw_max_size + 1, sizes.group_latin_size + 1):
            for table in _latin_squares(n, config.jobs):
                yield from labelled(table)

    failure, counts = _extension_equivalence(
        "demo:group-extension", stream(), corpus.group_axioms(), parameters, started
    )
    if failure is not None:
        return failure
    return conclude("demo:group-extension", Verdict.VERIFIED, parameters, started,
                    details={"models_by_size": counts})


# ----------------------------------------------------------------------
# Submodel demos over orders


def _no_theta_on(claim: str, structure: Formula, target: Formula, config: DemoConfig) -> Report:
    started = time.perf_counter()
    limit = config.sizes.order_max_size
    parameters = Parameters(size_bound=limit)
    counts: Dict[str, int] = {}
    for n in range(1, limit + 1):
        for model in enumerate_models(corpus.signature("order"), n, structure, config.jobs):
            counts[str(n)] = counts.get(str(n), 0) + 1
            if theta_sem(model, target):
                return _refuted(claim, parameters, started, model, target,
                                "a submodel satisfies the sentence", {"orders_by_size": counts})
    return conclude(claim, Verdict.VERIFIED, parameters, started,
                    details={"orders_by_size": counts})


def wellfounded(config: DemoConfig) -> Report:
    """No finite strict partial order has a submodel without a minimal element."""
    return _no_theta_on("demo:wellfounded", corpus.strict_partial_order(),
                        corpus.no_minimal_element(), config)


def density(config: DemoConfig) -> Report:
    """No finite linear order has a dense submodel."""
    return _no_theta_on("demo:density", corpus.linear_order(), corpus.density(), config)


def endpoints(config: DemoConfig) -> Report:
    """
    θ(no endpoints) agrees with the fragment {σ_n : n <= N + 1} on every
    {<}-model of size <= N.
    """
    started = time.perf_counter()
    limit = config.sizes.endpoints_max_size
    parameters = Parameters(size_bound=limit)
    phi = corpus.no_endpoints()
    fragment = [corpus.at_least(n) for n in range(1, limit + 2)]
    checked = 0
    for n in range(1, limit + 1):
        for model in enumerate_models(corpus.signature("order"), n, jobs=config.jobs):
            checked += 1
            theory_holds = all(evaluate(model, sigma) for sigma in fragment)
            if theta_sem(model, phi) != theory_holds:
                return _refuted("demo:endpoints", parameters, started, model, phi,
                                f"fragment {'holds' if theory_holds else 'fails'}",
                                {"models_checked": checked})
    return conclude("demo:endpoints", Verdict.VERIFIED, parameters, started,
                    details={"models_checked": checked, "fragment_cutoff": limit + 1})


# ----------------------------------------------------------------------
# Syntactic criterion demos over {R/2} with equality

CRITERION_PAIRS: Tuple[Tuple[str, str, str, int], ...] = (
    ("source-itself",
     "(exists (x) (forall (y) (R x y)))",
     "(exists (x) (forall (y) (R x y)))",
     1),
    ("covering-pair-itself",
     "(exists (x y) (forall (z) (or (R x z) (R z y))))",
     "(exists (x y) (forall (z) (or (R x z) (R z y))))",
     1),
    # the negation has no model of size 2
    ("large-or-serial",
     "(or (exists (x y) (not (= x y))) (forall (x) (exists (y) (R x y))))",
     "(exists (x y) (not (= x y)))",
     2),
)


def _pair_formula(text: str) -> Formula:
    return corpus.CorpusEntry("pair", "digraph", text).formula


def theorem1(config: DemoConfig) -> Report:
    """
    For each pair (φ, ψ, n) with ψ ∃∀: every model of size <= N on which φ
    and ψ disagree violates the T_φ fragment at n; and every model of φ has
    a submodel of size <= max(k, n) satisfying φ, k the existential width
    of ψ.
    """
    started = time.perf_counter()
    limit = config.sizes.theorem1_max_size
    parameters = Parameters(size_bound=limit)
    sig = corpus.signature("digraph")
    pairs = []
    for name, phi_text, psi_text, n in CRITERION_PAIRS:
        phi, psi = _pair_formula(phi_text), _pair_formula(psi_text)
        replay = max(classify(psi).existential_width, n)
        pairs.append((name, phi, psi, build_t_phi(phi, n, sig), replay))
    disagreements = {name: 0 for name, *_ in pairs}

    for size in range(1, limit + 1):
        for model in enumerate_models(sig, size, jobs=config.jobs):
            for name, phi, psi, fragment, replay in pairs:
                holds = evaluate(model, phi)
                if holds != evaluate(model, psi):
                    disagreements[name] += 1
                    if fragment.holds_in(model):
                        return _refuted("demo:theorem1", parameters, started, model, phi,
                                        f"{name}: fragment holds but the pair disagrees", {})
                if holds and not theta_le_sem(model, phi, replay):
                    return _refuted("demo:theorem1", parameters, started, model, phi,
                                    f"{name}: no submodel of size <= {replay}", {})
    details = {
        name: {"disagreements": disagreements[name], "replay_bound": replay}
        for name, _, _, _, replay in pairs
    }
    return conclude("demo:theorem1", Verdict.VERIFIED, parameters, started, details=details)


SHADOW_SENTENCES = ("serial", "loop", "two-cycle", "transitive", "source")


def shadow(config: DemoConfig) -> Report:
    """The T_φ fragment at N agrees with ¬θ(φ) on every model of size <= N."""
    started = time.perf_counter()
    limit = config.sizes.shadow_max_size
    parameters = Parameters(size_bound=limit)
    entries = {e.name: e for e in corpus.binary_corpus()}
    sig = corpus.signature("binary")
    checked = 0
    for name in SHADOW_SENTENCES:
        phi = entries[name].formula
        fragment = build_t_phi(phi, limit, sig)
        for n in range(1, limit + 1):
            for model in enumerate_models(sig, n, jobs=config.jobs):
                checked += 1
                if fragment.holds_in(model) == theta_sem(model, phi):
                    return _refuted("demo:shadow", parameters, started, model, phi,
                                    f"{name}: fragment and θ disagree", {"models_checked": checked})
    return conclude("demo:shadow", Verdict.VERIFIED, parameters, started,
                    details={"models_checked": checked, "sentences": list(SHADOW_SENTENCES)})


# ----------------------------------------------------------------------
# Registry

DEMOS: Dict[str, DemoFn] = {
    "abelian": abelian,
    "density": density,
    "endpoints": endpoints,
    "group-extension": group_extension,
    "maltsev": maltsev,
    "quasigroup": quasigroup,
    "shadow": shadow,
    "theorem1": theorem1,
    "wellfounded": wellfounded,
}


def _run_named(job: Tuple[str, DemoConfig]) -> Report:
    name, config = job
    return DEMOS[name](config)


def run_demo(name: str, config: Optional[DemoConfig] = None) -> Report:
    """
    Run one demo, or every demo for ``all``.

    Raises:
        KeyError: unknown demo name
    """
    config = config or DemoConfig()
    if name != "all":
        if name not in DEMOS:
            raise KeyError(name)
        return DEMOS[name](config)

    started = time.perf_counter()
    names = sorted(DEMOS)
    serial = DemoConfig(config.sizes, jobs=1)
    reports: List[Report] = run_ordered(_run_named, [(n, serial) for n in names], config.jobs)
    verdict = worst(*(r.verdict for r in reports))
    failed = next((r for r in reports if r.verdict is Verdict.REFUTED), None)
    return conclude(
        "demo:all", verdict, Parameters(), started,
        counterexample=failed.counterexample if failed else None,
        details={r.claim_id: r.verdict.value for r in reports},
    )
