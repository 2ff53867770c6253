"""
Backtracking model finder.

Tables are filled one cell at a time. The universal part of the prune
sentence is grounded into quantifier-free instances; each undetermined
instance watches one undefined cell and is re-evaluated only when that
cell receives a value. Remaining conjuncts are checked on complete models.
"""
import time
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..config.logging_config import verify_logger
from ..logic.errors import BoundError, FormulaError, SearchError
from ..logic.operations import free_vars, is_open
from ..logic.syntax import (
    And,
    Apply,
    Const,
    EqAtom,
    Forall,
    Formula,
    Not,
    Or,
    PredAtom,
    Signature,
    Term,
    Var,
)
from ..transforms.normal_forms import nnf, top_conjuncts
from .finite_model import FiniteModel, Row
from .parallel import run_ordered
from .semantics import evaluate

Cell = Tuple[str, Row]
CellValue = Union[int, bool]

# Ground terms: int element | ("const", name) | ("app", name, args)
# Ground formulas: ("pred", name, args) | ("eq", l, r) | ("not", f) | ("and", fs) | ("or", fs)
GroundTerm = Union[int, tuple]
GroundFormula = tuple


@dataclass
class SearchStats:
    """Counters for one search."""
    nodes: int = 0
    models: int = 0
    instances: int = 0
    duration_ms: float = 0.0


def _ground_term(term: Term, env: Dict[str, int]) -> GroundTerm:
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, Const):
        return ("const", term.name)
    return ("app", term.function, tuple(_ground_term(a, env) for a in term.args))


def _ground(formula: Formula, env: Dict[str, int]) -> GroundFormula:
    if isinstance(formula, PredAtom):
        return ("pred", formula.predicate, tuple(_ground_term(a, env) for a in formula.args))
    if isinstance(formula, EqAtom):
        return ("eq", _ground_term(formula.left, env), _ground_term(formula.right, env))
    if isinstance(formula, Not):
        return ("not", _ground(formula.body, env))
    if isinstance(formula, And):
        return ("and", tuple(_ground(i, env) for i in formula.items))
    if isinstance(formula, Or):
        return ("or", tuple(_ground(i, env) for i in formula.items))
    raise FormulaError(f"cannot ground quantified formula {formula}")


class _PartialEvaluator:
    """Three-valued evaluation over a partial table assignment."""

    def __init__(self, values: Dict[Cell, CellValue]):
        self.values = values
        self.blocker: Optional[Cell] = None

    def term(self, term: GroundTerm) -> Optional[int]:
        if type(term) is int:
            return term
        if term[0] == "const":
            cell = (term[1], ())
        else:
            args = []
            for arg in term[2]:
                value = self.term(arg)
                if value is None:
                    return None
                args.append(value)
            cell = (term[1], tuple(args))
        value = self.values.get(cell)
        if value is None:
            self.blocker = cell
        return value

    def formula(self, node: GroundFormula) -> Optional[bool]:
        tag = node[0]
        if tag == "pred":
            args = []
            for arg in node[2]:
                value = self.term(arg)
                if value is None:
                    return None
                args.append(value)
            cell = (node[1], tuple(args))
            value = self.values.get(cell)
            if value is None:
                self.blocker = cell
            return value
        if tag == "eq":
            left = self.term(node[1])
            if left is None:
                return None
            right = self.term(node[2])
            if right is None:
                return None
            return left == right
        if tag == "not":
            value = self.formula(node[1])
            return None if value is None else not value
        # and / or
        absorbing = tag == "or"
        unknown = False
        for item in node[1]:
            value = self.formula(item)
            if value is None:
                unknown = True
            elif value == absorbing:
                return absorbing
        return None if unknown else not absorbing


class ModelFinder:
    """
    Enumerates models of a signature with a fixed universe size.

    Args:
        signature: Signature of the models
        size: Universe size n >= 1
        prune: Optional sentence; exactly its models are emitted
        fixed: Cells with preset values (used for extensions)
    """

    def __init__(
        self,
        signature: Signature,
        size: int,
        prune: Optional[Formula] = None,
        fixed: Optional[Dict[Cell, CellValue]] = None,
    ):
        if size < 1:
            raise BoundError("model size must be >= 1")
        if prune is not None and free_vars(prune):
            raise SearchError("prune must be a sentence")
        self.signature = signature
        self.size = size
        self.prune = prune
        self.fixed = dict(fixed or {})
        self.stats = SearchStats()

        self.instances: List[GroundFormula] = []
        self.final_checks: List[Formula] = []
        if prune is not None:
            self._compile(prune)
        self.cells = self._order_cells()

    # ------------------------------------------------------------------
    # Setup

    def _compile(self, prune: Formula) -> None:
        seen = set()
        for conjunct in top_conjuncts(nnf(prune)):
            variables: List[str] = []
            matrix = conjunct
            while isinstance(matrix, Forall):
                variables.extend(matrix.variables)
                matrix = matrix.body
            if not is_open(matrix):
                self.final_checks.append(conjunct)
                continue
            for item in top_conjuncts(matrix):
                used = [v for v in dict.fromkeys(variables) if v in free_vars(item)]
                for values in product(range(self.size), repeat=len(used)):
                    ground = _ground(item, dict(zip(used, values)))
                    if ground not in seen:
                        seen.add(ground)
                        self.instances.append(ground)
        self.stats.instances = len(self.instances)

    def _instance_constants(self) -> set:
        found = set()

        def visit(node):
            if isinstance(node, tuple):
                if node and node[0] == "const":
                    found.add(node[1])
                for part in node:
                    visit(part)

        for instance in self.instances:
            visit(instance)
        return found

    def _order_cells(self) -> List[Cell]:
        sig, n = self.signature, self.size
        early = self._instance_constants()
        cells: List[Cell] = [(c, ()) for c in sorted(sig.constants) if c in early]
        for name, arity in sig.functions.items():
            cells.extend((name, args) for args in product(range(n), repeat=arity))
        for name, arity in sig.predicates.items():
            cells.extend((name, args) for args in product(range(n), repeat=arity))
        cells.extend((c, ()) for c in sorted(sig.constants) if c not in early)
        return [c for c in cells if c not in self.fixed]

    def _domain(self, cell: Cell) -> Sequence[CellValue]:
        if cell[0] in self.signature.predicates:
            return (False, True)
        return range(self.size)

    def first_cell_domain(self) -> List[CellValue]:
        """Values of the first open cell, used to partition the search."""
        return list(self._domain(self.cells[0])) if self.cells else []

    # ------------------------------------------------------------------
    # Search

    def models(self, first_value: Optional[CellValue] = None) -> Iterator[FiniteModel]:
        """Stream matching models in deterministic order."""
        started = time.perf_counter()
        values: Dict[Cell, CellValue] = dict(self.fixed)
        evaluator = _PartialEvaluator(values)
        watch: Dict[Cell, List[GroundFormula]] = {}

        for instance in self.instances:
            evaluator.blocker = None
            result = evaluator.formula(instance)
            if result is False:
                return
            if result is None:
                watch.setdefault(evaluator.blocker, []).append(instance)

        yield from self._search(0, values, evaluator, watch, first_value)
        self.stats.duration_ms = (time.perf_counter() - started) * 1000
        verify_logger.log_search(
            size=self.size,
            nodes=self.stats.nodes,
            models=self.stats.models,
            instances=self.stats.instances,
            duration_ms=self.stats.duration_ms,
        )

    def _search(self, depth, values, evaluator, watch, first_value) -> Iterator[FiniteModel]:
        if depth == len(self.cells):
            model = self._build(values)
            if all(evaluate(model, check) for check in self.final_checks):
                self.stats.models += 1
                yield model
            return

        cell = self.cells[depth]
        watchers = watch.pop(cell, [])
        domain = self._domain(cell)
        if depth == 0 and first_value is not None:
            domain = [first_value]

        for value in domain:
            self.stats.nodes += 1
            values[cell] = value
            moved: List[Cell] = []
            consistent = True
            for instance in watchers:
                evaluator.blocker = None
                result = evaluator.formula(instance)
                if result is False:
                    consistent = False
                    break
                if result is None:
                    watch.setdefault(evaluator.blocker, []).append(instance)
                    moved.append(evaluator.blocker)
            if consistent:
                yield from self._search(depth + 1, values, evaluator, watch, first_value)
            for blocker in reversed(moved):
                watch[blocker].pop()
            del values[cell]

        watch[cell] = watchers

    def _build(self, values: Dict[Cell, CellValue]) -> FiniteModel:
        sig = self.signature
        relations = {name: set() for name in sig.predicates}
        tables = {name: {} for name in sig.functions}
        constants = {}
        for (name, args), value in values.items():
            if name in relations:
                if value:
                    relations[name].add(args)
            elif name in tables:
                tables[name][args] = value
            else:
                constants[name] = value
        return FiniteModel(sig, self.size, relations, tables, constants)


# ----------------------------------------------------------------------
# Entry points


def _partition_worker(job) -> List[FiniteModel]:
    signature, size, prune, fixed, first_value = job
    return list(ModelFinder(signature, size, prune, fixed).models(first_value))


def enumerate_models(
    signature: Signature,
    size: int,
    prune: Optional[Formula] = None,
    jobs: int = 1,
    fixed: Optional[Dict[Cell, CellValue]] = None,
) -> Iterator[FiniteModel]:
    """
    All models of ``signature`` on {0..size-1}, restricted to models of
    ``prune`` when given. With ``jobs > 1`` the space is split on the
    first cell and partitions are merged in the sequential order.
    """
    finder = ModelFinder(signature, size, prune, fixed)
    if jobs <= 1 or not finder.cells:
        yield from finder.models()
        return
    work = [(signature, size, prune, fixed, value) for value in finder.first_cell_domain()]
    for chunk in run_ordered(_partition_worker, work, jobs):
        yield from chunk


def enumerate_models_up_to(
    signature: Signature,
    max_size: int,
    prune: Optional[Formula] = None,
    jobs: int = 1,
) -> Iterator[FiniteModel]:
    for size in range(1, max_size + 1):
        yield from enumerate_models(signature, size, prune, jobs)


def model_cells(model: FiniteModel) -> Dict[Cell, CellValue]:
    """Every cell of ``model`` with its value."""
    cells: Dict[Cell, CellValue] = {}
    for name, arity in model.signature.predicates.items():
        rows = model.relations[name]
        for args in product(range(model.size), repeat=arity):
            cells[(name, args)] = args in rows
    for name, table in model.func_tables.items():
        for args, value in table.items():
            cells[(name, args)] = value
    for name, value in model.const_vals.items():
        cells[(name, ())] = value
    return cells


def enumerate_extensions(
    model: FiniteModel,
    bound: int,
    prune: Optional[Formula] = None,
) -> Iterator[FiniteModel]:
    """
    Extensions of ``model`` with at most ``bound`` elements.

    The embedding is the identity on {0..|A|-1}; old cells keep their
    values, so old tuples still map into the old universe.
    """
    if bound < model.size:
        raise BoundError(f"extension bound {bound} is below the model size {model.size}")
    fixed = model_cells(model)
    for size in range(model.size, bound + 1):
        yield from ModelFinder(model.signature, size, prune, fixed).models()
