"""
Universal-consequence sieve.

Approximates the set of universal consequences of a sentence (and an
optional background theory) at finite scale: every universal clause
within the syntactic budget is generated once up to variable renaming and
kept while it holds in each model of the sentence up to the size bound.

Candidate grammar: ∀v0..v_{m-1} (L1 ∨ ... ∨ Lk) with m <= budget,
k <= max_literals, terms of depth <= 1 and predicate arguments that are
variables or constants. Clauses are stored as tuples:

    term     ("v", i) | ("c", name) | ("f", name, args)
    atom     ("p", name, args) | ("e", left, right)   left < right
    literal  (atom, positive)
"""
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..config.logging_config import verify_logger
from ..logic.errors import SearchError
from ..logic.syntax import (
    Apply,
    Const,
    EqAtom,
    Forall,
    Formula,
    Not,
    Or,
    PredAtom,
    Signature,
    Var,
    conjunction,
    disjunction,
)
from ..models.finite_model import FiniteModel
from ..models.model_finder import enumerate_models
from ..models.semantics import evaluate
from ..modal.builders import Theory
from ..transforms.normal_forms import nnf
from .report import Parameters, Report, Verdict

TermKey = tuple
AtomKey = tuple
Literal = Tuple[AtomKey, bool]
Clause = Tuple[Literal, ...]

VARIABLE_NAMES = ("x", "y", "z", "u", "v", "w")


# ----------------------------------------------------------------------
# Candidate grammar


def _term_vars(term: TermKey) -> Set[int]:
    if term[0] == "v":
        return {term[1]}
    if term[0] == "f":
        return set().union(*(_term_vars(a) for a in term[2]))
    return set()


def _atom_vars(atom: AtomKey) -> Set[int]:
    if atom[0] == "p":
        return set().union(*(_term_vars(a) for a in atom[2]))
    return _term_vars(atom[1]) | _term_vars(atom[2])


def _rename_term(term: TermKey, mapping: Dict[int, int]) -> TermKey:
    if term[0] == "v":
        return ("v", mapping[term[1]])
    if term[0] == "f":
        return ("f", term[1], tuple(_rename_term(a, mapping) for a in term[2]))
    return term


def _rename_atom(atom: AtomKey, mapping: Dict[int, int]) -> AtomKey:
    if atom[0] == "p":
        return ("p", atom[1], tuple(_rename_term(a, mapping) for a in atom[2]))
    left, right = sorted((_rename_term(atom[1], mapping), _rename_term(atom[2], mapping)))
    return ("e", left, right)


def _clause_vars(clause: Sequence[Literal]) -> Set[int]:
    return set().union(*(_atom_vars(atom) for atom, _ in clause))


def canonical_clause(clause: Sequence[Literal]) -> Clause:
    """Least sorted renaming of ``clause`` onto v0..v_{m-1}."""
    used = sorted(_clause_vars(clause))
    best: Optional[Clause] = None
    for image in permutations(range(len(used))):
        mapping = dict(zip(used, image))
        renamed = tuple(sorted((_rename_atom(a, mapping), sign) for a, sign in clause))
        if best is None or renamed < best:
            best = renamed
    return best if best is not None else tuple(sorted(clause))


def candidate_atoms(signature: Signature, budget: int) -> List[AtomKey]:
    base: List[TermKey] = [("v", i) for i in range(budget)]
    base += [("c", name) for name in sorted(signature.constants)]
    terms = list(base)
    for name, arity in signature.functions.items():
        terms.extend(("f", name, args) for args in product(base, repeat=arity))

    atoms: List[AtomKey] = []
    for name, arity in signature.predicates.items():
        atoms.extend(("p", name, args) for args in product(base, repeat=arity))
    if signature.equality_allowed:
        atoms.extend(("e", a, b) for a, b in combinations(sorted(terms), 2))
    return sorted(atoms)


def generate_candidates(signature: Signature, budget: int, max_literals: int = 2) -> List[Clause]:
    """One clause per renaming class, in sorted order."""
    literals = sorted((atom, sign) for atom in candidate_atoms(signature, budget)
                      for sign in (False, True))
    result: List[Clause] = []
    for count in range(1, max_literals + 1):
        for combo in combinations(literals, count):
            atoms = [atom for atom, _ in combo]
            if len(set(atoms)) != len(atoms):
                continue  # complementary pair
            used = _clause_vars(combo)
            if used != set(range(len(used))):
                continue
            if canonical_clause(combo) == combo:
                result.append(combo)
    return result


# ----------------------------------------------------------------------
# Conversion to and from formulas


def _variable_name(index: int) -> str:
    return VARIABLE_NAMES[index] if index < len(VARIABLE_NAMES) else f"v{index}"


def _term_formula(term: TermKey):
    if term[0] == "v":
        return Var(_variable_name(term[1]))
    if term[0] == "c":
        return Const(term[1])
    return Apply(term[1], tuple(_term_formula(a) for a in term[2]))


def clause_formula(clause: Clause) -> Formula:
    literals = []
    for atom, positive in clause:
        if atom[0] == "p":
            node = PredAtom(atom[1], tuple(_term_formula(a) for a in atom[2]))
        else:
            node = EqAtom(_term_formula(atom[1]), _term_formula(atom[2]))
        literals.append(node if positive else Not(node))
    matrix = disjunction(literals)
    used = sorted(_clause_vars(clause))
    if not used:
        return matrix
    return Forall(tuple(_variable_name(i) for i in used), matrix)


def clause_of(formula: Formula) -> Optional[Clause]:
    """Canonical clause for a universal clause sentence, or None outside the grammar."""
    matrix = nnf(formula)
    names: List[str] = []
    while isinstance(matrix, Forall):
        names.extend(matrix.variables)
        matrix = matrix.body
    items = matrix.items if isinstance(matrix, Or) else (matrix,)
    index: Dict[str, int] = {}

    def term_key(term) -> Optional[TermKey]:
        if isinstance(term, Var):
            if term.name not in names:
                return None
            return ("v", index.setdefault(term.name, len(index)))
        if isinstance(term, Const):
            return ("c", term.name)
        if isinstance(term, Apply):
            args = [term_key(a) for a in term.args]
            if any(a is None or a[0] == "f" for a in args):
                return None
            return ("f", term.function, tuple(args))
        return None

    clause: List[Literal] = []
    for item in items:
        positive = not isinstance(item, Not)
        atom = item.body if isinstance(item, Not) else item
        if isinstance(atom, PredAtom):
            args = [term_key(a) for a in atom.args]
            if any(a is None or a[0] == "f" for a in args):
                return None
            clause.append((("p", atom.predicate, tuple(args)), positive))
        elif isinstance(atom, EqAtom):
            left, right = term_key(atom.left), term_key(atom.right)
            if left is None or right is None or left == right:
                return None
            left, right = sorted((left, right))
            clause.append((("e", left, right), positive))
        else:
            return None
    if not clause:
        return None
    return canonical_clause(clause)


# ----------------------------------------------------------------------
# Vectorised evaluation


class _ModelArrays:
    """Term and atom values of one model over every assignment of v0..v_{s-1}."""

    def __init__(self, model: FiniteModel, budget: int):
        self.model = model
        n = model.size
        self.grid = np.indices((n,) * budget).reshape(budget, -1) if budget else np.zeros((0, 1), int)
        self.width = self.grid.shape[1]
        self.tables = {
            name: self._dense(model.func_tables[name], arity, n, np.int64)
            for name, arity in model.signature.functions.items()
        }
        self.relations = {
            name: self._relation(model.relations[name], arity, n)
            for name, arity in model.signature.predicates.items()
        }
        self.terms: Dict[TermKey, np.ndarray] = {}

    @staticmethod
    def _dense(table, arity: int, n: int, dtype) -> np.ndarray:
        array = np.zeros((n,) * arity, dtype=dtype)
        for args, value in table.items():
            array[args] = value
        return array

    @staticmethod
    def _relation(rows, arity: int, n: int) -> np.ndarray:
        array = np.zeros((n,) * arity, dtype=bool)
        for row in rows:
            array[row] = True
        return array

    def term(self, term: TermKey) -> np.ndarray:
        cached = self.terms.get(term)
        if cached is not None:
            return cached
        if term[0] == "v":
            value = self.grid[term[1]]
        elif term[0] == "c":
            value = np.full(self.width, self.model.const_vals[term[1]], dtype=np.int64)
        else:
            args = tuple(self.term(a) for a in term[2])
            value = self.tables[term[1]][args]
        self.terms[term] = value
        return value

    def atom(self, atom: AtomKey) -> np.ndarray:
        if atom[0] == "p":
            return self.relations[atom[1]][tuple(self.term(a) for a in atom[2])]
        return self.term(atom[1]) == self.term(atom[2])


def _clause_arrays(clauses: Sequence[Clause], atom_index: Dict[AtomKey, int], pad: int):
    width = max((len(c) for c in clauses), default=1)
    atoms = np.full((len(clauses), width), pad, dtype=np.int64)
    signs = np.ones((len(clauses), width), dtype=bool)
    for row, clause in enumerate(clauses):
        for col, (atom, positive) in enumerate(clause):
            atoms[row, col] = atom_index[atom]
            signs[row, col] = positive
    return atoms, signs


def surviving(clauses: Sequence[Clause], model: FiniteModel, budget: int) -> np.ndarray:
    """Boolean mask of the clauses true in ``model`` under every assignment."""
    if not clauses:
        return np.zeros(0, dtype=bool)
    arrays = _ModelArrays(model, budget)
    atom_keys = sorted({atom for clause in clauses for atom, _ in clause})
    atom_index = {atom: i for i, atom in enumerate(atom_keys)}
    truth = np.zeros((len(atom_keys) + 1, arrays.width), dtype=bool)
    for i, atom in enumerate(atom_keys):
        truth[i] = arrays.atom(atom)
    atoms, signs = _clause_arrays(clauses, atom_index, pad=len(atom_keys))
    literal_values = truth[atoms] == signs[:, :, None]
    return literal_values.any(axis=1).all(axis=1)


# ----------------------------------------------------------------------
# Sieve


@dataclass
class SieveResult:
    """Outcome of a sieve run."""
    theory: Theory
    report: Report
    survivors: FrozenSet[Clause] = field(default_factory=frozenset)
    candidates: int = 0
    models_checked: int = 0
    complete: bool = True

    def retains(self, formula: Formula) -> bool:
        """True when ``formula`` is a candidate clause that survived."""
        clause = clause_of(formula)
        return clause is not None and clause in self.survivors


def _subsumed(clause: Clause, survivors: FrozenSet[Clause]) -> bool:
    if len(clause) < 2:
        return False
    for size in range(1, len(clause)):
        for part in combinations(clause, size):
            if canonical_clause(part) in survivors:
                return True
    return False


def universal_consequence_sieve(
    formula: Formula,
    signature: Signature,
    budget: int,
    max_size: int,
    background: Optional[Theory] = None,
    max_literals: int = 2,
    model_limit: int = 0,
    jobs: int = 1,
) -> SieveResult:
    """
    Universal clauses within the budget true in every model of
    ``formula`` (and ``background``) with at most ``max_size`` elements.

    Args:
        formula: Sentence φ
        signature: Signature the models and candidates are drawn from
        budget: Maximum number of quantified variables s
        max_size: Model size bound N
        background: Extra sentences every model must satisfy
        max_literals: Literals per clause
        model_limit: Stop after this many models (0 = no limit); the
            report is then exhausted-without-decision
        jobs: Worker processes for the model search
    """
    started = time.perf_counter()
    prune = conjunction((formula,) + (background.sentences if background else ()))
    candidates = generate_candidates(signature, budget, max_literals)
    alive = list(candidates)
    checked = 0
    complete = True
    per_size: Dict[int, int] = {}
    seen: List[FiniteModel] = []

    for size in range(1, max_size + 1):
        for model in enumerate_models(signature, size, prune, jobs):
            if model_limit and checked >= model_limit:
                complete = False
                break
            checked += 1
            per_size[size] = per_size.get(size, 0) + 1
            seen.append(model)
            mask = surviving(alive, model, budget)
            alive = [c for c, keep in zip(alive, mask) if keep]
        if not complete:
            break

    survivors = frozenset(alive)
    retained = [c for c in alive if not _subsumed(c, survivors)]
    sentences = tuple(clause_formula(c) for c in retained)

    # independent re-check of the kept clauses on every model seen
    for model in seen:
        for sentence in sentences:
            if not evaluate(model, sentence):
                raise SearchError(f"sieve kept {sentence} but it fails on a size-{model.size} model")

    duration_ms = (time.perf_counter() - started) * 1000
    verify_logger.log_sieve(
        candidates=len(candidates),
        retained=len(sentences),
        models_checked=checked,
        duration_ms=duration_ms,
    )
    report = Report(
        claim_id="sieve",
        parameters=Parameters(size_bound=max_size, budget=budget),
        verdict=Verdict.VERIFIED if complete else Verdict.EXHAUSTED,
        details={
            "candidates": len(candidates),
            "survivors": len(survivors),
            "retained": len(sentences),
            "models_checked": checked,
            "models_by_size": {str(k): v for k, v in sorted(per_size.items())},
            "complete": complete,
            "sentences": [str(s) for s in sentences],
        },
        runtime_ms=duration_ms,
    )
    return SieveResult(
        theory=Theory(sentences),
        report=report,
        survivors=survivors,
        candidates=len(candidates),
        models_checked=checked,
        complete=complete,
    )
