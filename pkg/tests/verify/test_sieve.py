"""
Tests for the universal-consequence sieve.
"""
import numpy as np
import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.logic.errors import FormulaError, SearchError
from src.logic.syntax import TRUE, Forall, Not, Or, PredAtom, Var
from src.modal.builders import Theory
from src.models.model_finder import enumerate_models_up_to
from src.parsing.formula_parser import parse_formula
from src.verify import corpus
from src.verify import sieve as sieve_module
from src.verify.report import Verdict
from src.verify.sieve import (
    canonical_clause,
    clause_formula,
    clause_of,
    generate_candidates,
    surviving,
    universal_consequence_sieve,
)

MONADIC = corpus.signature("monadic")
GROUP = corpus.signature("group")


def m(text):
    return parse_formula(text, MONADIC)


class TestCandidates:
    """Tests for the budgeted clause grammar."""

    def test_monadic_budget_one(self):
        candidates = generate_candidates(MONADIC, 1)

        # four literals, four non-complementary pairs
        assert len(candidates) == 8

    def test_one_clause_per_renaming_class(self):
        candidates = generate_candidates(corpus.signature("binary"), 2, max_literals=1)

        # R(x,x), R(x,y) and their negations; R(y,x) renames to R(x,y)
        assert len(candidates) == 4

    def test_canonical_clause_is_renaming_invariant(self):
        clause = ((("p", "R", (("v", 1), ("v", 0))), True),)

        assert canonical_clause(clause) == ((("p", "R", (("v", 0), ("v", 1))), True),)

    def test_clause_round_trip(self):
        for clause in generate_candidates(MONADIC, 2):
            assert clause_of(clause_formula(clause)) == clause

    def test_clause_of_outside_grammar(self):
        assert clause_of(m("(exists (x) (P x))")) is None
        assert clause_of(parse_formula("(forall (x) (= (mul (mul x x) x) x))", GROUP)) is None


class TestSieve:
    """Tests for universal_consequence_sieve()."""

    def test_universal_sentence_retained_alone(self):
        sieve = universal_consequence_sieve(m("(forall (x) (P x))"), MONADIC, 1, 3)

        assert sieve.theory.sentences == (Forall(("x",), PredAtom("P", (Var("x"),))),)
        assert sieve.retains(m("(forall (y) (or (P y) (Q y)))"))
        assert not sieve.retains(m("(forall (y) (Q y))"))
        assert sieve.report.verdict is Verdict.VERIFIED
        assert sieve.report.details["models_by_size"] == {"1": 2, "2": 4, "3": 8}

    def test_true_keeps_nothing_non_tautological(self):
        sieve = universal_consequence_sieve(TRUE, MONADIC, 2, 2)

        assert len(sieve.theory) == 0

    def test_retained_members_hold_in_every_model(self):
        formula = m("(forall (x) (or (not (P x)) (Q x)))")

        sieve = universal_consequence_sieve(formula, MONADIC, 2, 3)

        for model in enumerate_models_up_to(MONADIC, 3, formula):
            assert sieve.theory.holds_in(model)
        assert sieve.retains(formula)

    def test_background_restricts_models(self):
        background = Theory((m("(forall (x) (Q x))"),), MONADIC)

        sieve = universal_consequence_sieve(m("(exists (x) (P x))"), MONADIC, 1, 2, background=background)

        assert sieve.retains(m("(forall (x) (Q x))"))

    def test_model_limit_is_exhausted(self):
        sieve = universal_consequence_sieve(TRUE, MONADIC, 1, 3, model_limit=3)

        assert not sieve.complete
        assert sieve.models_checked == 3
        assert sieve.report.verdict is Verdict.EXHAUSTED

    def test_elimination_by_a_later_model_of_the_same_size(self):
        sieve = universal_consequence_sieve(m("(forall (x) (or (P x) (Q x)))"), MONADIC, 1, 1)

        # the three one-point models each falsify at most one of the unit clauses
        assert sieve.report.details["models_by_size"] == {"1": 3}
        assert not sieve.retains(m("(forall (x) (P x))"))
        assert not sieve.retains(m("(forall (x) (Q x))"))
        assert sieve.retains(m("(forall (x) (or (P x) (Q x)))"))

    def test_every_model_is_rechecked(self, monkeypatch):
        """A filter that only looks at the first model of each size is caught."""
        exact = sieve_module.surviving
        sizes_seen = set()

        def first_model_only(clauses, model, budget):
            if model.size in sizes_seen:
                return np.ones(len(clauses), dtype=bool)
            sizes_seen.add(model.size)
            return exact(clauses, model, budget)

        monkeypatch.setattr(sieve_module, "surviving", first_model_only)

        with pytest.raises(SearchError, match="size-1 model"):
            universal_consequence_sieve(TRUE, MONADIC, 1, 1)

    def test_surviving_mask(self):
        model = next(iter(enumerate_models_up_to(MONADIC, 1, m("(forall (x) (and (P x) (not (Q x))))"))))
        clauses = [
            ((("p", "P", (("v", 0),)), True),),
            ((("p", "Q", (("v", 0),)), True),),
        ]

        assert surviving(clauses, model, 1).tolist() == [True, False]

    def test_budget_counts_quantified_variables(self):
        """Candidates with budget s mention at most s variables."""
        for clause in generate_candidates(corpus.signature("binary"), 2):
            formula = clause_formula(clause)
            if isinstance(formula, Forall):
                assert len(formula.variables) <= 2

    @pytest.mark.slow
    def test_group_axioms_retain_cancellation(self):
        sieve = universal_consequence_sieve(corpus.group_axioms(), GROUP, 3, 4)

        for law in corpus.cancellation_laws("group"):
            assert sieve.retains(law)
        assert sieve.retains(corpus.commutativity())
        for model in enumerate_models_up_to(GROUP, 3, corpus.group_axioms()):
            assert sieve.theory.holds_in(model)

    @pytest.mark.performance
    @pytest.mark.slow
    def test_commutativity_eliminated_at_six(self):
        """S3 is the first non-abelian group; cancellation survives it."""
        sieve = universal_consequence_sieve(corpus.group_axioms(), GROUP, 3, 6)

        assert sieve.report.verdict is Verdict.VERIFIED
        assert not sieve.retains(corpus.commutativity())
        for law in corpus.cancellation_laws("group"):
            assert sieve.retains(law)
        assert sieve.retains(parse_formula("(forall (x) (= (mul e x) x))", GROUP))


class TestTheoryInput:
    """Sieve output is a Theory of sentences."""

    def test_members_are_universal_clauses(self):
        sieve = universal_consequence_sieve(m("(forall (x) (or (P x) (Q x)))"), MONADIC, 1, 2)

        for sentence in sieve.theory:
            assert isinstance(sentence, (Forall, Or, Not, PredAtom))
            assert clause_of(sentence) is not None

    def test_rejects_open_background(self):
        with pytest.raises(FormulaError):
            Theory((m("(P x)"),), MONADIC)
