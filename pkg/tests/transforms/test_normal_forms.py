"""
Tests for negation normal form, simplification and witness bounds.
"""
import pytest
import sys
from pathlib import Path

from hypothesis import given, settings

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.logic.errors import TransformError
from src.logic.operations import subformulas
from src.logic.syntax import And, EqAtom, Exists, Forall, Not, Or, PredAtom, Var
from src.modal.operators import theta_gen_sem, theta_le_sem
from src.models.finite_model import model_from_rows
from src.models.model_finder import enumerate_models_up_to
from src.models.semantics import evaluate
from src.parsing.formula_parser import parse_formula
from src.transforms.normal_forms import is_literal, nnf, nnf_negated, simplify, top_conjuncts
from src.transforms.witness_bound import ea_witness_bound, ea_witness_profile
from src.verify import corpus
from tests.strategies import binary_models, binary_sentences

BINARY = corpus.signature("binary")


def P(v):
    return PredAtom("P", (Var(v),))


def Q(v):
    return PredAtom("Q", (Var(v),))


def negations_on_atoms(formula) -> bool:
    return all(
        isinstance(node.body, (PredAtom, EqAtom))
        for node in subformulas(formula) if isinstance(node, Not)
    )


class TestNNF:
    """Tests for nnf()."""

    def test_negated_existential(self):
        assert nnf(Not(Exists(("x",), P("x")))) == Forall(("x",), Not(P("x")))

    def test_negated_conjunction(self):
        assert nnf(Not(And((P("x"), Not(Q("x")))))) == Or((Not(P("x")), Q("x")))

    def test_double_negation(self):
        assert nnf(Not(Not(P("x")))) == P("x")

    def test_empty_connectives_swap(self):
        assert nnf(Not(And(()))) == Or(())
        assert nnf(Not(Or(()))) == And(())

    def test_nnf_negated(self):
        formula = Forall(("x",), Or((P("x"), Q("x"))))

        assert nnf_negated(formula) == nnf(Not(formula))

    @settings(max_examples=80, deadline=None)
    @given(binary_sentences())
    def test_equivalent_and_negations_on_atoms(self, formula):
        model = model_from_rows(BINARY, 3, relations={"R": [(0, 0), (0, 1), (2, 1)]})
        result = nnf(formula)

        assert negations_on_atoms(result)
        assert evaluate(model, result) == evaluate(model, formula)
        assert evaluate(model, nnf_negated(formula)) != evaluate(model, formula)


class TestSimplify:
    """Tests for simplify() and helpers."""

    def test_flattens_nested_connectives(self):
        formula = And((P("x"), And((Q("x"), And(())))))

        assert simplify(formula) == And((P("x"), Q("x")))

    def test_absorbing_constant(self):
        assert simplify(Or((P("x"), And(())))) == And(())
        assert simplify(And((P("x"), Or(())))) == Or(())

    def test_unwraps_single_item(self):
        assert simplify(Or((And((P("x"),)),))) == P("x")

    def test_negation_of_constants(self):
        assert simplify(Not(And(()))) == Or(())
        assert simplify(Not(Not(P("x")))) == P("x")

    def test_top_conjuncts(self):
        formula = And((P("x"), And((Q("x"), P("y")))))

        assert top_conjuncts(formula) == (P("x"), Q("x"), P("y"))
        assert top_conjuncts(P("x")) == (P("x"),)

    def test_is_literal(self):
        assert is_literal(Not(P("x")))
        assert not is_literal(Not(Not(P("x"))))


class TestWitnessBound:
    """Tests for witness bounds of ∃∀-combinations."""

    def test_sigma2_block(self):
        formula = parse_formula("(exists (x y) (forall (z) (or (R x y) (R z z))))", BINARY)

        assert ea_witness_bound(formula) == 2

    def test_max_over_disjunct_selections(self):
        entry = next(e for e in corpus.binary_corpus() if e.name == "ea-combination")

        profile = ea_witness_profile(entry.formula)

        assert profile.selections == (1, 3)
        assert profile.bound == 3
        assert not profile.adjusted

    def test_universal_adjusted_to_one(self):
        profile = ea_witness_profile(parse_formula("(forall (x) (R x x))", BINARY))

        assert profile.raw == 0
        assert profile.bound == 1
        assert profile.adjusted

    def test_negated_universal_counts_after_nnf(self):
        formula = parse_formula("(not (forall (x y) (R x y)))", BINARY)

        assert ea_witness_bound(formula) == 2

    def test_rejects_forall_exists(self):
        with pytest.raises(TransformError):
            ea_witness_bound(parse_formula("(forall (x) (exists (y) (R x y)))", BINARY))

    @pytest.mark.slow
    def test_bound_suffices_on_small_models(self):
        """Every model of an ∃∀-combination has a witness within the bound."""
        for entry in corpus.ea_corpus():
            bound = ea_witness_bound(entry.formula)
            max_size = 5 if entry.signature_name == "monadic" else 3
            for model in enumerate_models_up_to(entry.signature, max_size, entry.formula):
                assert theta_le_sem(model, entry.formula, bound), entry.name
                assert theta_gen_sem(model, entry.formula, bound), entry.name

    @settings(max_examples=80, deadline=None)
    @given(binary_models(5))
    def test_bound_suffices_on_five_element_digraphs(self, model):
        for entry in corpus.ea_corpus():
            if entry.signature_name != "binary" or not evaluate(model, entry.formula):
                continue
            assert theta_le_sem(model, entry.formula, ea_witness_bound(entry.formula)), entry.name
