"""
Tests for the semantic θ-family and θ* operators.
"""
import pytest
import sys
from pathlib import Path
from itertools import permutations

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.logic.errors import BoundError, FormulaError
from src.logic.syntax import TRUE, Signature
from src.modal.operators import (
    generated_subuniverses,
    theta_eq_sem,
    theta_gen_sem,
    theta_le_sem,
    theta_lt_sem,
    theta_sem,
    theta_star_sem,
    theta_star_witness,
    theta_witness,
)
from src.models.finite_model import model_from_rows
from src.models.model_finder import enumerate_models_up_to
from src.models.semantics import enumerate_submodels, evaluate
from src.parsing.documents import load_document
from src.parsing.formula_parser import parse_formula
from src.parsing.model_parser import parse_model
from src.verify import corpus

SAMPLES = Path(__file__).parent.parent.parent / "samples"
BINARY = corpus.signature("binary")
ORDER = corpus.signature("order")
GROUP = corpus.signature("group")


@pytest.fixture
def chain3():
    return model_from_rows(ORDER, 3, relations={"<": [(0, 1), (0, 2), (1, 2)]})


@pytest.fixture
def c4():
    rows = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    return model_from_rows(GROUP, 4, tables={"mul": rows}, constants={"e": 0})


@pytest.fixture
def c2():
    return parse_model(load_document(SAMPLES / "c2.mdl").text, GROUP)


@pytest.fixture
def constant_table():
    return model_from_rows(GROUP, 2, tables={"mul": [[0, 0], [0, 0]]}, constants={"e": 0})


class TestTheta:
    """Tests for theta_sem and theta_witness."""

    def test_chain_has_a_minimal_singleton(self, chain3):
        formula = parse_formula("(exists (x) (forall (y) (not (< y x))))", ORDER)

        assert theta_sem(chain3, formula)
        assert theta_witness(chain3, formula) == frozenset({0})

    def test_no_minimal_element_fails_in_every_submodel(self, chain3):
        assert not theta_sem(chain3, corpus.no_minimal_element())
        assert theta_witness(chain3, corpus.no_minimal_element()) is None

    def test_true_sentence_witnessed_by_model_itself(self, chain3):
        """An existential sentence true in the model is witnessed, at worst by the whole model."""
        formula = parse_formula("(exists (x y) (< x y))", ORDER)

        assert evaluate(chain3, formula)
        assert theta_witness(chain3, formula) == frozenset({0, 1})

    def test_requires_sentence(self, chain3):
        with pytest.raises(FormulaError):
            theta_sem(chain3, parse_formula("(< x y)", ORDER))

    def test_invariant_under_relabelling(self):
        model = model_from_rows(BINARY, 3, relations={"R": [(0, 1), (1, 2), (2, 2)]})
        for entry in corpus.binary_corpus():
            expected = theta_sem(model, entry.formula)
            for permutation in permutations(range(3)):
                assert theta_sem(model.relabel(permutation), entry.formula) == expected, entry.name


class TestBoundedTheta:
    """Tests for the size-bounded and generated variants."""

    def test_vacuous_bound_matches_theta(self):
        for model in enumerate_models_up_to(BINARY, 2):
            for entry in corpus.binary_corpus():
                assert theta_le_sem(model, entry.formula, model.size) == theta_sem(model, entry.formula)

    def test_involution_generated_by_one_element(self, c4):
        formula = parse_formula("(exists (x) (and (not (= x e)) (= (mul x x) e)))", GROUP)

        assert theta_gen_sem(c4, formula, 1)
        assert not theta_le_sem(c4, formula, 1)
        assert theta_le_sem(c4, formula, 2)
        assert theta_eq_sem(c4, formula, 2)

    def test_exact_size_of_true(self):
        model = model_from_rows(BINARY, 3, relations={"R": [(0, 1)]})

        assert [theta_eq_sem(model, TRUE, n) for n in range(1, 5)] == [True, True, True, False]

    def test_strict_bound(self, chain3):
        formula = parse_formula("(exists (x y) (< x y))", ORDER)

        assert not theta_lt_sem(chain3, formula, 2)
        assert theta_lt_sem(chain3, formula, 3)

    def test_exact_size_skips_sizes_without_subuniverses(self, c4):
        """C4 has no subgroup of order 3."""
        assert not theta_eq_sem(c4, TRUE, 3)

    @pytest.mark.parametrize("operator", [theta_le_sem, theta_lt_sem, theta_eq_sem, theta_gen_sem])
    def test_bound_must_be_positive(self, chain3, operator):
        with pytest.raises(BoundError):
            operator(chain3, TRUE, 0)

    def test_generated_subuniverses_are_distinct(self, c4):
        assert sorted(sorted(s) for s in generated_subuniverses(c4, 1)) == [[0], [0, 1, 2, 3], [0, 2]]
        assert len(list(generated_subuniverses(c4, 4))) == 3


class TestThetaStar:
    """Tests for theta_star_sem."""

    def test_model_of_formula_is_its_own_witness(self, c2):
        assert theta_star_sem(c2, corpus.group_axioms(), 2)
        assert theta_star_witness(c2, corpus.group_axioms(), 2) == c2

    @pytest.mark.parametrize("bound", [2, 3])
    def test_constant_table_never_extends_to_group(self, constant_table, bound):
        assert not theta_star_sem(constant_table, corpus.group_axioms(), bound)

    def test_bound_below_size(self, c2):
        with pytest.raises(BoundError):
            theta_star_sem(c2, corpus.group_axioms(), 1)

    def test_extension_adds_missing_witness(self):
        """A single irreflexive point gets an R-successor in a larger model."""
        model = model_from_rows(BINARY, 1)
        serial = parse_formula("(forall (x) (exists (y) (R x y)))", BINARY)
        three_cycle = parse_formula("(exists (x y z) (and (R x y) (R y z) (R z x) "
                                    "(not (= x y)) (not (= y z)) (not (= x z))))",
                                    Signature(predicates={"R": 2}, equality_allowed=True))

        assert not theta_star_sem(model, serial, 1)
        assert theta_star_sem(model, serial, 2)
        assert not theta_star_sem(model, three_cycle, 2)
        assert theta_star_sem(model, three_cycle, 3)

        witness = theta_star_witness(model, serial, 2)
        assert witness.restrict({0}).model == model

    def test_truth_goes_down_to_submodels(self):
        """θ* of any sentence is preserved under submodels."""
        for entry in corpus.binary_corpus():
            for model in enumerate_models_up_to(BINARY, 2):
                if not theta_star_sem(model, entry.formula, 3):
                    continue
                for sub in enumerate_submodels(model):
                    assert theta_star_sem(sub.model, entry.formula, 3), entry.name
