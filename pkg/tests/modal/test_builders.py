"""
Tests for relativization, the closure formula and the θ sentence builders.
"""
import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.logic.classification import classify
from src.logic.errors import BoundError, FormulaError, SignatureError
from src.logic.operations import free_vars, is_sentence
from src.logic.syntax import (
    TRUE,
    And,
    Apply,
    Const,
    EqAtom,
    Exists,
    Forall,
    Not,
    Or,
    PredAtom,
    Signature,
    Var,
)
from src.modal.builders import (
    Theory,
    build_t_phi,
    build_theta_eq,
    build_theta_le,
    build_theta_lt,
    relativize,
    submodel_formula,
    tuple_variables,
)
from src.modal.operators import theta_eq_sem, theta_le_sem, theta_sem
from src.models.finite_model import model_from_rows
from src.models.model_finder import enumerate_models, enumerate_models_up_to
from src.models.semantics import evaluate
from src.parsing.formula_parser import parse_formula
from src.verify import corpus

MONADIC = corpus.signature("monadic")
BINARY = corpus.signature("binary")
ORDER = corpus.signature("order")
GROUP = corpus.signature("group")


def P(v):
    return PredAtom("P", (Var(v),))


def eq(a, b):
    return EqAtom(Var(a), Var(b))


class TestRelativize:
    """Tests for relativize()."""

    def test_atom_unchanged(self):
        assert relativize(P("x"), ("x0", "x1")) == P("x")

    def test_existential_gets_membership(self):
        result = relativize(Exists(("y",), P("y")), ("x0", "x1"))

        assert result == Exists(("y",), And((P("y"), Or((eq("y", "x0"), eq("y", "x1"))))))

    def test_universal_gets_guard(self):
        result = relativize(Forall(("y",), P("y")), ("x0",))

        assert result == Forall(("y",), Or((Not(eq("y", "x0")), P("y"))))

    def test_open_formula_unchanged(self):
        formula = And((P("x"), Not(P("y"))))

        assert relativize(formula, ("x0",)) == formula
        assert relativize(formula, ("x0", "x1", "x2")) == formula

    def test_clashing_bound_variable_renamed(self):
        result = relativize(Exists(("x0",), P("x0")), ("x0", "x1"))

        assert result.variables == ("x0'",)
        assert result.body.items[0] == P("x0'")
        assert free_vars(result) == {"x0", "x1"}

    def test_empty_tuple(self):
        with pytest.raises(FormulaError):
            relativize(P("x"), ())

    def test_repeated_variable(self):
        with pytest.raises(FormulaError):
            relativize(P("x"), ("x0", "x0"))


class TestSubmodelFormula:
    """Tests for the closure formula ψ."""

    def test_relational_signature(self):
        assert submodel_formula(BINARY, 3) == And(())

    def test_constant(self):
        sig = Signature(constants=frozenset({"c"}), equality_allowed=True)

        formula = submodel_formula(sig, 2)

        assert formula == Or((EqAtom(Const("c"), Var("x0")), EqAtom(Const("c"), Var("x1"))))
        assert str(formula) == "(or (= c x0) (= c x1))"

    def test_unary_function(self):
        sig = Signature(functions={"f": 1}, equality_allowed=True)

        formula = submodel_formula(sig, 1)

        assert formula == EqAtom(Apply("f", (Var("x0"),)), Var("x0"))
        assert str(formula) == "(= (f x0) x0)"

    def test_binary_function_clause_count(self):
        formula = submodel_formula(corpus.signature("groupoid"), 2)

        assert len(formula.items) == 4
        assert free_vars(formula) == set(tuple_variables(2))

    def test_closed_tuples_satisfy_it(self):
        rows = [[(i + j) % 4 for j in range(4)] for i in range(4)]
        c4 = model_from_rows(GROUP, 4, tables={"mul": rows}, constants={"e": 0})
        formula = submodel_formula(GROUP, 2)

        assert evaluate(c4, formula, {"x0": 0, "x1": 2})
        assert not evaluate(c4, formula, {"x0": 0, "x1": 1})
        assert not evaluate(c4, formula, {"x0": 2, "x1": 2})

    def test_bound_must_be_positive(self):
        with pytest.raises(BoundError):
            submodel_formula(BINARY, 0)


class TestBuildTheta:
    """Builders agree with the semantic operators."""

    @pytest.mark.parametrize("n", [1, 2])
    def test_le_matches_semantics_on_monadic_corpus(self, n):
        for entry in corpus.monadic_corpus():
            sentence = build_theta_le(entry.formula, n, MONADIC)
            assert is_sentence(sentence)
            for model in enumerate_models_up_to(MONADIC, 3):
                assert evaluate(model, sentence) == theta_le_sem(model, entry.formula, n), entry.name

    @pytest.mark.parametrize("n", [1, 2])
    def test_eq_matches_semantics_on_monadic_corpus(self, n):
        for entry in corpus.monadic_corpus():
            sentence = build_theta_eq(entry.formula, n, MONADIC)
            for model in enumerate_models_up_to(MONADIC, 3):
                assert evaluate(model, sentence) == theta_eq_sem(model, entry.formula, n), entry.name

    def test_le_with_functions_and_constants(self):
        sentences = [
            corpus.commutativity(),
            parse_formula("(exists (x) (and (not (= x e)) (= (mul x x) e)))", GROUP),
            parse_formula("(forall (x) (= (mul x x) e))", GROUP),
        ]
        for formula in sentences:
            for n in (1, 2):
                sentence = build_theta_le(formula, n, GROUP)
                for model in enumerate_models_up_to(GROUP, 2):
                    assert evaluate(model, sentence) == theta_le_sem(model, formula, n)

    def test_all_p_at_one(self):
        """θ≤1(∀y P(y)) holds exactly when some element has P."""
        formula = parse_formula("(forall (y) (P y))", MONADIC)
        some_p = parse_formula("(exists (x) (P x))", MONADIC)
        sentence = build_theta_le(formula, 1, MONADIC)

        for model in enumerate_models_up_to(MONADIC, 3):
            assert evaluate(model, sentence) == evaluate(model, some_p)

    def test_vacuous_bound_matches_theta(self):
        for entry in corpus.binary_corpus():
            for size in (1, 2):
                sentence = build_theta_le(entry.formula, size, BINARY)
                for model in enumerate_models(BINARY, size):
                    assert evaluate(model, sentence) == theta_sem(model, entry.formula), entry.name

    def test_exact_size_of_true_on_one_point(self):
        model = model_from_rows(BINARY, 1)

        assert not evaluate(model, build_theta_eq(TRUE, 2))
        assert evaluate(model, build_theta_eq(TRUE, 1))

    def test_lt_at_one_is_false(self):
        assert build_theta_lt(corpus.no_minimal_element(), 1) == Or(())

    def test_lt_shifts_bound(self):
        formula = corpus.no_minimal_element()

        assert build_theta_lt(formula, 3, ORDER) == build_theta_le(formula, 2, ORDER)

    def test_requires_sentence(self):
        with pytest.raises(FormulaError):
            build_theta_le(P("x"), 1)

    def test_signature_defaults_to_symbols_used(self):
        """Without a signature only the symbols of φ define closure."""
        formula = parse_formula("(exists (x) (= (mul x e) x))", GROUP)

        sentence = build_theta_le(formula, 1)

        assert sentence == build_theta_le(formula, 1, GROUP)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_le_matches_semantics_up_to_size_four(self, n):
        entries = corpus.monadic_corpus()
        models = list(enumerate_models_up_to(MONADIC, 4))

        assert len(entries) >= 20
        for entry in entries:
            sentence = build_theta_le(entry.formula, n, MONADIC)
            for model in models:
                assert evaluate(model, sentence) == theta_le_sem(model, entry.formula, n), entry.name

    @pytest.mark.slow
    def test_le_matches_semantics_on_binary_corpus(self):
        for entry in corpus.binary_corpus():
            for n in (1, 2, 3):
                sentence = build_theta_le(entry.formula, n, BINARY)
                for model in enumerate_models_up_to(BINARY, 3):
                    assert evaluate(model, sentence) == theta_le_sem(model, entry.formula, n), entry.name


class TestTheory:
    """Tests for Theory and the finite fragment of T_phi."""

    def test_failing_members(self):
        theory = Theory((corpus.linear_order(), corpus.no_minimal_element()))
        chain = model_from_rows(ORDER, 2, relations={"<": [(0, 1)]})

        assert len(theory) == 2
        assert theory.failing(chain) == [1]
        assert not theory.holds_in(chain)

    def test_empty_theory(self):
        assert Theory(()).as_formula() == And(())

    def test_members_must_be_sentences(self):
        with pytest.raises(FormulaError):
            Theory((P("x"),))

    def test_members_are_universal(self):
        for entry in corpus.binary_corpus():
            for member in build_t_phi(entry.formula, 2, BINARY):
                assert classify(member).is_universal, entry.name

    def test_fragment_holds_iff_no_submodel_satisfies(self):
        for entry in corpus.binary_corpus():
            for model in enumerate_models_up_to(BINARY, 2):
                fragment = build_t_phi(entry.formula, model.size, BINARY)
                assert fragment.holds_in(model) == (not theta_sem(model, entry.formula)), entry.name

    def test_function_symbols_rejected(self):
        with pytest.raises(SignatureError):
            build_t_phi(corpus.group_axioms(), 2, GROUP)

    def test_bound_must_be_positive(self):
        with pytest.raises(BoundError):
            build_t_phi(corpus.no_minimal_element(), 0, ORDER)

    @pytest.mark.slow
    def test_finite_linear_orders_satisfy_endpoint_fragment(self):
        """No finite submodel is a linear order without a first or last element."""
        formula = parse_formula(
            f"(and {corpus.LINEAR_ORDER} {corpus.NO_FIRST} {corpus.NO_LAST})", ORDER
        )
        for size in (1, 2, 3):
            fragment = build_t_phi(formula, size, ORDER)
            for model in enumerate_models(ORDER, size, corpus.linear_order()):
                assert fragment.holds_in(model)
