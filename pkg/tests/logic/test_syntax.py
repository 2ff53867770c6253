"""
Tests for signatures and the formula AST.
"""
import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.logic.errors import FormulaError, SignatureError
from src.logic.syntax import (
    FALSE,
    TRUE,
    And,
    Apply,
    Exists,
    Forall,
    Not,
    Or,
    PredAtom,
    Signature,
    SymbolKind,
    Var,
    conjunction,
    disjunction,
    negate,
)


class TestSignature:
    """Tests for Signature invariants and derived views."""

    def test_purely_monadic(self):
        """Only unary predicates and no functions or constants."""
        assert Signature(predicates={"P": 1, "Q": 1}).purely_monadic
        assert not Signature(predicates={"R": 2}).purely_monadic
        assert not Signature(predicates={"P": 1}, constants=frozenset({"c"})).purely_monadic

    def test_fnc_lists_functions_and_constants(self):
        """fnc is sorted by name with constants as arity 0."""
        sig = Signature(functions={"mul": 2, "inv": 1}, constants=frozenset({"e"}))

        assert sig.fnc == (("e", 0), ("inv", 1), ("mul", 2))

    def test_relational_signature_has_empty_fnc(self):
        sig = Signature(predicates={"R": 2})

        assert sig.is_relational
        assert sig.fnc == ()

    def test_duplicate_symbol_across_kinds(self):
        """Names are distinct across predicates, functions and constants."""
        with pytest.raises(SignatureError):
            Signature(predicates={"f": 1}, functions={"f": 1})

    def test_zero_arity_rejected(self):
        with pytest.raises(SignatureError):
            Signature(predicates={"P": 0})
        with pytest.raises(SignatureError):
            Signature(functions={"c": 0})

    def test_kind_of(self):
        sig = Signature(predicates={"P": 1}, functions={"f": 1}, constants=frozenset({"c"}))

        assert sig.kind_of("P") is SymbolKind.PREDICATE
        assert sig.kind_of("f") is SymbolKind.FUNCTION
        assert sig.kind_of("c") is SymbolKind.CONSTANT
        assert sig.kind_of("x") is None

    def test_union_merges_and_keeps_equality(self):
        left = Signature(predicates={"P": 1})
        right = Signature(predicates={"R": 2}, equality_allowed=True)

        merged = left.union(right)

        assert merged.predicates == {"P": 1, "R": 2}
        assert merged.equality_allowed

    def test_union_conflicting_arity(self):
        with pytest.raises(SignatureError):
            Signature(predicates={"P": 1}).union(Signature(predicates={"P": 2}))

    def test_with_equality(self):
        sig = Signature(predicates={"P": 1})

        assert sig.with_equality().equality_allowed
        assert not sig.equality_allowed


class TestFormulaNodes:
    """Tests for AST construction."""

    def test_empty_quantifier_block_rejected(self):
        with pytest.raises(FormulaError):
            Exists((), TRUE)

    def test_repeated_block_variable_rejected(self):
        with pytest.raises(FormulaError):
            Forall(("x", "x"), PredAtom("P", (Var("x"),)))

    def test_application_needs_arguments(self):
        with pytest.raises(FormulaError):
            Apply("f", ())

    def test_empty_connectives(self):
        """Empty And is true, empty Or is false."""
        assert TRUE == And(())
        assert FALSE == Or(())
        assert str(TRUE) == "(and)"
        assert str(FALSE) == "(or)"

    def test_str_is_s_expression(self):
        formula = Exists(("x",), And((PredAtom("P", (Var("x"),)), Not(PredAtom("Q", (Var("x"),))))))

        assert str(formula) == "(exists (x) (and (P x) (not (Q x))))"

    def test_lists_are_frozen_to_tuples(self):
        formula = And([PredAtom("P", [Var("x")])])

        assert isinstance(formula.items, tuple)
        assert isinstance(formula.items[0].args, tuple)
        assert hash(formula) == hash(And((PredAtom("P", (Var("x"),)),)))


class TestConstructors:
    """Tests for conjunction, disjunction and negate helpers."""

    def test_singletons_unwrapped(self):
        atom = PredAtom("P", (Var("x"),))

        assert conjunction([atom]) is atom
        assert disjunction([atom]) is atom

    def test_empty_lists(self):
        assert conjunction([]) == TRUE
        assert disjunction([]) == FALSE

    def test_negate_cancels_double_negation(self):
        atom = PredAtom("P", (Var("x"),))

        assert negate(Not(atom)) is atom
        assert negate(atom) == Not(atom)
