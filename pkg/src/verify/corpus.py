"""
Built-in sentence corpus.

Sentences are kept as s-expression text and parsed against their
signature on first use.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from ..logic.classification import classify
from ..logic.syntax import Formula, Signature, conjunction
from ..parsing.formula_parser import parse_formula
from ..parsing.signature_parser import parse_signature

SIGNATURE_TEXTS: Dict[str, str] = {
    "monadic": "pred P/1\npred Q/1\n",
    "binary": "pred R/2\n",
    "digraph": "pred R/2\nequality on\n",
    "order": "pred </2\nequality on\n",
    "groupoid": "fun mul/2\nequality on\n",
    "group": "fun mul/2\nconst e\nequality on\n",
}


@lru_cache(maxsize=None)
def signature(name: str) -> Signature:
    return parse_signature(SIGNATURE_TEXTS[name])


@dataclass(frozen=True)
class CorpusEntry:
    """A named sentence with the signature it is written in."""
    name: str
    signature_name: str
    text: str

    @property
    def signature(self) -> Signature:
        return signature(self.signature_name)

    @property
    def formula(self) -> Formula:
        return _parse(self.text, self.signature_name)


@lru_cache(maxsize=None)
def _parse(text: str, signature_name: str) -> Formula:
    return parse_formula(text, signature(signature_name))


# ----------------------------------------------------------------------
# Relational sentences over {P/1, Q/1} and {R/2}

MONADIC_TEXTS: Tuple[Tuple[str, str], ...] = (
    ("some-p", "(exists (x) (P x))"),
    ("all-p", "(forall (x) (P x))"),
    ("no-p", "(not (exists (x) (P x)))"),
    ("some-p-and-q", "(exists (x) (and (P x) (Q x)))"),
    ("some-p-some-q", "(exists (x y) (and (P x) (Q y)))"),
    ("some-p-all-q", "(and (exists (x) (P x)) (forall (y) (Q y)))"),
    ("p-implies-q", "(forall (x) (or (not (P x)) (Q x)))"),
    ("p-or-q-everywhere", "(forall (x) (or (P x) (Q x)))"),
    ("witness-then-all", "(exists (x) (forall (y) (and (P x) (Q y))))"),
    ("all-then-witness", "(forall (x) (exists (y) (or (P x) (Q y))))"),
    ("p-xor-q", "(or (and (exists (x) (P x)) (not (exists (y) (Q y)))) "
                "(and (not (exists (x) (P x))) (exists (y) (Q y))))"),
    ("mixed-p", "(exists (x) (and (P x) (exists (y) (not (P y)))))"),
    ("excluded-middle", "(forall (x) (or (P x) (not (P x))))"),
    ("p-not-q-pair", "(exists (x y) (and (P x) (not (Q x)) (Q y) (not (P y))))"),
    ("some-neither", "(exists (x) (and (not (P x)) (not (Q x))))"),
    ("p-iff-q", "(forall (x) (and (or (not (P x)) (Q x)) (or (not (Q x)) (P x))))"),
    ("all-q-or-some-p", "(or (forall (x) (Q x)) (exists (y) (P y)))"),
    ("some-p-implies-all-q", "(or (not (exists (x) (P x))) (forall (y) (Q y)))"),
    ("all-p-some-not-q", "(forall (x) (exists (y) (and (P x) (not (Q y)))))"),
    ("three-kinds", "(exists (x y z) (and (P x) (Q y) (not (P z)) (not (Q z))))"),
    ("not-all-p-or-q", "(not (forall (x) (or (P x) (Q x))))"),
)

BINARY_TEXTS: Tuple[Tuple[str, str], ...] = (
    ("loop", "(exists (x) (R x x))"),
    ("irreflexive", "(forall (x) (not (R x x)))"),
    ("serial", "(forall (x) (exists (y) (R x y)))"),
    ("source", "(exists (x) (forall (y) (R x y)))"),
    ("sink-free-source", "(exists (x y) (forall (z) (and (R x y) (not (R z x)))))"),
    ("symmetric", "(forall (x y) (or (not (R x y)) (R y x)))"),
    ("transitive", "(forall (x y z) (or (not (R x y)) (not (R y z)) (R x z)))"),
    ("two-cycle", "(exists (x y) (and (R x y) (R y x)))"),
    ("three-cycle", "(exists (x y z) (and (R x y) (R y z) (R z x)))"),
    ("empty", "(forall (x y) (not (R x y)))"),
    ("edge-or-loop", "(or (exists (x) (R x x)) (exists (x y) (R x y)))"),
    ("ea-combination", "(or (exists (x) (forall (y) (R x y))) "
                       "(and (exists (u) (R u u)) (exists (v w) (and (R v w) (not (R w v))))))"),
)


def monadic_corpus() -> List[CorpusEntry]:
    return [CorpusEntry(name, "monadic", text) for name, text in MONADIC_TEXTS]


def binary_corpus() -> List[CorpusEntry]:
    return [CorpusEntry(name, "binary", text) for name, text in BINARY_TEXTS]


def relational_corpus() -> List[CorpusEntry]:
    return monadic_corpus() + binary_corpus()


def universal_corpus() -> List[CorpusEntry]:
    return [e for e in relational_corpus() if classify(e.formula).is_universal]


def existential_corpus() -> List[CorpusEntry]:
    return [e for e in relational_corpus() if classify(e.formula).is_existential]


def ea_corpus() -> List[CorpusEntry]:
    return [e for e in relational_corpus() if classify(e.formula).is_ea_combination]


# ----------------------------------------------------------------------
# Algebra

ASSOCIATIVITY = "(forall (x y z) (= (mul (mul x y) z) (mul x (mul y z))))"
COMMUTATIVITY = "(forall (x y) (= (mul x y) (mul y x)))"
LEFT_CANCELLATION = "(forall (x y z) (or (not (= (mul x y) (mul x z))) (= y z)))"
RIGHT_CANCELLATION = "(forall (x y z) (or (not (= (mul y x) (mul z x))) (= y z)))"
LEFT_DIVISION = "(forall (x y) (exists (z) (= (mul x z) y)))"
RIGHT_DIVISION = "(forall (x y) (exists (z) (= (mul z x) y)))"
IDENTITY = "(forall (x) (and (= (mul e x) x) (= (mul x e) x)))"
INVERSES = "(forall (x) (exists (y) (and (= (mul x y) e) (= (mul y x) e))))"
HAS_IDENTITY = ("(exists (u) (and (forall (x) (and (= (mul u x) x) (= (mul x u) x))) "
                "(forall (x) (exists (y) (= (mul x y) u)))))")
# ax = by, cx = dy, au = bv imply cu = dv
MALTSEV_CONDITION = (
    "(forall (a b c d x y u v) (or (not (= (mul a x) (mul b y))) "
    "(not (= (mul c x) (mul d y))) (not (= (mul a u) (mul b v))) "
    "(= (mul c u) (mul d v))))"
)


def _conjoin(texts, signature_name: str) -> Formula:
    return conjunction([_parse(t, signature_name) for t in texts])


def group_axioms() -> Formula:
    """Groups over {mul, e}; cancellation is stated explicitly."""
    return _conjoin(
        (ASSOCIATIVITY, LEFT_CANCELLATION, RIGHT_CANCELLATION, IDENTITY, INVERSES), "group"
    )


def quasigroup_axioms() -> Formula:
    return _conjoin((LEFT_DIVISION, RIGHT_DIVISION), "groupoid")


def abelian_group_axioms() -> Formula:
    """Abelian groups over {mul} with the identity quantified."""
    return _conjoin((ASSOCIATIVITY, COMMUTATIVITY, HAS_IDENTITY), "groupoid")


def cancellation_laws(signature_name: str = "groupoid") -> List[Formula]:
    return [_parse(LEFT_CANCELLATION, signature_name), _parse(RIGHT_CANCELLATION, signature_name)]


def commutativity(signature_name: str = "group") -> Formula:
    return _parse(COMMUTATIVITY, signature_name)


def quasi_identities() -> List[CorpusEntry]:
    """Universal Horn conditions necessary for embedding into a group."""
    return [
        CorpusEntry("left-cancellation", "groupoid", LEFT_CANCELLATION),
        CorpusEntry("right-cancellation", "groupoid", RIGHT_CANCELLATION),
        CorpusEntry("maltsev-condition", "groupoid", MALTSEV_CONDITION),
    ]


# ----------------------------------------------------------------------
# Orders

IRREFLEXIVE = "(forall (x) (not (< x x)))"
TRANSITIVE = "(forall (x y z) (or (not (< x y)) (not (< y z)) (< x z)))"
TOTAL = "(forall (x y) (or (< x y) (< y x) (= x y)))"
LINEAR_ORDER = f"(and {IRREFLEXIVE} {TRANSITIVE} {TOTAL})"
NO_MINIMAL = "(forall (x) (exists (y) (< y x)))"
DENSITY = ("(and (exists (x y) (< x y)) "
           "(forall (x y) (or (not (< x y)) (exists (z) (and (< x z) (< z y))))))")
NO_FIRST = "(not (exists (x) (forall (y) (or (= x y) (< x y)))))"
NO_LAST = "(not (exists (x) (forall (y) (or (= x y) (< y x)))))"
NO_ENDPOINTS = f"(or (not {LINEAR_ORDER}) {NO_FIRST} {NO_LAST})"


def strict_partial_order() -> Formula:
    return _conjoin((IRREFLEXIVE, TRANSITIVE), "order")


def linear_order() -> Formula:
    return _parse(LINEAR_ORDER, "order")


def no_minimal_element() -> Formula:
    return _parse(NO_MINIMAL, "order")


def density() -> Formula:
    return _parse(DENSITY, "order")


def no_endpoints() -> Formula:
    """If < is a linear order, it lacks a first or a last element."""
    return _parse(NO_ENDPOINTS, "order")


def at_least(n: int) -> Formula:
    """If < is a linear order, it has at least n elements."""
    names = [f"x{i}" for i in range(n)]
    if n <= 1:
        # universes are nonempty
        return _parse("(and)", "order")
    pairs = " ".join(f"(= {a} {b})" for i, a in enumerate(names) for b in names[i + 1:])
    text = f"(or (not {LINEAR_ORDER}) (exists ({' '.join(names)}) (not (or {pairs}))))"
    return _parse(text, "order")
