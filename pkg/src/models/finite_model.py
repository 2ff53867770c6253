"""
Finite structures over a signature.
Universes are always {0..n-1}; embeddings are element maps.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from ..logic.errors import ModelError
from ..logic.syntax import Signature

Element = int
Row = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FiniteModel:
    """
    A finite model of a signature.

    Relations are sets of tuples, function tables are total maps from
    argument tuples to elements, constants map to elements. Instances are
    treated as immutable; equality and hashing use ``key()``.
    """
    signature: Signature
    size: int
    relations: Dict[str, FrozenSet[Row]] = field(default_factory=dict)
    func_tables: Dict[str, Dict[Row, int]] = field(default_factory=dict)
    const_vals: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.size < 1:
            raise ModelError("universe must be nonempty")
        sig = self.signature

        relations = {}
        for name, arity in sig.predicates.items():
            rows = frozenset(tuple(r) for r in self.relations.get(name, ()))
            for row in rows:
                if len(row) != arity:
                    raise ModelError(f"tuple {row} has wrong arity for {name}")
                self._check_elements(row, name)
            relations[name] = rows
        for name in self.relations:
            if name not in sig.predicates:
                raise ModelError(f"relation for undeclared predicate {name}")

        tables = {}
        for name, arity in sig.functions.items():
            given = self.func_tables.get(name)
            if given is None:
                raise ModelError(f"missing function table for {name}")
            table = {}
            for args in product(range(self.size), repeat=arity):
                if args not in given:
                    raise ModelError(f"missing function-table entry {name}{args}")
                value = given[args]
                self._check_elements((value,), name)
                table[args] = value
            if len(given) != len(table):
                raise ModelError(f"function table for {name} has out-of-range entries")
            tables[name] = table
        for name in self.func_tables:
            if name not in sig.functions:
                raise ModelError(f"table for undeclared function {name}")

        constants = {}
        for name in sorted(sig.constants):
            if name not in self.const_vals:
                raise ModelError(f"missing value for constant {name}")
            self._check_elements((self.const_vals[name],), name)
            constants[name] = self.const_vals[name]
        for name in self.const_vals:
            if name not in sig.constants:
                raise ModelError(f"value for undeclared constant {name}")

        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "func_tables", tables)
        object.__setattr__(self, "const_vals", constants)

    def _check_elements(self, row: Iterable[int], symbol: str) -> None:
        for element in row:
            if not isinstance(element, int) or not 0 <= element < self.size:
                raise ModelError(f"element {element} out of range for {symbol} (size {self.size})")

    # ------------------------------------------------------------------
    # Identity

    def key(self) -> tuple:
        """Canonical value used for equality, hashing and ordering."""
        relations = tuple(
            (name, tuple(sorted(rows))) for name, rows in self.relations.items()
        )
        tables = tuple(
            (name, tuple(table[args] for args in sorted(table)))
            for name, table in self.func_tables.items()
        )
        constants = tuple(sorted(self.const_vals.items()))
        return (self.size, relations, tables, constants)

    def sort_key(self) -> tuple:
        """Order by size, then lexicographically by tables."""
        return self.key()

    def __eq__(self, other):
        if not isinstance(other, FiniteModel):
            return NotImplemented
        return self.signature == other.signature and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FiniteModel(size={self.size}, key={self.key()!r})"

    # ------------------------------------------------------------------
    # Views

    @property
    def universe(self) -> range:
        return range(self.size)

    def apply(self, function: str, args: Row) -> int:
        return self.func_tables[function][args]

    def holds(self, predicate: str, args: Row) -> bool:
        return args in self.relations[predicate]

    def is_closed(self, elements: FrozenSet[int]) -> bool:
        """True when ``elements`` contains the constants and is closed under the tables."""
        if any(v not in elements for v in self.const_vals.values()):
            return False
        for name, arity in self.signature.functions.items():
            table = self.func_tables[name]
            for args in product(sorted(elements), repeat=arity):
                if table[args] not in elements:
                    return False
        return True

    def restrict(self, elements: Iterable[int]) -> "Submodel":
        """Induced submodel on a closed subuniverse, relabelled to {0..m-1}."""
        embedding = tuple(sorted(set(elements)))
        if not embedding:
            raise ModelError("submodel universe must be nonempty")
        chosen = frozenset(embedding)
        if not self.is_closed(chosen):
            raise ModelError(f"{sorted(chosen)} is not closed under the functions")
        index = {old: new for new, old in enumerate(embedding)}

        relations = {
            name: frozenset(
                tuple(index[e] for e in row) for row in rows if all(e in chosen for e in row)
            )
            for name, rows in self.relations.items()
        }
        tables = {}
        for name, arity in self.signature.functions.items():
            table = self.func_tables[name]
            tables[name] = {
                tuple(index[e] for e in args): index[table[args]]
                for args in product(embedding, repeat=arity)
            }
        constants = {name: index[value] for name, value in self.const_vals.items()}
        model = FiniteModel(self.signature, len(embedding), relations, tables, constants)
        return Submodel(model=model, embedding=embedding)

    def relabel(self, permutation: Sequence[int]) -> "FiniteModel":
        """Isomorphic copy where element ``a`` becomes ``permutation[a]``."""
        if sorted(permutation) != list(range(self.size)):
            raise ModelError("relabelling must be a permutation of the universe")
        p = tuple(permutation)
        relations = {
            name: frozenset(tuple(p[e] for e in row) for row in rows)
            for name, rows in self.relations.items()
        }
        tables = {
            name: {tuple(p[e] for e in args): p[value] for args, value in table.items()}
            for name, table in self.func_tables.items()
        }
        constants = {name: p[value] for name, value in self.const_vals.items()}
        return FiniteModel(self.signature, self.size, relations, tables, constants)


@dataclass(frozen=True)
class Submodel:
    """A submodel together with its inclusion map into the parent."""
    model: FiniteModel
    embedding: Tuple[int, ...]  # new element -> parent element

    @property
    def elements(self) -> FrozenSet[int]:
        return frozenset(self.embedding)


def model_from_rows(
    signature: Signature,
    size: int,
    relations: Optional[Mapping[str, Iterable[Sequence[int]]]] = None,
    tables: Optional[Mapping[str, Sequence[Sequence[int]]]] = None,
    constants: Optional[Mapping[str, int]] = None,
) -> FiniteModel:
    """
    Convenience constructor.

    Binary function tables may be given as nested rows (Cayley tables),
    unary ones as a flat list.
    """
    func_tables: Dict[str, Dict[Row, int]] = {}
    for name, rows in (tables or {}).items():
        arity = signature.functions[name]
        flat = list(_flatten_rows(rows, arity))
        func_tables[name] = {
            args: flat[i] for i, args in enumerate(product(range(size), repeat=arity))
        } if len(flat) == size ** arity else {}
    rels = {
        name: frozenset(tuple(r) if isinstance(r, (tuple, list)) else (r,) for r in rows)
        for name, rows in (relations or {}).items()
    }
    return FiniteModel(signature, size, rels, func_tables, dict(constants or {}))


def _flatten_rows(rows, depth: int):
    if depth == 1:
        for value in rows:
            yield int(value)
    else:
        for row in rows:
            yield from _flatten_rows(row, depth - 1)
