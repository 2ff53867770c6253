"""
Line-oriented finite model parser.
Reads .mdl files:

    universe 2
    pred P = {(0)}
    fun mul: (0,0)=0 (0,1)=1 (1,0)=1 (1,1)=0
    const e = 0
"""
import re
from typing import Dict, Optional, Set, Tuple

from ..logic.errors import ModelError, ParseError
from ..logic.syntax import Signature
from ..models.finite_model import FiniteModel, Row


class ModelParser:
    """
    Regex-driven parser for finite model declarations.

    Args:
        signature: Expected signature; when None it is inferred from the
            declarations (empty relations then need an explicit signature).
    """

    LINE_PATTERNS = [
        (r'^universe\s+(\d+)$', 'universe'),
        (r'^pred\s+([^\s=]+)\s*=\s*\{(.*)\}$', 'predicate'),
        (r'^fun\s+([^\s:]+)\s*:(.*)$', 'function'),
        (r'^const\s+([^\s=]+)\s*=\s*(\d+)$', 'constant'),
    ]

    TUPLE_PATTERN = r'\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)'
    ENTRY_PATTERN = r'\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*=\s*(\d+)'
    COMMENT_PATTERN = r'#.*$'

    def __init__(self, signature: Optional[Signature] = None):
        self.signature = signature
        self._compile_patterns()

    def _compile_patterns(self):
        self.compiled_patterns = [(re.compile(p), kind) for p, kind in self.LINE_PATTERNS]
        self.tuple_re = re.compile(self.TUPLE_PATTERN)
        self.entry_re = re.compile(self.ENTRY_PATTERN)
        self.comment_re = re.compile(self.COMMENT_PATTERN)

    def parse(self, text: str) -> FiniteModel:
        size: Optional[int] = None
        relations: Dict[str, Set[Row]] = {}
        tables: Dict[str, Dict[Row, int]] = {}
        constants: Dict[str, int] = {}
        declared: Set[str] = set()

        for number, raw in enumerate(text.splitlines(), start=1):
            line = self.comment_re.sub('', raw).strip()
            if not line:
                continue
            kind, match = self._match_line(line)
            if kind is None:
                raise ParseError(f"malformed model line: {raw.strip()!r}", line=number)

            if kind == 'universe':
                if size is not None:
                    raise ParseError("universe declared twice", line=number)
                size = int(match.group(1))
                if size < 1:
                    raise ParseError("universe must be nonempty", line=number)
                continue

            if size is None:
                raise ParseError("universe must be declared first", line=number)
            name = match.group(1)
            if name in declared:
                raise ParseError(f"duplicate entry for {name}", line=number)
            declared.add(name)

            if kind == 'predicate':
                relations[name] = self._parse_relation(match.group(2), size, name, number)
            elif kind == 'function':
                tables[name] = self._parse_table(match.group(2), size, name, number)
            else:
                value = int(match.group(2))
                self._check_range((value,), size, name, number)
                constants[name] = value

        if size is None:
            raise ParseError("missing universe declaration")

        signature = self.signature or self._infer_signature(relations, tables, constants)
        try:
            return FiniteModel(signature, size, relations, tables, constants)
        except ModelError as exc:
            raise ParseError(str(exc)) from exc

    def _match_line(self, line: str):
        for regex, kind in self.compiled_patterns:
            match = regex.match(line)
            if match:
                return kind, match
        return None, None

    def _parse_relation(self, body: str, size: int, name: str, number: int) -> Set[Row]:
        rows: Set[Row] = set()
        for match in self.tuple_re.finditer(body):
            row = tuple(int(v) for v in match.group(1).split(','))
            self._check_range(row, size, name, number)
            if row in rows:
                raise ParseError(f"duplicate entry {row} in {name}", line=number)
            rows.add(row)
        leftover = self.tuple_re.sub('', body).replace(',', '').strip()
        if leftover:
            raise ParseError(f"malformed relation body for {name}", line=number)
        return rows

    def _parse_table(self, body: str, size: int, name: str, number: int) -> Dict[Row, int]:
        table: Dict[Row, int] = {}
        for match in self.entry_re.finditer(body):
            args = tuple(int(v) for v in match.group(1).split(','))
            value = int(match.group(2))
            self._check_range(args + (value,), size, name, number)
            if args in table:
                raise ParseError(f"duplicate entry {args} in {name}", line=number)
            table[args] = value
        leftover = self.entry_re.sub('', body).strip()
        if leftover:
            raise ParseError(f"malformed table for {name}", line=number)
        if not table:
            raise ParseError(f"empty table for {name}", line=number)
        return table

    @staticmethod
    def _check_range(values: Tuple[int, ...], size: int, name: str, number: int) -> None:
        for value in values:
            if value >= size:
                raise ParseError(f"element {value} out of range for {name} (universe {size})", line=number)

    @staticmethod
    def _infer_signature(relations, tables, constants) -> Signature:
        predicates = {}
        for name, rows in relations.items():
            arities = {len(r) for r in rows}
            if len(arities) != 1:
                raise ParseError(f"cannot infer arity of {name}; pass a signature")
            predicates[name] = arities.pop()
        functions = {}
        for name, table in tables.items():
            arities = {len(a) for a in table}
            if len(arities) != 1:
                raise ParseError(f"inconsistent arity in table {name}")
            functions[name] = arities.pop()
        return Signature(predicates, functions, frozenset(constants), equality_allowed=True)


def parse_model(text: str, signature: Optional[Signature] = None) -> FiniteModel:
    """Parse model text against ``signature`` (inferred when omitted)."""
    return ModelParser(signature).parse(text)

