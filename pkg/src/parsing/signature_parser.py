"""
Line-oriented signature parser.
Reads .sig files: one declaration per line, '#' starts a comment.

    pred P/1
    fun mul/2
    const e
    equality on
"""
import re
from typing import Dict, List, Optional, Set, Tuple

from ..logic.errors import ParseError, SignatureError
from ..logic.syntax import Signature


class SignatureParser:
    """
    Regex-driven parser for signature declarations.

    Each line must match exactly one of LINE_PATTERNS; anything else is a
    malformed line. Errors carry the 1-based line number.
    """

    LINE_PATTERNS = [
        (r'^pred\s+([^\s/()#]+)\s*/\s*(\d+)$', 'predicate'),
        (r'^fun\s+([^\s/()#]+)\s*/\s*(\d+)$', 'function'),
        (r'^const\s+([^\s/()#]+)$', 'constant'),
        (r'^equality\s+(on|off)$', 'equality'),
    ]

    COMMENT_PATTERN = r'#.*$'

    def __init__(self):
        self._compile_patterns()

    def _compile_patterns(self):
        self.compiled_patterns: List[Tuple[re.Pattern, str]] = [
            (re.compile(pattern), kind) for pattern, kind in self.LINE_PATTERNS
        ]
        self.comment_re = re.compile(self.COMMENT_PATTERN)

    def parse(self, text: str) -> Signature:
        predicates: Dict[str, int] = {}
        functions: Dict[str, int] = {}
        constants: Set[str] = set()
        equality: Optional[bool] = None
        seen: Set[str] = set()

        for number, raw in enumerate(text.splitlines(), start=1):
            line = self.comment_re.sub('', raw).strip()
            if not line:
                continue

            kind, match = self._match_line(line)
            if kind is None:
                raise ParseError(f"malformed signature line: {raw.strip()!r}", line=number)

            if kind == 'equality':
                if equality is not None:
                    raise ParseError("equality declared twice", line=number)
                equality = match.group(1) == 'on'
                continue

            name = match.group(1)
            if name in seen:
                raise ParseError(f"duplicate symbol: {name}", line=number)
            seen.add(name)

            if kind == 'constant':
                constants.add(name)
                continue

            arity = int(match.group(2))
            if arity == 0:
                label = "predicate" if kind == 'predicate' else "function"
                raise ParseError(f"zero arity for {label} {name}", line=number)
            if kind == 'predicate':
                predicates[name] = arity
            else:
                functions[name] = arity

        try:
            return Signature(
                predicates=predicates,
                functions=functions,
                constants=frozenset(constants),
                equality_allowed=bool(equality),
            )
        except SignatureError as exc:
            raise ParseError(str(exc)) from exc

    def _match_line(self, line: str):
        for regex, kind in self.compiled_patterns:
            match = regex.match(line)
            if match:
                return kind, match
        return None, None


def parse_signature(text: str) -> Signature:
    """Parse signature text."""
    return SignatureParser().parse(text)
