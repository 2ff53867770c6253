"""
Source documents: signature, formula and model files.
"""
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from ..logic.errors import ParseError


class DocumentKind(Enum):
    """Kinds of input files, keyed by extension."""
    SIGNATURE = "sig"
    FORMULA = "fml"
    MODEL = "mdl"


@dataclass(frozen=True)
class SourceDocument:
    """Raw text of an input file together with where it came from."""
    kind: DocumentKind
    text: str
    origin: str = "<inline>"


def load_document(path: Union[str, Path], kind: Optional[DocumentKind] = None) -> SourceDocument:
    """Read a UTF-8 document; the kind defaults to the file extension."""
    path = Path(path)
    if kind is None:
        try:
            kind = DocumentKind(path.suffix.lstrip("."))
        except ValueError as exc:
            raise ParseError(f"unknown document extension: {path.suffix or '(none)'}") from exc
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not valid UTF-8 (byte offset {exc.start})") from exc
    return SourceDocument(kind=kind, text=text, origin=str(path))
