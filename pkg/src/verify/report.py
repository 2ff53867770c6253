"""
Machine-readable verification reports.
"""
import json
import time
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, model_validator

from ..config.logging_config import verify_logger
from ..logic.syntax import Formula
from ..models.finite_model import FiniteModel
from ..parsing.render import render_model


class Verdict(str, Enum):
    """Outcome of a bounded claim check."""
    VERIFIED = "verified"
    REFUTED = "refuted"
    EXHAUSTED = "exhausted-without-decision"

    @property
    def exit_code(self) -> int:
        return {Verdict.VERIFIED: 0, Verdict.REFUTED: 1, Verdict.EXHAUSTED: 2}[self]


# worst first
_SEVERITY = {Verdict.REFUTED: 2, Verdict.EXHAUSTED: 1, Verdict.VERIFIED: 0}


def worst(*verdicts: Verdict) -> Verdict:
    return max(verdicts, key=_SEVERITY.__getitem__, default=Verdict.VERIFIED)


class Parameters(BaseModel):
    """Bounds a verdict was reached at."""
    size_bound: Optional[int] = Field(None, description="Model size bound N")
    extension_bound: Optional[int] = Field(None, description="Extension size bound k")
    budget: Optional[int] = Field(None, description="Syntactic budget s of the sieve")


class Counterexample(BaseModel):
    """A replayable failure: the model in .mdl text and the formula in s-expressions."""
    model: str
    formula: Optional[str] = None
    witness: Optional[str] = None

    @classmethod
    def of(cls, model: FiniteModel, formula: Optional[Formula] = None,
           witness: Optional[str] = None) -> "Counterexample":
        return cls(
            model=render_model(model),
            formula=None if formula is None else str(formula),
            witness=witness,
        )


class Report(BaseModel):
    """Result of one verification run."""
    claim_id: str
    parameters: Parameters = Field(default_factory=Parameters)
    verdict: Verdict
    counterexample: Optional[Counterexample] = None
    details: Dict[str, Any] = Field(default_factory=dict)
    runtime_ms: float = 0.0

    @model_validator(mode="after")
    def _refuted_has_counterexample(self) -> "Report":
        if self.verdict is Verdict.REFUTED and self.counterexample is None:
            raise ValueError(f"refuted report {self.claim_id} needs a counterexample")
        return self

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        exclude = None if timing else {"runtime_ms"}
        return self.model_dump(mode="json", exclude=exclude)

    def to_json(self, timing: bool = False, indent: Optional[int] = 2) -> str:
        """Sorted-key JSON; byte-identical for identical inputs unless timing is on."""
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=indent, ensure_ascii=False)


def conclude(
    claim_id: str,
    verdict: Verdict,
    parameters: Parameters,
    started: float,
    counterexample: Optional[Counterexample] = None,
    details: Optional[Dict[str, Any]] = None,
) -> Report:
    """Build the report of a finished claim and log it."""
    duration_ms = (time.perf_counter() - started) * 1000
    report = Report(
        claim_id=claim_id,
        parameters=parameters,
        verdict=verdict,
        counterexample=counterexample,
        details=details or {},
        runtime_ms=duration_ms,
    )
    verify_logger.log_claim(
        claim_id=claim_id,
        verdict=verdict.value,
        parameters=parameters.model_dump(),
        duration_ms=duration_ms,
    )
    return report
