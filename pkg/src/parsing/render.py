"""
Deterministic rendering of signatures, formulas and models.
Output parses back to an equal value.
"""
from itertools import product

from ..logic.syntax import Formula, Signature
from ..models.finite_model import FiniteModel


def render_signature(signature: Signature) -> str:
    lines = [f"pred {name}/{arity}" for name, arity in signature.predicates.items()]
    lines += [f"fun {name}/{arity}" for name, arity in signature.functions.items()]
    lines += [f"const {name}" for name in sorted(signature.constants)]
    lines.append("equality on" if signature.equality_allowed else "equality off")
    return "\n".join(lines) + "\n"


def render_formula(formula: Formula) -> str:
    return str(formula)


def _row(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def render_model(model: FiniteModel) -> str:
    lines = [f"universe {model.size}"]
    for name, rows in model.relations.items():
        lines.append(f"pred {name} = {{" + ", ".join(_row(r) for r in sorted(rows)) + "}")
    for name, arity in model.signature.functions.items():
        table = model.func_tables[name]
        entries = " ".join(
            f"{_row(args)}={table[args]}" for args in product(range(model.size), repeat=arity)
        )
        lines.append(f"fun {name}: {entries}")
    for name, value in sorted(model.const_vals.items()):
        lines.append(f"const {name} = {value}")
    return "\n".join(lines) + "\n"
