"""JSON object files: schema validation and conversion to library objects.

Every file is a JSON object with a ``kind`` field naming one of the schemas
in ``qoab/schemas``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Any, Mapping

import jsonschema

from .cone import Cone
from .fgab import GroupPresentation
from .freemonad.em import EmAlgebra
from .freemonad.setm import SetmObject
from .qab import QoGroup

KINDS = ("presentation", "cone", "qogroup", "setm", "em_algebra")


class ObjectFileError(ValueError):
    """The document is not valid JSON or does not match its schema."""


@lru_cache(maxsize=None)
def schema(kind: str) -> dict:
    text = resources.files("qoab").joinpath("schemas", f"{kind}.json").read_text()
    return json.loads(text)


def validate(data: Any) -> str:
    """Check ``data`` against the schema of its kind and return the kind."""
    if not isinstance(data, dict) or data.get("kind") not in KINDS:
        raise ObjectFileError(f"expected an object with kind in {KINDS}")
    try:
        jsonschema.validate(data, schema(data["kind"]))
    except jsonschema.ValidationError as exc:
        raise ObjectFileError(f"{data['kind']}: {exc.message}") from None
    return data["kind"]


def presentation_to_dict(P: GroupPresentation) -> dict:
    return {"ambient_rank": P.ambient_rank, "relations": [list(r) for r in P.relations]}


def presentation_from_dict(data: Mapping) -> GroupPresentation:
    n = data["ambient_rank"]
    for r in data["relations"]:
        if len(r) != n:
            raise ObjectFileError("relation length differs from ambient_rank")
    return GroupPresentation(n, data["relations"])


def _coords(P: GroupPresentation, rows) -> list:
    for r in rows:
        if len(r) != P.ambient_rank:
            raise ObjectFileError("vector length differs from ambient_rank")
    return [P.element(r) for r in rows]


def qogroup_to_dict(Q: QoGroup) -> dict:
    out = {
        "kind": "qogroup",
        "presentation": presentation_to_dict(Q.group),
        "cone": [list(g.coords) for g in Q.cone.generators],
    }
    if Q.labels is not None:
        out["labels"] = list(Q.labels)
    if Q.basis_labels is not None:
        out["basis_labels"] = list(Q.basis_labels)
    return out


def load_object(data: Any):
    """Validate and build the object described by ``data``."""
    kind = validate(data)
    if kind == "presentation":
        return presentation_from_dict(data)
    if kind == "cone":
        P = presentation_from_dict(data["presentation"])
        return Cone(P, _coords(P, data["generators"]))
    if kind == "qogroup":
        P = presentation_from_dict(data["presentation"])
        gens = _coords(P, data["cone"])
        cone = Cone(P, gens)
        labels = data.get("labels")
        if labels is not None and len(cone.generators) != len(gens):
            raise ObjectFileError("labels given for a cone with repeated generators")
        return QoGroup(P, cone, labels=labels, basis_labels=data.get("basis_labels"))
    if kind == "setm":
        return SetmObject(data["X_prime"], data["X"], data["i"])
    return EmAlgebra.from_dict(data)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ObjectFileError(f"invalid JSON: {exc}") from None
    return load_object(data)


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2)
