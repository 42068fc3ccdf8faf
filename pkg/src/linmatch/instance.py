"""Instance files: a field, named subspaces, optional named bases, a task.

Example::

    {"field": {"p": 2, "k": 4, "modulus": [1, 1, 0, 0, 1]},
     "subspaces": {"A": [[1, 0, 0, 0], [0, 1, 1, 0]], "B": [[0, 1, 1, 0], [0, 1, 0, 0]]},
     "bases": {"A": [[1, 0, 0, 0], [0, 1, 1, 0]]},
     "task": "match"}

Subspace and basis entries are lists of coefficient vectors, constant term
first.  Subspaces are canonicalised on load; bases are kept in order and must
be independent.  ``A``/``B`` may also appear at the top level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .gf_tower import ExtensionField, FieldError, field_from_json
from .subspace import Basis, Subspace, subspace_from_json

TASKS = ("match", "automatch", "strong")


class InstanceError(ValueError):
    """Malformed or inconsistent instance file."""


@dataclass
class Instance:
    field: ExtensionField
    subspaces: dict[str, Subspace] = dc_field(default_factory=dict)
    bases: dict[str, Basis] = dc_field(default_factory=dict)
    task: str = "match"

    def basis_of(self, name: str) -> Basis:
        """The named basis, else the echelon basis of the named subspace."""
        if name in self.bases:
            return self.bases[name]
        return self.subspace(name).basis()

    def subspace(self, name: str) -> Subspace:
        try:
            return self.subspaces[name]
        except KeyError:
            raise InstanceError(f"instance has no subspace {name!r}") from None


def parse_instance(obj: dict, field: ExtensionField | None = None) -> Instance:
    if not isinstance(obj, dict):
        raise InstanceError("instance must be a JSON object")
    try:
        if field is None:
            if "field" not in obj:
                raise InstanceError("instance has no field descriptor")
            field = field_from_json(obj["field"])
        subs = dict(obj.get("subspaces", {}))
        for key in ("A", "B"):
            if key in obj:
                subs.setdefault(key, obj[key])
        subspaces = {name: subspace_from_json(field, gens) for name, gens in subs.items()}
        bases = {}
        for name, vecs in obj.get("bases", {}).items():
            elems = [field(v) for v in vecs]
            if any(len(v) != field.k for v in vecs):
                raise InstanceError(f"basis {name!r} has vectors of the wrong length")
            parent = subspaces.setdefault(name, Subspace.from_vectors(field, [e.coeffs for e in elems]))
            try:
                bases[name] = Basis(elems, parent)
            except ValueError as exc:
                raise InstanceError(f"basis {name!r}: {exc}") from None
    except (FieldError, TypeError) as exc:
        raise InstanceError(str(exc)) from exc
    task = obj.get("task", "match")
    if task not in TASKS:
        raise InstanceError(f"unknown task {task!r}; expected one of {TASKS}")
    return Instance(field, subspaces, bases, task)


def load_instance(path: str | Path, field: ExtensionField | None = None) -> Instance:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON ({exc})") from exc
    return parse_instance(obj, field)
