"""Load and dump the JSON structure files (formats in docs/formats.md)."""

from __future__ import annotations

import json
from pathlib import Path

from .comodule import Coaction
from .errors import FieldMismatch, ShapeError
from .exactlin import Field
from .grading import Grading
from .modulealg import GroupAction, ModuleStructure
from .reports import jsonable
from .structconst import FinAlgebra, FinCoalgebra, FinHopf, FiniteGroup

KINDS = {
    "algebra": FinAlgebra,
    "coalgebra": FinCoalgebra,
    "hopf": FinHopf,
    "group": FiniteGroup,
    "grading": Grading,
    "module": ModuleStructure,
    "coaction": Coaction,
    "group-action": GroupAction,
}

# checked in order when a file has no "kind"
_KEY_HINTS = [
    ("coeff", "coaction"),
    ("action", "module"),
    ("images", "group-action"),
    ("components", "grading"),
    ("antipode", "hopf"),
    ("delta", "coalgebra"),
    ("mult", "algebra"),
    ("table", "group"),
]


def infer_kind(d: dict) -> str:
    if not isinstance(d, dict):
        raise ShapeError("structure file must hold a JSON object")
    if "kind" in d:
        if d["kind"] not in KINDS:
            raise ShapeError(f"unknown kind {d['kind']!r}")
        return d["kind"]
    for key, kind in _KEY_HINTS:
        if key in d:
            return kind
    raise ShapeError("cannot tell what structure this file holds")


def file_field(d: dict) -> Field | None:
    for path in (("field",), ("algebra", "field"), ("hopf", "field")):
        x = d
        for k in path:
            x = x.get(k) if isinstance(x, dict) else None
        if x is not None:
            return Field.from_json(x)
    return None


def resolve_field(d: dict, override: Field | None) -> Field | None:
    """Field to build with: a Q file may be read over F_p; an F_p file only over the same F_p."""
    own = file_field(d)
    if override is None or own is None:
        return override or own
    if own == override or own.is_rational:
        return override
    raise FieldMismatch(f"file is over {own}, cannot read it over {override}")


def from_dict(d: dict, kind: str | None = None, field: Field | None = None):
    kind = kind or infer_kind(d)
    if kind not in KINDS:
        raise ShapeError(f"unknown kind {kind!r}")
    actual = infer_kind(d)
    if "kind" in d and actual != kind:
        raise ShapeError(f"expected a {kind} file, got {actual}")
    if kind == "group":
        return FiniteGroup.from_json(d)
    return KINDS[kind].from_json(d, resolve_field(d, field))


def load(path, kind: str | None = None, field: Field | None = None):
    with open(path) as fh:
        d = json.load(fh)
    return from_dict(d, kind, field)


def kind_of(obj) -> str:
    for k, cls in KINDS.items():
        if type(obj) is cls:
            return k
    raise TypeError(f"no file format for {type(obj).__name__}")


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def dump(obj, path) -> None:
    Path(path).write_text(dumps(obj))
