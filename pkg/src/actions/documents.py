"""
JSON action documents.

    {"group": {"name": "Z4"} | {"elements": [...], "table": [[...]]},
     "space": {"atoms": [...], "weights": [0.5, "1/2", ...]},
     "perm": {"<element>": [<image of atoms[0]>, ...], ...}}
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..common.config import LabConfig, default_config
from ..common.errors import InputError
from .groups import FinGroup, from_table, group_by_name
from .models import FiniteAction, FiniteProbSpace
from .operations import make_action

LOGGER = logging.getLogger(__name__)

Scalar = Union[int, float, str]


class GroupDocument(BaseModel):
    name: Optional[str] = None
    elements: Optional[List[Scalar]] = None
    table: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def _one_form(self) -> "GroupDocument":
        if self.name is None and (self.elements is None or self.table is None):
            raise ValueError("group needs either 'name' or both 'elements' and 'table'")
        return self

    def build(self) -> FinGroup:
        if self.elements is not None and self.table is not None:
            return from_table(self.name or "table group", self.elements, self.table)
        return group_by_name(self.name or "")


class SpaceDocument(BaseModel):
    atoms: List[Scalar] = Field(min_length=1)
    weights: List[Scalar]

    @field_validator("weights")
    @classmethod
    def _same_length(cls, value: List[Scalar], info) -> List[Scalar]:
        atoms = info.data.get("atoms")
        if atoms is not None and len(atoms) != len(value):
            raise ValueError(f"{len(atoms)} atoms but {len(value)} weights")
        return value


class ActionDocument(BaseModel):
    """Pydantic representation of an action document."""

    group: GroupDocument
    space: SpaceDocument
    perm: Dict[str, List[Scalar]]
    name: str = ""

    def build(self, config: LabConfig | None = None) -> FiniteAction:
        config = config or default_config()
        group = self.group.build()
        space = FiniteProbSpace.build(self.space.atoms, self.space.weights, config.tol)
        return make_action(group, space, self.perm, config, name=self.name or group.name)


def parse_action_document(payload: object, source: str = "<document>") -> ActionDocument:
    try:
        return ActionDocument.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise InputError(f"{source}: invalid action document at '{location}': {first.get('msg')}") from exc


def read_json(path: Path) -> object:
    """Load a JSON file, turning decode errors into InputError with line and column."""
    try:
        with Path(path).open("r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"{path}: file not found") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_action(path: Path, config: LabConfig | None = None) -> FiniteAction:
    document = parse_action_document(read_json(path), str(path))
    action = document.build(config)
    LOGGER.info("Loaded action %s from %s.", action.name, path)
    return action
