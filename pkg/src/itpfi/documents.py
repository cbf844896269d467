"""
JSON spec documents.

    {"kind": "powers", "lambda": 0.5}
    {"kind": "constant", "eigenvalues": [0.5, 0.25, 0.25]}
    {"kind": "periodic", "prefix": [[...]], "cycle": [[...], ...]}
    {"kind": "explicit", "factors": [[...], ...]}
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from ..actions.documents import read_json
from ..common.errors import InputError
from .models import ITPFISpec
from .series import constant_spec, explicit_spec, periodic_spec, powers_spec

LOGGER = logging.getLogger(__name__)

Scalar = Union[float, int, str]
EigenvalueList = List[Scalar]


class PowersDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: Literal["powers"]
    lam: float = Field(alias="lambda", gt=0, lt=1)

    def build(self, name: str = "") -> ITPFISpec:
        return powers_spec(self.lam)


class ConstantDocument(BaseModel):
    kind: Literal["constant"]
    eigenvalues: EigenvalueList = Field(min_length=1)

    def build(self, name: str = "") -> ITPFISpec:
        return constant_spec(self.eigenvalues, name=name)


class PeriodicDocument(BaseModel):
    kind: Literal["periodic"]
    prefix: List[EigenvalueList] = Field(default_factory=list)
    cycle: List[EigenvalueList] = Field(min_length=1)

    def build(self, name: str = "") -> ITPFISpec:
        return periodic_spec(self.prefix, self.cycle, name=name)


class ExplicitDocument(BaseModel):
    kind: Literal["explicit"]
    factors: List[EigenvalueList]

    def build(self, name: str = "") -> ITPFISpec:
        return explicit_spec(self.factors, name=name)


SpecDocument = Annotated[
    Union[PowersDocument, ConstantDocument, PeriodicDocument, ExplicitDocument],
    Field(discriminator="kind"),
]

_ADAPTER = TypeAdapter(SpecDocument)


def parse_spec_document(payload: object, source: str = "<document>", name: str = "") -> ITPFISpec:
    try:
        document = _ADAPTER.validate_python(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise InputError(f"{source}: invalid ITPFI spec at '{location}': {first.get('msg')}") from exc
    try:
        return document.build(name)
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from exc


def load_spec(path: Path) -> ITPFISpec:
    spec = parse_spec_document(read_json(path), str(path), name=Path(path).stem)
    LOGGER.info("Loaded %s spec %s from %s.", spec.kind, spec.name, path)
    return spec
