"""JSON file models for graph codes, stabilizer codes and check reports."""

from __future__ import annotations

from dataclasses import dataclass
import json
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
import pydantic

from graphcodes.errors import ValidationError
from graphcodes.field import FieldSpec, is_prime
from graphcodes.graph_code import GraphCode
from graphcodes.stabilizer import StabilizerSpace

CodeKind = Literal["graph", "stabilizer"]


def _check_entries(rows: list[list[int]], p: int, width: int, what: str) -> None:
    for index, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(f"{what} row {index} has {len(row)} entries, expected {width}")
        for value in row:
            if not 0 <= value < p:
                raise ValueError(f"{what} row {index} has entry {value} outside [0, {p})")


class _CodeFileBase(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    p: int

    @field_validator("p")
    @classmethod
    def _prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"p={value} is not prime")
        return value


class GraphCodeFile(_CodeFileBase):
    inputs: int = Field(ge=0)
    aux: int = Field(ge=0)
    outputs: int = Field(ge=0)
    gamma: list[list[int]]

    @model_validator(mode="after")
    def _shape(self) -> GraphCodeFile:
        size = self.inputs + self.aux + self.outputs
        if len(self.gamma) != size:
            raise ValueError(f"gamma has {len(self.gamma)} rows, expected {size}")
        _check_entries(self.gamma, self.p, size, "gamma")
        return self

    def to_code(self) -> GraphCode:
        size = self.inputs + self.aux + self.outputs
        gamma = _matrix(self.gamma, size)
        code = GraphCode(FieldSpec(self.p), self.inputs, self.aux, self.outputs, gamma)
        return code.ensure_valid()

    @classmethod
    def from_code(cls, code: GraphCode) -> GraphCodeFile:
        return cls(
            p=int(code.p),
            inputs=int(code.n_inputs),
            aux=int(code.n_aux),
            outputs=int(code.n_outputs),
            gamma=code.gamma.tolist(),
        )


class StabilizerFile(_CodeFileBase):
    n: int = Field(ge=0)
    generators: list[list[int]]

    @model_validator(mode="after")
    def _shape(self) -> StabilizerFile:
        _check_entries(self.generators, self.p, 2 * self.n, "generator")
        return self

    def to_code(self) -> StabilizerSpace:
        return StabilizerSpace.from_generators(
            FieldSpec(self.p), self.n, _matrix(self.generators, 2 * self.n)
        )

    @classmethod
    def from_code(cls, code: StabilizerSpace) -> StabilizerFile:
        return cls(p=int(code.p), n=int(code.n), generators=code.basis.tolist())


def _matrix(rows: list[list[int]], width: int) -> np.ndarray:
    if not rows:
        return np.zeros((0, width), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


class CheckReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    check: str
    passed: bool = Field(alias="pass")
    details: dict[str, Any] = Field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True)


@dataclass(frozen=True)
class CodeFile:
    kind: CodeKind
    payload: GraphCode | StabilizerSpace


def parse_code(data: Any) -> CodeFile:
    if not isinstance(data, dict):
        raise ValidationError("code file must contain a JSON object")
    try:
        if "gamma" in data and "generators" not in data:
            return CodeFile("graph", GraphCodeFile.model_validate(data).to_code())
        if "generators" in data and "gamma" not in data:
            return CodeFile("stabilizer", StabilizerFile.model_validate(data).to_code())
    except pydantic.ValidationError as exc:
        raise ValidationError(f"invalid code file: {exc}") from exc
    raise ValidationError('code file needs exactly one of "gamma" or "generators"')


def load_code_file(path: str | Path) -> CodeFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    return parse_code(data)


def dump_code(code: GraphCode | StabilizerSpace) -> str:
    if isinstance(code, GraphCode):
        model: BaseModel = GraphCodeFile.from_code(code)
    elif isinstance(code, StabilizerSpace):
        model = StabilizerFile.from_code(code)
    else:
        raise TypeError(f"cannot serialize {type(code).__name__}")
    return json.dumps(model.model_dump(), sort_keys=True, indent=2) + "\n"
