"""Arithmetic in the prime field GF(p).

Every space in the package is F^n over one `FieldSpec`. Scalars are kept as
their canonical residue in [0, p); the vector and matrix code in `linalg`
works on plain integer arrays reduced mod p and only uses `FieldSpec` for the
modulus and inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from graphcodes.errors import FieldMismatchError, ValidationError, ZeroDivisionFieldError

ArithOp = Literal["add", "sub", "mul"]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    divisor = 2
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise ValidationError(f"field modulus must be an integer, got {self.p!r}")
        if not is_prime(self.p):
            raise ValidationError(f"field modulus p={self.p} is not prime")

    def __call__(self, value: int) -> Scalar:
        return Scalar(self, value)

    def __str__(self) -> str:
        return f"GF({self.p})"

    def elements(self) -> list[Scalar]:
        return [Scalar(self, value) for value in range(self.p)]

    def inv_value(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionFieldError(f"0 has no inverse in {self}")
        return pow(value, -1, self.p)

    @cached_property
    def half(self) -> int:
        """2⁻¹ as a residue; only odd characteristic has one."""
        if self.p == 2:
            raise FieldMismatchError("2 is not invertible in GF(2)")
        return self.inv_value(2)


@dataclass(frozen=True)
class Scalar:
    field: FieldSpec
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % self.field.p)

    def _check(self, other: Scalar) -> None:
        if not isinstance(other, Scalar):
            raise FieldMismatchError(f"expected a Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self.field} with {other.field}")

    def __add__(self, other: Scalar) -> Scalar:
        return arith(self, other, "add")

    def __sub__(self, other: Scalar) -> Scalar:
        return arith(self, other, "sub")

    def __mul__(self, other: Scalar) -> Scalar:
        return arith(self, other, "mul")

    def __truediv__(self, other: Scalar) -> Scalar:
        return div(self, other)

    def __neg__(self) -> Scalar:
        return neg(self)

    def __pow__(self, exponent: int) -> Scalar:
        return power(self, exponent)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


def arith(a: Scalar, b: Scalar, op: ArithOp) -> Scalar:
    a._check(b)
    if op == "add":
        return Scalar(a.field, a.value + b.value)
    if op == "sub":
        return Scalar(a.field, a.value - b.value)
    if op == "mul":
        return Scalar(a.field, a.value * b.value)
    raise FieldMismatchError(f"unknown field operation {op!r}")


def neg(a: Scalar) -> Scalar:
    return Scalar(a.field, -a.value)


def inv(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.inv_value(a.value))


def div(a: Scalar, b: Scalar) -> Scalar:
    a._check(b)
    return arith(a, inv(b), "mul")


def power(a: Scalar, exponent: int) -> Scalar:
    if exponent < 0:
        return power(inv(a), -exponent)
    return Scalar(a.field, pow(a.value, exponent, a.field.p))
