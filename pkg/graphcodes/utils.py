from __future__ import annotations

from collections.abc import Iterable


def format_vector(values: Iterable[int]) -> str:
    return ",".join(str(int(value)) for value in values)


def format_label(phase: Iterable[int], shift: Iterable[int]) -> str:
    return f"({format_vector(phase)}|{format_vector(shift)})"


def format_code_parameters(n: int, k: int, d: int | None = None) -> str:
    if d is None:
        return f"[[{n},{k}]]"
    return f"[[{n},{k},{d}]]"


def format_complex(value: complex, digits: int = 6) -> str:
    real = round(value.real, digits) + 0.0
    imag = round(value.imag, digits) + 0.0
    if imag == 0:
        return f"{real:g}"
    if real == 0:
        return f"{imag:g}j"
    sign = "+" if imag > 0 else "-"
    return f"{real:g}{sign}{abs(imag):g}j"
