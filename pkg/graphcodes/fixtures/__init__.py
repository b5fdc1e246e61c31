from __future__ import annotations

from importlib import resources
from pathlib import Path

from graphcodes.models import CodeFile, load_code_file

FIXTURE_NAMES = (
    "fig1_graph.json",
    "stab10_stabilizer.json",
    "self_dual_MM.json",
    "fig6_gamma.json",
)


def fixture_path(name: str) -> Path:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
    return Path(str(resources.files(__name__).joinpath(name)))


def load_fixture(name: str) -> CodeFile:
    return load_code_file(fixture_path(name))
