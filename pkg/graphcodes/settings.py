from __future__ import annotations

from functools import lru_cache
import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

load_dotenv()


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, default))


class Settings(BaseModel):
    model_config = ConfigDict(validate_default=True)

    sim_max_dim: int = Field(default_factory=lambda: _env_int("GRAPHCODES_SIM_MAX_DIM", 2**12))
    search_max_size: int = Field(
        default_factory=lambda: _env_int("GRAPHCODES_SEARCH_MAX_SIZE", 2**24)
    )
    equiv_max_labels: int = Field(
        default_factory=lambda: _env_int("GRAPHCODES_EQUIV_MAX_LABELS", 2**16)
    )
    enum_max_size: int = Field(default_factory=lambda: _env_int("GRAPHCODES_ENUM_MAX_SIZE", 2**20))
    log_level: str = Field(default_factory=lambda: os.getenv("GRAPHCODES_LOG_LEVEL", "WARNING"))

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"unknown log level {value!r}")
        return level


@lru_cache
def get_settings() -> Settings:
    return Settings()
