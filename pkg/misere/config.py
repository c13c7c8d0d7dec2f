from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="MISERE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Budgets
    max_elements: int = 4096  # largest monoid the solver will build
    max_nodes: int = 10_000_000  # positions visited by one verification
    max_seconds: float = 600.0
    presentation_bound: int = 4096
    iso_max_order: int = 512
    follower_budget: int = 5_000_000  # memo entries held by one outcome oracle

    # Heap driver
    default_heaps: int = 40
    shortcuts: bool = True
    paranoid: bool = False
    interpolation_bound: Literal["compatible", "realized"] = "compatible"

    # Period detection
    period_multiplier: int = 2
    period_move_margin: bool = False

    # Recalibration schedule
    recal_base_n: int = 2
    recal_base_k: int = 2
    recal_n_step: int = 2
    recal_n_cap: int = 6
    recal_k_cap: int = 8

    # Catalog verification
    bean_bound: int = 20
    large_bean_bound: int = 14

    # Cache
    cache_enabled: bool = True
    cache_dir: Path = Path("~/.cache/misere")

    # Observability
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    metrics_enabled: bool = True

    @field_validator(
        "max_elements",
        "max_nodes",
        "presentation_bound",
        "iso_max_order",
        "follower_budget",
        "default_heaps",
        "period_multiplier",
        "bean_bound",
        "large_bean_bound",
        mode="after",
    )
    @classmethod
    def require_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("budgets must be positive")
        return v

    @field_validator("max_seconds", mode="after")
    @classmethod
    def require_positive_seconds(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("max_seconds must be positive")
        return v

    @field_validator("cache_dir", mode="after")
    @classmethod
    def expand_cache_dir(cls, v: Path) -> Path:
        """Expand ~ so the cache location is stable across shells."""
        return v.expanduser()


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
