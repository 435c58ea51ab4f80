import os
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Global Application Configuration.
    Loads variables from .env file or environment variables.
    """

    # --- Project Info ---
    PROJECT_NAME: str = "tribraid"
    ENVIRONMENT: str = Field(default="development", description="dev, ci, or bench")
    DEBUG: bool = False

    # --- Logging ---
    LOG_LEVEL: str = Field(default="INFO", description="Root level for the tribraid logger")
    LOG_JSON: bool = Field(default=False, description="Emit JSON Lines instead of text")

    # --- Homology Oracle ---
    # 2^c states per diagram; the default covers the 15-crossing golden tables
    MAX_CROSSINGS: int = Field(default=18, description="Refuse larger diagrams")
    KHOVANOV_WORKERS: int = Field(default=0, description="Per-j worker processes, 0 = all cores")
    PARALLEL_MIN_CROSSINGS: int = Field(
        default=11, description="Diagrams below this size are computed serially"
    )

    # --- Reports & Data ---
    REPORT_DIR: str = "./data/reports"
    GOLDEN_PATH: str | None = Field(default=None, description="Override packaged golden tables")
    DEFAULT_SEED: int = 0

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",  # Allow extra env vars without throwing errors
    )

    def worker_count(self) -> int:
        """Resolves KHOVANOV_WORKERS=0 to the number of available cores."""
        if self.KHOVANOV_WORKERS > 0:
            return self.KHOVANOV_WORKERS
        return os.cpu_count() or 1


@lru_cache
def get_settings() -> Settings:
    """
    Singleton pattern for settings.
    Cached to prevent re-reading .env from disk on every call.
    """
    return Settings()
