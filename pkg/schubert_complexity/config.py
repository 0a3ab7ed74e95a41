"""
Configuration management for Schubert Complexity.

Settings come from environment variables or a local .env file and drive
logging, the oracle sweep ranges, worker count and where counterexample
reports are written.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=False)

    # Logging
    log_level: str = "INFO"

    # Parallelism (0 means one worker per CPU)
    jobs: int = 0

    # Oracle sweep ranges
    n_max_single: int = 7
    n_max_pair: int = 6
    n_max_interval: int = 5
    chain_limit: Optional[int] = None  # None checks every maximal chain

    # Symbolic expansion guard
    minor_size_limit: int = 8

    # Output
    report_dir: Path = Path("./reports")

    @field_validator("chain_limit")
    @classmethod
    def check_chain_limit(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError(f"chain_limit must be positive or unset, got {v}")
        return v


# Global settings instance
settings = Settings()


class SweepConfig(BaseModel):
    """Ranges and resources for one oracle run."""

    n_single: int = 7
    n_pair: int = 6
    n_interval: int = 5
    n_override: Optional[int] = None
    jobs: int = 1
    chain_limit: Optional[int] = None
    report_dir: Path = Path("./reports")
    write_reports: bool = False

    @field_validator("n_single", "n_pair", "n_interval", "n_override")
    @classmethod
    def check_range(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 3:
            raise ValueError(f"n_max must be at least 3, got {v}")
        return v

    def n_max(self, scale: str) -> int:
        """Largest n for a theorem of the given scale ("single", "pair" or "interval")."""
        if self.n_override is not None:
            return self.n_override
        return {"single": self.n_single, "pair": self.n_pair, "interval": self.n_interval}[scale]


def resolve_jobs(jobs: Optional[int] = None) -> int:
    value = settings.jobs if jobs is None else jobs
    return value if value > 0 else (os.cpu_count() or 1)


def get_sweep_config(
    n: Optional[int] = None, jobs: Optional[int] = None, write_reports: bool = False
) -> SweepConfig:
    """
    Build the sweep configuration from settings.

    Args:
        n: overrides n_max for every theorem
        jobs: worker count; None falls back to settings, 0 means one per CPU
        write_reports: write every result to report_dir, not just failures

    Returns:
        SweepConfig for oracle.verify
    """
    return SweepConfig(
        n_single=settings.n_max_single,
        n_pair=settings.n_max_pair,
        n_interval=settings.n_max_interval,
        n_override=n,
        jobs=resolve_jobs(jobs),
        chain_limit=settings.chain_limit,
        report_dir=settings.report_dir,
        write_reports=write_reports,
    )


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=getattr(logging, (level or settings.log_level).upper(), logging.INFO),
        format=LOG_FORMAT,
    )
