"""
Module to setup the environment variables of the application
"""

from fractions import Fraction

import matplotlib
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from dronesched.models.common import PositiveRational
from dronesched.models.enums import Environment

matplotlib.use("agg")

# Load environment variables from the .env file
load_dotenv()


class Settings(BaseSettings):
    """
    Defines basic global settings that can be used throughout the application.

    Every field can be overridden with a DRONESCHED_-prefixed environment variable, e.g.
    DRONESCHED_DEFAULT_SEED=7 or DRONESCHED_QUANTUM=1/100.
    """

    model_config = SettingsConfigDict(env_file=".env", env_prefix="DRONESCHED_", arbitrary_types_allowed=True)

    environment: Environment = Environment.LOCAL
    log_level: str = "INFO"

    default_seed: int = 0
    # None selects a quarter of the smallest gap between distinct endpoint values, per instance
    epsilon: PositiveRational | None = None
    quantum: PositiveRational = Fraction(1, 1000)
    decimal_precision: int = 50
    exhaustive_limit: int = 12
    bench_seeds: int = 5
    max_overlap_attempts: int = 1000

    whitelisted_cors_urls: list[str] = ["http://localhost:3000"]
    base_path: str = ""
    sentry_dsn: str = ""
    sentry_traces_sample_rate: float = 0.2
    sentry_profiles_sample_rate: float = 0.05

    @property
    def debug_mode(self) -> bool:
        """
        Only "local" and "development" have debug_mode = True
        """
        return self.environment in (Environment.LOCAL, Environment.DEVELOPMENT)


settings = Settings()
