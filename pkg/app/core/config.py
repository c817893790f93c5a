from pydantic_settings import BaseSettings
from typing import Optional
from functools import lru_cache


class Settings(BaseSettings):
    """
    Analyzer configuration settings.
    All settings can be overridden via environment variables.
    """

    APP_NAME: str = "betamorph"
    APP_VERSION: str = "1.0.0"

    # Exact arithmetic
    # Maximal number of bisection steps on the isolating interval of beta
    PRECISION_LIMIT: int = 4096

    # Branch enumeration budget, expressed as the largest iterate n (2^n branches)
    MAX_ITERATE: int = 22

    # Markov partition search
    MARKOV_MAX_DEPTH: int = 64
    CODING_DEPTH: int = 4

    # Orbit dumps
    ORBIT_DEFAULT_DEPTH: int = 10

    # Reports
    DECIMAL_DIGITS: int = 12
    ENTROPY_WIDTH: str = "1e-10"

    # Batch mode (--beta-list)
    BATCH_WORKERS: int = 4

    # Logging Configuration
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "json"

    # Monitoring Configuration
    ENABLE_METRICS: bool = True
    METRICS_FILE: Optional[str] = None

    class Config:
        env_file = ".env"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached analyzer settings.
    This function is cached to avoid reading .env file multiple times.
    """
    return Settings()
