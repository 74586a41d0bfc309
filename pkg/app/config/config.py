import sys
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    """

    model_config = SettingsConfigDict(
        env_file=(".env", ".env.local"),
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Application settings
    APP_NAME: str = "Antimagic Lab"
    DEBUG: bool = False
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"

    # SOLVER
    SOLVER_NODE_BUDGET: int = Field(default=100_000_000, ge=1)
    # Root-branch parallelism; 1 keeps the search in-process.
    SOLVER_WORKERS: int = Field(default=1, ge=1)
    # Largest edge count the pruning-free permutation oracle accepts.
    ORACLE_MAX_EDGES: int = Field(default=9, ge=1)

    # HTTP
    # ceilings for POST /api/v1/solver/solve
    HTTP_SOLVER_NODE_BUDGET: int = Field(default=1_000_000, ge=1)
    HTTP_SOLVER_MAX_WORKERS: int = Field(default=4, ge=1)

    # ANALYSES
    CHROMATIC_MAX_VERTICES: int = Field(default=20, ge=1)

    # BOUNDS
    # chi_la_bounds runs the exact solver only up to this many edges.
    BOUNDS_SOLVER_MAX_EDGES: int = Field(default=8, ge=0)

    # THEOREM SUITE
    SUITE_WORKERS: int = Field(default=1, ge=1)


settings = Settings()

settings.LOG_LEVEL = settings.LOG_LEVEL.strip().upper()
if settings.LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
    print(
        (
            "ERROR: LOG_LEVEL must be one of "
            "'DEBUG', 'INFO', 'WARNING', 'ERROR' or 'CRITICAL'."
        ),
        file=sys.stderr,
    )
    sys.exit(1)
