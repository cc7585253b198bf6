from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "fatpoints"

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Modular interpolation oracle
    ORACLE_PRIME: int = 2**31 - 1
    ORACLE_SEED: int = 0
    ORACLE_TRIALS: int = 3
    ORACLE_MAX_MATRIX_DIM: int = 4000
    ORACLE_WORKERS: int = 1

    # (-1)-class searches
    WITNESS_MAX_DEGREE: int = 6
    ENUMERATE_MAX_SLOTS: int = 12

    # Test suite: exhaustive acceptance sweeps instead of the reduced boxes
    FULL_SWEEPS: bool = False

    model_config = SettingsConfigDict(
        case_sensitive=True,
        env_file=".env",
        env_prefix="FATPOINTS_",
        extra="ignore",
    )

settings = Settings()
