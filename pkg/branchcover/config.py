from pydantic import BaseSettings


class Settings(BaseSettings):
    """Runtime configuration, read from the environment and an optional .env file."""

    LOG_LEVEL: str = "INFO"

    REDIS_HOST: str = "localhost"
    REDIS_PORT: int = 6379
    REDIS_DB: int = 0
    CACHE_ENABLED: bool = False
    CACHE_DURATION: int = 3600  # seconds

    EXPORT_PATH: str = "exports"

    # Guards for the braid engine
    MAX_STRANDS: int = 10
    MAX_WORD_LENGTH: int = 4096

    SCHEMA_VERSION: int = 1
    API_VERSION: str = "1.0.0"
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8000

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


settings = Settings()
