from typing import Literal
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator, model_validator

AppEnv = Literal["local", "dev", "ci", "prod"]

class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # App
    APP_NAME: str = "hetcc"
    APP_VERSION: str = "0.1.0"
    APP_ENV: AppEnv = "local"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Solver
    CHECK_PROOFS: bool = True
    SUBSINGLETON: bool = True
    TRACE: bool = False
    EMIT_PARTITION: bool = False
    CHECK_INVARIANTS: bool = False
    MAX_HCONGR_ARITY: int = 32

    # Runtime
    JOBS: int = 1
    RECURSION_LIMIT: int = 10000

    @field_validator("LOG_LEVEL")
    @classmethod
    def _normalize_level(cls, v: str) -> str:
        return (v or "WARNING").strip().upper()

    @field_validator("JOBS", "MAX_HCONGR_ARITY", "RECURSION_LIMIT")
    @classmethod
    def _positive(cls, v: int, info):
        if v <= 0:
            raise ValueError(f"{info.field_name} must be > 0")
        return v

    @model_validator(mode="after")
    def _cross_checks(self):
        if self.DEBUG:
            self.CHECK_INVARIANTS = True
        return self

settings = Settings()
