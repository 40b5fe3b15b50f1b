from pydantic import BaseModel, Field

from app.core.settings import settings


class RunOptions(BaseModel):
    """Per-run switches; defaults come from the environment settings."""
    check: bool = Field(default_factory=lambda: settings.CHECK_PROOFS, description="re-check proofs independently")
    subsingleton: bool = Field(default_factory=lambda: settings.SUBSINGLETON)
    trace: bool = Field(default_factory=lambda: settings.TRACE)
    emit_partition: bool = Field(default_factory=lambda: settings.EMIT_PARTITION)
    check_invariants: bool = Field(default_factory=lambda: settings.CHECK_INVARIANTS)
    jobs: int = Field(default_factory=lambda: settings.JOBS, gt=0, description="files solved in parallel")

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "example": {
                "check": True,
                "subsingleton": True,
                "trace": False,
                "emit_partition": False,
                "check_invariants": False,
                "jobs": 1,
            }
        },
    }
