"""leavitt configuration.

Computation settings are fixed by defaults and explicit arguments only, so the
same command line always gives the same output. The environment may choose
where certificates are written and how loudly to log, nothing else.
"""

from pydantic import BaseModel, ConfigDict
from pydantic_settings import BaseSettings, SettingsConfigDict

from leavitt.core.constants import (
    DEFAULT_ADMISSIBLE_VERTEX_LIMIT,
    DEFAULT_FIELD,
    DEFAULT_MEMBER_BOUND,
    DEFAULT_VERIFY_BOUND,
)


class LeavittConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    # Scalars: "q" for the rationals, "fp:<p>" for a prime field
    field: str = DEFAULT_FIELD

    # Membership oracle
    verify_bound: int = DEFAULT_VERIFY_BOUND  # used by principal certificates
    member_bound: int = DEFAULT_MEMBER_BOUND  # default for the member command

    # Certify inputs by explicit recipes; off means oracle only
    algebraic_certificates: bool = True

    # Admissible pair enumeration is exponential in the vertex count
    admissible_vertex_limit: int = DEFAULT_ADMISSIBLE_VERTEX_LIMIT


class LeavittSettings(BaseSettings):
    """Process environment read by the CLI."""

    model_config = SettingsConfigDict(env_prefix="LEAVITT_", env_file=".env", extra="ignore")

    # Optional directory where certificates are also written
    output_dir: str | None = None

    log_level: str = "WARNING"
