"""Error report written to stderr by the command line."""

from pydantic import BaseModel


class Diagnostic(BaseModel):
    severity: str = "error"
    source: str = ""
    location: str = ""
    message: str
