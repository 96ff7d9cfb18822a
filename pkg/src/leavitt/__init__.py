"""leavitt: exact computation with Leavitt path algebras."""

__version__ = "0.1.0"
