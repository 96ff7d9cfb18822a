"""Exact scalar fields: the rationals and prime fields GF(p)."""

from typing import Any

from sympy import FF, QQ, isprime
from sympy.polys.domains.domain import Domain

from leavitt.core.constants import MAX_PRIME
from leavitt.core.exceptions import FieldError

Scalar = Any  # an element of ScalarField.domain


class ScalarField:
    """A thin wrapper around a sympy field domain.

    Scalars are the domain's own element type, so they stay exact and
    canonical (lowest-terms rationals, residues mod p). The wrapper adds
    parsing and printing in the formats the rest of the package uses.
    """

    def __init__(self, domain: Domain, modulus: int | None = None):
        self.domain = domain
        self.modulus = modulus
        self.zero = domain.zero
        self.one = domain.one

    @classmethod
    def rationals(cls) -> "ScalarField":
        return cls(QQ)

    @classmethod
    def prime(cls, p: int) -> "ScalarField":
        if not 2 <= p < MAX_PRIME or not isprime(p):
            raise FieldError(f"GF(p) needs a prime p < 2^31, got {p}")
        return cls(FF(p, symmetric=False), modulus=p)

    @classmethod
    def from_spec(cls, spec: str) -> "ScalarField":
        """Build a field from ``q`` or ``fp:<p>``."""
        spec = spec.strip().lower()
        if spec in ("q", "qq"):
            return cls.rationals()
        if spec.startswith("fp:"):
            try:
                return cls.prime(int(spec[3:]))
            except ValueError as e:
                raise FieldError(f"Bad prime in field spec {spec!r}") from e
        raise FieldError(f"Unknown field {spec!r}; use 'q' or 'fp:<p>'")

    @property
    def spec(self) -> str:
        return "q" if self.modulus is None else f"fp:{self.modulus}"

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalarField) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"ScalarField({self.spec})"

    # --- construction ---

    def __call__(self, value: int) -> Scalar:
        return self.domain(value)

    def fraction(self, numerator: int, denominator: int) -> Scalar:
        if denominator == 0 or (self.modulus and denominator % self.modulus == 0):
            raise FieldError(f"Denominator {denominator} is not invertible in {self.spec}")
        if self.modulus is None:
            return QQ(numerator, denominator)
        return self.domain(numerator) / self.domain(denominator)

    def residue(self, value: int, modulus: int) -> Scalar:
        if modulus != self.modulus:
            raise FieldError(f"Residue mod {modulus} does not belong to {self.spec}")
        return self.domain(value)

    def parse(self, text: str | int) -> Scalar:
        """Parse ``7``, ``-3/2`` or ``5 mod 7``."""
        if isinstance(text, int):
            return self(text)
        raw = text.strip()
        try:
            if " mod " in raw:
                value, modulus = raw.split(" mod ", 1)
                return self.residue(int(value), int(modulus))
            if "/" in raw:
                num, den = raw.split("/", 1)
                return self.fraction(int(num), int(den))
            return self(int(raw))
        except ValueError as e:
            raise FieldError(f"Malformed scalar {text!r}") from e

    # --- inspection ---

    def is_zero(self, value: Scalar) -> bool:
        return bool(value == self.zero)

    def is_one(self, value: Scalar) -> bool:
        return bool(value == self.one)

    def is_negative(self, value: Scalar) -> bool:
        return self.modulus is None and self.domain.is_negative(value)

    def to_int(self, value: Scalar) -> int:
        """Integer representative; only meaningful for residues and integral rationals."""
        if self.modulus is not None:
            return int(value) % self.modulus
        return int(self.domain.numer(value)) // int(self.domain.denom(value))

    def format_coefficient(self, value: Scalar) -> str:
        """Scalar as it appears inside an expression: ``-3/2`` or a residue ``5``."""
        if self.modulus is not None:
            return str(int(value) % self.modulus)
        num, den = int(self.domain.numer(value)), int(self.domain.denom(value))
        return str(num) if den == 1 else f"{num}/{den}"

    def format(self, value: Scalar) -> str:
        """Standalone scalar: ``-3/2`` or ``5 mod 7``."""
        text = self.format_coefficient(value)
        return f"{text} mod {self.modulus}" if self.modulus is not None else text
