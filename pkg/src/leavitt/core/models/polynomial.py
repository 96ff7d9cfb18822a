"""Univariate polynomials over a ScalarField."""

from collections.abc import Iterable, Sequence

from sympy import Poly, Symbol

from leavitt.core.models.field import Scalar, ScalarField

_X = Symbol("x")


class FieldPolynomial:
    """Coefficients indexed by exponent, trailing zeros trimmed."""

    __slots__ = ("coefficients", "field")

    def __init__(self, field: ScalarField, coefficients: Iterable[Scalar] = ()):
        coefficients = [field.domain.convert(c) for c in coefficients]
        while coefficients and field.is_zero(coefficients[-1]):
            coefficients.pop()
        self.field = field
        self.coefficients: tuple[Scalar, ...] = tuple(coefficients)

    @classmethod
    def from_terms(
        cls, field: ScalarField, terms: Iterable[tuple[int, Scalar]], constant: Scalar | None = None
    ) -> "FieldPolynomial":
        """Build from (exponent, coefficient) pairs; repeated exponents add up."""
        dense: dict[int, Scalar] = {}
        if constant is not None:
            dense[0] = constant
        for exponent, coefficient in terms:
            if exponent < 0:
                raise ValueError(f"Negative exponent {exponent}")
            dense[exponent] = dense.get(exponent, field.zero) + coefficient
        size = max(dense, default=-1) + 1
        return cls(field, [dense.get(k, field.zero) for k in range(size)])

    @classmethod
    def from_poly(cls, field: ScalarField, poly: Poly) -> "FieldPolynomial":
        return cls(field, reversed(poly.rep.to_list()))

    def to_poly(self) -> Poly:
        return Poly.from_list(list(reversed(self.coefficients)), _X, domain=self.field.domain)

    # --- inspection ---

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, exponent: int) -> Scalar:
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return self.field.zero

    @property
    def constant(self) -> Scalar:
        return self.coefficient(0)

    @property
    def leading(self) -> Scalar:
        return self.coefficients[-1] if self.coefficients else self.field.zero

    def is_unit_normalized(self) -> bool:
        return self.field.is_one(self.constant)

    def terms(self) -> list[tuple[int, Scalar]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent."""
        return [(k, c) for k, c in enumerate(self.coefficients) if not self.field.is_zero(c)]

    # --- arithmetic ---

    def scale(self, factor: Scalar) -> "FieldPolynomial":
        return FieldPolynomial(self.field, [factor * c for c in self.coefficients])

    def __add__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        return FieldPolynomial.from_poly(self.field, self.to_poly() + other.to_poly())

    def __sub__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        return FieldPolynomial.from_poly(self.field, self.to_poly() - other.to_poly())

    def __mul__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        return FieldPolynomial.from_poly(self.field, self.to_poly() * other.to_poly())

    def divmod(self, other: "FieldPolynomial") -> tuple["FieldPolynomial", "FieldPolynomial"]:
        quotient, remainder = self.to_poly().div(other.to_poly())
        return (
            FieldPolynomial.from_poly(self.field, quotient),
            FieldPolynomial.from_poly(self.field, remainder),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldPolynomial):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.field.format(c) for c in self.coefficients)))

    # --- printing ---

    def to_pairs(self) -> list[tuple[int, str]]:
        """Non-constant terms as [exponent, scalar text], the generator file shape."""
        return [(k, self.field.format(c)) for k, c in self.terms() if k > 0]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in self.terms():
            monomial = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not monomial:
                parts.append(self.field.format(c))
            elif self.field.is_one(c):
                parts.append(monomial)
            else:
                parts.append(f"{self.field.format(c)}*{monomial}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FieldPolynomial({self}, {self.field.spec})"


def polynomial(field: ScalarField, coefficients: Sequence[int]) -> FieldPolynomial:
    """Shorthand: integer coefficients by increasing exponent."""
    return FieldPolynomial(field, [field(c) for c in coefficients])
