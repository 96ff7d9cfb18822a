"""Extended Euclid over the active field."""

import logging

from leavitt.core.exceptions import AmbientMismatchError, ZeroPolynomialError
from leavitt.core.models.polynomial import FieldPolynomial

logger = logging.getLogger(__name__)


def poly_gcd_bezout(
    p: FieldPolynomial, q: FieldPolynomial
) -> tuple[FieldPolynomial, FieldPolynomial, FieldPolynomial]:
    """Return (d, a, b) with d = gcd(p, q) = a·p + b·q.

    d is scaled so that d(0) = 1 when d(0) ≠ 0, and is monic otherwise.
    """
    if p.field != q.field:
        raise AmbientMismatchError(f"Fields differ: {p.field.spec} vs {q.field.spec}")
    field = p.field
    one = FieldPolynomial(field, [field.one])
    zero = FieldPolynomial(field)
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    if q.is_zero():
        d, a, b = p, one, zero
    elif p.is_zero():
        d, a, b = q, zero, one
    else:
        s, t, h = p.to_poly().gcdex(q.to_poly())
        d = FieldPolynomial.from_poly(field, h)
        a = FieldPolynomial.from_poly(field, s)
        b = FieldPolynomial.from_poly(field, t)

    pivot = d.constant if not field.is_zero(d.constant) else d.leading
    factor = field.one / pivot
    d, a, b = d.scale(factor), a.scale(factor), b.scale(factor)
    logger.debug("gcd(%s, %s) = %s", p, q, d)
    return d, a, b
