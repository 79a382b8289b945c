"""Exact rational helpers shared by the exact modules."""

from decimal import Decimal
from fractions import Fraction
from numbers import Rational


def as_fraction(x):
    """Convert ints, Fractions, Decimals and strings like ``"0.45"`` or ``"9/20"``.

    Floats are refused: a binary float is rarely the rational the caller meant,
    and every sign decision downstream is exact.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not parameters")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, (str, Decimal)):
        return Fraction(str(x).strip())
    if hasattr(x, "numerator") and hasattr(x, "denominator"):  # gmpy2.mpq
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"expected an exact rational, got {type(x).__name__} {x!r}")


def fraction_to_decimal(x, digits):
    """Decimal string of ``x`` truncated (toward zero) to ``digits`` places."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**digits
    q = scaled.numerator // scaled.denominator
    whole, frac = divmod(q, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def truncate(x, digits=4):
    """Truncate a real (float or Fraction) to ``digits`` decimals, as a string."""
    if isinstance(x, float):
        x = Fraction(x)
    return fraction_to_decimal(x, digits)


def format_fraction(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
