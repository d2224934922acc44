"""Base-10 scaled-decimal arithmetic for magnitudes far outside float range.

A :class:`ScaledDecimal` is a mantissa in ``[1, 10)`` (a :class:`~decimal.Decimal`
carrying at least 30 significant digits) paired with an exact integer exponent.
The representation covers everything this toolkit needs, from success
probabilities near 10^-2609 up to attempt projections near 10^69, without the
silent exponent saturation a float would suffer.

Only the arithmetic this domain needs is provided: construction from
``log10`` / ints / floats, multiplication, division, integer powers, and
``log10`` back out. This is deliberately not a general bignum library.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext

#: Working precision in significant decimal digits. The published tables carry
#: 3-4 significant figures; 36 digits makes our own rounding error irrelevant.
PRECISION = 36

_PARSE_RE = re.compile(r"^(?P<mantissa>[0-9](?:\.[0-9]+)?)e(?P<exponent>[+-]?[0-9]+)$")


@dataclass(frozen=True)
class ScaledDecimal:
    """An exact-exponent base-10 number: ``mantissa * 10**exponent``.

    Instances are immutable and safe to share between threads. The mantissa
    is always in ``[1, 10)``; the single exception is the value zero, stored
    as mantissa 0 with exponent 0.
    """

    mantissa: Decimal
    exponent: int

    def __post_init__(self):
        if self.mantissa < 0:
            raise ValueError("negative values are not representable")
        if self.mantissa == 0:
            if self.exponent != 0:
                raise ValueError("zero must carry exponent 0")
        elif not (1 <= self.mantissa < 10):
            raise ValueError(f"mantissa {self.mantissa} outside [1, 10)")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "ScaledDecimal":
        return cls(Decimal(0), 0)

    @classmethod
    def from_int(cls, value: int) -> "ScaledDecimal":
        """Exact conversion from a (possibly huge) nonnegative integer."""
        if value < 0:
            raise ValueError("negative values are not representable")
        if value == 0:
            return cls.zero()
        d = Decimal(value)
        shift = d.adjusted()  # position of the most significant digit
        with localcontext() as ctx:
            ctx.prec = PRECISION
            mantissa = +d.scaleb(-shift)
        return _normalized(mantissa, shift)

    @classmethod
    def from_float(cls, value: float) -> "ScaledDecimal":
        """Convert a nonnegative finite float (exact binary-to-decimal)."""
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        if value < 0:
            raise ValueError("negative values are not representable")
        if value == 0:
            return cls.zero()
        d = Decimal(value)
        shift = d.adjusted()
        with localcontext() as ctx:
            ctx.prec = PRECISION
            mantissa = +d.scaleb(-shift)
        return _normalized(mantissa, shift)

    @classmethod
    def parse(cls, text: str) -> "ScaledDecimal":
        """Parse the ``<mantissa>e<exponent>`` serialization."""
        if text == "0":
            return cls.zero()
        m = _PARSE_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a scaled decimal: {text!r}")
        return _normalized(Decimal(m.group("mantissa")), int(m.group("exponent")))

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other) -> "ScaledDecimal":
        other = _coerce(other)
        if self.mantissa == 0 or other.mantissa == 0:
            return ScaledDecimal.zero()
        with localcontext() as ctx:
            ctx.prec = PRECISION
            product = self.mantissa * other.mantissa
        return _normalized(product, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledDecimal":
        other = _coerce(other)
        if other.mantissa == 0:
            raise ZeroDivisionError("scaled decimal division by zero")
        if self.mantissa == 0:
            return ScaledDecimal.zero()
        with localcontext() as ctx:
            ctx.prec = PRECISION
            quotient = self.mantissa / other.mantissa
        return _normalized(quotient, self.exponent - other.exponent)

    def log10(self) -> float:
        """Base-10 logarithm as a float; the exponent part stays exact."""
        if self.mantissa == 0:
            raise ValueError("log10 of zero")
        with localcontext() as ctx:
            ctx.prec = PRECISION
            frac = self.mantissa.log10()
        return float(frac + self.exponent)

    def __float__(self) -> float:
        # Overflows to inf / underflows to 0.0 outside float range, by design.
        return float(self.mantissa.scaleb(self.exponent))

    # -- ordering (values are nonnegative by construction) ------------------

    def _key(self):
        if self.mantissa == 0:
            return (float("-inf"), Decimal(0))
        return (self.exponent, self.mantissa)

    def __lt__(self, other) -> bool:
        return self._key() < _coerce(other)._key()

    def __le__(self, other) -> bool:
        return self._key() <= _coerce(other)._key()

    def __gt__(self, other) -> bool:
        return self._key() > _coerce(other)._key()

    def __ge__(self, other) -> bool:
        return self._key() >= _coerce(other)._key()

    # -- formatting ---------------------------------------------------------

    def to_string(self, significant_digits: int = 4) -> str:
        """Serialize as ``<mantissa>e<exponent>``, e.g. ``4.404e-71``.

        The mantissa is padded to exactly ``significant_digits`` digits so
        output is byte-stable; zero serializes as ``"0"``.
        """
        if significant_digits < 1:
            raise ValueError("significant_digits must be >= 1")
        if self.mantissa == 0:
            return "0"
        with localcontext() as ctx:
            ctx.prec = PRECISION
            quantum = Decimal(1).scaleb(1 - significant_digits)
            rounded = self.mantissa.quantize(quantum)
            exponent = self.exponent
            if rounded >= 10:  # rounding can carry 9.99... up to 10
                rounded = (rounded / 10).quantize(quantum)
                exponent += 1
        return f"{rounded}e{exponent}"

    def __str__(self) -> str:
        return self.to_string()

    def __format__(self, spec: str) -> str:
        if spec == "":
            return self.to_string()
        return self.to_string(int(spec))


def _normalized(mantissa: Decimal, exponent: int) -> ScaledDecimal:
    """Renormalize a positive mantissa into [1, 10), carrying into the exponent."""
    if mantissa == 0:
        return ScaledDecimal.zero()
    shift = mantissa.adjusted()
    if shift != 0:
        with localcontext() as ctx:
            ctx.prec = PRECISION
            mantissa = mantissa.scaleb(-shift)
        exponent += shift
    return ScaledDecimal(mantissa, exponent)


def _coerce(value) -> ScaledDecimal:
    if isinstance(value, ScaledDecimal):
        return value
    if isinstance(value, int):
        return ScaledDecimal.from_int(value)
    if isinstance(value, float):
        return ScaledDecimal.from_float(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as ScaledDecimal")


def scaled_from_log10(l: float) -> ScaledDecimal:
    """Return ``10**l`` with the fractional part resolved at full precision."""
    if not math.isfinite(l):
        raise ValueError(f"non-finite log10 value {l!r}")
    exact = Decimal(l)  # float-to-Decimal conversion is exact
    whole = int(exact.to_integral_value(rounding="ROUND_FLOOR"))
    with localcontext() as ctx:
        ctx.prec = PRECISION
        mantissa = Decimal(10) ** (exact - whole)
    return _normalized(mantissa, whole)


def scaled_mul(a: ScaledDecimal, b: ScaledDecimal) -> ScaledDecimal:
    """Product with the mantissa renormalized into [1, 10)."""
    return a * b


def scaled_int_pow(base: int, exp: int) -> ScaledDecimal:
    """``base ** exp`` for integer ``base >= 1``, ``exp >= 0``; exponent exact.

    The power is taken over exact Python integers first, so the resulting
    decimal exponent is the true digit count minus one, never a float
    approximation.
    """
    if base < 1:
        raise ValueError(f"base must be >= 1, got {base}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return ScaledDecimal.from_int(base**exp)
