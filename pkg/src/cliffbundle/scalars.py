"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

A Field is either the rationals (characteristic 0) or GF(p) for a prime
p.  Scalars are immutable, always stored canonically (reduced fractions
with positive denominator; residues in [0, p)), and never mix across
fields.  No floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, ParseError

# Deterministic Miller-Rabin witnesses for all 64-bit integers.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (char == 0) or the prime field GF(char)."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or a prime, got {self.char}")

    @property
    def spec(self) -> str:
        """Serialized name: "Q" or "Fp:<p>"."""
        return "Q" if self.char == 0 else f"Fp:{self.char}"

    @classmethod
    def from_spec(cls, text: str) -> "Field":
        text = text.strip()
        if text == "Q":
            return cls(0)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ParseError(f"bad field spec {text!r}") from None
            if not is_prime(p):
                raise ParseError(f"modulus {p} is not prime")
            return cls(p)
        raise ParseError(f"bad field spec {text!r}")

    def __call__(self, value) -> "Scalar":
        return Scalar(self, value)

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, 1)

    def parse(self, text: str) -> "Scalar":
        """Parse "<int>" or "<int>/<int>" (tolerating a unicode minus)."""
        s = text.strip().replace("−", "-")
        try:
            if self.char == 0:
                return Scalar(self, Fraction(s))
            if "/" in s:
                num, den = s.split("/", 1)
                return Scalar(self, int(num)) / Scalar(self, int(den))
            return Scalar(self, int(s))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}") from None
        except ValueError:
            raise ParseError(f"bad scalar literal {text!r}") from None

    def __repr__(self):
        return f"Field({self.spec})"


class Scalar:
    """An immutable element of a Field.

    Arithmetic only combines scalars of the same field; plain ints (and,
    over the rationals, Fractions) are coerced on either side.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        p = field.char
        if p == 0:
            if not isinstance(value, Fraction):
                value = Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise TypeError("prime-field scalar needs an integer value")
                value = value.numerator
            value = value % p
        self.field = field
        self.value = value

    def _lift(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot combine {self.field.spec} and {other.field.spec} scalars")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction) and self.field.char == 0:
            return other
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, v - self.value)

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        p = self.field.char
        if p == 0:
            return Scalar(self.field, self.value / v)
        if v % p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % p)
        return Scalar(self.field, self.value * pow(v, -1, p))

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, v) / self

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        p = self.field.char
        if p == 0:
            return Scalar(self.field, self.value ** k)
        if k < 0 and self.value == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % p)
        return Scalar(self.field, pow(self.value, k, p))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, 1) / self

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.char, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.field.spec}, {self.value})"


RATIONALS = Field(0)
GF2 = Field(2)
