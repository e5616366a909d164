"""Exact coefficient fields: the rationals and prime fields.

Rational values are ``fractions.Fraction`` instances (always reduced, positive
denominator), prime-field values are plain ints in ``[0, p)``.  All arithmetic
in the package goes through a ``Field`` so the two representations never mix.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DgError, FieldMismatch, ParseError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, exact for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the two supported fields."""

    kind: str

    def characteristic(self) -> int:
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    # arithmetic on raw values
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))

    def describe(self) -> dict:
        raise NotImplementedError


class RationalField(Field):
    kind = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    def characteristic(self):
        return 0

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch("scalar from a different field")
            return x.value
        if isinstance(x, bool):
            raise DgError("bool is not a scalar")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise DgError(f"cannot coerce {type(x).__name__} into the rationals")

    def parse(self, text):
        text = text.strip()
        if "." in text or "e" in text.lower():
            raise ParseError(f"not an exact rational literal: {text!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}: {exc}") from None

    def format(self, a):
        return str(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return not a

    def describe(self):
        return {"kind": "rationals"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise DgError(f"prime field order must be prime, got {p!r}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def characteristic(self):
        return self.p

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch("scalar from a different field")
            return x.value
        if isinstance(x, bool):
            raise DgError("bool is not a scalar")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise DgError(f"cannot coerce {type(x).__name__} into GF({self.p})")

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            raise ParseError(f"fractions are not residues: {text!r}")
        try:
            return int(text, 10) % self.p
        except ValueError:
            raise ParseError(f"bad residue literal {text!r}") from None

    def format(self, a):
        return str(a % self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def describe(self):
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_description(desc: dict) -> Field:
    """Inverse of Field.describe, used by the file formats."""
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ParseError("field description must be an object with a 'kind'")
    kind = desc["kind"]
    if kind == "rationals":
        if set(desc) != {"kind"}:
            raise ParseError(f"unexpected keys in field description: {sorted(set(desc) - {'kind'})}")
        return QQ
    if kind == "prime":
        if set(desc) != {"kind", "p"}:
            raise ParseError("prime field description needs exactly 'kind' and 'p'")
        try:
            return GF(desc["p"])
        except DgError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field kind {kind!r}")


class Scalar:
    """A field element tied to its field; supports the usual operators.

    Kept immutable.  Formatting and re-parsing is bit-for-bit stable.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.coerce(value))

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    def _rhs(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._rhs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._rhs(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._rhs(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._rhs(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._rhs(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._rhs(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except DgError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self})"

    @classmethod
    def parse(cls, field: Field, text: str) -> "Scalar":
        return cls(field, field.parse(text))
